#pragma once

#include <vector>

#include "basisrec/element.hpp"
#include "basisrec/matroid.hpp"

namespace basisrec {

// One basis per matroid. Feasible when the bases are pairwise disjoint;
// ground sets themselves may overlap.
struct BasisSequence {
  std::vector<ElementSet> bases;

  friend bool operator==(const BasisSequence& a, const BasisSequence& b) {
    return a.bases == b.bases;
  }
  friend bool operator!=(const BasisSequence& a, const BasisSequence& b) {
    return !(a == b);
  }
};

// Throws InputError naming the violated invariant (which index is not a
// basis, or which pair of bases overlaps on which element). `label` names
// the sequence in diagnostics ("source", "target", ...).
void validate_feasible(const std::vector<Matroid>& matroids,
                       const BasisSequence& seq, const std::string& label);

bool is_feasible(const std::vector<Matroid>& matroids, const BasisSequence& seq);

// Union of all bases.
ElementSet basis_union(const BasisSequence& seq);

// Union of all ground sets.
ElementSet ground_union(const std::vector<Matroid>& matroids);

}  // namespace basisrec
