#include "basisrec/basis_sequence.hpp"

#include <string>

#include "basisrec/errors.hpp"

namespace basisrec {

void validate_feasible(const std::vector<Matroid>& matroids,
                       const BasisSequence& seq, const std::string& label) {
  if (seq.bases.size() != matroids.size())
    throw InputError(label + ": expected " + std::to_string(matroids.size()) +
                     " bases, got " + std::to_string(seq.bases.size()));
  for (std::size_t i = 0; i < matroids.size(); ++i) {
    for (const auto& e : seq.bases[i])
      if (!contains(matroids[i].ground(), e))
        throw InputError(label + ": basis " + std::to_string(i) +
                         " contains " + e.str() +
                         ", which is outside the matroid's ground set");
    if (!matroids[i].is_basis(seq.bases[i]))
      throw InputError(label + ": set " + std::to_string(i) +
                       " is not a basis of matroid " + std::to_string(i));
  }
  for (std::size_t i = 0; i < seq.bases.size(); ++i)
    for (std::size_t j = i + 1; j < seq.bases.size(); ++j)
      for (const auto& e : seq.bases[i])
        if (contains(seq.bases[j], e))
          throw InputError(label + ": bases " + std::to_string(i) + " and " +
                           std::to_string(j) + " share element " + e.str());
}

bool is_feasible(const std::vector<Matroid>& matroids, const BasisSequence& seq) {
  try {
    validate_feasible(matroids, seq, "sequence");
    return true;
  } catch (const InputError&) {
    return false;
  }
}

ElementSet basis_union(const BasisSequence& seq) {
  ElementSet r;
  for (const auto& b : seq.bases) r.insert(b.begin(), b.end());
  return r;
}

ElementSet ground_union(const std::vector<Matroid>& matroids) {
  ElementSet r;
  for (const auto& m : matroids) {
    const auto& g = m.ground();
    r.insert(g.begin(), g.end());
  }
  return r;
}

}  // namespace basisrec
