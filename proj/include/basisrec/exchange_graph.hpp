#pragma once

#include <map>
#include <set>
#include <string>
#include <utility>
#include <vector>

#include "basisrec/basis_sequence.hpp"
#include "basisrec/element.hpp"
#include "basisrec/matroid.hpp"

namespace basisrec {

// Arc of an exchangeability graph: tail is in basis `matroid_index`, head
// is outside it, and swapping tail for head keeps that basis a basis.
struct ExchangeArc {
  ElementId tail;
  ElementId head;
  int matroid_index = 0;

  friend bool operator==(const ExchangeArc& a, const ExchangeArc& b) {
    return a.matroid_index == b.matroid_index && a.tail == b.tail &&
           a.head == b.head;
  }
  friend bool operator<(const ExchangeArc& a, const ExchangeArc& b) {
    if (a.matroid_index != b.matroid_index)
      return a.matroid_index < b.matroid_index;
    if (a.tail != b.tail) return a.tail < b.tail;
    return a.head < b.head;
  }
};

// How exchange arcs are enumerated.
//   ClosedForm  - per-family closed forms where available (default).
//   Probe       - literal basis-oracle probes for every (tail, head) pair;
//                 the serial reference the other modes are tested against.
//   ProbeParallel - same probes, inner loop parallelized with OpenMP.
// All modes produce identical arc lists.
enum class ArcEnumMode { ClosedForm, Probe, ProbeParallel };

// Union of the per-matroid exchangeability graphs, frozen against the
// basis sequence it was built from.
class UnionExchangeGraph {
 public:
  UnionExchangeGraph(std::vector<ExchangeArc> arcs, BasisSequence snapshot,
                     ElementSet vertices);

  const std::vector<ExchangeArc>& arcs() const { return arcs_; }
  const BasisSequence& snapshot() const { return snapshot_; }
  const ElementSet& vertices() const { return vertices_; }
  const ElementSet& basis_union() const { return basis_union_; }
  const ElementSet& free_vertices() const { return free_vertices_; }

  // Index of the basis containing e, or -1 when e is free.
  int owner(const ElementId& e) const;

  bool has_arc(int matroid_index, const ElementId& tail,
               const ElementId& head) const;

  // Arc indices, ordered by (matroid_index, tail, head).
  const std::vector<int>& out_arcs(const ElementId& v) const;
  const std::vector<int>& in_arcs(const ElementId& v) const;

 private:
  std::vector<ExchangeArc> arcs_;
  BasisSequence snapshot_;
  ElementSet vertices_;
  ElementSet basis_union_;
  ElementSet free_vertices_;
  std::map<ElementId, int> owner_;
  std::vector<std::set<std::pair<ElementId, ElementId>>> pair_index_;
  std::map<ElementId, std::vector<int>> out_;
  std::map<ElementId, std::vector<int>> in_;
  std::vector<int> no_arcs_;
};

// All arcs of D(M, B), tagged with `matroid_index`, sorted by (tail, head).
// Requires is_basis(B).
std::vector<ExchangeArc> build_single(const Matroid& matroid,
                                      const ElementSet& B,
                                      int matroid_index = 0,
                                      ArcEnumMode mode = ArcEnumMode::ClosedForm);

// Union exchangeability graph of the whole sequence. Requires `seq`
// feasible; the error names the violated invariant.
UnionExchangeGraph build_union(const std::vector<Matroid>& matroids,
                               const BasisSequence& seq,
                               ArcEnumMode mode = ArcEnumMode::ClosedForm);

// Vertices from which some target is reachable along directed paths,
// including the targets themselves. Reverse BFS, O(V + A).
ElementSet coreachable(const UnionExchangeGraph& graph,
                       const ElementSet& targets);

// Coloops of the matroid union: basis elements that cannot reach any free
// vertex. The result depends only on the matroids, not on which feasible
// sequence was supplied.
ElementSet coloops(const std::vector<Matroid>& matroids,
                   const BasisSequence& seq,
                   ArcEnumMode mode = ArcEnumMode::ClosedForm);

// Same, reusing an already-built graph.
ElementSet coloops_of(const UnionExchangeGraph& graph);

// Graphviz rendering, arcs colored by matroid index.
std::string to_dot(const UnionExchangeGraph& graph);

}  // namespace basisrec
