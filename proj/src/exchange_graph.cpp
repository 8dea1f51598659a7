#include "basisrec/exchange_graph.hpp"

#include <algorithm>
#include <deque>
#include <sstream>

#ifdef _OPENMP
#include <omp.h>
#endif

#include "basisrec/errors.hpp"

namespace basisrec {

UnionExchangeGraph::UnionExchangeGraph(std::vector<ExchangeArc> arcs,
                                       BasisSequence snapshot,
                                       ElementSet vertices)
    : arcs_(std::move(arcs)),
      snapshot_(std::move(snapshot)),
      vertices_(std::move(vertices)) {
  std::sort(arcs_.begin(), arcs_.end());
  basis_union_ = basisrec::basis_union(snapshot_);
  free_vertices_ = set_difference(vertices_, basis_union_);
  for (std::size_t i = 0; i < snapshot_.bases.size(); ++i)
    for (const auto& e : snapshot_.bases[i]) owner_[e] = static_cast<int>(i);
  pair_index_.resize(snapshot_.bases.size());
  for (std::size_t a = 0; a < arcs_.size(); ++a) {
    const auto& arc = arcs_[a];
    pair_index_[arc.matroid_index].insert({arc.tail, arc.head});
    out_[arc.tail].push_back(static_cast<int>(a));
    in_[arc.head].push_back(static_cast<int>(a));
  }
}

int UnionExchangeGraph::owner(const ElementId& e) const {
  auto it = owner_.find(e);
  return it == owner_.end() ? -1 : it->second;
}

bool UnionExchangeGraph::has_arc(int matroid_index, const ElementId& tail,
                                 const ElementId& head) const {
  if (matroid_index < 0 ||
      static_cast<std::size_t>(matroid_index) >= pair_index_.size())
    return false;
  return pair_index_[matroid_index].count({tail, head}) > 0;
}

const std::vector<int>& UnionExchangeGraph::out_arcs(const ElementId& v) const {
  auto it = out_.find(v);
  return it == out_.end() ? no_arcs_ : it->second;
}

const std::vector<int>& UnionExchangeGraph::in_arcs(const ElementId& v) const {
  auto it = in_.find(v);
  return it == in_.end() ? no_arcs_ : it->second;
}

namespace {

// Oracle-probe enumeration. Each basis element's candidate set is an
// independent unit of work, so the loop parallelizes directly; results are
// stitched together in basis order to keep the output identical to the
// serial run.
std::vector<ExchangeArc> build_probed(const Matroid& matroid,
                                      const ElementSet& B, int matroid_index,
                                      bool parallel) {
  std::vector<ElementId> tails(B.begin(), B.end());
  std::vector<ElementSet> candidates(tails.size());

  if (parallel) {
#ifdef _OPENMP
#pragma omp parallel for schedule(dynamic)
#endif
    for (std::ptrdiff_t t = 0; t < static_cast<std::ptrdiff_t>(tails.size());
         ++t)
      candidates[t] = matroid.exchange_candidates_probed(B, tails[t]);
  } else {
    for (std::size_t t = 0; t < tails.size(); ++t)
      candidates[t] = matroid.exchange_candidates_probed(B, tails[t]);
  }

  std::vector<ExchangeArc> arcs;
  for (std::size_t t = 0; t < tails.size(); ++t)
    for (const auto& y : candidates[t])
      arcs.push_back(ExchangeArc{tails[t], y, matroid_index});
  return arcs;
}

}  // namespace

std::vector<ExchangeArc> build_single(const Matroid& matroid,
                                      const ElementSet& B, int matroid_index,
                                      ArcEnumMode mode) {
  if (!matroid.is_basis(B))
    throw InputError("build_single: the given set is not a basis");

  if (mode != ArcEnumMode::ClosedForm)
    return build_probed(matroid, B, matroid_index,
                        mode == ArcEnumMode::ProbeParallel);

  std::vector<ExchangeArc> arcs;
  for (const auto& x : B)
    for (const auto& y : matroid.exchange_candidates(B, x))
      arcs.push_back(ExchangeArc{x, y, matroid_index});
  return arcs;
}

UnionExchangeGraph build_union(const std::vector<Matroid>& matroids,
                               const BasisSequence& seq, ArcEnumMode mode) {
  validate_feasible(matroids, seq, "basis sequence");
  std::vector<ExchangeArc> arcs;
  for (std::size_t i = 0; i < matroids.size(); ++i) {
    auto part = build_single(matroids[i], seq.bases[i], static_cast<int>(i), mode);
    arcs.insert(arcs.end(), part.begin(), part.end());
  }
  return UnionExchangeGraph(std::move(arcs), seq, ground_union(matroids));
}

ElementSet coreachable(const UnionExchangeGraph& graph,
                       const ElementSet& targets) {
  for (const auto& t : targets)
    if (!contains(graph.vertices(), t))
      throw InputError("coreachable: target " + t.str() + " is not a vertex");

  ElementSet seen = targets;
  std::deque<ElementId> queue(targets.begin(), targets.end());
  while (!queue.empty()) {
    ElementId v = queue.front();
    queue.pop_front();
    for (int a : graph.in_arcs(v)) {
      const ElementId& u = graph.arcs()[a].tail;
      if (seen.insert(u).second) queue.push_back(u);
    }
  }
  return seen;
}

ElementSet coloops_of(const UnionExchangeGraph& graph) {
  return set_difference(graph.basis_union(),
                        coreachable(graph, graph.free_vertices()));
}

ElementSet coloops(const std::vector<Matroid>& matroids,
                   const BasisSequence& seq, ArcEnumMode mode) {
  return coloops_of(build_union(matroids, seq, mode));
}

std::string to_dot(const UnionExchangeGraph& graph) {
  static const char* kPalette[] = {"blue",   "red",  "forestgreen", "orange",
                                   "purple", "brown", "cadetblue",  "magenta"};
  constexpr int kPaletteSize = 8;
  std::ostringstream os;
  os << "digraph exchange {\n";
  for (const auto& v : graph.vertices()) {
    os << "  \"" << v.str() << "\"";
    if (contains(graph.free_vertices(), v)) os << " [style=dashed]";
    os << ";\n";
  }
  for (const auto& arc : graph.arcs()) {
    os << "  \"" << arc.tail.str() << "\" -> \"" << arc.head.str()
       << "\" [color=" << kPalette[arc.matroid_index % kPaletteSize]
       << ", label=\"" << arc.matroid_index << "\"];\n";
  }
  os << "}\n";
  return os.str();
}

}  // namespace basisrec
