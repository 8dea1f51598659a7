#pragma once

#include <functional>
#include <map>
#include <memory>
#include <string>
#include <vector>

#include "basisrec/element.hpp"
#include "basisrec/errors.hpp"

namespace basisrec {

struct PartitionBlock {
  ElementSet elements;
  int rank = 0;
};

struct GraphicEdge {
  int u = 0;
  int v = 0;
  ElementId label;
};

using BasisPredicate = std::function<bool(const ElementSet&)>;

// Immutable matroid handle. A Matroid answers basis queries for one of the
// concrete families below, or delegates to a user-supplied predicate. Copies
// share the underlying representation; all queries are const and safe to run
// concurrently.
class Matroid {
 public:
  enum class Kind { Uniform, Partition, Graphic, Dual, DirectSum, Oracle };

  // Rank-r uniform matroid: bases are all size-r subsets.
  static Matroid uniform(ElementSet elements, int rank);
  // Direct sum of per-block uniform matroids; blocks must be disjoint.
  static Matroid partition(std::vector<PartitionBlock> blocks);
  // Matroid of spanning trees of a multigraph. Self-loops and parallel
  // edges are accepted; a self-loop is never a basis member.
  static Matroid graphic(int vertex_count, std::vector<GraphicEdge> edges);
  // Dual: bases are complements of the inner matroid's bases.
  static Matroid dual(Matroid inner);
  // Direct sum; part ground sets must be pairwise disjoint.
  static Matroid direct_sum(std::vector<Matroid> parts);
  // Black-box basis oracle. Rank and ground set are declared explicitly
  // because neither can be recovered from the predicate in few probes.
  // The predicate must be pure; it may be called from several threads.
  static Matroid oracle(ElementSet ground, int rank, BasisPredicate query);

  Kind kind() const;
  const ElementSet& ground() const;

  // Number of elements in every basis. Throws InputError when the matroid
  // has no basis at all (graphic matroid of a disconnected graph).
  int rank() const;

  // Basis oracle. Throws InputError if X contains a non-ground element.
  bool is_basis(const ElementSet& X) const;

  // Deterministic basis: greedy over the ElementId order (per block for
  // partition, label-greedy spanning tree for graphic, complement of the
  // inner canonical basis for dual). Unavailable for oracle-backed
  // matroids, whose bases must be supplied by the caller.
  ElementSet canonical_basis() const;

  // All y outside B such that B - x + y is a basis. Uses a per-family
  // closed form where one exists, falling back to oracle probes.
  // Requires is_basis(B) and x in B.
  ElementSet exchange_candidates(const ElementSet& B, const ElementId& x) const;

  // Same result as exchange_candidates, computed purely by probing
  // is_basis on every y outside B. Reference route for testing.
  ElementSet exchange_candidates_probed(const ElementSet& B,
                                        const ElementId& x) const;

  // Serialization accessors; each throws std::logic_error on kind mismatch.
  int uniform_rank() const;
  const std::vector<PartitionBlock>& partition_blocks() const;
  int graphic_vertex_count() const;
  const std::vector<GraphicEdge>& graphic_edges() const;
  const Matroid& dual_inner() const;
  const std::vector<Matroid>& direct_sum_parts() const;
  int oracle_rank() const;

 private:
  struct Rep;
  explicit Matroid(std::shared_ptr<const Rep> rep) : rep_(std::move(rep)) {}
  std::shared_ptr<const Rep> rep_;
};

}  // namespace basisrec
