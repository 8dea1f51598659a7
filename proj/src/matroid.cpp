#include "basisrec/matroid.hpp"

#include <algorithm>
#include <cassert>
#include <utility>

#include "basisrec/union_find.hpp"

namespace basisrec {

namespace {

struct UniformData {
  ElementSet elements;
  int rank = 0;
};

struct PartitionData {
  std::vector<PartitionBlock> blocks;
  std::map<ElementId, int> block_of;
};

struct GraphicData {
  int vertex_count = 0;
  std::vector<GraphicEdge> edges;
  std::map<ElementId, int> edge_of;  // label -> index into edges
  bool connected = false;
};

struct DualData {
  std::vector<Matroid> inner;  // exactly one; vector avoids incomplete type
};

struct DirectSumData {
  std::vector<Matroid> parts;
};

struct OracleData {
  int rank = 0;
  BasisPredicate query;
};

}  // namespace

struct Matroid::Rep {
  Kind kind;
  ElementSet ground;
  UniformData uniform;
  PartitionData partition;
  GraphicData graphic;
  DualData dual;
  DirectSumData direct_sum;
  OracleData oracle;
};

Matroid Matroid::uniform(ElementSet elements, int rank) {
  if (rank < 0 || static_cast<std::size_t>(rank) > elements.size())
    throw InputError("uniform matroid: rank must be between 0 and |elements|");
  auto rep = std::make_shared<Rep>();
  rep->kind = Kind::Uniform;
  rep->ground = elements;
  rep->uniform = UniformData{std::move(elements), rank};
  return Matroid(std::move(rep));
}

Matroid Matroid::partition(std::vector<PartitionBlock> blocks) {
  auto rep = std::make_shared<Rep>();
  rep->kind = Kind::Partition;
  for (std::size_t b = 0; b < blocks.size(); ++b) {
    const auto& blk = blocks[b];
    if (blk.rank < 0 || static_cast<std::size_t>(blk.rank) > blk.elements.size())
      throw InputError("partition matroid: block " + std::to_string(b) +
                       " has rank outside [0, |block|]");
    for (const auto& e : blk.elements) {
      if (!rep->partition.block_of.emplace(e, static_cast<int>(b)).second)
        throw InputError("partition matroid: element " + e.str() +
                         " appears in two blocks");
      rep->ground.insert(e);
    }
  }
  rep->partition.blocks = std::move(blocks);
  return Matroid(std::move(rep));
}

Matroid Matroid::graphic(int vertex_count, std::vector<GraphicEdge> edges) {
  if (vertex_count < 1)
    throw InputError("graphic matroid: vertex count must be positive");
  auto rep = std::make_shared<Rep>();
  rep->kind = Kind::Graphic;
  rep->graphic.vertex_count = vertex_count;
  for (std::size_t i = 0; i < edges.size(); ++i) {
    const auto& e = edges[i];
    if (e.u < 0 || e.u >= vertex_count || e.v < 0 || e.v >= vertex_count)
      throw InputError("graphic matroid: edge " + e.label.str() +
                       " has an endpoint outside [0, vertices)");
    if (!rep->graphic.edge_of.emplace(e.label, static_cast<int>(i)).second)
      throw InputError("graphic matroid: duplicate edge label " + e.label.str());
    rep->ground.insert(e.label);
  }
  UnionFind uf(static_cast<std::size_t>(vertex_count));
  for (const auto& e : edges) uf.merge(e.u, e.v);
  rep->graphic.connected = uf.count() == 1;
  rep->graphic.edges = std::move(edges);
  return Matroid(std::move(rep));
}

Matroid Matroid::dual(Matroid inner) {
  auto rep = std::make_shared<Rep>();
  rep->kind = Kind::Dual;
  rep->ground = inner.ground();
  rep->dual.inner.push_back(std::move(inner));
  return Matroid(std::move(rep));
}

Matroid Matroid::direct_sum(std::vector<Matroid> parts) {
  auto rep = std::make_shared<Rep>();
  rep->kind = Kind::DirectSum;
  for (const auto& p : parts) {
    for (const auto& e : p.ground()) {
      if (!rep->ground.insert(e).second)
        throw InputError("direct sum: element " + e.str() +
                         " appears in two parts");
    }
  }
  rep->direct_sum.parts = std::move(parts);
  return Matroid(std::move(rep));
}

Matroid Matroid::oracle(ElementSet ground, int rank, BasisPredicate query) {
  if (rank < 0 || static_cast<std::size_t>(rank) > ground.size())
    throw InputError("oracle matroid: rank must be between 0 and |ground|");
  if (!query) throw InputError("oracle matroid: missing query predicate");
  auto rep = std::make_shared<Rep>();
  rep->kind = Kind::Oracle;
  rep->ground = std::move(ground);
  rep->oracle = OracleData{rank, std::move(query)};
  return Matroid(std::move(rep));
}

Matroid::Kind Matroid::kind() const { return rep_->kind; }
const ElementSet& Matroid::ground() const { return rep_->ground; }

int Matroid::rank() const {
  switch (rep_->kind) {
    case Kind::Uniform:
      return rep_->uniform.rank;
    case Kind::Partition: {
      int r = 0;
      for (const auto& b : rep_->partition.blocks) r += b.rank;
      return r;
    }
    case Kind::Graphic:
      if (!rep_->graphic.connected)
        throw InputError("graphic matroid has no basis: graph is disconnected");
      return rep_->graphic.vertex_count - 1;
    case Kind::Dual:
      return static_cast<int>(rep_->ground.size()) - rep_->dual.inner[0].rank();
    case Kind::DirectSum: {
      int r = 0;
      for (const auto& p : rep_->direct_sum.parts) r += p.rank();
      return r;
    }
    case Kind::Oracle:
      return rep_->oracle.rank;
  }
  return 0;
}

bool Matroid::is_basis(const ElementSet& X) const {
  for (const auto& e : X)
    if (!contains(rep_->ground, e))
      throw InputError("is_basis: element " + e.str() + " is not in the ground set");

  switch (rep_->kind) {
    case Kind::Uniform:
      return X.size() == static_cast<std::size_t>(rep_->uniform.rank);

    case Kind::Partition: {
      const auto& blocks = rep_->partition.blocks;
      std::vector<int> count(blocks.size(), 0);
      for (const auto& e : X) ++count[rep_->partition.block_of.at(e)];
      for (std::size_t b = 0; b < blocks.size(); ++b)
        if (count[b] != blocks[b].rank) return false;
      return true;
    }

    case Kind::Graphic: {
      const auto& g = rep_->graphic;
      if (X.size() != static_cast<std::size_t>(g.vertex_count) - 1) return false;
      UnionFind uf(static_cast<std::size_t>(g.vertex_count));
      for (const auto& label : X) {
        const auto& e = g.edges[g.edge_of.at(label)];
        if (!uf.merge(e.u, e.v)) return false;  // cycle (or self-loop)
      }
      return true;  // acyclic with V-1 edges spans
    }

    case Kind::Dual:
      return rep_->dual.inner[0].is_basis(set_difference(rep_->ground, X));

    case Kind::DirectSum: {
      for (const auto& p : rep_->direct_sum.parts)
        if (!p.is_basis(set_intersection(X, p.ground()))) return false;
      // every X element lies in some part (X is within the summed ground)
      std::size_t covered = 0;
      for (const auto& p : rep_->direct_sum.parts)
        covered += set_intersection(X, p.ground()).size();
      return covered == X.size();
    }

    case Kind::Oracle:
      return rep_->oracle.query(X);
  }
  return false;
}

ElementSet Matroid::canonical_basis() const {
  switch (rep_->kind) {
    case Kind::Uniform: {
      ElementSet r;
      for (const auto& e : rep_->uniform.elements) {
        if (static_cast<int>(r.size()) == rep_->uniform.rank) break;
        r.insert(e);
      }
      return r;
    }
    case Kind::Partition: {
      ElementSet r;
      for (const auto& b : rep_->partition.blocks) {
        int taken = 0;
        for (const auto& e : b.elements) {
          if (taken == b.rank) break;
          r.insert(e);
          ++taken;
        }
      }
      return r;
    }
    case Kind::Graphic: {
      const auto& g = rep_->graphic;
      if (!g.connected)
        throw InputError("graphic matroid has no basis: graph is disconnected");
      // greedy over label order: the lexicographically least spanning tree
      ElementSet r;
      UnionFind uf(static_cast<std::size_t>(g.vertex_count));
      for (const auto& label : rep_->ground) {
        const auto& e = g.edges[g.edge_of.at(label)];
        if (uf.merge(e.u, e.v)) r.insert(label);
      }
      return r;
    }
    case Kind::Dual:
      return set_difference(rep_->ground, rep_->dual.inner[0].canonical_basis());
    case Kind::DirectSum: {
      ElementSet r;
      for (const auto& p : rep_->direct_sum.parts) {
        ElementSet part = p.canonical_basis();
        r.insert(part.begin(), part.end());
      }
      return r;
    }
    case Kind::Oracle:
      throw InputError(
          "canonical basis is unavailable for an oracle-backed matroid; "
          "supply bases explicitly");
  }
  return {};
}

ElementSet Matroid::exchange_candidates(const ElementSet& B,
                                        const ElementId& x) const {
  if (!contains(B, x))
    throw InputError("exchange_candidates: " + x.str() + " is not in the basis");
  if (!is_basis(B))
    throw InputError("exchange_candidates: the given set is not a basis");

  switch (rep_->kind) {
    case Kind::Uniform:
      return set_difference(rep_->ground, B);

    case Kind::Partition: {
      const auto& blk =
          rep_->partition.blocks[rep_->partition.block_of.at(x)];
      return set_difference(blk.elements, B);
    }

    case Kind::Graphic: {
      // Removing x splits the tree in two; candidates are the non-tree
      // edges that reconnect the sides.
      const auto& g = rep_->graphic;
      UnionFind uf(static_cast<std::size_t>(g.vertex_count));
      for (const auto& label : B) {
        if (label == x) continue;
        const auto& e = g.edges[g.edge_of.at(label)];
        uf.merge(e.u, e.v);
      }
      ElementSet r;
      for (const auto& label : rep_->ground) {
        if (contains(B, label)) continue;
        const auto& e = g.edges[g.edge_of.at(label)];
        if (!uf.connected(e.u, e.v)) r.insert(label);
      }
      return r;
    }

    case Kind::Dual: {
      // B - x + y is a dual basis iff complement - y + x is an inner basis.
      const Matroid& inner = rep_->dual.inner[0];
      ElementSet comp = set_difference(rep_->ground, B);
      ElementSet r;
      for (const auto& y : comp) {
        ElementSet probe = comp;
        probe.erase(y);
        probe.insert(x);
        if (inner.is_basis(probe)) r.insert(y);
      }
      return r;
    }

    case Kind::DirectSum: {
      for (const auto& p : rep_->direct_sum.parts)
        if (contains(p.ground(), x))
          return p.exchange_candidates(set_intersection(B, p.ground()), x);
      return {};
    }

    case Kind::Oracle:
      return exchange_candidates_probed(B, x);
  }
  return {};
}

ElementSet Matroid::exchange_candidates_probed(const ElementSet& B,
                                               const ElementId& x) const {
  if (!contains(B, x))
    throw InputError("exchange_candidates: " + x.str() + " is not in the basis");
  ElementSet base = B;
  base.erase(x);
  ElementSet r;
  for (const auto& y : rep_->ground) {
    if (contains(B, y)) continue;
    base.insert(y);
    if (is_basis(base)) r.insert(y);
    base.erase(y);
  }
  return r;
}

int Matroid::uniform_rank() const {
  if (rep_->kind != Kind::Uniform) throw std::logic_error("not a uniform matroid");
  return rep_->uniform.rank;
}

const std::vector<PartitionBlock>& Matroid::partition_blocks() const {
  if (rep_->kind != Kind::Partition)
    throw std::logic_error("not a partition matroid");
  return rep_->partition.blocks;
}

int Matroid::graphic_vertex_count() const {
  if (rep_->kind != Kind::Graphic) throw std::logic_error("not a graphic matroid");
  return rep_->graphic.vertex_count;
}

const std::vector<GraphicEdge>& Matroid::graphic_edges() const {
  if (rep_->kind != Kind::Graphic) throw std::logic_error("not a graphic matroid");
  return rep_->graphic.edges;
}

const Matroid& Matroid::dual_inner() const {
  if (rep_->kind != Kind::Dual) throw std::logic_error("not a dual matroid");
  return rep_->dual.inner[0];
}

const std::vector<Matroid>& Matroid::direct_sum_parts() const {
  if (rep_->kind != Kind::DirectSum) throw std::logic_error("not a direct sum");
  return rep_->direct_sum.parts;
}

int Matroid::oracle_rank() const {
  if (rep_->kind != Kind::Oracle) throw std::logic_error("not an oracle matroid");
  return rep_->oracle.rank;
}

}  // namespace basisrec
