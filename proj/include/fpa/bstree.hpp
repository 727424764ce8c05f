#pragma once

// The Bass-Serre tree of a graph of finite groups, explored through balls.
// A vertex is the coset G_w p of a path p from the vertex w of the graph to
// the base vertex; the fundamental group acts on the right by p -> p g.

#include <cstddef>
#include <optional>
#include <string>
#include <unordered_map>
#include <vector>

#include "fpa/gog.hpp"

namespace fpa {

class BaseMismatch : public GogError {
 public:
  using GogError::GogError;
};

/// G_type path, with path in canonical form (see BassSerreTree::make).
struct TreeVertex {
  std::size_t type = 0;
  GroupoidPath path;

  friend bool operator==(TreeVertex const&, TreeVertex const&) = default;
};

struct TreeVertexHash {
  std::size_t operator()(TreeVertex const& v) const noexcept;
};

struct Ball {
  std::vector<TreeVertex> vertices;
  std::vector<std::size_t> depth;  // distance from vertices[0], the centre
  std::vector<std::vector<std::size_t>> adjacency;
  std::vector<std::pair<std::size_t, std::size_t>> edges;
  std::size_t radius = 0;
  /// Edge midpoints count as points (used when a map may invert edges).
  bool subdivided = false;

  std::optional<std::size_t> find(TreeVertex const& v) const;
  std::size_t size() const noexcept { return vertices.size(); }

  std::unordered_map<TreeVertex, std::size_t, TreeVertexHash> index;
};

struct OracleResult {
  std::size_t value = 0;
  std::size_t radius = 0;     // ball radius examined
  bool converged = false;     // stopping rule met before the radius cap
};

class BassSerreTree {
 public:
  BassSerreTree(GraphOfGroups graph, std::size_t base);

  GraphOfGroups const& graph() const noexcept { return gog_; }
  std::size_t base() const noexcept { return base_; }

  /// G_type path for a path from `type` to the base. Reduces the path, then
  /// normalises right to left: each g_i is replaced by the least element of
  /// alpha_{e_i}(G_e) g_i, the difference is pushed into g_{i-1}, and g_0
  /// is absorbed into G_type.
  TreeVertex make(std::size_t type, GroupoidPath const& path) const;
  TreeVertex base_vertex() const;
  /// The vertex of type w reached from the base by a fixed spanning-tree path.
  TreeVertex standard_vertex(std::size_t w) const;

  /// Equality decided by reducing p q^-1 (independent of canonical forms).
  bool same_by_reduction(TreeVertex const& u, TreeVertex const& v) const;

  std::vector<TreeVertex> neighbors(TreeVertex const& u) const;
  TreeVertex act(TreeVertex const& u, GroupoidPath const& g) const;
  std::size_t distance(TreeVertex const& u, TreeVertex const& v) const;
  std::vector<TreeVertex> geodesic(TreeVertex const& u, TreeVertex const& v) const;

  Ball ball(TreeVertex const& center, std::size_t radius, bool subdivide = false) const;
  /// Adds one more layer to `b`.
  void extend(Ball& b) const;

  std::string label(TreeVertex const& u) const;
  std::string to_dot(Ball const& b) const;

 private:
  void check_loop(GroupoidPath const& g) const;

  GraphOfGroups gog_;
  std::size_t base_;
  std::vector<GroupoidPath> spanning_;  // standard path from each vertex to the base
};

std::vector<std::size_t> fixed_set(BassSerreTree const& t, GroupoidPath const& g, Ball const& b);
std::vector<std::size_t> fixed_set_subgroup(BassSerreTree const& t,
                                            std::vector<GroupoidPath> const& gens, Ball const& b);

/// min over the ball of radius R about the base of d(u, u g).
std::size_t translation_length_oracle(BassSerreTree const& t, GroupoidPath const& g,
                                      std::size_t radius);

/// Grows the ball one layer at a time and stops once the minimum is 0 or has
/// not improved for `patience` consecutive layers.
OracleResult translation_length_oracle_adaptive(BassSerreTree const& t, GroupoidPath const& g,
                                                std::size_t max_radius = 24,
                                                std::size_t patience = 2);

}  // namespace fpa
