#pragma once

// Graphs of finite groups, paths in the fundamental groupoid, reduction,
// cyclic reduction and translation length.

#include <cstddef>
#include <optional>
#include <stdexcept>
#include <string>
#include <vector>

#include <json.hpp>

#include "fpa/group.hpp"
#include "fpa/word.hpp"

namespace fpa {

class GogError : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

class ShapeMismatch : public GogError {
 public:
  using GogError::GogError;
};

class InvalidPath : public GogError {
 public:
  using GogError::GogError;
};

/// Oriented edge. `alpha` maps the edge group into the group of `to`.
struct GogEdge {
  std::size_t from = 0;
  std::size_t to = 0;
  std::size_t rev = 0;
  GroupPtr group;
  GroupMap alpha;
};

/// g_0 e_1 g_1 ... e_n g_n; elements.size() == edges.size() + 1 and
/// elements[i] lies in the group of the i-th vertex visited.
struct GroupoidPath {
  std::size_t start = 0;
  std::vector<Element> elements{0};
  std::vector<std::size_t> edges;

  std::size_t length() const noexcept { return edges.size(); }
  friend bool operator==(GroupoidPath const&, GroupoidPath const&) = default;
};

/// A loop conjugated into cyclically reduced form: loop = conjugator^-1 core conjugator,
/// where conjugator runs from core's base to the loop's base.
struct LoopReduction {
  GroupoidPath core;
  GroupoidPath conjugator;
};

class GraphOfGroups {
 public:
  GraphOfGroups(std::vector<GroupPtr> vertices, std::vector<GogEdge> edges);

  std::size_t vertex_count() const noexcept { return vertices_.size(); }
  std::size_t edge_count() const noexcept { return edges_.size(); }
  GroupPtr const& vertex_group(std::size_t v) const { return vertices_.at(v); }
  GogEdge const& edge(std::size_t e) const { return edges_.at(e); }
  std::vector<std::size_t> const& incoming(std::size_t v) const { return incoming_.at(v); }

  /// h lies in alpha_e(G_e).
  bool in_image(std::size_t e, Element h) const { return preimage_[e][h].has_value(); }
  /// alpha_rev(e)(alpha_e^-1(h)) for h in the image of alpha_e.
  Element transfer(std::size_t e, Element h) const;
  /// Right coset alpha_e(G_e) h: returns (y, rep) with h = y * rep, y in the
  /// image and rep the least element of the coset.
  std::pair<Element, Element> coset_split(std::size_t e, Element h) const;
  /// Least representatives of the right cosets of alpha_e(G_e) in G_to(e).
  std::vector<Element> const& coset_reps(std::size_t e) const { return reps_.at(e); }

  std::size_t end(GroupoidPath const& p) const;
  void check(GroupoidPath const& p) const;
  GroupoidPath trivial(std::size_t v, Element g = 0) const;
  GroupoidPath concat(GroupoidPath const& p, GroupoidPath const& q) const;
  GroupoidPath inverse(GroupoidPath const& p) const;
  /// Removes every e h rev(e) with h in alpha_e(G_e).
  GroupoidPath reduce(GroupoidPath const& p) const;
  bool is_reduced(GroupoidPath const& p) const;
  /// Same element of the fundamental groupoid.
  bool equivalent(GroupoidPath const& p, GroupoidPath const& q) const;

  bool is_cyclically_reduced(GroupoidPath const& loop) const;
  LoopReduction cyclically_reduce(GroupoidPath const& loop) const;
  std::size_t translation_length(GroupoidPath const& loop) const;

  std::string format(GroupoidPath const& p) const;

  nlohmann::json to_json() const;
  static GraphOfGroups from_json(nlohmann::json const& j);
  static GraphOfGroups load(std::string const& path);

 private:
  std::vector<GroupPtr> vertices_;
  std::vector<GogEdge> edges_;
  std::vector<std::vector<std::size_t>> incoming_;
  std::vector<std::vector<std::optional<Element>>> preimage_;
  std::vector<std::vector<std::pair<Element, Element>>> split_;
  std::vector<std::vector<Element>> reps_;
};

enum class Shape { single_edge, star, loop_for_z };

Shape parse_shape(std::string const& name);
std::string shape_name(Shape s);

/// A free product realised as the fundamental group of a graph of groups
/// with trivial edge groups.
///   single_edge  G_0 - G_1, based at G_0; a letter k of G_1 becomes e k rev(e).
///   star         trivial centre joined to each factor, based at the centre.
///   loop_for_z   one finite vertex with a loop edge standing for the Z factor.
class FreeProductGraph {
 public:
  FreeProductGraph(SignaturePtr sig, Shape shape);

  SignaturePtr const& signature() const noexcept { return sig_; }
  Shape shape() const noexcept { return shape_; }
  GraphOfGroups const& graph() const noexcept { return gog_; }
  std::size_t base() const noexcept { return base_; }

  GroupoidPath embed(Word const& w) const;
  GroupoidPath embed(Syllable const& s) const;
  /// Inverse of embed on loops at the base.
  Word extract(GroupoidPath const& loop) const;

  /// The finite factor carried by a graph vertex (none for the star centre).
  std::optional<std::size_t> vertex_factor(std::size_t v) const { return vertex_factor_.at(v); }
  std::optional<std::size_t> factor_vertex(std::size_t i) const { return factor_vertex_.at(i); }

 private:
  SignaturePtr sig_;
  Shape shape_;
  GraphOfGroups gog_;
  std::size_t base_ = 0;
  std::vector<std::optional<std::size_t>> vertex_factor_;
  std::vector<std::optional<std::size_t>> factor_vertex_;
  std::vector<std::optional<std::size_t>> factor_edge_;  // star/single edge spoke into the factor
  std::optional<std::size_t> z_factor_;
  std::optional<std::size_t> loop_edge_;
};

/// Translation length of w in the given shape, through the graph of groups.
std::size_t translation_length(FreeProductGraph const& fp, Word const& w);

}  // namespace fpa
