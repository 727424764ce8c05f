#pragma once

// Finite simplicial trees, subtrees, and checkers for the subtree lemmas:
// Helly, nested intersection, the bridge lemma and commuting elliptics.

#include <cstddef>
#include <cstdint>
#include <optional>
#include <stdexcept>
#include <utility>
#include <vector>

#include "fpa/bstree.hpp"
#include "fpa/random_words.hpp"
#include "fpa/report.hpp"

namespace fpa {

class TreeError : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

class NotDisjoint : public TreeError {
 public:
  using TreeError::TreeError;
};

class NotCommuting : public TreeError {
 public:
  using TreeError::TreeError;
};

class FiniteTree {
 public:
  FiniteTree(std::size_t n, std::vector<std::pair<std::size_t, std::size_t>> const& edges);

  static FiniteTree from_pruefer(std::vector<std::size_t> const& seq);
  static FiniteTree random(std::size_t n, Rng& rng);
  static FiniteTree path(std::size_t n);

  std::size_t size() const noexcept { return adj_.size(); }
  std::vector<std::size_t> const& neighbors(std::size_t v) const { return adj_.at(v); }
  std::vector<std::pair<std::size_t, std::size_t>> edges() const;
  std::size_t distance(std::size_t u, std::size_t v) const { return dist_[u][v]; }
  /// Vertices of the unique path from u to v, inclusive.
  std::vector<std::size_t> path(std::size_t u, std::size_t v) const;

 private:
  std::vector<std::vector<std::size_t>> adj_;
  std::vector<std::vector<std::size_t>> dist_;
};

/// A nonempty connected vertex set, kept sorted.
class Subtree {
 public:
  Subtree(FiniteTree const& t, std::vector<std::size_t> vertices);

  std::vector<std::size_t> const& vertices() const noexcept { return vertices_; }
  bool contains(std::size_t v) const;
  std::size_t size() const noexcept { return vertices_.size(); }
  friend bool operator==(Subtree const&, Subtree const&) = default;

 private:
  std::vector<std::size_t> vertices_;
};

/// Grows a connected set from a random seed vertex, stopping after each
/// step with probability `stop`.
Subtree random_subtree(FiniteTree const& t, Rng& rng, double stop = 0.1,
                       std::optional<std::size_t> seed = std::nullopt);

std::size_t nearest_point(FiniteTree const& t, Subtree const& y, std::size_t v);
std::optional<Subtree> intersect(FiniteTree const& t, Subtree const& x, Subtree const& y);
std::optional<Subtree> intersect_all(FiniteTree const& t, std::vector<Subtree> const& family);
/// Vertices of the shortest path from X to Y. Throws NotDisjoint.
std::vector<std::size_t> bridge(FiniteTree const& t, Subtree const& x, Subtree const& y);

/// hypothesis: whether the lemma's hypotheses hold for this input;
/// holds: whether the conclusion holds (vacuously true if not hypothesis).
struct LemmaCheck {
  bool hypothesis = false;
  bool holds = true;
  std::optional<std::size_t> common;                          // a witness vertex
  std::optional<std::pair<std::size_t, std::size_t>> pair;    // an offending pair of members
};

/// If the members meet pairwise, they have a common vertex.
LemmaCheck check_helly(FiniteTree const& t, std::vector<Subtree> const& family);
/// If the X_i have a common vertex and each meets Y, then their intersection meets Y.
LemmaCheck check_nested_intersection(FiniteTree const& t, std::vector<Subtree> const& family,
                                     Subtree const& y);
/// If every S_i meets every T_j, then S_1 meets S_2 or T_1 meets T_2.
LemmaCheck check_bridge_lemma(FiniteTree const& t, Subtree const& s1, Subtree const& s2,
                              Subtree const& t1, Subtree const& t2);

/// A vertex permutation of a FiniteTree.
using TreeMap = std::vector<std::size_t>;

bool is_tree_automorphism(FiniteTree const& t, TreeMap const& f);
std::vector<std::size_t> fixed_vertices(std::vector<TreeMap> const& gens, std::size_t n);

/// Commuting elliptic subgroups have a common fixed vertex. Throws
/// NotCommuting if some h and k do not commute; hypothesis is false when
/// either fixed set is empty.
LemmaCheck check_commuting_elliptics(FiniteTree const& t, std::vector<TreeMap> const& h,
                                     std::vector<TreeMap> const& k);
/// Same on a ball of a Bass-Serre tree; commutation is checked in the group.
LemmaCheck check_commuting_elliptics(BassSerreTree const& tree, Ball const& ball,
                                     std::vector<GroupoidPath> const& h,
                                     std::vector<GroupoidPath> const& k);

enum class Lemma { helly, nested, bridge, commuting };

struct TrialOptions {
  std::size_t trials = 1000;
  std::uint64_t seed = 0;
  std::size_t max_vertices = 40;
  std::size_t max_attempts = 200000;  // total rejection-sampling budget
};

/// Draws `trials` instances satisfying the lemma's hypotheses and checks the
/// conclusion on each. Rejected draws are not counted as instances.
SuiteReport run_lemma_trials(Lemma lemma, TrialOptions const& opt);
SuiteReport run_all_lemma_trials(TrialOptions const& opt);

}  // namespace fpa
