#pragma once

// Finite groups given by multiplication tables, and maps between them.

#include <array>
#include <cstddef>
#include <cstdint>
#include <memory>
#include <optional>
#include <span>
#include <stdexcept>
#include <string>
#include <vector>

#include <json.hpp>

namespace fpa {

using Element = std::uint32_t;

class GroupError : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

enum class Axiom { closure, identity, inverse, associativity };

std::string to_string(Axiom a);

class AxiomViolation : public GroupError {
 public:
  AxiomViolation(Axiom kind, std::array<Element, 3> witness);
  Axiom kind() const noexcept { return kind_; }
  std::array<Element, 3> const& witness() const noexcept { return witness_; }

 private:
  Axiom kind_;
  std::array<Element, 3> witness_;
};

class IndexOutOfRange : public GroupError {
 public:
  using GroupError::GroupError;
};

class BoundExceeded : public GroupError {
 public:
  using GroupError::GroupError;
};

using Table = std::vector<std::vector<Element>>;

/// A finite group stored as its full multiplication table.
///
/// The identity is always element 0; `validate` relabels the input table if
/// the identity sits elsewhere. Instances are immutable.
class FiniteGroup {
 public:
  /// Checks closure, identity, inverses and associativity (exhaustively) and
  /// returns the canonicalized group. Throws AxiomViolation.
  static FiniteGroup validate(std::string name, Table const& table);

  std::string const& name() const noexcept { return name_; }
  std::size_t order() const noexcept { return n_; }
  static constexpr Element identity() noexcept { return 0; }

  /// Checked product x*y.
  Element multiply(Element x, Element y) const;
  /// Unchecked product x*y.
  Element mul(Element x, Element y) const noexcept { return table_[x * n_ + y]; }
  Element inverse(Element x) const noexcept { return inverse_[x]; }
  Element conjugate(Element x, Element g) const noexcept {
    return mul(mul(inverse(g), x), g);
  }
  Element power(Element x, long long k) const;
  std::size_t element_order(Element x) const;
  bool is_abelian() const;
  bool contains(Element x) const noexcept { return x < n_; }

  Table table() const;
  nlohmann::json to_json() const;
  static FiniteGroup from_json(nlohmann::json const& j);

  /// Sorted multiset of element orders; cheap isomorphism invariant.
  std::vector<std::size_t> order_statistics() const;

 private:
  FiniteGroup() = default;

  std::string name_;
  std::size_t n_ = 0;
  std::vector<Element> table_;
  std::vector<Element> inverse_;
};

using GroupPtr = std::shared_ptr<const FiniteGroup>;

GroupPtr make_group(FiniteGroup g);

/// A set map between finite groups, stored as an image table.
class GroupMap {
 public:
  GroupMap(GroupPtr source, GroupPtr target, std::vector<Element> images);

  static GroupMap identity(GroupPtr g);

  GroupPtr const& source() const noexcept { return source_; }
  GroupPtr const& target() const noexcept { return target_; }
  std::vector<Element> const& images() const noexcept { return images_; }
  Element operator()(Element x) const { return images_.at(x); }

  bool is_homomorphism() const;
  bool is_injective() const;
  bool is_bijective() const;

  /// Map applying *this first and then `next`.
  GroupMap then(GroupMap const& next) const;
  /// Inverse of a bijection.
  GroupMap inverse() const;

  friend bool operator==(GroupMap const& a, GroupMap const& b) {
    return a.images_ == b.images_;
  }

 private:
  GroupPtr source_;
  GroupPtr target_;
  std::vector<Element> images_;
};

bool is_homomorphism(std::span<const Element> images, FiniteGroup const& src,
                     FiniteGroup const& tgt);

/// Default bound on group order for exhaustive searches.
inline constexpr std::size_t kSearchBound = 24;

/// Backtracking search over generator images, pruned by element orders.
std::optional<GroupMap> find_isomorphism(GroupPtr const& g, GroupPtr const& h);

/// All automorphisms, identity first. Throws BoundExceeded past `bound`.
std::vector<GroupMap> automorphism_group(GroupPtr const& g,
                                         std::size_t bound = kSearchBound);

/// |G / [G,G]|.
std::size_t abelianisation_order(FiniteGroup const& g);

/// A small generating set, chosen greedily.
std::vector<Element> generating_set(FiniteGroup const& g);

namespace groups {

GroupPtr cyclic(std::size_t n);
GroupPtr direct_product(GroupPtr const& a, GroupPtr const& b);
/// Symmetric group on `n` letters (n <= 4), elements in lexicographic order
/// of their one-line notation. The product x*y is the composite x(y(i)).
GroupPtr symmetric(std::size_t n);

/// Shipped small groups: C2..C6, C2xC2, C3xC3, S3, S4.
GroupPtr builtin(std::string const& name);
std::vector<std::string> builtin_names();

GroupPtr load(std::string const& path);
/// Resolves a builtin name first, then a JSON file path.
GroupPtr resolve(std::string const& name_or_path);

}  // namespace groups

}  // namespace fpa
