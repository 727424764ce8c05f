#pragma once

// Elements of a free product G_1 * ... * G_k * F_r in reduced syllable form.

#include <cstddef>
#include <memory>
#include <stdexcept>
#include <string>
#include <string_view>
#include <utility>
#include <vector>

#include <boost/multiprecision/cpp_int.hpp>

#include "fpa/group.hpp"

namespace fpa {

using BigInt = boost::multiprecision::cpp_int;

class WordError : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

class BadLetter : public WordError {
 public:
  BadLetter(std::size_t factor, std::string const& letter);
  std::size_t factor() const noexcept { return factor_; }

 private:
  std::size_t factor_;
};

class SignatureMismatch : public WordError {
 public:
  using WordError::WordError;
};

class ParseError : public WordError {
 public:
  using WordError::WordError;
};

/// One free factor: a finite group, or infinite cyclic when `group` is null.
struct FactorSpec {
  GroupPtr group;

  static FactorSpec finite(GroupPtr g) { return FactorSpec{std::move(g)}; }
  static FactorSpec infinite_cyclic() { return FactorSpec{nullptr}; }
  bool is_infinite_cyclic() const noexcept { return group == nullptr; }
  std::string name() const { return group ? group->name() : "Z"; }
};

/// A letter of a single factor. Finite factors use `element` (never the
/// identity); infinite cyclic factors use `exponent` (never zero).
struct Syllable {
  std::size_t factor = 0;
  Element element = 0;
  BigInt exponent = 0;

  static Syllable finite(std::size_t factor, Element e) { return {factor, e, 0}; }
  static Syllable power(std::size_t factor, BigInt n) { return {factor, 0, std::move(n)}; }

  friend bool operator==(Syllable const& a, Syllable const& b) {
    return a.factor == b.factor && a.element == b.element && a.exponent == b.exponent;
  }
  friend bool operator<(Syllable const& a, Syllable const& b) {
    if (a.factor != b.factor) return a.factor < b.factor;
    if (a.element != b.element) return a.element < b.element;
    return a.exponent < b.exponent;
  }
};

/// Reduced alternating normal form; empty is the identity.
struct Word {
  std::vector<Syllable> syllables;

  std::size_t size() const noexcept { return syllables.size(); }
  bool empty() const noexcept { return syllables.empty(); }
  friend bool operator==(Word const& a, Word const& b) = default;
  friend bool operator<(Word const& a, Word const& b) { return a.syllables < b.syllables; }
};

/// A cyclically reduced word, meaningful up to rotation.
struct CyclicWord {
  Word word;

  std::size_t size() const noexcept { return word.size(); }
  friend bool operator==(CyclicWord const& a, CyclicWord const& b) = default;
};

/// Result of cyclic reduction: u = conjugator^-1 * core * conjugator.
struct CyclicReduction {
  CyclicWord core;
  Word conjugator;
};

inline std::size_t syllable_length(Word const& w) noexcept { return w.size(); }
inline std::size_t syllable_length(CyclicWord const& w) noexcept { return w.size(); }

/// The ordered factor list of a free product, with its isomorphism classes.
///
/// Each finite factor i carries a reference isomorphism from its class
/// representative onto G_i; permutation automorphisms transport elements
/// along these, which makes every cycle of isomorphisms compose to the
/// identity.
class Signature {
 public:
  explicit Signature(std::vector<FactorSpec> factors, bool degenerate = false);

  /// Builds a signature with explicit class data (used for quotients so that
  /// reference isomorphisms restrict from the source).
  Signature(std::vector<FactorSpec> factors, std::vector<std::size_t> class_of,
            std::vector<GroupMap> reference_isos, bool degenerate);

  std::size_t size() const noexcept { return factors_.size(); }
  FactorSpec const& factor(std::size_t i) const { return factors_.at(i); }
  std::vector<FactorSpec> const& factors() const noexcept { return factors_; }
  bool is_finite(std::size_t i) const { return !factor(i).is_infinite_cyclic(); }
  GroupPtr const& group(std::size_t i) const;
  bool all_finite() const noexcept;
  std::size_t free_rank() const noexcept;
  bool degenerate() const noexcept { return degenerate_; }
  std::string describe() const;

  std::size_t class_of(std::size_t i) const { return class_of_.at(i); }
  std::size_t class_count() const noexcept { return class_count_; }
  std::vector<std::size_t> class_members(std::size_t cls) const;
  bool same_class(std::size_t i, std::size_t j) const { return class_of(i) == class_of(j); }
  /// Isomorphism from the class representative onto G_i (finite factors).
  GroupMap const& reference_iso(std::size_t i) const;
  std::vector<GroupMap> const& reference_isos() const noexcept { return reference_isos_; }
  std::vector<std::size_t> const& classes() const noexcept { return class_of_; }
  /// Carries x in G_i to G_j along the reference isomorphisms.
  Element transport(std::size_t i, std::size_t j, Element x) const;

  void check_syllable(Syllable const& s) const;
  /// Throws WordError unless w satisfies the normal-form invariants.
  void check(Word const& w) const;
  bool is_valid(Word const& w) const noexcept;

  Word normalize(std::vector<Syllable> raw) const;
  Word letter(std::size_t factor, Element e) const;
  Word generator_power(std::size_t factor, BigInt const& n) const;
  Word multiply(Word const& u, Word const& v) const;
  Word invert(Word const& u) const;
  /// g^-1 * u * g.
  Word conjugate(Word const& u, Word const& g) const;
  Word power(Word const& u, BigInt n) const;
  Syllable invert(Syllable const& s) const;

  CyclicReduction cyclically_reduce(Word const& u) const;
  bool is_cyclically_reduced(Word const& u) const;
  /// Conjugacy test on cyclically reduced words: rotations for length >= 2,
  /// conjugacy inside the factor for length 1.
  bool cyclically_conjugate(CyclicWord const& a, CyclicWord const& b) const;

  Word parse(std::string_view text) const;
  std::string format(Word const& w) const;
  std::string format(Syllable const& s) const;

 private:
  void compute_classes();

  std::vector<FactorSpec> factors_;
  std::vector<std::size_t> class_of_;
  std::size_t class_count_ = 0;
  std::vector<GroupMap> reference_isos_;  // only meaningful for finite factors
  std::vector<bool> has_iso_;
  bool degenerate_ = false;
};

using SignaturePtr = std::shared_ptr<const Signature>;

SignaturePtr make_signature(std::vector<FactorSpec> factors, bool degenerate = false);
/// Comma- or '*'-separated factor names: builtin groups, group files, or "Z".
SignaturePtr parse_signature(std::string_view text);

}  // namespace fpa
