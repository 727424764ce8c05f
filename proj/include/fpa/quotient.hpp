#pragma once

// Quotients G -> G/N where N is the normal closure of a set of free factors.
// G/N is the free product of the remaining factors.

#include <cstddef>
#include <vector>

#include "fpa/automorphism.hpp"
#include "fpa/random_words.hpp"
#include "fpa/report.hpp"

namespace fpa {

class QuotientError : public AutomorphismError {
 public:
  using AutomorphismError::AutomorphismError;
};

class TooFewFactors : public QuotientError {
 public:
  using QuotientError::QuotientError;
};

/// The automorphism does not preserve N.
class NotProjectable : public QuotientError {
 public:
  using QuotientError::QuotientError;
};

class CharacteristicQuotient {
 public:
  /// Kills the listed factors. N is characteristic in Aut(G) exactly when
  /// the killed set is a union of isomorphism classes; otherwise only the
  /// automorphisms that preserve each killed factor's conjugacy class descend.
  CharacteristicQuotient(SignaturePtr source, std::vector<std::size_t> killed);
  /// Kills every factor isomorphic to factor `representative`.
  static CharacteristicQuotient kill_class(SignaturePtr source, std::size_t representative);

  SignaturePtr const& source() const noexcept { return source_; }
  SignaturePtr const& target() const noexcept { return target_; }
  std::vector<std::size_t> const& killed() const noexcept { return killed_; }
  /// kept()[t] is the source index of target factor t.
  std::vector<std::size_t> const& kept() const noexcept { return kept_; }
  bool is_killed(std::size_t i) const { return index_.at(i) == npos; }
  bool characteristic() const noexcept { return characteristic_; }

  Word quotient_word(Word const& w) const;
  /// Generator by generator: atoms on killed data become the identity, the
  /// rest are renumbered. Throws NotProjectable for atoms that move N.
  Automorphism quotient_aut(Automorphism const& a) const;
  /// The map q(x) -> q(a(x)) computed from image tables; throws
  /// NotProjectable if a(N) is not contained in N.
  Automorphism induced_aut(Automorphism const& a) const;
  /// Image of a single atom, or nullopt when it becomes the identity.
  std::optional<AtomicAut> quotient_atom(AtomicAut const& a) const;

 private:
  static constexpr std::size_t npos = static_cast<std::size_t>(-1);

  SignaturePtr source_;
  SignaturePtr target_;
  std::vector<std::size_t> killed_;
  std::vector<std::size_t> kept_;
  std::vector<std::size_t> index_;  // source factor -> target factor or npos
  bool characteristic_ = false;
};

/// Kills every factor except 0 and 1 (no Z factors, at least three factors).
CharacteristicQuotient no_prop_t_quotient(SignaturePtr const& sig);

/// Checks the stated image of every partial-conjugation and factor
/// generator under `q` (both generator-wise and from image tables), and
/// functoriality on `pairs` random pairs of generators.
SuiteReport verify_quotient(CharacteristicQuotient const& q, std::size_t pairs, std::uint64_t seed);

/// quotient_word(uv) = quotient_word(u) quotient_word(v) on random pairs.
SuiteReport verify_quotient_word(CharacteristicQuotient const& q, std::size_t pairs,
                                 std::uint64_t seed);

}  // namespace fpa
