#pragma once

// Automorphisms of free products generated by factor, permutation,
// partial-conjugation, transvection and inner-factor atoms.
//
// Orientation: automorphisms act on the right and compose left to right, so
// `a.then(b)` applies a first. The partial conjugation (A,b) sends every
// a in A to b^-1 a b, and the inner factor automorphism gamma(a) sends x in
// A to a^-1 x a. With this pairing (A,b)(A,b') = (A,b'b) and
// gamma(a)(B,a)(C,a) is conjugation by a.

#include <cstddef>
#include <optional>
#include <string>
#include <string_view>
#include <variant>
#include <vector>

#include "fpa/word.hpp"

namespace fpa {

class AutomorphismError : public WordError {
 public:
  using WordError::WordError;
};

/// Automorphism of one factor: a GroupMap for finite factors, +-1 for Z.
struct FactorAut {
  std::size_t factor = 0;
  std::optional<GroupMap> map;
  int sign = 1;
};

/// Permutes isomorphic factors: factor i goes to factor perm[i], elements
/// transported along the signature's reference isomorphisms.
struct PermAut {
  std::vector<std::size_t> perm;
};

/// (A,b): a -> b^-1 a b on factor `target`, identity elsewhere.
struct PartialConj {
  std::size_t target = 0;
  Syllable conjugator;
};

/// x -> a x on the infinite cyclic factor `factor`.
struct Transvection {
  std::size_t factor = 0;
  Syllable multiplier;
};

/// gamma(a): x -> a^-1 x a on factor `factor`, identity elsewhere.
struct InnerFactor {
  std::size_t factor = 0;
  Element element = 0;
};

using AtomicAut = std::variant<FactorAut, PermAut, PartialConj, Transvection, InnerFactor>;

class Automorphism {
 public:
  static Automorphism identity(SignaturePtr sig);
  static Automorphism atom(SignaturePtr sig, AtomicAut a);
  static Automorphism from_atoms(SignaturePtr sig, std::vector<AtomicAut> const& atoms);
  /// Builds from explicit images. `finite_images[i]` lists images of every
  /// element of finite factor i; `generator_images[i]` is the image of the
  /// generator of Z factor i. No atom word is recorded, so inverse() throws.
  static Automorphism from_images(SignaturePtr sig, std::vector<std::vector<Word>> finite_images,
                                  std::vector<Word> generator_images);
  /// Conjugation by g: every x goes to g^-1 x g.
  static Automorphism inner(SignaturePtr sig, Word const& g);

  SignaturePtr const& signature() const noexcept { return sig_; }
  std::vector<AtomicAut> const& atoms() const noexcept { return atoms_; }
  bool has_atoms() const noexcept { return has_atoms_; }

  Word const& image(std::size_t factor, Element e) const;
  Word const& generator_image(std::size_t factor) const;
  Word image(Syllable const& s) const;

  Word apply(Word const& w) const;
  /// Apply *this, then `next`.
  Automorphism then(Automorphism const& next) const;
  Automorphism inverse() const;
  /// Exact comparison of image maps.
  bool equals(Automorphism const& other) const;
  friend bool operator==(Automorphism const& a, Automorphism const& b) { return a.equals(b); }

  bool is_identity() const;
  /// image(xy) = image(x) image(y) on every finite factor.
  bool is_multiplicative() const;
  /// Where each finite factor is sent up to conjugacy, if it is sent into a
  /// conjugate of a single factor: (factor j, conjugator h) with
  /// image(G_i) = h^-1 G_j h.
  std::optional<std::pair<std::size_t, Word>> factor_image(std::size_t i) const;

  std::string format() const;

 private:
  explicit Automorphism(SignaturePtr sig);

  SignaturePtr sig_;
  std::vector<AtomicAut> atoms_;
  bool has_atoms_ = true;
  std::vector<std::vector<Word>> finite_images_;
  std::vector<Word> generator_images_;
};

/// Commutator [a,b] = a^-1 b^-1 a b.
Automorphism commutator(Automorphism const& a, Automorphism const& b);
/// a^-1 b a.
Automorphism conjugate(Automorphism const& b, Automorphism const& a);

void check_atom(Signature const& sig, AtomicAut const& a);
AtomicAut invert_atom(Signature const& sig, AtomicAut const& a);
std::string format_atom(Signature const& sig, AtomicAut const& a);

/// ";"-separated atoms: pc(A,j.e) tv(i,j.e) fa(i,perm) perm(cycles) inn(i,e).
/// Conjugating and multiplying letters of Z factors use j^n in place of j.e;
/// fa on a Z factor takes -1 or 1.
Automorphism parse_automorphism(SignaturePtr sig, std::string_view text);

enum class InnerStatus { inner, not_inner, undecided };

struct InnerResult {
  InnerStatus status = InnerStatus::undecided;
  Word witness;  // valid when inner: the automorphism is conjugation by witness
};

/// Decides whether `a` is conjugation by some g (all factors finite).
/// Candidates come from the cyclic reduction of one factor image, so the
/// decision is exact; `bound` caps the reported witness syllable length and
/// longer witnesses are reported as undecided.
InnerResult is_inner(Automorphism const& a, std::size_t bound);

}  // namespace fpa
