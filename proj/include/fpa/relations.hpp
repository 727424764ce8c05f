#pragma once

// Machine check of the defining relations among factor, permutation and
// partial-conjugation automorphisms:
//   (1)  (A,b)(A,b') = (A,b'b)
//   (2)  (A,b)(C,d) = (C,d)(A,b)          A != C, b not in C, d not in A
//   (3)  [(A,b)(C,b),(A,c)] = 1           A, B, C distinct
//   (S)  phi^-1 (A,b) phi = (A phi, b phi) for phi a factor or permutation automorphism

#include <cstdint>
#include <functional>
#include <optional>
#include <vector>

#include "fpa/automorphism.hpp"
#include "fpa/report.hpp"

namespace fpa {

struct SamplePolicy {
  /// Empty: every instance. Otherwise that many instances drawn without
  /// replacement (all of them if there are fewer).
  std::optional<std::size_t> samples;
  std::uint64_t seed = 0;
  unsigned jobs = 1;
};

using Composer = std::function<Automorphism(Automorphism const&, Automorphism const&)>;

/// Conjugation of factor `target` by an arbitrary word w: x -> w^-1 x w.
/// Built directly from images.
Automorphism partial_conjugation(SignaturePtr const& sig, std::size_t target, Word const& w);

/// Nontrivial letters of factor j; Z factors contribute x^1 and x^-1.
std::vector<Syllable> factor_letters(Signature const& sig, std::size_t j);

/// Every atomic generator: non-identity permutations of isomorphic factors,
/// non-identity factor automorphisms, partial conjugations (A,b) for each
/// letter b outside A, and transvections x -> b x of each Z factor.
std::vector<AtomicAut> generating_atoms(Signature const& sig);

/// `compose(a, b)` defaults to a.then(b); tests substitute a faulty one.
SuiteReport verify_relation_suite(SignaturePtr const& sig, SamplePolicy const& policy,
                                  Composer compose = {});

}  // namespace fpa
