#include <doctest.h>

#include "fpa/automorphism.hpp"
#include "fpa/random_words.hpp"

using namespace fpa;

namespace {

Syllable f(std::size_t i, Element e) { return Syllable::finite(i, e); }
Syllable x(std::size_t i, long long n) { return Syllable::power(i, n); }

// Every reduced word of syllable length <= len over finite factors.
void enumerate_words(Signature const& sig, std::size_t len, std::vector<Word>& out,
                     Word& cur) {
  out.push_back(cur);
  if (cur.size() == len) return;
  for (std::size_t i = 0; i < sig.size(); ++i) {
    if (!cur.empty() && cur.syllables.back().factor == i) continue;
    for (Element e = 1; e < sig.group(i)->order(); ++e) {
      cur.syllables.push_back(f(i, e));
      enumerate_words(sig, len, out, cur);
      cur.syllables.pop_back();
    }
  }
}

// Independent oracle: search for a conjugator among all short words.
std::optional<Word> brute_inner(Automorphism const& a, std::size_t len) {
  auto const& sig = *a.signature();
  std::vector<Word> words;
  Word cur;
  enumerate_words(sig, len, words, cur);
  for (auto const& g : words) {
    bool ok = true;
    for (std::size_t i = 0; i < sig.size() && ok; ++i)
      for (Element e = 1; e < sig.group(i)->order() && ok; ++e)
        ok = a.image(i, e) == sig.conjugate(sig.letter(i, e), g);
    if (ok) return g;
  }
  return std::nullopt;
}

}  // namespace

TEST_CASE("atoms act as documented") {
  auto sig = parse_signature("C3,C3,C3");
  auto pc = Automorphism::atom(sig, PartialConj{0, f(1, 1)});
  Word a{{f(0, 1)}}, b{{f(1, 1)}}, c{{f(2, 1)}};
  CHECK(pc.apply(a) == sig->parse("f1.2 f0.1 f1.1"));
  CHECK(pc.apply(b) == b);
  CHECK(pc.apply(c) == c);

  auto gamma = Automorphism::atom(sig, InnerFactor{0, 1});
  CHECK(gamma.apply(a) == a);  // abelian factor

  auto perm = Automorphism::atom(sig, PermAut{{1, 2, 0}});
  CHECK(perm.apply(a) == b);
  CHECK(perm.apply(b) == c);
  CHECK(perm.apply(c) == a);

  auto fa = Automorphism::atom(sig, FactorAut{2, GroupMap(sig->group(2), sig->group(2), {0, 2, 1}), 1});
  CHECK(fa.apply(c) == sig->parse("f2.2"));

  auto hz = parse_signature("C2,Z");
  auto tv = Automorphism::atom(hz, Transvection{1, f(0, 1)});
  CHECK(tv.apply(hz->parse("x1^2")) == hz->parse("f0.1 x1^1 f0.1 x1^1"));
  auto neg = Automorphism::atom(hz, FactorAut{1, std::nullopt, -1});
  CHECK(neg.apply(hz->parse("x1^5")) == hz->parse("x1^-5"));
  auto pz = Automorphism::atom(hz, PartialConj{1, f(0, 1)});
  CHECK(pz.apply(hz->parse("x1^1")) == hz->parse("f0.1 x1^1 f0.1"));
}

TEST_CASE("invalid atoms are rejected") {
  auto sig = parse_signature("C2,C3,Z");
  CHECK_THROWS_AS(Automorphism::atom(sig, PartialConj{0, f(0, 1)}), AutomorphismError);
  CHECK_THROWS_AS(Automorphism::atom(sig, PartialConj{0, f(1, 0)}), AutomorphismError);
  CHECK_THROWS_AS(Automorphism::atom(sig, PermAut{{1, 0, 2}}), AutomorphismError);
  CHECK_THROWS_AS(Automorphism::atom(sig, Transvection{0, f(1, 1)}), AutomorphismError);
  CHECK_THROWS_AS(Automorphism::atom(sig, InnerFactor{2, 0}), AutomorphismError);
  auto c3 = sig->group(1);
  CHECK_THROWS_AS(Automorphism::atom(sig, FactorAut{1, GroupMap(c3, c3, {0, 1, 1}), 1}),
                  AutomorphismError);
}

TEST_CASE("partial conjugations compose as (A,b)(A,b') = (A,b'b)") {
  auto sig = parse_signature("C3,C3,C3");
  auto ab = Automorphism::atom(sig, PartialConj{0, f(1, 1)});
  auto ac = Automorphism::atom(sig, PartialConj{0, f(2, 2)});
  auto prod = Automorphism::from_images(
      sig,
      {{Word{}, sig->conjugate(sig->letter(0, 1), sig->parse("f2.2 f1.1")),
        sig->conjugate(sig->letter(0, 2), sig->parse("f2.2 f1.1"))},
       {Word{}, sig->letter(1, 1), sig->letter(1, 2)},
       {Word{}, sig->letter(2, 1), sig->letter(2, 2)}},
      {Word{}, Word{}, Word{}});
  CHECK(ab.then(ac) == prod);
}

TEST_CASE("gamma(a)(B,a)(C,a) is conjugation by a") {
  auto sig = parse_signature("S3,C2,C3");
  for (Element e = 1; e < 6; ++e) {
    auto composite = Automorphism::from_atoms(
        sig, {InnerFactor{0, e}, PartialConj{1, f(0, e)}, PartialConj{2, f(0, e)}});
    CHECK(composite == Automorphism::inner(sig, Word{{f(0, e)}}));
  }
}

TEST_CASE("permutation conjugation moves partial conjugations") {
  auto sig = parse_signature("C3,C3,C3");
  auto phi = Automorphism::atom(sig, PermAut{{1, 2, 0}});
  auto ab = Automorphism::atom(sig, PartialConj{0, f(1, 1)});
  // phi^-1 (A,b) phi = (A phi, b phi) = (B, c).
  CHECK(conjugate(ab, phi) == Automorphism::atom(sig, PartialConj{1, f(2, 1)}));
}

TEST_CASE("inverse and identity") {
  Rng rng(3);
  auto sig = parse_signature("C2,C3,S3,Z");
  auto a = parse_automorphism(sig, "pc(0,1.1); tv(3,2.4); perm(); fa(1,0,2,1); inn(2,3); pc(3,0.1)");
  CHECK(a.then(a.inverse()).is_identity());
  CHECK(a.inverse().then(a).is_identity());
  for (int t = 0; t < 200; ++t) {
    Word w = random_word_up_to(*sig, 8, rng);
    CHECK(a.inverse().apply(a.apply(w)) == w);
  }
  auto img = Automorphism::from_images(sig,
                                       {{Word{}, sig->letter(0, 1)},
                                        {Word{}, sig->letter(1, 1), sig->letter(1, 2)},
                                        {Word{}, sig->letter(2, 1), sig->letter(2, 2),
                                         sig->letter(2, 3), sig->letter(2, 4), sig->letter(2, 5)},
                                        {}},
                                       {Word{}, Word{}, Word{}, sig->generator_power(3, 1)});
  CHECK(img.is_identity());
  CHECK_THROWS_AS(img.inverse(), AutomorphismError);
}

TEST_CASE("signature mismatch") {
  auto s1 = parse_signature("C2,C3");
  auto s2 = parse_signature("C2,C3");
  CHECK_THROWS_AS(Automorphism::identity(s1).then(Automorphism::identity(s2)), SignatureMismatch);
}

TEST_CASE("parse and format round trip") {
  auto sig = parse_signature("C3,C3,C2,Z");
  std::string text = "pc(0,1.2); perm((0 1)); fa(3,-1); tv(3,2.1); pc(2,3^-2); inn(1,2)";
  auto a = parse_automorphism(sig, text);
  CHECK(a.format() == text);
  CHECK(parse_automorphism(sig, a.format()) == a);
  CHECK(parse_automorphism(sig, "id").is_identity());
  CHECK_THROWS_AS(parse_automorphism(sig, "zz(1,2)"), ParseError);
  CHECK_THROWS_AS(parse_automorphism(sig, "pc(0,1.5)"), BadLetter);
}

TEST_CASE("is_inner examples") {
  auto sig = parse_signature("C2,C3,C2");
  auto g = sig->parse("f0.1 f1.2 f2.1");
  auto r = is_inner(Automorphism::inner(sig, g), 8);
  CHECK(r.status == InnerStatus::inner);
  CHECK(r.witness == g);
  CHECK(is_inner(Automorphism::inner(sig, g), 2).status == InnerStatus::undecided);

  auto pc = Automorphism::atom(sig, PartialConj{0, f(1, 1)});
  CHECK(is_inner(pc, 8).status == InnerStatus::not_inner);
  CHECK(is_inner(Automorphism::identity(sig), 0).status == InnerStatus::inner);

  // In a two-factor product gamma(b)(A,b) is conjugation by b.
  auto two = parse_signature("C3,S3");
  CHECK(is_inner(Automorphism::atom(two, PartialConj{0, f(1, 4)}), 4).status ==
        InnerStatus::not_inner);
  auto pc2 = Automorphism::from_atoms(two, {InnerFactor{1, 4}, PartialConj{0, f(1, 4)}});
  auto r2 = is_inner(pc2, 4);
  CHECK(r2.status == InnerStatus::inner);
  CHECK(Automorphism::inner(two, r2.witness) == pc2);
}

TEST_CASE("property: is_inner agrees with brute-force search") {
  Rng rng(19);
  auto sig = parse_signature("C2,C3,C2");
  std::size_t const len = 3;
  int inner_count = 0;
  for (int t = 0; t < 150; ++t) {
    Automorphism a = Automorphism::identity(sig);
    if (t % 2 == 0) {
      a = Automorphism::inner(sig, random_word_up_to(*sig, len, rng));
    } else {
      std::vector<AtomicAut> atoms;
      for (int k = 0; k < 3; ++k) {
        std::size_t target = std::uniform_int_distribution<std::size_t>(0, 2)(rng);
        std::size_t from = (target + 1 + rng() % 2) % 3;
        Element e = Element(1 + rng() % (sig->group(from)->order() - 1));
        atoms.push_back(PartialConj{target, f(from, e)});
      }
      if (rng() % 2) atoms.push_back(PermAut{{2, 1, 0}});
      a = Automorphism::from_atoms(sig, atoms);
    }
    auto got = is_inner(a, len);
    auto brute = brute_inner(a, len);
    if (brute) {
      ++inner_count;
      CHECK(got.status == InnerStatus::inner);
      CHECK(got.witness == *brute);
    } else {
      CHECK(got.status != InnerStatus::inner);
      if (got.status == InnerStatus::undecided) {
        CHECK(got.witness.size() > len);
        CHECK(Automorphism::inner(sig, got.witness) == a);
      }
    }
  }
  CHECK(inner_count >= 75);
}

TEST_CASE("property: composition is evaluation order and images multiply") {
  Rng rng(23);
  auto sig = parse_signature("C2,S3,C3,Z");
  auto random_aut = [&] {
    std::vector<AtomicAut> atoms;
    for (int k = 0; k < 4; ++k) {
      std::size_t target = rng() % 4;
      std::size_t from = (target + 1 + rng() % 3) % 4;
      Syllable letter = sig->is_finite(from)
                            ? f(from, Element(1 + rng() % (sig->group(from)->order() - 1)))
                            : x(from, 1 + long(rng() % 3));
      if (target == 3 && rng() % 2)
        atoms.push_back(Transvection{3, letter});
      else
        atoms.push_back(PartialConj{target, letter});
    }
    return Automorphism::from_atoms(sig, atoms);
  };
  for (int t = 0; t < 100; ++t) {
    auto a = random_aut(), b = random_aut();
    CHECK(a.is_multiplicative());
    auto ab = a.then(b);
    for (int k = 0; k < 5; ++k) {
      Word u = random_word_up_to(*sig, 6, rng);
      Word v = random_word_up_to(*sig, 6, rng);
      CHECK(ab.apply(u) == b.apply(a.apply(u)));
      CHECK(a.apply(sig->multiply(u, v)) == sig->multiply(a.apply(u), a.apply(v)));
    }
  }
}
