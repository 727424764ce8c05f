#include "fpa/relations.hpp"

#include <algorithm>
#include <numeric>
#include <random>

#include "fpa/random_words.hpp"

namespace fpa {

Automorphism partial_conjugation(SignaturePtr const& sig, std::size_t target, Word const& w) {
  std::vector<std::vector<Word>> finite(sig->size());
  std::vector<Word> gens(sig->size());
  for (std::size_t i = 0; i < sig->size(); ++i) {
    if (sig->is_finite(i)) {
      for (Element e = 0; e < sig->group(i)->order(); ++e) {
        Word l = sig->letter(i, e);
        finite[i].push_back(i == target ? sig->conjugate(l, w) : l);
      }
    } else {
      Word x = sig->generator_power(i, 1);
      gens[i] = i == target ? sig->conjugate(x, w) : x;
    }
  }
  return Automorphism::from_images(sig, std::move(finite), std::move(gens));
}

namespace {

enum class Kind { one, two, three, semidirect };

struct Instance {
  Kind kind;
  std::size_t a = 0, c = 0;
  Syllable b, d;
  std::size_t phi = 0;
};

// Nontrivial letters of factor j; Z factors contribute x^1 and x^-1.
std::vector<Syllable> letters(Signature const& sig, std::size_t j) {
  std::vector<Syllable> out;
  if (sig.is_finite(j)) {
    for (Element e = 1; e < sig.group(j)->order(); ++e) out.push_back(Syllable::finite(j, e));
  } else {
    out.push_back(Syllable::power(j, 1));
    out.push_back(Syllable::power(j, -1));
  }
  return out;
}

std::vector<Syllable> letters_outside(Signature const& sig, std::initializer_list<std::size_t> skip) {
  std::vector<Syllable> out;
  for (std::size_t j = 0; j < sig.size(); ++j) {
    if (std::find(skip.begin(), skip.end(), j) != skip.end()) continue;
    auto l = letters(sig, j);
    out.insert(out.end(), l.begin(), l.end());
  }
  return out;
}

std::vector<AtomicAut> semidirect_generators(Signature const& sig) {
  std::vector<AtomicAut> out;
  std::vector<std::size_t> perm(sig.size());
  std::iota(perm.begin(), perm.end(), 0);
  do {
    bool ok = true;
    bool moved = false;
    for (std::size_t i = 0; i < perm.size() && ok; ++i) {
      ok = sig.same_class(i, perm[i]);
      moved = moved || perm[i] != i;
    }
    if (ok && moved) out.push_back(PermAut{perm});
  } while (std::next_permutation(perm.begin(), perm.end()));
  for (std::size_t i = 0; i < sig.size(); ++i) {
    if (sig.is_finite(i)) {
      auto auts = automorphism_group(sig.group(i));
      for (std::size_t k = 1; k < auts.size(); ++k) out.push_back(FactorAut{i, auts[k], 1});
    } else {
      out.push_back(FactorAut{i, std::nullopt, -1});
    }
  }
  return out;
}

std::string letter_text(Signature const& sig, Syllable const& s) {
  return sig.format(Word{{s}});
}

}  // namespace

std::vector<Syllable> factor_letters(Signature const& sig, std::size_t j) { return letters(sig, j); }

std::vector<AtomicAut> generating_atoms(Signature const& sig) {
  auto out = semidirect_generators(sig);
  for (std::size_t a = 0; a < sig.size(); ++a)
    for (auto const& b : letters_outside(sig, {a})) {
      if (sig.is_finite(a)) out.push_back(PartialConj{a, b});
      else out.push_back(Transvection{a, b});
    }
  for (std::size_t a = 0; a < sig.size(); ++a)
    if (!sig.is_finite(a))
      for (auto const& b : letters_outside(sig, {a})) out.push_back(PartialConj{a, b});
  return out;
}

SuiteReport verify_relation_suite(SignaturePtr const& sig, SamplePolicy const& policy,
                                  Composer compose) {
  if (!compose) compose = [](Automorphism const& a, Automorphism const& b) { return a.then(b); };
  auto const& s = *sig;
  std::size_t const n = s.size();

  std::vector<Instance> all;
  for (std::size_t a = 0; a < n; ++a) {
    auto outside = letters_outside(s, {a});
    for (auto const& b : outside)
      for (auto const& b2 : outside) all.push_back({Kind::one, a, 0, b, b2, 0});
  }
  for (std::size_t a = 0; a < n; ++a)
    for (std::size_t c = 0; c < n; ++c) {
      if (a == c) continue;
      auto others = letters_outside(s, {a, c});
      for (auto const& b : others)
        for (auto const& d : others) all.push_back({Kind::two, a, c, b, d, 0});
    }
  for (std::size_t a = 0; a < n; ++a)
    for (std::size_t bf = 0; bf < n; ++bf)
      for (std::size_t c = 0; c < n; ++c) {
        if (a == bf || a == c || bf == c) continue;
        for (auto const& b : letters(s, bf))
          for (auto const& cl : letters(s, c)) all.push_back({Kind::three, a, 0, b, cl, 0});
      }
  auto const phis = semidirect_generators(s);
  for (std::size_t k = 0; k < phis.size(); ++k)
    for (std::size_t a = 0; a < n; ++a)
      for (auto const& b : letters_outside(s, {a})) all.push_back({Kind::semidirect, a, 0, b, {}, k});

  if (policy.samples && *policy.samples < all.size()) {
    Rng rng(policy.seed);
    std::shuffle(all.begin(), all.end(), rng);
    all.resize(*policy.samples);
  }

  auto pc = [&](std::size_t target, Syllable const& b) {
    return Automorphism::atom(sig, PartialConj{target, b});
  };

  auto results = parallel_map<SuiteReport>(all.size(), policy.jobs, [&](std::size_t idx) {
    SuiteReport r;
    auto const& in = all[idx];
    std::string const A = std::to_string(in.a);
    switch (in.kind) {
      case Kind::one: {
        auto lhs = compose(pc(in.a, in.b), pc(in.a, in.d));
        Word prod = s.multiply(Word{{in.d}}, Word{{in.b}});
        auto rhs = partial_conjugation(sig, in.a, prod);
        r.record("relation (1)",
                 "A=" + A + " b=" + letter_text(s, in.b) + " b'=" + letter_text(s, in.d),
                 lhs == rhs, "lhs " + lhs.format() + " rhs " + rhs.format());
        break;
      }
      case Kind::two: {
        auto x = pc(in.a, in.b), y = pc(in.c, in.d);
        auto lhs = compose(x, y), rhs = compose(y, x);
        r.record("relation (2)",
                 "A=" + A + " b=" + letter_text(s, in.b) + " C=" + std::to_string(in.c) +
                     " d=" + letter_text(s, in.d),
                 lhs == rhs, "(A,b)(C,d) != (C,d)(A,b)");
        break;
      }
      case Kind::three: {
        std::size_t const cf = in.d.factor;
        // (A,b)(C,b) where C is the factor of c.
        auto x = compose(pc(in.a, in.b), pc(cf, in.b));
        auto y = pc(in.a, in.d);
        auto comm = compose(compose(compose(x.inverse(), y.inverse()), x), y);
        r.record("relation (3)",
                 "A=" + A + " b=" + letter_text(s, in.b) + " c=" + letter_text(s, in.d),
                 comm.is_identity(), "commutator " + comm.format());
        break;
      }
      case Kind::semidirect: {
        auto const& atom = phis[in.phi];
        auto phi = Automorphism::atom(sig, atom);
        std::size_t a_phi = in.a;
        Syllable b_phi = in.b;
        if (auto const* p = std::get_if<PermAut>(&atom)) {
          a_phi = p->perm[in.a];
          std::size_t j = p->perm[in.b.factor];
          b_phi = s.is_finite(j) ? Syllable::finite(j, s.transport(in.b.factor, j, in.b.element))
                                 : Syllable::power(j, in.b.exponent);
        } else if (auto const* f = std::get_if<FactorAut>(&atom)) {
          if (f->factor == in.b.factor)
            b_phi = f->map ? Syllable::finite(f->factor, (*f->map)(in.b.element))
                           : Syllable::power(f->factor, in.b.exponent * f->sign);
        }
        auto lhs = compose(compose(phi.inverse(), pc(in.a, in.b)), phi);
        auto rhs = pc(a_phi, b_phi);
        r.record("semidirect",
                 format_atom(s, atom) + " A=" + A + " b=" + letter_text(s, in.b), lhs == rhs,
                 "lhs " + lhs.format() + " rhs " + rhs.format());
        break;
      }
    }
    return r;
  });

  SuiteReport report;
  report.suite = "relations";
  for (auto const& r : results) report.merge(r);
  report.finalize();
  return report;
}

}  // namespace fpa
