#include "fpa/out_presentation.hpp"

#include <algorithm>

namespace fpa {

namespace {

class Checker {
 public:
  Checker(SignaturePtr sig, std::size_t bound, OutSuiteResult& out)
      : sig_(std::move(sig)), bound_(bound), out_(out) {}

  Automorphism pc(std::size_t target, std::size_t factor, Element x) const {
    return Automorphism::atom(sig_, PartialConj{target, Syllable::finite(factor, x)});
  }
  Automorphism gamma(std::size_t factor, Element x) const {
    return Automorphism::atom(sig_, InnerFactor{factor, x});
  }
  Automorphism fact(std::size_t factor, GroupMap const& m) const {
    return Automorphism::atom(sig_, FactorAut{factor, m, 1});
  }
  Automorphism perm(std::vector<std::size_t> p) const { return Automorphism::atom(sig_, PermAut{std::move(p)}); }
  Automorphism id() const { return Automorphism::identity(sig_); }

  /// lhs = rhs in Out(G).
  void relation(std::string const& family, std::string const& key, Automorphism const& lhs,
                Automorphism const& rhs) {
    if (lhs.equals(rhs)) {
      ++out_.exact;
      out_.report.record(family, key, true);
      return;
    }
    auto r = is_inner(lhs.then(rhs.inverse()), bound_);
    if (r.status == InnerStatus::inner) ++out_.modulo_inner;
    if (r.status == InnerStatus::undecided) {
      ++out_.undecided;
      out_.report.record("undecided_inner", family + " " + key, false, "no witness within the bound");
      return;
    }
    out_.report.record(family, key, r.status == InnerStatus::inner,
                       lhs.format() + " vs " + rhs.format() + " differ by a non-inner automorphism");
  }

  /// x lies in Inn(G); records the witness length.
  void inner(std::string const& family, std::string const& key, Automorphism const& x) {
    auto r = is_inner(x, bound_);
    if (r.status == InnerStatus::undecided) {
      ++out_.undecided;
      out_.report.record("undecided_inner", family + " " + key, false, "no witness within the bound");
      return;
    }
    bool ok = r.status == InnerStatus::inner && Automorphism::inner(sig_, r.witness).equals(x);
    if (ok) out_.max_witness = std::max(out_.max_witness, r.witness.size());
    out_.report.record(family, key, ok, ok ? sig_->format(r.witness) : x.format());
  }

  void exact(std::string const& family, std::string const& key, Automorphism const& lhs,
             Automorphism const& rhs) {
    out_.report.record(family, key, lhs.equals(rhs), lhs.format() + " vs " + rhs.format());
  }

 private:
  SignaturePtr sig_;
  std::size_t bound_;
  OutSuiteResult& out_;
};

}  // namespace

OutSuiteResult out_presentation_suite(GroupPtr const& a, std::size_t bound) {
  auto sig = make_signature({FactorSpec::finite(a), FactorSpec::finite(a), FactorSpec::finite(a)});
  OutSuiteResult out;
  out.report.suite = "out-tripod " + sig->describe();
  Checker c(sig, bound, out);
  auto const& g = *a;
  auto const n = static_cast<Element>(g.order());
  auto auts = automorphism_group(a);
  auts.erase(auts.begin());
  constexpr std::size_t A = 0, B = 1, C = 2;
  // The generating families (A,b), (B,c), (C,a) as (target, conjugating factor).
  std::pair<std::size_t, std::size_t> const fam[3] = {{A, B}, {B, C}, {C, A}};
  auto const s123 = c.perm({1, 2, 0});
  auto const s12 = c.perm({1, 0, 2});
  auto key = [](auto... parts) {
    std::string s;
    ((s += (s.empty() ? "" : ",") + std::to_string(parts)), ...);
    return s;
  };

  // (T,s)(T,s') = (T,s's)
  for (auto [t, f] : fam)
    for (Element x = 1; x < n; ++x)
      for (Element y = 1; y < n; ++y) {
        Element yx = g.mul(y, x);
        c.relation("product", key(t, x, y), c.pc(t, f, x).then(c.pc(t, f, y)),
                   yx == 0 ? c.id() : c.pc(t, f, yx));
      }

  // Factor automorphisms form Aut(A)^3.
  for (std::size_t i = 0; i < 3; ++i)
    for (std::size_t j = 0; j < 3; ++j)
      for (std::size_t p = 0; p < auts.size(); ++p)
        for (std::size_t q = 0; q < auts.size(); ++q) {
          auto lhs = c.fact(i, auts[p]).then(c.fact(j, auts[q]));
          if (i == j) {
            auto m = auts[p].then(auts[q]);
            c.relation("factor_auts", key(i, j, p, q), lhs, m == GroupMap::identity(a) ? c.id() : c.fact(i, m));
          } else {
            c.relation("factor_auts", key(i, j, p, q), lhs, c.fact(j, auts[q]).then(c.fact(i, auts[p])));
          }
        }

  c.relation("symmetric_group", "s123^3", s123.then(s123).then(s123), c.id());
  c.relation("symmetric_group", "s12^2", s12.then(s12), c.id());
  auto r = s123.then(s12);
  c.relation("symmetric_group", "(s123 s12)^2", r.then(r), c.id());

  // phi^-1 (T,s) phi = (T, s phi)
  for (std::size_t i = 0; i < 3; ++i)
    for (std::size_t p = 0; p < auts.size(); ++p)
      for (auto [t, f] : fam)
        for (Element x = 1; x < n; ++x) {
          auto phi = c.fact(i, auts[p]);
          Element xphi = f == i ? auts[p](x) : x;
          c.relation("factor_action", key(i, p, t, x), conjugate(c.pc(t, f, x), phi), c.pc(t, f, xphi));
        }

  // The swap s12 rewritten through the eliminated generators.
  for (Element x = 1; x < n; ++x) {
    Element xi = g.inverse(x);
    c.relation("swap_on_A", key(x), conjugate(c.pc(A, B, x), s12), c.gamma(A, xi).then(c.pc(C, A, xi)));
    c.relation("swap_on_B", key(x), conjugate(c.pc(B, C, x), s12), c.gamma(C, xi).then(c.pc(B, C, xi)));
    c.relation("swap_on_C", key(x), conjugate(c.pc(C, A, x), s12), c.gamma(B, xi).then(c.pc(A, B, xi)));

    // Elementwise: s12^-1 (A,b) s12 = (B,a), and (B,a) = Inn(a) gamma(a^-1)(C,a^-1).
    c.exact("swap_elementwise", "A," + key(x), conjugate(c.pc(A, B, x), s12), c.pc(B, A, x));
    c.exact("swap_elementwise", "B," + key(x), conjugate(c.pc(B, C, x), s12), c.pc(A, C, x));
    c.exact("swap_elementwise", "C," + key(x), conjugate(c.pc(C, A, x), s12), c.pc(C, B, x));
    for (auto [t, f, o] : {std::tuple{B, A, C}, {A, C, B}, {C, B, A}}) {
      auto inn = Automorphism::inner(sig, sig->letter(f, x));
      c.exact("swap_elementwise", "inner," + key(t, x), c.pc(t, f, x),
              inn.then(c.gamma(f, xi)).then(c.pc(o, f, xi)));
    }

    // s123^-1 (A,b) s123 = (B,c) and its rotations.
    c.relation("rotation", key(A, x), conjugate(c.pc(A, B, x), s123), c.pc(B, C, x));
    c.relation("rotation", key(B, x), conjugate(c.pc(B, C, x), s123), c.pc(C, A, x));
    c.relation("rotation", key(C, x), conjugate(c.pc(C, A, x), s123), c.pc(A, B, x));
  }

  // sigma^-1 phi sigma = phi'
  std::vector<std::size_t> const p123{1, 2, 0}, p12{1, 0, 2};
  for (auto const* pm : {&p123, &p12})
    for (std::size_t i = 0; i < 3; ++i)
      for (std::size_t p = 0; p < auts.size(); ++p) {
        auto sigma = c.perm(*pm);
        c.relation("wreath", key(pm == &p12, i, p), conjugate(c.fact(i, auts[p]), sigma),
                   c.fact((*pm)[i], auts[p]));
      }

  // Eliminated relations, after substituting (A,c) = gamma(c^-1)(B,c^-1).
  for (Element x = 1; x < n; ++x)
    for (Element y = 1; y < n; ++y) {
      auto sub = c.gamma(C, g.inverse(x)).then(c.pc(B, C, g.inverse(x)));
      c.inner("substitution", key(x), c.pc(A, C, x).then(sub.inverse()));
      c.inner("eliminated_commutator", key(x, y), commutator(sub, c.pc(B, C, y)));
      c.inner("eliminated_product_commutator", key(y, x), commutator(c.gamma(B, g.inverse(y)), sub));
      // The unsubstituted forms hold exactly in Aut(G).
      c.exact("eliminated_commutator_aut", key(x, y), commutator(c.pc(A, C, x), c.pc(B, C, y)), c.id());
      c.exact("eliminated_product_commutator_aut", key(y, x),
              commutator(c.pc(A, B, y).then(c.pc(C, B, y)), c.pc(A, C, x)), c.id());
    }

  out.report.finalize();
  return out;
}

}  // namespace fpa
