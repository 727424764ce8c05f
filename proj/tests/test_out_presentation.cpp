#include <doctest.h>

#include "fpa/out_presentation.hpp"

using namespace fpa;

TEST_CASE("Out tripod presentation") {
  for (auto name : {"C2", "C3", "S3"}) {
    auto r = out_presentation_suite(groups::builtin(name));
    INFO(name << " " << r.report.summary());
    for (auto const& f : r.report.failures) INFO(f.check << " " << f.instance << " " << f.detail);
    CHECK(r.report.ok());
    CHECK(r.undecided == 0);
    CHECK(r.max_witness <= 4);
    if (std::string(name) == "C2") {
      CHECK(r.modulo_inner == 3);  // only the swap rewrites, which hold up to Inn(a)
    } else {
      CHECK(r.modulo_inner > 0);
    }
  }
}

TEST_CASE("a wrong relation is caught") {
  // Dropping the inner factor automorphism from the swap rewrite leaves a non-inner difference.
  auto a = groups::builtin("S3");  // gamma is trivial for abelian groups
  auto sig = make_signature({FactorSpec::finite(a), FactorSpec::finite(a), FactorSpec::finite(a)});
  auto s12 = Automorphism::atom(sig, PermAut{{1, 0, 2}});
  auto lhs = conjugate(Automorphism::atom(sig, PartialConj{0, Syllable::finite(1, 1)}), s12);
  auto wrong = Automorphism::atom(sig, PartialConj{2, Syllable::finite(0, a->inverse(1))});
  CHECK(is_inner(lhs.then(wrong.inverse()), 6).status == InnerStatus::not_inner);
}
