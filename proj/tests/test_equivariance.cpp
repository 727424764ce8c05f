#include <doctest.h>

#include <algorithm>

#include "fpa/equivariance.hpp"

using namespace fpa;

TEST_CASE("coset words") {
  auto sig = parse_signature("C2,C3");
  FreeProductGraph fp(sig, Shape::single_edge);
  BassSerreTree t(fp.graph(), fp.base());
  InducedIsometry f(fp, t, Automorphism::identity(sig));
  for (auto const& u : t.ball(t.base_vertex(), 4).vertices) {
    auto y = f.coset_word(u);
    CHECK(t.act(t.standard_vertex(u.type), fp.embed(y)) == u);
    CHECK(f(u) == u);
  }
}

TEST_CASE("inner automorphisms act by their conjugator") {
  auto sig = parse_signature("C2,C3,S3");
  FreeProductGraph fp(sig, Shape::star);
  BassSerreTree t(fp.graph(), fp.base());
  auto ball = t.ball(t.base_vertex(), 3);
  auto r = check_inner_action(fp, t, sig->parse("f0.1 f2.3 f1.1"), ball);
  CHECK(r.ok());
  CHECK(r.instances == ball.size());
}

TEST_CASE("swap on C2*C2") {
  auto sig = parse_signature("C2,C2");
  FreeProductGraph fp(sig, Shape::single_edge);
  BassSerreTree t(fp.graph(), fp.base());
  auto swap = Automorphism::atom(sig, PermAut{{1, 0}});
  auto plain = equivariance_check(fp, t, swap, t.ball(t.base_vertex(), 3));
  CHECK_FALSE(plain.ok());
  CHECK(std::all_of(plain.failures.begin(), plain.failures.end(),
                    [](Failure const& f) { return f.check == "edge_inversion"; }));
  CHECK(equivariance_check(fp, t, swap, t.ball(t.base_vertex(), 3, true)).ok());
}

TEST_CASE("partial conjugation on a three-factor star is refused") {
  auto sig = parse_signature("C2,C3,C3");
  FreeProductGraph fp(sig, Shape::star);
  BassSerreTree t(fp.graph(), fp.base());
  auto pc = parse_automorphism(sig, "pc(0,1.1)");
  auto r = equivariance_check(fp, t, pc, t.ball(t.base_vertex(), 2));
  CHECK_FALSE(r.ok());
  CHECK(r.failures.front().check == "length_preserving");
}

TEST_CASE("equivariance battery") {
  auto r = equivariance_suite();
  INFO(r.summary());
  for (auto const& f : r.failures) INFO(f.check << " " << f.instance << " " << f.detail);
  CHECK(r.ok());
}
