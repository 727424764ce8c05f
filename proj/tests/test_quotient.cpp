#include <doctest.h>

#include "fpa/quotient.hpp"
#include "fpa/relations.hpp"

using namespace fpa;

TEST_CASE("quotient words") {
  auto sig = parse_signature("C2,C3,C2");
  auto q = CharacteristicQuotient::kill_class(sig, 1);
  CHECK(q.characteristic());
  CHECK(q.killed() == std::vector<std::size_t>{1});
  CHECK(q.target()->describe() == "C2*C2");
  CHECK(q.quotient_word(sig->parse("f1.1 f1.2")).empty());
  CHECK(q.quotient_word(sig->parse("f1.1")).empty());
  auto const& t = *q.target();
  CHECK(q.quotient_word(sig->parse("f0.1 f2.1")) == t.parse("f0.1 f1.1"));
  // a k a with k killed collapses to a a = 1 in C2.
  CHECK(q.quotient_word(sig->parse("f0.1 f1.1 f0.1")).empty());

  auto c3 = parse_signature("C3,C2,C2");
  auto q3 = CharacteristicQuotient::kill_class(c3, 1);
  CHECK(q3.quotient_word(c3->parse("f0.1 f1.1 f0.1")) == q3.target()->parse("f0.2"));
  CHECK_FALSE(CharacteristicQuotient(sig, {0}).characteristic());
  CHECK_THROWS_AS(CharacteristicQuotient(sig, {0, 1, 2}), QuotientError);
}

TEST_CASE("quotient automorphisms") {
  auto sig = parse_signature("C2,C2,C3,C3");
  auto q = no_prop_t_quotient(sig);
  CHECK(q.target()->describe() == "C2*C2");
  auto const& t = q.target();
  // (A,b) with b in a killed C3 maps to the identity.
  CHECK(q.quotient_aut(parse_automorphism(sig, "pc(0,2.1)")).is_identity());
  CHECK(q.quotient_aut(parse_automorphism(sig, "pc(0,1.1)")) == parse_automorphism(t, "pc(0,1.1)"));
  CHECK(q.quotient_aut(parse_automorphism(sig, "perm((2 3))")).is_identity());
  CHECK(q.quotient_aut(parse_automorphism(sig, "perm((0 1))")) == parse_automorphism(t, "perm((0 1))"));

  auto z = parse_signature("C2,Z,C3");
  CharacteristicQuotient qz(z, {1});
  CHECK(qz.quotient_aut(parse_automorphism(z, "fa(1,-1)")).is_identity());
  CHECK_THROWS_AS(qz.quotient_aut(parse_automorphism(z, "tv(1,0.1)")), NotProjectable);
  CHECK_THROWS_AS(qz.induced_aut(parse_automorphism(z, "tv(1,2.1)")), NotProjectable);
  CharacteristicQuotient keep_z(z, {2});
  CHECK(keep_z.quotient_aut(parse_automorphism(z, "tv(1,2.1)")).is_identity());
  CHECK(keep_z.quotient_aut(parse_automorphism(z, "tv(1,0.1)")) ==
        parse_automorphism(keep_z.target(), "tv(1,0.1)"));

  // Killing one of two isomorphic factors is not characteristic: the swap moves N.
  auto c2 = parse_signature("C2,C2,C3");
  CharacteristicQuotient partial(c2, {0});
  CHECK_THROWS_AS(partial.quotient_aut(parse_automorphism(c2, "perm((0 1))")), NotProjectable);
  CHECK_THROWS_AS(partial.induced_aut(parse_automorphism(c2, "perm((0 1))")), NotProjectable);
  CHECK_THROWS_AS(no_prop_t_quotient(parse_signature("C2,C3")), TooFewFactors);
}

TEST_CASE("property: quotient suites") {
  for (auto const* text : {"C2,C2,C3,C3", "C2,C3,S3", "S3,S3,S3", "C2,C2,C2,C2"}) {
    auto sig = parse_signature(text);
    auto q = no_prop_t_quotient(sig);
    auto r = verify_quotient(q, 100, 0);
    INFO(r.summary());
    CHECK(r.ok());
    auto w = verify_quotient_word(q, 500, 1);
    CHECK(w.ok());
    CHECK(w.instances == 500);
  }
  auto z = parse_signature("C2,Z,C3");
  auto r = verify_quotient(CharacteristicQuotient(z, {1}), 100, 2);
  INFO(r.summary());
  CHECK(r.ok());
}
