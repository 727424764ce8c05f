#include <doctest.h>

#include "fpa/relations.hpp"

using namespace fpa;

TEST_CASE("relation suite passes exhaustively on C2*C3*S3") {
  auto sig = parse_signature("C2,C3,S3");
  auto report = verify_relation_suite(sig, {});
  CHECK(report.instances == 284);  // 94 + 60 + 34 + 96
  CHECK(report.ok());
  for (auto const& f : report.failures) MESSAGE(f.check << " " << f.instance);
}

TEST_CASE("relation suite passes on 2000 samples of S3^4") {
  auto sig = parse_signature("S3,S3,S3,S3");
  auto report = verify_relation_suite(sig, {2000, 0, 2});
  CHECK(report.instances == 2000);
  CHECK(report.ok());
}

TEST_CASE("relation suite with Z factors") {
  auto sig = parse_signature("C2,C3,Z,Z");
  auto report = verify_relation_suite(sig, {});
  CHECK(report.ok());
}

TEST_CASE("reversed composition is caught by relation (1)") {
  auto sig = parse_signature("C2,C3,S3");
  Composer reversed = [](Automorphism const& a, Automorphism const& b) { return b.then(a); };
  auto report = verify_relation_suite(sig, {}, reversed);
  REQUIRE_FALSE(report.ok());
  bool saw_one = false;
  for (auto const& f : report.failures) saw_one = saw_one || f.check == "relation (1)";
  CHECK(saw_one);
}

TEST_CASE("reports are deterministic across job counts") {
  auto sig = parse_signature("C3,C3,C2");
  Composer reversed = [](Automorphism const& a, Automorphism const& b) { return b.then(a); };
  auto one = verify_relation_suite(sig, {500, 4, 1}, reversed);
  auto four = verify_relation_suite(sig, {500, 4, 4}, reversed);
  CHECK(one.to_json() == four.to_json());
}

TEST_CASE("partial conjugation by a word") {
  auto sig = parse_signature("C2,C3,C2");
  auto w = sig->parse("f2.1 f1.1");  // (A,b)(A,c) = (A,cb)
  auto pcw = partial_conjugation(sig, 0, w);
  auto atoms = Automorphism::from_atoms(
      sig, {PartialConj{0, Syllable::finite(1, 1)}, PartialConj{0, Syllable::finite(2, 1)}});
  CHECK(pcw == atoms);
}
