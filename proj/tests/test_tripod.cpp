#include <doctest.h>

#include "fpa/tripod.hpp"

using namespace fpa;

TEST_CASE("tripod geometry") {
  for (auto name : {"C2", "C3", "S3"}) {
    auto r = tripod_action_geometry(groups::builtin(name));
    INFO(name << " " << r.report.summary());
    for (auto const& f : r.report.failures) INFO(f.check << " " << f.instance << " " << f.detail);
    CHECK(r.report.ok());
    CHECK(r.arm_distance[0] == 2);
    CHECK(r.arm_distance[1] == 2);
    CHECK(r.arm_distance[2] == 2);
    CHECK(r.product_length == 4);
  }
}
