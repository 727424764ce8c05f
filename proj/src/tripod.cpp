#include "fpa/tripod.hpp"

#include <algorithm>
#include <string>

#include "fpa/bstree.hpp"

namespace fpa {

TripodResult tripod_action_geometry(GroupPtr const& a, std::size_t radius) {
  auto sig = make_signature({FactorSpec::finite(a), FactorSpec::finite(a), FactorSpec::finite(a)});
  FreeProductGraph fp(sig, Shape::star);
  BassSerreTree t(fp.graph(), fp.base());
  auto const ball = t.ball(t.base_vertex(), radius);
  auto const base = t.base_vertex();
  TripodResult out;
  auto& rep = out.report;
  rep.suite = "tripod-geom " + sig->describe();

  TreeVertex const v[3] = {t.standard_vertex(1), t.standard_vertex(2), t.standard_vertex(3)};
  std::size_t const pairs[3][2] = {{0, 1}, {1, 2}, {0, 2}};
  for (std::size_t p = 0; p < 3; ++p) {
    auto const& x = v[pairs[p][0]];
    auto const& y = v[pairs[p][1]];
    out.arm_distance[p] = t.distance(x, y);
    auto key = "v" + std::to_string(pairs[p][0] + 1) + "v" + std::to_string(pairs[p][1] + 1);
    rep.record("arm_distance", key, out.arm_distance[p] == 2, std::to_string(out.arm_distance[p]));
    auto geo = t.geodesic(x, y);
    rep.record("midpoint", key, geo.size() == 3 && geo[1] == base, "midpoint is not the base vertex");
  }

  auto const n = static_cast<Element>(a->order());
  for (std::size_t i = 0; i < 3; ++i) {
    // The whole factor fixes only v_i.
    std::vector<GroupoidPath> gens;
    for (Element e = 1; e < n; ++e) gens.push_back(fp.embed(Syllable::finite(i, e)));
    auto fix = fixed_set_subgroup(t, gens, ball);
    rep.record("factor_fixed_set", std::to_string(i), fix.size() == 1 && ball.vertices[fix[0]] == v[i],
               std::to_string(fix.size()) + " fixed vertices");
    for (Element e = 1; e < n; ++e) {
      auto f = fixed_set(t, gens[e - 1], ball);
      rep.record("element_fixed_set", std::to_string(i) + "," + std::to_string(e),
                 f.size() == 1 && ball.vertices[f[0]] == v[i], std::to_string(f.size()) + " fixed vertices");
    }
  }

  auto const& g = fp.graph();
  for (Element x = 1; x < n; ++x)
    for (Element y = 1; y < n; ++y) {
      auto key = std::to_string(x) + "," + std::to_string(y);
      auto h1 = fp.embed(Syllable::finite(0, x));
      auto h2 = fp.embed(Syllable::finite(1, y));
      auto h12 = g.reduce(g.concat(h1, h2));
      auto h21 = g.reduce(g.concat(h2, h1));
      std::size_t best = SIZE_MAX;
      bool differ = false;
      for (auto const& u : ball.vertices) {
        auto img = t.act(u, h12);
        best = std::min(best, t.distance(u, img));
        differ = differ || !(img == t.act(u, h21));
      }
      out.product_length = best;
      rep.record("product_length", key, best == 4 && best == 2 * out.arm_distance[0], std::to_string(best));
      rep.record("symbolic_length", key, g.translation_length(h12) == best);
      rep.record("noncommuting", key, differ);
      // Both products move the base by 4, to different vertices.
      auto w12 = t.act(base, h12), w21 = t.act(base, h21);
      rep.record("base_images", key, t.distance(base, w12) == 4 && t.distance(base, w21) == 4 && !(w12 == w21));
    }
  rep.finalize();
  return out;
}

}  // namespace fpa
