#include <doctest.h>

#include <algorithm>
#include <numeric>

#include "fpa/tree_geometry.hpp"

using namespace fpa;

namespace {

// Vertices 1..5 of the path tree are stored as 0..4.
FiniteTree path5() { return FiniteTree::path(5); }

FiniteTree star(std::size_t arms, std::size_t len) {
  std::vector<std::pair<std::size_t, std::size_t>> edges;
  std::size_t n = 1;
  for (std::size_t a = 0; a < arms; ++a) {
    std::size_t prev = 0;
    for (std::size_t i = 0; i < len; ++i) {
      edges.emplace_back(prev, n);
      prev = n++;
    }
  }
  return FiniteTree(n, edges);
}

// Brute-force distance by repeated relaxation over the edge list.
std::vector<std::vector<std::size_t>> floyd(FiniteTree const& t) {
  std::size_t n = t.size();
  std::vector<std::vector<std::size_t>> d(n, std::vector<std::size_t>(n, n + 1));
  for (std::size_t v = 0; v < n; ++v) d[v][v] = 0;
  for (auto [u, v] : t.edges()) d[u][v] = d[v][u] = 1;
  for (std::size_t k = 0; k < n; ++k)
    for (std::size_t i = 0; i < n; ++i)
      for (std::size_t j = 0; j < n; ++j) d[i][j] = std::min(d[i][j], d[i][k] + d[k][j]);
  return d;
}

}  // namespace

TEST_CASE("construction") {
  CHECK_THROWS_AS(FiniteTree(3, {{0, 1}}), TreeError);
  CHECK_THROWS_AS(FiniteTree(4, {{0, 1}, {1, 0}, {2, 3}}), TreeError);
  auto t = FiniteTree::from_pruefer({3, 3, 3});
  CHECK(t.size() == 5);
  CHECK(t.neighbors(3).size() == 4);
  CHECK_THROWS_AS(Subtree(path5(), {0, 2}), TreeError);
  CHECK_THROWS_AS(Subtree(path5(), {}), TreeError);

  Rng rng(1);
  for (int trial = 0; trial < 100; ++trial) {
    auto r = FiniteTree::random(1 + uniform_index(rng, 40), rng);
    CHECK(r.edges().size() + 1 == r.size());
    auto d = floyd(r);
    for (std::size_t u = 0; u < r.size(); ++u)
      for (std::size_t v = 0; v < r.size(); ++v) {
        CHECK(r.distance(u, v) == d[u][v]);
        CHECK(r.path(u, v).size() == d[u][v] + 1);
      }
    auto s = random_subtree(r, rng, 0.2);
    CHECK_NOTHROW(Subtree(r, s.vertices()));
  }
}

TEST_CASE("nearest point, intersection, bridge") {
  auto t = path5();
  Subtree x(t, {0, 1}), y(t, {3, 4});
  CHECK(bridge(t, x, y) == std::vector<std::size_t>{1, 2, 3});
  CHECK(nearest_point(t, y, 0) == 3);
  CHECK(intersect(t, x, x) == x);
  CHECK_FALSE(intersect(t, x, y).has_value());
  CHECK_THROWS_AS(bridge(t, x, Subtree(t, {1, 2})), NotDisjoint);
}

TEST_CASE("property: nearest point and bridge against exhaustive scans") {
  Rng rng(2);
  for (int trial = 0; trial < 300; ++trial) {
    auto t = FiniteTree::random(2 + uniform_index(rng, 39), rng);
    auto x = random_subtree(t, rng, 0.3);
    auto y = random_subtree(t, rng, 0.3);
    for (std::size_t v = 0; v < t.size(); ++v) {
      auto p = nearest_point(t, y, v);
      std::size_t ties = 0;
      for (auto w : y.vertices()) {
        CHECK(t.distance(v, p) <= t.distance(v, w));
        ties += t.distance(v, w) == t.distance(v, p);
      }
      CHECK(ties == 1);
    }
    auto c = intersect(t, x, y);
    if (c) {
      for (auto v : c->vertices()) CHECK((x.contains(v) && y.contains(v)));
      continue;
    }
    auto b = bridge(t, x, y);
    std::size_t best = t.size();
    for (auto u : x.vertices())
      for (auto w : y.vertices()) best = std::min(best, t.distance(u, w));
    CHECK(b.size() == best + 1);
    CHECK(b.front() == nearest_point(t, x, b.back()));
    CHECK(b.back() == nearest_point(t, y, b.front()));
    for (std::size_t i = 1; i + 1 < b.size(); ++i) CHECK_FALSE((x.contains(b[i]) || y.contains(b[i])));
  }
}

TEST_CASE("Helly") {
  auto t = path5();
  auto vac = check_helly(t, {Subtree(t, {0}), Subtree(t, {4})});
  CHECK_FALSE(vac.hypothesis);
  CHECK(vac.holds);
  REQUIRE(vac.pair);
  CHECK(*vac.pair == std::pair<std::size_t, std::size_t>{0, 1});

  auto s = star(3, 2);
  std::vector<Subtree> arms;
  for (std::size_t a = 0; a < 3; ++a) arms.emplace_back(s, std::vector<std::size_t>{0, 1 + 2 * a, 2 + 2 * a});
  auto r = check_helly(s, arms);
  CHECK(r.hypothesis);
  CHECK(r.holds);
  CHECK(r.common == 0u);
}

TEST_CASE("nested intersection and bridge lemma examples") {
  auto t = path5();
  std::vector<std::size_t> all(5);
  std::iota(all.begin(), all.end(), 0);
  auto whole = check_nested_intersection(t, {Subtree(t, all)}, Subtree(t, {2}));
  CHECK(whole.hypothesis);
  CHECK(whole.holds);
  auto skipped = check_nested_intersection(t, {Subtree(t, {0, 1}), Subtree(t, {1, 2})}, Subtree(t, {3, 4}));
  CHECK_FALSE(skipped.hypothesis);

  Subtree s(t, {1, 2, 3});
  CHECK(check_bridge_lemma(t, s, s, Subtree(t, {0, 1}), Subtree(t, {3, 4})).holds);
  CHECK_FALSE(check_bridge_lemma(t, Subtree(t, {0}), Subtree(t, {4}), Subtree(t, {0}), Subtree(t, {2})).hypothesis);
}

TEST_CASE("commuting elliptics on a finite tree") {
  auto s = star(3, 2);
  // Rotation of the arms and its square commute and fix only the centre.
  TreeMap rot{0, 3, 4, 5, 6, 1, 2};
  TreeMap rot2(7);
  for (std::size_t v = 0; v < 7; ++v) rot2[v] = rot[rot[v]];
  auto r = check_commuting_elliptics(s, {rot}, {rot2});
  CHECK(r.hypothesis);
  CHECK(r.common == 0u);
  auto same = check_commuting_elliptics(s, {rot}, {rot});
  CHECK(same.holds);
  // A swap of two arms does not commute with the rotation.
  TreeMap swap{0, 3, 4, 1, 2, 5, 6};
  CHECK_THROWS_AS(check_commuting_elliptics(s, {rot}, {swap}), NotCommuting);
}

TEST_CASE("commuting elliptics on a Bass-Serre tree") {
  // C2xC2 * C3 as a single edge: elements of the C2xC2 vertex group commute.
  auto sig = parse_signature("C2xC2,C3");
  FreeProductGraph fp(sig, Shape::single_edge);
  BassSerreTree t(fp.graph(), fp.base());
  auto const& g = fp.graph();
  Rng rng(5);
  for (int trial = 0; trial < 200; ++trial) {
    auto conj = fp.embed(random_word_up_to(*sig, 4, rng));
    auto x = g.trivial(0, Element(1 + uniform_index(rng, 3)));
    auto y = g.trivial(0, Element(uniform_index(rng, 4)));
    auto cx = g.reduce(g.concat(g.concat(g.inverse(conj), x), conj));
    auto cy = g.reduce(g.concat(g.concat(g.inverse(conj), y), conj));
    auto ball = t.ball(t.act(t.base_vertex(), conj), 2);
    auto r = check_commuting_elliptics(t, ball, {cx}, {cy});
    CHECK(r.hypothesis);
    CHECK(r.holds);
    REQUIRE(r.common);
    CHECK(t.act(ball.vertices[*r.common], cx) == ball.vertices[*r.common]);
    CHECK(t.act(ball.vertices[*r.common], cy) == ball.vertices[*r.common]);
  }
  // Generators from different factors do not commute.
  auto a = fp.embed(sig->parse("f0.1"));
  auto c = fp.embed(sig->parse("f1.1"));
  CHECK_THROWS_AS(check_commuting_elliptics(t, t.ball(t.base_vertex(), 2), {a}, {c}), NotCommuting);
}

TEST_CASE("conditioned trials, seed 0") {
  TrialOptions opt;
  for (auto l : {Lemma::helly, Lemma::nested, Lemma::bridge, Lemma::commuting}) {
    auto rep = run_lemma_trials(l, opt);
    INFO(rep.summary());
    CHECK(rep.instances == 1000);
    CHECK(rep.ok());
  }
  auto a = run_all_lemma_trials({50, 3, 40, 200000});
  auto b = run_all_lemma_trials({50, 3, 40, 200000});
  CHECK(a.to_json() == b.to_json());
  CHECK(a.instances == 200);
}
