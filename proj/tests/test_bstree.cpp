#include <doctest.h>

#include <algorithm>
#include <queue>
#include <set>

#include "fpa/bstree.hpp"
#include "fpa/random_words.hpp"

using namespace fpa;

namespace {

GraphOfGroups amalgam() {
  return GraphOfGroups::load(std::string(FPA_DATA_DIR) + "/gog/amalgam_hnn.json");
}

bool connected_subset(Ball const& b, std::vector<std::size_t> const& subset) {
  if (subset.empty()) return true;
  std::set<std::size_t> in(subset.begin(), subset.end()), seen{subset[0]};
  std::queue<std::size_t> q;
  q.push(subset[0]);
  while (!q.empty()) {
    auto v = q.front();
    q.pop();
    for (auto w : b.adjacency[v])
      if (in.count(w) && seen.insert(w).second) q.push(w);
  }
  return seen.size() == in.size();
}

// Random loop at the base of an arbitrary graph: walk, then return along the spanning path.
GroupoidPath random_loop(BassSerreTree const& t, std::size_t steps, Rng& rng) {
  auto const& g = t.graph();
  GroupoidPath p = g.trivial(t.base(), Element(rng() % g.vertex_group(t.base())->order()));
  std::size_t v = t.base();
  for (std::size_t i = 0; i < steps; ++i) {
    std::vector<std::size_t> out;
    for (std::size_t e = 0; e < g.edge_count(); ++e)
      if (g.edge(e).from == v) out.push_back(e);
    auto e = out[rng() % out.size()];
    v = g.edge(e).to;
    p.edges.push_back(e);
    p.elements.push_back(Element(rng() % g.vertex_group(v)->order()));
  }
  return g.reduce(g.concat(p, t.standard_vertex(v).path));
}

}  // namespace

TEST_CASE("vertex degrees") {
  auto hk = parse_signature("C2,C3");
  FreeProductGraph single(hk, Shape::single_edge);
  BassSerreTree t(single.graph(), single.base());
  auto base = t.base_vertex();
  CHECK(t.neighbors(base).size() == 2);
  CHECK(t.neighbors(t.standard_vertex(1)).size() == 3);
  auto b0 = t.ball(base, 0);
  CHECK(b0.size() == 1);
  CHECK(b0.edges.empty());

  auto abc = parse_signature("C2,C3,C2");
  FreeProductGraph star(abc, Shape::star);
  BassSerreTree ts(star.graph(), star.base());
  CHECK(ts.neighbors(ts.base_vertex()).size() == 3);

  // Nontrivial edge groups: degree is the sum of indices.
  BassSerreTree ta(amalgam(), 0);
  CHECK(ta.neighbors(ta.base_vertex()).size() == 3 + 2 + 2);  // [S3:C2] + 2 * [S3:C3]
  CHECK(ta.neighbors(ta.standard_vertex(1)).size() == 3);     // [C6:C2]
}

TEST_CASE("balls are trees") {
  for (int which = 0; which < 3; ++which) {
    std::optional<BassSerreTree> t;
    if (which == 0) t.emplace(amalgam(), 0);
    if (which == 1) {
      FreeProductGraph fp(parse_signature("C2,C3,S3"), Shape::star);
      t.emplace(fp.graph(), fp.base());
    }
    if (which == 2) {
      FreeProductGraph fp(parse_signature("C3,Z"), Shape::loop_for_z);
      t.emplace(fp.graph(), fp.base());
    }
    auto b = t->ball(t->base_vertex(), 4);
    CHECK(b.edges.size() + 1 == b.size());
    std::vector<std::size_t> all(b.size());
    for (std::size_t i = 0; i < b.size(); ++i) all[i] = i;
    CHECK(connected_subset(b, all));
    for (std::size_t i = 0; i < b.size(); ++i) {
      CHECK(t->distance(b.vertices[0], b.vertices[i]) == b.depth[i]);
      if (b.depth[i] < 4) CHECK(b.adjacency[i].size() == t->neighbors(b.vertices[i]).size());
    }
    // Pairwise distinct by the reduction test, not only by canonical key.
    for (std::size_t i = 0; i < std::min<std::size_t>(b.size(), 60); ++i)
      for (std::size_t j = 0; j < i; ++j) CHECK_FALSE(t->same_by_reduction(b.vertices[i], b.vertices[j]));
  }
}

TEST_CASE("canonical form agrees with equality by reduction") {
  Rng rng(21);
  BassSerreTree t(amalgam(), 0);
  auto const& g = t.graph();
  auto b = t.ball(t.base_vertex(), 3);
  for (int trial = 0; trial < 300; ++trial) {
    auto const& u = b.vertices[rng() % b.size()];
    // Re-represent the coset: left-multiply by G_w, then insert a cancelling pair.
    GroupoidPath p = u.path;
    p.elements[0] = Element(rng() % g.vertex_group(u.type)->order());
    if (!p.edges.empty()) {
      std::size_t i = rng() % p.edges.size();
      auto e = p.edges[i];
      auto const& target = *g.vertex_group(g.edge(e).to);
      auto const& source = *g.vertex_group(g.edge(e).from);
      Element y = g.edge(e).alpha(Element(rng() % g.edge(e).group->order()));
      // g_i e g_{i+1} = (g_i transfer(y)) e (y^-1 g_{i+1})
      p.elements[i] = source.mul(p.elements[i], g.transfer(e, y));
      p.elements[i + 1] = target.mul(target.inverse(y), p.elements[i + 1]);
    }
    auto v = t.make(u.type, p);
    CHECK(v == u);
    CHECK(t.same_by_reduction(u, v));
    auto const& w = b.vertices[rng() % b.size()];
    CHECK((w == u) == t.same_by_reduction(w, u));
  }
}

TEST_CASE("right action") {
  Rng rng(4);
  auto hk = parse_signature("C2,C3");
  FreeProductGraph fp(hk, Shape::single_edge);
  BassSerreTree t(fp.graph(), fp.base());
  auto base = t.base_vertex();
  CHECK(t.act(base, fp.embed(Word{})) == base);
  CHECK(t.act(base, fp.embed(hk->parse("f0.1"))) == base);
  CHECK(t.distance(base, t.act(base, fp.embed(hk->parse("f0.1 f1.1")))) == 2);
  CHECK_THROWS_AS(t.act(base, GroupoidPath{1, {0}, {}}), BaseMismatch);

  BassSerreTree ta(amalgam(), 0);
  auto b = ta.ball(ta.base_vertex(), 3);
  for (int trial = 0; trial < 200; ++trial) {
    auto g = random_loop(ta, rng() % 5, rng);
    auto h = random_loop(ta, rng() % 5, rng);
    auto const& u = b.vertices[rng() % b.size()];
    auto const& v = b.vertices[rng() % b.size()];
    CHECK(ta.act(ta.act(u, g), h) == ta.act(u, ta.graph().reduce(ta.graph().concat(g, h))));
    CHECK(ta.distance(u, v) == ta.distance(ta.act(u, g), ta.act(v, g)));
    CHECK(ta.distance(u, v) == ta.distance(v, u));
  }
}

TEST_CASE("geodesics") {
  Rng rng(8);
  BassSerreTree t(amalgam(), 0);
  auto b = t.ball(t.base_vertex(), 3);
  for (int trial = 0; trial < 200; ++trial) {
    auto const& u = b.vertices[rng() % b.size()];
    auto const& v = b.vertices[rng() % b.size()];
    auto path = t.geodesic(u, v);
    REQUIRE(path.size() == t.distance(u, v) + 1);
    CHECK(path.front() == u);
    CHECK(path.back() == v);
    for (std::size_t i = 1; i < path.size(); ++i) CHECK(t.distance(path[i - 1], path[i]) == 1);
  }
}

TEST_CASE("fixed sets") {
  auto hk = parse_signature("C2,C3");
  FreeProductGraph fp(hk, Shape::single_edge);
  BassSerreTree t(fp.graph(), fp.base());
  auto b = t.ball(t.base_vertex(), 2);
  CHECK(fixed_set(t, fp.embed(Word{}), b).size() == b.size());
  CHECK(fixed_set(t, fp.embed(hk->parse("f0.1")), b) == std::vector<std::size_t>{0});
  CHECK(fixed_set(t, fp.embed(hk->parse("f0.1 f1.1")), b).empty());
  auto k = fp.embed(hk->parse("f1.1"));
  auto fk = fixed_set(t, k, b);
  REQUIRE(fk.size() == 1);
  CHECK(b.vertices[fk[0]] == t.standard_vertex(1));
  CHECK(fixed_set_subgroup(t, {fp.embed(hk->parse("f0.1")), k}, b).empty());

  Rng rng(31);
  BassSerreTree ta(amalgam(), 0);
  auto const& g = ta.graph();
  auto big = ta.ball(ta.base_vertex(), 4);
  for (int trial = 0; trial < 40; ++trial) {
    // Elliptic: conjugate of a vertex group element.
    auto h = random_loop(ta, rng() % 4, rng);
    auto x = g.trivial(0, Element(rng() % 6));
    auto ell = g.reduce(g.concat(g.concat(g.inverse(h), x), h));
    auto f = fixed_set(ta, ell, big);
    CHECK(connected_subset(big, f));
    for (std::size_t i = 0; i < big.size(); ++i) {
      bool fixed = std::binary_search(f.begin(), f.end(), i);
      auto back = ta.act(big.vertices[i], g.inverse(h));
      CHECK(fixed == (ta.act(back, x) == back));
    }
  }
}

TEST_CASE("oracle examples") {
  auto hk = parse_signature("C2,C3");
  FreeProductGraph fp(hk, Shape::single_edge);
  BassSerreTree t(fp.graph(), fp.base());
  CHECK(translation_length_oracle(t, fp.embed(hk->parse("f0.1 f1.1")), 4) == 2);
  CHECK(translation_length_oracle(t, fp.embed(hk->parse("f1.1")), 4) == 0);

  auto abc = parse_signature("C2,C2,C2");
  FreeProductGraph star(abc, Shape::star);
  BassSerreTree ts(star.graph(), star.base());
  CHECK(translation_length_oracle(ts, star.embed(abc->parse("f0.1 f1.1")), 6) == 4);
}

TEST_CASE("property: oracle agrees with symbolic translation length") {
  Rng rng(17);
  struct Case {
    char const* sig;
    Shape shape;
  };
  for (auto c : {Case{"C2,C3", Shape::single_edge}, Case{"C2,C3,C2", Shape::star},
                 Case{"C2,C2,C2,C3", Shape::star}}) {
    auto sig = parse_signature(c.sig);
    FreeProductGraph fp(sig, c.shape);
    BassSerreTree t(fp.graph(), fp.base());
    for (int trial = 0; trial < 200; ++trial) {
      Word w = random_word_up_to(*sig, 8, rng);
      auto loop = fp.embed(w);
      auto symbolic = fp.graph().translation_length(loop);
      auto adaptive = translation_length_oracle_adaptive(t, loop);
      CHECK(adaptive.converged);
      CHECK(adaptive.value == symbolic);
      // On the cyclically reduced conjugate the base lies on the axis or is fixed.
      auto core = fp.embed(sig->cyclically_reduce(w).core.word);
      if (symbolic <= 6) CHECK(translation_length_oracle(t, core, symbolic + 2) == symbolic);
    }
  }
}

TEST_CASE("dot export") {
  auto hk = parse_signature("C2,C3");
  FreeProductGraph fp(hk, Shape::single_edge);
  BassSerreTree t(fp.graph(), fp.base());
  auto dot = t.to_dot(t.ball(t.base_vertex(), 1));
  CHECK(dot.find("graph ball {") == 0);
  CHECK(std::count(dot.begin(), dot.end(), '\n') == 1 + 3 + 2 + 1);
  auto sub = t.to_dot(t.ball(t.base_vertex(), 1, true));
  CHECK(sub.find("shape=point") != std::string::npos);
}
