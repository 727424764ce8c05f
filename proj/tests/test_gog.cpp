#include <doctest.h>

#include "fpa/gog.hpp"
#include "fpa/random_words.hpp"

using namespace fpa;

namespace {

GraphOfGroups amalgam() {
  return GraphOfGroups::load(std::string(FPA_DATA_DIR) + "/gog/amalgam_hnn.json");
}

GroupoidPath random_path(GraphOfGroups const& g, std::size_t start, std::size_t n, Rng& rng) {
  GroupoidPath p{start, {Element(rng() % g.vertex_group(start)->order())}, {}};
  std::size_t v = start;
  for (std::size_t i = 0; i < n; ++i) {
    std::vector<std::size_t> out;
    for (std::size_t e = 0; e < g.edge_count(); ++e)
      if (g.edge(e).from == v) out.push_back(e);
    auto e = out[rng() % out.size()];
    v = g.edge(e).to;
    p.edges.push_back(e);
    // Bias toward elements in the edge image so that cancellations happen.
    Element x = Element(rng() % g.vertex_group(v)->order());
    if (rng() % 2) x = g.edge(e).alpha(Element(rng() % g.edge(e).group->order()));
    p.elements.push_back(x);
  }
  return p;
}

// Independent reducer: rewrites one randomly chosen reducible position at a time.
GroupoidPath naive_reduce(GraphOfGroups const& g, GroupoidPath p, Rng& rng) {
  for (;;) {
    std::vector<std::size_t> spots;
    for (std::size_t i = 1; i < p.edges.size(); ++i) {
      auto e = p.edges[i - 1];
      if (p.edges[i] == g.edge(e).rev && g.in_image(e, p.elements[i])) spots.push_back(i);
    }
    if (spots.empty()) return p;
    auto i = spots[rng() % spots.size()];
    auto e = p.edges[i - 1];
    auto const& grp = *g.vertex_group(g.edge(e).from);
    Element h = g.transfer(e, p.elements[i]);
    Element merged = grp.mul(grp.mul(p.elements[i - 1], h), p.elements[i + 1]);
    p.elements[i - 1] = merged;
    p.elements.erase(p.elements.begin() + i, p.elements.begin() + i + 2);
    p.edges.erase(p.edges.begin() + i - 1, p.edges.begin() + i + 1);
  }
}

// Cyclic reduction of a word as a free-product element, computed on words.
std::size_t cyclic_length(Signature const& sig, Word const& w) {
  return sig.cyclically_reduce(w).core.size();
}

std::size_t exponent_sum(Word const& w) {
  std::size_t total = 0;
  for (auto const& s : w.syllables)
    if (s.exponent != 0) total += static_cast<std::size_t>(abs(s.exponent));
  return total;
}

}  // namespace

TEST_CASE("graph validation") {
  auto c2 = groups::cyclic(2), c3 = groups::cyclic(3), one = groups::cyclic(1);
  GogEdge e01{0, 1, 1, one, GroupMap(one, c3, {0})};
  GogEdge e10{1, 0, 0, one, GroupMap(one, c2, {0})};
  CHECK_NOTHROW(GraphOfGroups({c2, c3}, {e01, e10}));
  CHECK_THROWS_AS(GraphOfGroups({c2, c3}, {}), GogError);  // disconnected
  GogEdge bad_rev{1, 0, 1, one, GroupMap(one, c2, {0})};
  CHECK_THROWS_AS(GraphOfGroups({c2, c3}, {e01, bad_rev}), GogError);
  GogEdge not_injective{0, 0, 1, c2, GroupMap(c2, c2, {0, 0})};
  GogEdge loop_back{0, 0, 0, c2, GroupMap(c2, c2, {0, 1})};
  CHECK_THROWS_AS(GraphOfGroups({c2}, {not_injective, loop_back}), GogError);
}

TEST_CASE("reduction examples") {
  auto sig = parse_signature("C2,C3");
  FreeProductGraph star(sig, Shape::star);
  auto const& g = star.graph();
  // e1 a rev(e1) e1 1 rev(e1) -> e1 a rev(e1)
  GroupoidPath p{0, {0, 1, 0, 0, 0}, {0, 1, 0, 1}};
  GroupoidPath expect{0, {0, 1, 0}, {0, 1}};
  CHECK(g.reduce(p) == expect);
  CHECK(g.reduce(expect) == expect);
  // e 1 rev(e) disappears.
  CHECK(g.reduce(GroupoidPath{0, {0, 0, 0}, {2, 3}}) == g.trivial(0));
}

TEST_CASE("reduction through nontrivial edge groups") {
  auto g = amalgam();
  // e0 3 e1: 3 is the image of C2 in C6, so the pair collapses to the
  // transposition 1 of S3.
  GroupoidPath p{0, {0, 3, 0}, {0, 1}};
  CHECK(g.reduce(p) == g.trivial(0, 1));
  // HNN edge: e2 3 e3 collapses to alpha_3(1) = 4.
  CHECK(g.reduce(GroupoidPath{0, {0, 3, 0}, {2, 3}}) == g.trivial(0, 4));
  CHECK(g.reduce(GroupoidPath{0, {0, 1, 0}, {2, 3}}).length() == 2);
}

TEST_CASE("property: reduction is independent of rewrite order") {
  Rng rng(5);
  auto g = amalgam();
  for (int t = 0; t < 500; ++t) {
    auto p = random_path(g, rng() % 2, 1 + rng() % 12, rng);
    auto r = g.reduce(p);
    auto n = naive_reduce(g, p, rng);
    CHECK(g.is_reduced(r));
    CHECK(r.edges == n.edges);
    CHECK(r.start == p.start);
    CHECK(g.end(r) == g.end(p));
    CHECK(g.reduce(r) == r);
    CHECK(g.equivalent(r, n));
  }
}

TEST_CASE("property: cyclic reduction and conjugacy invariance") {
  Rng rng(9);
  auto g = amalgam();
  for (int t = 0; t < 300; ++t) {
    // A random loop at vertex 0: a random path closed up through the HNN loop edge.
    auto p = random_path(g, 0, rng() % 10, rng);
    GroupoidPath back = g.end(p) == 0 ? g.trivial(0) : GroupoidPath{1, {0, 0}, {1}};
    auto loop = g.reduce(g.concat(p, back));
    auto r = g.cyclically_reduce(loop);
    CHECK(g.is_cyclically_reduced(r.core));
    CHECK(r.conjugator.start == r.core.start);
    CHECK(g.end(r.conjugator) == loop.start);
    CHECK(g.equivalent(g.concat(g.concat(g.inverse(r.conjugator), r.core), r.conjugator), loop));

    auto h = random_path(g, 0, rng() % 6, rng);
    GroupoidPath hb = g.end(h) == 0 ? g.trivial(0) : GroupoidPath{1, {0, 0}, {1}};
    auto hl = g.concat(h, hb);
    auto conj = g.concat(g.concat(g.inverse(hl), loop), hl);
    CHECK(g.translation_length(conj) == g.translation_length(loop));
  }
  CHECK(g.translation_length(g.trivial(0, 5)) == 0);
}

TEST_CASE("translation length examples") {
  auto hk = parse_signature("C2,C3");
  FreeProductGraph single(hk, Shape::single_edge);
  CHECK(translation_length(single, hk->parse("f0.1 f1.1")) == 2);
  CHECK(single.embed(hk->parse("f0.1 f1.1")).length() == 2);
  CHECK(translation_length(single, hk->parse("f1.2")) == 0);

  auto abc = parse_signature("C2,C3,C2");
  FreeProductGraph star(abc, Shape::star);
  CHECK(translation_length(star, abc->parse("f0.1 f1.1")) == 4);
  CHECK(translation_length(star, abc->parse("f0.1")) == 0);

  auto hz = parse_signature("C3,Z");
  FreeProductGraph loop(hz, Shape::loop_for_z);
  CHECK(translation_length(loop, hz->parse("f0.1 x1^2 f0.2 x1^-3")) == 5);
  CHECK(translation_length(loop, hz->parse("x1^-3")) == 3);
  CHECK(translation_length(loop, hz->parse("x1^1 f0.1 x1^-1")) == 0);

  auto zh = parse_signature("Z,C2");
  FreeProductGraph loop2(zh, Shape::loop_for_z);
  CHECK(translation_length(loop2, zh->parse("x0^1 f1.1 x0^1")) == 2);
}

TEST_CASE("shape preconditions") {
  CHECK_THROWS_AS(FreeProductGraph(parse_signature("C2,C3,C2"), Shape::single_edge), ShapeMismatch);
  CHECK_THROWS_AS(FreeProductGraph(parse_signature("C2,Z"), Shape::star), ShapeMismatch);
  CHECK_THROWS_AS(FreeProductGraph(parse_signature("C2,C3"), Shape::loop_for_z), ShapeMismatch);
  CHECK_THROWS_AS(parse_shape("ring"), ShapeMismatch);
  CHECK(parse_shape(shape_name(Shape::loop_for_z)) == Shape::loop_for_z);
}

TEST_CASE("property: shapes realise the free product") {
  Rng rng(13);
  struct Case {
    char const* sig;
    Shape shape;
  };
  for (auto c : {Case{"C2,C3", Shape::single_edge}, Case{"S3,C2", Shape::single_edge},
                 Case{"C2,C3,C2", Shape::star}, Case{"C3,S3,C2,C4", Shape::star},
                 Case{"C2,Z", Shape::loop_for_z}, Case{"Z,S3", Shape::loop_for_z}}) {
    auto sig = parse_signature(c.sig);
    FreeProductGraph fp(sig, c.shape);
    for (int t = 0; t < 200; ++t) {
      Word u = random_word_up_to(*sig, 12, rng);
      Word v = random_word_up_to(*sig, 12, rng);
      CHECK(fp.extract(fp.embed(u)) == u);
      auto const& g = fp.graph();
      CHECK(fp.extract(g.reduce(g.concat(fp.embed(u), fp.embed(v)))) == sig->multiply(u, v));
      std::size_t len = cyclic_length(*sig, u);
      std::size_t tl = translation_length(fp, u);
      switch (c.shape) {
        case Shape::single_edge: CHECK(tl == (len >= 2 ? len : 0)); break;
        case Shape::star: CHECK(tl == (len >= 2 ? 2 * len : 0)); break;
        case Shape::loop_for_z:
          CHECK(tl == exponent_sum(sig->cyclically_reduce(u).core.word));
          break;
      }
    }
  }
}

TEST_CASE("json round trip") {
  auto g = amalgam();
  auto back = GraphOfGroups::from_json(g.to_json());
  CHECK(back.to_json() == g.to_json());
  CHECK_THROWS_AS(GraphOfGroups::load("/nonexistent.json"), GogError);
}
