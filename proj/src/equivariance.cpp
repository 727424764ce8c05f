#include "fpa/equivariance.hpp"

#include <string>

#include "fpa/random_words.hpp"
#include "fpa/relations.hpp"

namespace fpa {

InducedIsometry::InducedIsometry(FreeProductGraph const& fp, BassSerreTree const& tree, Automorphism alpha)
    : fp_(fp), tree_(tree), alpha_(std::move(alpha)) {
  if (alpha_.signature() != fp_.signature())
    throw SignatureMismatch("automorphism and tree use different signatures");
  if (tree_.base() != fp_.base()) throw BaseMismatch("tree must be based at the graph's base vertex");
  auto const& sig = *fp_.signature();
  for (std::size_t i = 0; i < sig.size(); ++i) {
    if (!sig.is_finite(i)) throw StabilizerAmbiguity("infinite cyclic factors have no vertex");
    auto img = alpha_.factor_image(i);
    if (!img) throw StabilizerAmbiguity("factor " + std::to_string(i) + " is not sent to a conjugate factor");
    factor_images_.push_back(std::move(*img));
  }
}

Word InducedIsometry::coset_word(TreeVertex const& u) const {
  auto const& g = fp_.graph();
  auto const& std_path = tree_.standard_vertex(u.type).path;
  return fp_.extract(g.reduce(g.concat(g.inverse(std_path), u.path)));
}

TreeVertex InducedIsometry::operator()(TreeVertex const& u) const {
  auto const& sig = *fp_.signature();
  auto factor = fp_.vertex_factor(u.type);
  if (!factor) {
    auto nb = tree_.neighbors(u);
    if (nb.size() < 2) throw StabilizerAmbiguity("trivial-stabiliser vertex with fewer than two neighbours");
    auto path = tree_.geodesic((*this)(nb[0]), (*this)(nb[1]));
    if (path.size() != 3) throw StabilizerAmbiguity("neighbour images are not at distance 2");
    return path[1];
  }
  auto const& [j, h] = factor_images_[*factor];
  auto y = alpha_.apply(coset_word(u));
  auto v = tree_.standard_vertex(*fp_.factor_vertex(j));
  return tree_.act(v, fp_.embed(sig.multiply(h, y)));
}

namespace {

std::string vkey(BassSerreTree const& t, TreeVertex const& u) { return t.label(u); }

}  // namespace

SuiteReport equivariance_check(FreeProductGraph const& fp, BassSerreTree const& tree,
                               Automorphism const& alpha, Ball const& ball, EquivarianceOptions const& opt) {
  auto const& sig = *fp.signature();
  SuiteReport rep;
  rep.suite = "equivariance " + sig.describe() + " " + alpha.format();
  Rng rng(opt.seed);
  for (std::size_t k = 0; k < opt.samples; ++k) {
    auto w = random_word_up_to(sig, opt.word_length, rng);
    rep.record("length_preserving", sig.format(w),
               translation_length(fp, alpha.apply(w)) == translation_length(fp, w));
  }
  if (!rep.ok()) {
    rep.finalize();
    return rep;
  }
  std::optional<InducedIsometry> f;
  try {
    f.emplace(fp, tree, alpha);
  } catch (StabilizerAmbiguity const& e) {
    rep.record("stabilizer_ambiguity", "setup", false, e.what());
    return rep;
  }
  std::vector<TreeVertex> img;
  img.reserve(ball.size());
  for (auto const& u : ball.vertices) img.push_back((*f)(u));

  for (auto [i, j] : ball.edges) {
    auto key = vkey(tree, ball.vertices[i]) + " -- " + vkey(tree, ball.vertices[j]);
    rep.record("edge_to_edge", key, tree.distance(img[i], img[j]) == 1);
    if (!ball.subdivided)
      rep.record("edge_inversion", key, !(img[i] == ball.vertices[j] && img[j] == ball.vertices[i]),
                 "f inverts this edge; subdivide the tree");
  }
  for (std::size_t k = 0; k < opt.samples; ++k) {
    auto i = uniform_index(rng, ball.size()), j = uniform_index(rng, ball.size());
    rep.record("distance", std::to_string(k),
               tree.distance(img[i], img[j]) == tree.distance(ball.vertices[i], ball.vertices[j]));
    auto gw = random_word_up_to(sig, opt.word_length, rng);
    auto lhs = (*f)(tree.act(ball.vertices[i], fp.embed(gw)));
    auto rhs = tree.act(img[i], fp.embed(alpha.apply(gw)));
    rep.record("equivariant", std::to_string(k), lhs == rhs, sig.format(gw));
  }
  rep.finalize();
  return rep;
}

SuiteReport check_inner_action(FreeProductGraph const& fp, BassSerreTree const& tree, Word const& g,
                               Ball const& ball) {
  SuiteReport rep;
  rep.suite = "inner " + fp.signature()->format(g);
  InducedIsometry f(fp, tree, Automorphism::inner(fp.signature(), g));
  auto loop = fp.embed(g);
  for (auto const& u : ball.vertices) rep.record("acts_as_conjugator", vkey(tree, u), f(u) == tree.act(u, loop));
  rep.finalize();
  return rep;
}

SuiteReport check_composition(FreeProductGraph const& fp, BassSerreTree const& tree, Automorphism const& alpha,
                              Automorphism const& beta, Ball const& ball) {
  SuiteReport rep;
  rep.suite = "composition " + alpha.format() + " | " + beta.format();
  InducedIsometry fa(fp, tree, alpha), fb(fp, tree, beta), fab(fp, tree, alpha.then(beta));
  for (auto const& u : ball.vertices) rep.record("composition", vkey(tree, u), fab(u) == fb(fa(u)));
  rep.finalize();
  return rep;
}

SuiteReport equivariance_suite(std::size_t pairs, std::uint64_t seed) {
  SuiteReport all;
  all.suite = "equivariance";
  Rng rng(seed);

  auto add = [&](std::string const& prefix, SuiteReport r) {
    for (auto& f : r.failures) f.instance = prefix + " " + f.instance;
    all.merge(r);
  };

  // Inner automorphisms act as their conjugators.
  for (auto const* text : {"C2,C3", "C2,C3,S3"}) {
    auto sig = parse_signature(text);
    FreeProductGraph fp(sig, sig->size() == 2 ? Shape::single_edge : Shape::star);
    BassSerreTree t(fp.graph(), fp.base());
    auto ball = t.ball(t.base_vertex(), 3);
    for (std::size_t k = 0; k < 5; ++k) {
      auto g = random_word_up_to(*sig, 4, rng);
      add(std::string(text) + " inner", check_inner_action(fp, t, g, ball));
      add(std::string(text) + " inner", equivariance_check(fp, t, Automorphism::inner(sig, g), ball,
                                                           {20, 6, seed + k}));
    }
    add(std::string(text) + " identity", check_inner_action(fp, t, Word{}, ball));
  }

  // The C2*C2 swap inverts the base edge: refused without subdivision, fine with it.
  {
    auto sig = parse_signature("C2,C2");
    FreeProductGraph fp(sig, Shape::single_edge);
    BassSerreTree t(fp.graph(), fp.base());
    auto swap = Automorphism::atom(sig, PermAut{{1, 0}});
    auto plain = equivariance_check(fp, t, swap, t.ball(t.base_vertex(), 4), {20, 6, seed});
    bool refused = std::any_of(plain.failures.begin(), plain.failures.end(),
                               [](Failure const& f) { return f.check == "edge_inversion"; });
    all.record("swap_needs_subdivision", "C2,C2", refused, "no inversion reported on the plain ball");
    add("C2,C2 swap subdivided", equivariance_check(fp, t, swap, t.ball(t.base_vertex(), 4, true), {20, 6, seed}));
    InducedIsometry f(fp, t, swap);
    auto v0 = t.base_vertex(), v1 = t.standard_vertex(1);
    all.record("swap_fixes_midpoint", "C2,C2", f(v0) == v1 && f(v1) == v0);
  }

  // f for a product is the composite of the fs.
  struct Case {
    char const* sig;
    bool star;
  };
  for (auto c : {Case{"C2,C3", false}, Case{"C3,C3", false}, Case{"C2,C3,C3", true}}) {
    auto sig = parse_signature(c.sig);
    FreeProductGraph fp(sig, c.star ? Shape::star : Shape::single_edge);
    BassSerreTree t(fp.graph(), fp.base());
    auto ball = t.ball(t.base_vertex(), 5);
    std::vector<AtomicAut> gens;
    for (auto const& a : generating_atoms(*sig))
      // On a star with three factors only automorphisms permuting factors
      // without partial conjugation preserve length.
      if (!c.star || !std::holds_alternative<PartialConj>(a)) gens.push_back(a);
    auto random_aut = [&]() {
      std::vector<AtomicAut> atoms;
      std::size_t n = 1 + uniform_index(rng, 3);
      for (std::size_t k = 0; k < n; ++k) atoms.push_back(gens[uniform_index(rng, gens.size())]);
      auto a = Automorphism::from_atoms(sig, atoms);
      if (c.star) a = a.then(Automorphism::inner(sig, random_word_up_to(*sig, 3, rng)));
      return a;
    };
    for (std::size_t k = 0; k < pairs; ++k) {
      auto a = random_aut(), b = random_aut();
      add(std::string(c.sig) + " #" + std::to_string(k), check_composition(fp, t, a, b, ball));
      add(std::string(c.sig) + " #" + std::to_string(k),
          equivariance_check(fp, t, a, t.ball(t.base_vertex(), 3, true), {10, 6, seed + k}));
    }
  }
  all.finalize();
  return all;
}

}  // namespace fpa
