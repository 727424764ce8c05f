#include "fpa/tree_geometry.hpp"

#include <algorithm>
#include <numeric>
#include <queue>
#include <set>
#include <string>

namespace fpa {

FiniteTree::FiniteTree(std::size_t n, std::vector<std::pair<std::size_t, std::size_t>> const& edges)
    : adj_(n) {
  if (n == 0) throw TreeError("a tree needs at least one vertex");
  if (edges.size() + 1 != n) throw TreeError("a tree on n vertices has n-1 edges");
  for (auto [u, v] : edges) {
    if (u >= n || v >= n || u == v) throw TreeError("bad edge");
    adj_[u].push_back(v);
    adj_[v].push_back(u);
  }
  for (auto& a : adj_) std::sort(a.begin(), a.end());
  dist_.assign(n, std::vector<std::size_t>(n, SIZE_MAX));
  for (std::size_t s = 0; s < n; ++s) {
    auto& d = dist_[s];
    d[s] = 0;
    std::queue<std::size_t> q;
    q.push(s);
    while (!q.empty()) {
      auto v = q.front();
      q.pop();
      for (auto w : adj_[v])
        if (d[w] == SIZE_MAX) {
          d[w] = d[v] + 1;
          q.push(w);
        }
    }
    if (std::find(d.begin(), d.end(), SIZE_MAX) != d.end()) throw TreeError("graph is not connected");
  }
}

FiniteTree FiniteTree::from_pruefer(std::vector<std::size_t> const& seq) {
  std::size_t const n = seq.size() + 2;
  std::vector<std::size_t> degree(n, 1);
  for (auto v : seq) {
    if (v >= n) throw TreeError("Pruefer entry out of range");
    ++degree[v];
  }
  std::set<std::size_t> leaves;
  for (std::size_t v = 0; v < n; ++v)
    if (degree[v] == 1) leaves.insert(v);
  std::vector<std::pair<std::size_t, std::size_t>> edges;
  for (auto v : seq) {
    auto leaf = *leaves.begin();
    leaves.erase(leaves.begin());
    edges.emplace_back(leaf, v);
    if (--degree[v] == 1) leaves.insert(v);
  }
  edges.emplace_back(*leaves.begin(), *std::next(leaves.begin()));
  return FiniteTree(n, edges);
}

FiniteTree FiniteTree::random(std::size_t n, Rng& rng) {
  if (n == 1) return FiniteTree(1, {});
  std::vector<std::size_t> seq(n - 2);
  for (auto& v : seq) v = uniform_index(rng, n);
  return from_pruefer(seq);
}

FiniteTree FiniteTree::path(std::size_t n) {
  std::vector<std::pair<std::size_t, std::size_t>> edges;
  for (std::size_t i = 1; i < n; ++i) edges.emplace_back(i - 1, i);
  return FiniteTree(n, edges);
}

std::vector<std::pair<std::size_t, std::size_t>> FiniteTree::edges() const {
  std::vector<std::pair<std::size_t, std::size_t>> out;
  for (std::size_t v = 0; v < size(); ++v)
    for (auto w : adj_[v])
      if (v < w) out.emplace_back(v, w);
  return out;
}

std::vector<std::size_t> FiniteTree::path(std::size_t u, std::size_t v) const {
  std::vector<std::size_t> out{u};
  while (u != v) {
    for (auto w : adj_[u])
      if (dist_[w][v] + 1 == dist_[u][v]) {
        u = w;
        break;
      }
    out.push_back(u);
  }
  return out;
}

Subtree::Subtree(FiniteTree const& t, std::vector<std::size_t> vertices) : vertices_(std::move(vertices)) {
  std::sort(vertices_.begin(), vertices_.end());
  vertices_.erase(std::unique(vertices_.begin(), vertices_.end()), vertices_.end());
  if (vertices_.empty()) throw TreeError("subtree must be nonempty");
  if (vertices_.back() >= t.size()) throw TreeError("subtree vertex out of range");
  // Induced subgraph of a forest is connected iff it has |V|-1 edges.
  std::size_t e = 0;
  for (auto v : vertices_)
    for (auto w : t.neighbors(v))
      if (v < w && contains(w)) ++e;
  if (e + 1 != vertices_.size()) throw TreeError("subtree must be connected");
}

bool Subtree::contains(std::size_t v) const {
  return std::binary_search(vertices_.begin(), vertices_.end(), v);
}

Subtree random_subtree(FiniteTree const& t, Rng& rng, double stop, std::optional<std::size_t> seed) {
  std::size_t s = seed ? *seed : uniform_index(rng, t.size());
  std::vector<std::size_t> in{s};
  std::vector<bool> member(t.size(), false);
  member[s] = true;
  std::bernoulli_distribution halt(stop);
  while (!halt(rng)) {
    std::vector<std::size_t> frontier;
    for (auto v : in)
      for (auto w : t.neighbors(v))
        if (!member[w]) frontier.push_back(w);
    if (frontier.empty()) break;
    std::sort(frontier.begin(), frontier.end());
    frontier.erase(std::unique(frontier.begin(), frontier.end()), frontier.end());
    auto w = frontier[uniform_index(rng, frontier.size())];
    member[w] = true;
    in.push_back(w);
  }
  return Subtree(t, std::move(in));
}

std::size_t nearest_point(FiniteTree const& t, Subtree const& y, std::size_t v) {
  std::size_t best = y.vertices().front();
  for (auto w : y.vertices())
    if (t.distance(v, w) < t.distance(v, best)) best = w;
  return best;
}

namespace {

std::vector<std::size_t> common(std::vector<std::size_t> const& a, std::vector<std::size_t> const& b) {
  std::vector<std::size_t> out;
  std::set_intersection(a.begin(), a.end(), b.begin(), b.end(), std::back_inserter(out));
  return out;
}

bool meets(Subtree const& x, Subtree const& y) { return !common(x.vertices(), y.vertices()).empty(); }

}  // namespace

std::optional<Subtree> intersect(FiniteTree const& t, Subtree const& x, Subtree const& y) {
  auto c = common(x.vertices(), y.vertices());
  if (c.empty()) return std::nullopt;
  return Subtree(t, std::move(c));
}

std::optional<Subtree> intersect_all(FiniteTree const& t, std::vector<Subtree> const& family) {
  if (family.empty()) throw TreeError("empty family");
  auto c = family.front().vertices();
  for (std::size_t i = 1; i < family.size() && !c.empty(); ++i) c = common(c, family[i].vertices());
  if (c.empty()) return std::nullopt;
  return Subtree(t, std::move(c));
}

std::vector<std::size_t> bridge(FiniteTree const& t, Subtree const& x, Subtree const& y) {
  if (meets(x, y)) throw NotDisjoint("bridge needs disjoint subtrees");
  auto q = nearest_point(t, y, x.vertices().front());
  auto p = nearest_point(t, x, q);
  return t.path(p, q);
}

LemmaCheck check_helly(FiniteTree const& t, std::vector<Subtree> const& family) {
  if (family.size() < 2) throw TreeError("Helly check needs at least two subtrees");
  LemmaCheck r;
  for (std::size_t i = 0; i < family.size(); ++i)
    for (std::size_t j = i + 1; j < family.size(); ++j)
      if (!meets(family[i], family[j])) {
        r.pair = {i, j};
        return r;
      }
  r.hypothesis = true;
  auto all = intersect_all(t, family);
  r.holds = all.has_value();
  if (all) r.common = all->vertices().front();
  return r;
}

LemmaCheck check_nested_intersection(FiniteTree const& t, std::vector<Subtree> const& family,
                                     Subtree const& y) {
  LemmaCheck r;
  auto all = intersect_all(t, family);
  if (!all) return r;
  for (std::size_t i = 0; i < family.size(); ++i)
    if (!meets(family[i], y)) {
      r.pair = {i, family.size()};
      return r;
    }
  r.hypothesis = true;
  auto c = common(all->vertices(), y.vertices());
  r.holds = !c.empty();
  if (r.holds) r.common = c.front();
  return r;
}

LemmaCheck check_bridge_lemma(FiniteTree const&, Subtree const& s1, Subtree const& s2,
                              Subtree const& t1, Subtree const& t2) {
  LemmaCheck r;
  Subtree const* s[2] = {&s1, &s2};
  Subtree const* u[2] = {&t1, &t2};
  for (std::size_t i = 0; i < 2; ++i)
    for (std::size_t j = 0; j < 2; ++j)
      if (!meets(*s[i], *u[j])) {
        r.pair = {i, 2 + j};
        return r;
      }
  r.hypothesis = true;
  auto a = common(s1.vertices(), s2.vertices());
  auto b = common(t1.vertices(), t2.vertices());
  r.holds = !a.empty() || !b.empty();
  if (!a.empty()) r.common = a.front();
  else if (!b.empty()) r.common = b.front();
  return r;
}

bool is_tree_automorphism(FiniteTree const& t, TreeMap const& f) {
  if (f.size() != t.size()) return false;
  std::vector<bool> hit(f.size(), false);
  for (auto v : f) {
    if (v >= f.size() || hit[v]) return false;
    hit[v] = true;
  }
  for (auto [u, v] : t.edges())
    if (t.distance(f[u], f[v]) != 1) return false;
  return true;
}

std::vector<std::size_t> fixed_vertices(std::vector<TreeMap> const& gens, std::size_t n) {
  std::vector<std::size_t> out;
  for (std::size_t v = 0; v < n; ++v)
    if (std::all_of(gens.begin(), gens.end(), [&](TreeMap const& f) { return f[v] == v; }))
      out.push_back(v);
  return out;
}

LemmaCheck check_commuting_elliptics(FiniteTree const& t, std::vector<TreeMap> const& h,
                                     std::vector<TreeMap> const& k) {
  for (auto const* gens : {&h, &k})
    for (auto const& f : *gens)
      if (!is_tree_automorphism(t, f)) throw TreeError("generator is not a tree automorphism");
  for (auto const& a : h)
    for (auto const& b : k)
      for (std::size_t v = 0; v < t.size(); ++v)
        if (a[b[v]] != b[a[v]]) throw NotCommuting("generators do not commute");
  LemmaCheck r;
  auto fh = fixed_vertices(h, t.size());
  auto fk = fixed_vertices(k, t.size());
  if (fh.empty() || fk.empty()) return r;
  r.hypothesis = true;
  auto c = common(fh, fk);
  r.holds = !c.empty();
  if (r.holds) r.common = c.front();
  return r;
}

LemmaCheck check_commuting_elliptics(BassSerreTree const& tree, Ball const& ball,
                                     std::vector<GroupoidPath> const& h,
                                     std::vector<GroupoidPath> const& k) {
  auto const& g = tree.graph();
  for (auto const& a : h)
    for (auto const& b : k)
      if (!g.equivalent(g.concat(a, b), g.concat(b, a))) throw NotCommuting("generators do not commute");
  LemmaCheck r;
  auto fh = fixed_set_subgroup(tree, h, ball);
  auto fk = fixed_set_subgroup(tree, k, ball);
  if (fh.empty() || fk.empty()) return r;
  r.hypothesis = true;
  auto c = common(fh, fk);
  r.holds = !c.empty();
  if (r.holds) r.common = c.front();
  return r;
}

namespace {

// Stop probability scaled so subtrees cover a sizeable part of the tree.
double stop_for(std::size_t n) { return std::min(0.5, 3.0 / static_cast<double>(n + 2)); }

std::size_t tree_size(Rng& rng, std::size_t max_vertices) {
  return 2 + uniform_index(rng, max_vertices - 1);
}

std::string describe(FiniteTree const& t, std::vector<Subtree const*> const& family) {
  std::string s = "tree";
  for (auto [u, v] : t.edges()) s += " " + std::to_string(u) + "-" + std::to_string(v);
  for (auto const* x : family) {
    s += " |";
    for (auto v : x->vertices()) s += " " + std::to_string(v);
  }
  return s;
}

struct Draw {
  bool accepted = false;
  bool holds = true;
  std::string detail;
};

Draw draw_helly(Rng& rng, std::size_t max_vertices) {
  auto t = FiniteTree::random(tree_size(rng, max_vertices), rng);
  std::size_t m = 2 + uniform_index(rng, 4);
  std::vector<Subtree> family;
  for (std::size_t i = 0; i < m; ++i) family.push_back(random_subtree(t, rng, stop_for(t.size())));
  auto r = check_helly(t, family);
  std::vector<Subtree const*> ptrs;
  for (auto const& x : family) ptrs.push_back(&x);
  return {r.hypothesis, r.holds, r.holds ? "" : describe(t, ptrs)};
}

Draw draw_nested(Rng& rng, std::size_t max_vertices) {
  auto t = FiniteTree::random(tree_size(rng, max_vertices), rng);
  std::size_t m = 1 + uniform_index(rng, 8);
  std::vector<Subtree> family;
  for (std::size_t i = 0; i < m; ++i) family.push_back(random_subtree(t, rng, stop_for(t.size())));
  auto y = random_subtree(t, rng, stop_for(t.size()));
  auto r = check_nested_intersection(t, family, y);
  std::vector<Subtree const*> ptrs;
  for (auto const& x : family) ptrs.push_back(&x);
  ptrs.push_back(&y);
  return {r.hypothesis, r.holds, r.holds ? "" : describe(t, ptrs)};
}

Draw draw_bridge(Rng& rng, std::size_t max_vertices) {
  auto t = FiniteTree::random(tree_size(rng, max_vertices), rng);
  double p = stop_for(t.size());
  auto s1 = random_subtree(t, rng, p);
  auto s2 = random_subtree(t, rng, p);
  auto t1 = random_subtree(t, rng, p);
  auto t2 = random_subtree(t, rng, p);
  auto r = check_bridge_lemma(t, s1, s2, t1, t2);
  return {r.hypothesis, r.holds, r.holds ? "" : describe(t, {&s1, &s2, &t1, &t2})};
}

// A random tree with isomorphic branches hung at a centre: H rotates the
// copies of one branch, K swaps two copies of another (or is a power of H).
Draw draw_commuting(Rng& rng, std::size_t max_vertices) {
  std::size_t const budget = std::max<std::size_t>(max_vertices, 8);
  std::size_t copies1 = 2 + uniform_index(rng, 2);
  std::size_t b1 = 1 + uniform_index(rng, std::max<std::size_t>(1, (budget - 6) / (copies1 + 2)));
  std::size_t b2 = 1 + uniform_index(rng, std::max<std::size_t>(1, (budget - 1 - copies1 * b1) / 4));
  std::size_t used = copies1 * b1 + 2 * b2;
  std::size_t core = 1 + uniform_index(rng, budget - used);
  auto base = FiniteTree::random(core, rng);
  auto br1 = FiniteTree::random(b1, rng);
  auto br2 = FiniteTree::random(b2, rng);
  std::size_t centre = uniform_index(rng, core);

  std::vector<std::pair<std::size_t, std::size_t>> edges = base.edges();
  std::size_t n = core;
  auto hang = [&](FiniteTree const& br) {
    std::size_t off = n;
    for (auto [u, v] : br.edges()) edges.emplace_back(off + u, off + v);
    edges.emplace_back(centre, off);
    n += br.size();
    return off;
  };
  std::vector<std::size_t> off1, off2;
  for (std::size_t c = 0; c < copies1; ++c) off1.push_back(hang(br1));
  for (std::size_t c = 0; c < 2; ++c) off2.push_back(hang(br2));

  TreeMap h(n), k(n);
  std::iota(h.begin(), h.end(), 0);
  k = h;
  for (std::size_t c = 0; c < copies1; ++c)
    for (std::size_t v = 0; v < b1; ++v) h[off1[c] + v] = off1[(c + 1) % copies1] + v;
  bool power = uniform_index(rng, 3) == 0;
  if (power) {
    for (std::size_t v = 0; v < n; ++v) k[v] = h[h[v]];
  } else {
    for (std::size_t v = 0; v < b2; ++v) {
      k[off2[0] + v] = off2[1] + v;
      k[off2[1] + v] = off2[0] + v;
    }
  }

  // Hide the construction behind a random relabelling.
  std::vector<std::size_t> relabel(n);
  std::iota(relabel.begin(), relabel.end(), 0);
  std::shuffle(relabel.begin(), relabel.end(), rng);
  for (auto& [u, v] : edges) u = relabel[u], v = relabel[v];
  FiniteTree t(n, edges);
  TreeMap hr(n), kr(n);
  for (std::size_t v = 0; v < n; ++v) {
    hr[relabel[v]] = relabel[h[v]];
    kr[relabel[v]] = relabel[k[v]];
  }
  auto r = check_commuting_elliptics(t, {hr}, {kr});
  return {r.hypothesis, r.holds, r.holds ? "" : describe(t, {})};
}

}  // namespace

SuiteReport run_lemma_trials(Lemma lemma, TrialOptions const& opt) {
  static char const* const names[] = {"helly", "nested_intersection", "bridge_lemma",
                                      "commuting_elliptics"};
  auto const idx = static_cast<std::size_t>(lemma);
  SuiteReport rep;
  rep.suite = std::string("lemmas/") + names[idx];
  Rng rng(opt.seed + idx);
  std::size_t attempts = 0;
  std::size_t accepted = 0;
  while (accepted < opt.trials) {
    if (++attempts > opt.max_attempts) {
      rep.failures.push_back({"sampling", std::to_string(accepted),
                              "rejection budget exhausted after " + std::to_string(accepted) +
                                  " accepted draws"});
      break;
    }
    Draw d;
    switch (lemma) {
      case Lemma::helly: d = draw_helly(rng, opt.max_vertices); break;
      case Lemma::nested: d = draw_nested(rng, opt.max_vertices); break;
      case Lemma::bridge: d = draw_bridge(rng, opt.max_vertices); break;
      case Lemma::commuting: d = draw_commuting(rng, opt.max_vertices); break;
    }
    if (!d.accepted) continue;
    rep.record(names[idx], std::to_string(accepted), d.holds, d.detail);
    ++accepted;
  }
  rep.finalize();
  return rep;
}

SuiteReport run_all_lemma_trials(TrialOptions const& opt) {
  SuiteReport all;
  all.suite = "lemmas";
  for (auto l : {Lemma::helly, Lemma::nested, Lemma::bridge, Lemma::commuting})
    all.merge(run_lemma_trials(l, opt));
  all.finalize();
  return all;
}

}  // namespace fpa
