#include "fpa/bstree.hpp"

#include <algorithm>
#include <queue>

#include <boost/container_hash/hash.hpp>

namespace fpa {

std::size_t TreeVertexHash::operator()(TreeVertex const& v) const noexcept {
  std::size_t h = v.type;
  boost::hash_combine(h, v.path.start);
  boost::hash_range(h, v.path.edges.begin(), v.path.edges.end());
  boost::hash_range(h, v.path.elements.begin(), v.path.elements.end());
  return h;
}

std::optional<std::size_t> Ball::find(TreeVertex const& v) const {
  auto it = index.find(v);
  if (it == index.end()) return std::nullopt;
  return it->second;
}

BassSerreTree::BassSerreTree(GraphOfGroups graph, std::size_t base)
    : gog_(std::move(graph)), base_(base) {
  if (base_ >= gog_.vertex_count()) throw GogError("base vertex out of range");
  spanning_.assign(gog_.vertex_count(), GroupoidPath{});
  std::vector<bool> seen(gog_.vertex_count(), false);
  seen[base_] = true;
  spanning_[base_] = gog_.trivial(base_);
  std::queue<std::size_t> q;
  q.push(base_);
  while (!q.empty()) {
    auto v = q.front();
    q.pop();
    for (auto e : gog_.incoming(v)) {
      auto w = gog_.edge(e).from;
      if (seen[w]) continue;
      seen[w] = true;
      spanning_[w] = gog_.concat(GroupoidPath{w, {0, 0}, {e}}, spanning_[v]);
      q.push(w);
    }
  }
}

TreeVertex BassSerreTree::make(std::size_t type, GroupoidPath const& path) const {
  if (path.start != type) throw InvalidPath("tree vertex path must start at its type vertex");
  if (gog_.end(path) != base_) throw BaseMismatch("tree vertex path must end at the base");
  GroupoidPath p = gog_.reduce(path);
  for (std::size_t i = p.edges.size(); i >= 1; --i) {
    auto const e = p.edges[i - 1];
    auto [y, rep] = gog_.coset_split(e, p.elements[i]);
    p.elements[i] = rep;
    auto const& prev = *gog_.vertex_group(gog_.edge(e).from);
    p.elements[i - 1] = prev.mul(p.elements[i - 1], gog_.transfer(e, y));
  }
  p.elements[0] = 0;
  return TreeVertex{type, std::move(p)};
}

TreeVertex BassSerreTree::base_vertex() const { return make(base_, gog_.trivial(base_)); }

TreeVertex BassSerreTree::standard_vertex(std::size_t w) const {
  return make(w, spanning_.at(w));
}

bool BassSerreTree::same_by_reduction(TreeVertex const& u, TreeVertex const& v) const {
  if (u.type != v.type) return false;
  auto r = gog_.reduce(gog_.concat(u.path, gog_.inverse(v.path)));
  return r.edges.empty();  // the remaining element lies in G_type
}

std::vector<TreeVertex> BassSerreTree::neighbors(TreeVertex const& u) const {
  std::vector<TreeVertex> out;
  for (auto f : gog_.incoming(u.type)) {
    auto from = gog_.edge(f).from;
    for (auto t : gog_.coset_reps(f))
      out.push_back(make(from, gog_.concat(GroupoidPath{from, {0, t}, {f}}, u.path)));
  }
  return out;
}

void BassSerreTree::check_loop(GroupoidPath const& g) const {
  gog_.check(g);
  if (g.start != base_ || gog_.end(g) != base_)
    throw BaseMismatch("group element must be a loop at the base vertex");
}

TreeVertex BassSerreTree::act(TreeVertex const& u, GroupoidPath const& g) const {
  check_loop(g);
  return make(u.type, gog_.concat(u.path, g));
}

std::size_t BassSerreTree::distance(TreeVertex const& u, TreeVertex const& v) const {
  return gog_.reduce(gog_.concat(u.path, gog_.inverse(v.path))).length();
}

std::vector<TreeVertex> BassSerreTree::geodesic(TreeVertex const& u, TreeVertex const& v) const {
  auto r = gog_.reduce(gog_.concat(u.path, gog_.inverse(v.path)));
  std::vector<TreeVertex> out;
  std::size_t w = r.start;
  for (std::size_t i = 0; i <= r.edges.size(); ++i) {
    GroupoidPath suffix{w,
                        std::vector<Element>(r.elements.begin() + i, r.elements.end()),
                        std::vector<std::size_t>(r.edges.begin() + i, r.edges.end())};
    out.push_back(make(w, gog_.concat(suffix, v.path)));
    if (i < r.edges.size()) w = gog_.edge(r.edges[i]).to;
  }
  return out;
}

Ball BassSerreTree::ball(TreeVertex const& center, std::size_t radius, bool subdivide) const {
  Ball b;
  b.subdivided = subdivide;
  b.vertices.push_back(center);
  b.depth.push_back(0);
  b.adjacency.emplace_back();
  b.index.emplace(center, 0);
  while (b.radius < radius) extend(b);
  return b;
}

void BassSerreTree::extend(Ball& b) const {
  std::size_t const frontier = b.radius;
  std::size_t const n = b.vertices.size();
  for (std::size_t i = 0; i < n; ++i) {
    if (b.depth[i] != frontier) continue;
    std::size_t seen_before = 0;
    for (auto& nb : neighbors(b.vertices[i])) {
      if (auto it = b.index.find(nb); it != b.index.end()) {
        if (i == 0 || it->second != b.adjacency[i].front() || ++seen_before > 1)
          throw GogError("ball expansion met a vertex twice");
        continue;
      }
      std::size_t j = b.vertices.size();
      b.index.emplace(nb, j);
      b.vertices.push_back(std::move(nb));
      b.depth.push_back(frontier + 1);
      b.adjacency.emplace_back();
      b.adjacency[i].push_back(j);
      b.adjacency[j].push_back(i);
      b.edges.emplace_back(i, j);
    }
  }
  ++b.radius;
}

std::string BassSerreTree::label(TreeVertex const& u) const {
  return "G" + std::to_string(u.type) + " " + gog_.format(u.path);
}

std::string BassSerreTree::to_dot(Ball const& b) const {
  std::string out = "graph ball {\n";
  for (std::size_t i = 0; i < b.vertices.size(); ++i)
    out += "  n" + std::to_string(i) + " [label=\"" + label(b.vertices[i]) + "\"];\n";
  for (std::size_t k = 0; k < b.edges.size(); ++k) {
    auto [i, j] = b.edges[k];
    if (b.subdivided) {
      std::string m = "m" + std::to_string(k);
      out += "  " + m + " [shape=point];\n";
      out += "  n" + std::to_string(i) + " -- " + m + ";\n";
      out += "  " + m + " -- n" + std::to_string(j) + ";\n";
    } else {
      out += "  n" + std::to_string(i) + " -- n" + std::to_string(j) + ";\n";
    }
  }
  return out + "}\n";
}

std::vector<std::size_t> fixed_set(BassSerreTree const& t, GroupoidPath const& g, Ball const& b) {
  return fixed_set_subgroup(t, {g}, b);
}

std::vector<std::size_t> fixed_set_subgroup(BassSerreTree const& t,
                                            std::vector<GroupoidPath> const& gens, Ball const& b) {
  std::vector<std::size_t> out;
  for (std::size_t i = 0; i < b.vertices.size(); ++i) {
    bool fixed = true;
    for (auto const& g : gens) {
      if (!(t.act(b.vertices[i], g) == b.vertices[i])) {
        fixed = false;
        break;
      }
    }
    if (fixed) out.push_back(i);
  }
  return out;
}

std::size_t translation_length_oracle(BassSerreTree const& t, GroupoidPath const& g,
                                      std::size_t radius) {
  auto b = t.ball(t.base_vertex(), radius);
  std::size_t best = SIZE_MAX;
  for (auto const& u : b.vertices) best = std::min(best, t.distance(u, t.act(u, g)));
  return best;
}

OracleResult translation_length_oracle_adaptive(BassSerreTree const& t, GroupoidPath const& g,
                                                std::size_t max_radius, std::size_t patience) {
  auto b = t.ball(t.base_vertex(), 0);
  auto const base = b.vertices[0];
  OracleResult r;
  r.value = t.distance(base, t.act(base, g));
  std::size_t stale = 0;
  while (r.value > 0 && stale < patience && b.radius < max_radius) {
    std::size_t const first_new = b.vertices.size();
    t.extend(b);
    std::size_t best = SIZE_MAX;
    for (std::size_t i = first_new; i < b.vertices.size(); ++i)
      best = std::min(best, t.distance(b.vertices[i], t.act(b.vertices[i], g)));
    if (best < r.value) {
      r.value = best;
      stale = 0;
    } else {
      ++stale;
    }
  }
  r.radius = b.radius;
  r.converged = r.value == 0 || stale >= patience;
  return r;
}

}  // namespace fpa
