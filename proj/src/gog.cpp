#include "fpa/gog.hpp"

#include <fstream>
#include <queue>

namespace fpa {

namespace {

GroupPtr trivial_group() {
  static GroupPtr const g = groups::cyclic(1);
  return g;
}

GogEdge trivial_edge(std::size_t from, std::size_t to, std::size_t rev, GroupPtr const& target) {
  return GogEdge{from, to, rev, trivial_group(), GroupMap(trivial_group(), target, {0})};
}

}  // namespace

GraphOfGroups::GraphOfGroups(std::vector<GroupPtr> vertices, std::vector<GogEdge> edges)
    : vertices_(std::move(vertices)), edges_(std::move(edges)) {
  if (vertices_.empty()) throw GogError("graph of groups needs a vertex");
  std::size_t const V = vertices_.size(), E = edges_.size();
  for (auto const& g : vertices_)
    if (!g) throw GogError("null vertex group");
  incoming_.assign(V, {});
  for (std::size_t e = 0; e < E; ++e) {
    auto const& ed = edges_[e];
    std::string const tag = "edge " + std::to_string(e) + ": ";
    if (ed.from >= V || ed.to >= V) throw GogError(tag + "endpoint out of range");
    if (ed.rev >= E || ed.rev == e) throw GogError(tag + "bad reverse edge");
    auto const& r = edges_[ed.rev];
    if (r.rev != e || r.from != ed.to || r.to != ed.from)
      throw GogError(tag + "reverse edge does not match");
    if (!ed.group || ed.group->table() != r.group->table())
      throw GogError(tag + "edge group differs from its reverse");
    if (ed.alpha.source()->table() != ed.group->table() ||
        ed.alpha.target()->table() != vertices_[ed.to]->table())
      throw GogError(tag + "alpha has the wrong source or target");
    if (!ed.alpha.is_homomorphism() || !ed.alpha.is_injective())
      throw GogError(tag + "alpha is not a monomorphism");
    incoming_[ed.to].push_back(e);
  }

  std::vector<bool> seen(V, false);
  std::queue<std::size_t> q;
  q.push(0);
  seen[0] = true;
  while (!q.empty()) {
    auto v = q.front();
    q.pop();
    for (auto e : incoming_[v])
      if (!seen[edges_[e].from]) {
        seen[edges_[e].from] = true;
        q.push(edges_[e].from);
      }
  }
  for (bool s : seen)
    if (!s) throw GogError("graph of groups is not connected");

  preimage_.resize(E);
  split_.resize(E);
  reps_.resize(E);
  for (std::size_t e = 0; e < E; ++e) {
    auto const& ed = edges_[e];
    auto const& g = *vertices_[ed.to];
    preimage_[e].assign(g.order(), std::nullopt);
    for (Element y = 0; y < ed.group->order(); ++y) preimage_[e][ed.alpha(y)] = y;
    split_[e].resize(g.order());
    for (Element h = 0; h < g.order(); ++h) {
      Element best = h, factor = 0;
      for (Element y = 0; y < ed.group->order(); ++y) {
        Element a = ed.alpha(y);
        Element cand = g.mul(a, h);
        if (cand < best) {
          best = cand;
          factor = g.inverse(a);
        }
      }
      split_[e][h] = {factor, best};
      if (best == h) reps_[e].push_back(h);
    }
  }
}

Element GraphOfGroups::transfer(std::size_t e, Element h) const {
  auto const& pre = preimage_.at(e).at(h);
  if (!pre) throw GogError("transfer: element not in the edge image");
  return edges_[edges_[e].rev].alpha(*pre);
}

std::pair<Element, Element> GraphOfGroups::coset_split(std::size_t e, Element h) const {
  return split_.at(e).at(h);
}

std::size_t GraphOfGroups::end(GroupoidPath const& p) const {
  return p.edges.empty() ? p.start : edges_.at(p.edges.back()).to;
}

void GraphOfGroups::check(GroupoidPath const& p) const {
  if (p.start >= vertices_.size()) throw InvalidPath("path start out of range");
  if (p.elements.size() != p.edges.size() + 1) throw InvalidPath("path element count mismatch");
  std::size_t v = p.start;
  for (std::size_t i = 0; i <= p.edges.size(); ++i) {
    if (!vertices_[v]->contains(p.elements[i]))
      throw InvalidPath("path element " + std::to_string(i) + " not in vertex group");
    if (i == p.edges.size()) break;
    auto e = p.edges[i];
    if (e >= edges_.size() || edges_[e].from != v)
      throw InvalidPath("path edge " + std::to_string(i) + " does not continue the path");
    v = edges_[e].to;
  }
}

GroupoidPath GraphOfGroups::trivial(std::size_t v, Element g) const {
  GroupoidPath p{v, {g}, {}};
  check(p);
  return p;
}

GroupoidPath GraphOfGroups::concat(GroupoidPath const& p, GroupoidPath const& q) const {
  if (end(p) != q.start) throw InvalidPath("concat: paths do not meet");
  GroupoidPath out = p;
  auto const& g = *vertices_[q.start];
  out.elements.back() = g.mul(out.elements.back(), q.elements.front());
  out.elements.insert(out.elements.end(), q.elements.begin() + 1, q.elements.end());
  out.edges.insert(out.edges.end(), q.edges.begin(), q.edges.end());
  return out;
}

GroupoidPath GraphOfGroups::inverse(GroupoidPath const& p) const {
  GroupoidPath out;
  out.start = end(p);
  out.elements.clear();
  std::size_t v = out.start;
  for (std::size_t i = p.elements.size(); i-- > 0;) {
    out.elements.push_back(vertices_[v]->inverse(p.elements[i]));
    if (i > 0) {
      auto r = edges_[p.edges[i - 1]].rev;
      out.edges.push_back(r);
      v = edges_[r].to;
    }
  }
  return out;
}

GroupoidPath GraphOfGroups::reduce(GroupoidPath const& p) const {
  check(p);
  GroupoidPath out{p.start, {p.elements[0]}, {}};
  for (std::size_t i = 0; i < p.edges.size(); ++i) {
    out.edges.push_back(p.edges[i]);
    out.elements.push_back(p.elements[i + 1]);
    // out = ... g_{k-1} e g_k f g_{k+1} with f = rev(e) and g_k in alpha_e(G_e).
    while (out.edges.size() >= 2) {
      std::size_t const k = out.edges.size() - 1;
      std::size_t const e = out.edges[k - 1];
      if (out.edges[k] != edges_[e].rev || !in_image(e, out.elements[k])) break;
      Element h = transfer(e, out.elements[k]);
      auto const& g = *vertices_[edges_[e].from];
      Element merged = g.mul(g.mul(out.elements[k - 1], h), out.elements[k + 1]);
      out.edges.resize(k - 1);
      out.elements.resize(k);
      out.elements[k - 1] = merged;
    }
  }
  return out;
}

bool GraphOfGroups::is_reduced(GroupoidPath const& p) const {
  for (std::size_t i = 1; i < p.edges.size(); ++i)
    if (p.edges[i] == edges_[p.edges[i - 1]].rev && in_image(p.edges[i - 1], p.elements[i]))
      return false;
  return true;
}

bool GraphOfGroups::equivalent(GroupoidPath const& p, GroupoidPath const& q) const {
  if (p.start != q.start || end(p) != end(q)) return false;
  auto r = reduce(concat(p, inverse(q)));
  return r.edges.empty() && r.elements[0] == 0;
}

bool GraphOfGroups::is_cyclically_reduced(GroupoidPath const& loop) const {
  if (end(loop) != loop.start) throw InvalidPath("not a loop");
  if (!is_reduced(loop)) return false;
  std::size_t const n = loop.edges.size();
  if (n < 2) return true;
  auto const& g = *vertices_[loop.start];
  Element mid = g.mul(loop.elements[n], loop.elements[0]);
  return !(loop.edges[0] == edges_[loop.edges[n - 1]].rev && in_image(loop.edges[n - 1], mid));
}

LoopReduction GraphOfGroups::cyclically_reduce(GroupoidPath const& loop) const {
  check(loop);
  if (end(loop) != loop.start) throw InvalidPath("cyclically_reduce: not a loop");
  GroupoidPath cur = reduce(loop);
  GroupoidPath conj = trivial(loop.start);
  while (!is_cyclically_reduced(cur)) {
    GroupoidPath c{cur.start, {cur.elements[0], 0}, {cur.edges[0]}};
    cur = reduce(concat(concat(inverse(c), cur), c));
    conj = reduce(concat(inverse(c), conj));
  }
  return {cur, conj};
}

std::size_t GraphOfGroups::translation_length(GroupoidPath const& loop) const {
  return cyclically_reduce(loop).core.length();
}

std::string GraphOfGroups::format(GroupoidPath const& p) const {
  std::string out = "v" + std::to_string(p.start) + ":";
  for (std::size_t i = 0; i < p.elements.size(); ++i) {
    out += " " + std::to_string(p.elements[i]);
    if (i < p.edges.size()) out += " e" + std::to_string(p.edges[i]);
  }
  return out;
}

nlohmann::json GraphOfGroups::to_json() const {
  nlohmann::json vs = nlohmann::json::array();
  for (auto const& g : vertices_) vs.push_back(g->to_json());
  nlohmann::json es = nlohmann::json::array();
  for (std::size_t e = 0; e < edges_.size(); ++e) {
    auto const& ed = edges_[e];
    es.push_back({{"id", e},
                  {"rev", ed.rev},
                  {"from", ed.from},
                  {"to", ed.to},
                  {"edge_group", ed.group->to_json()},
                  {"alpha", ed.alpha.images()}});
  }
  return {{"vertices", vs}, {"edges", es}};
}

namespace {

GroupPtr group_ref(nlohmann::json const& j) {
  if (j.is_string()) return groups::resolve(j.get<std::string>());
  return make_group(FiniteGroup::from_json(j));
}

}  // namespace

GraphOfGroups GraphOfGroups::from_json(nlohmann::json const& j) {
  std::vector<GroupPtr> vertices;
  for (auto const& v : j.at("vertices")) vertices.push_back(group_ref(v));
  auto const& jedges = j.at("edges");
  std::vector<std::optional<GogEdge>> slots(jedges.size());
  for (auto const& je : jedges) {
    auto id = je.at("id").get<std::size_t>();
    if (id >= slots.size() || slots[id]) throw GogError("edge ids must be 0..n-1 without repeats");
    auto to = je.at("to").get<std::size_t>();
    if (to >= vertices.size()) throw GogError("edge endpoint out of range");
    auto g = group_ref(je.at("edge_group"));
    slots[id] = GogEdge{je.at("from").get<std::size_t>(), to, je.at("rev").get<std::size_t>(), g,
                        GroupMap(g, vertices[to], je.at("alpha").get<std::vector<Element>>())};
  }
  std::vector<GogEdge> edges;
  for (auto& s : slots) edges.push_back(std::move(*s));
  return GraphOfGroups(std::move(vertices), std::move(edges));
}

GraphOfGroups GraphOfGroups::load(std::string const& path) {
  std::ifstream in(path);
  if (!in) throw GogError("cannot open " + path);
  return from_json(nlohmann::json::parse(in));
}

Shape parse_shape(std::string const& name) {
  if (name == "single_edge" || name == "single-edge") return Shape::single_edge;
  if (name == "star") return Shape::star;
  if (name == "loop_for_Z" || name == "loop_for_z" || name == "loop") return Shape::loop_for_z;
  throw ShapeMismatch("unknown shape '" + name + "'");
}

std::string shape_name(Shape s) {
  switch (s) {
    case Shape::single_edge: return "single_edge";
    case Shape::star: return "star";
    case Shape::loop_for_z: return "loop_for_Z";
  }
  return "?";
}

namespace {

GraphOfGroups build_graph(Signature const& sig, Shape shape) {
  std::size_t const k = sig.size();
  switch (shape) {
    case Shape::single_edge: {
      if (k != 2 || !sig.all_finite())
        throw ShapeMismatch("single_edge needs exactly two finite factors");
      return GraphOfGroups({sig.group(0), sig.group(1)},
                           {trivial_edge(0, 1, 1, sig.group(1)), trivial_edge(1, 0, 0, sig.group(0))});
    }
    case Shape::star: {
      if (k < 2 || !sig.all_finite()) throw ShapeMismatch("star needs at least two finite factors");
      std::vector<GroupPtr> vs{trivial_group()};
      std::vector<GogEdge> es;
      for (std::size_t i = 0; i < k; ++i) {
        vs.push_back(sig.group(i));
        es.push_back(trivial_edge(0, i + 1, 2 * i + 1, sig.group(i)));
        es.push_back(trivial_edge(i + 1, 0, 2 * i, trivial_group()));
      }
      return GraphOfGroups(std::move(vs), std::move(es));
    }
    case Shape::loop_for_z: {
      if (k != 2 || sig.free_rank() != 1)
        throw ShapeMismatch("loop_for_Z needs one finite factor and one Z factor");
      GroupPtr h = sig.is_finite(0) ? sig.group(0) : sig.group(1);
      return GraphOfGroups({h}, {trivial_edge(0, 0, 1, h), trivial_edge(0, 0, 0, h)});
    }
  }
  throw ShapeMismatch("unknown shape");
}

}  // namespace

FreeProductGraph::FreeProductGraph(SignaturePtr sig, Shape shape)
    : sig_(std::move(sig)), shape_(shape), gog_(build_graph(*sig_, shape)) {
  std::size_t const k = sig_->size();
  vertex_factor_.assign(gog_.vertex_count(), std::nullopt);
  factor_vertex_.assign(k, std::nullopt);
  factor_edge_.assign(k, std::nullopt);
  switch (shape) {
    case Shape::single_edge:
      base_ = 0;
      vertex_factor_ = {0, 1};
      factor_vertex_ = {0, 1};
      factor_edge_[1] = 0;
      break;
    case Shape::star:
      base_ = 0;
      for (std::size_t i = 0; i < k; ++i) {
        vertex_factor_[i + 1] = i;
        factor_vertex_[i] = i + 1;
        factor_edge_[i] = 2 * i;
      }
      break;
    case Shape::loop_for_z: {
      base_ = 0;
      std::size_t h = sig_->is_finite(0) ? 0 : 1;
      vertex_factor_[0] = h;
      factor_vertex_[h] = 0;
      z_factor_ = 1 - h;
      loop_edge_ = 0;
      break;
    }
  }
}

GroupoidPath FreeProductGraph::embed(Syllable const& s) const {
  sig_->check_syllable(s);
  if (z_factor_ && s.factor == *z_factor_) {
    if (abs(s.exponent) > BigInt(1'000'000))
      throw ShapeMismatch("exponent too large to embed as an edge path");
    long long n = static_cast<long long>(s.exponent);
    std::size_t e = n > 0 ? *loop_edge_ : gog_.edge(*loop_edge_).rev;
    std::size_t count = static_cast<std::size_t>(n > 0 ? n : -n);
    return GroupoidPath{base_, std::vector<Element>(count + 1, 0), std::vector<std::size_t>(count, e)};
  }
  std::size_t v = *factor_vertex_[s.factor];
  if (v == base_) return gog_.trivial(base_, s.element);
  std::size_t e = *factor_edge_[s.factor];
  return GroupoidPath{base_, {0, s.element, 0}, {e, gog_.edge(e).rev}};
}

GroupoidPath FreeProductGraph::embed(Word const& w) const {
  GroupoidPath out = gog_.trivial(base_);
  for (auto const& s : w.syllables) out = gog_.concat(out, embed(s));
  return gog_.reduce(out);
}

Word FreeProductGraph::extract(GroupoidPath const& loop) const {
  gog_.check(loop);
  if (loop.start != base_ || gog_.end(loop) != base_)
    throw InvalidPath("extract: not a loop at the base vertex");
  std::vector<Syllable> raw;
  std::size_t v = loop.start;
  for (std::size_t i = 0; i < loop.elements.size(); ++i) {
    Element g = loop.elements[i];
    if (g != 0) {
      if (!vertex_factor_[v]) throw InvalidPath("extract: element at a trivial vertex");
      raw.push_back(Syllable::finite(*vertex_factor_[v], g));
    }
    if (i < loop.edges.size()) {
      std::size_t e = loop.edges[i];
      if (loop_edge_ && e == *loop_edge_) raw.push_back(Syllable::power(*z_factor_, 1));
      if (loop_edge_ && e == gog_.edge(*loop_edge_).rev)
        raw.push_back(Syllable::power(*z_factor_, -1));
      v = gog_.edge(e).to;
    }
  }
  return sig_->normalize(std::move(raw));
}

std::size_t translation_length(FreeProductGraph const& fp, Word const& w) {
  return fp.graph().translation_length(fp.embed(w));
}

}  // namespace fpa
