#include "fpa/group.hpp"

#include <algorithm>
#include <deque>
#include <fstream>
#include <functional>
#include <map>
#include <mutex>
#include <numeric>

namespace fpa {

std::string to_string(Axiom a) {
  switch (a) {
    case Axiom::closure: return "closure";
    case Axiom::identity: return "identity";
    case Axiom::inverse: return "inverse";
    case Axiom::associativity: return "associativity";
  }
  return "?";
}

AxiomViolation::AxiomViolation(Axiom kind, std::array<Element, 3> witness)
    : GroupError("group axiom violated: " + to_string(kind) + " at (" +
                 std::to_string(witness[0]) + "," + std::to_string(witness[1]) +
                 "," + std::to_string(witness[2]) + ")"),
      kind_(kind),
      witness_(witness) {}

FiniteGroup FiniteGroup::validate(std::string name, Table const& table) {
  std::size_t const n = table.size();
  if (n == 0) throw AxiomViolation(Axiom::identity, {0, 0, 0});
  for (std::size_t x = 0; x < n; ++x) {
    if (table[x].size() != n)
      throw AxiomViolation(Axiom::closure, {Element(x), Element(table[x].size()), 0});
    for (std::size_t y = 0; y < n; ++y)
      if (table[x][y] >= n) throw AxiomViolation(Axiom::closure, {Element(x), Element(y), 0});
  }

  std::optional<Element> e;
  for (std::size_t c = 0; c < n && !e; ++c) {
    bool ok = true;
    for (std::size_t x = 0; x < n && ok; ++x)
      ok = table[c][x] == x && table[x][c] == x;
    if (ok) e = Element(c);
  }
  if (!e) throw AxiomViolation(Axiom::identity, {0, 0, 0});

  for (std::size_t x = 0; x < n; ++x) {
    bool found = false;
    for (std::size_t y = 0; y < n && !found; ++y)
      found = table[x][y] == *e && table[y][x] == *e;
    if (!found) throw AxiomViolation(Axiom::inverse, {Element(x), *e, 0});
  }

  for (std::size_t x = 0; x < n; ++x)
    for (std::size_t y = 0; y < n; ++y)
      for (std::size_t z = 0; z < n; ++z)
        if (table[table[x][y]][z] != table[x][table[y][z]])
          throw AxiomViolation(Axiom::associativity, {Element(x), Element(y), Element(z)});

  // Relabel so the identity is element 0 (swap it with whatever held 0).
  std::vector<Element> relabel(n);
  std::iota(relabel.begin(), relabel.end(), Element{0});
  std::swap(relabel[0], relabel[*e]);

  FiniteGroup g;
  g.name_ = std::move(name);
  g.n_ = n;
  g.table_.assign(n * n, 0);
  for (std::size_t x = 0; x < n; ++x)
    for (std::size_t y = 0; y < n; ++y)
      g.table_[relabel[x] * n + relabel[y]] = relabel[table[x][y]];
  g.inverse_.assign(n, 0);
  for (Element x = 0; x < n; ++x)
    for (Element y = 0; y < n; ++y)
      if (g.mul(x, y) == 0) g.inverse_[x] = y;
  return g;
}

Element FiniteGroup::multiply(Element x, Element y) const {
  if (x >= n_ || y >= n_)
    throw IndexOutOfRange("element index out of range in " + name_ + ": (" +
                          std::to_string(x) + "," + std::to_string(y) + ")");
  return mul(x, y);
}

Element FiniteGroup::power(Element x, long long k) const {
  if (k < 0) {
    x = inverse(x);
    k = -k;
  }
  k %= static_cast<long long>(element_order(x));
  Element r = identity();
  for (long long i = 0; i < k; ++i) r = mul(r, x);
  return r;
}

std::size_t FiniteGroup::element_order(Element x) const {
  std::size_t k = 1;
  for (Element p = x; p != identity(); p = mul(p, x)) ++k;
  return k;
}

bool FiniteGroup::is_abelian() const {
  for (Element x = 0; x < n_; ++x)
    for (Element y = x + 1; y < n_; ++y)
      if (mul(x, y) != mul(y, x)) return false;
  return true;
}

Table FiniteGroup::table() const {
  Table t(n_, std::vector<Element>(n_));
  for (Element x = 0; x < n_; ++x)
    for (Element y = 0; y < n_; ++y) t[x][y] = mul(x, y);
  return t;
}

nlohmann::json FiniteGroup::to_json() const {
  return {{"name", name_}, {"order", n_}, {"table", table()}};
}

FiniteGroup FiniteGroup::from_json(nlohmann::json const& j) {
  auto table = j.at("table").get<Table>();
  if (j.contains("order") && j.at("order").get<std::size_t>() != table.size())
    throw GroupError("group file: order does not match table size");
  return validate(j.value("name", std::string("G")), table);
}

std::vector<std::size_t> FiniteGroup::order_statistics() const {
  std::vector<std::size_t> orders(n_);
  for (Element x = 0; x < n_; ++x) orders[x] = element_order(x);
  std::sort(orders.begin(), orders.end());
  return orders;
}

GroupPtr make_group(FiniteGroup g) {
  return std::make_shared<const FiniteGroup>(std::move(g));
}

GroupMap::GroupMap(GroupPtr source, GroupPtr target, std::vector<Element> images)
    : source_(std::move(source)), target_(std::move(target)), images_(std::move(images)) {
  if (images_.size() != source_->order())
    throw GroupError("group map: image table has wrong size");
  for (Element y : images_)
    if (!target_->contains(y)) throw IndexOutOfRange("group map: image out of range");
}

GroupMap GroupMap::identity(GroupPtr g) {
  std::vector<Element> images(g->order());
  std::iota(images.begin(), images.end(), Element{0});
  return GroupMap(g, g, std::move(images));
}

bool is_homomorphism(std::span<const Element> images, FiniteGroup const& src,
                     FiniteGroup const& tgt) {
  if (images.size() != src.order()) return false;
  if (images[0] != tgt.identity()) return false;
  for (Element x = 0; x < src.order(); ++x)
    for (Element y = 0; y < src.order(); ++y)
      if (images[src.mul(x, y)] != tgt.mul(images[x], images[y])) return false;
  return true;
}

bool GroupMap::is_homomorphism() const {
  return fpa::is_homomorphism(images_, *source_, *target_);
}

bool GroupMap::is_injective() const {
  std::vector<bool> seen(target_->order(), false);
  for (Element y : images_) {
    if (seen[y]) return false;
    seen[y] = true;
  }
  return true;
}

bool GroupMap::is_bijective() const {
  return source_->order() == target_->order() && is_injective();
}

GroupMap GroupMap::then(GroupMap const& next) const {
  if (target_->order() != next.source_->order())
    throw GroupError("group map composition: order mismatch");
  std::vector<Element> images(images_.size());
  for (std::size_t x = 0; x < images_.size(); ++x) images[x] = next.images_[images_[x]];
  return GroupMap(source_, next.target_, std::move(images));
}

GroupMap GroupMap::inverse() const {
  if (!is_bijective()) throw GroupError("group map inverse: not a bijection");
  std::vector<Element> images(images_.size());
  for (Element x = 0; x < images_.size(); ++x) images[images_[x]] = x;
  return GroupMap(target_, source_, std::move(images));
}

std::vector<Element> generating_set(FiniteGroup const& g) {
  std::vector<Element> by_order(g.order());
  std::iota(by_order.begin(), by_order.end(), Element{0});
  std::stable_sort(by_order.begin(), by_order.end(), [&](Element a, Element b) {
    return g.element_order(a) > g.element_order(b);
  });

  std::vector<Element> gens;
  std::vector<bool> in_sub(g.order(), false);
  in_sub[0] = true;
  for (Element candidate : by_order) {
    if (in_sub[candidate]) continue;
    gens.push_back(candidate);
    // Recompute the generated subgroup by closure under right multiplication.
    std::deque<Element> queue;
    std::fill(in_sub.begin(), in_sub.end(), false);
    in_sub[0] = true;
    queue.push_back(0);
    while (!queue.empty()) {
      Element x = queue.front();
      queue.pop_front();
      for (Element s : gens) {
        Element y = g.mul(x, s);
        if (!in_sub[y]) {
          in_sub[y] = true;
          queue.push_back(y);
        }
      }
    }
  }
  return gens;
}

namespace {

constexpr Element kUnset = ~Element{0};

// Fills `map` over the subgroup generated by gens[0..count) from the
// generator images using m(x*s) = m(x)*m(s). Returns false if this is not a
// well-defined injective homomorphism on that subgroup.
bool close_map(FiniteGroup const& g, FiniteGroup const& h, std::vector<Element> const& gens,
               std::vector<Element> const& images, std::size_t count,
               std::vector<Element>& map) {
  std::fill(map.begin(), map.end(), kUnset);
  std::vector<bool> used(h.order(), false);
  map[0] = 0;
  used[0] = true;
  std::deque<Element> queue{0};
  while (!queue.empty()) {
    Element x = queue.front();
    queue.pop_front();
    for (std::size_t i = 0; i < count; ++i) {
      Element y = g.mul(x, gens[i]);
      Element image = h.mul(map[x], images[i]);
      if (map[y] == kUnset) {
        if (used[image]) return false;
        map[y] = image;
        used[image] = true;
        queue.push_back(y);
      } else if (map[y] != image) {
        return false;
      }
    }
  }
  return true;
}

// Enumerates injective homomorphisms g -> h that are bijections, calling
// `visit` for each; stops when visit returns false.
void enumerate_isomorphisms(GroupPtr const& g, GroupPtr const& h,
                            std::function<bool(std::vector<Element> const&)> const& visit) {
  if (g->order() != h->order()) return;
  if (g->order_statistics() != h->order_statistics()) return;

  auto const gens = generating_set(*g);
  std::vector<std::vector<Element>> candidates(gens.size());
  for (std::size_t i = 0; i < gens.size(); ++i) {
    auto const ord = g->element_order(gens[i]);
    for (Element y = 0; y < h->order(); ++y)
      if (h->element_order(y) == ord) candidates[i].push_back(y);
  }

  std::vector<Element> assigned(gens.size());
  std::vector<Element> map(g->order());
  bool stop = false;

  std::function<void(std::size_t)> search = [&](std::size_t depth) {
    if (stop) return;
    if (depth == gens.size()) {
      // Closure over a full generating set with consistent images is a
      // homomorphism; injectivity was enforced during closure.
      if (std::find(map.begin(), map.end(), kUnset) == map.end() && !visit(map))
        stop = true;
      return;
    }
    for (Element y : candidates[depth]) {
      assigned[depth] = y;
      if (!close_map(*g, *h, gens, assigned, depth + 1, map)) continue;
      search(depth + 1);
      if (stop) return;
    }
  };
  search(0);
}

}  // namespace

std::optional<GroupMap> find_isomorphism(GroupPtr const& g, GroupPtr const& h) {
  std::optional<GroupMap> found;
  enumerate_isomorphisms(g, h, [&](std::vector<Element> const& images) {
    found.emplace(g, h, images);
    return false;
  });
  return found;
}

std::vector<GroupMap> automorphism_group(GroupPtr const& g, std::size_t bound) {
  if (g->order() > bound)
    throw BoundExceeded("automorphism search: order " + std::to_string(g->order()) +
                        " exceeds bound " + std::to_string(bound));
  std::vector<GroupMap> auts{GroupMap::identity(g)};
  enumerate_isomorphisms(g, g, [&](std::vector<Element> const& images) {
    if (images != auts.front().images()) auts.emplace_back(g, g, images);
    return true;
  });
  return auts;
}

std::size_t abelianisation_order(FiniteGroup const& g) {
  std::vector<bool> in_sub(g.order(), false);
  std::vector<Element> gens;
  for (Element x = 0; x < g.order(); ++x)
    for (Element y = 0; y < g.order(); ++y) {
      Element c = g.mul(g.mul(g.inverse(x), g.inverse(y)), g.mul(x, y));
      if (!in_sub[c]) {
        in_sub[c] = true;
        gens.push_back(c);
      }
    }
  std::fill(in_sub.begin(), in_sub.end(), false);
  in_sub[0] = true;
  std::deque<Element> queue{0};
  std::size_t size = 1;
  while (!queue.empty()) {
    Element x = queue.front();
    queue.pop_front();
    for (Element s : gens) {
      Element y = g.mul(x, s);
      if (!in_sub[y]) {
        in_sub[y] = true;
        ++size;
        queue.push_back(y);
      }
    }
  }
  return g.order() / size;
}

namespace groups {

GroupPtr cyclic(std::size_t n) {
  Table t(n, std::vector<Element>(n));
  for (std::size_t x = 0; x < n; ++x)
    for (std::size_t y = 0; y < n; ++y) t[x][y] = Element((x + y) % n);
  return make_group(FiniteGroup::validate("C" + std::to_string(n), t));
}

GroupPtr direct_product(GroupPtr const& a, GroupPtr const& b) {
  std::size_t const na = a->order(), nb = b->order(), n = na * nb;
  Table t(n, std::vector<Element>(n));
  for (std::size_t x = 0; x < n; ++x)
    for (std::size_t y = 0; y < n; ++y) {
      Element first = a->mul(Element(x / nb), Element(y / nb));
      Element second = b->mul(Element(x % nb), Element(y % nb));
      t[x][y] = Element(first * nb + second);
    }
  return make_group(FiniteGroup::validate(a->name() + "x" + b->name(), t));
}

GroupPtr symmetric(std::size_t n) {
  if (n == 0 || n > 4) throw GroupError("symmetric: only S1..S4 are supported");
  std::vector<std::vector<std::size_t>> perms;
  std::vector<std::size_t> p(n);
  std::iota(p.begin(), p.end(), std::size_t{0});
  do perms.push_back(p);
  while (std::next_permutation(p.begin(), p.end()));

  std::map<std::vector<std::size_t>, Element> index;
  for (std::size_t i = 0; i < perms.size(); ++i) index[perms[i]] = Element(i);
  Table t(perms.size(), std::vector<Element>(perms.size()));
  for (std::size_t x = 0; x < perms.size(); ++x)
    for (std::size_t y = 0; y < perms.size(); ++y) {
      std::vector<std::size_t> c(n);
      for (std::size_t i = 0; i < n; ++i) c[i] = perms[x][perms[y][i]];
      t[x][y] = index.at(c);
    }
  return make_group(FiniteGroup::validate("S" + std::to_string(n), t));
}

std::vector<std::string> builtin_names() {
  return {"C2", "C3", "C4", "C5", "C6", "C2xC2", "C3xC3", "S3", "S4"};
}

namespace {

GroupPtr make_builtin(std::string const& name) {
  if (name.size() == 2 && name[0] == 'C' && name[1] >= '2' && name[1] <= '6')
    return cyclic(std::size_t(name[1] - '0'));
  if (name == "C2xC2") return direct_product(cyclic(2), cyclic(2));
  if (name == "C3xC3") return direct_product(cyclic(3), cyclic(3));
  if (name == "S3") return symmetric(3);
  if (name == "S4") return symmetric(4);
  return nullptr;
}

}  // namespace

GroupPtr builtin(std::string const& name) {
  // One shared instance per name, so repeated factors share a table.
  static std::mutex mutex;
  static std::map<std::string, GroupPtr> cache;
  std::lock_guard lock(mutex);
  auto it = cache.find(name);
  if (it != cache.end()) return it->second;
  auto g = make_builtin(name);
  if (g) cache.emplace(name, g);
  return g;
}

GroupPtr load(std::string const& path) {
  std::ifstream in(path);
  if (!in) throw GroupError("cannot open group file: " + path);
  nlohmann::json j;
  try {
    in >> j;
  } catch (nlohmann::json::exception const& e) {
    throw GroupError("group file " + path + ": " + e.what());
  }
  return make_group(FiniteGroup::from_json(j));
}

GroupPtr resolve(std::string const& name_or_path) {
  if (auto g = builtin(name_or_path)) return g;
  return load(name_or_path);
}

}  // namespace groups

}  // namespace fpa
