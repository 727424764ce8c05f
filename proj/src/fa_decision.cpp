#include "fpa/fa_decision.hpp"

#include <algorithm>
#include <fstream>
#include <sstream>
#include <tuple>

namespace fpa {

namespace {

constexpr char kSufficient1[] =
    "each free factor has Property (FA), its automorphism group has finite abelianisation and "
    "cannot be expressed as the union of a properly increasing sequence of subgroups, and "
    "(up to isomorphism) appears at least four times";
constexpr char kSufficient2[] =
    "a free factor appearing exactly once has Property (FA) and its automorphism group has "
    "Property (FA); all other free factors appear at least four times with the conditions above";
constexpr char kNecessaryCounts[] =
    "any free factor appears exactly two or three times, or any two free factors appear exactly "
    "once";
constexpr char kNecessaryOnce[] =
    "the automorphism group of any factor appearing exactly once does not have Property (FA)";
constexpr char kNecessaryRepeated[] =
    "the automorphism group of any factor appearing more than once does not have finite "
    "abelianisation or can be expressed as a union of a properly increasing sequence of "
    "subgroups";
constexpr char kFiniteCase[] =
    "free product of finite groups: all but possibly one factor appear at least four times "
    "(up to isomorphism), and the remaining factor (if present) appears only once";
constexpr char kRank2[] = "the free rank is exactly 2";
constexpr char kRank1Once[] = "the free rank is exactly 1, and another free factor appears exactly once";
constexpr char kFreeHigh[] = "Aut(F_n) has Property (FA) for n >= 3";
constexpr char kFreeOne[] =
    "Aut(Z) has order 2, so it is finite and has Property (FA) (not covered by the count rules)";
constexpr char kOpenZ[] = "cases with infinite cyclic factors are in general still open";
constexpr char kOpenFactorFa[] =
    "a repeated factor without Property (FA) is not covered in either direction: it seems "
    "plausible that there are examples of groups that act on trees but not in a way that "
    "extends to the automorphism group of their free product";

std::string describe(FactorClassInput const& c) {
  return c.name + " x" + std::to_string(c.count);
}

std::string join(std::vector<std::string> const& parts) {
  std::string out;
  for (std::size_t i = 0; i < parts.size(); ++i) out += (i ? ", " : "") + parts[i];
  return out;
}

void merge_into(std::vector<FactorClassInput>& out, FactorClassInput c) {
  for (auto& o : out) {
    bool same = false;
    if (o.kind == c.kind && c.kind == FactorClassInput::Kind::infinite_cyclic) same = true;
    if (o.kind == c.kind && c.kind == FactorClassInput::Kind::finite)
      same = find_isomorphism(o.group, c.group).has_value();
    if (same) {
      o.count += c.count;
      return;
    }
  }
  out.push_back(std::move(c));
}

}  // namespace

std::string to_string(Tri t) {
  switch (t) {
    case Tri::no: return "no";
    case Tri::yes: return "yes";
    case Tri::unknown: return "unknown";
  }
  return "unknown";
}

Tri parse_tri(std::string const& s) {
  if (s == "yes" || s == "true") return Tri::yes;
  if (s == "no" || s == "false") return Tri::no;
  if (s == "unknown") return Tri::unknown;
  throw FaError("expected yes, no or unknown, got '" + s + "'");
}

std::string to_string(FaResult r) {
  switch (r) {
    case FaResult::fa: return "FA";
    case FaResult::not_fa: return "NotFA";
    case FaResult::unknown: return "Unknown";
  }
  return "Unknown";
}

int exit_code(FaResult r) {
  switch (r) {
    case FaResult::fa: return 0;
    case FaResult::not_fa: return 1;
    case FaResult::unknown: return 2;
  }
  return 2;
}

FactorClassInput FactorClassInput::finite(GroupPtr g, std::size_t count) {
  if (!g) throw FaError("missing group");
  if (g->order() == 1) throw FaError("free factors must be non-trivial");
  FactorClassInput c;
  c.kind = Kind::finite;
  c.name = g->name();
  c.group = std::move(g);
  c.flags = {Tri::yes, Tri::yes, Tri::yes, Tri::yes};
  c.count = count;
  return c;
}

FactorClassInput FactorClassInput::abstract(std::string name, FactorFlags flags, std::size_t count) {
  FactorClassInput c;
  c.kind = Kind::abstract;
  c.name = std::move(name);
  c.flags = flags;
  c.count = count;
  return c;
}

FactorClassInput FactorClassInput::infinite_cyclic(std::size_t rank) {
  FactorClassInput c;
  c.kind = Kind::infinite_cyclic;
  c.name = "Z";
  c.count = rank;
  return c;
}

std::vector<std::pair<GroupPtr, std::size_t>> classify_factors(std::vector<GroupPtr> const& groups) {
  std::vector<std::pair<GroupPtr, std::size_t>> out;
  for (auto const& g : groups) {
    if (g->order() > kSearchBound)
      throw BoundExceeded("group " + g->name() + " exceeds the search bound");
    auto it = std::find_if(out.begin(), out.end(),
                           [&](auto const& c) { return find_isomorphism(c.first, g).has_value(); });
    if (it == out.end()) out.emplace_back(g, 1);
    else ++it->second;
  }
  return out;
}

bool fa_count_rule(std::vector<std::size_t> const& counts) {
  std::size_t once = 0;
  for (auto c : counts) {
    if (c == 1) ++once;
    else if (c < 4) return false;
  }
  return once <= 1;
}

bool not_fa_count_rule(std::vector<std::size_t> const& counts) {
  std::size_t once = 0;
  for (auto c : counts) {
    if (c == 2 || c == 3) return true;
    if (c == 1) ++once;
  }
  return once >= 2;
}

Verdict decide(std::vector<FactorClassInput> const& input) {
  std::vector<FactorClassInput> classes;
  for (auto const& c : input) {
    if (c.count == 0) throw FaError("factor count must be at least 1");
    if (c.kind == FactorClassInput::Kind::finite) merge_into(classes, c);
    else if (c.kind == FactorClassInput::Kind::infinite_cyclic) merge_into(classes, c);
    else classes.push_back(c);
  }
  std::sort(classes.begin(), classes.end(), [](auto const& a, auto const& b) {
    return std::tie(a.kind, a.name, a.count) < std::tie(b.kind, b.name, b.count);
  });

  std::size_t rank = 0, total = 0;
  std::vector<FactorClassInput const*> others;
  for (auto const& c : classes) {
    total += c.count;
    if (c.kind == FactorClassInput::Kind::infinite_cyclic) rank += c.count;
    else others.push_back(&c);
  }
  Verdict v;
  auto fire = [&](FaResult r, std::string condition, char const* citation) {
    v.result = r;
    v.trace.push_back({std::move(condition), citation});
    return v;
  };

  if (rank > 0) {
    if (rank == 2) return fire(FaResult::not_fa, "free rank 2", kRank2);
    if (others.empty()) {
      if (rank >= 3) return fire(FaResult::fa, "free group of rank " + std::to_string(rank), kFreeHigh);
      return fire(FaResult::fa, "free group of rank 1", kFreeOne);
    }
    if (rank == 1)
      for (auto const* c : others)
        if (c->count == 1) return fire(FaResult::not_fa, "free rank 1 and " + describe(*c), kRank1Once);
    throw UnsupportedZ(std::string("free rank ") + std::to_string(rank) + ": " + kOpenZ);
  }
  if (total < 2) throw TrivialProduct("a single free factor is not a non-trivial free product");

  // Necessary conditions.
  std::vector<std::string> once;
  for (auto const* c : others) {
    if (c->count == 2 || c->count == 3)
      return fire(FaResult::not_fa, describe(*c) + " appears two or three times", kNecessaryCounts);
    if (c->count == 1) once.push_back(c->name);
  }
  if (once.size() >= 2)
    return fire(FaResult::not_fa, join(once) + " each appear exactly once", kNecessaryCounts);
  for (auto const* c : others) {
    if (c->count == 1 && c->flags.aut_has_fa == Tri::no)
      return fire(FaResult::not_fa, "Aut(" + c->name + ") lacks Property (FA)", kNecessaryOnce);
    if (c->count > 1 && (c->flags.aut_finite_abelianisation == Tri::no ||
                         c->flags.aut_no_increasing_union == Tri::no))
      return fire(FaResult::not_fa, "Aut(" + c->name + ") fails the repeated-factor conditions",
                  kNecessaryRepeated);
  }

  // Sufficient conditions; counts are now all >= 4 except at most one singleton.
  std::vector<std::string> unresolved;
  for (auto const* c : others) {
    auto need = [&](Tri t, char const* what) {
      if (t != Tri::yes) unresolved.push_back(c->name + "." + what + " = " + to_string(t));
    };
    need(c->flags.has_fa, "has_FA");
    if (c->count == 1) {
      need(c->flags.aut_has_fa, "aut_has_FA");
    } else {
      need(c->flags.aut_finite_abelianisation, "aut_finite_abelianisation");
      need(c->flags.aut_no_increasing_union, "aut_no_increasing_union");
    }
  }
  if (unresolved.empty()) {
    bool all_finite = std::all_of(others.begin(), others.end(), [](auto const* c) {
      return c->kind == FactorClassInput::Kind::finite;
    });
    std::vector<std::string> parts;
    for (auto const* c : others) parts.push_back(describe(*c));
    if (all_finite) v.trace.push_back({join(parts), kFiniteCase});
    return fire(FaResult::fa, join(parts), once.empty() ? kSufficient1 : kSufficient2);
  }
  v.result = FaResult::unknown;
  for (auto const& u : unresolved) v.trace.push_back({"unresolved: " + u, kOpenFactorFa});
  return v;
}

std::string explain(Verdict const& v) {
  std::ostringstream out;
  out << "verdict: " << to_string(v.result) << "\n";
  for (auto const& t : v.trace) out << "  " << t.condition << "\n    \"" << t.citation << "\"\n";
  if (v.result == FaResult::unknown)
    out << "  setting the unresolved flags above to yes would give FA; "
           "setting a required Aut flag to no would give NotFA\n";
  return out.str();
}

std::vector<FactorClassInput> parse_factor_spec(std::string const& spec) {
  std::vector<FactorClassInput> out;
  std::stringstream ss(spec);
  std::string item;
  while (std::getline(ss, item, ',')) {
    auto colon = item.rfind(':');
    std::string name = colon == std::string::npos ? item : item.substr(0, colon);
    std::size_t count = 1;
    if (colon != std::string::npos) {
      try {
        std::size_t used = 0;
        long long n = std::stoll(item.substr(colon + 1), &used);
        if (used != item.size() - colon - 1 || n < 1) throw FaError("");
        count = static_cast<std::size_t>(n);
      } catch (std::exception const&) {
        throw FaError("bad count in factor spec item '" + item + "'");
      }
    }
    if (name.empty()) throw FaError("empty factor name in '" + spec + "'");
    if (name == "Z") merge_into(out, FactorClassInput::infinite_cyclic(count));
    else merge_into(out, FactorClassInput::finite(groups::resolve(name), count));
  }
  if (out.empty()) throw FaError("empty factor spec");
  return out;
}

std::vector<FactorClassInput> parse_factor_json(nlohmann::json const& j) {
  std::vector<FactorClassInput> out;
  for (auto const& f : j.at("factors")) {
    std::size_t count = f.value("count", std::size_t{1});
    if (f.contains("group")) {
      auto const& g = f.at("group");
      if (g.is_string() && g.get<std::string>() == "Z") merge_into(out, FactorClassInput::infinite_cyclic(count));
      else if (g.is_string()) merge_into(out, FactorClassInput::finite(groups::resolve(g.get<std::string>()), count));
      else merge_into(out, FactorClassInput::finite(make_group(FiniteGroup::from_json(g)), count));
      continue;
    }
    FactorFlags flags;
    auto const fl = f.value("flags", nlohmann::json::object());
    auto tri = [&](char const* key) { return fl.contains(key) ? parse_tri(fl.at(key).get<std::string>()) : Tri::unknown; };
    flags.has_fa = tri("has_FA");
    flags.aut_has_fa = tri("aut_has_FA");
    flags.aut_finite_abelianisation = tri("aut_finite_abelianisation");
    flags.aut_no_increasing_union = tri("aut_no_increasing_union");
    out.push_back(FactorClassInput::abstract(f.at("name").get<std::string>(), flags, count));
  }
  return out;
}

std::vector<FactorClassInput> load_factor_file(std::string const& path) {
  std::ifstream in(path);
  if (!in) throw FaError("cannot open " + path);
  return parse_factor_json(nlohmann::json::parse(in));
}

}  // namespace fpa
