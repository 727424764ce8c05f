#pragma once

// Deciding Property (FA) for Aut(G), G a free product, from the isomorphism
// classes of its free factors and how often each one appears.

#include <cstddef>
#include <stdexcept>
#include <string>
#include <utility>
#include <vector>

#include <json.hpp>

#include "fpa/group.hpp"

namespace fpa {

class FaError : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

class TrivialProduct : public FaError {
 public:
  using FaError::FaError;
};

class UnsupportedZ : public FaError {
 public:
  using FaError::FaError;
};

enum class Tri { no, yes, unknown };
std::string to_string(Tri t);
Tri parse_tri(std::string const& s);

struct FactorFlags {
  Tri has_fa = Tri::unknown;
  Tri aut_has_fa = Tri::unknown;
  Tri aut_finite_abelianisation = Tri::unknown;
  Tri aut_no_increasing_union = Tri::unknown;
};

struct FactorClassInput {
  enum class Kind { finite, abstract, infinite_cyclic };

  Kind kind = Kind::abstract;
  std::string name;
  GroupPtr group;     // set for finite classes
  FactorFlags flags;  // all yes for finite classes
  std::size_t count = 1;

  static FactorClassInput finite(GroupPtr g, std::size_t count);
  static FactorClassInput abstract(std::string name, FactorFlags flags, std::size_t count);
  static FactorClassInput infinite_cyclic(std::size_t rank);
};

enum class FaResult { fa, not_fa, unknown };
std::string to_string(FaResult r);

struct TraceEntry {
  std::string condition;
  std::string citation;
  friend bool operator==(TraceEntry const&, TraceEntry const&) = default;
};

struct Verdict {
  FaResult result = FaResult::unknown;
  std::vector<TraceEntry> trace;
  friend bool operator==(Verdict const&, Verdict const&) = default;
};

/// Groups the factors into isomorphism classes, in order of first appearance.
std::vector<std::pair<GroupPtr, std::size_t>> classify_factors(std::vector<GroupPtr> const& groups);

/// Throws TrivialProduct for a single factor (other than Z itself) and
/// UnsupportedZ for infinite cyclic configurations that are not settled.
Verdict decide(std::vector<FactorClassInput> const& classes);

std::string explain(Verdict const& v);

/// Process exit code: 0 FA, 1 not FA, 2 unknown.
int exit_code(FaResult r);

/// "C2:4,S3:1,Z:2". Names resolve as builtin groups or group files; Z is
/// the infinite cyclic group. Isomorphic entries are merged.
std::vector<FactorClassInput> parse_factor_spec(std::string const& spec);
/// {"factors": [{"group": "C2", "count": 4}, {"group": "Z", "count": 1},
///   {"name": "H", "flags": {"has_FA": "yes", ...}, "count": 5}]}
std::vector<FactorClassInput> parse_factor_json(nlohmann::json const& j);
std::vector<FactorClassInput> load_factor_file(std::string const& path);

/// The two count rules for finite factors, exposed for exhaustive checks.
/// fa: all classes but at most one appear at least four times and that one
/// appears once. not_fa: some class appears two or three times, or two
/// classes appear once.
bool fa_count_rule(std::vector<std::size_t> const& counts);
bool not_fa_count_rule(std::vector<std::size_t> const& counts);

}  // namespace fpa
