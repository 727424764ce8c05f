#pragma once

// Results of the verification suites.

#include <cstddef>
#include <functional>
#include <string>
#include <vector>

#include <json.hpp>

namespace fpa {

struct Failure {
  std::string check;     // which relation or property
  std::string instance;  // instance key, used for ordering
  std::string detail;
};

struct SuiteReport {
  std::string suite;
  std::size_t instances = 0;
  std::vector<Failure> failures;

  bool ok() const noexcept { return failures.empty(); }
  void record(std::string check, std::string instance, bool passed, std::string detail = {});
  void merge(SuiteReport const& other);
  /// Sorts failures by (check, instance) so output is independent of scheduling.
  void finalize();
  nlohmann::json to_json() const;
  std::string summary() const;
};

/// Runs fn(0..n-1) on up to `jobs` threads; results are returned in index order.
template <class T>
std::vector<T> parallel_map(std::size_t n, unsigned jobs, std::function<T(std::size_t)> const& fn);

void parallel_for(std::size_t n, unsigned jobs, std::function<void(std::size_t)> const& fn);

template <class T>
std::vector<T> parallel_map(std::size_t n, unsigned jobs, std::function<T(std::size_t)> const& fn) {
  std::vector<T> out(n);
  parallel_for(n, jobs, [&](std::size_t i) { out[i] = fn(i); });
  return out;
}

}  // namespace fpa
