#include "fpa/report.hpp"

#include <algorithm>
#include <atomic>
#include <exception>
#include <mutex>
#include <thread>
#include <tuple>

namespace fpa {

void SuiteReport::record(std::string check, std::string instance, bool passed,
                         std::string detail) {
  ++instances;
  if (!passed) failures.push_back({std::move(check), std::move(instance), std::move(detail)});
}

void SuiteReport::merge(SuiteReport const& other) {
  instances += other.instances;
  failures.insert(failures.end(), other.failures.begin(), other.failures.end());
}

void SuiteReport::finalize() {
  std::stable_sort(failures.begin(), failures.end(), [](Failure const& a, Failure const& b) {
    return std::tie(a.check, a.instance) < std::tie(b.check, b.instance);
  });
}

nlohmann::json SuiteReport::to_json() const {
  nlohmann::json fs = nlohmann::json::array();
  for (auto const& f : failures)
    fs.push_back({{"check", f.check}, {"instance", f.instance}, {"detail", f.detail}});
  return {{"suite", suite}, {"instances", instances}, {"failures", fs}};
}

std::string SuiteReport::summary() const {
  return suite + ": " + std::to_string(instances) + " instances, " +
         std::to_string(failures.size()) + " failures";
}

void parallel_for(std::size_t n, unsigned jobs, std::function<void(std::size_t)> const& fn) {
  if (jobs <= 1 || n <= 1) {
    for (std::size_t i = 0; i < n; ++i) fn(i);
    return;
  }
  std::atomic<std::size_t> next{0};
  std::exception_ptr error;
  std::mutex error_mutex;
  auto worker = [&] {
    for (std::size_t i; (i = next++) < n;) {
      try {
        fn(i);
      } catch (...) {
        std::lock_guard lock(error_mutex);
        if (!error) error = std::current_exception();
      }
    }
  };
  std::vector<std::thread> threads;
  for (unsigned t = 0; t < std::min<std::size_t>(jobs, n); ++t) threads.emplace_back(worker);
  for (auto& t : threads) t.join();
  if (error) std::rethrow_exception(error);
}

}  // namespace fpa
