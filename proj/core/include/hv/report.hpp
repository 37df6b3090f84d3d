#pragma once

#include <cstddef>
#include <string>
#include <vector>

namespace hv {

/// Outcome of an exhaustive window check. Only the first `kMaxListed`
/// failures are kept verbatim; `failure_count` counts all of them.
struct CheckReport {
  static constexpr std::size_t kMaxListed = 64;

  std::string check;
  std::size_t cases = 0;
  std::size_t failure_count = 0;
  std::vector<std::string> failures;

  bool passed() const { return failure_count == 0; }

  void fail(std::string what) {
    ++failure_count;
    if (failures.size() < kMaxListed) failures.push_back(std::move(what));
  }

  void merge(const CheckReport& other) {
    cases += other.cases;
    for (const auto& f : other.failures) fail(f);
    failure_count += other.failure_count - other.failures.size();
  }
};

}  // namespace hv
