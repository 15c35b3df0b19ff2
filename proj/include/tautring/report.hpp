#pragma once

#include <string>
#include <vector>

namespace tautring {

/// Outcome of a verification routine: ok until the first failed expectation.
struct CheckReport {
  bool ok = true;
  std::size_t checked = 0;
  std::vector<std::string> failures;

  void expect(bool cond, const std::string& what) {
    ++checked;
    if (!cond) {
      ok = false;
      if (failures.size() < 20) failures.push_back(what);
    }
  }
  void merge(const CheckReport& o) {
    ok = ok && o.ok;
    checked += o.checked;
    for (const auto& f : o.failures) {
      if (failures.size() < 20) failures.push_back(f);
    }
  }
  std::string first_failure() const { return failures.empty() ? std::string() : failures.front(); }
};

}  // namespace tautring
