#pragma once

#include <algorithm>
#include <functional>
#include <map>
#include <memory>
#include <mutex>
#include <vector>

namespace tautring {

/// Memoizes values built up to componentwise bounds; a request is served by any
/// stored value whose bounds dominate it, otherwise the value is rebuilt at the
/// componentwise maximum.
template <class Key, class Value>
class BoundedCache {
 public:
  using Builder = std::function<Value(const std::vector<int>&)>;

  std::shared_ptr<const Value> get(const Key& key, std::vector<int> need, const Builder& build) {
    std::lock_guard<std::mutex> lock(mu_);
    auto it = map_.find(key);
    if (it != map_.end()) {
      const auto& have = it->second.first;
      bool covered = true;
      for (std::size_t k = 0; k < need.size(); ++k) {
        if (need[k] > have[k]) covered = false;
        need[k] = std::max(need[k], have[k]);
      }
      if (covered) return it->second.second;
    }
    auto value = std::make_shared<const Value>(build(need));
    map_[key] = {need, value};
    return value;
  }

  void clear() {
    std::lock_guard<std::mutex> lock(mu_);
    map_.clear();
  }

 private:
  std::mutex mu_;
  std::map<Key, std::pair<std::vector<int>, std::shared_ptr<const Value>>> map_;
};

}  // namespace tautring
