#pragma once

#include <cstddef>
#include <mutex>
#include <shared_mutex>
#include <unordered_map>

namespace windsec::analytic {

// Read-mostly memo table. Lookups share the lock; a miss computes outside
// the lock and inserts under an exclusive lock (first writer wins).
template <class Key, class Value, class Hash = std::hash<Key>>
class Memo {
 public:
  template <class Compute>
  Value get_or_compute(const Key& key, Compute&& compute) {
    {
      std::shared_lock lock(mu_);
      if (auto it = map_.find(key); it != map_.end()) return it->second;
    }
    Value v = compute();
    std::unique_lock lock(mu_);
    return map_.try_emplace(key, std::move(v)).first->second;
  }

  std::size_t size() const {
    std::shared_lock lock(mu_);
    return map_.size();
  }

  void clear() {
    std::unique_lock lock(mu_);
    map_.clear();
  }

 private:
  mutable std::shared_mutex mu_;
  std::unordered_map<Key, Value, Hash> map_;
};

}  // namespace windsec::analytic
