#pragma once

#include <memory>
#include <mutex>
#include <shared_mutex>
#include <unordered_map>

namespace rtm::detail {

/// Thread-safe memo table. Values are computed outside the lock, so two
/// threads may race to compute the same entry; the first insert wins and both
/// observe identical values because every cached function is pure.
template <class Key, class Value, class Hash = std::hash<Key>>
class ConcurrentMemo {
 public:
  using Ptr = std::shared_ptr<const Value>;

  Ptr find(const Key& key) const {
    std::shared_lock lock(mutex_);
    auto it = map_.find(key);
    return it == map_.end() ? nullptr : it->second;
  }

  Ptr insert(const Key& key, Value value) {
    auto ptr = std::make_shared<const Value>(std::move(value));
    std::unique_lock lock(mutex_);
    return map_.try_emplace(key, std::move(ptr)).first->second;
  }

  template <class Compute>
  Ptr get_or_compute(const Key& key, Compute&& compute) {
    if (auto hit = find(key)) return hit;
    return insert(key, compute());
  }

  std::size_t size() const {
    std::shared_lock lock(mutex_);
    return map_.size();
  }

  void clear() {
    std::unique_lock lock(mutex_);
    map_.clear();
  }

 private:
  mutable std::shared_mutex mutex_;
  std::unordered_map<Key, Ptr, Hash> map_;
};

}  // namespace rtm::detail
