#pragma once

#include <cstddef>
#include <functional>
#include <mutex>
#include <shared_mutex>
#include <utility>
#include <vector>

namespace involution_lab {

/// Append-only memo table for a sequence defined by a recurrence over its
/// own prefix. Entries never change once written. Readers share the lock;
/// extension takes it exclusively.
template <typename Value>
class SequenceCache {
 public:
  /// step(n, prefix) computes entry n from entries 0..n-1.
  using Step = std::function<Value(std::size_t, const std::vector<Value>&)>;

  explicit SequenceCache(Step step) : step_(std::move(step)) {}

  SequenceCache(const SequenceCache&) = delete;
  SequenceCache& operator=(const SequenceCache&) = delete;

  Value at(std::size_t index) {
    {
      std::shared_lock lock(mutex_);
      if (index < values_.size()) return values_[index];
    }
    std::unique_lock lock(mutex_);
    while (values_.size() <= index) {
      Value next = step_(values_.size(), values_);
      values_.push_back(std::move(next));
    }
    return values_[index];
  }

  std::size_t size() const {
    std::shared_lock lock(mutex_);
    return values_.size();
  }

  /// Recomputes the first `count` entries from scratch and compares them with
  /// the cached prefix (extending the cache as needed).
  bool self_test(std::size_t count) {
    if (count > 0) at(count - 1);
    std::vector<Value> fresh;
    fresh.reserve(count);
    for (std::size_t i = 0; i < count; ++i) {
      Value next = step_(i, fresh);
      fresh.push_back(std::move(next));
    }
    std::shared_lock lock(mutex_);
    for (std::size_t i = 0; i < count; ++i) {
      if (!(fresh[i] == values_[i])) return false;
    }
    return true;
  }

 private:
  Step step_;
  mutable std::shared_mutex mutex_;
  std::vector<Value> values_;
};

}  // namespace involution_lab
