#pragma once

#include <compare>
#include <map>
#include <mutex>
#include <optional>
#include <shared_mutex>
#include <string>
#include <utility>
#include <vector>

#include "enumgeo/big_integer.hpp"

namespace enumgeo {

inline constexpr int kCacheSchema = 1;

/// "gw" for WDVV values, "wel_s0" for all-real-point Welschinger values.
struct MemoKey {
  std::string surface;
  std::vector<int> cls;
  std::string kind;

  friend auto operator<=>(const MemoKey&, const MemoKey&) = default;
};

/// Persistent map from (surface, class, kind) to an exact integer.
///
/// Readers share the lock. Concurrent writers of the same key always carry
/// the same value (every entry is a pure function of its key), so the last
/// write simply wins.
class MemoTable {
 public:
  MemoTable() = default;
  MemoTable(const MemoTable& other) : entries_(other.snapshot()) {}
  MemoTable& operator=(const MemoTable& other) {
    if (this != &other) {
      auto copy = other.snapshot();
      std::unique_lock lock(mutex_);
      entries_ = std::move(copy);
    }
    return *this;
  }

  std::optional<BigInt> find(const MemoKey& key) const {
    std::shared_lock lock(mutex_);
    const auto it = entries_.find(key);
    if (it == entries_.end()) return std::nullopt;
    return it->second;
  }

  void store(MemoKey key, BigInt value) {
    std::unique_lock lock(mutex_);
    entries_.insert_or_assign(std::move(key), std::move(value));
  }

  bool erase(const MemoKey& key) {
    std::unique_lock lock(mutex_);
    return entries_.erase(key) > 0;
  }

  std::size_t size() const {
    std::shared_lock lock(mutex_);
    return entries_.size();
  }

  /// Ordered copy: lexicographic by surface, class, kind.
  std::map<MemoKey, BigInt> snapshot() const {
    std::shared_lock lock(mutex_);
    return entries_;
  }

 private:
  mutable std::shared_mutex mutex_;
  std::map<MemoKey, BigInt> entries_;
};

}  // namespace enumgeo
