#pragma once

#include <cstdint>
#include <limits>
#include <vector>

namespace pgc {

// Open addressing map from 64-bit keys to 32-bit values with backward-shift deletion.
// The all-ones key is reserved.
class PairMap {
 public:
  static constexpr std::uint64_t kEmpty = std::numeric_limits<std::uint64_t>::max();
  static constexpr std::uint32_t kMissing = std::numeric_limits<std::uint32_t>::max();

  explicit PairMap(std::size_t expected = 0) { rehash(capacity_for(expected)); }

  static std::uint64_t key(std::uint32_t a, std::uint32_t b) {
    return a < b ? (std::uint64_t(a) << 32) | b : (std::uint64_t(b) << 32) | a;
  }

  std::size_t size() const { return size_; }

  std::uint32_t find(std::uint64_t k) const {
    for (std::size_t i = slot(k);; i = (i + 1) & mask_) {
      if (keys_[i] == k) return values_[i];
      if (keys_[i] == kEmpty) return kMissing;
    }
  }

  // Returns false (and leaves the map unchanged) if the key is present.
  bool insert(std::uint64_t k, std::uint32_t v) {
    if (2 * (size_ + 1) > keys_.size()) rehash(keys_.size() * 2);
    std::size_t i = slot(k);
    for (; keys_[i] != kEmpty; i = (i + 1) & mask_)
      if (keys_[i] == k) return false;
    keys_[i] = k;
    values_[i] = v;
    ++size_;
    return true;
  }

  void assign(std::uint64_t k, std::uint32_t v) {
    for (std::size_t i = slot(k);; i = (i + 1) & mask_) {
      if (keys_[i] == k) {
        values_[i] = v;
        return;
      }
      if (keys_[i] == kEmpty) break;
    }
    insert(k, v);
  }

  bool erase(std::uint64_t k) {
    std::size_t i = slot(k);
    for (;; i = (i + 1) & mask_) {
      if (keys_[i] == kEmpty) return false;
      if (keys_[i] == k) break;
    }
    std::size_t j = i;
    for (;;) {
      j = (j + 1) & mask_;
      if (keys_[j] == kEmpty) break;
      const std::size_t home = slot(keys_[j]);
      // Move j back into the hole at i unless its home lies cyclically in (i, j].
      const bool stays = i <= j ? (i < home && home <= j) : (i < home || home <= j);
      if (stays) continue;
      keys_[i] = keys_[j];
      values_[i] = values_[j];
      i = j;
    }
    keys_[i] = kEmpty;
    --size_;
    return true;
  }

  template <typename F>
  void for_each(F&& f) const {
    for (std::size_t i = 0; i < keys_.size(); ++i)
      if (keys_[i] != kEmpty) f(keys_[i], values_[i]);
  }

  std::size_t memory_bytes() const { return keys_.capacity() * 8 + values_.capacity() * 4; }

 private:
  static std::size_t capacity_for(std::size_t n) {
    std::size_t c = 8;
    while (c < 2 * n + 2) c *= 2;
    return c;
  }

  std::size_t slot(std::uint64_t k) const {
    k ^= k >> 33;
    k *= 0xff51afd7ed558ccdULL;
    k ^= k >> 33;
    return static_cast<std::size_t>(k) & mask_;
  }

  void rehash(std::size_t cap) {
    std::vector<std::uint64_t> old_keys(cap, kEmpty);
    std::vector<std::uint32_t> old_values(cap, 0);
    old_keys.swap(keys_);
    old_values.swap(values_);
    mask_ = cap - 1;
    size_ = 0;
    for (std::size_t i = 0; i < old_keys.size(); ++i)
      if (old_keys[i] != kEmpty) insert(old_keys[i], old_values[i]);
  }

  std::vector<std::uint64_t> keys_;
  std::vector<std::uint32_t> values_;
  std::size_t mask_ = 0;
  std::size_t size_ = 0;
};

}  // namespace pgc
