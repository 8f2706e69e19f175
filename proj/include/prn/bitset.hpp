#pragma once

#include <cstddef>
#include <cstdint>
#include <vector>

namespace prn {

// Fixed-size membership set over ambient element indices.
class Bitset {
 public:
  Bitset() = default;
  explicit Bitset(std::size_t size) : size_(size), words_((size + 63) / 64, 0) {}

  std::size_t size() const noexcept { return size_; }
  bool test(std::size_t i) const noexcept {
    return (words_[i >> 6] >> (i & 63)) & 1u;
  }
  void set(std::size_t i) noexcept { words_[i >> 6] |= std::uint64_t{1} << (i & 63); }
  void reset(std::size_t i) noexcept {
    words_[i >> 6] &= ~(std::uint64_t{1} << (i & 63));
  }
  void clear() noexcept;

  std::size_t count() const;
  std::size_t and_count(const Bitset& other) const;
  bool is_subset_of(const Bitset& other) const;
  Bitset& operator&=(const Bitset& other);
  Bitset& operator|=(const Bitset& other);

  // Set bits in increasing order.
  std::vector<std::uint32_t> to_indices() const;
  std::uint64_t hash() const noexcept;

  const std::vector<std::uint64_t>& words() const noexcept { return words_; }

  friend bool operator==(const Bitset&, const Bitset&) = default;

 private:
  std::size_t size_ = 0;
  std::vector<std::uint64_t> words_;
};

}  // namespace prn
