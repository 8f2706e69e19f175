#include "prn/bitset.hpp"

#include <algorithm>
#include <bit>

#include "prn/kernels.hpp"

namespace prn {

void Bitset::clear() noexcept { std::fill(words_.begin(), words_.end(), 0); }

std::size_t Bitset::count() const {
  return kernels::active().popcount(words_.data(), words_.size());
}

std::size_t Bitset::and_count(const Bitset& other) const {
  return kernels::active().and_popcount(words_.data(), other.words_.data(),
                                        std::min(words_.size(), other.words_.size()));
}

bool Bitset::is_subset_of(const Bitset& other) const {
  if (other.words_.size() != words_.size()) return false;
  return kernels::active().is_subset(words_.data(), other.words_.data(),
                                     words_.size());
}

Bitset& Bitset::operator&=(const Bitset& other) {
  for (std::size_t i = 0; i < words_.size(); ++i) words_[i] &= other.words_[i];
  return *this;
}

Bitset& Bitset::operator|=(const Bitset& other) {
  for (std::size_t i = 0; i < words_.size(); ++i) words_[i] |= other.words_[i];
  return *this;
}

std::vector<std::uint32_t> Bitset::to_indices() const {
  std::vector<std::uint32_t> out;
  out.reserve(count());
  for (std::size_t w = 0; w < words_.size(); ++w) {
    std::uint64_t bits = words_[w];
    while (bits) {
      const int b = std::countr_zero(bits);
      out.push_back(static_cast<std::uint32_t>(w * 64 + b));
      bits &= bits - 1;
    }
  }
  return out;
}

std::uint64_t Bitset::hash() const noexcept {
  std::uint64_t h = 0x9E3779B97F4A7C15ull ^ size_;
  for (std::uint64_t w : words_) {
    h ^= w + 0x9E3779B97F4A7C15ull + (h << 6) + (h >> 2);
    h *= 0xBF58476D1CE4E5B9ull;
  }
  return h;
}

}  // namespace prn
