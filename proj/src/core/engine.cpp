#include "engine.hpp"

#include <array>
#include <bit>
#include <cstring>

#include "prn/error.hpp"
#include "prn/kernels.hpp"

namespace prn::detail {

void Engine::right_mul(std::span<const Index> xs, Index g, Index* out) const {
  for (std::size_t j = 0; j < xs.size(); ++j) out[j] = mul(xs[j], g);
}

void Engine::left_mul(std::span<const Index> xs, Index g, Index* out) const {
  for (std::size_t j = 0; j < xs.size(); ++j) out[j] = mul(g, xs[j]);
}

void Engine::conj_all(std::span<const Index> xs, Index g, Index ginv, Index* out) const {
  for (std::size_t j = 0; j < xs.size(); ++j) out[j] = mul(mul(ginv, xs[j]), g);
}

namespace {

constexpr Index kEmpty = ~Index{0};
constexpr std::size_t kChunk = 64;

class RowEngine final : public Engine {
 public:
  RowEngine(const std::vector<Elem>& elements, std::size_t degree) {
    stride_ = 16;
    while (stride_ < degree) stride_ *= 2;
    const std::size_t n = elements.size();
    rows_.resize(n * stride_);
    for (std::size_t i = 0; i < n; ++i) {
      std::uint8_t* row = rows_.data() + i * stride_;
      action_images(elements[i], row);
      for (std::size_t x = degree; x < stride_; ++x) row[x] = static_cast<std::uint8_t>(x);
    }
    std::size_t slots = 16;
    while (slots < 2 * n) slots *= 2;
    slots_.assign(slots, kEmpty);
    mask_ = slots - 1;
    for (std::size_t i = 0; i < n; ++i) {
      const std::uint8_t* row = rows_.data() + i * stride_;
      std::size_t h = hash(row) & mask_;
      while (slots_[h] != kEmpty) {
        if (std::memcmp(rows_.data() + std::size_t{slots_[h]} * stride_, row, stride_) == 0)
          throw Error(Errc::StructureCheckFailed, "point action is not faithful");
        h = (h + 1) & mask_;
      }
      slots_[h] = static_cast<Index>(i);
    }
  }

  std::string_view kind() const override { return "rows"; }

  Index mul(Index a, Index b) const override {
    std::array<std::uint8_t, 256> tmp;
    const std::uint8_t* ra = row(a);
    const std::uint8_t* rb = row(b);
    for (std::size_t x = 0; x < stride_; ++x) tmp[x] = rb[ra[x]];
    return lookup(tmp.data());
  }

  Index inv(Index a) const override {
    std::array<std::uint8_t, 256> tmp;
    const std::uint8_t* ra = row(a);
    for (std::size_t x = 0; x < stride_; ++x) tmp[ra[x]] = static_cast<std::uint8_t>(x);
    return lookup(tmp.data());
  }

  void right_mul(std::span<const Index> xs, Index g, Index* out) const override {
    batch(xs, out, [&](const Index* rows, std::size_t count, std::uint8_t* buf) {
      kernels::active().right_compose(rows_.data(), stride_, rows, count, row(g), buf);
    });
  }

  void left_mul(std::span<const Index> xs, Index g, Index* out) const override {
    batch(xs, out, [&](const Index* rows, std::size_t count, std::uint8_t* buf) {
      kernels::active().left_compose(rows_.data(), stride_, rows, count, row(g), buf);
    });
  }

  void conj_all(std::span<const Index> xs, Index g, Index ginv, Index* out) const override {
    batch(xs, out, [&](const Index* rows, std::size_t count, std::uint8_t* buf) {
      kernels::active().conjugate(rows_.data(), stride_, rows, count, row(g), row(ginv), buf);
    });
  }

 private:
  const std::uint8_t* row(Index i) const { return rows_.data() + std::size_t{i} * stride_; }

  std::uint64_t hash(const std::uint8_t* r) const {
    std::uint64_t h = 0x243F6A8885A308D3ull;
    for (std::size_t off = 0; off < stride_; off += 8) {
      std::uint64_t w;
      std::memcpy(&w, r + off, 8);
      h = std::rotl((h ^ w) * 0x9E3779B97F4A7C15ull, 29);
    }
    return h ^ (h >> 32);
  }

  Index lookup(const std::uint8_t* r) const {
    std::size_t h = hash(r) & mask_;
    while (true) {
      const Index cand = slots_[h];
      if (cand == kEmpty) throw Error(Errc::ElementNotInAmbient, "product left the group");
      if (std::memcmp(row(cand), r, stride_) == 0) return cand;
      h = (h + 1) & mask_;
    }
  }

  template <typename Kernel>
  void batch(std::span<const Index> xs, Index* out, Kernel&& kernel) const {
    alignas(32) std::array<std::uint8_t, kChunk * 256> buf;
    for (std::size_t start = 0; start < xs.size(); start += kChunk) {
      const std::size_t count = std::min(kChunk, xs.size() - start);
      kernel(xs.data() + start, count, buf.data());
      for (std::size_t j = 0; j < count; ++j) out[start + j] = lookup(buf.data() + j * stride_);
    }
  }

  std::size_t stride_ = 16;
  std::vector<std::uint8_t> rows_;
  std::vector<Index> slots_;
  std::size_t mask_ = 0;
};

class ElemEngine final : public Engine {
 public:
  explicit ElemEngine(const Group& group) : group_(group) {}
  std::string_view kind() const override { return "elem"; }
  Index mul(Index a, Index b) const override {
    return group_.index_of(multiply(group_.element(a), group_.element(b)));
  }
  Index inv(Index a) const override { return group_.index_of(inverse(group_.element(a))); }

 private:
  const Group& group_;
};

class DerivedEngine final : public Engine {
 public:
  DerivedEngine(GroupPtr parent, std::vector<Index> reps, std::vector<Index> project)
      : parent_(std::move(parent)), reps_(std::move(reps)), project_(std::move(project)) {}
  std::string_view kind() const override { return "derived"; }
  Index mul(Index a, Index b) const override {
    return project_[parent_->mul(reps_[a], reps_[b])];
  }
  Index inv(Index a) const override { return project_[parent_->inv(reps_[a])]; }

  void right_mul(std::span<const Index> xs, Index g, Index* out) const override {
    std::vector<Index> lifted(xs.size());
    for (std::size_t j = 0; j < xs.size(); ++j) lifted[j] = reps_[xs[j]];
    parent_->right_mul(lifted, reps_[g], lifted.data());
    for (std::size_t j = 0; j < xs.size(); ++j) out[j] = project_[lifted[j]];
  }

  void left_mul(std::span<const Index> xs, Index g, Index* out) const override {
    std::vector<Index> lifted(xs.size());
    for (std::size_t j = 0; j < xs.size(); ++j) lifted[j] = reps_[xs[j]];
    parent_->left_mul(lifted, reps_[g], lifted.data());
    for (std::size_t j = 0; j < xs.size(); ++j) out[j] = project_[lifted[j]];
  }

  void conj_all(std::span<const Index> xs, Index g, Index, Index* out) const override {
    std::vector<Index> lifted(xs.size());
    for (std::size_t j = 0; j < xs.size(); ++j) lifted[j] = reps_[xs[j]];
    parent_->conj_all(lifted, reps_[g], lifted.data());
    for (std::size_t j = 0; j < xs.size(); ++j) out[j] = project_[lifted[j]];
  }

 private:
  GroupPtr parent_;
  std::vector<Index> reps_;
  std::vector<Index> project_;
};

}  // namespace

std::unique_ptr<Engine> make_row_engine(const std::vector<Elem>& elements, std::size_t degree) {
  return std::make_unique<RowEngine>(elements, degree);
}

std::unique_ptr<Engine> make_elem_engine(const Group& group) {
  return std::make_unique<ElemEngine>(group);
}

std::unique_ptr<Engine> make_derived_engine(GroupPtr parent, std::vector<Index> reps,
                                            std::vector<Index> project) {
  return std::make_unique<DerivedEngine>(std::move(parent), std::move(reps), std::move(project));
}

}  // namespace prn::detail
