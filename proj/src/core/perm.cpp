#include "prn/perm.hpp"

#include <algorithm>
#include <numeric>
#include <set>
#include <string>

#include "prn/error.hpp"

namespace prn {

Perm::Perm(std::vector<Point> images) : images_(std::move(images)) {
  std::vector<bool> seen(images_.size(), false);
  for (Point p : images_) {
    if (p >= images_.size() || seen[p])
      throw Error(Errc::InvalidArgument, "images do not form a permutation");
    seen[p] = true;
  }
}

Perm Perm::identity(std::size_t degree) {
  Perm p;
  p.images_.resize(degree);
  std::iota(p.images_.begin(), p.images_.end(), Point{0});
  return p;
}

Perm Perm::from_cycles(std::size_t degree,
                       std::initializer_list<std::initializer_list<Point>> cycles) {
  std::vector<Point> images(degree);
  std::iota(images.begin(), images.end(), Point{0});
  for (const auto& cycle : cycles) {
    std::vector<Point> c(cycle);
    for (std::size_t i = 0; i < c.size(); ++i) {
      if (c[i] >= degree) throw Error(Errc::InvalidArgument, "cycle point out of range");
      images[c[i]] = c[(i + 1) % c.size()];
    }
  }
  return Perm(std::move(images));
}

Perm Perm::unrank(std::size_t degree, std::uint64_t r) {
  std::vector<Point> pool(degree);
  std::iota(pool.begin(), pool.end(), Point{0});
  std::vector<Point> images;
  images.reserve(degree);
  for (std::size_t i = degree; i > 0; --i) {
    const std::uint64_t f = factorial(i - 1);
    const std::size_t k = static_cast<std::size_t>(r / f);
    r %= f;
    images.push_back(pool[k]);
    pool.erase(pool.begin() + static_cast<std::ptrdiff_t>(k));
  }
  return Perm(std::move(images));
}

Perm Perm::inverse() const {
  Perm p;
  p.images_.resize(images_.size());
  for (std::size_t i = 0; i < images_.size(); ++i) p.images_[images_[i]] = static_cast<Point>(i);
  return p;
}

bool Perm::is_identity() const noexcept {
  for (std::size_t i = 0; i < images_.size(); ++i)
    if (images_[i] != i) return false;
  return true;
}

bool Perm::is_transposition() const noexcept {
  std::size_t moved = 0;
  for (std::size_t i = 0; i < images_.size(); ++i) {
    if (images_[i] == i) continue;
    if (images_[images_[i]] != i) return false;
    ++moved;
  }
  return moved == 2;
}

std::uint64_t Perm::order() const {
  std::uint64_t result = 1;
  std::vector<bool> seen(images_.size(), false);
  for (std::size_t i = 0; i < images_.size(); ++i) {
    if (seen[i]) continue;
    std::uint64_t len = 0;
    for (std::size_t j = i; !seen[j]; j = images_[j]) {
      seen[j] = true;
      ++len;
    }
    result = std::lcm(result, len);
  }
  return result;
}

std::uint64_t Perm::rank() const {
  const std::size_t n = images_.size();
  if (n > 20) throw Error(Errc::CapExceeded, "permutation rank overflows 64 bits");
  std::uint64_t r = 0;
  for (std::size_t i = 0; i < n; ++i) {
    std::uint64_t smaller = 0;
    for (std::size_t j = i + 1; j < n; ++j)
      if (images_[j] < images_[i]) ++smaller;
    r += smaller * factorial(n - 1 - i);
  }
  return r;
}

Perm compose(const Perm& a, const Perm& b) {
  if (a.degree() != b.degree())
    throw Error(Errc::DegreeMismatch, "compose: degrees " + std::to_string(a.degree()) +
                                          " and " + std::to_string(b.degree()));
  std::vector<Point> images(a.degree());
  for (std::size_t x = 0; x < images.size(); ++x) images[x] = b(a(x));
  return Perm(std::move(images));
}

std::uint64_t factorial(std::size_t n) {
  if (n > 20) throw Error(Errc::CapExceeded, "factorial overflows 64 bits");
  std::uint64_t f = 1;
  for (std::size_t i = 2; i <= n; ++i) f *= i;
  return f;
}

namespace {

std::size_t common_degree(std::span<const Perm> gens) {
  if (gens.empty()) throw Error(Errc::InvalidArgument, "empty generating set");
  const std::size_t n = gens.front().degree();
  for (const Perm& g : gens)
    if (g.degree() != n) throw Error(Errc::DegreeMismatch, "generators of mixed degree");
  return n;
}

struct UnionFind {
  std::vector<Point> parent;
  explicit UnionFind(std::size_t n) : parent(n) {
    std::iota(parent.begin(), parent.end(), Point{0});
  }
  Point find(Point x) {
    while (parent[x] != x) x = parent[x] = parent[parent[x]];
    return x;
  }
};

}  // namespace

std::vector<std::vector<Point>> orbits(std::span<const Perm> gens, std::size_t degree) {
  for (const Perm& g : gens)
    if (g.degree() != degree) throw Error(Errc::DegreeMismatch, "orbit generator degree");
  std::vector<int> label(degree, -1);
  std::vector<std::vector<Point>> out;
  for (Point start = 0; start < degree; ++start) {
    if (label[start] >= 0) continue;
    std::vector<Point> orbit{start};
    label[start] = static_cast<int>(out.size());
    for (std::size_t i = 0; i < orbit.size(); ++i)
      for (const Perm& g : gens) {
        const Point y = g(orbit[i]);
        if (label[y] < 0) {
          label[y] = static_cast<int>(out.size());
          orbit.push_back(y);
        }
      }
    std::sort(orbit.begin(), orbit.end());
    out.push_back(std::move(orbit));
  }
  return out;
}

bool is_transitive(std::span<const Perm> gens) {
  const std::size_t n = common_degree(gens);
  return orbits(gens, n).size() <= 1;
}

bool is_primitive(std::span<const Perm> gens) {
  const std::size_t n = common_degree(gens);
  if (orbits(gens, n).size() > 1) throw Error(Errc::NotTransitive, "is_primitive");
  // Smallest block containing {0, x}: merge classes and push the merge along
  // every generator until the partition is invariant.
  for (Point x = 1; x < n; ++x) {
    UnionFind uf(n);
    std::vector<std::pair<Point, Point>> pending{{0, x}};
    uf.parent[x] = 0;
    std::size_t classes = n - 1;
    while (!pending.empty()) {
      const auto [a, b] = pending.back();
      pending.pop_back();
      for (const Perm& g : gens) {
        const Point ra = uf.find(g(a));
        const Point rb = uf.find(g(b));
        if (ra == rb) continue;
        uf.parent[std::max(ra, rb)] = std::min(ra, rb);
        --classes;
        pending.emplace_back(ra, rb);
      }
    }
    if (classes > 1) return false;
  }
  return true;
}

bool contains_transposition(std::span<const Perm> gens, std::size_t cap) {
  if (gens.empty()) return false;
  const std::size_t n = common_degree(gens);
  std::set<std::vector<Point>> seen;
  std::vector<Perm> queue{Perm::identity(n)};
  seen.insert(queue.front().images());
  for (std::size_t i = 0; i < queue.size(); ++i) {
    if (queue[i].is_transposition()) return true;
    for (const Perm& g : gens) {
      Perm next = compose(queue[i], g);
      if (seen.insert(next.images()).second) {
        if (seen.size() > cap) throw Error(Errc::CapExceeded, "contains_transposition");
        queue.push_back(std::move(next));
      }
    }
  }
  return false;
}

std::vector<Point> fixed_points(std::span<const Perm> gens, std::size_t degree) {
  std::vector<Point> out;
  for (Point x = 0; x < degree; ++x) {
    bool fixed = true;
    for (const Perm& g : gens) {
      if (g.degree() != degree) throw Error(Errc::DegreeMismatch, "fixed_points");
      if (g(x) != x) {
        fixed = false;
        break;
      }
    }
    if (fixed) out.push_back(x);
  }
  return out;
}

}  // namespace prn
