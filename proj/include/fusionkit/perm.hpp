#pragma once

#include <algorithm>
#include <compare>
#include <cstddef>
#include <cstdint>
#include <initializer_list>
#include <numeric>
#include <stdexcept>
#include <string>
#include <vector>

namespace fusionkit {

/// Base exception for every recoverable failure raised by the library.
class Error : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

using Point = std::uint16_t;
inline constexpr std::size_t kMaxDegree = 65535;

/// A permutation of {0, ..., degree-1}.
///
/// Products compose left to right: `(a * b)[i] == b[a[i]]`, so conjugation
/// `x^g = g^-1 * x * g` is the usual right action.
class Perm {
 public:
  Perm() = default;

  explicit Perm(std::size_t degree) : images_(degree) {
    if (degree > kMaxDegree) throw Error("permutation degree too large");
    std::iota(images_.begin(), images_.end(), Point{0});
  }

  explicit Perm(std::vector<Point> images) : images_(std::move(images)) {
    if (images_.size() > kMaxDegree) throw Error("permutation degree too large");
    std::vector<bool> seen(images_.size(), false);
    for (Point p : images_) {
      if (p >= images_.size() || seen[p]) throw Error("images do not form a permutation");
      seen[p] = true;
    }
  }

  static Perm from_ints(const std::vector<int>& images) {
    std::vector<Point> pts;
    pts.reserve(images.size());
    for (int v : images) {
      if (v < 0 || static_cast<std::size_t>(v) >= images.size())
        throw Error("images do not form a permutation");
      pts.push_back(static_cast<Point>(v));
    }
    return Perm(std::move(pts));
  }

  /// Cycle notation on 0-based points, e.g. `from_cycles(4, {{0, 1, 2, 3}})`.
  static Perm from_cycles(std::size_t degree,
                          std::initializer_list<std::initializer_list<int>> cycles) {
    std::vector<Point> img(degree);
    std::iota(img.begin(), img.end(), Point{0});
    for (const auto& cycle : cycles) {
      std::vector<int> c(cycle);
      for (std::size_t i = 0; i < c.size(); ++i) {
        if (c[i] < 0 || static_cast<std::size_t>(c[i]) >= degree) throw Error("cycle point out of range");
        img[c[i]] = static_cast<Point>(c[(i + 1) % c.size()]);
      }
    }
    return Perm(std::move(img));
  }

  std::size_t degree() const { return images_.size(); }
  Point operator[](std::size_t i) const { return images_[i]; }
  const std::vector<Point>& images() const { return images_; }

  Perm operator*(const Perm& rhs) const {
    if (rhs.degree() != degree()) throw Error("degree mismatch in permutation product");
    Perm out;
    out.images_.resize(images_.size());
    for (std::size_t i = 0; i < images_.size(); ++i) out.images_[i] = rhs.images_[images_[i]];
    return out;
  }

  Perm inverse() const {
    Perm out;
    out.images_.resize(images_.size());
    for (std::size_t i = 0; i < images_.size(); ++i) out.images_[images_[i]] = static_cast<Point>(i);
    return out;
  }

  Perm pow(long long k) const {
    Perm base = k < 0 ? inverse() : *this;
    unsigned long long e = k < 0 ? static_cast<unsigned long long>(-k) : static_cast<unsigned long long>(k);
    Perm acc(degree());
    while (e) {
      if (e & 1U) acc = acc * base;
      base = base * base;
      e >>= 1U;
    }
    return acc;
  }

  /// g^-1 * this * g
  Perm conjugate_by(const Perm& g) const { return g.inverse() * *this * g; }

  bool is_identity() const {
    for (std::size_t i = 0; i < images_.size(); ++i)
      if (images_[i] != i) return false;
    return true;
  }

  std::uint64_t order() const {
    std::vector<bool> seen(images_.size(), false);
    std::uint64_t acc = 1;
    for (std::size_t i = 0; i < images_.size(); ++i) {
      if (seen[i]) continue;
      std::uint64_t len = 0;
      for (std::size_t j = i; !seen[j]; j = images_[j]) {
        seen[j] = true;
        ++len;
      }
      acc = std::lcm(acc, len);
    }
    return acc;
  }

  /// Direct-product embedding: acts as this on [offset, offset+degree) and fixes the rest.
  Perm shifted(std::size_t offset, std::size_t total_degree) const {
    std::vector<Point> img(total_degree);
    std::iota(img.begin(), img.end(), Point{0});
    for (std::size_t i = 0; i < images_.size(); ++i)
      img[offset + i] = static_cast<Point>(offset + images_[i]);
    return Perm(std::move(img));
  }

  std::string to_string() const {
    std::string s = "[";
    for (std::size_t i = 0; i < images_.size(); ++i) {
      if (i) s += ',';
      s += std::to_string(images_[i]);
    }
    return s + "]";
  }

  friend bool operator==(const Perm&, const Perm&) = default;
  friend auto operator<=>(const Perm& a, const Perm& b) { return a.images_ <=> b.images_; }

 private:
  std::vector<Point> images_;
};

inline std::uint64_t hash_mix(std::uint64_t h, std::uint64_t v) {
  h ^= v + 0x9e3779b97f4a7c15ULL + (h << 6) + (h >> 2);
  h *= 0xff51afd7ed558ccdULL;
  return h ^ (h >> 33);
}

struct PermHash {
  std::size_t operator()(const Perm& p) const {
    std::uint64_t h = 0xcbf29ce484222325ULL;
    for (Point x : p.images()) h = hash_mix(h, x);
    return static_cast<std::size_t>(h);
  }
};

}  // namespace fusionkit
