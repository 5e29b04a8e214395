#pragma once

#include <bit>
#include <compare>
#include <cstddef>
#include <cstdint>
#include <initializer_list>
#include <vector>

namespace semipolar {

/// Fixed-universe bitset over point indices [0, universe).
class PointSet {
public:
  PointSet() = default;
  explicit PointSet(int universe)
      : universe_(universe), words_((universe + 63) / 64, 0) {}
  PointSet(int universe, std::initializer_list<int> members);
  PointSet(int universe, const std::vector<int> &members);

  static PointSet full(int universe);

  int universe() const { return universe_; }

  bool test(int i) const { return (words_[i >> 6] >> (i & 63)) & 1u; }
  void set(int i) { words_[i >> 6] |= std::uint64_t{1} << (i & 63); }
  void reset(int i) { words_[i >> 6] &= ~(std::uint64_t{1} << (i & 63)); }

  int count() const {
    int n = 0;
    for (auto w : words_)
      n += std::popcount(w);
    return n;
  }
  bool empty() const {
    for (auto w : words_)
      if (w)
        return false;
    return true;
  }
  bool any() const { return !empty(); }

  /// Lowest member, or -1.
  int first() const;
  /// Lowest member greater than i, or -1.
  int next(int i) const;

  bool subset_of(const PointSet &other) const;
  bool intersects(const PointSet &other) const;
  int intersection_count(const PointSet &other) const;

  PointSet &operator&=(const PointSet &o);
  PointSet &operator|=(const PointSet &o);
  /// Set difference.
  PointSet &operator-=(const PointSet &o);
  PointSet complement() const;

  friend PointSet operator&(PointSet a, const PointSet &b) { return a &= b; }
  friend PointSet operator|(PointSet a, const PointSet &b) { return a |= b; }
  friend PointSet operator-(PointSet a, const PointSet &b) { return a -= b; }

  std::vector<int> members() const;

  template <typename F> void for_each(F &&f) const {
    for (std::size_t w = 0; w < words_.size(); ++w) {
      std::uint64_t bits = words_[w];
      while (bits) {
        const int b = std::countr_zero(bits);
        f(static_cast<int>(w * 64 + b));
        bits &= bits - 1;
      }
    }
  }

  bool operator==(const PointSet &) const = default;
  auto operator<=>(const PointSet &) const = default;

  std::size_t hash() const;

private:
  int universe_ = 0;
  std::vector<std::uint64_t> words_;
};

struct PointSetHash {
  std::size_t operator()(const PointSet &s) const { return s.hash(); }
};

} // namespace semipolar
