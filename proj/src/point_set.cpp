#include "semipolar/point_set.hpp"

#include "semipolar/errors.hpp"

#include <functional>
#include <string>

namespace semipolar {

namespace {

void check_member(int universe, int i) {
  if (i < 0 || i >= universe)
    throw UsageError("point index " + std::to_string(i) +
                     " outside [0, " + std::to_string(universe) + ")");
}

void check_same_universe(const PointSet &a, const PointSet &b) {
  if (a.universe() != b.universe())
    throw UsageError("point sets over different universes");
}

} // namespace

PointSet::PointSet(int universe, std::initializer_list<int> members)
    : PointSet(universe) {
  for (int m : members) {
    check_member(universe, m);
    set(m);
  }
}

PointSet::PointSet(int universe, const std::vector<int> &members)
    : PointSet(universe) {
  for (int m : members) {
    check_member(universe, m);
    set(m);
  }
}

PointSet PointSet::full(int universe) {
  PointSet s(universe);
  for (auto &w : s.words_)
    w = ~std::uint64_t{0};
  if (universe % 64 != 0 && !s.words_.empty())
    s.words_.back() = (std::uint64_t{1} << (universe % 64)) - 1;
  return s;
}

int PointSet::first() const {
  for (std::size_t w = 0; w < words_.size(); ++w)
    if (words_[w])
      return static_cast<int>(w * 64 + std::countr_zero(words_[w]));
  return -1;
}

int PointSet::next(int i) const {
  int start = i + 1;
  if (start >= universe_)
    return -1;
  std::size_t w = static_cast<std::size_t>(start >> 6);
  std::uint64_t bits = words_[w] & (~std::uint64_t{0} << (start & 63));
  while (true) {
    if (bits)
      return static_cast<int>(w * 64 + std::countr_zero(bits));
    if (++w >= words_.size())
      return -1;
    bits = words_[w];
  }
}

bool PointSet::subset_of(const PointSet &other) const {
  check_same_universe(*this, other);
  for (std::size_t w = 0; w < words_.size(); ++w)
    if (words_[w] & ~other.words_[w])
      return false;
  return true;
}

bool PointSet::intersects(const PointSet &other) const {
  check_same_universe(*this, other);
  for (std::size_t w = 0; w < words_.size(); ++w)
    if (words_[w] & other.words_[w])
      return true;
  return false;
}

int PointSet::intersection_count(const PointSet &other) const {
  check_same_universe(*this, other);
  int n = 0;
  for (std::size_t w = 0; w < words_.size(); ++w)
    n += std::popcount(words_[w] & other.words_[w]);
  return n;
}

PointSet &PointSet::operator&=(const PointSet &o) {
  check_same_universe(*this, o);
  for (std::size_t w = 0; w < words_.size(); ++w)
    words_[w] &= o.words_[w];
  return *this;
}

PointSet &PointSet::operator|=(const PointSet &o) {
  check_same_universe(*this, o);
  for (std::size_t w = 0; w < words_.size(); ++w)
    words_[w] |= o.words_[w];
  return *this;
}

PointSet &PointSet::operator-=(const PointSet &o) {
  check_same_universe(*this, o);
  for (std::size_t w = 0; w < words_.size(); ++w)
    words_[w] &= ~o.words_[w];
  return *this;
}

PointSet PointSet::complement() const { return full(universe_) - *this; }

std::vector<int> PointSet::members() const {
  std::vector<int> out;
  out.reserve(count());
  for_each([&](int i) { out.push_back(i); });
  return out;
}

std::size_t PointSet::hash() const {
  std::size_t h = static_cast<std::size_t>(universe_);
  for (auto w : words_)
    h ^= std::hash<std::uint64_t>{}(w) + 0x9e3779b97f4a7c15ULL + (h << 6) + (h >> 2);
  return h;
}

} // namespace semipolar
