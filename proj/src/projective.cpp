#include "semipolar/projective.hpp"

#include "semipolar/errors.hpp"

#include <algorithm>
#include <string>

namespace semipolar {

namespace {

// Points beyond this make every downstream exhaustive pass impractical.
constexpr std::uint64_t kMaxPoints = 1u << 22;

} // namespace

std::vector<int> normalize(const GaloisField &field, std::vector<int> coords) {
  auto lead = std::find_if(coords.begin(), coords.end(),
                           [](int c) { return c != 0; });
  if (lead == coords.end())
    throw DomainError("the zero vector is not a projective point");
  const int scale = field.inv(*lead);
  for (int &c : coords)
    c = field.mul(c, scale);
  return coords;
}

ProjectivePoint::ProjectivePoint(const GaloisField &field,
                                 std::vector<int> coords) {
  for (int c : coords)
    if (c < 0 || c >= field.order())
      throw UsageError("coordinate out of field range");
  coords_ = normalize(field, std::move(coords));
}

std::uint64_t ProjectivePoint::key(int q) const {
  std::uint64_t k = 0;
  for (int c : coords_)
    k = k * static_cast<std::uint64_t>(q) + static_cast<std::uint64_t>(c);
  return k;
}

std::uint64_t pg_point_count(int n, int q) {
  std::uint64_t total = 0;
  std::uint64_t power = 1;
  for (int i = 0; i <= n; ++i) {
    total += power;
    power *= static_cast<std::uint64_t>(q);
  }
  return total;
}

std::vector<ProjectivePoint> pg_points(int n, const GaloisField &field) {
  if (n < 1)
    throw UsageError("projective dimension must be >= 1");
  if (n > kMaxProjectiveDim)
    throw ConfigurationError("projective dimension " + std::to_string(n) +
                             " exceeds " + std::to_string(kMaxProjectiveDim));
  const int q = field.order();
  if (pg_point_count(n, q) > kMaxPoints)
    throw ConfigurationError("PG(" + std::to_string(n) + "," +
                             std::to_string(q) + ") is too large");

  std::vector<ProjectivePoint> points;
  points.reserve(pg_point_count(n, q));
  // More leading zeros sorts first; within one leading position the free
  // tail runs in lexicographic order.
  for (int lead = n; lead >= 0; --lead) {
    const int free = n - lead;
    std::vector<int> tail(free, 0);
    while (true) {
      std::vector<int> coords(n + 1, 0);
      coords[lead] = 1;
      std::copy(tail.begin(), tail.end(), coords.begin() + lead + 1);
      points.emplace_back(field, std::move(coords));
      int pos = free - 1;
      while (pos >= 0 && tail[pos] == q - 1)
        tail[pos--] = 0;
      if (pos < 0)
        break;
      ++tail[pos];
    }
  }
  return points;
}

std::vector<ProjectivePoint> pg_line(const GaloisField &field,
                                     const ProjectivePoint &a,
                                     const ProjectivePoint &b) {
  if (a.coords().size() != b.coords().size())
    throw UsageError("points of different projective spaces");
  if (a == b)
    throw DomainError("a line needs two distinct points");
  std::vector<ProjectivePoint> line{a, b};
  const auto &va = a.coords();
  const auto &vb = b.coords();
  for (int lambda = 1; lambda < field.order(); ++lambda) {
    std::vector<int> v(va.size());
    for (std::size_t i = 0; i < va.size(); ++i)
      v[i] = field.add(va[i], field.mul(lambda, vb[i]));
    line.emplace_back(field, std::move(v));
  }
  std::sort(line.begin(), line.end());
  return line;
}

} // namespace semipolar
