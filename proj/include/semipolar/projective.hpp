#pragma once

#include "semipolar/field.hpp"

#include <compare>
#include <cstdint>
#include <vector>

namespace semipolar {

/// Largest supported projective dimension.
inline constexpr int kMaxProjectiveDim = 7;

/// Point of PG(n, q) stored with its first nonzero coordinate equal to 1.
class ProjectivePoint {
public:
  /// Normalizes `coords`; throws DomainError on the zero vector.
  ProjectivePoint(const GaloisField &field, std::vector<int> coords);

  const std::vector<int> &coords() const { return coords_; }
  int dimension() const { return static_cast<int>(coords_.size()) - 1; }

  /// Base-q integer with coords[0] most significant; ordering by key is the
  /// lexicographic order of normalized coordinates.
  std::uint64_t key(int q) const;

  auto operator<=>(const ProjectivePoint &) const = default;

private:
  std::vector<int> coords_;
};

std::vector<int> normalize(const GaloisField &field, std::vector<int> coords);

/// All (q^(n+1) - 1)/(q - 1) points of PG(n, q), lexicographically ordered.
std::vector<ProjectivePoint> pg_points(int n, const GaloisField &field);

/// The q + 1 points of the line through a and b, lexicographically ordered.
std::vector<ProjectivePoint> pg_line(const GaloisField &field,
                                     const ProjectivePoint &a,
                                     const ProjectivePoint &b);

std::uint64_t pg_point_count(int n, int q);

} // namespace semipolar
