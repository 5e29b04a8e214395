#pragma once

#include "semipolar/point_set.hpp"

#include <optional>
#include <span>
#include <vector>

namespace semipolar {

using Line = std::vector<int>;

/// Points [0, n) and lines given as sorted point-index sets.
///
/// Construction checks that indices are in range, that every line has at
/// least two distinct points, and sorts each line. Whether two lines share
/// more than one point is not enforced; check_polar_axioms reports it.
class IncidenceStructure {
public:
  IncidenceStructure() = default;
  IncidenceStructure(int n_points, std::vector<Line> lines);

  int n_points() const { return n_points_; }
  int n_lines() const { return static_cast<int>(lines_.size()); }

  const std::vector<Line> &lines() const { return lines_; }
  const Line &line(int id) const { return lines_[id]; }
  const PointSet &line_set(int id) const { return line_sets_[id]; }
  std::span<const int> lines_through(int p) const { return lines_through_[p]; }

  /// a == b, or some line holds both.
  bool collinear(int a, int b) const { return perp_[a].test(b); }
  /// Points collinear with a, a included.
  const PointSet &perp(int a) const { return perp_[a]; }
  /// Lowest-numbered line through a and b (a != b).
  std::optional<int> line_through(int a, int b) const;
  /// Line with exactly these points, if present.
  std::optional<int> find_line(const Line &sorted_points) const;

  PointSet empty_set() const { return PointSet(n_points_); }
  PointSet all_points() const { return PointSet::full(n_points_); }

  bool operator==(const IncidenceStructure &o) const {
    return n_points_ == o.n_points_ && lines_ == o.lines_;
  }

private:
  int n_points_ = 0;
  std::vector<Line> lines_;
  std::vector<PointSet> line_sets_;
  std::vector<std::vector<int>> lines_through_;
  std::vector<PointSet> perp_;
  std::vector<int> pair_line_; // n*n, -1 if none
};

bool collinear(const IncidenceStructure &s, int a, int b);
PointSet perp_of(const IncidenceStructure &s, int a);
/// Intersection of perps over xs; all points for empty xs.
PointSet set_perp(const IncidenceStructure &s, const PointSet &xs);
PointSet radical_of(const IncidenceStructure &s, const PointSet &xs);
/// Least subspace containing xs.
PointSet closure_of(const IncidenceStructure &s, const PointSet &xs);
bool is_subspace(const IncidenceStructure &s, const PointSet &xs);
/// Proper subspace meeting every line.
bool is_hyperplane(const IncidenceStructure &s, const PointSet &xs);
bool is_spiky(const IncidenceStructure &s, const PointSet &xs);
bool is_scaly(const IncidenceStructure &s, const PointSet &xs);
bool is_singular(const IncidenceStructure &s, const PointSet &xs);
/// Projective dimension of a singular subspace (-1 for the empty set), or
/// nullopt if xs is not singular. Throws UsageError if xs is not a subspace.
std::optional<int> singular_dim(const IncidenceStructure &s,
                                const PointSet &xs);

/// Lines entirely inside xs.
std::vector<int> lines_inside(const IncidenceStructure &s, const PointSet &xs);

/// All singular subspaces of projective dimension `dim`, each listed once
/// and ordered by their sorted point lists. Level 0 is the points, level 1
/// the lines; each further level extends the previous one by a point
/// collinear with everything already present.
std::vector<PointSet> singular_subspaces(const IncidenceStructure &s, int dim);

/// singular_subspaces for every dimension 0, 1, ... up to the last nonempty
/// level.
std::vector<std::vector<PointSet>>
singular_levels(const IncidenceStructure &s);

/// Length of the longest chain of nonempty singular subspaces.
int rank_of(const IncidenceStructure &s);

} // namespace semipolar
