#pragma once

#include "semipolar/incidence.hpp"
#include "semipolar/polar.hpp"

#include <memory>
#include <optional>
#include <set>
#include <string_view>
#include <vector>

namespace semipolar {

/// A singular plane of the base that is not inside the horizon.
struct ComplementPlane {
  PointSet closure;              // base point ids
  PointSet improper;             // closure within the horizon
  std::vector<int> proper_points; // proper point ids
  std::vector<int> proper_lines;  // proper line ids contained in the plane
};

/// The complement of a horizon subspace W in a polar space.
///
/// Proper points are renumbered 0..n-1 in base order and proper lines
/// follow base line order. `structure()` is the complement's own incidence
/// data and is all that intrinsic constructions may look at; the base,
/// horizon and closure maps are ground truth.
class Complement {
public:
  /// Throws UsageError if `horizon` is not a subspace of the base, and
  /// HorizonRefusal if it is the whole point set or lies in no hyperplane of
  /// the candidate family.
  Complement(std::shared_ptr<const PolarSpace> base, PointSet horizon);

  const PolarSpace &base() const { return *base_; }
  const std::shared_ptr<const PolarSpace> &base_ptr() const { return base_; }
  const PointSet &horizon() const { return horizon_; }
  bool horizon_is_hyperplane() const { return horizon_is_hyperplane_; }

  const IncidenceStructure &structure() const { return structure_; }
  int n_proper_points() const { return structure_.n_points(); }
  int n_proper_lines() const { return structure_.n_lines(); }

  int base_point(int proper) const { return proper_to_base_[proper]; }
  std::optional<int> proper_point(int base) const;
  /// Base line whose trace is the proper line.
  int closure_line(int proper_line) const { return closure_line_[proper_line]; }
  std::optional<int> proper_line_of(int base_line) const;
  const PointSet &closure_set(int proper_line) const {
    return base_->structure().line_set(closure_line_[proper_line]);
  }

  const std::vector<ComplementPlane> &planes() const { return planes_; }
  const std::vector<PointSet> &hyperplane_family() const { return candidates_; }

  /// Same base and horizon with one proper line deleted from the incidence
  /// data.
  Complement without_line(int proper_line) const;

private:
  Complement(std::shared_ptr<const PolarSpace> base, PointSet horizon,
             std::set<int> dropped_base_lines);

  std::shared_ptr<const PolarSpace> base_;
  PointSet horizon_;
  bool horizon_is_hyperplane_ = false;
  std::set<int> dropped_;
  std::vector<int> proper_to_base_;
  std::vector<int> base_to_proper_;
  std::vector<int> closure_line_;
  std::vector<int> base_to_proper_line_;
  IncidenceStructure structure_;
  std::vector<ComplementPlane> planes_;
  std::vector<PointSet> candidates_;
};

Complement build_complement(std::shared_ptr<const PolarSpace> ps,
                            const PointSet &w);

/// Closures of k and l meet inside the horizon.
bool horizon_parallel(const Complement &c, int k, int l);
std::vector<int> affine_lines(const Complement &c);
bool is_affine(const Complement &c, int line);
/// Base id of the horizon point on the closure of an affine line.
int point_at_infinity(const Complement &c, int line);
/// Horizon points (base ids) that are the point at infinity of no line.
PointSet deep_points(const Complement &c);
const std::vector<ComplementPlane> &complement_planes(const Complement &c);
std::vector<int> semiaffine_planes(const Complement &c);
bool is_semiaffine(const Complement &c, int plane);
/// Points at infinity of the affine lines in a semiaffine plane (base ids).
PointSet plane_horizon(const Complement &c, int plane);
/// Base lines inside the horizon that are no plane's horizon.
std::vector<int> deep_lines(const Complement &c);

/// First hyperplane of the candidate family containing the horizon but
/// neither closure of k nor of l; the horizon itself when it is a
/// hyperplane. nullopt when the family is exhausted.
std::optional<PointSet> extend_to_avoiding_hyperplane(const Complement &c,
                                                      int k, int l);

/// Shortest chain of planes whose closures hold the common point at infinity
/// of k and l, consecutive planes sharing a proper line, the first holding
/// k and the last holding l. nullopt when no chain exists.
std::optional<std::vector<int>> plane_path(const Complement &c, int k, int l);

/// Resolves a horizon expression against the base:
///   point <id> | line <id> | plane <id> | perp <id>
///   | meet <expr> <expr> | span <id>,<id>,...
/// Line and plane ids index the base lines and singular planes. Throws
/// UsageError on malformed input and HorizonRefusal if the result is not a
/// subspace.
PointSet resolve_horizon(const PolarSpace &ps, std::string_view expr);

} // namespace semipolar
