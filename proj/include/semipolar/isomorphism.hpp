#pragma once

#include "semipolar/incidence.hpp"

#include <optional>
#include <string>
#include <vector>

namespace semipolar {

/// Point bijection, indexed by the source point id.
using PointMap = std::vector<int>;

struct IsomorphismCertificate {
  bool isomorphic = false;
  std::vector<int> line_map;         // source line -> target line, when isomorphic
  std::optional<int> violating_line; // first source line with no image line
  std::string reason;
};

/// Checks that m carries the lines of a bijectively onto the lines of b.
/// Throws UsageError if m is not a bijection between the point sets.
IsomorphismCertificate is_isomorphism(const IncidenceStructure &a,
                                      const IncidenceStructure &b,
                                      const PointMap &m);

/// Backtracking search for a point bijection carrying lines to lines.
/// Candidates are pruned by iterated color refinement and kept consistent
/// with collinearity and with the lines already fixed. Deterministic.
std::optional<PointMap> find_isomorphism(const IncidenceStructure &a,
                                         const IncidenceStructure &b);

} // namespace semipolar
