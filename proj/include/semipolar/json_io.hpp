#pragma once

#include "semipolar/battery.hpp"
#include "semipolar/complement.hpp"
#include "semipolar/isomorphism.hpp"
#include "semipolar/polar.hpp"
#include "semipolar/reconstruct.hpp"

#include <json.hpp>

#include <filesystem>
#include <string>
#include <vector>

namespace semipolar {

using Json = nlohmann::json;

// Objects keep sorted keys and every value is an integer, string, boolean or
// array of those. The canonical text is a two-space indented dump followed by
// a single LF.

std::string canonical_dump(const Json &doc);
void write_canonical(const std::filesystem::path &path, const Json &doc);
Json read_json(const std::filesystem::path &path);

/// {n_points, lines}
Json incidence_to_json(const IncidenceStructure &s);
/// Accepts any object carrying n_points and lines; extra keys are ignored.
/// Throws UsageError on a malformed document.
IncidenceStructure incidence_from_json(const Json &doc);

/// {meta, n_points, lines, form}; form holds the field, Gram and quadratic
/// coefficients and the coordinates of every point.
Json polar_to_json(const PolarSpace &ps, const std::string &descriptor);

Json axioms_to_json(const AxiomReport &r, int rank);

Json complement_to_json(const Complement &c, const std::string &horizon_expr);

/// Incidence data of the reconstruction, the family annex and, when given,
/// the canonical map from base points.
Json reconstructed_to_json(const ReconstructedStructure &r,
                           const std::vector<int> *canonical = nullptr);

/// One entry per check; elapsed_ms (rounded to an integer) only with
/// `timings`.
Json battery_to_json(const std::vector<CheckResult> &results, bool timings);

} // namespace semipolar
