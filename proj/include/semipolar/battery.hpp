#pragma once

#include "semipolar/complement.hpp"

#include <cstdint>
#include <optional>
#include <string>
#include <vector>

namespace semipolar {

enum class CheckStatus { pass, fail, skipped };

std::string_view to_string(CheckStatus s);

struct CheckResult {
  std::string check_id;
  CheckStatus status = CheckStatus::pass;
  std::optional<std::string> witness;
  long long checked = 0; // cases examined
  double elapsed_ms = 0;
};

struct BatteryOptions {
  std::uint64_t seed = 1;
  bool exhaustive = false;
  int pair_sample = 500;
  int triple_sample = 2000;
  int triple_exhaustive_limit = 40;
};

/// Runs every structural property of the complement and its reconstruction
/// against ground truth. Never throws on a failing property; failures are
/// reported with a witness. Checks that presuppose a non-hyperplane horizon
/// are skipped for hyperplane horizons.
///
/// Check ids, in order:
///   complement_partial_linear   the complement is a partial linear space
///   deep_points                 hyperplane: at most one deep point, in the
///                               radical; otherwise none, and W is spiky
///   hyperplane_extension        W extends to a hyperplane avoiding the
///                               closures of any two parallel lines
///   plane_chain                 parallel lines are joined by a chain of
///                               planes through their point at infinity
///   parallelism_coincidence     intrinsic parallelism equals ground truth
///   parallel_reflexivity        every affine line is star-parallel to a line
///                               that is star-parallel back to it
///   affine_lines_intrinsic      self-parallel lines are the affine lines
///   class_bijection             classes correspond to horizon points
///   anti_euclidean_deep_lines   class equivalence iff a deep line joins the
///                               points at infinity
///   pairwise_equiv_collinear    pairwise equivalent triples are collinear
///   ternary_collinearity        ternary collinearity iff collinear at infinity
///   deep_line_sets              equivalence line sets are the deep lines
///   plane_horizon_lines         plane horizon sets are the other lines of W
///   reconstruction_isomorphism  the canonical map is an isomorphism
std::vector<CheckResult> run_lemma_battery(const Complement &c,
                                           const BatteryOptions &opts = {});

int failed_checks(const std::vector<CheckResult> &results);

/// Unordered pairs of distinct ground-truth parallel lines, sampled down to
/// `limit` with a seeded shuffle unless `exhaustive`.
std::vector<std::pair<int, int>> parallel_pairs(const Complement &c,
                                                std::uint64_t seed, int limit,
                                                bool exhaustive);

} // namespace semipolar
