#pragma once

#include "semipolar/field.hpp"
#include "semipolar/incidence.hpp"
#include "semipolar/projective.hpp"

#include <optional>
#include <string>
#include <string_view>
#include <utility>
#include <vector>

namespace semipolar {

enum class FormKind { symplectic, parabolic, hyperbolic, elliptic, hermitian };

std::string_view to_string(FormKind kind);

using Matrix = std::vector<std::vector<int>>;

/// A reflexive form on GF(q)^dim.
///
/// `gram` is the bilinear (sesquilinear for hermitian) part, evaluated as
/// sum_ij x_i gram_ij s(y_j) with s the field involution for hermitian forms
/// and the identity otherwise. Quadratic kinds also carry `quadratic`, an
/// upper-triangular coefficient matrix with Q(x) = sum_{i<=j} c_ij x_i x_j;
/// their `gram` must be the polarization of Q.
struct FormSpec {
  FormKind kind = FormKind::symplectic;
  int dim = 0;
  FieldSpec field;
  Matrix gram;
  Matrix quadratic;

  bool is_quadratic() const {
    return kind == FormKind::parabolic || kind == FormKind::hyperbolic ||
           kind == FormKind::elliptic;
  }
};

/// Standard models. `vector_dim` for the symplectic form (Sp(2m, q)); the
/// projective dimension for quadrics (Q(2m, q), Q+(2m-1, q), Q-(2m+1, q))
/// and hermitian varieties H(n, q), where q must be a square.
FormSpec symplectic_form(int vector_dim, int q);
FormSpec parabolic_quadric(int projective_dim, int q);
FormSpec hyperbolic_quadric(int projective_dim, int q);
FormSpec elliptic_quadric(int projective_dim, int q);
FormSpec hermitian_form(int projective_dim, int q);

/// "sp:6:2", "q+:5:2", "q-:7:2", "q:6:2", "herm:5:4". The number after the
/// kind is the vector dimension for sp and the projective dimension for the
/// others; the last number is the field order.
FormSpec parse_form_descriptor(std::string_view descriptor);

/// A classical polar space: isotropic (singular) points of a form, with the
/// totally isotropic projective lines as lines.
class PolarSpace {
public:
  const IncidenceStructure &structure() const { return structure_; }
  const FormSpec &form() const { return form_; }
  const GaloisField &field() const { return *field_; }
  const FieldPtr &field_ptr() const { return field_; }
  int ambient_dim() const { return form_.dim - 1; }
  int rank() const { return rank_; }
  int n_points() const { return structure_.n_points(); }
  int n_lines() const { return structure_.n_lines(); }

  const ProjectivePoint &point(int id) const { return points_[id]; }
  const std::vector<ProjectivePoint> &points() const { return points_; }
  std::optional<int> index_of(const ProjectivePoint &p) const;
  const std::vector<PointSet> &planes() const { return planes_; }

  /// Value of the (polarized) form on representatives of a and b.
  int form_value(const std::vector<int> &x, const std::vector<int> &y) const;

private:
  friend PolarSpace build_polar_any_rank(const FormSpec &form);

  FormSpec form_;
  FieldPtr field_;
  std::vector<ProjectivePoint> points_;
  std::vector<std::pair<std::uint64_t, int>> key_index_; // sorted by key
  IncidenceStructure structure_;
  int rank_ = 0;
  std::vector<PointSet> planes_;
};

/// Throws ConfigurationError for malformed or degenerate forms and for
/// spaces of rank < 3.
PolarSpace build_polar(const FormSpec &form);

/// Builds without the rank >= 3 gate; for inspecting small spaces.
PolarSpace build_polar_any_rank(const FormSpec &form);

bool form_perp(const PolarSpace &ps, int a, int b);

int rank_of(const PolarSpace &ps);

/// Totally isotropic planes in lexicographic order of their point lists;
/// empty when the rank is below 3.
std::vector<PointSet> singular_planes(const PolarSpace &ps);

struct AxiomReport {
  bool partial_linear = true;
  bool thick = true;
  bool nondegenerate = true;
  bool one_or_all = true;

  std::optional<std::pair<int, int>> partial_linear_witness; // two lines
  std::optional<int> thick_witness;                          // a line
  std::optional<int> nondegenerate_witness;                  // a point
  std::optional<std::pair<int, int>> one_or_all_witness;     // point, line

  bool all() const {
    return partial_linear && thick && nondegenerate && one_or_all;
  }
};

AxiomReport check_polar_axioms(const IncidenceStructure &s);

/// Perps a^perp in point order, followed by the sections of the polar space
/// by ambient projective hyperplanes (dual coordinates in lexicographic
/// order). Duplicates are dropped, keeping the first occurrence.
std::vector<PointSet> hyperplane_candidates(const PolarSpace &ps);

} // namespace semipolar
