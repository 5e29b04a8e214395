#include "semipolar/polar.hpp"

#include "semipolar/errors.hpp"

#include <algorithm>
#include <charconv>
#include <set>
#include <string>

namespace semipolar {

std::string_view to_string(FormKind kind) {
  switch (kind) {
  case FormKind::symplectic: return "symplectic";
  case FormKind::parabolic: return "quadratic-parabolic";
  case FormKind::hyperbolic: return "quadratic-hyperbolic";
  case FormKind::elliptic: return "quadratic-elliptic";
  case FormKind::hermitian: return "hermitian";
  }
  return "unknown";
}

namespace {

Matrix zero_matrix(int n) { return Matrix(n, std::vector<int>(n, 0)); }

// Polarization B(x, y) = Q(x + y) - Q(x) - Q(y) of an upper-triangular Q.
Matrix polarize(const GaloisField &f, const Matrix &quad) {
  const int n = static_cast<int>(quad.size());
  Matrix g = zero_matrix(n);
  for (int i = 0; i < n; ++i) {
    g[i][i] = f.add(quad[i][i], quad[i][i]);
    for (int j = i + 1; j < n; ++j) {
      g[i][j] = quad[i][j];
      g[j][i] = quad[i][j];
    }
  }
  return g;
}

FormSpec quadric(FormKind kind, int vector_dim, int q, Matrix quad) {
  FormSpec spec;
  spec.kind = kind;
  spec.dim = vector_dim;
  spec.field = standard_field(q);
  const GaloisField f(spec.field);
  spec.gram = polarize(f, quad);
  spec.quadratic = std::move(quad);
  return spec;
}

void require_dim(int projective_dim) {
  if (projective_dim < 1 || projective_dim > kMaxProjectiveDim)
    throw ConfigurationError("projective dimension " +
                             std::to_string(projective_dim) +
                             " outside [1, " +
                             std::to_string(kMaxProjectiveDim) + "]");
}

int parse_int(std::string_view text, std::string_view what) {
  int value = 0;
  auto [ptr, ec] = std::from_chars(text.data(), text.data() + text.size(), value);
  if (ec != std::errc{} || ptr != text.data() + text.size())
    throw ConfigurationError("bad " + std::string(what) + " '" +
                             std::string(text) + "'");
  return value;
}

} // namespace

FormSpec symplectic_form(int vector_dim, int q) {
  if (vector_dim % 2 != 0)
    throw ConfigurationError("symplectic forms need even dimension");
  require_dim(vector_dim - 1);
  FormSpec spec;
  spec.kind = FormKind::symplectic;
  spec.dim = vector_dim;
  spec.field = standard_field(q);
  const GaloisField f(spec.field);
  spec.gram = zero_matrix(vector_dim);
  for (int i = 0; i + 1 < vector_dim; i += 2) {
    spec.gram[i][i + 1] = 1;
    spec.gram[i + 1][i] = f.neg(1);
  }
  return spec;
}

FormSpec parabolic_quadric(int projective_dim, int q) {
  require_dim(projective_dim);
  if (projective_dim % 2 != 0)
    throw ConfigurationError("parabolic quadrics live in even dimension");
  const int n = projective_dim + 1;
  Matrix quad = zero_matrix(n);
  quad[0][0] = 1;
  for (int i = 1; i + 1 < n; i += 2)
    quad[i][i + 1] = 1;
  return quadric(FormKind::parabolic, n, q, std::move(quad));
}

FormSpec hyperbolic_quadric(int projective_dim, int q) {
  require_dim(projective_dim);
  if (projective_dim % 2 == 0)
    throw ConfigurationError("hyperbolic quadrics live in odd dimension");
  const int n = projective_dim + 1;
  Matrix quad = zero_matrix(n);
  for (int i = 0; i + 1 < n; i += 2)
    quad[i][i + 1] = 1;
  return quadric(FormKind::hyperbolic, n, q, std::move(quad));
}

FormSpec elliptic_quadric(int projective_dim, int q) {
  require_dim(projective_dim);
  if (projective_dim % 2 == 0)
    throw ConfigurationError("elliptic quadrics live in odd dimension");
  const int n = projective_dim + 1;
  const GaloisField f(standard_field(q));
  // x0^2 + x0 x1 + d x1^2 anisotropic: t^2 + t + d has no root
  int d = -1;
  for (int cand = 1; cand < q && d < 0; ++cand) {
    bool root = false;
    for (int t = 0; t < q && !root; ++t)
      root = f.add(f.add(f.mul(t, t), t), cand) == 0;
    if (!root)
      d = cand;
  }
  if (d < 0)
    throw ConfigurationError("no anisotropic binary form over GF(" +
                             std::to_string(q) + ")");
  Matrix quad = zero_matrix(n);
  quad[0][0] = 1;
  quad[0][1] = 1;
  quad[1][1] = d;
  for (int i = 2; i + 1 < n; i += 2)
    quad[i][i + 1] = 1;
  return quadric(FormKind::elliptic, n, q, std::move(quad));
}

FormSpec hermitian_form(int projective_dim, int q) {
  require_dim(projective_dim);
  FormSpec spec;
  spec.kind = FormKind::hermitian;
  spec.dim = projective_dim + 1;
  spec.field = standard_field(q);
  if (spec.field.k % 2 != 0)
    throw ConfigurationError("hermitian forms need a square field order");
  spec.gram = zero_matrix(spec.dim);
  for (int i = 0; i < spec.dim; ++i)
    spec.gram[i][i] = 1;
  return spec;
}

FormSpec parse_form_descriptor(std::string_view descriptor) {
  std::vector<std::string_view> parts;
  std::size_t start = 0;
  while (true) {
    const auto colon = descriptor.find(':', start);
    parts.push_back(descriptor.substr(start, colon - start));
    if (colon == std::string_view::npos)
      break;
    start = colon + 1;
  }
  if (parts.size() != 3)
    throw ConfigurationError("form descriptor '" + std::string(descriptor) +
                             "' is not kind:dim:q");
  const int dim = parse_int(parts[1], "dimension");
  const int q = parse_int(parts[2], "field order");
  const auto kind = parts[0];
  if (kind == "sp")
    return symplectic_form(dim, q);
  if (kind == "q")
    return parabolic_quadric(dim, q);
  if (kind == "q+")
    return hyperbolic_quadric(dim, q);
  if (kind == "q-")
    return elliptic_quadric(dim, q);
  if (kind == "herm")
    return hermitian_form(dim, q);
  throw ConfigurationError("unknown form kind '" + std::string(kind) + "'");
}

namespace {

class FormEvaluator {
public:
  FormEvaluator(const FormSpec &form, const GaloisField &f)
      : form_(form), f_(f), hermitian_(form.kind == FormKind::hermitian) {}

  int bilinear(const std::vector<int> &x, const std::vector<int> &y) const {
    int acc = 0;
    for (int i = 0; i < form_.dim; ++i) {
      if (x[i] == 0)
        continue;
      int row = 0;
      for (int j = 0; j < form_.dim; ++j) {
        const int yj = hermitian_ ? f_.conj(y[j]) : y[j];
        row = f_.add(row, f_.mul(form_.gram[i][j], yj));
      }
      acc = f_.add(acc, f_.mul(x[i], row));
    }
    return acc;
  }

  int quadratic(const std::vector<int> &x) const {
    int acc = 0;
    for (int i = 0; i < form_.dim; ++i)
      for (int j = i; j < form_.dim; ++j)
        if (form_.quadratic[i][j] != 0)
          acc = f_.add(acc, f_.mul(form_.quadratic[i][j], f_.mul(x[i], x[j])));
    return acc;
  }

  bool is_point(const std::vector<int> &x) const {
    if (form_.is_quadratic())
      return quadratic(x) == 0;
    return bilinear(x, x) == 0;
  }

  bool in_radical(const std::vector<int> &x) const {
    for (int j = 0; j < form_.dim; ++j) {
      int acc = 0;
      for (int i = 0; i < form_.dim; ++i)
        acc = f_.add(acc, f_.mul(x[i], form_.gram[i][j]));
      if (acc != 0)
        return false;
    }
    return true;
  }

private:
  const FormSpec &form_;
  const GaloisField &f_;
  bool hermitian_;
};

void validate_form(const FormSpec &form, const GaloisField &f) {
  const int n = form.dim;
  if (n < 2 || n - 1 > kMaxProjectiveDim)
    throw ConfigurationError("vector dimension " + std::to_string(n) +
                             " unsupported");
  auto check_matrix = [&](const Matrix &m, std::string_view name) {
    if (static_cast<int>(m.size()) != n)
      throw ConfigurationError(std::string(name) + " matrix has wrong size");
    for (const auto &row : m) {
      if (static_cast<int>(row.size()) != n)
        throw ConfigurationError(std::string(name) + " matrix has wrong size");
      for (int v : row)
        if (v < 0 || v >= f.order())
          throw ConfigurationError(std::string(name) +
                                   " matrix entry outside the field");
    }
  };
  check_matrix(form.gram, "gram");
  const Matrix &g = form.gram;
  switch (form.kind) {
  case FormKind::symplectic:
    for (int i = 0; i < n; ++i) {
      if (g[i][i] != 0)
        throw ConfigurationError("symplectic gram matrix is not alternating");
      for (int j = 0; j < n; ++j)
        if (g[j][i] != f.neg(g[i][j]))
          throw ConfigurationError("symplectic gram matrix is not alternating");
    }
    break;
  case FormKind::hermitian:
    if (!f.has_conjugation())
      throw ConfigurationError("hermitian forms need a field of even degree");
    for (int i = 0; i < n; ++i)
      for (int j = 0; j < n; ++j)
        if (g[j][i] != f.conj(g[i][j]))
          throw ConfigurationError("gram matrix is not conjugate-symmetric");
    break;
  default: {
    check_matrix(form.quadratic, "quadratic");
    for (int i = 0; i < n; ++i)
      for (int j = 0; j < i; ++j)
        if (form.quadratic[i][j] != 0)
          throw ConfigurationError("quadratic coefficients must be upper-triangular");
    if (polarize(f, form.quadratic) != g)
      throw ConfigurationError("gram matrix is not the polarization of the quadratic form");
    break;
  }
  }
}


} // namespace

std::optional<int> PolarSpace::index_of(const ProjectivePoint &p) const {
  const auto key = p.key(field_->order());
  auto it = std::lower_bound(
      key_index_.begin(), key_index_.end(), key,
      [](const auto &entry, std::uint64_t k) { return entry.first < k; });
  if (it == key_index_.end() || it->first != key)
    return std::nullopt;
  return it->second;
}

int PolarSpace::form_value(const std::vector<int> &x,
                           const std::vector<int> &y) const {
  return FormEvaluator(form_, *field_).bilinear(x, y);
}

PolarSpace build_polar(const FormSpec &form) {
  PolarSpace ps = build_polar_any_rank(form);
  if (ps.rank() < 3)
    throw ConfigurationError("rank " + std::to_string(ps.rank()) + " < 3");
  return ps;
}

PolarSpace build_polar_any_rank(const FormSpec &form) {
  PolarSpace ps;
  ps.form_ = form;
  ps.field_ = make_field(form.field);
  const GaloisField &f = *ps.field_;
  validate_form(form, f);
  const FormEvaluator eval(form, f);

  for (auto &p : pg_points(form.dim - 1, f)) {
    if (!eval.is_point(p.coords()))
      continue;
    if (eval.in_radical(p.coords()))
      throw ConfigurationError("degenerate form: point in the radical");
    ps.points_.push_back(std::move(p));
  }
  const int n = static_cast<int>(ps.points_.size());
  for (int i = 0; i < n; ++i)
    ps.key_index_.emplace_back(ps.points_[i].key(f.order()), i);

  std::vector<Line> lines;
  for (int a = 0; a < n; ++a) {
    for (int b = a + 1; b < n; ++b) {
      if (eval.bilinear(ps.points_[a].coords(), ps.points_[b].coords()) != 0)
        continue;
      Line line;
      bool first_pair = true;
      for (const auto &pt : pg_line(f, ps.points_[a], ps.points_[b])) {
        auto idx = ps.index_of(pt);
        if (!idx)
          throw IntegrityError("totally isotropic line leaves the point set");
        if (*idx != a && *idx != b && *idx < b)
          first_pair = false;
        line.push_back(*idx);
      }
      if (first_pair) {
        std::sort(line.begin(), line.end());
        lines.push_back(std::move(line));
      }
    }
  }
  std::sort(lines.begin(), lines.end());
  ps.structure_ = IncidenceStructure(n, std::move(lines));
  auto levels = singular_levels(ps.structure_);
  ps.rank_ = static_cast<int>(levels.size());
  if (levels.size() > 2)
    ps.planes_ = std::move(levels[2]);
  return ps;
}

bool form_perp(const PolarSpace &ps, int a, int b) {
  return ps.form_value(ps.point(a).coords(), ps.point(b).coords()) == 0;
}

int rank_of(const PolarSpace &ps) { return ps.rank(); }

std::vector<PointSet> singular_planes(const PolarSpace &ps) {
  return ps.planes();
}

AxiomReport check_polar_axioms(const IncidenceStructure &s) {
  AxiomReport r;
  const int n = s.n_points();

  std::vector<int> owner(static_cast<std::size_t>(n) * n, -1);
  for (int id = 0; id < s.n_lines() && r.partial_linear; ++id) {
    const Line &l = s.line(id);
    for (std::size_t i = 0; i < l.size() && r.partial_linear; ++i)
      for (std::size_t j = i + 1; j < l.size(); ++j) {
        int &slot = owner[static_cast<std::size_t>(l[i]) * n + l[j]];
        if (slot >= 0) {
          r.partial_linear = false;
          r.partial_linear_witness = std::make_pair(slot, id);
          break;
        }
        slot = id;
      }
  }

  for (int id = 0; id < s.n_lines(); ++id)
    if (s.line(id).size() < 3) {
      r.thick = false;
      r.thick_witness = id;
      break;
    }

  for (int a = 0; a < n; ++a)
    if (s.perp(a).count() == n) {
      r.nondegenerate = false;
      r.nondegenerate_witness = a;
      break;
    }

  for (int id = 0; id < s.n_lines() && r.one_or_all; ++id) {
    const PointSet &l = s.line_set(id);
    const int size = static_cast<int>(s.line(id).size());
    for (int a = 0; a < n; ++a) {
      if (l.test(a))
        continue;
      const int seen = s.perp(a).intersection_count(l);
      if (seen != 1 && seen != size) {
        r.one_or_all = false;
        r.one_or_all_witness = std::make_pair(a, id);
        break;
      }
    }
  }
  return r;
}

std::vector<PointSet> hyperplane_candidates(const PolarSpace &ps) {
  const int n = ps.n_points();
  std::vector<PointSet> out;
  std::set<PointSet> seen;
  auto push = [&](PointSet h) {
    if (h.count() == n || seen.contains(h))
      return;
    seen.insert(h);
    out.push_back(std::move(h));
  };
  for (int a = 0; a < n; ++a)
    push(ps.structure().perp(a));
  const GaloisField &f = ps.field();
  for (const auto &u : pg_points(ps.ambient_dim(), f)) {
    PointSet h(n);
    for (int x = 0; x < n; ++x) {
      const auto &c = ps.point(x).coords();
      int acc = 0;
      for (std::size_t i = 0; i < c.size(); ++i)
        acc = f.add(acc, f.mul(u.coords()[i], c[i]));
      if (acc == 0)
        h.set(x);
    }
    push(std::move(h));
  }
  return out;
}

} // namespace semipolar
