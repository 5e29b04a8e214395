#include "semipolar/incidence.hpp"

#include "semipolar/errors.hpp"

#include <algorithm>
#include <map>
#include <set>
#include <string>

namespace semipolar {

IncidenceStructure::IncidenceStructure(int n_points, std::vector<Line> lines)
    : n_points_(n_points), lines_(std::move(lines)) {
  if (n_points_ < 0)
    throw UsageError("negative point count");
  line_sets_.reserve(lines_.size());
  lines_through_.assign(n_points_, {});
  perp_.assign(n_points_, PointSet(n_points_));
  pair_line_.assign(static_cast<std::size_t>(n_points_) * n_points_, -1);

  for (int id = 0; id < n_lines(); ++id) {
    Line &l = lines_[id];
    std::sort(l.begin(), l.end());
    if (std::adjacent_find(l.begin(), l.end()) != l.end())
      throw UsageError("line " + std::to_string(id) + " repeats a point");
    if (l.size() < 2)
      throw UsageError("line " + std::to_string(id) +
                       " has fewer than two points");
    for (int p : l)
      if (p < 0 || p >= n_points_)
        throw UsageError("line " + std::to_string(id) +
                         " references point " + std::to_string(p));
    line_sets_.emplace_back(n_points_, l);
    for (int p : l) {
      lines_through_[p].push_back(id);
      perp_[p] |= line_sets_.back();
    }
    for (int a : l)
      for (int b : l) {
        int &slot = pair_line_[static_cast<std::size_t>(a) * n_points_ + b];
        if (a != b && slot < 0)
          slot = id;
      }
  }
  for (int p = 0; p < n_points_; ++p)
    perp_[p].set(p);
}

std::optional<int> IncidenceStructure::line_through(int a, int b) const {
  const int id = pair_line_[static_cast<std::size_t>(a) * n_points_ + b];
  if (id < 0)
    return std::nullopt;
  return id;
}

std::optional<int>
IncidenceStructure::find_line(const Line &sorted_points) const {
  if (sorted_points.size() < 2)
    return std::nullopt;
  for (int p : sorted_points)
    if (p < 0 || p >= n_points_)
      return std::nullopt;
  auto id = line_through(sorted_points[0], sorted_points[1]);
  if (!id)
    return std::nullopt;
  // a partial linear space has one candidate; otherwise scan
  for (int cand : lines_through_[sorted_points[0]])
    if (lines_[cand] == sorted_points)
      return cand;
  return std::nullopt;
}

bool collinear(const IncidenceStructure &s, int a, int b) {
  return s.collinear(a, b);
}

PointSet perp_of(const IncidenceStructure &s, int a) { return s.perp(a); }

PointSet set_perp(const IncidenceStructure &s, const PointSet &xs) {
  PointSet out = s.all_points();
  xs.for_each([&](int a) { out &= s.perp(a); });
  return out;
}

PointSet radical_of(const IncidenceStructure &s, const PointSet &xs) {
  return xs & set_perp(s, xs);
}

PointSet closure_of(const IncidenceStructure &s, const PointSet &xs) {
  PointSet out = xs;
  std::vector<int> queue = xs.members();
  while (!queue.empty()) {
    const int p = queue.back();
    queue.pop_back();
    for (int id : s.lines_through(p)) {
      const PointSet &l = s.line_set(id);
      if (l.subset_of(out) || l.intersection_count(out) < 2)
        continue;
      for (int x : s.line(id))
        if (!out.test(x)) {
          out.set(x);
          queue.push_back(x);
        }
    }
  }
  return out;
}

bool is_subspace(const IncidenceStructure &s, const PointSet &xs) {
  for (int id = 0; id < s.n_lines(); ++id) {
    const int meet = s.line_set(id).intersection_count(xs);
    if (meet >= 2 && meet < static_cast<int>(s.line(id).size()))
      return false;
  }
  return true;
}

bool is_hyperplane(const IncidenceStructure &s, const PointSet &xs) {
  if (xs.count() == s.n_points() || !is_subspace(s, xs))
    return false;
  for (int id = 0; id < s.n_lines(); ++id)
    if (!s.line_set(id).intersects(xs))
      return false;
  return true;
}

bool is_spiky(const IncidenceStructure &s, const PointSet &xs) {
  const PointSet outside = xs.complement();
  bool ok = true;
  xs.for_each([&](int a) {
    if (ok && !s.perp(a).intersects(outside))
      ok = false;
  });
  return ok;
}

bool is_scaly(const IncidenceStructure &s, const PointSet &xs) {
  const PointSet outside = xs.complement();
  for (int id : lines_inside(s, xs))
    if (!set_perp(s, s.line_set(id)).intersects(outside))
      return false;
  return true;
}

bool is_singular(const IncidenceStructure &s, const PointSet &xs) {
  bool ok = true;
  xs.for_each([&](int a) {
    if (ok && !xs.subset_of(s.perp(a)))
      ok = false;
  });
  return ok;
}

std::optional<int> singular_dim(const IncidenceStructure &s,
                                const PointSet &xs) {
  if (!is_subspace(s, xs))
    throw UsageError("singular_dim expects a subspace");
  if (!is_singular(s, xs))
    return std::nullopt;
  // Greedy generating set: inside a projective space every minimal one is a
  // basis.
  PointSet span = s.empty_set();
  int generators = 0;
  for (int p = xs.first(); p >= 0; p = xs.next(p)) {
    if (span.test(p))
      continue;
    span.set(p);
    span = closure_of(s, span);
    ++generators;
  }
  return generators - 1;
}

std::vector<int> lines_inside(const IncidenceStructure &s,
                              const PointSet &xs) {
  std::vector<int> out;
  for (int id = 0; id < s.n_lines(); ++id)
    if (s.line_set(id).subset_of(xs))
      out.push_back(id);
  return out;
}

namespace {

bool lex_less(const PointSet &a, const PointSet &b) {
  return a.members() < b.members();
}

std::vector<PointSet> next_level(const IncidenceStructure &s,
                                 const std::vector<PointSet> &level) {
  std::set<PointSet> found;
  for (const PointSet &x : level) {
    const PointSet candidates = set_perp(s, x) - x;
    candidates.for_each([&](int c) {
      PointSet grown = x;
      grown.set(c);
      grown = closure_of(s, grown);
      if (is_singular(s, grown))
        found.insert(std::move(grown));
    });
  }
  std::vector<PointSet> out(found.begin(), found.end());
  std::sort(out.begin(), out.end(), lex_less);
  return out;
}

std::vector<PointSet> points_level(const IncidenceStructure &s) {
  std::vector<PointSet> out;
  for (int p = 0; p < s.n_points(); ++p)
    out.emplace_back(s.n_points(), std::initializer_list<int>{p});
  return out;
}

} // namespace

std::vector<PointSet> singular_subspaces(const IncidenceStructure &s,
                                         int dim) {
  if (dim < 0)
    return {};
  std::vector<PointSet> level = points_level(s);
  for (int d = 1; d <= dim && !level.empty(); ++d)
    level = next_level(s, level);
  return level;
}

std::vector<std::vector<PointSet>>
singular_levels(const IncidenceStructure &s) {
  std::vector<std::vector<PointSet>> levels;
  std::vector<PointSet> level = points_level(s);
  while (!level.empty()) {
    auto next = next_level(s, level);
    levels.push_back(std::move(level));
    level = std::move(next);
  }
  return levels;
}

int rank_of(const IncidenceStructure &s) {
  return static_cast<int>(singular_levels(s).size());
}

} // namespace semipolar
