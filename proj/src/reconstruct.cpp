#include "semipolar/reconstruct.hpp"

#include "semipolar/errors.hpp"
#include "semipolar/union_find.hpp"

#include <algorithm>
#include <set>
#include <string>
#include <tuple>

namespace semipolar {

bool star_parallel(const IncidenceStructure &s, int k1, int k2) {
  if (k1 == k2 || s.line_set(k1).intersects(s.line_set(k2)))
    return false;
  struct Transversal {
    int line, x, y;
  };
  std::vector<Transversal> ts;
  for (int x : s.line(k1))
    for (int y : s.line(k2))
      if (auto t = s.line_through(x, y))
        ts.push_back({*t, x, y});
  const PointSet both = s.line_set(k1) | s.line_set(k2);
  for (std::size_t i = 0; i < ts.size(); ++i)
    for (std::size_t j = i + 1; j < ts.size(); ++j) {
      if (ts[i].line == ts[j].line || ts[i].x == ts[j].x || ts[i].y == ts[j].y)
        continue;
      const PointSet meet = s.line_set(ts[i].line) & s.line_set(ts[j].line);
      if (meet.any() && !meet.intersects(both))
        return true;
    }
  return false;
}

bool star_parallel(const Complement &c, int k1, int k2) {
  return star_parallel(c.structure(), k1, k2);
}

std::vector<std::vector<int>>
star_parallel_neighbors(const IncidenceStructure &s) {
  std::vector<std::set<int>> nb(s.n_lines());
  for (int p = 0; p < s.n_points(); ++p) {
    const auto through = s.lines_through(p);
    for (std::size_t i = 0; i < through.size(); ++i)
      for (std::size_t j = i + 1; j < through.size(); ++j) {
        const Line &l1 = s.line(through[i]);
        const Line &l2 = s.line(through[j]);
        for (int x1 : l1)
          for (int x2 : l2) {
            if (x1 == p || x2 == p)
              continue;
            const auto k1 = s.line_through(x1, x2);
            if (!k1 || s.line_set(*k1).test(p))
              continue;
            for (int y1 : l1)
              for (int y2 : l2) {
                if (y1 == p || y2 == p || y1 == x1 || y2 == x2)
                  continue;
                const auto k2 = s.line_through(y1, y2);
                if (!k2 || *k2 == *k1 || s.line_set(*k2).test(p) ||
                    s.line_set(*k1).intersects(s.line_set(*k2)))
                  continue;
                nb[*k1].insert(*k2);
                nb[*k2].insert(*k1);
              }
          }
      }
  }
  std::vector<std::vector<int>> out(s.n_lines());
  for (int l = 0; l < s.n_lines(); ++l)
    out[l].assign(nb[l].begin(), nb[l].end());
  return out;
}

ParallelRelation parallel_closure(const IncidenceStructure &s) {
  ParallelRelation rel;
  rel.star = star_parallel_neighbors(s);
  const int n = s.n_lines();
  UnionFind uf(n);
  for (int l = 0; l < n; ++l)
    for (int m : rel.star[l])
      uf.join(l, m);
  rel.classes.class_of.assign(n, -1);
  std::vector<int> root_class(n, -1);
  for (int l = 0; l < n; ++l) {
    if (rel.star[l].empty())
      continue;
    const int r = uf.find(l);
    if (root_class[r] < 0) {
      root_class[r] = rel.classes.count();
      rel.classes.classes.emplace_back();
    }
    rel.classes.class_of[l] = root_class[r];
    rel.classes.classes[root_class[r]].push_back(l);
  }
  return rel;
}

ParallelRelation parallel_closure(const Complement &c) {
  return parallel_closure(c.structure());
}

std::vector<int> intrinsic_affine_lines(const ParallelRelation &rel) {
  std::vector<int> out;
  for (int l = 0; l < static_cast<int>(rel.classes.class_of.size()); ++l)
    if (rel.self_parallel(l))
      out.push_back(l);
  return out;
}

std::vector<int> intrinsic_affine_lines(const Complement &c) {
  return intrinsic_affine_lines(parallel_closure(c));
}

bool anti_euclidean(const IncidenceStructure &s, const ParallelRelation &rel,
                    int k1, int k2) {
  if (!rel.self_parallel(k1) || !rel.self_parallel(k2))
    throw DomainError("anti-euclidean relation is defined on affine lines");
  for (int a : s.line(k1))
    for (int m : s.lines_through(a))
      if (rel.parallel(m, k2))
        return false;
  return true;
}

bool equiv_classes(const IncidenceStructure &s, const ParallelRelation &rel,
                   int c1, int c2) {
  const auto &cls = rel.classes.classes;
  if (c1 < 0 || c2 < 0 || c1 >= rel.classes.count() ||
      c2 >= rel.classes.count())
    throw UsageError("class index out of range");
  for (int m : cls[c1])
    for (int n : cls[c2])
      if (!anti_euclidean(s, rel, m, n) || !anti_euclidean(s, rel, n, m))
        return false;
  return true;
}

ClassGeometry::ClassGeometry(const IncidenceStructure &s, ParallelRelation rel)
    : s_(&s), rel_(std::move(rel)) {
  const int n = n_classes();
  std::vector<PointSet> shadow(n, PointSet(s.n_points()));
  for (int c = 0; c < n; ++c)
    for (int l : rel_.classes.classes[c])
      shadow[c] |= s.line_set(l);
  equiv_.assign(static_cast<std::size_t>(n) * n, 0);
  for (int a = 0; a < n; ++a)
    for (int b = 0; b < n; ++b)
      equiv_[a * n + b] = a != b && !shadow[a].intersects(shadow[b]);
}

bool ClassGeometry::triangle(int c1, int c2, int c3) const {
  const auto &class_of = rel_.classes.class_of;
  for (int m1 : rel_.classes.classes[c1])
    for (int p : s_->line(m1))
      for (int m2 : s_->lines_through(p)) {
        if (class_of[m2] != c2)
          continue;
        for (int x : s_->line(m1))
          for (int y : s_->line(m2)) {
            if (x == p || y == p)
              continue;
            const auto m3 = s_->line_through(x, y);
            if (m3 && class_of[*m3] == c3)
              return true;
          }
      }
  return false;
}

bool ClassGeometry::ternary_collinear(int c1, int c2, int c3) const {
  const int n = n_classes();
  for (int c : {c1, c2, c3})
    if (c < 0 || c >= n)
      throw UsageError("class index out of range");
  if (c1 == c2 || c2 == c3 || c1 == c3)
    throw UsageError("ternary collinearity needs three distinct classes");
  if (equiv(c1, c2) && equiv(c2, c3) && equiv(c3, c1))
    return true;
  return triangle(c1, c2, c3);
}

std::vector<std::vector<int>> ClassGeometry::lines_prime() const {
  const int n = n_classes();
  std::set<std::vector<int>> sets;
  for (int a = 0; a < n; ++a)
    for (int b = a + 1; b < n; ++b) {
      if (!equiv(a, b))
        continue;
      std::vector<int> members;
      for (int m = 0; m < n; ++m)
        if (m == a || m == b || (equiv(m, a) && equiv(m, b)))
          members.push_back(m);
      sets.insert(std::move(members));
    }
  return {sets.begin(), sets.end()};
}

std::vector<std::vector<int>> lines_second(const Complement &c,
                                           const ParallelRelation &rel) {
  std::set<std::vector<int>> sets;
  for (const auto &plane : c.planes()) {
    std::set<int> classes;
    for (int l : plane.proper_lines)
      if (rel.self_parallel(l))
        classes.insert(rel.classes.class_of[l]);
    if (classes.size() >= 2)
      sets.emplace(classes.begin(), classes.end());
  }
  return {sets.begin(), sets.end()};
}

std::string_view to_string(LineFamily f) {
  switch (f) {
  case LineFamily::extended: return "extended";
  case LineFamily::prime: return "prime";
  case LineFamily::second: return "second";
  }
  return "unknown";
}

int ReconstructedStructure::count(LineFamily f) const {
  return static_cast<int>(std::count(family.begin(), family.end(), f));
}

ReconstructedStructure reconstruct(const Complement &c) {
  if (c.horizon_is_hyperplane())
    throw HorizonRefusal("hyperplane horizon: delegated case");
  const IncidenceStructure &s = c.structure();
  ClassGeometry geom(s, parallel_closure(s));
  const ParallelRelation &rel = geom.relation();

  ReconstructedStructure r;
  r.n_proper_points = s.n_points();
  r.n_classes = rel.classes.count();

  std::vector<std::tuple<Line, LineFamily, int>> lines;
  for (int l = 0; l < s.n_lines(); ++l) {
    Line pts = s.line(l);
    if (rel.self_parallel(l))
      pts.push_back(r.class_point(rel.classes.class_of[l]));
    lines.emplace_back(std::move(pts), LineFamily::extended, l);
  }
  auto add_family = [&](const std::vector<std::vector<int>> &sets,
                        LineFamily fam) {
    for (int i = 0; i < static_cast<int>(sets.size()); ++i) {
      Line pts;
      for (int cls : sets[i])
        pts.push_back(r.class_point(cls));
      lines.emplace_back(std::move(pts), fam, i);
    }
  };
  add_family(geom.lines_prime(), LineFamily::prime);
  add_family(lines_second(c, rel), LineFamily::second);
  std::sort(lines.begin(), lines.end());

  std::vector<Line> plain;
  for (auto &[pts, fam, src] : lines) {
    plain.push_back(pts);
    r.family.push_back(fam);
    r.source.push_back(src);
  }
  r.structure = IncidenceStructure(r.n_proper_points + r.n_classes,
                                   std::move(plain));
  r.parallel = rel;
  return r;
}

std::vector<int> canonical_map(const Complement &c,
                               const ReconstructedStructure &r) {
  const int n = c.base().n_points();
  std::vector<int> map(n, -1);
  for (int p = 0; p < c.n_proper_points(); ++p)
    map[c.base_point(p)] = p;
  const auto &classes = r.parallel.classes.classes;
  for (int cls = 0; cls < r.n_classes; ++cls) {
    const int at_infinity = point_at_infinity(c, classes[cls].front());
    for (int l : classes[cls])
      if (point_at_infinity(c, l) != at_infinity)
        throw IntegrityError("class " + std::to_string(cls) +
                             " has two points at infinity");
    if (map[at_infinity] >= 0)
      throw IntegrityError("two classes share the point at infinity " +
                           std::to_string(at_infinity));
    map[at_infinity] = r.class_point(cls);
  }
  for (int p = 0; p < n; ++p)
    if (map[p] < 0)
      throw IntegrityError("horizon point " + std::to_string(p) +
                           " is no class's point at infinity");
  return map;
}

} // namespace semipolar
