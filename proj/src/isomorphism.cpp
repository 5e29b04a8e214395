#include "semipolar/isomorphism.hpp"

#include "semipolar/errors.hpp"

#include <algorithm>
#include <map>

namespace semipolar {

IsomorphismCertificate is_isomorphism(const IncidenceStructure &a,
                                      const IncidenceStructure &b,
                                      const PointMap &m) {
  if (static_cast<int>(m.size()) != a.n_points())
    throw UsageError("point map does not cover the source points");
  std::vector<char> hit(b.n_points(), 0);
  if (a.n_points() != b.n_points())
    throw UsageError("point map cannot be a bijection: point counts differ");
  for (int y : m) {
    if (y < 0 || y >= b.n_points() || hit[y])
      throw UsageError("point map is not a bijection");
    hit[y] = 1;
  }

  IsomorphismCertificate cert;
  if (a.n_lines() != b.n_lines()) {
    cert.reason = "line counts differ: " + std::to_string(a.n_lines()) +
                  " vs " + std::to_string(b.n_lines());
    return cert;
  }
  std::vector<char> used(b.n_lines(), 0);
  cert.line_map.assign(a.n_lines(), -1);
  for (int id = 0; id < a.n_lines(); ++id) {
    Line image;
    for (int p : a.line(id))
      image.push_back(m[p]);
    std::sort(image.begin(), image.end());
    const auto target = b.find_line(image);
    if (!target || used[*target]) {
      cert.violating_line = id;
      cert.reason = target ? "two lines share the image line " +
                                 std::to_string(*target)
                           : "image of line " + std::to_string(id) +
                                 " is not a line";
      cert.line_map.clear();
      return cert;
    }
    used[*target] = 1;
    cert.line_map[id] = *target;
  }
  cert.isomorphic = true;
  return cert;
}

namespace {

// Refines point colors over the disjoint union of a and b until the number
// of colors stops growing.
std::vector<int> refine_colors(const IncidenceStructure &a,
                               const IncidenceStructure &b) {
  const int na = a.n_points();
  const int n = na + b.n_points();
  auto structure_of = [&](int p) -> std::pair<const IncidenceStructure *, int> {
    return p < na ? std::make_pair(&a, p) : std::make_pair(&b, p - na);
  };

  std::vector<int> color(n, 0);
  int n_colors = 1;
  while (true) {
    std::map<std::vector<int>, int> ids;
    std::vector<std::vector<int>> sigs(n);
    for (int p = 0; p < n; ++p) {
      auto [s, local] = structure_of(p);
      const int offset = p < na ? 0 : na;
      std::vector<std::vector<int>> per_line;
      for (int l : s->lines_through(local)) {
        std::vector<int> entry{static_cast<int>(s->line(l).size())};
        for (int x : s->line(l))
          if (x != local)
            entry.push_back(color[x + offset]);
        std::sort(entry.begin() + 1, entry.end());
        per_line.push_back(std::move(entry));
      }
      std::sort(per_line.begin(), per_line.end());
      std::vector<int> sig{color[p], static_cast<int>(per_line.size())};
      for (auto &e : per_line) {
        sig.push_back(-1);
        sig.insert(sig.end(), e.begin(), e.end());
      }
      sigs[p] = std::move(sig);
      ids.emplace(sigs[p], 0);
    }
    int next = 0;
    for (auto &[sig, id] : ids)
      id = next++;
    for (int p = 0; p < n; ++p)
      color[p] = ids[sigs[p]];
    if (next <= n_colors)
      break;
    n_colors = next;
  }
  return color;
}

class Search {
public:
  Search(const IncidenceStructure &a, const IncidenceStructure &b)
      : a_(a), b_(b), map_(a.n_points(), -1) {}

  std::optional<PointMap> run(std::vector<PointSet> domains) {
    if (extend(domains, 0))
      return map_;
    return std::nullopt;
  }

private:
  bool extend(const std::vector<PointSet> &domains, int assigned) {
    const int n = a_.n_points();
    if (assigned == n)
      return is_isomorphism(a_, b_, map_).isomorphic;

    int var = -1;
    int best = 0;
    for (int x = 0; x < n; ++x) {
      if (map_[x] >= 0)
        continue;
      const int size = domains[x].count();
      if (var < 0 || size < best) {
        var = x;
        best = size;
      }
    }
    const PointSet candidates = domains[var];
    for (int y = candidates.first(); y >= 0; y = candidates.next(y)) {
      map_[var] = y;
      std::vector<PointSet> next = domains;
      if (propagate(next, var, y) && extend(next, assigned + 1))
        return true;
      map_[var] = -1;
    }
    return false;
  }

  bool propagate(std::vector<PointSet> &domains, int x, int y) {
    const int n = a_.n_points();
    const PointSet &near = b_.perp(y);
    const PointSet far = near.complement();
    for (int z = 0; z < n; ++z) {
      if (map_[z] >= 0)
        continue;
      domains[z].reset(y);
      domains[z] &= a_.collinear(x, z) ? near : far;
    }
    for (int l : a_.lines_through(x)) {
      const Line &pts = a_.line(l);
      for (int x2 : pts) {
        if (x2 == x || map_[x2] < 0)
          continue;
        const auto image = b_.line_through(y, map_[x2]);
        if (!image || b_.line(*image).size() != pts.size())
          return false;
        for (int z : pts)
          if (map_[z] < 0)
            domains[z] &= b_.line_set(*image);
        break;
      }
    }
    for (int z = 0; z < n; ++z)
      if (map_[z] < 0 && domains[z].empty())
        return false;
    return true;
  }

  const IncidenceStructure &a_;
  const IncidenceStructure &b_;
  PointMap map_;
};

std::vector<std::size_t> line_sizes(const IncidenceStructure &s) {
  std::vector<std::size_t> out;
  for (const auto &l : s.lines())
    out.push_back(l.size());
  std::sort(out.begin(), out.end());
  return out;
}

} // namespace

std::optional<PointMap> find_isomorphism(const IncidenceStructure &a,
                                         const IncidenceStructure &b) {
  if (a.n_points() != b.n_points() || a.n_lines() != b.n_lines() ||
      line_sizes(a) != line_sizes(b))
    return std::nullopt;
  const int n = a.n_points();
  if (n == 0)
    return PointMap{};

  const auto color = refine_colors(a, b);
  std::vector<int> hist_a, hist_b;
  for (int p = 0; p < n; ++p) {
    hist_a.push_back(color[p]);
    hist_b.push_back(color[n + p]);
  }
  std::sort(hist_a.begin(), hist_a.end());
  std::sort(hist_b.begin(), hist_b.end());
  if (hist_a != hist_b)
    return std::nullopt;

  std::vector<PointSet> domains(n, PointSet(n));
  for (int x = 0; x < n; ++x)
    for (int y = 0; y < n; ++y)
      if (color[x] == color[n + y])
        domains[x].set(y);
  return Search(a, b).run(std::move(domains));
}

} // namespace semipolar
