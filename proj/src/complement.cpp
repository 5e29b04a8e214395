#include "semipolar/complement.hpp"

#include "semipolar/errors.hpp"

#include <algorithm>
#include <charconv>
#include <deque>
#include <sstream>
#include <string>

namespace semipolar {

Complement::Complement(std::shared_ptr<const PolarSpace> base,
                       PointSet horizon)
    : Complement(std::move(base), std::move(horizon), {}) {}

Complement::Complement(std::shared_ptr<const PolarSpace> base,
                       PointSet horizon, std::set<int> dropped_base_lines)
    : base_(std::move(base)), horizon_(std::move(horizon)),
      dropped_(std::move(dropped_base_lines)) {
  if (!base_)
    throw UsageError("complement needs a base polar space");
  const IncidenceStructure &bs = base_->structure();
  if (horizon_.universe() != bs.n_points())
    throw UsageError("horizon is not a point set of the base");
  if (!is_subspace(bs, horizon_))
    throw UsageError("horizon is not a subspace");
  if (horizon_.count() == bs.n_points())
    throw HorizonRefusal("horizon is the whole point set");

  candidates_ = hyperplane_candidates(*base_);
  const bool contained =
      std::any_of(candidates_.begin(), candidates_.end(),
                  [&](const PointSet &h) { return horizon_.subset_of(h); });
  if (!contained)
    throw HorizonRefusal("horizon lies in no hyperplane of the candidate family");
  horizon_is_hyperplane_ = is_hyperplane(bs, horizon_);

  base_to_proper_.assign(bs.n_points(), -1);
  for (int p = 0; p < bs.n_points(); ++p)
    if (!horizon_.test(p)) {
      base_to_proper_[p] = static_cast<int>(proper_to_base_.size());
      proper_to_base_.push_back(p);
    }

  std::vector<Line> lines;
  base_to_proper_line_.assign(bs.n_lines(), -1);
  for (int id = 0; id < bs.n_lines(); ++id) {
    if (bs.line_set(id).subset_of(horizon_) || dropped_.contains(id))
      continue;
    Line trace;
    for (int p : bs.line(id))
      if (base_to_proper_[p] >= 0)
        trace.push_back(base_to_proper_[p]);
    base_to_proper_line_[id] = static_cast<int>(lines.size());
    closure_line_.push_back(id);
    lines.push_back(std::move(trace));
  }
  structure_ = IncidenceStructure(static_cast<int>(proper_to_base_.size()),
                                  std::move(lines));

  for (const PointSet &plane : base_->planes()) {
    if (plane.subset_of(horizon_))
      continue;
    ComplementPlane rec{plane, plane & horizon_, {}, {}};
    const auto pts = plane.members();
    std::set<int> inside;
    for (std::size_t i = 0; i < pts.size(); ++i)
      for (std::size_t j = i + 1; j < pts.size(); ++j)
        if (auto l = bs.line_through(pts[i], pts[j]))
          inside.insert(*l);
    for (int p : pts)
      if (base_to_proper_[p] >= 0)
        rec.proper_points.push_back(base_to_proper_[p]);
    for (int l : inside)
      if (base_to_proper_line_[l] >= 0)
        rec.proper_lines.push_back(base_to_proper_line_[l]);
    planes_.push_back(std::move(rec));
  }
}

std::optional<int> Complement::proper_point(int base) const {
  if (base_to_proper_[base] < 0)
    return std::nullopt;
  return base_to_proper_[base];
}

std::optional<int> Complement::proper_line_of(int base_line) const {
  if (base_to_proper_line_[base_line] < 0)
    return std::nullopt;
  return base_to_proper_line_[base_line];
}

Complement Complement::without_line(int proper_line) const {
  if (proper_line < 0 || proper_line >= n_proper_lines())
    throw UsageError("no proper line " + std::to_string(proper_line));
  auto dropped = dropped_;
  dropped.insert(closure_line(proper_line));
  return Complement(base_, horizon_, std::move(dropped));
}

Complement build_complement(std::shared_ptr<const PolarSpace> ps,
                            const PointSet &w) {
  return Complement(std::move(ps), w);
}

bool horizon_parallel(const Complement &c, int k, int l) {
  return (c.closure_set(k) & c.closure_set(l)).intersects(c.horizon());
}

bool is_affine(const Complement &c, int line) {
  return c.closure_set(line).intersects(c.horizon());
}

std::vector<int> affine_lines(const Complement &c) {
  std::vector<int> out;
  for (int l = 0; l < c.n_proper_lines(); ++l)
    if (is_affine(c, l))
      out.push_back(l);
  return out;
}

int point_at_infinity(const Complement &c, int line) {
  const PointSet meet = c.closure_set(line) & c.horizon();
  if (meet.empty())
    throw DomainError("line " + std::to_string(line) + " is not affine");
  if (meet.count() != 1)
    throw IntegrityError("closure meets the horizon in more than one point");
  return meet.first();
}

PointSet deep_points(const Complement &c) {
  PointSet reached(c.base().n_points());
  for (int l : affine_lines(c))
    reached.set(point_at_infinity(c, l));
  return c.horizon() - reached;
}

const std::vector<ComplementPlane> &complement_planes(const Complement &c) {
  return c.planes();
}

bool is_semiaffine(const Complement &c, int plane) {
  const auto &lines = c.planes().at(plane).proper_lines;
  return std::any_of(lines.begin(), lines.end(),
                     [&](int l) { return is_affine(c, l); });
}

std::vector<int> semiaffine_planes(const Complement &c) {
  std::vector<int> out;
  for (int i = 0; i < static_cast<int>(c.planes().size()); ++i)
    if (is_semiaffine(c, i))
      out.push_back(i);
  return out;
}

PointSet plane_horizon(const Complement &c, int plane) {
  if (!is_semiaffine(c, plane))
    throw DomainError("plane " + std::to_string(plane) + " is not semiaffine");
  PointSet out(c.base().n_points());
  for (int l : c.planes()[plane].proper_lines)
    if (is_affine(c, l))
      out.set(point_at_infinity(c, l));
  return out;
}

std::vector<int> deep_lines(const Complement &c) {
  std::set<PointSet> horizons;
  for (int pi : semiaffine_planes(c))
    horizons.insert(plane_horizon(c, pi));
  std::vector<int> out;
  for (int l : lines_inside(c.base().structure(), c.horizon()))
    if (!horizons.contains(c.base().structure().line_set(l)))
      out.push_back(l);
  return out;
}

namespace {

void require_parallel_pair(const Complement &c, int k, int l) {
  if (k < 0 || l < 0 || k >= c.n_proper_lines() || l >= c.n_proper_lines())
    throw UsageError("line id out of range");
  if (k == l)
    throw UsageError("expected two distinct lines");
  if (!horizon_parallel(c, k, l))
    throw UsageError("lines " + std::to_string(k) + " and " +
                     std::to_string(l) + " are not parallel");
}

} // namespace

std::optional<PointSet> extend_to_avoiding_hyperplane(const Complement &c,
                                                      int k, int l) {
  require_parallel_pair(c, k, l);
  if (c.horizon_is_hyperplane())
    return c.horizon();
  for (const PointSet &h : c.hyperplane_family())
    if (c.horizon().subset_of(h) && !c.closure_set(k).subset_of(h) &&
        !c.closure_set(l).subset_of(h))
      return h;
  return std::nullopt;
}

std::optional<std::vector<int>> plane_path(const Complement &c, int k, int l) {
  require_parallel_pair(c, k, l);
  const int at_infinity = point_at_infinity(c, k);
  const auto &planes = c.planes();
  const int n = static_cast<int>(planes.size());

  std::vector<char> node(n, 0);
  std::vector<std::vector<int>> planes_on_line(c.n_proper_lines());
  for (int i = 0; i < n; ++i) {
    if (!planes[i].closure.test(at_infinity))
      continue;
    node[i] = 1;
    for (int m : planes[i].proper_lines)
      planes_on_line[m].push_back(i);
  }
  auto holds = [&](int plane, int line) {
    const auto &ls = planes[plane].proper_lines;
    return std::binary_search(ls.begin(), ls.end(), line);
  };

  std::vector<int> parent(n, -2);
  std::deque<int> queue;
  for (int i : planes_on_line[k]) {
    parent[i] = -1;
    queue.push_back(i);
  }
  while (!queue.empty()) {
    const int cur = queue.front();
    queue.pop_front();
    if (holds(cur, l)) {
      std::vector<int> path;
      for (int v = cur; v >= 0; v = parent[v])
        path.push_back(v);
      std::reverse(path.begin(), path.end());
      return path;
    }
    for (int m : planes[cur].proper_lines)
      for (int nb : planes_on_line[m])
        if (parent[nb] == -2) {
          parent[nb] = cur;
          queue.push_back(nb);
        }
  }
  return std::nullopt;
}

namespace {

class HorizonParser {
public:
  HorizonParser(const PolarSpace &ps, std::string_view expr) : ps_(ps) {
    std::istringstream in{std::string(expr)};
    std::string tok;
    while (in >> tok)
      tokens_.push_back(tok);
  }

  PointSet parse_all() {
    PointSet out = parse();
    if (pos_ != tokens_.size())
      throw UsageError("trailing tokens in horizon expression");
    return out;
  }

private:
  const std::string &take() {
    if (pos_ >= tokens_.size())
      throw UsageError("horizon expression ends early");
    return tokens_[pos_++];
  }

  static int to_int(const std::string &tok) {
    int v = 0;
    auto [ptr, ec] = std::from_chars(tok.data(), tok.data() + tok.size(), v);
    if (ec != std::errc{} || ptr != tok.data() + tok.size())
      throw UsageError("expected an index, got '" + tok + "'");
    return v;
  }

  int index(int bound, std::string_view what) {
    const int v = to_int(take());
    if (v < 0 || v >= bound)
      throw UsageError(std::string(what) + " index " + std::to_string(v) +
                       " out of range");
    return v;
  }

  PointSet parse() {
    const IncidenceStructure &s = ps_.structure();
    const std::string head = take();
    if (head == "point")
      return PointSet(s.n_points(), {index(s.n_points(), "point")});
    if (head == "line")
      return s.line_set(index(s.n_lines(), "line"));
    if (head == "plane") {
      const auto &planes = ps_.planes();
      return planes[index(static_cast<int>(planes.size()), "plane")];
    }
    if (head == "perp")
      return s.perp(index(s.n_points(), "point"));
    if (head == "meet") {
      PointSet a = parse();
      PointSet b = parse();
      return a & b;
    }
    if (head == "span") {
      PointSet gen(s.n_points());
      std::istringstream list(take());
      std::string item;
      while (std::getline(list, item, ',')) {
        const int v = to_int(item);
        if (v < 0 || v >= s.n_points())
          throw UsageError("point index " + item + " out of range");
        gen.set(v);
      }
      return closure_of(s, gen);
    }
    throw UsageError("unknown horizon keyword '" + head + "'");
  }

  const PolarSpace &ps_;
  std::vector<std::string> tokens_;
  std::size_t pos_ = 0;
};

} // namespace

PointSet resolve_horizon(const PolarSpace &ps, std::string_view expr) {
  PointSet w = HorizonParser(ps, expr).parse_all();
  if (!is_subspace(ps.structure(), w))
    throw HorizonRefusal("not a subspace");
  return w;
}

} // namespace semipolar
