#include "semipolar/complement.hpp"
#include "semipolar/errors.hpp"

#include <gtest/gtest.h>

#include <map>
#include <memory>
#include <set>

using namespace semipolar;

namespace {

std::shared_ptr<const PolarSpace> space(const char *descriptor) {
  static std::map<std::string, std::shared_ptr<const PolarSpace>> cache;
  auto &slot = cache[descriptor];
  if (!slot)
    slot = std::make_shared<const PolarSpace>(
        build_polar(parse_form_descriptor(descriptor)));
  return slot;
}

Complement make(const char *descriptor, const std::string &horizon) {
  auto ps = space(descriptor);
  return Complement(ps, resolve_horizon(*ps, horizon));
}

int first_non_collinear(const IncidenceStructure &s, int a) {
  for (int b = 0; b < s.n_points(); ++b)
    if (!s.collinear(a, b))
      return b;
  return -1;
}

} // namespace

TEST(Complement, SinglePointHorizon) {
  auto c = make("sp:6:2", "point 0");
  const auto &base = c.base().structure();
  EXPECT_EQ(c.n_proper_points(), 62);
  EXPECT_EQ(c.n_proper_lines(), 315);
  auto affine = affine_lines(c);
  EXPECT_EQ(affine.size(), base.lines_through(0).size());
  EXPECT_EQ(affine.size(), 15u);
  EXPECT_EQ(c.n_proper_lines() - static_cast<int>(affine.size()), 300);
  for (int l : affine) {
    EXPECT_EQ(point_at_infinity(c, l), 0);
    EXPECT_TRUE(c.closure_set(l).test(0));
  }
  EXPECT_TRUE(deep_points(c).empty());
  EXPECT_TRUE(deep_lines(c).empty());
  EXPECT_FALSE(c.horizon_is_hyperplane());
}

TEST(Complement, NonAffineLineHasNoPointAtInfinity) {
  auto c = make("sp:6:2", "point 0");
  for (int l = 0; l < c.n_proper_lines(); ++l)
    if (!is_affine(c, l)) {
      EXPECT_FALSE(horizon_parallel(c, l, l));
      EXPECT_THROW(point_at_infinity(c, l), DomainError);
      return;
    }
  FAIL() << "no non-affine line";
}

TEST(Complement, HyperplaneHorizon) {
  auto c = make("sp:6:2", "perp 0");
  EXPECT_EQ(c.n_proper_points(), 32);
  EXPECT_TRUE(c.horizon_is_hyperplane());
  auto deep = deep_points(c);
  EXPECT_EQ(deep, PointSet(63, {0}));
  EXPECT_TRUE(deep.subset_of(radical_of(c.base().structure(), c.horizon())));
  for (int l : deep_lines(c))
    EXPECT_TRUE(c.base().structure().line_set(l).test(0));
  EXPECT_FALSE(deep_lines(c).empty());
}

TEST(Complement, PerpMeetPerpHasNoDeepPoints) {
  const auto &s = space("sp:6:2")->structure();
  int b = first_non_collinear(s, 0);
  auto c = make("sp:6:2", "meet perp 0 perp " + std::to_string(b));
  EXPECT_FALSE(c.horizon_is_hyperplane());
  EXPECT_TRUE(deep_points(c).empty());
  EXPECT_TRUE(is_spiky(s, c.horizon()));
}

TEST(Complement, StructureInvariants) {
  for (const char *h : {"point 3", "line 0", "perp 5", "meet perp 0 perp 1"}) {
    auto c = make("sp:6:2", h);
    const auto &base = c.base().structure();
    std::set<int> closures;
    for (int l = 0; l < c.n_proper_lines(); ++l) {
      EXPECT_TRUE(closures.insert(c.closure_line(l)).second);
      PointSet proper = base.empty_set();
      for (int p : c.structure().line(l))
        proper.set(c.base_point(p));
      EXPECT_EQ(proper, c.closure_set(l) - c.horizon());
      EXPECT_GE(c.structure().line(l).size(), 2u);
      EXPECT_EQ(c.proper_line_of(c.closure_line(l)), l);
    }
    EXPECT_TRUE(check_polar_axioms(c.structure()).partial_linear) << h;
  }
}

TEST(Complement, PlaneRecords) {
  auto c = make("sp:6:2", "point 0");
  EXPECT_EQ(complement_planes(c).size(), 135u);
  auto semi = semiaffine_planes(c);
  std::set<int> semi_set(semi.begin(), semi.end());
  for (std::size_t i = 0; i < c.planes().size(); ++i) {
    const auto &p = c.planes()[i];
    const bool through_b = p.closure.test(0);
    EXPECT_EQ(p.proper_points.size(), through_b ? 6u : 7u);
    EXPECT_EQ(semi_set.contains(static_cast<int>(i)), through_b);
    if (through_b)
      EXPECT_EQ(plane_horizon(c, static_cast<int>(i)), PointSet(63, {0}));
    else
      EXPECT_THROW(plane_horizon(c, static_cast<int>(i)), DomainError);
  }
}

TEST(Complement, LineHorizon) {
  auto c = make("sp:6:2", "line 0");
  const auto &base = c.base().structure();
  const auto w = c.horizon();
  ASSERT_EQ(w.count(), 3);

  // Affine lines are the traces of lines meeting w in one point.
  std::set<int> expected;
  for (int l = 0; l < base.n_lines(); ++l)
    if (base.line_set(l).intersection_count(w) == 1)
      expected.insert(*c.proper_line_of(l));
  auto affine = affine_lines(c);
  EXPECT_EQ(std::set<int>(affine.begin(), affine.end()), expected);

  // Fibers of the point at infinity partition the affine lines.
  std::map<int, int> fiber;
  for (int l : affine)
    ++fiber[point_at_infinity(c, l)];
  EXPECT_EQ(fiber.size(), 3u);
  int total = 0;
  for (auto [pt, n] : fiber)
    total += n;
  EXPECT_EQ(total, static_cast<int>(affine.size()));

  std::set<std::size_t> sizes;
  for (int i : semiaffine_planes(c)) {
    const auto &p = c.planes()[i];
    int meet = p.improper.count();
    EXPECT_TRUE(meet == 1 || meet == 3);
    EXPECT_EQ(plane_horizon(c, i), p.improper);
    sizes.insert(p.proper_points.size());
  }
  EXPECT_EQ(sizes, std::set<std::size_t>({4, 6}));
  for (const auto &p : c.planes())
    if (!p.improper.any()) {
      EXPECT_EQ(p.proper_points.size(), 7u);
    }
  EXPECT_TRUE(deep_points(c).empty());
}

TEST(ComplementProperty, HorizonParallelIsAnEquivalenceOnAffineLines) {
  for (const char *h : {"line 0", "meet perp 0 perp 1", "point 7"}) {
    auto c = make("q+:5:2", h);
    auto affine = affine_lines(c);
    for (int k : affine) {
      EXPECT_TRUE(horizon_parallel(c, k, k));
      for (int l : affine) {
        EXPECT_EQ(horizon_parallel(c, k, l), horizon_parallel(c, l, k));
        EXPECT_EQ(horizon_parallel(c, k, l),
                  point_at_infinity(c, k) == point_at_infinity(c, l));
        if (!horizon_parallel(c, k, l))
          continue;
        for (int m : affine)
          if (horizon_parallel(c, l, m)) {
            ASSERT_TRUE(horizon_parallel(c, k, m));
          }
      }
    }
  }
}

TEST(Complement, ExtendToAvoidingHyperplane) {
  auto c = make("sp:6:2", "point 0");
  const auto &s = c.base().structure();
  auto affine = affine_lines(c);
  for (std::size_t i = 0; i < affine.size(); ++i)
    for (std::size_t j = i + 1; j < affine.size(); ++j) {
      int k = affine[i], l = affine[j];
      auto h = extend_to_avoiding_hyperplane(c, k, l);
      ASSERT_TRUE(h);
      EXPECT_TRUE(is_hyperplane(s, *h));
      EXPECT_TRUE(c.horizon().subset_of(*h));
      EXPECT_FALSE(c.closure_set(k).subset_of(*h));
      EXPECT_FALSE(c.closure_set(l).subset_of(*h));
      EXPECT_EQ(extend_to_avoiding_hyperplane(c, l, k), h);
    }
  EXPECT_THROW(extend_to_avoiding_hyperplane(c, affine[0], affine[0]),
               UsageError);

  auto hc = make("sp:6:2", "perp 0");
  auto ha = affine_lines(hc);
  for (int l : ha)
    if (l != ha[0] && horizon_parallel(hc, ha[0], l)) {
      EXPECT_EQ(extend_to_avoiding_hyperplane(hc, ha[0], l), hc.horizon());
      break;
    }
}

TEST(Complement, PlanePath) {
  auto c = make("sp:6:2", "point 0");
  auto affine = affine_lines(c);
  bool saw_single = false, saw_long = false;
  for (std::size_t i = 0; i < affine.size(); ++i)
    for (std::size_t j = i + 1; j < affine.size(); ++j) {
      int k = affine[i], l = affine[j];
      auto path = plane_path(c, k, l);
      ASSERT_TRUE(path);
      ASSERT_FALSE(path->empty());
      const auto &first = c.planes()[path->front()];
      const auto &last = c.planes()[path->back()];
      EXPECT_TRUE(c.closure_set(k).subset_of(first.closure));
      EXPECT_TRUE(c.closure_set(l).subset_of(last.closure));
      for (int p : *path)
        EXPECT_TRUE(c.planes()[p].closure.test(0));
      for (std::size_t t = 0; t + 1 < path->size(); ++t) {
        auto shared = c.planes()[(*path)[t]].closure &
                      c.planes()[(*path)[t + 1]].closure;
        EXPECT_GE(shared.count(), 3);
      }
      bool coplanar = false;
      for (const auto &p : c.planes())
        coplanar |= (c.closure_set(k) | c.closure_set(l)).subset_of(p.closure);
      if (coplanar) {
        EXPECT_EQ(path->size(), 1u);
        saw_single = true;
      } else {
        EXPECT_GE(path->size(), 2u);
        saw_long = true;
      }
    }
  EXPECT_TRUE(saw_single);
  EXPECT_TRUE(saw_long);
}

TEST(Complement, Refusals) {
  auto ps = space("sp:6:2");
  const auto &s = ps->structure();
  EXPECT_THROW(Complement(ps, s.all_points()), HorizonRefusal);
  EXPECT_THROW(Complement(ps, PointSet(63, {s.line(0)[0], s.line(0)[1]})),
               UsageError);
}

TEST(Complement, EmptyHorizon) {
  auto ps = space("sp:6:2");
  Complement c(ps, ps->structure().empty_set());
  EXPECT_EQ(c.structure(), ps->structure());
  EXPECT_TRUE(affine_lines(c).empty());
  EXPECT_TRUE(semiaffine_planes(c).empty());
}

TEST(Complement, WithoutLine) {
  auto c = make("sp:6:2", "point 0");
  auto m = c.without_line(4);
  EXPECT_EQ(m.n_proper_lines(), 314);
  EXPECT_EQ(m.n_proper_points(), 62);
  EXPECT_FALSE(m.proper_line_of(c.closure_line(4)).has_value());
  EXPECT_THROW(c.without_line(315), UsageError);
}

TEST(ResolveHorizon, Grammar) {
  auto ps = space("sp:6:2");
  const auto &s = ps->structure();
  EXPECT_EQ(resolve_horizon(*ps, "point 4"), PointSet(63, {4}));
  EXPECT_EQ(resolve_horizon(*ps, "line 2"), PointSet(63, s.line(2)));
  EXPECT_EQ(resolve_horizon(*ps, "plane 1"), ps->planes()[1]);
  EXPECT_EQ(resolve_horizon(*ps, "perp 3"), perp_of(s, 3));
  EXPECT_EQ(resolve_horizon(*ps, "meet perp 3 perp 9"),
            perp_of(s, 3) & perp_of(s, 9));
  EXPECT_EQ(resolve_horizon(*ps, "meet line 0 meet perp 1 perp 2"),
            PointSet(63, s.line(0)) & perp_of(s, 1) & perp_of(s, 2));
  const auto &l = s.line(0);
  EXPECT_EQ(resolve_horizon(*ps, "span " + std::to_string(l[0]) + "," +
                                     std::to_string(l[2])),
            PointSet(63, l));
  EXPECT_EQ(resolve_horizon(*ps, "  point   4 "), PointSet(63, {4}));
  for (const char *bad : {"", "point", "point x", "point 63", "line 315",
                          "plane 135", "perp -1", "meet perp 1", "span",
                          "span 1,,2", "point 1 2", "circle 3"})
    EXPECT_THROW(resolve_horizon(*ps, bad), UsageError) << bad;
}
