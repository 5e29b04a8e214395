#include "semipolar/battery.hpp"

#include "semipolar/errors.hpp"
#include "semipolar/isomorphism.hpp"
#include "semipolar/reconstruct.hpp"

#include <algorithm>
#include <chrono>
#include <functional>
#include <map>
#include <random>
#include <set>
#include <sstream>
#include <tuple>

namespace semipolar {

std::string_view to_string(CheckStatus s) {
  switch (s) {
  case CheckStatus::pass: return "pass";
  case CheckStatus::fail: return "fail";
  case CheckStatus::skipped: return "skipped";
  }
  return "unknown";
}

int failed_checks(const std::vector<CheckResult> &results) {
  return static_cast<int>(
      std::count_if(results.begin(), results.end(), [](const CheckResult &r) {
        return r.status == CheckStatus::fail;
      }));
}

std::vector<std::pair<int, int>> parallel_pairs(const Complement &c,
                                                std::uint64_t seed, int limit,
                                                bool exhaustive) {
  std::vector<std::pair<int, int>> pairs;
  const auto affine = affine_lines(c);
  for (std::size_t i = 0; i < affine.size(); ++i)
    for (std::size_t j = i + 1; j < affine.size(); ++j)
      if (horizon_parallel(c, affine[i], affine[j]))
        pairs.emplace_back(affine[i], affine[j]);
  if (!exhaustive && static_cast<int>(pairs.size()) > limit) {
    std::mt19937_64 rng(seed);
    std::shuffle(pairs.begin(), pairs.end(), rng);
    pairs.resize(limit);
    std::sort(pairs.begin(), pairs.end());
  }
  return pairs;
}

namespace {

std::string join(std::initializer_list<int> xs) {
  std::ostringstream out;
  bool first = true;
  for (int x : xs) {
    out << (first ? "" : ",") << x;
    first = false;
  }
  return out.str();
}

template <typename Range> std::string join(const Range &xs) {
  std::ostringstream out;
  bool first = true;
  for (int x : xs) {
    out << (first ? "" : ",") << x;
    first = false;
  }
  return out.str();
}

class Battery {
public:
  Battery(const Complement &c, const BatteryOptions &opts)
      : c_(c), opts_(opts), base_(c.base().structure()) {}

  std::vector<CheckResult> run() {
    timed("complement_partial_linear", [&](CheckResult &r) {
      const auto rep = check_polar_axioms(c_.structure());
      r.checked = c_.n_proper_lines();
      if (!rep.partial_linear)
        fail(r, "proper lines " + join({rep.partial_linear_witness->first,
                                        rep.partial_linear_witness->second}) +
                    " share two points");
    });
    timed("deep_points", [&](CheckResult &r) { deep_points_check(r); });

    pairs_ = parallel_pairs(c_, opts_.seed, opts_.pair_sample, opts_.exhaustive);
    timed("hyperplane_extension", [&](CheckResult &r) { extension_check(r); });
    timed("plane_chain", [&](CheckResult &r) { chain_check(r); });

    rel_ = parallel_closure(c_.structure());
    timed("parallelism_coincidence", [&](CheckResult &r) { coincidence_check(r); });
    timed("parallel_reflexivity", [&](CheckResult &r) { reflexivity_check(r); });
    timed("affine_lines_intrinsic", [&](CheckResult &r) {
      const auto truth = affine_lines(c_);
      const auto intrinsic = intrinsic_affine_lines(rel_);
      r.checked = c_.n_proper_lines();
      if (truth != intrinsic) {
        std::vector<int> diff;
        std::set_symmetric_difference(truth.begin(), truth.end(),
                                      intrinsic.begin(), intrinsic.end(),
                                      std::back_inserter(diff));
        fail(r, "line " + std::to_string(diff.front()) +
                    " is affine in exactly one of the two senses");
      }
    });

    const bool delegated = c_.horizon_is_hyperplane();
    geom_.emplace(c_.structure(), rel_);
    if (!delegated)
      infinity_ok_ = compute_infinity();
    for (const char *id :
         {"class_bijection", "anti_euclidean_deep_lines",
          "pairwise_equiv_collinear", "ternary_collinearity", "deep_line_sets",
          "plane_horizon_lines", "reconstruction_isomorphism"}) {
      if (delegated) {
        CheckResult r;
        r.check_id = id;
        r.status = CheckStatus::skipped;
        r.witness = "hyperplane horizon";
        results_.push_back(std::move(r));
        continue;
      }
      const std::string name = id;
      timed(name, [&](CheckResult &r) {
        if (name == "class_bijection")
          bijection_check(r);
        else if (!infinity_ok_)
          fail(r, "classes do not correspond to horizon points");
        else if (name == "anti_euclidean_deep_lines")
          equiv_check(r);
        else if (name == "pairwise_equiv_collinear")
          pairwise_check(r);
        else if (name == "ternary_collinearity")
          ternary_check(r);
        else if (name == "deep_line_sets")
          deep_line_sets_check(r);
        else if (name == "plane_horizon_lines")
          plane_horizon_lines_check(r);
        else
          isomorphism_check(r);
      });
    }
    return std::move(results_);
  }

private:
  static void fail(CheckResult &r, std::string witness) {
    if (r.status == CheckStatus::fail)
      return;
    r.status = CheckStatus::fail;
    r.witness = std::move(witness);
  }

  void timed(const std::string &id, const std::function<void(CheckResult &)> &f) {
    CheckResult r;
    r.check_id = id;
    const auto start = std::chrono::steady_clock::now();
    try {
      f(r);
    } catch (const std::exception &e) {
      fail(r, std::string("exception: ") + e.what());
    }
    r.elapsed_ms = std::chrono::duration<double, std::milli>(
                       std::chrono::steady_clock::now() - start)
                       .count();
    results_.push_back(std::move(r));
  }

  void deep_points_check(CheckResult &r) {
    const PointSet deep = deep_points(c_);
    r.checked = c_.horizon().count();
    if (c_.horizon_is_hyperplane()) {
      const PointSet rad = radical_of(base_, c_.horizon());
      if (deep.count() > 1)
        fail(r, "deep points " + join(deep.members()));
      else if (!deep.subset_of(rad))
        fail(r, "deep point " + std::to_string(deep.first()) +
                    " outside the radical");
    } else {
      if (deep.any())
        fail(r, "deep point " + std::to_string(deep.first()) +
                    " in a non-hyperplane horizon");
      else if (!is_spiky(base_, c_.horizon()))
        fail(r, "horizon is not spiky");
    }
  }

  void extension_check(CheckResult &r) {
    for (auto [k, l] : pairs_) {
      ++r.checked;
      const auto h = extend_to_avoiding_hyperplane(c_, k, l);
      if (!h) {
        fail(r, "no hyperplane for lines " + join({k, l}));
        return;
      }
      if (!is_hyperplane(base_, *h) || !c_.horizon().subset_of(*h) ||
          c_.closure_set(k).subset_of(*h) || c_.closure_set(l).subset_of(*h)) {
        fail(r, "returned set is not a valid extension for lines " + join({k, l}));
        return;
      }
    }
  }

  void chain_check(CheckResult &r) {
    const auto &planes = c_.planes();
    auto holds = [&](int plane, int line) {
      const auto &ls = planes[plane].proper_lines;
      return std::binary_search(ls.begin(), ls.end(), line);
    };
    for (auto [k, l] : pairs_) {
      ++r.checked;
      const auto path = plane_path(c_, k, l);
      if (!path || path->empty()) {
        fail(r, "no plane chain for lines " + join({k, l}));
        return;
      }
      const int at_inf = point_at_infinity(c_, k);
      bool ok = holds(path->front(), k) && holds(path->back(), l);
      for (std::size_t i = 0; ok && i < path->size(); ++i) {
        ok = planes[(*path)[i]].closure.test(at_inf);
        if (ok && i + 1 < path->size()) {
          const auto &x = planes[(*path)[i]].proper_lines;
          const auto &y = planes[(*path)[i + 1]].proper_lines;
          std::vector<int> shared;
          std::set_intersection(x.begin(), x.end(), y.begin(), y.end(),
                                std::back_inserter(shared));
          ok = !shared.empty();
        }
      }
      if (!ok) {
        fail(r, "invalid plane chain for lines " + join({k, l}));
        return;
      }
    }
  }

  void coincidence_check(CheckResult &r) {
    const int n = c_.n_proper_lines();
    for (int k = 0; k < n; ++k)
      for (int l = 0; l < n; ++l) {
        ++r.checked;
        if (rel_.parallel(k, l) != horizon_parallel(c_, k, l)) {
          fail(r, "lines " + join({k, l}) +
                      (rel_.parallel(k, l) ? " intrinsically parallel only"
                                           : " parallel at the horizon only"));
          return;
        }
      }
  }

  void reflexivity_check(CheckResult &r) {
    for (int k : affine_lines(c_)) {
      ++r.checked;
      bool ok = false;
      for (int m : rel_.star[k])
        ok = ok || (star_parallel(c_.structure(), k, m) &&
                    star_parallel(c_.structure(), m, k));
      if (!ok) {
        fail(r, "affine line " + std::to_string(k) +
                    " has no star-parallel partner");
        return;
      }
    }
  }

  bool compute_infinity() {
    const auto &classes = rel_.classes.classes;
    infinity_.assign(classes.size(), -1);
    std::set<int> seen;
    for (std::size_t cls = 0; cls < classes.size(); ++cls) {
      int at = -1;
      for (int l : classes[cls]) {
        if (!is_affine(c_, l))
          return false;
        const int p = point_at_infinity(c_, l);
        if (at >= 0 && at != p)
          return false;
        at = p;
      }
      if (!seen.insert(at).second)
        return false;
      infinity_[cls] = at;
    }
    return static_cast<int>(seen.size()) == c_.horizon().count();
  }

  void bijection_check(CheckResult &r) {
    const auto &classes = rel_.classes.classes;
    r.checked = static_cast<long long>(classes.size());
    std::map<int, int> owner;
    for (std::size_t cls = 0; cls < classes.size(); ++cls) {
      std::set<int> points;
      for (int l : classes[cls]) {
        if (!is_affine(c_, l)) {
          fail(r, "class " + std::to_string(cls) + " holds non-affine line " +
                      std::to_string(l));
          return;
        }
        points.insert(point_at_infinity(c_, l));
      }
      if (points.size() != 1) {
        fail(r, "class " + std::to_string(cls) + " meets the horizon in " +
                    join(points));
        return;
      }
      const int p = *points.begin();
      if (auto [it, fresh] = owner.emplace(p, static_cast<int>(cls)); !fresh) {
        fail(r, "classes " + join({it->second, static_cast<int>(cls)}) +
                    " share horizon point " + std::to_string(p));
        return;
      }
    }
    c_.horizon().for_each([&](int p) {
      if (!owner.contains(p))
        fail(r, "horizon point " + std::to_string(p) + " has no class");
    });
  }

  std::set<PointSet> deep_line_sets() const {
    std::set<PointSet> out;
    for (int l : deep_lines(c_))
      out.insert(base_.line_set(l));
    return out;
  }

  bool on_deep_line(int a, int b, const std::set<PointSet> &deep) const {
    const auto l = base_.line_through(a, b);
    return l && deep.contains(base_.line_set(*l));
  }

  void equiv_check(CheckResult &r) {
    const auto deep = deep_line_sets();
    const int n = geom_->n_classes();
    for (int a = 0; a < n; ++a)
      for (int b = a + 1; b < n; ++b) {
        ++r.checked;
        const bool truth = on_deep_line(infinity_[a], infinity_[b], deep);
        if (geom_->equiv(a, b) != truth) {
          fail(r, "classes " + join({a, b}) +
                      (truth ? " on a deep line but not equivalent"
                             : " equivalent without a deep line"));
          return;
        }
      }
  }

  bool collinear_at_infinity(int a, int b, int c) const {
    const auto l = base_.line_through(infinity_[a], infinity_[b]);
    return l && base_.line_set(*l).test(infinity_[c]);
  }

  void pairwise_check(CheckResult &r) {
    const int n = geom_->n_classes();
    for (int a = 0; a < n; ++a)
      for (int b = a + 1; b < n; ++b) {
        if (!geom_->equiv(a, b))
          continue;
        for (int c = b + 1; c < n; ++c) {
          if (!geom_->equiv(b, c) || !geom_->equiv(c, a))
            continue;
          ++r.checked;
          if (!collinear_at_infinity(a, b, c)) {
            fail(r, "pairwise equivalent classes " + join({a, b, c}) +
                        " not collinear");
            return;
          }
        }
      }
  }

  void ternary_check(CheckResult &r) {
    const int n = geom_->n_classes();
    std::vector<std::tuple<int, int, int>> triples;
    const bool full = opts_.exhaustive || n <= opts_.triple_exhaustive_limit;
    if (full) {
      for (int a = 0; a < n; ++a)
        for (int b = a + 1; b < n; ++b)
          for (int c = b + 1; c < n; ++c)
            triples.emplace_back(a, b, c);
    } else if (n >= 3) {
      std::mt19937_64 rng(opts_.seed);
      std::uniform_int_distribution<int> pick(0, n - 1);
      while (static_cast<int>(triples.size()) < opts_.triple_sample) {
        int a = pick(rng), b = pick(rng), c = pick(rng);
        if (a == b || b == c || a == c)
          continue;
        triples.emplace_back(a, b, c);
      }
    }
    for (auto [a, b, c] : triples) {
      ++r.checked;
      const bool truth = collinear_at_infinity(a, b, c);
      if (geom_->ternary_collinear(a, b, c) != truth) {
        fail(r, "classes " + join({a, b, c}) +
                    (truth ? " collinear at infinity, not detected"
                           : " detected but not collinear at infinity"));
        return;
      }
    }
  }

  PointSet at_infinity(const std::vector<int> &classes) const {
    PointSet out(base_.n_points());
    for (int cls : classes)
      out.set(infinity_[cls]);
    return out;
  }

  void deep_line_sets_check(CheckResult &r) {
    const auto deep = deep_line_sets();
    const auto prime = geom_->lines_prime();
    std::set<PointSet> images;
    for (const auto &set : prime) {
      ++r.checked;
      for (std::size_t i = 0; i < set.size(); ++i)
        for (std::size_t j = i + 1; j < set.size(); ++j) {
          if (!geom_->equiv(set[i], set[j])) {
            fail(r, "classes " + join({set[i], set[j]}) +
                        " share a line set but are not equivalent");
            return;
          }
        }
      const PointSet image = at_infinity(set);
      if (!deep.contains(image)) {
        fail(r, "line set {" + join(set) + "} is not a deep line");
        return;
      }
      images.insert(image);
    }
    if (images.size() != prime.size() || images.size() != deep.size())
      fail(r, std::to_string(prime.size()) + " line sets for " +
                  std::to_string(deep.size()) + " deep lines");
  }

  void plane_horizon_lines_check(CheckResult &r) {
    const auto deep = deep_line_sets();
    std::set<PointSet> expected;
    for (int l : lines_inside(base_, c_.horizon()))
      if (!deep.contains(base_.line_set(l)))
        expected.insert(base_.line_set(l));
    std::set<PointSet> got;
    for (const auto &set : lines_second(c_, rel_)) {
      ++r.checked;
      const PointSet image = at_infinity(set);
      if (deep.contains(image)) {
        fail(r, "plane horizon {" + join(set) + "} is a deep line");
        return;
      }
      got.insert(image);
    }
    if (got != expected)
      fail(r, std::to_string(got.size()) + " plane horizon lines for " +
                  std::to_string(expected.size()) + " non-deep lines of W");
  }

  void isomorphism_check(CheckResult &r) {
    const auto rec = reconstruct(c_);
    const auto map = canonical_map(c_, rec);
    r.checked = base_.n_lines();
    if (rec.structure.n_points() != base_.n_points()) {
      fail(r, "point counts differ");
      return;
    }
    const auto cert = is_isomorphism(base_, rec.structure, map);
    if (!cert.isomorphic)
      fail(r, cert.reason);
  }

  const Complement &c_;
  const BatteryOptions &opts_;
  const IncidenceStructure &base_;
  std::vector<std::pair<int, int>> pairs_;
  ParallelRelation rel_;
  std::optional<ClassGeometry> geom_;
  std::vector<int> infinity_;
  bool infinity_ok_ = false;
  std::vector<CheckResult> results_;
};

} // namespace

std::vector<CheckResult> run_lemma_battery(const Complement &c,
                                           const BatteryOptions &opts) {
  return Battery(c, opts).run();
}

} // namespace semipolar
