#include "cli.hpp"

#include "semipolar/battery.hpp"
#include "semipolar/errors.hpp"
#include "semipolar/isomorphism.hpp"
#include "semipolar/json_io.hpp"
#include "semipolar/reconstruct.hpp"

#include <CLI11.hpp>

#include <algorithm>
#include <filesystem>
#include <iostream>
#include <memory>
#include <set>

namespace semipolar::cli {
namespace {

const std::vector<std::string> kTaskOrder = {"axioms", "complement", "lemmas",
                                             "reconstruct", "verify"};

struct JobSpec {
  std::string form;
  std::string horizon;
  std::vector<std::string> tasks;
  std::string out;
  std::uint64_t seed = 1;
  bool exhaustive = false;
  bool timings = false;
};

std::shared_ptr<const PolarSpace> load_space(const std::string &descriptor) {
  return std::make_shared<const PolarSpace>(
      build_polar(parse_form_descriptor(descriptor)));
}

std::set<std::string> expand_tasks(const std::vector<std::string> &tasks) {
  std::set<std::string> out;
  for (const auto &t : tasks) {
    if (t == "all")
      out.insert(kTaskOrder.begin(), kTaskOrder.end());
    else
      out.insert(t);
  }
  return out;
}

// Emits one document: a file under the output directory, or collected for a
// single combined document on stdout.
class Sink {
public:
  explicit Sink(std::string dir) : dir_(std::move(dir)) {
    if (!dir_.empty())
      std::filesystem::create_directories(dir_);
  }

  void put(const std::string &task, Json doc) {
    if (dir_.empty())
      combined_[task] = std::move(doc);
    else
      write_canonical(std::filesystem::path(dir_) / (task + ".json"), doc);
  }

  void flush(std::ostream &out) {
    if (dir_.empty() && !combined_.empty())
      out << canonical_dump(combined_);
  }

private:
  std::string dir_;
  Json combined_ = Json::object();
};

int cmd_build(const std::string &form, const std::string &out_path,
              std::ostream &out) {
  auto ps = load_space(form);
  Json doc = polar_to_json(*ps, form);
  if (out_path.empty())
    out << canonical_dump(doc);
  else
    write_canonical(out_path, doc);
  return kOk;
}

int cmd_run(const JobSpec &job, std::ostream &out, std::ostream &err) {
  const auto tasks = expand_tasks(job.tasks);
  auto ps = load_space(job.form);
  Sink sink(job.out);
  const bool summary = !job.out.empty();
  int failed = 0;
  BatteryOptions opts;
  opts.seed = job.seed;
  opts.exhaustive = job.exhaustive;

  if (tasks.contains("axioms")) {
    auto report = check_polar_axioms(ps->structure());
    failed += static_cast<int>(!report.partial_linear) + !report.thick +
              !report.nondegenerate + !report.one_or_all;
    sink.put("axioms", axioms_to_json(report, ps->rank()));
    if (summary)
      out << "axioms: " << (report.all() ? "pass" : "fail") << "\n";
  }

  const bool needs_complement =
      std::any_of(kTaskOrder.begin() + 1, kTaskOrder.end(),
                  [&](const std::string &t) { return tasks.contains(t); });
  if (needs_complement) {
    if (job.horizon.empty())
      throw UsageError("--horizon is required for task complement and later");
    Complement c(ps, resolve_horizon(*ps, job.horizon));

    if (tasks.contains("complement")) {
      sink.put("complement", complement_to_json(c, job.horizon));
      if (summary)
        out << "complement: " << c.n_proper_points() << " points, "
            << c.n_proper_lines() << " lines\n";
    }
    if (tasks.contains("lemmas")) {
      auto results = run_lemma_battery(c, opts);
      int f = failed_checks(results);
      failed += f;
      sink.put("lemmas", battery_to_json(results, job.timings));
      if (summary)
        out << "lemmas: " << results.size() << " checks, " << f
            << " failed\n";
      for (const auto &r : results)
        if (r.status == CheckStatus::fail)
          err << "check " << r.check_id << " failed: "
              << r.witness.value_or("") << "\n";
    }
    if (tasks.contains("reconstruct") || tasks.contains("verify")) {
      if (c.horizon_is_hyperplane()) {
        sink.flush(out);
        throw HorizonRefusal("hyperplane horizon: delegated case");
      }
      auto r = reconstruct(c);
      std::vector<int> canonical;
      try {
        canonical = canonical_map(c, r);
      } catch (const IntegrityError &e) {
        err << "canonical map: " << e.what() << "\n";
      }
      if (tasks.contains("reconstruct")) {
        sink.put("reconstruct",
                 reconstructed_to_json(r, canonical.empty() ? nullptr
                                                            : &canonical));
        if (summary)
          out << "reconstruct: " << r.structure.n_points() << " points, "
              << r.structure.n_lines() << " lines\n";
      }
      if (tasks.contains("verify")) {
        Json doc = Json::object();
        bool canonical_ok = false;
        if (canonical.empty()) {
          doc["canonical"] = {{"isomorphic", false},
                              {"reason", "no canonical map"}};
        } else {
          auto cert = is_isomorphism(ps->structure(), r.structure, canonical);
          canonical_ok = cert.isomorphic;
          doc["canonical"] = {{"isomorphic", cert.isomorphic}};
          if (!cert.isomorphic)
            doc["canonical"]["reason"] = cert.reason;
        }
        auto found = find_isomorphism(ps->structure(), r.structure);
        bool search_ok =
            found && is_isomorphism(ps->structure(), r.structure, *found)
                         .isomorphic;
        doc["search"] = {{"found", search_ok}};
        failed += !canonical_ok + !search_ok;
        sink.put("verify", std::move(doc));
        if (summary)
          out << "verify: canonical " << (canonical_ok ? "pass" : "fail")
              << ", search " << (search_ok ? "pass" : "fail") << "\n";
      }
    }
  }
  sink.flush(out);
  return failed == 0 ? kOk : kFailedChecksBase + failed;
}

int cmd_horizons(const std::string &form, const std::string &kind,
                 std::ostream &out) {
  auto ps = load_space(form);
  const auto &s = ps->structure();
  auto emit = [&](const std::string &expr) {
    out << expr << "\t" << resolve_horizon(*ps, expr).count() << "\n";
  };
  if (kind == "points") {
    for (int p = 0; p < s.n_points(); ++p)
      emit("point " + std::to_string(p));
  } else if (kind == "lines") {
    for (int l = 0; l < s.n_lines(); ++l)
      emit("line " + std::to_string(l));
  } else if (kind == "planes") {
    for (std::size_t i = 0; i < ps->planes().size(); ++i)
      emit("plane " + std::to_string(i));
  } else if (kind == "perps") {
    for (int p = 0; p < s.n_points(); ++p)
      emit("perp " + std::to_string(p));
  } else {
    for (int a = 0; a < s.n_points(); ++a)
      for (int b = a + 1; b < s.n_points(); ++b)
        out << "meet perp " << a << " perp " << b << "\t"
            << (s.perp(a) & s.perp(b)).count() << "\n";
  }
  return kOk;
}

} // namespace

int run(const std::vector<std::string> &args, std::ostream &out,
        std::ostream &err) {
  CLI::App app{"Polar spaces, horizon complements and their reconstruction"};
  app.require_subcommand(1);

  std::string build_form, build_out;
  auto *build = app.add_subcommand("build", "write a polar space as JSON");
  build->add_option("--form", build_form, "form descriptor, e.g. sp:6:2")
      ->required();
  build->add_option("--out", build_out, "output file (stdout if omitted)");

  JobSpec job;
  job.tasks = {"all"};
  auto *runc = app.add_subcommand("run", "run tasks against a horizon");
  runc->add_option("--form", job.form, "form descriptor")->required();
  runc->add_option("--horizon", job.horizon, "horizon expression");
  runc->add_option("--tasks", job.tasks, "tasks to run")
      ->delimiter(',')
      ->check(CLI::IsMember({"axioms", "complement", "lemmas", "reconstruct",
                             "verify", "all"}));
  runc->add_option("--out", job.out, "output directory (stdout if omitted)");
  runc->add_option("--seed", job.seed, "seed for sampled checks");
  runc->add_flag("--exhaustive", job.exhaustive,
                 "enumerate all pairs and triples");
  runc->add_flag("--timings", job.timings, "include elapsed_ms in reports");

  std::string hz_form, hz_kind = "points";
  auto *hz = app.add_subcommand("horizons", "list candidate horizons");
  hz->add_option("--form", hz_form, "form descriptor")->required();
  hz->add_option("--kind", hz_kind, "horizon kind")
      ->check(CLI::IsMember(
          {"points", "lines", "planes", "perps", "perp-intersections"}));

  try {
    std::vector<std::string> reversed(args.rbegin(), args.rend());
    app.parse(reversed);
  } catch (const CLI::CallForHelp &) {
    out << app.help();
    return kOk;
  } catch (const CLI::CallForAllHelp &) {
    out << app.help("", CLI::AppFormatMode::All);
    return kOk;
  } catch (const CLI::ParseError &e) {
    err << "error: " << e.what() << "\n";
    return kConfiguration;
  }

  try {
    if (*build)
      return cmd_build(build_form, build_out, out);
    if (*runc)
      return cmd_run(job, out, err);
    return cmd_horizons(hz_form, hz_kind, out);
  } catch (const ConfigurationError &e) {
    err << "error: " << e.what() << "\n";
    return kConfiguration;
  } catch (const UsageError &e) {
    err << "error: " << e.what() << "\n";
    return kConfiguration;
  } catch (const HorizonRefusal &e) {
    err << "refused: " << e.what() << "\n";
    return kHorizonRefused;
  } catch (const std::exception &e) {
    err << "internal error: " << e.what() << "\n";
    return kInternal;
  }
}

} // namespace semipolar::cli
