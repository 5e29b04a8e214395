#include "semipolar/json_io.hpp"

#include "semipolar/errors.hpp"

#include <cmath>
#include <fstream>

namespace semipolar {

std::string canonical_dump(const Json &doc) { return doc.dump(2) + "\n"; }

void write_canonical(const std::filesystem::path &path, const Json &doc) {
  std::ofstream out(path, std::ios::binary | std::ios::trunc);
  if (!out)
    throw UsageError("cannot write " + path.string());
  out << canonical_dump(doc);
}

Json read_json(const std::filesystem::path &path) {
  std::ifstream in(path, std::ios::binary);
  if (!in)
    throw UsageError("cannot read " + path.string());
  try {
    return Json::parse(in);
  } catch (const Json::parse_error &e) {
    throw UsageError(path.string() + ": " + e.what());
  }
}

Json incidence_to_json(const IncidenceStructure &s) {
  Json lines = Json::array();
  for (const auto &l : s.lines())
    lines.push_back(l);
  return {{"n_points", s.n_points()}, {"lines", std::move(lines)}};
}

IncidenceStructure incidence_from_json(const Json &doc) {
  if (!doc.is_object() || !doc.contains("n_points") || !doc.contains("lines"))
    throw UsageError("incidence document needs n_points and lines");
  const auto &n = doc["n_points"];
  const auto &lines = doc["lines"];
  if (!n.is_number_integer() || n.get<long long>() < 0 || !lines.is_array())
    throw UsageError("malformed incidence document");
  std::vector<Line> out;
  out.reserve(lines.size());
  for (const auto &l : lines) {
    if (!l.is_array())
      throw UsageError("line is not an array");
    Line pts;
    for (const auto &p : l) {
      if (!p.is_number_integer())
        throw UsageError("point index is not an integer");
      pts.push_back(p.get<int>());
    }
    out.push_back(std::move(pts));
  }
  return IncidenceStructure(n.get<int>(), std::move(out));
}

Json polar_to_json(const PolarSpace &ps, const std::string &descriptor) {
  Json doc = incidence_to_json(ps.structure());
  const auto &f = ps.form();
  doc["meta"] = {{"descriptor", descriptor},
                 {"kind", std::string(to_string(f.kind))},
                 {"ambient_dim", ps.ambient_dim()},
                 {"q", f.field.order()},
                 {"rank", ps.rank()},
                 {"n_lines", ps.n_lines()},
                 {"n_planes", static_cast<int>(ps.planes().size())}};
  Json coords = Json::array();
  for (const auto &p : ps.points())
    coords.push_back(p.coords());
  Json form = {{"kind", std::string(to_string(f.kind))},
               {"vector_dim", f.dim},
               {"field", {{"p", f.field.p}, {"k", f.field.k},
                          {"modulus", f.field.modulus}}},
               {"gram", f.gram},
               {"points", std::move(coords)}};
  if (f.is_quadratic())
    form["quadratic"] = f.quadratic;
  doc["form"] = std::move(form);
  return doc;
}

Json axioms_to_json(const AxiomReport &r, int rank) {
  Json doc = {{"partial_linear", r.partial_linear},
              {"thick", r.thick},
              {"nondegenerate", r.nondegenerate},
              {"one_or_all", r.one_or_all},
              {"rank", rank},
              {"rank_at_least_3", rank >= 3}};
  Json w = Json::object();
  if (r.partial_linear_witness)
    w["partial_linear"] = {r.partial_linear_witness->first,
                           r.partial_linear_witness->second};
  if (r.thick_witness)
    w["thick"] = *r.thick_witness;
  if (r.nondegenerate_witness)
    w["nondegenerate"] = *r.nondegenerate_witness;
  if (r.one_or_all_witness)
    w["one_or_all"] = {r.one_or_all_witness->first,
                       r.one_or_all_witness->second};
  doc["witnesses"] = std::move(w);
  return doc;
}

Json complement_to_json(const Complement &c, const std::string &horizon_expr) {
  Json doc = incidence_to_json(c.structure());
  std::vector<int> base_points, closure_lines;
  for (int p = 0; p < c.n_proper_points(); ++p)
    base_points.push_back(c.base_point(p));
  for (int l = 0; l < c.n_proper_lines(); ++l)
    closure_lines.push_back(c.closure_line(l));
  std::vector<int> infinity;
  const auto affine = affine_lines(c);
  for (int l : affine)
    infinity.push_back(point_at_infinity(c, l));
  doc["meta"] = {{"horizon", horizon_expr},
                 {"horizon_points", c.horizon().members()},
                 {"hyperplane", c.horizon_is_hyperplane()},
                 {"base_points", c.base().n_points()},
                 {"base_lines", c.base().n_lines()}};
  doc["base_point"] = std::move(base_points);
  doc["closure_line"] = std::move(closure_lines);
  doc["affine_lines"] = affine;
  doc["point_at_infinity"] = std::move(infinity);
  doc["deep_points"] = deep_points(c).members();
  doc["deep_lines"] = deep_lines(c);
  doc["semiaffine_planes"] = semiaffine_planes(c);
  return doc;
}

Json reconstructed_to_json(const ReconstructedStructure &r,
                           const std::vector<int> *canonical) {
  Json doc = incidence_to_json(r.structure);
  Json families = {{"extended", Json::array()},
                   {"prime", Json::array()},
                   {"second", Json::array()}};
  for (int l = 0; l < r.structure.n_lines(); ++l)
    families[std::string(to_string(r.family[l]))].push_back(l);
  doc["families"] = std::move(families);
  doc["meta"] = {{"n_proper_points", r.n_proper_points},
                 {"n_classes", r.n_classes},
                 {"n_extended", r.count(LineFamily::extended)},
                 {"n_prime", r.count(LineFamily::prime)},
                 {"n_second", r.count(LineFamily::second)}};
  if (canonical)
    doc["canonical_map"] = *canonical;
  return doc;
}

Json battery_to_json(const std::vector<CheckResult> &results, bool timings) {
  Json out = Json::array();
  for (const auto &r : results) {
    Json e = {{"check_id", r.check_id},
              {"status", std::string(to_string(r.status))},
              {"checked", r.checked}};
    if (r.witness)
      e["witness"] = *r.witness;
    if (timings)
      e["elapsed_ms"] = std::llround(r.elapsed_ms);
    out.push_back(std::move(e));
  }
  return out;
}

} // namespace semipolar
