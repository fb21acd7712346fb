#include "webiso/report.hpp"

#include "webiso/error.hpp"

#ifndef WEBISO_VERSION
#define WEBISO_VERSION "0.0.0"
#endif

namespace webiso {

namespace {

json q(const Rational& r) { return to_string(r); }

json vec(const std::vector<Rational>& v) {
  json a = json::array();
  for (const auto& r : v) a.push_back(q(r));
  return a;
}

json exps(std::span<const int> e) {
  json a = json::array();
  for (int k : e) a.push_back(k);
  return a;
}

// Sparse {"monomial": [..], "coefficient": "p/q"} list, graded-lex order.
json multijet(const MultiJet& m) {
  json terms = json::array();
  for (const auto& [e, c] : m.terms()) terms.push_back({{"monomial", exps(e)}, {"coefficient", q(c)}});
  return {{"base", vec(m.base())}, {"order", m.order()}, {"terms", terms}};
}

Rational coefficient(const json& c) {
  if (c.is_string()) return parse_rational(c.get<std::string>());
  if (c.is_number_integer()) return Rational(c.get<long>());
  throw ParseError("coefficient must be a string \"p/q\" or an integer", 0);
}

}  // namespace

std::string version() { return WEBISO_VERSION; }

json report_header(int order, int degree_cap) {
  return {{"tool", "webiso"},
          {"version", version()},
          {"W", order},
          {"D", degree_cap},
          {"flags",
           {{"arithmetic", "exact rationals"},
            {"jet_storage", "dense graded-lex"},
            {"exp_policy", "arguments vanish at the base point"},
            {"solver_pairs", "(1,q)"},
            {"stabilization_window", 3},
            {"exactness_bound", "D+2d1+3d2-3, +3 with a non-constant exp factor"},
            {"bound_4S+2N+C-1", "enforced only for S>1"},
            {"sl2_rectifier", "nilpotent element"}}}};
}

WebSpec web_from_json(const json& j, std::optional<int> order_override, const ExprLimits& limits) {
  if (!j.is_object()) throw ParseError("web spec must be a JSON object", 0);
  if (!j.contains("n") || !j["n"].is_number_integer()) throw ParseError("web spec: missing integer \"n\"", 0);
  const long n = j["n"].get<long>();
  if (n < 2) throw InvalidWebError("web spec: n must be at least 2");
  if (!j.contains("f")) throw ParseError("web spec: missing \"f\"", 0);
  const Expression f = expression_from_json(j["f"], static_cast<std::size_t>(n), limits);
  Point base;
  if (!j.contains("base")) {
    base.assign(static_cast<std::size_t>(n), Rational(0));
  } else {
    if (!j["base"].is_array()) throw ParseError("web spec: \"base\" must be an array", 0);
    for (const auto& c : j["base"]) base.push_back(coefficient(c));
  }
  int order = 8;
  if (j.contains("order")) {
    if (!j["order"].is_number_integer()) throw ParseError("web spec: \"order\" must be an integer", 0);
    order = j["order"].get<int>();
  }
  if (order_override) order = *order_override;
  return WebSpec(static_cast<std::size_t>(n), f, std::move(base), order);
}

json web_to_json(const WebSpec& w) {
  return {{"n", w.n()}, {"f", to_text(w.f())}, {"base", vec(w.base())}, {"order", w.order()}};
}

DiagonalField field_from_json(const json& j, const WebSpec& w) {
  if (!j.is_object() || !j.contains("components") || !j["components"].is_array())
    throw ParseError("field: expected {\"components\": [[...], ...]}", 0);
  std::vector<std::vector<Rational>> polys;
  for (const auto& comp : j["components"]) {
    if (!comp.is_array()) throw ParseError("field: each component must be an array of coefficients", 0);
    std::vector<Rational> p;
    for (const auto& c : comp) p.push_back(coefficient(c));
    if (p.empty()) p.push_back(0);
    polys.push_back(std::move(p));
  }
  return field_from_polynomials(polys, w.base(), w.order());
}

json to_json(const UniJet& u) { return {{"center", q(u.center())}, {"coefficients", vec(u.coeffs())}}; }

json to_json(const DiagonalField& x) {
  json comps = json::array();
  for (const auto& p : field_to_polynomials(x)) comps.push_back(vec(p));
  return {{"components", comps}};
}

json to_json(const ValidationReport& r) {
  json v = {{"valid", r.valid}, {"partials", vec(r.partials)}, {"vanishing", r.vanishing}, {"message", r.message}};
  if (!r.partials.empty()) v["value"] = q(r.value);
  return v;
}

json to_json(const SymmetrySolution& s) {
  json dims = json::array();
  for (const auto& [t, d] : s.dims_by_order) dims.push_back({{"order", t}, {"dim", d}});
  json basis = json::array();
  for (const auto& x : s.basis) basis.push_back(to_json(x));
  json out = {{"dim", s.dim()},         {"dims_by_order", dims}, {"stabilized", s.stabilized}, {"order", s.order},
              {"degree_cap", s.degree_cap}, {"closed", s.closed}, {"closure_order", s.closure_order}, {"basis", basis}};
  if (!s.closure_failure.empty()) out["closure_failure"] = s.closure_failure;
  return out;
}

json to_json(const SymmetryCertificate& c) {
  json out = {{"holds", c.holds}, {"checked_order", c.checked_order}, {"exact", c.exact}};
  if (c.exact_bound) out["exact_bound"] = *c.exact_bound;
  if (c.failing_pair) {
    out["failing_pair"] = {c.failing_pair->first, c.failing_pair->second};
    out["failing_monomial"] = exps(c.failing_monomial);
    out["failing_coefficient"] = q(c.failing_coefficient);
  }
  return out;
}

json to_json(const NormalFormResult& r) {
  json g = json::array();
  for (const auto& gi : r.g) g.push_back(to_json(gi));
  json a = json::array();
  for (const auto& row : r.a_quadratic) a.push_back(vec(row));
  return {{"nf", multijet(r.nf)}, {"g", g},          {"theta", to_json(r.theta)}, {"a_quadratic", a},
          {"order", r.order},     {"linear_to_order", r.linear_to_order}};
}

json to_json(const ParallelizabilityReport& r) {
  return {{"symmetry_branch", r.symmetry_branch},
          {"vanishing_dim", r.vanishing_dim},
          {"symmetry_stabilized", r.symmetry_stabilized},
          {"normal_form_branch", r.normal_form_branch},
          {"linear_to_order", r.linear_to_order},
          {"order", r.order},
          {"verdict", to_string(r.verdict)}};
}

json to_json(const FactorDecomposition& d) {
  json factors = json::array();
  for (const auto& f : d.factors) {
    json gens = json::array();
    for (const auto& g : f.generators) gens.push_back(vec(g));
    json phis = json::array();
    for (const auto& p : f.phis) phis.push_back(to_json(p));
    json fj = {{"type", to_string(f.type)}, {"generators", gens}};
    if (!f.action.empty()) fj["action"] = f.action;
    if (!f.phis.empty()) fj["phis"] = phis;
    factors.push_back(std::move(fj));
  }
  return {{"dim", d.m}, {"S", d.S}, {"N", d.N}, {"C", d.C}, {"factors", factors}};
}

json to_json(const BlockDecomposition& b) {
  auto blocks = [](const std::vector<Block>& bs) {
    json out = json::array();
    for (const auto& blk : bs) {
      json cols = json::array();
      for (auto c : blk.columns) cols.push_back(c + 1);
      json gens = json::array();
      for (const auto& g : blk.generators) gens.push_back(vec(g));
      out.push_back({{"columns", cols}, {"constants", vec(blk.constants)}, {"generators", gens}});
    }
    return out;
  };
  json rows = json::array();
  for (const auto& r : b.constant_rows) rows.push_back(vec(r));
  json perm = json::array();
  for (auto c : b.column_permutation) perm.push_back(c + 1);
  json zeros = json::array();
  for (auto c : b.zero_columns) zeros.push_back(c + 1);
  return {{"S", b.S()},           {"N", b.N()},          {"C", b.C()},
          {"sl2_blocks", blocks(b.sl2_blocks)}, {"n_blocks", blocks(b.n_blocks)}, {"constant_rows", rows},
          {"column_permutation", perm},          {"zero_columns", zeros},          {"check_order", b.check_order}};
}

json to_json(const BoundReport& b) {
  json checks = json::array();
  for (const auto& c : b.checks)
    checks.push_back({{"name", c.name}, {"instance", c.instance}, {"applies", c.applies}, {"enforced", c.enforced}, {"holds", c.holds}});
  return {{"passed", b.passed}, {"checks", checks}};
}

json to_json(const AnalysisReport& a) {
  json out = {{"n", a.n}, {"validation", to_json(a.validation)}, {"alarms", a.alarms}};
  if (a.solution) out["symmetries"] = to_json(*a.solution);
  if (a.normal_form) out["normal_form"] = to_json(*a.normal_form);
  if (a.parallel) out["parallelizability"] = to_json(*a.parallel);
  if (a.factors) out["decomposition"] = to_json(*a.factors);
  if (a.blocks) out["blocks"] = to_json(*a.blocks);
  if (a.routes)
    out["routes"] = {{"invariant", {a.routes->S_invariant, a.routes->N_invariant, a.routes->C_invariant}},
                     {"blocks", {a.routes->S_blocks, a.routes->N_blocks, a.routes->C_blocks}},
                     {"agree", a.routes->agree}};
  if (a.bound) out["theorem_bound"] = to_json(*a.bound);
  if (!a.decomposition_note.empty()) out["decomposition_note"] = a.decomposition_note;
  return out;
}

json to_json(const AtlasEntry& e) {
  json gens = json::array();
  for (const auto& g : e.claimed.generators) {
    json comps = json::array();
    for (const auto& p : g.components) comps.push_back(vec(p));
    json gj = {{"name", g.name}, {"components", comps}};
    if (g.phi) gj["phi"] = vec(*g.phi);
    gens.push_back(std::move(gj));
  }
  json claimed = {{"parallelizable", e.claimed.parallelizable}, {"generators", gens}};
  if (e.claimed.dim) claimed["dim"] = *e.claimed.dim;
  if (e.claimed.S) claimed["S"] = *e.claimed.S;
  if (e.claimed.N) claimed["N"] = *e.claimed.N;
  if (e.claimed.C) claimed["C"] = *e.claimed.C;
  if (!e.claimed.profile.empty()) claimed["profile"] = e.claimed.profile;
  json out = {{"id", e.id}, {"n", e.n}, {"f", to_text(e.f)}, {"base", vec(e.base)}, {"order", e.order},
              {"claimed", claimed}, {"claim_source", e.claim_source}};
  if (!e.representative.empty()) out["representative"] = e.representative;
  return out;
}

json to_json(const VerificationReport& r) {
  json gens = json::array();
  for (const auto& g : r.generators) {
    json gj = {{"name", g.name}, {"certificate", to_json(g.certificate)}};
    if (g.phi) gj["phi"] = to_json(*g.phi);
    if (g.phi_matches) gj["phi_matches"] = *g.phi_matches;
    gens.push_back(std::move(gj));
  }
  json out = {{"id", r.id},
              {"status", to_string(r.status)},
              {"analysis", to_json(r.analysis)},
              {"generators", gens},
              {"dim_lower", r.dim_lower},
              {"dim_exact", r.dim_exact},
              {"discrepancies", r.discrepancies}};
  if (r.dim_upper) out["dim_upper"] = *r.dim_upper;
  return out;
}

std::string dump(const json& j) { return j.dump(2) + "\n"; }

}  // namespace webiso
