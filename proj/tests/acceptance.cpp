// One PASS/FAIL line per acceptance criterion; exit status 1 if any fails.

#include <chrono>
#include <functional>
#include <iostream>
#include <sstream>

#include "cli.hpp"
#include "webiso/error.hpp"
#include "webiso/report.hpp"

using namespace webiso;

namespace {

using Clock = std::chrono::steady_clock;

double seconds_since(Clock::time_point t0) { return std::chrono::duration<double>(Clock::now() - t0).count(); }

struct Outcome {
  bool pass = false;
  std::string detail;
};

int failures = 0;

void report(int k, const std::string& title, const std::function<Outcome()>& fn) {
  Outcome o;
  try {
    o = fn();
  } catch (const std::exception& e) {
    o = {false, std::string("exception: ") + e.what()};
  }
  if (!o.pass) ++failures;
  std::cout << "criterion " << k << ": " << (o.pass ? "PASS" : "FAIL") << "  " << title;
  if (!o.detail.empty()) std::cout << " (" << o.detail << ")";
  std::cout << std::endl;
}

WebSpec web_of(const AtlasEntry& e) { return WebSpec(e.n, e.f, e.base, e.order); }

DiagonalField field_of(const GeneratorClaim& g, const WebSpec& w) { return field_from_polynomials(g.components, w.base(), w.order()); }

std::string snc(const FactorDecomposition& d) {
  return "(" + std::to_string(d.S) + "," + std::to_string(d.N) + "," + std::to_string(d.C) + ")";
}

std::vector<Rational> monomial(int r) {
  std::vector<Rational> p(static_cast<std::size_t>(r) + 1);
  p.back() = 1;
  return p;
}

}  // namespace

int main() {
  report(1, "x1+x2+x3: dim 4, parallelizable by both criteria, under 10 s", [] {
    const auto t0 = Clock::now();
    const WebSpec w(3, parse_expression("x1 + x2 + x3", 3), Point(3, Rational(0)), 8);
    const SymmetrySolution s = solve_symmetries(w);
    const ParallelizabilityReport p = parallelizability_test(w, s, compute_normal_form(w));
    const double t = seconds_since(t0);
    const bool ok = s.dim() == 4 && s.stabilized && p.symmetry_branch && p.normal_form_branch &&
                    p.verdict == Verdict::Parallelizable && t < 10;
    return Outcome{ok, "dim " + std::to_string(s.dim()) + ", " + to_string(p.verdict) + ", " + std::to_string(t) + " s"};
  });

  report(2, "diagonal sl(2) web at W=10: dim 3, (1,0,0), exact generators, bound passes, under 60 s", [] {
    const auto t0 = Clock::now();
    const VerificationReport r = verify_entry("slDD-n3");
    const double t = seconds_since(t0);
    bool exact = r.generators.size() == 3;
    for (const auto& g : r.generators) exact = exact && g.certificate.holds && g.certificate.exact;
    const auto& a = r.analysis;
    const bool ok = a.solution && a.solution->dim() == 3 && a.factors && a.factors->S == 1 && a.factors->N == 0 &&
                    a.factors->C == 0 && exact && r.dim_exact && a.bound && a.bound->passed && a.alarms.empty() && t < 60;
    return Outcome{ok, (a.factors ? snc(*a.factors) : std::string("no decomposition")) + ", " + std::to_string(t) + " s"};
  });

  report(3, "n example: 4 exact generators, dim exactly 4, (0,1,2), phi_F = 0, phi_E = id, under 30 s", [] {
    const auto t0 = Clock::now();
    const AtlasEntry& e = atlas_entry("n-example-n4");
    const VerificationReport r = verify_entry(e);
    const WebSpec w = web_of(e);
    const double t = seconds_since(t0);
    bool exact = r.generators.size() == 4;
    for (const auto& g : r.generators) exact = exact && g.certificate.holds && g.certificate.exact;
    const UniJet phiF = induced_phi(field_of(e.claimed.generators[0], w), w);
    const UniJet phiE = induced_phi(field_of(e.claimed.generators[1], w), w);
    const Rational v = phiE.center();
    const bool phis = phiF.is_zero() && phiE == UniJet::from_polynomial(v, phiE.order(), {0, 1});
    const auto& a = r.analysis;
    const bool ok = exact && r.dim_lower == 4 && r.dim_upper == 4u && r.dim_exact && a.factors && a.factors->S == 0 &&
                    a.factors->N == 1 && a.factors->C == 2 && phis && t < 30;
    return Outcome{ok, (a.factors ? snc(*a.factors) : std::string("no decomposition")) + ", " + std::to_string(t) + " s"};
  });

  report(4, "cross-ratio web: Moebius triple exact with phi = 0, (1,0,0) tangent", [] {
    const VerificationReport r = verify_entry("crossratio-n4");
    bool ok = r.generators.size() == 3;
    for (const auto& g : r.generators)
      ok = ok && g.certificate.holds && g.certificate.exact && g.phi_matches.value_or(false) && g.phi && g.phi->is_zero();
    const auto& a = r.analysis;
    ok = ok && a.factors && a.factors->S == 1 && a.factors->N == 0 && a.factors->C == 0 && a.factors->factors.size() == 1 &&
         a.factors->factors[0].action == "tangent" && r.status == Status::Confirmed;
    return Outcome{ok, to_string(r.status)};
  });

  report(5, "explicit tangent example: F.f = H.f = E.f = 0 as identities", [] {
    // f = P/Q: X f = (Q X(P) - P X(Q)) / Q^2 with a numerator of degree <= deg P + deg Q + 1.
    const AtlasEntry& e = atlas_entry("l2-explicit-n4");
    if (e.f.op() != Op::Div) return Outcome{false, "f is not a quotient"};
    const Expression& P = e.f.args()[0];
    const Expression& Q = e.f.args()[1];
    const int bound = 2 + 2 + 1;
    const int W = bound + 1;
    const MultiJet p = expand_to_jet(P, e.base, W), q = expand_to_jet(Q, e.base, W);
    bool ok = true;
    std::string detail = "numerator degree bound " + std::to_string(bound);
    for (const auto& g : e.claimed.generators) {
      const DiagonalField x = field_from_polynomials(g.components, e.base, W);
      const MultiJet num = q.truncate(W - 1) * apply_field(x, p) - p.truncate(W - 1) * apply_field(x, q);
      if (num.first_nonzero_upto(bound)) {
        ok = false;
        detail += ", " + g.name + " fails";
      }
    }
    return Outcome{ok, detail};
  });

  report(6, "bracket calculus: [t^r, t^s] = (s-r) t^(r+s-1), Jacobi, {1, t, t^2} reduction", [] {
    const int W = 12;
    for (int r = 0; r <= 5; ++r)
      for (int s = 0; s <= 5; ++s) {
        std::vector<Rational> expected{0};
        if (r + s >= 1) {
          expected = monomial(r + s - 1);
          expected.back() *= s - r;
        }
        if (line_bracket(UniJet::from_polynomial(0, W, monomial(r)), UniJet::from_polynomial(0, W, monomial(s))) !=
            UniJet::from_polynomial(0, W - 1, expected))
          return Outcome{false, "table entry " + std::to_string(r) + "," + std::to_string(s)};
      }
    const UniJet a(Rational(1, 2), {1, -2, 3, 0, 5, 1, -1, 2}), b(Rational(1, 2), {0, 1, 1, -3, 2, 0, 4, 1}),
        c(Rational(1, 2), {2, 0, -1, 1, 1, 3, 0, -2});
    const int w = a.order();
    const UniJet j = line_bracket(a.truncate(w - 1), line_bracket(b, c)) + line_bracket(b.truncate(w - 1), line_bracket(c, a)) +
                     line_bracket(c.truncate(w - 1), line_bracket(a, b));
    if (!j.is_zero()) return Outcome{false, "Jacobi"};
    const LineReduction red = reduce_line_algebra(
        {UniJet::from_polynomial(0, W, {1}), UniJet::from_polynomial(0, W, {0, 1}), UniJet::from_polynomial(0, W, {0, 0, 1})});
    const bool ok = red.dim == 3 && red.change && red.change->truncate(W) == UniJet::identity(0, W) && red.c == 0;
    return Outcome{ok, ok ? "" : "reduction"};
  });

  // Criteria 7 to 9 share one pass over the catalogue.
  std::vector<VerificationReport> reports;
  for (const auto& e : atlas_entries()) reports.push_back(verify_entry(e));

  report(7, "invariant and block routes agree on every non-parallelizable entry", [&] {
    std::size_t checked = 0, skipped = 0;
    std::string bad;
    for (const auto& r : reports) {
      if (r.analysis.parallel && r.analysis.parallel->verdict == Verdict::Parallelizable) {
        ++skipped;
        continue;
      }
      ++checked;
      if (!r.analysis.routes || !r.analysis.routes->agree) bad += " " + r.id;
    }
    return Outcome{bad.empty(), std::to_string(checked) + " compared, " + std::to_string(skipped) + " parallelizable (n/a)" +
                                    (bad.empty() ? "" : ";" + bad)};
  });

  report(8, "normal form: reconstruction on every entry, homothety uniqueness, x+y+xy linear to 8", [&] {
    std::string bad;
    for (std::size_t i = 0; i < reports.size(); ++i) {
      const auto& r = reports[i];
      if (!r.analysis.normal_form || normal_form_violation(*r.analysis.normal_form, web_of(atlas_entries()[i])))
        bad += " " + r.id;
    }
    for (const char* id : {"parallelizable-n3", "commutative-n3-m2", "n-example-n4"})
      for (const Rational& lambda : {Rational(2), Rational(-1), Rational(1, 2)})
        if (!homothety_uniqueness_check(web_of(atlas_entry(id)), lambda).holds) bad += std::string(" homothety:") + id;
    const WebSpec xy(2, parse_expression("x1 + x2 + x1*x2", 2), Point(2, Rational(0)), 8);
    if (compute_normal_form(xy).linear_to_order != 8) bad += " x+y+xy";
    return Outcome{bad.empty(), bad};
  });

  report(9, "structure bound on every non-parallelizable entry, including composite 7 >= 7", [&] {
    std::string bad, composite;
    for (const auto& r : reports) {
      if (!r.analysis.bound) continue;
      if (!r.analysis.bound->passed) bad += " " + r.id;
      if (r.id == "composite-n7")
        for (const auto& c : r.analysis.bound->checks)
          if (c.name == "n >= 4S+2N+C-1" && c.enforced && c.holds) composite = c.instance;
    }
    if (composite.empty()) bad += " composite-n7 bound not enforced";
    return Outcome{bad.empty() && composite == "7 >= 7", "composite: " + composite + bad};
  });

  report(10, "atlas verify --all: no alarms, discrepancies carry the computed decomposition", [] {
    const char* argv[] = {"webiso", "atlas", "verify", "--all", "--jobs", "4"};
    std::ostringstream out, err;
    const int code = cli::run(6, argv, out, err);
    const json j = json::parse(out.str());
    bool ok = code == cli::kOk && j["alarm_count"] == 0;
    std::string ids;
    for (const auto& d : j["discrepancy_report"]) {
      ok = ok && d.contains("computed_decomposition") && d.contains("computed_basis");
      ids += " " + d["id"].get<std::string>();
    }
    return Outcome{ok, "exit " + std::to_string(code) + ", alarms " + j["alarm_count"].dump() + ", discrepancies:" +
                           (ids.empty() ? " none" : ids)};
  });

  return failures == 0 ? 0 : 1;
}
