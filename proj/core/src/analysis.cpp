#include "webiso/analysis.hpp"

#include "webiso/error.hpp"

namespace webiso {

AnalysisReport analyze_web(const WebSpec& w, const SolverOptions& opts) {
  AnalysisReport rep;
  rep.n = w.n();
  rep.order = w.order();
  rep.degree_cap = opts.degree_cap.value_or(w.order() - 1);
  rep.validation = validate_web(w);
  if (!rep.validation.valid) return rep;

  try {
    rep.solution = solve_symmetries(w, opts);
    rep.normal_form = compute_normal_form(w);
    rep.parallel = parallelizability_test(w, *rep.solution, *rep.normal_form);
  } catch (const ConsistencyAlarm& e) {
    rep.alarms.push_back(e.what());
    return rep;
  }
  const SymmetrySolution& sol = *rep.solution;
  switch (rep.parallel->verdict) {
    case Verdict::Inconsistent:
      rep.alarms.push_back("parallelizability branches disagree: symmetry branch " +
                           std::string(rep.parallel->symmetry_branch ? "yes" : "no") + ", normal form linear to order " +
                           std::to_string(rep.parallel->linear_to_order));
      return rep;
    case Verdict::Parallelizable:
      rep.decomposition_note = "not applicable: the web is parallelizable";
      return rep;
    default:
      break;
  }
  if (!sol.closed) {
    rep.alarms.push_back("symmetry basis is not closed under the bracket: " + sol.closure_failure);
    return rep;
  }
  if (sol.dim() == 0) {
    rep.factors = FactorDecomposition{};
    rep.bound = check_theorem_bound(*rep.factors, w.n(), false);
    rep.decomposition_note = "trivial algebra";
    return rep;
  }
  try {
    const lie::StructureConstants sc = structure_constants(sol.basis);
    FactorDecomposition d = decompose_factors(sc);
    rep.blocks = block_normal_form(sol.basis, sc);
    rep.routes = compare_routes(d, *rep.blocks);
    if (!rep.routes->agree)
      rep.alarms.push_back("classifier routes disagree: invariants give (" + std::to_string(d.S) + "," + std::to_string(d.N) +
                           "," + std::to_string(d.C) + "), blocks give (" + std::to_string(rep.blocks->S()) + "," +
                           std::to_string(rep.blocks->N()) + "," + std::to_string(rep.blocks->C()) + ")");
    rep.bound = check_theorem_bound(d, w.n(), false);
    rep.factors = factor_action_profile(std::move(d), sol, w);
  } catch (const ConsistencyAlarm& e) {
    rep.alarms.push_back(e.what());
  } catch (const Error& e) {
    rep.alarms.push_back(std::string("classification failed: ") + e.what());
  }
  return rep;
}

}  // namespace webiso
