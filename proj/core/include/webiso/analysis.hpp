#pragma once

#include <optional>
#include <string>
#include <vector>

#include "webiso/classify.hpp"
#include "webiso/normalform.hpp"
#include "webiso/symmetry.hpp"

namespace webiso {

/// Everything the full pipeline computes for one web. Optional members are absent when
/// an earlier stage stopped the run or the stage does not apply.
struct AnalysisReport {
  std::size_t n = 0;
  int order = 0;
  int degree_cap = 0;
  ValidationReport validation;
  std::optional<SymmetrySolution> solution;
  std::optional<NormalFormResult> normal_form;
  std::optional<ParallelizabilityReport> parallel;
  std::optional<FactorDecomposition> factors;  ///< profiled
  std::optional<BlockDecomposition> blocks;
  std::optional<RouteComparison> routes;
  std::optional<BoundReport> bound;
  std::string decomposition_note;  ///< why the factor stages were skipped
  /// Internal-consistency alarms raised along the way.
  std::vector<std::string> alarms;
};

/// validate -> solve -> normal form -> parallelizability -> classify (both routes) -> bound -> profile.
/// Stops after validation on an invalid web; ConsistencyAlarm is caught and recorded.
AnalysisReport analyze_web(const WebSpec& w, const SolverOptions& opts = {});

}  // namespace webiso
