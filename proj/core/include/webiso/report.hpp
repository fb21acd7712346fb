#pragma once

#include <string>

#include <nlohmann/json.hpp>

#include "webiso/analysis.hpp"
#include "webiso/atlas.hpp"

namespace webiso {

using nlohmann::json;

std::string version();

/// Tool version, W, D and the fixed implementation choices in effect.
json report_header(int order, int degree_cap);

/// {"n": int, "f": string | tree, "base": ["p/q", ...], "order": int?}
WebSpec web_from_json(const json& j, std::optional<int> order_override = std::nullopt, const ExprLimits& limits = {});
json web_to_json(const WebSpec& w);
/// {"components": [[coefficients of X_1 in x_1, lowest first], ...]}; coefficients are strings or integers.
DiagonalField field_from_json(const json& j, const WebSpec& w);

json to_json(const UniJet& u);
json to_json(const DiagonalField& x);
json to_json(const ValidationReport& r);
json to_json(const SymmetrySolution& s);
json to_json(const SymmetryCertificate& c);
json to_json(const NormalFormResult& r);
json to_json(const ParallelizabilityReport& r);
json to_json(const FactorDecomposition& d);
json to_json(const BlockDecomposition& b);
json to_json(const BoundReport& b);
json to_json(const AnalysisReport& a);
json to_json(const AtlasEntry& e);
json to_json(const VerificationReport& r);

/// Two-space indented, trailing newline.
std::string dump(const json& j);

}  // namespace webiso
