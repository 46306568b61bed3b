#pragma once

#include <memory>
#include <string>
#include <string_view>

#include <json.hpp>

#include "state.hpp"

namespace anyonic {

/// "fibonacci", "ising", or "z<k>" (e.g. "z2"); throws DomainError otherwise.
std::shared_ptr<const AnyonModel> builtin_model(std::string_view name);
bool is_builtin_name(std::string_view name);

/// Model description document: `name`, `charges` (labels, vacuum "1" first),
/// `fusion` (label triples [a,b,c] with multiplicity 1), `f_symbols` (array of
/// {a,b,ap,bp,c,g,re,im} two-vertex F-move entries), or `builtin` (+ `n`)
/// which ignores the explicit tables. Construction is gated on the full
/// consistency report.
std::shared_ptr<const AnyonModel> parse_model(const nlohmann::json& doc);
std::shared_ptr<const AnyonModel> load_model_file(const std::string& path);
nlohmann::json model_to_json(const AnyonModel& model);

/// State document: `model` (builtin name or inline object), `partition`
/// {leavesA, leavesB}, `blocks` (array of {charge, matrix} with row-major
/// [re,im] pairs; omitted charges are zero). The loader validates
/// Hermiticity, positivity and quantum-trace normalization and reports the
/// violated invariant.
AnyonicDensityOperator parse_state(const nlohmann::json& doc,
                                   std::shared_ptr<const AnyonModel> model_override = nullptr);
AnyonicDensityOperator load_state_file(const std::string& path,
                                       std::shared_ptr<const AnyonModel> model_override = nullptr);
nlohmann::json state_to_json(const AnyonicDensityOperator& rho);

}  // namespace anyonic
