#pragma once

#include "json.hpp"
#include "lamlab/cbneed.hpp"
#include "lamlab/derivation.hpp"
#include "lamlab/reduction.hpp"

namespace lamlab {

// Terms: {"var":"x"} | {"app":[t,u]} | {"abs":["x",t]} | {"sub":["x",t,u]}
// for t[x/u]. Types: {"ans":true} | {"base":"a1"} | {"arrow":[[ty...],ty]}.
// Derivations: {"rule":"ax|val|abs|app","ctx":{"x":[ty...]},"subject":t,
// "type":ty,"premises":[...]}.

nlohmann::json term_to_json(const Term& t);
Term term_from_json(const nlohmann::json& j);

nlohmann::json type_to_json(const VType& t);
VType type_from_json(const nlohmann::json& j);

nlohmann::json derivation_to_json(const Derivation& d);
// Rebuilds the raw tree without validating; feed the result to validate().
Derivation derivation_from_json(const nlohmann::json& j);

nlohmann::json trace_to_json(const StrategyResult& r);
// Inverse of trace_to_json; the terms are not revalidated against the steps.
StrategyResult trace_from_json(const nlohmann::json& j);

nlohmann::json need_result_to_json(const NeedResult& r);

}  // namespace lamlab
