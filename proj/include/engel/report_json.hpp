#pragma once

#include <json.hpp>

#include "engel/derivations.hpp"
#include "engel/engel_ideal.hpp"
#include "engel/enveloping.hpp"
#include "engel/matching.hpp"
#include "engel/operators.hpp"

namespace engel {

// Field names follow docs/report.schema.json.
nlohmann::json to_json(const FreeGenerationReport& r, double elapsed_ms);
nlohmann::json to_json(const SliceComparison& c);
nlohmann::json to_json(const DerivationReport& r);
nlohmann::json to_json(const MatchingCaseReport& r, double elapsed_ms);
nlohmann::json to_json(const PairingSweepReport& r, double elapsed_ms);
nlohmann::json to_json(const GenerationReport& r, double elapsed_ms);
nlohmann::json to_json(const WitnessReport& r);
nlohmann::json to_json(const OperatorReport& r);
nlohmann::json to_json(const LieElt& e);
nlohmann::json to_json(const ModelValue& v);

}  // namespace engel
