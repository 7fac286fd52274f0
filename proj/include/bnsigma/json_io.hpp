#pragma once

#include <optional>

#include <json.hpp>

#include "bnsigma/character.hpp"
#include "bnsigma/fox.hpp"
#include "bnsigma/growth.hpp"
#include "bnsigma/presentation.hpp"
#include "bnsigma/random_model.hpp"
#include "bnsigma/sections.hpp"
#include "bnsigma/sigma.hpp"
#include "bnsigma/transform.hpp"

namespace bnsigma {

using Json = nlohmann::ordered_json;

// Words are arrays of signed generator indices.
Json to_json(const Presentation& p);
Presentation presentation_from_json(const Json& j);

// Terms with degrees when phi is given; coefficients as "p/q" strings.
Json to_json(const GroupRingElement& e, const std::optional<Character>& phi = std::nullopt);
Json to_json(const ConditionReport& r, const Presentation& p, const Character& phi);
Json to_json(const StructureReport& s);
Json to_json(const SigmaVerdict& v);
Json to_json(const SymmetryReport& r);
Json fox_json(const Presentation& p, const std::optional<Character>& phi);
Json to_json(const TransformRecord& t);
Json to_json(const SampleRecord& r);
Json to_json(const EstimateReport& r);
Json to_json(const GrowthSequence& seq, const GrowthEstimate& est, std::optional<bool> levitt);

}  // namespace bnsigma
