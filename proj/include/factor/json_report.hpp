#pragma once

#include "json.hpp"

#include "factor/factor_builder.hpp"
#include "factor/factor_theory.hpp"
#include "factor/spectral.hpp"
#include "factor/sweep.hpp"
#include "factor/verdict.hpp"

// JSON projections of the report types; every to_json has a matching
// from_json so reports round-trip exactly.
namespace factor {

void to_json(nlohmann::json& j, const VertexSet& s);
void from_json(const nlohmann::json& j, VertexSet& s);

void to_json(nlohmann::json& j, const DeficiencyReport& r);
void from_json(const nlohmann::json& j, DeficiencyReport& r);

void to_json(nlohmann::json& j, const ConditionVerdict& v);
void from_json(const nlohmann::json& j, ConditionVerdict& v);

void to_json(nlohmann::json& j, const FactorBlock& b);
void from_json(const nlohmann::json& j, FactorBlock& b);

void to_json(nlohmann::json& j, const FactorCertificate& c);
void from_json(const nlohmann::json& j, FactorCertificate& c);

void to_json(nlohmann::json& j, const Spectrum& s);

void to_json(nlohmann::json& j, const SweepRow& r);
void from_json(const nlohmann::json& j, SweepRow& r);

void to_json(nlohmann::json& j, const SweepReport& r);
void from_json(const nlohmann::json& j, SweepReport& r);

}  // namespace factor
