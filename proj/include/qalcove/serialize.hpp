#pragma once

#include <cstdint>
#include <optional>
#include <string>

#include <json.hpp>

#include "qalcove/characters.hpp"
#include "qalcove/cyclotomic.hpp"
#include "qalcove/fusion.hpp"
#include "qalcove/modular.hpp"
#include "qalcove/root_system.hpp"
#include "qalcove/weyl.hpp"

namespace qalcove {

using Json = nlohmann::ordered_json;

inline constexpr const char* kSchemaVersion = "1.0";

/// Weights serialize as "1,0,2", matching the input syntax.
Json to_json(const Weight& w);
Json to_json(const IntMatrix& m);
/// {"n": lL, "coeffs": [...]}; coefficients beyond 64 bits become decimal strings.
Json to_json(const CycNum& x);
Json to_json_numeric(const CycNum& x, std::int64_t residue);

Json root_system_json(const RootSystem& rs);
Json alcove_json(const AlcoveContext& ctx);
Json character_json(const RootSystem& rs, const DominantCharacter& ch);
Json decomposition_json(const Decomposition& d);
Json fusion_json(const AlcoveContext& ctx, const FusionCoeffs& coeffs);
Json qdim_json(const CycNum& q, std::int64_t residue);
Json smatrix_json(const SMatrix& s, std::int64_t residue);
Json report_json(const ModularityReport& r, std::int64_t residue);

/// {schema_version, command, inputs, result[, timing_ms]}.
Json envelope(const std::string& command, Json inputs, Json result, std::optional<std::int64_t> timing_ms);

/// One "path<TAB>value" line per scalar leaf, paths joined with '.' and array
/// positions as indices.
std::string to_tsv(const Json& j);

}  // namespace qalcove
