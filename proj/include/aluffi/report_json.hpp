#pragma once

#include <json.hpp>

#include "aluffi/groebner.hpp"
#include "aluffi/ideal.hpp"
#include "aluffi/jacobian.hpp"
#include "aluffi/points.hpp"

namespace aluffi {

/// Bumped whenever a field is renamed or removed.
inline constexpr int kJsonSchemaVersion = 1;

nlohmann::json to_json(const Polynomial& f);
nlohmann::json to_json(const std::vector<Polynomial>& gens);

/// {schema_version, pair: {J, I}, r, fast_path, t_max, degrees: [{t, vv_zero, witness?}], verdict}
nlohmann::json to_json(const TorsionReport& report);

nlohmann::json to_json(const CriticalData& data);
nlohmann::json to_json(const GroebnerBasis& gb);
nlohmann::json to_json(const IgpGenerators& igp);

}  // namespace aluffi
