#pragma once

#include <cstdint>

#include "json.hpp"
#include "workbench/commutator.hpp"
#include "workbench/immunizer.hpp"
#include "workbench/rounding.hpp"

namespace workbench {

// Games serialize with exact rational weights ("num/den" strings) and the
// predicate as the list of accepted ([question tuple], [answer tuple]) pairs.
// Loaders re-validate everything they read.

nlohmann::json to_json(const GameSpec& g);
GameSpec game_from_json(const nlohmann::json& j);

nlohmann::json to_json(const MultiRoundGameSpec& m);
MultiRoundGameSpec multiround_from_json(const nlohmann::json& j);

// Strategies carry one dimension entry per prover, the state as interleaved
// re/im pairs, and measurements[prover][question][answer] as row-major
// interleaved re/im matrices.
nlohmann::json to_json(const EntangledStrategy& s);
EntangledStrategy strategy_from_json(const nlohmann::json& j);

nlohmann::json to_json(const SwapGameDescriptor& d);
SwapGameDescriptor swap_descriptor_from_json(const nlohmann::json& j);

nlohmann::json to_json(const ThreeProverDescriptor& d);
ThreeProverDescriptor three_prover_descriptor_from_json(const nlohmann::json& j);

nlohmann::json to_json(const MultiRoundDescriptor& d);
MultiRoundDescriptor multiround_descriptor_from_json(const nlohmann::json& j);

nlohmann::json to_json(const BoundCertificate& c, std::uint64_t seed);

}  // namespace workbench
