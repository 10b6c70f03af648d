#pragma once

#include <string>
#include <vector>

#include "bgg/liealg.hpp"
#include "bgg/symlab.hpp"
#include "bgg/vanish.hpp"

#include <json.hpp>

namespace bgg {

using Json = nlohmann::ordered_json;

inline constexpr const char* kSchema = "bgg-explorer/1";

Json rat_json(const Rat& q);  // {"num": ..., "den": ...}
Json weight_json(const Weight& mu);

Json json_of(const HasseGraph& g);
Json json_of(const BGGDiagram& d);
Json json_of(const BGGDiagram& d, const std::vector<VanishVerdict>& verdicts);
Json json_of(const BGGDiagram& d, const std::vector<SubcomplexChain>& chains);
Json json_of(const ExactnessReport& rep, const std::string& tower);
Json json_of(const DualPairingReport& rep);
Json oracle_json(const GradingInfo& g, RepKind rep, const std::vector<long>& hdims,
                 const std::vector<std::vector<std::pair<Weight, int>>>& labels);

std::string dump_json(const Json& j);

std::string emit_dot(const HasseGraph& g);
std::string emit_dot(const BGGDiagram& d, const std::vector<SubcomplexChain>& chains = {});

std::string text_of(const HasseGraph& g);
std::string text_of(const BGGDiagram& d);

}  // namespace bgg
