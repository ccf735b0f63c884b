#pragma once

#include <optional>
#include <string>

#include "json.hpp"

#include "covlab/fintop.hpp"

namespace covlab {

using json = nlohmann::json;

// --- canonical JSON forms ----------------------------------------------------
// Sets are ascending integer arrays; families list their sets in canonical
// (cardinality, lexicographic) order; duplicates are rejected on load.

json subset_to_json(mask_t m);
mask_t subset_from_json(const json& j, int ground);

json topology_to_json(const Topology& X);
Topology topology_from_json(const json& j);

json family_to_json(const SetFamily& f);
SetFamily family_from_json(const json& j);

json collection_to_json(const FamilyCollection& c);
FamilyCollection collection_from_json(const json& j);

json point_sequence_to_json(const PointSequence& s);
PointSequence point_sequence_from_json(const json& j);

json subset_sequence_to_json(const SubsetSequence& s);
SubsetSequence subset_sequence_from_json(const json& j);

// --- instance documents ------------------------------------------------------

struct InstanceDocument {
  std::string kind;  // topology | family | collection | instance-bundle
  std::optional<Topology> topology;
  std::optional<SetFamily> family;
  std::optional<FamilyCollection> collection;
  json bundle;  // for instance-bundle: {"items": {name: document, ...}}
};

InstanceDocument parse_instance(const std::string& text);
std::string serialize_instance(const InstanceDocument& doc, bool pretty = false);

// Render a report document (keys are sorted alphabetically by the JSON
// library, which keeps golden files byte-stable).
std::string render_json(const json& j, bool pretty);

}  // namespace covlab
