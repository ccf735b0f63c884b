#include "covlab/io.hpp"

namespace covlab {

namespace {

int int_field(const json& j, const char* name) {
  if (!j.contains(name) || !j[name].is_number_integer())
    throw ParseError(std::string("missing or non-integer field: ") + name);
  return j[name].get<int>();
}

const json& array_field(const json& j, const char* name) {
  if (!j.contains(name) || !j[name].is_array())
    throw ParseError(std::string("missing or non-array field: ") + name);
  return j[name];
}

}  // namespace

json subset_to_json(mask_t m) {
  json a = json::array();
  for (int i = 0; m != 0; ++i, m >>= 1)
    if (m & 1u) a.push_back(i);
  return a;
}

mask_t subset_from_json(const json& j, int ground) {
  if (!j.is_array()) throw ParseError("subset must be an array");
  mask_t m = 0;
  int prev = -1;
  for (const json& e : j) {
    if (!e.is_number_integer()) throw ParseError("subset elements must be integers");
    int v = e.get<int>();
    if (v <= prev) throw ParseError("subset elements must be strictly ascending");
    if (v < 0 || v >= ground)
      throw ParseError("subset element " + std::to_string(v) + " out of ground " +
                       std::to_string(ground));
    m |= mask_t{1} << v;
    prev = v;
  }
  return m;
}

json topology_to_json(const Topology& X) {
  json j;
  j["kind"] = "topology";
  j["points"] = X.points;
  json opens = json::array();
  for (mask_t o : X.opens.sets) opens.push_back(subset_to_json(o));
  j["opens"] = opens;
  return j;
}

Topology topology_from_json(const json& j) {
  int points = int_field(j, "points");
  if (points < 0 || points > kGroundLimit)
    throw ValidationError("points out of range: " + std::to_string(points));
  std::vector<mask_t> opens;
  std::vector<mask_t> raw;
  for (const json& s : array_field(j, "opens")) raw.push_back(subset_from_json(s, points));
  SetFamily fam = SetFamily::of(points, raw);
  if (fam.size() != static_cast<int>(raw.size()))
    throw ParseError("duplicate open set in topology document");
  return Topology(points, std::move(fam));  // ctor validates closure properties
}

json family_to_json(const SetFamily& f) {
  json j;
  j["kind"] = "family";
  j["ground"] = f.ground;
  json sets = json::array();
  for (mask_t m : f.sets) sets.push_back(subset_to_json(m));
  j["sets"] = sets;
  return j;
}

SetFamily family_from_json(const json& j) {
  int ground = int_field(j, "ground");
  if (ground < 0 || ground > kGroundLimit)
    throw ValidationError("ground out of range: " + std::to_string(ground));
  std::vector<mask_t> raw;
  for (const json& s : array_field(j, "sets")) raw.push_back(subset_from_json(s, ground));
  SetFamily f = SetFamily::of(ground, raw);
  if (f.size() != static_cast<int>(raw.size()))
    throw ParseError("duplicate set in family document");
  return f;
}

json collection_to_json(const FamilyCollection& c) {
  json j;
  j["kind"] = "collection";
  j["ground"] = c.ground;
  json fams = json::array();
  for (const SetFamily& f : c.families) {
    json sets = json::array();
    for (mask_t m : f.sets) sets.push_back(subset_to_json(m));
    fams.push_back(sets);
  }
  j["families"] = fams;
  return j;
}

FamilyCollection collection_from_json(const json& j) {
  int ground = int_field(j, "ground");
  if (ground < 0 || ground > kGroundLimit)
    throw ValidationError("ground out of range: " + std::to_string(ground));
  std::vector<SetFamily> fams;
  for (const json& fj : array_field(j, "families")) {
    if (!fj.is_array()) throw ParseError("each family must be an array of sets");
    std::vector<mask_t> raw;
    for (const json& s : fj) raw.push_back(subset_from_json(s, ground));
    SetFamily f = SetFamily::of(ground, raw);
    if (f.size() != static_cast<int>(raw.size()))
      throw ParseError("duplicate set in collection document");
    fams.push_back(std::move(f));
  }
  FamilyCollection c = FamilyCollection::of(ground, fams);
  if (c.size() != static_cast<int>(fams.size()))
    throw ParseError("duplicate family in collection document");
  return c;
}

json point_sequence_to_json(const PointSequence& s) {
  json j;
  j["index_size"] = s.index_size;
  j["values"] = s.values;
  return j;
}

PointSequence point_sequence_from_json(const json& j) {
  int index_size = int_field(j, "index_size");
  std::vector<int> values;
  for (const json& e : array_field(j, "values")) {
    if (!e.is_number_integer()) throw ParseError("sequence values must be integers");
    values.push_back(e.get<int>());
  }
  if (static_cast<int>(values.size()) != index_size)
    throw ParseError("sequence length differs from index_size");
  return PointSequence(index_size, std::move(values));
}

json subset_sequence_to_json(const SubsetSequence& s) {
  json j;
  j["index_size"] = s.index_size;
  j["ground"] = s.subset_ground;
  json vals = json::array();
  for (mask_t m : s.values) vals.push_back(subset_to_json(m));
  j["values"] = vals;
  return j;
}

SubsetSequence subset_sequence_from_json(const json& j) {
  int index_size = int_field(j, "index_size");
  int ground = int_field(j, "ground");
  if (ground < 0 || ground > kGroundLimit)
    throw ValidationError("ground out of range: " + std::to_string(ground));
  std::vector<mask_t> values;
  for (const json& s : array_field(j, "values")) values.push_back(subset_from_json(s, ground));
  if (static_cast<int>(values.size()) != index_size)
    throw ParseError("sequence length differs from index_size");
  return SubsetSequence(index_size, ground, std::move(values));
}

InstanceDocument parse_instance(const std::string& text) {
  json j;
  try {
    j = json::parse(text);
  } catch (const json::parse_error& e) {
    throw ParseError(std::string("malformed JSON: ") + e.what());
  }
  if (!j.is_object() || !j.contains("kind") || !j["kind"].is_string())
    throw ParseError("document must be an object with a string 'kind'");
  InstanceDocument doc;
  doc.kind = j["kind"].get<std::string>();
  if (doc.kind == "topology") {
    doc.topology = topology_from_json(j);
  } else if (doc.kind == "family") {
    doc.family = family_from_json(j);
  } else if (doc.kind == "collection") {
    doc.collection = collection_from_json(j);
  } else if (doc.kind == "instance-bundle") {
    if (!j.contains("items") || !j["items"].is_object())
      throw ParseError("instance-bundle must carry an 'items' object");
    json items;
    for (const auto& [name, item] : j["items"].items()) {
      InstanceDocument sub = parse_instance(item.dump());
      if (sub.kind == "instance-bundle")
        throw ParseError("instance-bundle items must not nest");
      // Re-serialize each item so the bundle is canonical.
      if (sub.topology)
        items[name] = topology_to_json(*sub.topology);
      else if (sub.family)
        items[name] = family_to_json(*sub.family);
      else
        items[name] = collection_to_json(*sub.collection);
    }
    doc.bundle = json{{"items", items}, {"kind", "instance-bundle"}};
  } else {
    throw ParseError("unknown kind: " + doc.kind);
  }
  return doc;
}

std::string serialize_instance(const InstanceDocument& doc, bool pretty) {
  json j;
  if (doc.kind == "topology")
    j = topology_to_json(*doc.topology);
  else if (doc.kind == "family")
    j = family_to_json(*doc.family);
  else if (doc.kind == "collection")
    j = collection_to_json(*doc.collection);
  else
    j = doc.bundle;
  return render_json(j, pretty);
}

std::string render_json(const json& j, bool pretty) {
  return (pretty ? j.dump(2) : j.dump()) + "\n";
}

}  // namespace covlab
