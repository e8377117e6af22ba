#include "metafusion/serialization.hpp"

#include <stdexcept>

#include "json.hpp"

namespace metafusion {

namespace {

TableSource source_from_string(const std::string& s) {
  if (s == "metacyclic-params") return TableSource::MetacyclicParams;
  if (s == "permutation-generators") return TableSource::PermutationGenerators;
  if (s == "quotient") return TableSource::Quotient;
  if (s == "subgroup-restriction") return TableSource::SubgroupRestriction;
  throw std::invalid_argument("table JSON: unknown source tag \"" + s + "\"");
}

}  // namespace

std::string table_to_json(const GroupTable& t) {
  nlohmann::json j;
  j["version"] = kTableFormatVersion;
  j["order"] = t.order();
  j["source"] = to_string(t.source());
  nlohmann::json labels = nlohmann::json::array();
  for (int g = 0; g < t.order(); ++g) labels.push_back(t.label(g));
  j["labels"] = std::move(labels);
  nlohmann::json mul = nlohmann::json::array();
  for (int a = 0; a < t.order(); ++a) {
    nlohmann::json row = nlohmann::json::array();
    for (int b = 0; b < t.order(); ++b) row.push_back(t.mul(a, b));
    mul.push_back(std::move(row));
  }
  j["mul"] = std::move(mul);
  return j.dump();
}

GroupTablePtr table_from_json(const std::string& json_text) {
  nlohmann::json j;
  try {
    j = nlohmann::json::parse(json_text);
  } catch (const nlohmann::json::parse_error& e) {
    throw std::invalid_argument(std::string("table JSON: ") + e.what());
  }
  if (!j.contains("version") || j["version"].get<int>() != kTableFormatVersion)
    throw std::invalid_argument("table JSON: missing or unsupported version");
  for (const char* key : {"order", "source", "labels", "mul"})
    if (!j.contains(key))
      throw std::invalid_argument(std::string("table JSON: missing \"") + key + "\"");

  const int order = j["order"].get<int>();
  auto mul = j["mul"].get<std::vector<std::vector<int>>>();
  auto labels = j["labels"].get<std::vector<std::string>>();
  if (static_cast<int>(mul.size()) != order)
    throw std::invalid_argument("table JSON: order does not match mul rows");
  return GroupTable::create(std::move(mul), std::move(labels),
                            source_from_string(j["source"].get<std::string>()));
}

}  // namespace metafusion
