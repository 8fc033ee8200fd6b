#include "arrival/flow.hpp"

namespace arrival {

namespace {

BigInt parse_value(const Json& value, const std::string& key) {
  std::string text;
  if (value.is_string()) {
    text = value.get<std::string>();
  } else if (value.is_number_unsigned()) {
    text = std::to_string(value.get<unsigned long long>());
  } else {
    throw ParseError("flow value for \"" + key +
                     "\" must be a nonnegative decimal string");
  }
  try {
    BigInt parsed(text);
    if (parsed < 0) throw ParseError("flow value for \"" + key + "\" is negative");
    return parsed;
  } catch (const std::runtime_error&) {
    throw ParseError("flow value for \"" + key + "\" is not a decimal integer");
  }
}

}  // namespace

Flow Flow::from_json(const Instance& instance, const Json& doc) {
  if (!doc.is_object() || !doc.contains("edges"))
    throw ParseError("flow document must be an object with an \"edges\" key");
  Flow flow(instance);
  for (const auto& [key, value] : doc.at("edges").items()) {
    auto arrow = key.find("->");
    if (arrow == std::string::npos)
      throw ParseError("flow edge key \"" + key + "\" is not of the form tail->head");
    int tail = instance.vertex_index(key.substr(0, arrow));
    int head = instance.vertex_index(key.substr(arrow + 2));
    int e = (tail >= 0 && head >= 0) ? instance.edge_index(tail, head) : -1;
    if (e < 0)
      throw ParseError("flow references non-edge \"" + key + "\"");
    flow.values[e] = parse_value(value, key);
  }
  return flow;
}

Flow Flow::parse(const Instance& instance, std::string_view text) {
  Json doc;
  try {
    doc = Json::parse(text);
  } catch (const nlohmann::json::exception& e) {
    throw ParseError(std::string("invalid document: ") + e.what());
  }
  return from_json(instance, doc);
}

Json Flow::to_json(const Instance& instance) const {
  Json edges = Json::object();
  for (int e = 0; e < instance.edge_count(); ++e) {
    const Edge& edge = instance.edge(e);
    edges[instance.name(edge.tail) + "->" + instance.name(edge.head)] =
        values[e].str();
  }
  Json doc;
  doc["edges"] = std::move(edges);
  return doc;
}

std::string Flow::serialize(const Instance& instance) const {
  return to_json(instance).dump(2) + "\n";
}

}  // namespace arrival
