#include "arrival/instance.hpp"

#include <sstream>

namespace arrival {

Instance::Instance(std::vector<std::string> names, std::vector<int> even,
                   std::vector<int> odd, int origin, int destination)
    : names_(std::move(names)),
      even_(std::move(even)),
      odd_(std::move(odd)),
      origin_(origin),
      destination_(destination) {
  const int n = static_cast<int>(names_.size());
  if (n == 0) throw ParseError("instance has no vertices");
  for (int v = 0; v < n; ++v) {
    auto [it, fresh] = name_index_.emplace(names_[v], v);
    if (!fresh) throw ParseError("duplicate vertex id \"" + names_[v] + "\"");
  }
  if (static_cast<int>(even_.size()) != n || static_cast<int>(odd_.size()) != n)
    throw ParseError("successor maps must cover every vertex");
  auto check_target = [&](int t, int v, const char* which) {
    if (t < 0 || t >= n)
      throw ParseError(std::string(which) + " successor of \"" + names_[v] +
                       "\" is not a declared vertex");
  };
  for (int v = 0; v < n; ++v) {
    check_target(even_[v], v, "even");
    check_target(odd_[v], v, "odd");
  }
  if (origin_ < 0 || origin_ >= n) throw ParseError("origin is not a declared vertex");
  if (destination_ < 0 || destination_ >= n)
    throw ParseError("destination is not a declared vertex");
  if (origin_ == destination_) throw ParseError("origin equals destination");

  out_edges_.resize(n);
  for (int v = 0; v < n; ++v) {
    edges_.push_back({v, even_[v]});
    out_edges_[v].push_back({even_[v], static_cast<int>(edges_.size()) - 1});
    if (odd_[v] != even_[v]) {
      edges_.push_back({v, odd_[v]});
      out_edges_[v].push_back({odd_[v], static_cast<int>(edges_.size()) - 1});
    }
  }
}

int Instance::edge_index(int tail, int head) const {
  for (const auto& [h, e] : out_edges_[tail])
    if (h == head) return e;
  return -1;
}

int Instance::vertex_index(std::string_view name) const {
  auto it = name_index_.find(std::string(name));
  return it == name_index_.end() ? -1 : it->second;
}

Instance Instance::from_json(const Json& doc) {
  if (!doc.is_object()) throw ParseError("instance document must be an object");
  for (const char* key : {"vertices", "even", "odd", "origin", "destination"})
    if (!doc.contains(key)) throw ParseError(std::string("missing key \"") + key + "\"");

  std::vector<std::string> names;
  for (const auto& v : doc.at("vertices")) {
    if (!v.is_string()) throw ParseError("vertex ids must be strings");
    names.push_back(v.get<std::string>());
  }
  std::unordered_map<std::string, int> index;
  for (int i = 0; i < static_cast<int>(names.size()); ++i) {
    if (!index.emplace(names[i], i).second)
      throw ParseError("duplicate vertex id \"" + names[i] + "\"");
  }
  auto lookup = [&](const std::string& name, const std::string& context) {
    auto it = index.find(name);
    if (it == index.end())
      throw ParseError("unknown vertex \"" + name + "\" referenced by " + context);
    return it->second;
  };
  auto read_map = [&](const char* key) {
    std::vector<int> out(names.size(), -1);
    const auto& obj = doc.at(key);
    if (!obj.is_object()) throw ParseError(std::string("\"") + key + "\" must be an object");
    for (const auto& [from, to] : obj.items()) {
      int v = lookup(from, std::string("\"") + key + "\" key");
      out[v] = lookup(to.get<std::string>(), std::string("\"") + key + "\" entry for \"" + from + "\"");
    }
    for (size_t v = 0; v < names.size(); ++v)
      if (out[v] < 0)
        throw ParseError("missing " + std::string(key) + " successor for \"" + names[v] + "\"");
    return out;
  };
  std::vector<int> even = read_map("even");
  std::vector<int> odd = read_map("odd");
  int origin = lookup(doc.at("origin").get<std::string>(), "\"origin\"");
  int destination = lookup(doc.at("destination").get<std::string>(), "\"destination\"");
  return Instance(std::move(names), std::move(even), std::move(odd), origin, destination);
}

Instance Instance::parse(std::string_view text) {
  Json doc;
  try {
    doc = Json::parse(text);
  } catch (const nlohmann::json::exception& e) {
    throw ParseError(std::string("invalid document: ") + e.what());
  }
  return from_json(doc);
}

Json Instance::to_json() const {
  Json doc;
  doc["vertices"] = names_;
  Json even = Json::object();
  Json odd = Json::object();
  for (int v = 0; v < vertex_count(); ++v) {
    even[names_[v]] = names_[even_[v]];
    odd[names_[v]] = names_[odd_[v]];
  }
  doc["even"] = std::move(even);
  doc["odd"] = std::move(odd);
  doc["origin"] = names_[origin_];
  doc["destination"] = names_[destination_];
  return doc;
}

std::string Instance::serialize() const { return to_json().dump(2) + "\n"; }

namespace {

std::string dot_quote(const std::string& s) {
  std::string out = "\"";
  for (char c : s) {
    if (c == '"' || c == '\\') out += '\\';
    out += c;
  }
  out += '"';
  return out;
}

}  // namespace

std::string export_dot(const Instance& instance) {
  std::ostringstream out;
  out << "digraph switchgraph {\n";
  for (int v = 0; v < instance.vertex_count(); ++v) {
    out << "  " << dot_quote(instance.name(v));
    if (v == instance.origin())
      out << " [shape=diamond label=" << dot_quote(instance.name(v) + " (origin)") << "]";
    else if (v == instance.destination())
      out << " [shape=doublecircle label="
          << dot_quote(instance.name(v) + " (destination)") << "]";
    out << ";\n";
  }
  for (const Edge& e : instance.edges()) {
    out << "  " << dot_quote(instance.name(e.tail)) << " -> "
        << dot_quote(instance.name(e.head));
    // An edge is dashed iff it is reachable only as the odd successor.
    if (instance.even(e.tail) != e.head) out << " [style=dashed]";
    out << ";\n";
  }
  out << "}\n";
  return out.str();
}

}  // namespace arrival
