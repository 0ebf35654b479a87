#include "nsbox/box_io.hpp"

#include <cmath>
#include <cstdio>
#include <cstdlib>
#include <fstream>
#include <sstream>

#include "nsbox/ic_bounds.hpp"

namespace nsbox {

nlohmann::json behavior_to_json(const Behavior& behavior, const std::string& name) {
  nlohmann::json table = nlohmann::json::array();
  for (int x = 0; x < 2; ++x) {
    nlohmann::json level_x = nlohmann::json::array();
    for (int y = 0; y < 2; ++y) {
      nlohmann::json level_y = nlohmann::json::array();
      for (int a = 0; a < 2; ++a) {
        nlohmann::json level_a = nlohmann::json::array();
        for (int b = 0; b < 2; ++b) level_a.push_back(behavior(x, y, a, b));
        level_y.push_back(std::move(level_a));
      }
      level_x.push_back(std::move(level_y));
    }
    table.push_back(std::move(level_x));
  }
  nlohmann::json j;
  if (!name.empty()) j["name"] = name;
  j["table"] = std::move(table);
  return j;
}

Behavior behavior_from_json(const nlohmann::json& j) {
  if (!j.is_object() || !j.contains("table"))
    throw DomainError("box JSON must be an object with a \"table\" key");
  const auto& table = j["table"];
  Behavior::Table t{};
  try {
    for (int x = 0; x < 2; ++x)
      for (int y = 0; y < 2; ++y)
        for (int a = 0; a < 2; ++a)
          for (int b = 0; b < 2; ++b)
            t[Behavior::index(x, y, a, b)] =
                table.at(x).at(y).at(a).at(b).get<double>();
  } catch (const nlohmann::json::exception& e) {
    throw DomainError(std::string("malformed box table: ") + e.what());
  }
  return Behavior(t);
}

std::optional<Behavior> builtin_box(std::string_view name) {
  if (name == "pr") return pr_box();
  if (name == "white") return white_noise();
  if (name == "hardy-ic-witness") return max_hardy_under_ic().witness();
  if (auto id = VertexId::parse(name)) return vertex_behavior(*id);
  return std::nullopt;
}

Behavior load_box(const std::string& name_or_path) {
  if (auto builtin = builtin_box(name_or_path)) return *builtin;
  std::ifstream in(name_or_path);
  if (!in)
    throw DomainError("not a builtin box and not a readable file: " + name_or_path);
  std::stringstream buffer;
  buffer << in.rdbuf();
  nlohmann::json j = nlohmann::json::parse(buffer.str(), nullptr, false);
  if (j.is_discarded())
    throw DomainError("invalid JSON in box file: " + name_or_path);
  return behavior_from_json(j);
}

nlohmann::json decomposition_to_json(const ConvexDecomposition& decomposition) {
  nlohmann::json j = nlohmann::json::object();
  for (const auto& [id, weight] : decomposition.weights)
    if (weight != 0.0) j[id.to_string()] = weight;
  return j;
}

ConvexDecomposition decomposition_from_json(const nlohmann::json& j) {
  if (!j.is_object()) throw DomainError("decomposition JSON must be an object");
  ConvexDecomposition d;
  for (const auto& [key, value] : j.items()) {
    auto id = VertexId::parse(key);
    if (!id) throw DomainError("unknown vertex id: " + key);
    d.weights[*id] = value.get<double>();
  }
  return d;
}

double round_significant(double value, int digits) {
  if (value == 0.0 || !std::isfinite(value)) return value == 0.0 ? 0.0 : value;
  char buf[64];
  std::snprintf(buf, sizeof buf, "%.*e", digits - 1, value);
  double rounded = std::strtod(buf, nullptr);
  return rounded == 0.0 ? 0.0 : rounded;  // normalize -0
}

nlohmann::json round_numbers(const nlohmann::json& j, int digits) {
  switch (j.type()) {
    case nlohmann::json::value_t::number_float:
      return round_significant(j.get<double>(), digits);
    case nlohmann::json::value_t::array: {
      nlohmann::json out = nlohmann::json::array();
      for (const auto& item : j) out.push_back(round_numbers(item, digits));
      return out;
    }
    case nlohmann::json::value_t::object: {
      nlohmann::json out = nlohmann::json::object();
      for (const auto& [key, value] : j.items())
        out[key] = round_numbers(value, digits);
      return out;
    }
    default:
      return j;
  }
}

}  // namespace nsbox
