#pragma once

// JSON serialization of behaviors and decompositions, plus named built-in
// boxes for the CLI:
//   "pr", "white", "local:abgd", "nonlocal:abg", "hardy-ic-witness".

#include <optional>
#include <string>
#include <string_view>

#include <json.hpp>

#include "nsbox/behavior.hpp"
#include "nsbox/polytope.hpp"

namespace nsbox {

// {"name": ..., "table": [[[[...]]]] } with [X][Y][a][b] nesting.
nlohmann::json behavior_to_json(const Behavior& behavior,
                                const std::string& name = "");
Behavior behavior_from_json(const nlohmann::json& j);

std::optional<Behavior> builtin_box(std::string_view name);

// Resolves a builtin name, else reads the given path as a box JSON file.
// Throws DomainError on unreadable files or malformed tables.
Behavior load_box(const std::string& name_or_path);

// Map from vertex-id strings to weights, zero weights omitted.
nlohmann::json decomposition_to_json(const ConvexDecomposition& decomposition);
ConvexDecomposition decomposition_from_json(const nlohmann::json& j);

// Nearest double to `value` rounded to `digits` significant decimal digits.
double round_significant(double value, int digits);

// Deep-rounds every number in a JSON document; applied to all CLI reports so
// emitted files parse and re-emit byte-identically.
nlohmann::json round_numbers(const nlohmann::json& j, int digits = 12);

}  // namespace nsbox
