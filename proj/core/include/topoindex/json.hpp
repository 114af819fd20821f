#pragma once

#include <string>

#include <nlohmann/json.hpp>

#include "topoindex/bounds.hpp"
#include "topoindex/extremal.hpp"
#include "topoindex/indices.hpp"
#include "topoindex/verify.hpp"

namespace topoindex {

// Flat objects with snake_case keys matching the struct fields. Rationals
// are rendered as "p/q" strings.
void to_json(nlohmann::json& j, const IndexReport& r);
void to_json(nlohmann::json& j, const BoundReport& r);
void to_json(nlohmann::json& j, const ExtremalResult& r);
void to_json(nlohmann::json& j, const CheckResult& r);

/// Column order: n, m, diameter, is_bipartite, wiener, zagreb_m1, zagreb_m2,
/// pi_v, szeged, pi_w, sz_w, triangle_total.
std::string csv_header();
std::string csv_row(const IndexReport& r);

}  // namespace topoindex
