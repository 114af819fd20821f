#include "topoindex/json.hpp"

namespace topoindex {

void to_json(nlohmann::json& j, const IndexReport& r) {
  j = nlohmann::json{{"n", r.n},
                     {"m", r.m},
                     {"wiener", r.wiener},
                     {"zagreb_m1", r.zagreb_m1},
                     {"zagreb_m2", r.zagreb_m2},
                     {"pi_v", r.pi_v},
                     {"szeged", r.szeged},
                     {"pi_w", r.pi_w},
                     {"sz_w", r.sz_w},
                     {"triangle_total", r.triangle_total},
                     {"is_bipartite", r.is_bipartite},
                     {"diameter", r.diameter}};
}

void to_json(nlohmann::json& j, const BoundReport& r) {
  j = nlohmann::json{{"bound_name", r.bound_name},
                     {"direction", r.direction == BoundDirection::Lower ? "lower" : "upper"},
                     {"bound_value", to_string(r.bound_value)},
                     {"index_value", r.index_value},
                     {"holds", r.holds},
                     {"equality", r.equality},
                     {"expected_equality_class", r.expected_equality_class},
                     {"in_expected_class", r.in_expected_class},
                     {"matches_expected_class", r.matches_expected_class}};
}

void to_json(nlohmann::json& j, const ExtremalResult& r) {
  j = nlohmann::json{{"objective", std::string(to_string(r.objective))},
                     {"n", r.n ? nlohmann::json(*r.n) : nlohmann::json(nullptr)},
                     {"examined", r.examined},
                     {"min_value", r.min_value},
                     {"min_witnesses", r.min_witnesses},
                     {"max_value", r.max_value},
                     {"max_witnesses", r.max_witnesses},
                     {"skipped_disconnected", r.skipped_disconnected}};
}

void to_json(nlohmann::json& j, const CheckResult& r) {
  j = nlohmann::json{{"check", r.name},
                     {"passed", r.passed},
                     {"examined", r.examined},
                     {"counterexample", r.counterexample ? nlohmann::json(*r.counterexample) : nlohmann::json(nullptr)},
                     {"failure", r.failure ? nlohmann::json(*r.failure) : nlohmann::json(nullptr)},
                     {"equality_witnesses", r.equality_witnesses},
                     {"details", r.details}};
}

std::string csv_header() { return "n,m,diameter,is_bipartite,wiener,zagreb_m1,zagreb_m2,pi_v,szeged,pi_w,sz_w,triangle_total"; }

std::string csv_row(const IndexReport& r) {
  std::string out;
  for (auto v : {r.n, r.m, r.diameter, std::int64_t{r.is_bipartite}, r.wiener, r.zagreb_m1, r.zagreb_m2, r.pi_v,
                 r.szeged, r.pi_w, r.sz_w, r.triangle_total}) {
    if (!out.empty()) out += ',';
    out += std::to_string(v);
  }
  return out;
}

}  // namespace topoindex
