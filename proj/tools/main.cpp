// topoindex: compute, verify, product and enumerate subcommands.
//
// Exit codes: 0 pass, 1 verification or consistency failure, 2 usage error.

#include <chrono>
#include <fstream>
#include <iostream>
#include <optional>
#include <string>
#include <vector>

#include <CLI11.hpp>
#include <nlohmann/json.hpp>

#include "graph_spec.hpp"
#include "topoindex/error.hpp"
#include "topoindex/extremal.hpp"
#include "topoindex/indices.hpp"
#include "topoindex/json.hpp"
#include "topoindex/parallel.hpp"
#include "topoindex/products.hpp"
#include "topoindex/verify.hpp"

namespace {

using nlohmann::json;
using namespace topoindex;

constexpr int kExitPass = 0;
constexpr int kExitFailure = 1;
constexpr int kExitUsage = 2;

struct RunManifest {
  std::string subcommand;
  std::vector<std::string> inputs;
  std::string format = "json";
  std::optional<std::uint64_t> seed;
};

void write_manifest(const std::string& path, const RunManifest& m) {
  if (path.empty()) return;
  const auto now = std::chrono::system_clock::now();
  json j{{"subcommand", m.subcommand},
         {"inputs", m.inputs},
         {"format", m.format},
         {"seed", m.seed ? json(*m.seed) : json(nullptr)},
         {"timestamp_unix_ms",
          std::chrono::duration_cast<std::chrono::milliseconds>(now.time_since_epoch()).count()}};
  std::ofstream(path) << j.dump(2) << '\n';
}

int cmd_compute(const std::vector<std::string>& inputs, const std::string& format) {
  struct Item {
    std::string input;
    Graph graph;
  };
  std::vector<Item> items;
  for (const auto& input : inputs) {
    try {
      for (auto& g : cli::resolve_input(input)) items.push_back({input, std::move(g)});
    } catch (const Error& e) {
      std::cerr << input << ": " << e.what() << '\n';
      return kExitUsage;
    }
  }

  // Workers fill slots; printing in input order keeps output byte-stable.
  std::vector<std::optional<IndexReport>> reports(items.size());
  std::vector<std::string> errors(items.size());
  parallel_for(items.size(), worker_count(), [&](std::size_t i) {
    try {
      reports[i] = compute_indices(items[i].graph);
    } catch (const Error& e) {
      errors[i] = e.what();
    }
  });

  int status = kExitPass;
  if (format == "csv") std::cout << csv_header() << '\n';
  for (std::size_t i = 0; i < items.size(); ++i) {
    if (!reports[i]) {
      std::cerr << items[i].input << ": " << errors[i] << '\n';
      status = kExitUsage;
      continue;
    }
    if (format == "csv") {
      std::cout << csv_row(*reports[i]) << '\n';
    } else {
      std::cout << json(*reports[i]).dump() << '\n';
    }
  }
  return status;
}

int cmd_verify(const std::string& scope_name, const VerifyConfig& config) {
  const auto scope = parse_scope(scope_name);
  if (!scope) {
    std::cerr << "unknown scope '" << scope_name << "' (bounds, lemmas, products, extremal, all)\n";
    return kExitUsage;
  }
  if (config.n_max < 1 || config.n_max > kMaxEnumerationOrder) {
    std::cerr << "--n-max must be in 1.." << kMaxEnumerationOrder << '\n';
    return kExitUsage;
  }
  const auto results = run_verification(*scope, config);
  json out = json::array();
  for (const auto& r : results) out.push_back(r);
  std::cout << json{{"scope", scope_name}, {"seed", config.seed}, {"n_max", config.n_max}, {"checks", out}}.dump(2)
            << '\n';

  std::size_t passed = 0;
  const CheckResult* first_failure = nullptr;
  for (const auto& r : results) {
    if (r.passed) {
      ++passed;
    } else if (!first_failure) {
      first_failure = &r;
    }
  }
  if (!first_failure) {
    std::cout << "PASS " << passed << '/' << results.size() << '\n';
    return kExitPass;
  }
  std::cout << "FAIL " << passed << '/' << results.size() << ' ' << first_failure->name << ": "
            << first_failure->failure.value_or("") << ' ' << first_failure->counterexample.value_or("") << '\n';
  return kExitFailure;
}

int cmd_product(const std::vector<std::string>& specs) {
  std::vector<Graph> factors;
  json factor_info = json::array();
  for (const auto& spec : specs) {
    std::vector<Graph> graphs;
    try {
      graphs = cli::resolve_input(spec);
    } catch (const Error& e) {
      std::cerr << spec << ": " << e.what() << '\n';
      return kExitUsage;
    }
    if (graphs.size() != 1) {
      std::cerr << spec << ": a factor must be exactly one graph\n";
      return kExitUsage;
    }
    if (!graphs.front().is_connected()) {
      std::cerr << spec << ": factor is not connected\n";
      return kExitUsage;
    }
    factors.push_back(std::move(graphs.front()));
  }

  const ProductFactors product(factors);
  for (std::size_t i = 0; i < specs.size(); ++i) {
    const auto& inv = product.invariants()[i];
    factor_info.push_back(
        {{"spec", specs[i]}, {"n", inv.vertices}, {"m", inv.edges}, {"pi_v", inv.pi_v}, {"pi_w", inv.pi_w}});
  }
  const auto formula = piw_nfold_formula(product);
  const auto pairwise = piw_iterated_pairwise(product.invariants());
  const auto piv_formula = piv_product_formula(product);
  const auto direct = compute_indices(cartesian_product(factors));
  const bool match = formula == direct.pi_w && pairwise == direct.pi_w && piv_formula == direct.pi_v;

  json out{{"factors", factor_info},
           {"n", direct.n},
           {"m", direct.m},
           {"pi_w", {{"formula", formula}, {"iterated_pairwise", pairwise}, {"direct", direct.pi_w}}},
           {"pi_v", {{"formula", piv_formula}, {"direct", direct.pi_v}}},
           {"match", match}};
  std::cout << out.dump(2) << '\n';
  return match ? kExitPass : kExitFailure;
}

int cmd_enumerate(const EnumerationConfig& config, const std::string& objective_name) {
  const auto objective = parse_objective(objective_name);
  if (!objective) {
    std::cerr << "unknown objective '" << objective_name << "'\n";
    return kExitUsage;
  }
  if (!config.input && (config.n < 1 || config.n > kMaxEnumerationOrder)) {
    std::cerr << "--n must be in 1.." << kMaxEnumerationOrder << " (use --input for larger graphs)\n";
    return kExitUsage;
  }
  const auto result = extremal_search(config, *objective);
  std::cout << json(result).dump(2) << '\n';
  return kExitPass;
}

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{"Weighted vertex PI index and related topological indices"};
  app.footer(cli::kGeneratorHelp);
  app.require_subcommand(1);
  std::string manifest_path;
  app.add_option("--manifest", manifest_path, "Write a run manifest (inputs, seed, timestamp) to this file");

  RunManifest manifest;

  auto* compute = app.add_subcommand("compute", "Compute every index for each input graph");
  std::vector<std::string> compute_inputs;
  std::string format = "json";
  compute->add_option("inputs", compute_inputs, "Generator specs or graph files")->required();
  compute->add_option("--format", format, "Output format")->check(CLI::IsMember({"json", "csv"}));

  auto* verify = app.add_subcommand("verify", "Exhaustively and randomly verify every formula and bound");
  std::string scope = "all";
  VerifyConfig verify_config;
  verify_config.workers = worker_count();
  verify->add_option("scope", scope, "bounds | lemmas | products | extremal | all");
  verify->add_option("--n-max", verify_config.n_max, "Largest order for exhaustive enumeration")->capture_default_str();
  verify->add_option("--samples", verify_config.samples, "Random rational samples for the lemmas")->capture_default_str();
  verify->add_option("--seed", verify_config.seed, "Seed for every randomized suite")->capture_default_str();
  verify->add_option("--random-graphs", verify_config.random_graphs, "Random connected graphs for the bounds")
      ->capture_default_str();
  verify->add_option("--max-order", verify_config.random_max_order, "Largest order of random graphs")
      ->capture_default_str();

  auto* product = app.add_subcommand("product", "Cartesian product: closed-form vs direct PI_w and PI_v");
  std::vector<std::string> factor_specs;
  product->add_option("factors", factor_specs, "Two or more factor specs")->required()->expected(2, -1);

  auto* enumerate = app.add_subcommand("enumerate", "Exact min/max of an index over all connected graphs");
  EnumerationConfig enum_config;
  std::string objective = "pi_w";
  std::string input_path;
  enumerate->add_option("--n", enum_config.n, "Vertex count (internal generation, n <= 8)");
  enumerate->add_flag("--dedupe", enum_config.dedupe, "One representative per isomorphism class");
  enumerate->add_option("--objective", objective, "pi_w | pi_v | szeged | sz_w | wiener | m1 | m2")
      ->capture_default_str();
  enumerate->add_option("--input", input_path, "graph6 file to scan instead of generating");

  try {
    app.parse(argc, argv);
  } catch (const CLI::ParseError& e) {
    const int code = app.exit(e);
    return code == 0 ? kExitPass : kExitUsage;
  }

  try {
    int status = kExitUsage;
    if (*compute) {
      manifest = {"compute", compute_inputs, format, std::nullopt};
      status = cmd_compute(compute_inputs, format);
    } else if (*verify) {
      manifest = {"verify", {scope}, "json", verify_config.seed};
      status = cmd_verify(scope, verify_config);
    } else if (*product) {
      manifest = {"product", factor_specs, "json", std::nullopt};
      status = cmd_product(factor_specs);
    } else if (*enumerate) {
      if (!input_path.empty()) enum_config.input = input_path;
      manifest = {"enumerate", {input_path.empty() ? "n=" + std::to_string(enum_config.n) : input_path}, "json",
                  std::nullopt};
      status = cmd_enumerate(enum_config, objective);
    }
    write_manifest(manifest_path, manifest);
    return status;
  } catch (const Error& e) {
    std::cerr << "error: " << e.what() << '\n';
    return e.code() == ErrorCode::Overflow ? kExitFailure : kExitUsage;
  }
}
