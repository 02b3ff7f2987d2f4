// tpfc command line: dataset generation, knowledge induction, single fits,
// parameter sweeps and label evaluation.

#include <CLI11.hpp>
#include <cstdint>
#include <fstream>
#include <iostream>
#include <optional>
#include <string>

#include "tpfc/errors.hpp"
#include "tpfc/harness.hpp"

namespace {

tpfc::Domain domain_from_string(const std::string& name) {
  if (name == "source") return tpfc::Domain::Source;
  if (name == "target") return tpfc::Domain::Target;
  throw tpfc::InvalidConfigError("unknown domain: '" + name + "' (use source or target)");
}

tpfc::KnowledgeKind kind_from_string(const std::string& name) {
  if (name == "centers") return tpfc::KnowledgeKind::Centers;
  if (name == "planes") return tpfc::KnowledgeKind::Planes;
  if (name == "subspace") return tpfc::KnowledgeKind::Subspace;
  throw tpfc::InvalidConfigError("unknown knowledge kind: '" + name + "'");
}

// key=value[,key=value...] with keys lambda, lambda1, lambda2, m, tau, sigma,
// epsilon, max_iterations.
void apply_params(tpfc::AlgoConfig& cfg, const std::string& params) {
  std::size_t start = 0;
  while (start < params.size()) {
    std::size_t end = params.find(',', start);
    if (end == std::string::npos) end = params.size();
    const std::string item = params.substr(start, end - start);
    start = end + 1;
    if (item.empty()) continue;
    const std::size_t eq = item.find('=');
    if (eq == std::string::npos) {
      throw tpfc::InvalidConfigError("--params items must look like key=value: '" + item + "'");
    }
    const std::string key = item.substr(0, eq);
    double value = 0.0;
    try {
      value = std::stod(item.substr(eq + 1));
    } catch (const std::exception&) {
      throw tpfc::InvalidConfigError("--params value for '" + key + "' is not a number");
    }
    if (key == "lambda") {
      cfg.lambda = value;
    } else if (key == "lambda1") {
      cfg.lambda1 = value;
    } else if (key == "lambda2") {
      cfg.lambda2 = value;
    } else if (key == "m") {
      cfg.fuzzifier_m = value;
    } else if (key == "tau") {
      cfg.weight_fuzzifier_tau = value;
    } else if (key == "sigma") {
      cfg.sigma = value;
    } else if (key == "epsilon") {
      cfg.epsilon = value;
    } else if (key == "max_iterations") {
      cfg.max_iterations = static_cast<int>(value);
    } else {
      throw tpfc::InvalidConfigError("unknown --params key: '" + key + "'");
    }
  }
}

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{"transfer fuzzy clustering with source-domain prototype knowledge"};
  app.require_subcommand(1);

  // gen
  auto* gen = app.add_subcommand("gen", "generate a benchmark dataset CSV");
  std::string gen_dataset;
  std::string gen_domain = "target";
  std::uint64_t gen_seed = 0;
  std::string gen_out;
  gen->add_option("dataset", gen_dataset, "d1, d2 or d3")->required();
  gen->add_option("--domain", gen_domain, "source or target (default target)");
  gen->add_option("--seed", gen_seed, "generator seed");
  gen->add_option("-o,--out", gen_out, "output CSV path")->required();

  // induce
  auto* induce = app.add_subcommand("induce", "induce source knowledge from a dataset CSV");
  std::string induce_data;
  std::string induce_kind = "centers";
  int induce_clusters = 3;
  std::uint64_t induce_seed = 0;
  int induce_restarts = 10;
  std::string induce_params;
  bool induce_zscore = false;
  std::string induce_out;
  induce->add_option("data", induce_data, "input dataset CSV")->required();
  induce->add_option("--kind", induce_kind, "centers, planes or subspace")->required();
  induce->add_option("--clusters", induce_clusters, "cluster count");
  induce->add_option("--seed", induce_seed, "base restart seed");
  induce->add_option("--restarts", induce_restarts, "number of seeded restarts");
  induce->add_option("--params", induce_params, "key=value list (m, tau, sigma, ...)");
  induce->add_flag("--zscore", induce_zscore, "standardize features on ingestion");
  induce->add_option("-o,--out", induce_out, "output knowledge JSON path")->required();

  // fit
  auto* fit = app.add_subcommand("fit", "run one clustering fit");
  std::string fit_data;
  std::string fit_algorithm;
  std::string fit_knowledge;
  int fit_clusters = 3;
  std::uint64_t fit_seed = 0;
  std::string fit_params;
  bool fit_zscore = false;
  std::string fit_out = "result.json";
  std::string fit_labels;
  fit->add_option("data", fit_data, "input dataset CSV")->required();
  fit->add_option("--algorithm", fit_algorithm, "fcm|fkpc|fsc|tfcm|tfkpc|tfsc")->required();
  fit->add_option("--knowledge", fit_knowledge, "knowledge JSON (transfer algorithms)");
  fit->add_option("--clusters", fit_clusters, "cluster count");
  fit->add_option("--seed", fit_seed, "fit seed");
  fit->add_option("--params", fit_params, "key=value list (lambda1, lambda2, lambda, ...)");
  fit->add_flag("--zscore", fit_zscore, "standardize features on ingestion");
  fit->add_option("-o,--out", fit_out, "result JSON path");
  fit->add_option("--labels", fit_labels, "hardened labels CSV (default <out>.labels.csv)");

  // sweep
  auto* sweep = app.add_subcommand("sweep", "run a seeded parameter sweep from a config file");
  std::string sweep_config;
  sweep->add_option("config", sweep_config, "experiment config JSON")->required();

  // eval
  auto* eval = app.add_subcommand("eval", "compare predicted labels against ground truth");
  std::string eval_pred;
  std::string eval_truth;
  std::string eval_out;
  eval->add_option("pred", eval_pred, "predicted labels CSV")->required();
  eval->add_option("truth", eval_truth, "true labels CSV")->required();
  eval->add_option("-o,--out", eval_out, "metrics JSON path (default stdout)");

  CLI11_PARSE(app, argc, argv);

  try {
    if (gen->parsed()) {
      tpfc::run_gen(gen_dataset, domain_from_string(gen_domain), gen_seed, gen_out);
    } else if (induce->parsed()) {
      tpfc::AlgoConfig cfg;
      cfg.cluster_count = induce_clusters;
      cfg.rng_seed = induce_seed;
      apply_params(cfg, induce_params);
      tpfc::run_induce(induce_data, kind_from_string(induce_kind), cfg, induce_restarts,
                       induce_zscore, induce_out);
    } else if (fit->parsed()) {
      tpfc::AlgoConfig cfg;
      cfg.cluster_count = fit_clusters;
      cfg.rng_seed = fit_seed;
      apply_params(cfg, fit_params);
      std::optional<std::string> knowledge;
      if (!fit_knowledge.empty()) knowledge = fit_knowledge;
      if (fit_labels.empty()) fit_labels = fit_out + ".labels.csv";
      tpfc::run_fit(fit_data, tpfc::algorithm_from_string(fit_algorithm), knowledge, cfg,
                    fit_zscore, fit_out, fit_labels);
    } else if (sweep->parsed()) {
      tpfc::run_sweep(sweep_config);
    } else if (eval->parsed()) {
      const std::string metrics = tpfc::run_eval(eval_pred, eval_truth);
      if (eval_out.empty()) {
        std::cout << metrics << '\n';
      } else {
        std::ofstream out(eval_out);
        if (!out) throw tpfc::IoError("cannot open for writing: " + eval_out);
        out << metrics << '\n';
      }
    }
  } catch (const std::exception& err) {
    std::cerr << "error: " << err.what() << '\n';
    return 1;
  }
  return 0;
}
