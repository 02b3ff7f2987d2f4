#pragma once

#include <functional>
#include <optional>
#include <string>
#include <utility>
#include <vector>

#include "tpfc/datagen.hpp"
#include "tpfc/types.hpp"

namespace tpfc {

enum class Algorithm { Fcm, Fkpc, Fsc, Tfcm, Tfkpc, Tfsc };

Algorithm algorithm_from_string(const std::string& name);
std::string to_string(Algorithm algorithm);
bool is_transfer(Algorithm algorithm);
/// Knowledge kind a transfer algorithm consumes (and the kind its baseline
/// counterpart induces).
KnowledgeKind knowledge_kind_for(Algorithm algorithm);

// Dataset reference: one of the built-in generators or a CSV file.
struct DatasetSpec {
  std::string generator;  // "d1" | "d2" | "d3"; empty when csv_path is set
  Domain domain = Domain::Target;
  std::uint64_t seed = 0;
  std::string csv_path;
  bool zscore = false;  // CSV ingestion only

  bool from_generator() const { return !generator.empty(); }
};

DataMatrix load_dataset(const DatasetSpec& spec);

// Inline knowledge induction request.
struct InduceSpec {
  KnowledgeKind kind = KnowledgeKind::Centers;
  DatasetSpec dataset;
  AlgoConfig config;
  int restarts = 10;
};

struct KnowledgeSpec {
  std::string path;                 // exactly one of path / induce is set
  std::optional<InduceSpec> induce;
};

SourceKnowledge resolve_knowledge(const KnowledgeSpec& spec);

struct ExperimentConfig {
  Algorithm algorithm = Algorithm::Fcm;
  DatasetSpec dataset;
  std::optional<KnowledgeSpec> knowledge;
  std::vector<double> lambda1_grid;  // tfcm/tfsc
  std::vector<double> lambda2_grid;  // tfcm/tfsc
  std::vector<double> lambda_grid;   // tfkpc
  int repetitions = 20;
  AlgoConfig base;  // base.rng_seed is the repetition base seed
  std::string output_path;
  std::string log_path;  // JSONL per-run log; defaults next to output_path
  int parallelism = 1;
};

/// Parse and validate; throws SchemaError listing every offending field.
ExperimentConfig experiment_from_json_text(const std::string& text);
ExperimentConfig load_experiment_config(const std::string& path);

// One evaluated fit.
struct FitEvaluation {
  RunResult result;
  std::string xb_metric;  // xb_m | xb_fkpc | xb_fsc
  double xb_value = 0.0;
  std::optional<double> ri;
  std::optional<double> nmi;
  double runtime_s = 0.0;
};

/// Run one algorithm and compute the applicable indices. Transfer algorithms
/// require knowledge of the matching kind; baselines must get none.
FitEvaluation fit_and_evaluate(Algorithm algorithm, const DataMatrix& data,
                               const SourceKnowledge* knowledge, const AlgoConfig& cfg);

struct AggregateStats {
  double min = 0.0;
  double max = 0.0;
  double mean = 0.0;
  double std = 0.0;
};

AggregateStats aggregate(const std::vector<double>& values);

// Per-grid-point aggregation over repetitions.
struct AggregateRow {
  std::vector<std::pair<std::string, double>> params;
  std::optional<AggregateStats> ri;
  std::optional<AggregateStats> nmi;
  std::string xb_metric;
  AggregateStats xb;
  AggregateStats iterations;
  AggregateStats converged;  // over 0/1 indicators; mean is the rate
  double mean_runtime_s = 0.0;
};

struct SweepResult {
  std::vector<AggregateRow> rows;
  std::string aggregate_csv;  // deterministic; what run_sweep writes
};

SweepResult run_sweep_in_memory(const ExperimentConfig& config,
                                std::string* jsonl_log = nullptr);

// CLI-facing operations; every failure surfaces as a tpfc::Error subclass.
void run_gen(const std::string& dataset, Domain domain, std::uint64_t seed,
             const std::string& out_path);
void run_induce(const std::string& data_path, KnowledgeKind kind, const AlgoConfig& cfg,
                int restarts, bool zscore, const std::string& out_path);
void run_fit(const std::string& data_path, Algorithm algorithm,
             const std::optional<std::string>& knowledge_path, const AlgoConfig& cfg,
             bool zscore, const std::string& out_json_path, const std::string& labels_path);
void run_sweep(const std::string& config_path);
std::string run_eval(const std::string& pred_labels_path, const std::string& truth_labels_path);

/// Serialize a fit outcome (trace, prototypes, metrics) as a JSON document.
std::string fit_result_json(Algorithm algorithm, const DataMatrix& data,
                            const FitEvaluation& evaluation);

namespace detail {
/// Run fn(0..count-1) on up to `threads` workers; rethrows the first failure.
void parallel_for(std::size_t count, int threads, const std::function<void(std::size_t)>& fn);
}  // namespace detail

}  // namespace tpfc
