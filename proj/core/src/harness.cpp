#include "tpfc/harness.hpp"

#include <atomic>
#include <chrono>
#include <cmath>
#include <fstream>
#include <mutex>
#include <sstream>
#include <thread>

#include <json.hpp>

#include "tpfc/baselines.hpp"
#include "tpfc/csv.hpp"
#include "tpfc/errors.hpp"
#include "tpfc/knowledge_io.hpp"
#include "tpfc/metrics.hpp"
#include "tpfc/partition.hpp"
#include "tpfc/transfer.hpp"

namespace tpfc {

using nlohmann::json;

Algorithm algorithm_from_string(const std::string& name) {
  if (name == "fcm") return Algorithm::Fcm;
  if (name == "fkpc") return Algorithm::Fkpc;
  if (name == "fsc") return Algorithm::Fsc;
  if (name == "tfcm") return Algorithm::Tfcm;
  if (name == "tfkpc") return Algorithm::Tfkpc;
  if (name == "tfsc") return Algorithm::Tfsc;
  throw InvalidConfigError("unknown algorithm: '" + name + "'");
}

std::string to_string(Algorithm algorithm) {
  switch (algorithm) {
    case Algorithm::Fcm: return "fcm";
    case Algorithm::Fkpc: return "fkpc";
    case Algorithm::Fsc: return "fsc";
    case Algorithm::Tfcm: return "tfcm";
    case Algorithm::Tfkpc: return "tfkpc";
    case Algorithm::Tfsc: return "tfsc";
  }
  return "unknown";
}

bool is_transfer(Algorithm algorithm) {
  return algorithm == Algorithm::Tfcm || algorithm == Algorithm::Tfkpc ||
         algorithm == Algorithm::Tfsc;
}

KnowledgeKind knowledge_kind_for(Algorithm algorithm) {
  switch (algorithm) {
    case Algorithm::Fcm:
    case Algorithm::Tfcm: return KnowledgeKind::Centers;
    case Algorithm::Fkpc:
    case Algorithm::Tfkpc: return KnowledgeKind::Planes;
    case Algorithm::Fsc:
    case Algorithm::Tfsc:
    default: return KnowledgeKind::Subspace;
  }
}

DataMatrix load_dataset(const DatasetSpec& spec) {
  if (spec.from_generator()) {
    if (spec.generator == "d1") return gen_d1(spec.domain, spec.seed);
    if (spec.generator == "d2") return gen_d2(spec.domain, spec.seed);
    if (spec.generator == "d3") return gen_d3(spec.domain, spec.seed);
    throw InvalidConfigError("unknown dataset generator: '" + spec.generator + "'");
  }
  return read_dataset_csv(spec.csv_path, spec.zscore);
}

SourceKnowledge resolve_knowledge(const KnowledgeSpec& spec) {
  if (!spec.path.empty()) return load_knowledge(spec.path);
  if (!spec.induce) throw InvalidConfigError("knowledge spec has neither path nor induce");
  const DataMatrix source = load_dataset(spec.induce->dataset);
  return induce_knowledge(source, spec.induce->kind, spec.induce->config,
                          spec.induce->restarts);
}

// ---------------------------------------------------------------------------
// Fit + evaluate
// ---------------------------------------------------------------------------

namespace {

const char* kind_name(KnowledgeKind kind) {
  switch (kind) {
    case KnowledgeKind::Centers: return "centers";
    case KnowledgeKind::Planes: return "planes";
    case KnowledgeKind::Subspace: return "subspace";
  }
  return "unknown";
}

}  // namespace

FitEvaluation fit_and_evaluate(Algorithm algorithm, const DataMatrix& data,
                               const SourceKnowledge* knowledge, const AlgoConfig& cfg) {
  if (is_transfer(algorithm)) {
    if (!knowledge) {
      throw InvalidConfigError(to_string(algorithm) + " requires source knowledge");
    }
    const auto wanted = knowledge_kind_for(algorithm);
    if (kind_of(*knowledge) != wanted) {
      throw InvalidConfigError(to_string(algorithm) + " requires " + kind_name(wanted) +
                               " knowledge, got " + kind_name(kind_of(*knowledge)));
    }
  } else if (knowledge) {
    throw InvalidConfigError(to_string(algorithm) + " does not take source knowledge");
  }

  FitEvaluation eval;
  const auto start = std::chrono::steady_clock::now();
  switch (algorithm) {
    case Algorithm::Fcm: eval.result = fcm_fit(data, cfg); break;
    case Algorithm::Fkpc: eval.result = fkpc_fit(data, cfg); break;
    case Algorithm::Fsc: eval.result = fsc_fit(data, cfg); break;
    case Algorithm::Tfcm:
      eval.result = tfcm_fit(data, std::get<CenterSet>(*knowledge), cfg);
      break;
    case Algorithm::Tfkpc:
      eval.result = tfkpc_fit(data, std::get<PlaneSet>(*knowledge), cfg);
      break;
    case Algorithm::Tfsc:
      eval.result = tfsc_fit(data, std::get<SubspacePrototypes>(*knowledge), cfg);
      break;
  }
  eval.runtime_s =
      std::chrono::duration<double>(std::chrono::steady_clock::now() - start).count();

  switch (algorithm) {
    case Algorithm::Fcm:
    case Algorithm::Tfcm:
      eval.xb_metric = "xb_m";
      eval.xb_value = xb(data, eval.result.partition, std::get<CenterSet>(eval.result.prototypes),
                         cfg.fuzzifier_m, XbExponent::Fuzzifier);
      break;
    case Algorithm::Fkpc:
    case Algorithm::Tfkpc:
      eval.xb_metric = "xb_fkpc";
      eval.xb_value = xb_fkpc(data, eval.result.partition,
                              std::get<PlaneSet>(eval.result.prototypes), cfg.fuzzifier_m);
      break;
    case Algorithm::Fsc:
    case Algorithm::Tfsc: {
      eval.xb_metric = "xb_fsc";
      const auto& prototypes = std::get<SubspacePrototypes>(eval.result.prototypes);
      eval.xb_value = xb_fsc(data, eval.result.partition, prototypes.centers, prototypes.weights,
                             cfg.fuzzifier_m, cfg.weight_fuzzifier_tau);
      break;
    }
  }

  if (data.labels) {
    const auto hardened = harden(eval.result.partition);
    eval.ri = rand_index(hardened, *data.labels);
    eval.nmi = nmi(hardened, *data.labels);
  }
  return eval;
}

// ---------------------------------------------------------------------------
// Experiment configuration
// ---------------------------------------------------------------------------

namespace {

class FieldErrors {
 public:
  void add(const std::string& field, const std::string& message) {
    entries_.push_back(field + ": " + message);
  }
  void raise_if_any() const {
    if (entries_.empty()) return;
    std::string text = "invalid experiment config:";
    for (const auto& e : entries_) text += " [" + e + "]";
    throw SchemaError(text);
  }
  bool empty() const { return entries_.empty(); }

 private:
  std::vector<std::string> entries_;
};

DatasetSpec dataset_from_json(const json& node, const std::string& field, FieldErrors& errors) {
  DatasetSpec spec;
  if (!node.is_object()) {
    errors.add(field, "must be an object");
    return spec;
  }
  const bool has_generator = node.contains("generator");
  const bool has_csv = node.contains("csv");
  if (has_generator == has_csv) {
    errors.add(field, "needs exactly one of 'generator' or 'csv'");
    return spec;
  }
  if (has_generator) {
    spec.generator = node["generator"].get<std::string>();
    if (spec.generator != "d1" && spec.generator != "d2" && spec.generator != "d3") {
      errors.add(field + ".generator", "must be d1, d2 or d3");
    }
    const std::string domain = node.value("domain", "target");
    if (domain == "source") {
      spec.domain = Domain::Source;
    } else if (domain == "target") {
      spec.domain = Domain::Target;
    } else {
      errors.add(field + ".domain", "must be source or target");
    }
    spec.seed = node.value("seed", std::uint64_t{0});
  } else {
    spec.csv_path = node["csv"].get<std::string>();
    spec.zscore = node.value("zscore", false);
  }
  return spec;
}

AlgoConfig algo_config_from_json(const json& node, const AlgoConfig& defaults,
                                 const std::string& field, FieldErrors& errors) {
  AlgoConfig cfg = defaults;
  if (node.is_null()) return cfg;
  if (!node.is_object()) {
    errors.add(field, "must be an object");
    return cfg;
  }
  static const char* known[] = {"clusters", "m",          "tau",  "sigma",
                                "epsilon",  "max_iterations", "seed"};
  for (auto it = node.begin(); it != node.end(); ++it) {
    bool ok = false;
    for (const char* name : known) ok = ok || it.key() == name;
    if (!ok) errors.add(field + "." + it.key(), "unknown field");
  }
  cfg.cluster_count = node.value("clusters", cfg.cluster_count);
  cfg.fuzzifier_m = node.value("m", cfg.fuzzifier_m);
  cfg.weight_fuzzifier_tau = node.value("tau", cfg.weight_fuzzifier_tau);
  if (node.contains("sigma") && !node["sigma"].is_null()) {
    cfg.sigma = node["sigma"].get<double>();
  }
  cfg.epsilon = node.value("epsilon", cfg.epsilon);
  cfg.max_iterations = node.value("max_iterations", cfg.max_iterations);
  cfg.rng_seed = node.value("seed", cfg.rng_seed);
  return cfg;
}

std::vector<double> lambda_list_from_json(const json& node, const std::string& field,
                                          FieldErrors& errors) {
  std::vector<double> values;
  if (!node.is_array() || node.empty()) {
    errors.add(field, "must be a non-empty array of numbers");
    return values;
  }
  for (const auto& v : node) {
    if (!v.is_number()) {
      errors.add(field, "must contain numbers only");
      return {};
    }
    values.push_back(v.get<double>());
    if (values.back() < 0.0) errors.add(field, "balance values must be >= 0");
  }
  return values;
}

}  // namespace

ExperimentConfig experiment_from_json_text(const std::string& text) {
  json doc;
  try {
    doc = json::parse(text);
  } catch (const json::parse_error& err) {
    throw SchemaError(std::string("experiment config parse error: ") + err.what());
  }
  FieldErrors errors;
  ExperimentConfig config;

  if (!doc.contains("algorithm") || !doc["algorithm"].is_string()) {
    errors.add("algorithm", "required string");
  } else {
    try {
      config.algorithm = algorithm_from_string(doc["algorithm"].get<std::string>());
    } catch (const InvalidConfigError& err) {
      errors.add("algorithm", err.what());
    }
  }

  if (!doc.contains("dataset")) {
    errors.add("dataset", "required");
  } else {
    config.dataset = dataset_from_json(doc["dataset"], "dataset", errors);
  }

  config.base = algo_config_from_json(doc.value("config", json::object()), AlgoConfig{},
                                      "config", errors);

  if (doc.contains("knowledge")) {
    const auto& node = doc["knowledge"];
    KnowledgeSpec spec;
    const bool has_path = node.is_object() && node.contains("path");
    const bool has_induce = node.is_object() && node.contains("induce");
    if (has_path == has_induce) {
      errors.add("knowledge", "needs exactly one of 'path' or 'induce'");
    } else if (has_path) {
      spec.path = node["path"].get<std::string>();
    } else {
      const auto& ind = node["induce"];
      InduceSpec induce;
      const std::string kind = ind.value("kind", "");
      if (kind == "centers") {
        induce.kind = KnowledgeKind::Centers;
      } else if (kind == "planes") {
        induce.kind = KnowledgeKind::Planes;
      } else if (kind == "subspace") {
        induce.kind = KnowledgeKind::Subspace;
      } else {
        errors.add("knowledge.induce.kind", "must be centers, planes or subspace");
      }
      if (!ind.contains("dataset")) {
        errors.add("knowledge.induce.dataset", "required");
      } else {
        induce.dataset = dataset_from_json(ind["dataset"], "knowledge.induce.dataset", errors);
      }
      induce.config = algo_config_from_json(ind.value("config", json::object()), config.base,
                                            "knowledge.induce.config", errors);
      induce.restarts = ind.value("restarts", 10);
      if (induce.restarts < 1) errors.add("knowledge.induce.restarts", "must be >= 1");
      spec.induce = std::move(induce);
    }
    config.knowledge = std::move(spec);
  }

  const bool wants_lambda12 =
      config.algorithm == Algorithm::Tfcm || config.algorithm == Algorithm::Tfsc;
  const bool wants_lambda = config.algorithm == Algorithm::Tfkpc;
  if (doc.contains("grid")) {
    const auto& grid = doc["grid"];
    if (!grid.is_object()) {
      errors.add("grid", "must be an object");
    } else {
      if (wants_lambda12) {
        config.lambda1_grid =
            lambda_list_from_json(grid.value("lambda1", json()), "grid.lambda1", errors);
        config.lambda2_grid =
            lambda_list_from_json(grid.value("lambda2", json()), "grid.lambda2", errors);
      } else if (wants_lambda) {
        config.lambda_grid =
            lambda_list_from_json(grid.value("lambda", json()), "grid.lambda", errors);
      } else {
        errors.add("grid", "baseline algorithms take no balance grid");
      }
    }
  } else if (wants_lambda12 || wants_lambda) {
    errors.add("grid", "required for transfer algorithms");
  }

  if (is_transfer(config.algorithm) && !config.knowledge) {
    errors.add("knowledge", "required for transfer algorithms");
  }
  if (!is_transfer(config.algorithm) && config.knowledge) {
    errors.add("knowledge", "baseline algorithms take no knowledge source");
  }

  config.repetitions = doc.value("repetitions", 20);
  if (config.repetitions < 1) errors.add("repetitions", "must be >= 1");

  if (!doc.contains("output") || !doc["output"].is_string()) {
    errors.add("output", "required string path");
  } else {
    config.output_path = doc["output"].get<std::string>();
  }
  config.log_path = doc.value("log", config.output_path + ".runs.jsonl");

  config.parallelism = doc.value("parallelism", 1);
  if (config.parallelism < 1) errors.add("parallelism", "must be >= 1");

  errors.raise_if_any();
  return config;
}

ExperimentConfig load_experiment_config(const std::string& path) {
  std::ifstream in(path);
  if (!in) throw IoError("cannot open: " + path);
  std::string text((std::istreambuf_iterator<char>(in)), std::istreambuf_iterator<char>());
  return experiment_from_json_text(text);
}

// ---------------------------------------------------------------------------
// Sweep engine
// ---------------------------------------------------------------------------

AggregateStats aggregate(const std::vector<double>& values) {
  AggregateStats stats;
  if (values.empty()) return stats;
  stats.min = values.front();
  stats.max = values.front();
  double sum = 0.0;
  for (double v : values) {
    stats.min = std::min(stats.min, v);
    stats.max = std::max(stats.max, v);
    sum += v;
  }
  stats.mean = sum / static_cast<double>(values.size());
  if (values.size() > 1) {
    double ss = 0.0;
    for (double v : values) ss += (v - stats.mean) * (v - stats.mean);
    stats.std = std::sqrt(ss / static_cast<double>(values.size() - 1));
  }
  return stats;
}

namespace detail {

void parallel_for(std::size_t count, int threads, const std::function<void(std::size_t)>& fn) {
  if (threads <= 1 || count <= 1) {
    for (std::size_t i = 0; i < count; ++i) fn(i);
    return;
  }
  const auto workers =
      std::min<std::size_t>(static_cast<std::size_t>(threads), count);
  std::atomic<std::size_t> next{0};
  std::mutex failure_mutex;
  std::exception_ptr failure;
  std::vector<std::thread> pool;
  pool.reserve(workers);
  for (std::size_t w = 0; w < workers; ++w) {
    pool.emplace_back([&] {
      while (true) {
        const std::size_t i = next.fetch_add(1);
        if (i >= count) return;
        try {
          fn(i);
        } catch (...) {
          std::lock_guard<std::mutex> lock(failure_mutex);
          if (!failure) failure = std::current_exception();
          return;
        }
      }
    });
  }
  for (auto& t : pool) t.join();
  if (failure) std::rethrow_exception(failure);
}

}  // namespace detail

namespace {

using GridPoint = std::vector<std::pair<std::string, double>>;

std::vector<GridPoint> expand_grid(const ExperimentConfig& config) {
  std::vector<GridPoint> points;
  if (config.algorithm == Algorithm::Tfcm || config.algorithm == Algorithm::Tfsc) {
    for (double l1 : config.lambda1_grid) {
      for (double l2 : config.lambda2_grid) {
        points.push_back({{"lambda1", l1}, {"lambda2", l2}});
      }
    }
  } else if (config.algorithm == Algorithm::Tfkpc) {
    for (double l : config.lambda_grid) points.push_back({{"lambda", l}});
  } else {
    points.push_back({});
  }
  return points;
}

AlgoConfig apply_point(AlgoConfig cfg, const GridPoint& point) {
  for (const auto& [name, value] : point) {
    if (name == "lambda1") cfg.lambda1 = value;
    if (name == "lambda2") cfg.lambda2 = value;
    if (name == "lambda") cfg.lambda = value;
  }
  return cfg;
}

struct RunRecord {
  int iterations = 0;
  bool converged = false;
  int reseeds = 0;
  double objective = 0.0;
  double xb = 0.0;
  std::optional<double> ri;
  std::optional<double> nmi;
  double runtime_s = 0.0;
  std::uint64_t seed = 0;
};

void append_stats_row(std::string& csv, const GridPoint& point, const std::string& metric,
                      const AggregateStats& stats) {
  for (const auto& [name, value] : point) {
    (void)name;
    csv += format_double(value);
    csv += ',';
  }
  csv += metric;
  csv += ',';
  csv += format_double(stats.min);
  csv += ',';
  csv += format_double(stats.max);
  csv += ',';
  csv += format_double(stats.mean);
  csv += ',';
  csv += format_double(stats.std);
  csv += '\n';
}

}  // namespace

SweepResult run_sweep_in_memory(const ExperimentConfig& config, std::string* jsonl_log) {
  const DataMatrix data = load_dataset(config.dataset);
  std::optional<SourceKnowledge> knowledge;
  if (config.knowledge) knowledge = resolve_knowledge(*config.knowledge);

  const auto grid = expand_grid(config);
  const auto reps = static_cast<std::size_t>(config.repetitions);
  const std::size_t task_count = grid.size() * reps;
  std::vector<RunRecord> records(task_count);

  detail::parallel_for(task_count, config.parallelism, [&](std::size_t task) {
    const std::size_t g = task / reps;
    const std::size_t r = task % reps;
    AlgoConfig cfg = apply_point(config.base, grid[g]);
    cfg.rng_seed = config.base.rng_seed + static_cast<std::uint64_t>(r);
    const auto eval = fit_and_evaluate(config.algorithm, data,
                                       knowledge ? &*knowledge : nullptr, cfg);
    RunRecord rec;
    rec.iterations = eval.result.iterations;
    rec.converged = eval.result.converged;
    rec.reseeds = eval.result.reseed_count;
    rec.objective = eval.result.objective_trace.back();
    rec.xb = eval.xb_value;
    rec.ri = eval.ri;
    rec.nmi = eval.nmi;
    rec.runtime_s = eval.runtime_s;
    rec.seed = cfg.rng_seed;
    records[task] = rec;
  });

  const bool has_labels = data.labels.has_value();
  std::string xb_metric;
  switch (config.algorithm) {
    case Algorithm::Fcm:
    case Algorithm::Tfcm: xb_metric = "xb_m"; break;
    case Algorithm::Fkpc:
    case Algorithm::Tfkpc: xb_metric = "xb_fkpc"; break;
    default: xb_metric = "xb_fsc"; break;
  }

  SweepResult sweep;
  std::string& csv = sweep.aggregate_csv;
  for (const auto& [name, value] : grid.front()) {
    (void)value;
    csv += name;
    csv += ',';
  }
  csv += "metric,min,max,mean,std\n";

  for (std::size_t g = 0; g < grid.size(); ++g) {
    std::vector<double> ri_values, nmi_values, xb_values, iter_values, conv_values,
        runtime_values;
    for (std::size_t r = 0; r < reps; ++r) {
      const auto& rec = records[g * reps + r];
      if (rec.ri) ri_values.push_back(*rec.ri);
      if (rec.nmi) nmi_values.push_back(*rec.nmi);
      xb_values.push_back(rec.xb);
      iter_values.push_back(static_cast<double>(rec.iterations));
      conv_values.push_back(rec.converged ? 1.0 : 0.0);
      runtime_values.push_back(rec.runtime_s);
    }
    AggregateRow row;
    row.params = grid[g];
    row.xb_metric = xb_metric;
    row.xb = aggregate(xb_values);
    row.iterations = aggregate(iter_values);
    row.converged = aggregate(conv_values);
    row.mean_runtime_s = aggregate(runtime_values).mean;
    if (has_labels) {
      row.ri = aggregate(ri_values);
      row.nmi = aggregate(nmi_values);
      append_stats_row(csv, grid[g], "ri", *row.ri);
      append_stats_row(csv, grid[g], "nmi", *row.nmi);
    }
    append_stats_row(csv, grid[g], xb_metric, row.xb);
    append_stats_row(csv, grid[g], "iterations", row.iterations);
    append_stats_row(csv, grid[g], "convergence_rate", row.converged);
    sweep.rows.push_back(std::move(row));
  }

  if (jsonl_log) {
    std::string& log = *jsonl_log;
    for (std::size_t g = 0; g < grid.size(); ++g) {
      for (std::size_t r = 0; r < reps; ++r) {
        const auto& rec = records[g * reps + r];
        json line;
        line["algorithm"] = to_string(config.algorithm);
        json params = json::object();
        for (const auto& [name, value] : grid[g]) params[name] = value;
        line["params"] = std::move(params);
        line["rep"] = r;
        line["seed"] = rec.seed;
        line["iterations"] = rec.iterations;
        line["converged"] = rec.converged;
        line["reseeds"] = rec.reseeds;
        line["objective"] = rec.objective;
        line[xb_metric] = rec.xb;
        if (rec.ri) line["ri"] = *rec.ri;
        if (rec.nmi) line["nmi"] = *rec.nmi;
        line["runtime_s"] = rec.runtime_s;
        log += line.dump();
        log += '\n';
      }
    }
  }
  return sweep;
}

// ---------------------------------------------------------------------------
// CLI operations
// ---------------------------------------------------------------------------

void run_gen(const std::string& dataset, Domain domain, std::uint64_t seed,
             const std::string& out_path) {
  DatasetSpec spec;
  spec.generator = dataset;
  spec.domain = domain;
  spec.seed = seed;
  write_dataset_csv(out_path, load_dataset(spec));
}

void run_induce(const std::string& data_path, KnowledgeKind kind, const AlgoConfig& cfg,
                int restarts, bool zscore, const std::string& out_path) {
  const DataMatrix source = read_dataset_csv(data_path, zscore);
  save_knowledge(out_path, induce_knowledge(source, kind, cfg, restarts));
}

std::string fit_result_json(Algorithm algorithm, const DataMatrix& data,
                            const FitEvaluation& evaluation) {
  json doc;
  doc["algorithm"] = to_string(algorithm);
  doc["n"] = data.sample_count();
  doc["d"] = data.feature_count();
  doc["iterations"] = evaluation.result.iterations;
  doc["converged"] = evaluation.result.converged;
  doc["reseeds"] = evaluation.result.reseed_count;
  doc["objective_trace"] = evaluation.result.objective_trace;

  SourceKnowledge prototypes;
  std::visit([&](const auto& p) { prototypes = p; }, evaluation.result.prototypes);
  doc["prototypes"] = json::parse(knowledge_to_json_text(prototypes));

  json metrics;
  metrics[evaluation.xb_metric] = evaluation.xb_value;
  if (evaluation.ri) metrics["rand_index"] = *evaluation.ri;
  if (evaluation.nmi) metrics["nmi"] = *evaluation.nmi;
  doc["metrics"] = std::move(metrics);
  doc["runtime_s"] = evaluation.runtime_s;
  return doc.dump(2);
}

void run_fit(const std::string& data_path, Algorithm algorithm,
             const std::optional<std::string>& knowledge_path, const AlgoConfig& cfg,
             bool zscore, const std::string& out_json_path, const std::string& labels_path) {
  const DataMatrix data = read_dataset_csv(data_path, zscore);
  std::optional<SourceKnowledge> knowledge;
  if (knowledge_path) knowledge = load_knowledge(*knowledge_path);
  const auto evaluation =
      fit_and_evaluate(algorithm, data, knowledge ? &*knowledge : nullptr, cfg);

  std::ofstream out(out_json_path);
  if (!out) throw IoError("cannot open for writing: " + out_json_path);
  out << fit_result_json(algorithm, data, evaluation) << '\n';
  if (!out) throw IoError("write failed: " + out_json_path);
  write_labels_csv(labels_path, harden(evaluation.result.partition));
}

void run_sweep(const std::string& config_path) {
  const ExperimentConfig config = load_experiment_config(config_path);
  std::string log;
  const SweepResult sweep = run_sweep_in_memory(config, &log);

  std::ofstream out(config.output_path);
  if (!out) throw IoError("cannot open for writing: " + config.output_path);
  out << sweep.aggregate_csv;
  if (!out) throw IoError("write failed: " + config.output_path);

  std::ofstream log_out(config.log_path);
  if (!log_out) throw IoError("cannot open for writing: " + config.log_path);
  log_out << log;
  if (!log_out) throw IoError("write failed: " + config.log_path);
}

std::string run_eval(const std::string& pred_labels_path, const std::string& truth_labels_path) {
  const auto pred = read_labels_csv(pred_labels_path);
  const auto truth = read_labels_csv(truth_labels_path);
  if (pred.size() != truth.size()) {
    throw DimensionError("label files have different lengths: " +
                         std::to_string(pred.size()) + " vs " + std::to_string(truth.size()));
  }
  json doc;
  doc["rand_index"] = rand_index(pred, truth);
  doc["nmi"] = nmi(pred, truth);
  doc["n"] = pred.size();
  return doc.dump(2);
}

}  // namespace tpfc
