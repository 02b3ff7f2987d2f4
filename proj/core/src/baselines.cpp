#include "tpfc/baselines.hpp"

#include <algorithm>
#include <vector>

#include "tpfc/errors.hpp"
#include "tpfc/transfer.hpp"

namespace tpfc {

namespace {

AlgoConfig zero_balance(AlgoConfig cfg) {
  cfg.lambda1 = 0.0;
  cfg.lambda2 = 0.0;
  cfg.lambda = 0.0;
  return cfg;
}

}  // namespace

CenterSet null_center_knowledge(int cluster_count, Eigen::Index feature_count) {
  return CenterSet{Matrix::Zero(cluster_count, feature_count)};
}

PlaneSet null_plane_knowledge(int cluster_count, Eigen::Index feature_count) {
  Matrix directions = Matrix::Zero(cluster_count, feature_count);
  directions.col(0).setOnes();
  return PlaneSet{std::move(directions), Vector::Zero(cluster_count)};
}

SubspacePrototypes null_subspace_knowledge(int cluster_count, Eigen::Index feature_count) {
  return SubspacePrototypes{
      null_center_knowledge(cluster_count, feature_count),
      SubspaceWeightSet{Matrix::Constant(cluster_count, feature_count,
                                         1.0 / static_cast<double>(feature_count))}};
}

RunResult fcm_fit(const DataMatrix& x, const AlgoConfig& cfg) {
  return tfcm_fit(x, null_center_knowledge(cfg.cluster_count, x.feature_count()),
                  zero_balance(cfg));
}

RunResult fkpc_fit(const DataMatrix& x, const AlgoConfig& cfg) {
  return tfkpc_fit(x, null_plane_knowledge(cfg.cluster_count, x.feature_count()),
                   zero_balance(cfg));
}

RunResult fsc_fit(const DataMatrix& x, const AlgoConfig& cfg) {
  return tfsc_fit(x, null_subspace_knowledge(cfg.cluster_count, x.feature_count()),
                  zero_balance(cfg));
}

Eigen::Index distinct_sample_count(const DataMatrix& x) {
  std::vector<Eigen::Index> order(static_cast<std::size_t>(x.sample_count()));
  for (std::size_t i = 0; i < order.size(); ++i) order[i] = static_cast<Eigen::Index>(i);
  auto row_less = [&](Eigen::Index a, Eigen::Index b) {
    for (Eigen::Index k = 0; k < x.feature_count(); ++k) {
      if (x.samples(a, k) < x.samples(b, k)) return true;
      if (x.samples(a, k) > x.samples(b, k)) return false;
    }
    return false;
  };
  std::sort(order.begin(), order.end(), row_less);
  Eigen::Index distinct = x.sample_count() > 0 ? 1 : 0;
  for (std::size_t i = 1; i < order.size(); ++i) {
    if (row_less(order[i - 1], order[i])) ++distinct;
  }
  return distinct;
}

SourceKnowledge induce_knowledge(const DataMatrix& source, KnowledgeKind kind,
                                 const AlgoConfig& cfg, int restarts) {
  source.validate();
  cfg.validate(source.sample_count());
  if (restarts < 1) {
    throw InvalidConfigError("knowledge induction needs at least one restart");
  }
  if (distinct_sample_count(source) < cfg.cluster_count) {
    throw DegenerateDataError("source data has fewer distinct points than clusters");
  }

  RunResult best;
  double best_objective = 0.0;
  bool have_best = false;
  for (int r = 0; r < restarts; ++r) {
    AlgoConfig restart_cfg = cfg;
    restart_cfg.rng_seed = cfg.rng_seed + static_cast<std::uint64_t>(r);
    RunResult result;
    switch (kind) {
      case KnowledgeKind::Centers: result = fcm_fit(source, restart_cfg); break;
      case KnowledgeKind::Planes: result = fkpc_fit(source, restart_cfg); break;
      case KnowledgeKind::Subspace: result = fsc_fit(source, restart_cfg); break;
    }
    const double objective = result.objective_trace.back();
    if (!have_best || objective < best_objective) {
      best = std::move(result);
      best_objective = objective;
      have_best = true;
    }
  }

  switch (kind) {
    case KnowledgeKind::Centers:
      return std::get<CenterSet>(best.prototypes);
    case KnowledgeKind::Planes:
      return std::get<PlaneSet>(best.prototypes);
    case KnowledgeKind::Subspace:
    default:
      return std::get<SubspacePrototypes>(best.prototypes);
  }
}

}  // namespace tpfc
