#include "tpfc/transfer.hpp"

#include <cmath>
#include <utility>
#include <vector>

#include "tpfc/errors.hpp"
#include "tpfc/linalg.hpp"
#include "tpfc/partition.hpp"

namespace tpfc {

namespace {

void check_center_shapes(const DataMatrix& x, const CenterSet& v, const CenterSet& source) {
  if (v.feature_count() != x.feature_count() || source.feature_count() != x.feature_count()) {
    throw DimensionError("center feature count does not match data");
  }
  if (v.cluster_count() != source.cluster_count()) {
    throw DimensionError("center and knowledge cluster counts differ");
  }
}

void check_partition_shapes(const DataMatrix& x, const FuzzyPartition& u,
                            Eigen::Index cluster_count) {
  if (u.sample_count() != x.sample_count()) {
    throw DimensionError("partition sample count does not match data");
  }
  if (u.cluster_count() != cluster_count) {
    throw DimensionError("partition cluster count does not match prototypes");
  }
}

// sum_ij u_ij^m d_ij; the composite distances already carry the balance terms.
double weighted_distance_sum(const FuzzyPartition& u, const Matrix& distances, double m) {
  return (u.memberships.array().pow(m) * distances.array()).sum();
}

}  // namespace

namespace detail {

FuzzyPartition membership_from_distances(const Matrix& distances, double m) {
  const Eigen::Index c = distances.rows();
  const Eigen::Index n = distances.cols();
  Matrix u(c, n);
  const double exponent = 1.0 / (m - 1.0);
  std::vector<Eigen::Index> zeros;
  for (Eigen::Index j = 0; j < n; ++j) {
    zeros.clear();
    for (Eigen::Index i = 0; i < c; ++i) {
      if (distances(i, j) <= kZeroDistance) zeros.push_back(i);
    }
    if (!zeros.empty()) {
      // Crisp assignment split uniformly over the zero-distance clusters.
      u.col(j).setZero();
      const double share = 1.0 / static_cast<double>(zeros.size());
      for (Eigen::Index i : zeros) u(i, j) = share;
      continue;
    }
    // Factor out the smallest distance to keep the powers in range.
    double dmin = distances(0, j);
    for (Eigen::Index i = 1; i < c; ++i) dmin = std::min(dmin, distances(i, j));
    double total = 0.0;
    for (Eigen::Index i = 0; i < c; ++i) {
      const double w = std::pow(dmin / distances(i, j), exponent);
      u(i, j) = w;
      total += w;
    }
    u.col(j) /= total;
  }
  return FuzzyPartition{std::move(u)};
}

Matrix tfcm_distances(const DataMatrix& x, const CenterSet& v, const CenterSet& source,
                      double lambda1, double lambda2) {
  const Eigen::Index c = v.cluster_count();
  Matrix d(c, x.sample_count());
  for (Eigen::Index i = 0; i < c; ++i) {
    const Vector data_term =
        (x.samples.rowwise() - v.centers.row(i)).rowwise().squaredNorm();
    const Vector source_term =
        (x.samples.rowwise() - source.centers.row(i)).rowwise().squaredNorm();
    const double match_term = (source.centers.row(i) - v.centers.row(i)).squaredNorm();
    d.row(i) =
        (data_term + lambda1 * source_term).transpose().array() + lambda2 * match_term;
  }
  return d;
}

Matrix tfkpc_distances(const DataMatrix& x, const PlaneSet& planes, const PlaneSet& source,
                       double lambda) {
  const Eigen::Index k = planes.cluster_count();
  Matrix d(k, x.sample_count());
  for (Eigen::Index i = 0; i < k; ++i) {
    const Vector res =
        (x.samples * planes.directions.row(i).transpose()).array() + planes.biases(i);
    const Vector source_res =
        (x.samples * source.directions.row(i).transpose()).array() + source.biases(i);
    d.row(i) =
        (res.array().square() + lambda * source_res.array().square()).transpose();
  }
  return d;
}

Matrix tfsc_distances(const DataMatrix& x, const CenterSet& v, const SubspaceWeightSet& w,
                      const SubspacePrototypes& source, double tau, double lambda1,
                      double lambda2) {
  const Eigen::Index c = v.cluster_count();
  const Matrix wt = w.weights.array().pow(tau);
  const Matrix wst = source.weights.weights.array().pow(tau);
  Matrix d(c, x.sample_count());
  for (Eigen::Index i = 0; i < c; ++i) {
    const Matrix diff2 = (x.samples.rowwise() - v.centers.row(i)).array().square();
    const Matrix sdiff2 =
        (x.samples.rowwise() - source.centers.centers.row(i)).array().square();
    const Vector data_term = diff2 * wt.row(i).transpose();
    const Vector source_term = sdiff2 * wst.row(i).transpose();
    const double match_term =
        (wst.row(i).array() *
         (source.centers.centers.row(i) - v.centers.row(i)).array().square())
            .sum();
    d.row(i) =
        (data_term + lambda1 * source_term).transpose().array() + lambda2 * match_term;
  }
  return d;
}

}  // namespace detail

// ---------------------------------------------------------------------------
// TFCM
// ---------------------------------------------------------------------------

double tfcm_objective(const DataMatrix& x, const FuzzyPartition& u, const CenterSet& v,
                      const CenterSet& source, double m, double lambda1, double lambda2) {
  check_center_shapes(x, v, source);
  check_partition_shapes(x, u, v.cluster_count());
  const Matrix d = detail::tfcm_distances(x, v, source, lambda1, lambda2);
  return weighted_distance_sum(u, d, m);
}

CenterSet tfcm_center_update(const DataMatrix& x, const FuzzyPartition& u,
                             const CenterSet& source, double m, double lambda2,
                             ReseedContext* reseed) {
  check_partition_shapes(x, u, source.cluster_count());
  if (source.feature_count() != x.feature_count()) {
    throw DimensionError("knowledge feature count does not match data");
  }
  const Matrix um = u.memberships.array().pow(m);
  const Vector mass = um.rowwise().sum();
  const Matrix sx = um * x.samples;
  Matrix centers(source.cluster_count(), x.feature_count());
  for (Eigen::Index i = 0; i < centers.rows(); ++i) {
    if (mass(i) <= kEmptyClusterMass) {
      if (!reseed) throw DegenerateDataError("empty cluster in center update");
      centers.row(i) = x.samples.row(static_cast<Eigen::Index>(
          reseed->rng.index(static_cast<std::size_t>(x.sample_count()))));
      ++reseed->count;
      continue;
    }
    centers.row(i) = (sx.row(i) + (lambda2 * mass(i)) * source.centers.row(i)) /
                     (mass(i) + lambda2 * mass(i));
  }
  return CenterSet{std::move(centers)};
}

FuzzyPartition tfcm_membership_update(const DataMatrix& x, const CenterSet& v,
                                      const CenterSet& source, double m, double lambda1,
                                      double lambda2) {
  check_center_shapes(x, v, source);
  return detail::membership_from_distances(
      detail::tfcm_distances(x, v, source, lambda1, lambda2), m);
}

RunResult tfcm_fit(const DataMatrix& x, const CenterSet& source, const AlgoConfig& cfg) {
  x.validate();
  cfg.validate(x.sample_count());
  source.validate();
  if (source.cluster_count() != cfg.cluster_count) {
    throw DimensionError("knowledge cluster count does not match configuration");
  }
  if (source.feature_count() != x.feature_count()) {
    throw DimensionError("knowledge feature count does not match data");
  }

  Rng rng(cfg.rng_seed);
  int reseeds = 0;
  ReseedContext ctx{rng, reseeds};
  FuzzyPartition u = init_partition(rng, cfg.cluster_count, x.sample_count());
  CenterSet v{Matrix::Zero(cfg.cluster_count, x.feature_count())};

  std::vector<double> trace;
  bool converged = false;
  int t = 0;
  while (t < cfg.max_iterations) {
    v = tfcm_center_update(x, u, source, cfg.fuzzifier_m, cfg.lambda2, &ctx);
    const Matrix d =
        detail::tfcm_distances(x, v, source, cfg.lambda1, cfg.lambda2);
    FuzzyPartition u_next = detail::membership_from_distances(d, cfg.fuzzifier_m);
    ++t;
    trace.push_back(weighted_distance_sum(u_next, d, cfg.fuzzifier_m));
    const double delta = partition_delta(u_next, u);
    u = std::move(u_next);
    if (delta < cfg.epsilon) {
      converged = true;
      break;
    }
  }
  return RunResult{std::move(u), std::move(v), std::move(trace), t, converged, reseeds};
}

// ---------------------------------------------------------------------------
// TFKPC
// ---------------------------------------------------------------------------

double tfkpc_objective(const DataMatrix& x, const FuzzyPartition& u, const PlaneSet& planes,
                       const PlaneSet& source, double m, double lambda) {
  planes.validate();
  source.validate();
  if (planes.feature_count() != x.feature_count() ||
      source.feature_count() != x.feature_count()) {
    throw DimensionError("plane feature count does not match data");
  }
  if (planes.cluster_count() != source.cluster_count()) {
    throw DimensionError("plane and knowledge cluster counts differ");
  }
  check_partition_shapes(x, u, planes.cluster_count());
  const Matrix d = detail::tfkpc_distances(x, planes, source, lambda);
  return weighted_distance_sum(u, d, m);
}

Matrix tfkpc_direction_update(const DataMatrix& x, const FuzzyPartition& u, double m) {
  check_partition_shapes(x, u, u.cluster_count());
  Matrix directions(u.cluster_count(), x.feature_count());
  for (Eigen::Index i = 0; i < directions.rows(); ++i) {
    const auto scatter = weighted_scatter(x, u.memberships.row(i).transpose(), m);
    directions.row(i) = min_nonneg_eigvec(scatter).direction.transpose();
  }
  return directions;
}

Vector tfkpc_bias_update(const DataMatrix& x, const FuzzyPartition& u,
                         const Matrix& directions, double m, ReseedContext* reseed) {
  if (directions.cols() != x.feature_count()) {
    throw DimensionError("direction feature count does not match data");
  }
  check_partition_shapes(x, u, directions.rows());
  const Matrix um = u.memberships.array().pow(m);
  const Vector mass = um.rowwise().sum();
  const Matrix sx = um * x.samples;
  Vector biases(directions.rows());
  for (Eigen::Index i = 0; i < directions.rows(); ++i) {
    if (mass(i) <= kEmptyClusterMass) {
      if (!reseed) throw DegenerateDataError("empty cluster in bias update");
      const auto r = static_cast<Eigen::Index>(
          reseed->rng.index(static_cast<std::size_t>(x.sample_count())));
      biases(i) = -directions.row(i).dot(x.samples.row(r));
      ++reseed->count;
      continue;
    }
    biases(i) = -directions.row(i).dot(sx.row(i)) / mass(i);
  }
  return biases;
}

FuzzyPartition tfkpc_membership_update(const DataMatrix& x, const PlaneSet& planes,
                                       const PlaneSet& source, double m, double lambda) {
  planes.validate();
  source.validate();
  return detail::membership_from_distances(
      detail::tfkpc_distances(x, planes, source, lambda), m);
}

RunResult tfkpc_fit(const DataMatrix& x, const PlaneSet& source, const AlgoConfig& cfg) {
  x.validate();
  cfg.validate(x.sample_count());
  source.validate();
  if (source.cluster_count() != cfg.cluster_count) {
    throw DimensionError("knowledge cluster count does not match configuration");
  }
  if (source.feature_count() != x.feature_count()) {
    throw DimensionError("knowledge feature count does not match data");
  }

  Rng rng(cfg.rng_seed);
  int reseeds = 0;
  FuzzyPartition u = init_partition(rng, cfg.cluster_count, x.sample_count());
  PlaneSet planes{Matrix::Zero(cfg.cluster_count, x.feature_count()),
                  Vector::Zero(cfg.cluster_count)};
  planes.directions.col(0).setOnes();  // placeholder until the first sweep

  std::vector<double> trace;
  bool converged = false;
  int t = 0;
  while (t < cfg.max_iterations) {
    const Matrix um = u.memberships.array().pow(cfg.fuzzifier_m);
    const Vector mass = um.rowwise().sum();
    const Matrix sx = um * x.samples;
    for (Eigen::Index i = 0; i < planes.directions.rows(); ++i) {
      if (mass(i) <= kEmptyClusterMass) {
        // Keep the direction; move the plane through a random sample.
        const auto r = static_cast<Eigen::Index>(
            rng.index(static_cast<std::size_t>(x.sample_count())));
        planes.biases(i) = -planes.directions.row(i).dot(x.samples.row(r));
        ++reseeds;
        continue;
      }
      const auto scatter =
          weighted_scatter(x, u.memberships.row(i).transpose(), cfg.fuzzifier_m);
      planes.directions.row(i) = min_nonneg_eigvec(scatter).direction.transpose();
      planes.biases(i) = -planes.directions.row(i).dot(sx.row(i)) / mass(i);
    }
    const Matrix d = detail::tfkpc_distances(x, planes, source, cfg.lambda);
    FuzzyPartition u_next = detail::membership_from_distances(d, cfg.fuzzifier_m);
    ++t;
    trace.push_back(weighted_distance_sum(u_next, d, cfg.fuzzifier_m));
    const double delta = partition_delta(u_next, u);
    u = std::move(u_next);
    if (delta < cfg.epsilon) {
      converged = true;
      break;
    }
  }
  return RunResult{std::move(u), std::move(planes), std::move(trace), t, converged, reseeds};
}

// ---------------------------------------------------------------------------
// TFSC
// ---------------------------------------------------------------------------

double effective_sigma(const DataMatrix& x, const AlgoConfig& cfg) {
  if (cfg.sigma) return *cfg.sigma;
  const Vector means = x.samples.colwise().mean();
  const double mean_variance =
      (x.samples.rowwise() - means.transpose()).array().square().mean();
  return 0.1 * mean_variance;
}

double tfsc_objective(const DataMatrix& x, const FuzzyPartition& u, const CenterSet& v,
                      const SubspaceWeightSet& w, const SubspacePrototypes& source, double m,
                      double tau, double sigma, double lambda1, double lambda2) {
  source.validate();
  w.validate();
  if (v.feature_count() != x.feature_count() || w.feature_count() != x.feature_count() ||
      source.centers.feature_count() != x.feature_count()) {
    throw DimensionError("subspace prototype feature count does not match data");
  }
  if (v.cluster_count() != w.cluster_count() ||
      v.cluster_count() != source.centers.cluster_count()) {
    throw DimensionError("subspace prototype cluster counts differ");
  }
  check_partition_shapes(x, u, v.cluster_count());
  const Matrix d = detail::tfsc_distances(x, v, w, source, tau, lambda1, lambda2);
  return weighted_distance_sum(u, d, m) + sigma * w.weights.array().pow(tau).sum();
}

CenterSet tfsc_center_update(const DataMatrix& x, const FuzzyPartition& u,
                             const SubspaceWeightSet& w, const SubspacePrototypes& source,
                             double m, double tau, double lambda2, const CenterSet& current,
                             ReseedContext* reseed) {
  check_partition_shapes(x, u, w.cluster_count());
  const Matrix wt = w.weights.array().pow(tau);
  const Matrix wst = source.weights.weights.array().pow(tau);
  const Matrix um = u.memberships.array().pow(m);
  const Vector mass = um.rowwise().sum();
  const Matrix sx = um * x.samples;
  Matrix centers(w.cluster_count(), x.feature_count());
  for (Eigen::Index i = 0; i < centers.rows(); ++i) {
    if (mass(i) <= kEmptyClusterMass) {
      if (!reseed) throw DegenerateDataError("empty cluster in center update");
      centers.row(i) = x.samples.row(static_cast<Eigen::Index>(
          reseed->rng.index(static_cast<std::size_t>(x.sample_count()))));
      ++reseed->count;
      continue;
    }
    for (Eigen::Index k = 0; k < centers.cols(); ++k) {
      const double guided = lambda2 * wst(i, k);
      const double num = wt(i, k) * sx(i, k) + guided * source.centers.centers(i, k) * mass(i);
      const double den = wt(i, k) * mass(i) + guided * mass(i);
      // Zero combined weight leaves the coordinate undetermined.
      centers(i, k) = den > 0.0 ? num / den : current.centers(i, k);
    }
  }
  return CenterSet{std::move(centers)};
}

SubspaceWeightSet tfsc_weight_update(const DataMatrix& x, const FuzzyPartition& u,
                                     const CenterSet& v, double m, double tau, double sigma) {
  check_partition_shapes(x, u, v.cluster_count());
  if (v.feature_count() != x.feature_count()) {
    throw DimensionError("center feature count does not match data");
  }
  const Matrix um = u.memberships.array().pow(m);
  const double exponent = 1.0 / (tau - 1.0);
  Matrix weights(v.cluster_count(), v.feature_count());
  std::vector<Eigen::Index> zeros;
  for (Eigen::Index i = 0; i < weights.rows(); ++i) {
    const Matrix diff2 = (x.samples.rowwise() - v.centers.row(i)).array().square();
    const Vector dispersion =
        (diff2.transpose() * um.row(i).transpose()).array() + sigma;
    zeros.clear();
    for (Eigen::Index k = 0; k < dispersion.size(); ++k) {
      if (dispersion(k) <= 0.0) zeros.push_back(k);
    }
    if (!zeros.empty()) {
      // Zero-dispersion features (possible only when sigma = 0) take all the
      // weight, split uniformly among ties.
      weights.row(i).setZero();
      const double share = 1.0 / static_cast<double>(zeros.size());
      for (Eigen::Index k : zeros) weights(i, k) = share;
      continue;
    }
    const double dmin = dispersion.minCoeff();
    double total = 0.0;
    for (Eigen::Index k = 0; k < dispersion.size(); ++k) {
      const double value = std::pow(dmin / dispersion(k), exponent);
      weights(i, k) = value;
      total += value;
    }
    weights.row(i) /= total;
  }
  return SubspaceWeightSet{std::move(weights)};
}

FuzzyPartition tfsc_membership_update(const DataMatrix& x, const CenterSet& v,
                                      const SubspaceWeightSet& w,
                                      const SubspacePrototypes& source, double m, double tau,
                                      double lambda1, double lambda2) {
  return detail::membership_from_distances(
      detail::tfsc_distances(x, v, w, source, tau, lambda1, lambda2), m);
}

RunResult tfsc_fit(const DataMatrix& x, const SubspacePrototypes& source, const AlgoConfig& cfg) {
  x.validate();
  cfg.validate(x.sample_count());
  source.validate();
  if (source.centers.cluster_count() != cfg.cluster_count) {
    throw DimensionError("knowledge cluster count does not match configuration");
  }
  if (source.centers.feature_count() != x.feature_count()) {
    throw DimensionError("knowledge feature count does not match data");
  }

  const double sigma = effective_sigma(x, cfg);
  Rng rng(cfg.rng_seed);
  int reseeds = 0;
  ReseedContext ctx{rng, reseeds};
  FuzzyPartition u = init_partition(rng, cfg.cluster_count, x.sample_count());
  const Eigen::Index d_features = x.feature_count();
  CenterSet v{Matrix::Zero(cfg.cluster_count, d_features)};
  SubspaceWeightSet w{Matrix::Constant(cfg.cluster_count, d_features,
                                       1.0 / static_cast<double>(d_features))};

  std::vector<double> trace;
  bool converged = false;
  int t = 0;
  while (t < cfg.max_iterations) {
    v = tfsc_center_update(x, u, w, source, cfg.fuzzifier_m, cfg.weight_fuzzifier_tau,
                           cfg.lambda2, v, &ctx);
    w = tfsc_weight_update(x, u, v, cfg.fuzzifier_m, cfg.weight_fuzzifier_tau, sigma);
    const Matrix d = detail::tfsc_distances(x, v, w, source, cfg.weight_fuzzifier_tau,
                                            cfg.lambda1, cfg.lambda2);
    FuzzyPartition u_next = detail::membership_from_distances(d, cfg.fuzzifier_m);
    ++t;
    trace.push_back(weighted_distance_sum(u_next, d, cfg.fuzzifier_m) +
                    sigma * w.weights.array().pow(cfg.weight_fuzzifier_tau).sum());
    const double delta = partition_delta(u_next, u);
    u = std::move(u_next);
    if (delta < cfg.epsilon) {
      converged = true;
      break;
    }
  }
  return RunResult{std::move(u), SubspacePrototypes{std::move(v), std::move(w)},
                   std::move(trace), t, converged, reseeds};
}

}  // namespace tpfc
