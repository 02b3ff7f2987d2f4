#pragma once

#include <Eigen/Dense>
#include <cstdint>
#include <optional>
#include <string>
#include <variant>
#include <vector>

namespace tpfc {

using Matrix = Eigen::MatrixXd;
using Vector = Eigen::VectorXd;

// N x d dataset, rows are samples, with optional ground-truth class labels.
struct DataMatrix {
  Matrix samples;
  std::optional<std::vector<int>> labels;

  Eigen::Index sample_count() const { return samples.rows(); }
  Eigen::Index feature_count() const { return samples.cols(); }

  // Throws on empty data, non-finite entries, or label/sample count mismatch.
  void validate() const;
};

// C x N membership matrix; every column sums to 1, entries in [0, 1].
struct FuzzyPartition {
  Matrix memberships;

  Eigen::Index cluster_count() const { return memberships.rows(); }
  Eigen::Index sample_count() const { return memberships.cols(); }

  void validate() const;
};

// C x d cluster centers, one row per cluster.
struct CenterSet {
  Matrix centers;

  Eigen::Index cluster_count() const { return centers.rows(); }
  Eigen::Index feature_count() const { return centers.cols(); }

  void validate() const;
};

// K hyperplanes x^T v_i + b_i = 0; direction rows have unit Euclidean norm.
struct PlaneSet {
  Matrix directions;
  Vector biases;

  Eigen::Index cluster_count() const { return directions.rows(); }
  Eigen::Index feature_count() const { return directions.cols(); }

  void validate() const;
};

// C x d per-cluster feature weights; rows sum to 1, entries in [0, 1].
struct SubspaceWeightSet {
  Matrix weights;

  Eigen::Index cluster_count() const { return weights.rows(); }
  Eigen::Index feature_count() const { return weights.cols(); }

  void validate() const;
};

// Subspace cluster prototypes: a center and a feature-weight row per cluster.
struct SubspacePrototypes {
  CenterSet centers;
  SubspaceWeightSet weights;

  void validate() const;
};

enum class KnowledgeKind { Centers, Planes, Subspace };

std::string to_string(KnowledgeKind kind);

// Prototype bundle induced on the source domain; the tag selects which
// transfer algorithm it can guide.
using SourceKnowledge = std::variant<CenterSet, PlaneSet, SubspacePrototypes>;

KnowledgeKind kind_of(const SourceKnowledge& knowledge);

struct AlgoConfig {
  int cluster_count = 2;
  double fuzzifier_m = 2.0;        // membership fuzzifier, > 1
  double weight_fuzzifier_tau = 2.0;  // feature-weight fuzzifier (FSC/TFSC), > 1
  // FSC/TFSC dispersion regularizer; unset means 0.1 * mean per-feature
  // variance of the fitted data.
  std::optional<double> sigma;
  double lambda1 = 0.0;  // TFCM/TFSC source-assignment balance
  double lambda2 = 0.0;  // TFCM/TFSC prototype-matching balance
  double lambda = 0.0;   // TFKPC balance
  double epsilon = 1e-5;
  int max_iterations = 100;
  std::uint64_t rng_seed = 0;

  // Throws InvalidConfigError unless 2 <= C <= N, fuzzifiers > 1,
  // balances >= 0, sigma >= 0 when set, epsilon > 0, max_iterations >= 1.
  void validate(Eigen::Index sample_count) const;
};

// Outcome of one alternating-minimization fit.
struct RunResult {
  FuzzyPartition partition;
  std::variant<CenterSet, PlaneSet, SubspacePrototypes> prototypes;
  std::vector<double> objective_trace;  // one entry per sweep
  int iterations = 0;
  bool converged = false;   // membership-change criterion met
  int reseed_count = 0;     // empty-cluster prototype reseeds
};

namespace detail {
// Shared validation helpers.
bool all_finite(const Matrix& m);
bool all_finite(const Vector& v);
}  // namespace detail

}  // namespace tpfc
