#include "tpfc/types.hpp"

#include <cmath>
#include <sstream>

#include "tpfc/errors.hpp"

namespace tpfc {

namespace detail {

bool all_finite(const Matrix& m) { return m.allFinite(); }
bool all_finite(const Vector& v) { return v.allFinite(); }

}  // namespace detail

void DataMatrix::validate() const {
  if (samples.rows() < 1 || samples.cols() < 1) {
    throw DimensionError("data matrix must have at least one sample and one feature");
  }
  if (!detail::all_finite(samples)) {
    throw NumericError("data matrix contains non-finite entries");
  }
  if (labels && static_cast<Eigen::Index>(labels->size()) != samples.rows()) {
    throw DimensionError("label count does not match sample count");
  }
  if (labels) {
    for (int v : *labels) {
      if (v < 0) throw InvalidConfigError("class labels must be nonnegative integers");
    }
  }
}

void FuzzyPartition::validate() const {
  if (memberships.rows() < 1 || memberships.cols() < 1) {
    throw DimensionError("partition matrix is empty");
  }
  if (!detail::all_finite(memberships)) {
    throw NumericError("partition matrix contains non-finite entries");
  }
  if (memberships.minCoeff() < 0.0 || memberships.maxCoeff() > 1.0 + 1e-12) {
    throw NumericError("memberships must lie in [0, 1]");
  }
  for (Eigen::Index j = 0; j < memberships.cols(); ++j) {
    const double s = memberships.col(j).sum();
    if (std::abs(s - 1.0) > 1e-12) {
      std::ostringstream msg;
      msg << "partition column " << j << " sums to " << s << ", expected 1";
      throw NumericError(msg.str());
    }
  }
}

void CenterSet::validate() const {
  if (!detail::all_finite(centers)) {
    throw NumericError("center set contains non-finite entries");
  }
}

void PlaneSet::validate() const {
  if (directions.rows() != biases.size()) {
    throw DimensionError("plane set has mismatched direction and bias counts");
  }
  if (!detail::all_finite(directions) || !detail::all_finite(biases)) {
    throw NumericError("plane set contains non-finite entries");
  }
  for (Eigen::Index i = 0; i < directions.rows(); ++i) {
    if (std::abs(directions.row(i).norm() - 1.0) > 1e-10) {
      throw NumericError("plane direction rows must have unit norm");
    }
  }
}

void SubspaceWeightSet::validate() const {
  if (!detail::all_finite(weights)) {
    throw NumericError("weight set contains non-finite entries");
  }
  if (weights.minCoeff() < 0.0 || weights.maxCoeff() > 1.0 + 1e-12) {
    throw NumericError("feature weights must lie in [0, 1]");
  }
  for (Eigen::Index i = 0; i < weights.rows(); ++i) {
    if (std::abs(weights.row(i).sum() - 1.0) > 1e-12) {
      throw NumericError("feature-weight rows must sum to 1");
    }
  }
}

void SubspacePrototypes::validate() const {
  centers.validate();
  weights.validate();
  if (centers.cluster_count() != weights.cluster_count() ||
      centers.feature_count() != weights.feature_count()) {
    throw DimensionError("subspace prototype centers and weights have mismatched shapes");
  }
}

std::string to_string(KnowledgeKind kind) {
  switch (kind) {
    case KnowledgeKind::Centers: return "centers";
    case KnowledgeKind::Planes: return "planes";
    case KnowledgeKind::Subspace: return "subspace";
  }
  return "unknown";
}

KnowledgeKind kind_of(const SourceKnowledge& knowledge) {
  if (std::holds_alternative<CenterSet>(knowledge)) return KnowledgeKind::Centers;
  if (std::holds_alternative<PlaneSet>(knowledge)) return KnowledgeKind::Planes;
  return KnowledgeKind::Subspace;
}

void AlgoConfig::validate(Eigen::Index sample_count) const {
  if (cluster_count < 2) {
    throw InvalidConfigError("cluster count must be at least 2");
  }
  if (static_cast<Eigen::Index>(cluster_count) > sample_count) {
    throw InvalidConfigError("cluster count exceeds sample count");
  }
  if (!(fuzzifier_m > 1.0)) {
    throw InvalidConfigError("membership fuzzifier m must be > 1");
  }
  if (!(weight_fuzzifier_tau > 1.0)) {
    throw InvalidConfigError("weight fuzzifier tau must be > 1");
  }
  if (sigma && !(*sigma >= 0.0)) {
    throw InvalidConfigError("sigma must be >= 0");
  }
  if (!(lambda1 >= 0.0) || !(lambda2 >= 0.0) || !(lambda >= 0.0)) {
    throw InvalidConfigError("balance parameters must be >= 0");
  }
  if (!(epsilon > 0.0)) {
    throw InvalidConfigError("epsilon must be > 0");
  }
  if (max_iterations < 1) {
    throw InvalidConfigError("max iterations must be >= 1");
  }
}

}  // namespace tpfc
