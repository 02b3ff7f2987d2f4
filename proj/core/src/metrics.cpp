#include "tpfc/metrics.hpp"

#include <algorithm>
#include <cmath>
#include <limits>
#include <map>

#include "tpfc/errors.hpp"

namespace tpfc {

namespace {

std::map<int, int> compact_ids(const std::vector<int>& labels) {
  std::map<int, int> ids;
  for (int v : labels) ids.emplace(v, 0);
  int next = 0;
  for (auto& [value, id] : ids) id = next++;
  return ids;
}

// True when every row and every column has exactly one nonzero block, i.e.
// the two labelings are identical up to renaming.
bool is_relabeling(const ContingencyTable& table) {
  for (Eigen::Index i = 0; i < table.counts.rows(); ++i) {
    int nonzero = 0;
    for (Eigen::Index j = 0; j < table.counts.cols(); ++j) {
      if (table.counts(i, j) > 0) ++nonzero;
    }
    if (nonzero != 1) return false;
  }
  for (Eigen::Index j = 0; j < table.counts.cols(); ++j) {
    int nonzero = 0;
    for (Eigen::Index i = 0; i < table.counts.rows(); ++i) {
      if (table.counts(i, j) > 0) ++nonzero;
    }
    if (nonzero != 1) return false;
  }
  return true;
}

long long pairs(long long n) { return n * (n - 1) / 2; }

}  // namespace

ContingencyTable ContingencyTable::from_labels(const std::vector<int>& pred,
                                               const std::vector<int>& truth) {
  if (pred.size() != truth.size()) {
    throw DimensionError("label vectors have different lengths");
  }
  if (pred.empty()) {
    throw DimensionError("label vectors are empty");
  }
  const auto pred_ids = compact_ids(pred);
  const auto truth_ids = compact_ids(truth);
  ContingencyTable table;
  table.counts = Eigen::MatrixX<long long>::Zero(
      static_cast<Eigen::Index>(pred_ids.size()), static_cast<Eigen::Index>(truth_ids.size()));
  for (std::size_t n = 0; n < pred.size(); ++n) {
    ++table.counts(pred_ids.at(pred[n]), truth_ids.at(truth[n]));
  }
  table.row_sums.assign(pred_ids.size(), 0);
  table.col_sums.assign(truth_ids.size(), 0);
  for (Eigen::Index i = 0; i < table.counts.rows(); ++i) {
    for (Eigen::Index j = 0; j < table.counts.cols(); ++j) {
      table.row_sums[static_cast<std::size_t>(i)] += table.counts(i, j);
      table.col_sums[static_cast<std::size_t>(j)] += table.counts(i, j);
    }
  }
  table.total = static_cast<long long>(pred.size());
  return table;
}

double rand_index(const std::vector<int>& pred, const std::vector<int>& truth) {
  if (pred.size() < 2) {
    throw DimensionError("rand index needs at least two samples");
  }
  const auto table = ContingencyTable::from_labels(pred, truth);
  long long same_both = 0;
  for (Eigen::Index i = 0; i < table.counts.rows(); ++i) {
    for (Eigen::Index j = 0; j < table.counts.cols(); ++j) {
      same_both += pairs(table.counts(i, j));
    }
  }
  long long same_pred = 0;
  for (long long s : table.row_sums) same_pred += pairs(s);
  long long same_truth = 0;
  for (long long s : table.col_sums) same_truth += pairs(s);
  const long long total_pairs = pairs(table.total);
  const long long diff_both = total_pairs - same_pred - same_truth + same_both;
  return static_cast<double>(same_both + diff_both) / static_cast<double>(total_pairs);
}

double nmi(const std::vector<int>& pred, const std::vector<int>& truth) {
  const auto table = ContingencyTable::from_labels(pred, truth);
  if (is_relabeling(table)) return 1.0;

  const auto n = static_cast<double>(table.total);
  double pred_entropy = 0.0;
  for (long long s : table.row_sums) {
    if (s > 0) pred_entropy += static_cast<double>(s) * std::log(static_cast<double>(s) / n);
  }
  double truth_entropy = 0.0;
  for (long long s : table.col_sums) {
    if (s > 0) truth_entropy += static_cast<double>(s) * std::log(static_cast<double>(s) / n);
  }
  // A single-cluster side carries no information (and is not a relabeling
  // of the other side at this point).
  if (pred_entropy == 0.0 || truth_entropy == 0.0) return 0.0;

  double mutual = 0.0;
  for (Eigen::Index i = 0; i < table.counts.rows(); ++i) {
    for (Eigen::Index j = 0; j < table.counts.cols(); ++j) {
      const long long c = table.counts(i, j);
      if (c == 0) continue;
      const auto num = static_cast<double>(c) * n;
      const auto den = static_cast<double>(table.row_sums[static_cast<std::size_t>(i)]) *
                       static_cast<double>(table.col_sums[static_cast<std::size_t>(j)]);
      mutual += static_cast<double>(c) * std::log(num / den);
    }
  }
  const double value = mutual / std::sqrt(pred_entropy * truth_entropy);
  return std::clamp(value, 0.0, 1.0);
}

double xb(const DataMatrix& x, const FuzzyPartition& u, const CenterSet& v, double m,
          XbExponent mode) {
  if (v.cluster_count() < 2) {
    throw InvalidConfigError("Xie-Beni index needs at least two clusters");
  }
  if (u.sample_count() != x.sample_count() || u.cluster_count() != v.cluster_count() ||
      v.feature_count() != x.feature_count()) {
    throw DimensionError("Xie-Beni operands have mismatched shapes");
  }
  const double exponent = mode == XbExponent::Classic ? 2.0 : m;
  double compactness = 0.0;
  for (Eigen::Index i = 0; i < v.cluster_count(); ++i) {
    const Vector dist2 = (x.samples.rowwise() - v.centers.row(i)).rowwise().squaredNorm();
    compactness +=
        (u.memberships.row(i).transpose().array().pow(exponent) * dist2.array()).sum();
  }
  compactness /= static_cast<double>(x.sample_count());

  double separation = std::numeric_limits<double>::infinity();
  for (Eigen::Index i = 0; i < v.cluster_count(); ++i) {
    for (Eigen::Index j = i + 1; j < v.cluster_count(); ++j) {
      separation = std::min(separation, (v.centers.row(i) - v.centers.row(j)).squaredNorm());
    }
  }
  if (separation < 1e-12) {
    throw DegenerateDataError("coincident centers give zero Xie-Beni separation");
  }
  return compactness / separation;
}

double xb_fkpc(const DataMatrix& x, const FuzzyPartition& u, const PlaneSet& planes, double m) {
  if (planes.cluster_count() < 2) {
    throw InvalidConfigError("plane Xie-Beni index needs at least two planes");
  }
  if (u.sample_count() != x.sample_count() || u.cluster_count() != planes.cluster_count() ||
      planes.feature_count() != x.feature_count()) {
    throw DimensionError("plane Xie-Beni operands have mismatched shapes");
  }
  double compactness = 0.0;
  for (Eigen::Index i = 0; i < planes.cluster_count(); ++i) {
    const Vector res =
        (x.samples * planes.directions.row(i).transpose()).array() + planes.biases(i);
    compactness +=
        (u.memberships.row(i).transpose().array().pow(m) * res.array().square()).sum();
  }
  compactness /= static_cast<double>(x.sample_count());

  double separation = std::numeric_limits<double>::infinity();
  for (Eigen::Index i = 0; i < planes.cluster_count(); ++i) {
    for (Eigen::Index j = i + 1; j < planes.cluster_count(); ++j) {
      const double gap = (planes.directions.row(i) - planes.directions.row(j)).norm() +
                         std::abs(planes.biases(i) - planes.biases(j));
      separation = std::min(separation, gap);
    }
  }
  if (separation < 1e-12) {
    throw DegenerateDataError("identical planes give zero Xie-Beni separation");
  }
  return compactness / separation;
}

double xb_fsc(const DataMatrix& x, const FuzzyPartition& u, const CenterSet& v,
              const SubspaceWeightSet& w, double m, double tau) {
  if (v.cluster_count() < 2) {
    throw InvalidConfigError("subspace Xie-Beni index needs at least two clusters");
  }
  if (u.sample_count() != x.sample_count() || u.cluster_count() != v.cluster_count() ||
      v.feature_count() != x.feature_count() || w.cluster_count() != v.cluster_count() ||
      w.feature_count() != v.feature_count()) {
    throw DimensionError("subspace Xie-Beni operands have mismatched shapes");
  }
  const Matrix wt = w.weights.array().pow(tau);
  double compactness = 0.0;
  for (Eigen::Index i = 0; i < v.cluster_count(); ++i) {
    const Matrix diff2 = (x.samples.rowwise() - v.centers.row(i)).array().square();
    const Vector dist = diff2 * wt.row(i).transpose();
    compactness += (u.memberships.row(i).transpose().array().pow(m) * dist.array()).sum();
  }
  compactness /= static_cast<double>(x.sample_count());

  // The weighted separation uses row i's weights, so scan ordered pairs.
  double separation = std::numeric_limits<double>::infinity();
  for (Eigen::Index i = 0; i < v.cluster_count(); ++i) {
    for (Eigen::Index j = 0; j < v.cluster_count(); ++j) {
      if (i == j) continue;
      const double gap =
          (wt.row(i).array() * (v.centers.row(i) - v.centers.row(j)).array().square()).sum();
      separation = std::min(separation, gap);
    }
  }
  if (separation < 1e-12) {
    throw DegenerateDataError("zero weighted separation in subspace Xie-Beni index");
  }
  return compactness / separation;
}

}  // namespace tpfc
