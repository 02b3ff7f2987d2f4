#include "tpfc/partition.hpp"

#include "tpfc/errors.hpp"

namespace tpfc {

FuzzyPartition init_partition(Rng& rng, int cluster_count, Eigen::Index sample_count) {
  if (cluster_count < 2) {
    throw InvalidConfigError("cluster count must be at least 2");
  }
  if (static_cast<Eigen::Index>(cluster_count) > sample_count) {
    throw InvalidConfigError("cluster count exceeds sample count");
  }
  Matrix u(cluster_count, sample_count);
  for (Eigen::Index j = 0; j < sample_count; ++j) {
    double sum = 0.0;
    for (int i = 0; i < cluster_count; ++i) {
      u(i, j) = rng.uniform01();
      sum += u(i, j);
    }
    double partial = 0.0;
    for (int i = 0; i < cluster_count - 1; ++i) {
      u(i, j) /= sum;
      partial += u(i, j);
    }
    // Force the column sum to be exactly 1.
    u(cluster_count - 1, j) = 1.0 - partial;
  }
  return FuzzyPartition{std::move(u)};
}

FuzzyPartition init_partition(std::uint64_t rng_seed, int cluster_count,
                              Eigen::Index sample_count) {
  Rng rng(rng_seed);
  return init_partition(rng, cluster_count, sample_count);
}

double partition_delta(const FuzzyPartition& u_new, const FuzzyPartition& u_old) {
  if (u_new.memberships.rows() != u_old.memberships.rows() ||
      u_new.memberships.cols() != u_old.memberships.cols()) {
    throw DimensionError("partition shapes do not match");
  }
  return (u_new.memberships - u_old.memberships).norm();
}

std::vector<int> harden(const FuzzyPartition& u) {
  const auto& m = u.memberships;
  std::vector<int> labels(static_cast<std::size_t>(m.cols()));
  for (Eigen::Index j = 0; j < m.cols(); ++j) {
    int best = 0;
    for (Eigen::Index i = 1; i < m.rows(); ++i) {
      if (m(i, j) > m(best, j)) best = static_cast<int>(i);
    }
    labels[static_cast<std::size_t>(j)] = best;
  }
  return labels;
}

}  // namespace tpfc
