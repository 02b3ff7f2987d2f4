#pragma once

#include <cstdint>
#include <vector>

#include "tpfc/types.hpp"

namespace tpfc {

enum class Domain { Source, Target };

std::string to_string(Domain domain);

// Diagonal-Gaussian cluster description.
struct GaussianClusterSpec {
  Vector mean;
  Vector variance;  // diagonal of the covariance
  int count = 0;

  void validate() const;
};

// Noisy 2-D plane cluster: x1 uniform on a range, x2 solved from
// x.v + b = eta with plane-residual noise eta ~ N(0, sigma^2).
struct PlaneClusterSpec {
  Vector direction;  // unit 2-vector
  double bias = 0.0;
  double noise_sigma = 0.0;
  double x1_lo = 0.0;
  double x1_hi = 0.0;
  int count = 0;

  void validate() const;
};

// High-dimensional cluster: background features uniform on [0, 100], the
// 1-based inclusive interval of important features drawn from a narrow
// cluster-specific band.
struct SubspaceClusterSpec {
  int interval_lo = 1;
  int interval_hi = 1;
  int count = 0;
  int total_dim = 0;
  double background_lo = 0.0;
  double background_hi = 100.0;
  double signal_lo = 0.0;
  double signal_hi = 10.0;

  void validate() const;
  bool is_important(int feature_index_1based) const {
    return feature_index_1based >= interval_lo && feature_index_1based <= interval_hi;
  }
};

// Parameter tables for the three benchmark families.
std::vector<GaussianClusterSpec> d1_specs(Domain domain);
std::vector<PlaneClusterSpec> d2_specs(Domain domain);
std::vector<SubspaceClusterSpec> d3_specs(Domain domain);

DataMatrix gen_gaussian_clusters(const std::vector<GaussianClusterSpec>& specs,
                                 std::uint64_t seed);
DataMatrix gen_plane_clusters(const std::vector<PlaneClusterSpec>& specs, std::uint64_t seed,
                              bool noiseless = false);
DataMatrix gen_subspace_clusters(const std::vector<SubspaceClusterSpec>& specs,
                                 std::uint64_t seed);

DataMatrix gen_d1(Domain domain, std::uint64_t seed);
DataMatrix gen_d2(Domain domain, std::uint64_t seed, bool noiseless = false);
DataMatrix gen_d3(Domain domain, std::uint64_t seed);

/// Split `total` samples over `clusters` clusters, remainder round-robin.
std::vector<int> cluster_counts(int total, int clusters);

}  // namespace tpfc
