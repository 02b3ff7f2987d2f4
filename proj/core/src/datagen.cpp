#include "tpfc/datagen.hpp"

#include <cmath>

#include "tpfc/errors.hpp"
#include "tpfc/rng.hpp"

namespace tpfc {

std::string to_string(Domain domain) {
  return domain == Domain::Source ? "source" : "target";
}

void GaussianClusterSpec::validate() const {
  if (mean.size() != variance.size()) {
    throw DimensionError("gaussian cluster mean and variance sizes differ");
  }
  if (variance.minCoeff() <= 0.0) {
    throw InvalidConfigError("gaussian cluster variances must be positive");
  }
  if (count < 1) throw InvalidConfigError("gaussian cluster count must be positive");
}

void PlaneClusterSpec::validate() const {
  if (direction.size() != 2) {
    throw DimensionError("plane cluster direction must be a 2-vector");
  }
  if (std::abs(direction.norm() - 1.0) > 1e-10) {
    throw NumericError("plane cluster direction must have unit norm");
  }
  if (std::abs(direction(1)) <= 1e-9) {
    throw NumericError("plane cluster direction is unsolvable for x2");
  }
  if (!(x1_lo < x1_hi)) throw InvalidConfigError("plane cluster x1 range is empty");
  if (!(noise_sigma > 0.0)) throw InvalidConfigError("plane cluster noise sigma must be positive");
  if (count < 1) throw InvalidConfigError("plane cluster count must be positive");
}

void SubspaceClusterSpec::validate() const {
  if (interval_lo < 1 || interval_hi > total_dim || interval_lo > interval_hi) {
    throw InvalidConfigError("important-feature interval must lie within [1, d]");
  }
  if (count < 1) throw InvalidConfigError("subspace cluster count must be positive");
  if (!(background_lo < background_hi) || !(signal_lo < signal_hi)) {
    throw InvalidConfigError("subspace cluster value ranges are empty");
  }
}

std::vector<int> cluster_counts(int total, int clusters) {
  std::vector<int> counts(static_cast<std::size_t>(clusters), total / clusters);
  for (int r = 0; r < total % clusters; ++r) ++counts[static_cast<std::size_t>(r)];
  return counts;
}

DataMatrix gen_gaussian_clusters(const std::vector<GaussianClusterSpec>& specs,
                                 std::uint64_t seed) {
  int total = 0;
  for (const auto& spec : specs) {
    spec.validate();
    total += spec.count;
  }
  const Eigen::Index d = specs.front().mean.size();
  Rng rng(seed);
  Matrix samples(total, d);
  std::vector<int> labels(static_cast<std::size_t>(total));
  Eigen::Index row = 0;
  for (std::size_t c = 0; c < specs.size(); ++c) {
    const auto& spec = specs[c];
    const Vector stddev = spec.variance.array().sqrt();
    for (int n = 0; n < spec.count; ++n, ++row) {
      for (Eigen::Index k = 0; k < d; ++k) {
        samples(row, k) = spec.mean(k) + stddev(k) * rng.gaussian();
      }
      labels[static_cast<std::size_t>(row)] = static_cast<int>(c);
    }
  }
  return DataMatrix{std::move(samples), std::move(labels)};
}

DataMatrix gen_plane_clusters(const std::vector<PlaneClusterSpec>& specs, std::uint64_t seed,
                              bool noiseless) {
  int total = 0;
  for (const auto& spec : specs) {
    spec.validate();
    total += spec.count;
  }
  Rng rng(seed);
  Matrix samples(total, 2);
  std::vector<int> labels(static_cast<std::size_t>(total));
  Eigen::Index row = 0;
  for (std::size_t c = 0; c < specs.size(); ++c) {
    const auto& spec = specs[c];
    for (int n = 0; n < spec.count; ++n, ++row) {
      const double x1 = rng.uniform(spec.x1_lo, spec.x1_hi);
      // Plane residual x.v + b = eta; noise lands on the x2 coordinate.
      const double eta = noiseless ? 0.0 : spec.noise_sigma * rng.gaussian();
      const double x2 = (eta - spec.bias - spec.direction(0) * x1) / spec.direction(1);
      samples(row, 0) = x1;
      samples(row, 1) = x2;
      labels[static_cast<std::size_t>(row)] = static_cast<int>(c);
    }
  }
  return DataMatrix{std::move(samples), std::move(labels)};
}

DataMatrix gen_subspace_clusters(const std::vector<SubspaceClusterSpec>& specs,
                                 std::uint64_t seed) {
  int total = 0;
  for (const auto& spec : specs) {
    spec.validate();
    total += spec.count;
  }
  const int d = specs.front().total_dim;
  Rng rng(seed);
  Matrix samples(total, d);
  std::vector<int> labels(static_cast<std::size_t>(total));
  Eigen::Index row = 0;
  for (std::size_t c = 0; c < specs.size(); ++c) {
    const auto& spec = specs[c];
    if (spec.total_dim != d) {
      throw DimensionError("subspace cluster specs disagree on feature count");
    }
    for (int n = 0; n < spec.count; ++n, ++row) {
      for (int k = 1; k <= d; ++k) {
        samples(row, k - 1) = spec.is_important(k)
                                  ? rng.uniform(spec.signal_lo, spec.signal_hi)
                                  : rng.uniform(spec.background_lo, spec.background_hi);
      }
      labels[static_cast<std::size_t>(row)] = static_cast<int>(c);
    }
  }
  return DataMatrix{std::move(samples), std::move(labels)};
}

namespace {

Vector vec2(double a, double b) {
  Vector v(2);
  v << a, b;
  return v;
}

}  // namespace

std::vector<GaussianClusterSpec> d1_specs(Domain domain) {
  const auto counts = cluster_counts(domain == Domain::Source ? 600 : 80, 3);
  if (domain == Domain::Source) {
    return {
        GaussianClusterSpec{vec2(-1.0, 8.0), vec2(10.0, 10.0), counts[0]},
        GaussianClusterSpec{vec2(15.0, 8.0), vec2(25.0, 7.0), counts[1]},
        GaussianClusterSpec{vec2(9.0, 27.0), vec2(30.0, 20.0), counts[2]},
    };
  }
  return {
      GaussianClusterSpec{vec2(-1.0, 12.0), vec2(9.5, 9.0), counts[0]},
      GaussianClusterSpec{vec2(15.0, 13.0), vec2(23.0, 7.5), counts[1]},
      GaussianClusterSpec{vec2(9.0, 25.0), vec2(28.0, 21.0), counts[2]},
  };
}

std::vector<PlaneClusterSpec> d2_specs(Domain domain) {
  const auto counts = cluster_counts(domain == Domain::Source ? 600 : 60, 3);
  auto unit = [](double a, double b) {
    Vector v = vec2(a, b);
    return Vector(v / v.norm());
  };
  if (domain == Domain::Source) {
    return {
        PlaneClusterSpec{unit(0.9487, 0.3162), -6.9570, 0.3162, -0.05, 10.0, counts[0]},
        PlaneClusterSpec{unit(-0.9487, 0.3162), 3.4785, 0.3162, 0.05, 10.0, counts[1]},
        PlaneClusterSpec{unit(-0.9487, 0.3162), -5.3759, 0.3162, -10.0, 5.0, counts[2]},
    };
  }
  return {
      PlaneClusterSpec{unit(0.9615, 0.2747), -4.9450, 0.2747, -2.0, 8.0, counts[0]},
      PlaneClusterSpec{unit(-0.9285, 0.3714), 3.3425, 0.3714, 0.05, 12.0, counts[1]},
      PlaneClusterSpec{unit(-0.9285, 0.3714), -7.0564, 0.3714, -10.0, 5.0, counts[2]},
  };
}

std::vector<SubspaceClusterSpec> d3_specs(Domain domain) {
  const auto counts = cluster_counts(domain == Domain::Source ? 600 : 60, 3);
  constexpr int kDim = 200;
  auto spec = [&](int lo, int hi, int count, int cluster) {
    SubspaceClusterSpec s;
    s.interval_lo = lo;
    s.interval_hi = hi;
    s.count = count;
    s.total_dim = kDim;
    // Narrow per-cluster signal band: low dispersion within a cluster,
    // separated bands across clusters.
    s.signal_lo = 30.0 * cluster;
    s.signal_hi = 30.0 * cluster + 10.0;
    return s;
  };
  if (domain == Domain::Source) {
    return {spec(1, 31, counts[0], 0), spec(10, 40, counts[1], 1), spec(20, 55, counts[2], 2)};
  }
  return {spec(1, 32, counts[0], 0), spec(25, 40, counts[1], 1), spec(35, 55, counts[2], 2)};
}

DataMatrix gen_d1(Domain domain, std::uint64_t seed) {
  return gen_gaussian_clusters(d1_specs(domain), seed);
}

DataMatrix gen_d2(Domain domain, std::uint64_t seed, bool noiseless) {
  return gen_plane_clusters(d2_specs(domain), seed, noiseless);
}

DataMatrix gen_d3(Domain domain, std::uint64_t seed) {
  return gen_subspace_clusters(d3_specs(domain), seed);
}

}  // namespace tpfc
