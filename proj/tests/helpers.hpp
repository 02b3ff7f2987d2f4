#pragma once

// Shared test utilities: random instance builders and the independent
// oracles the suites check against. Everything here stays clear of the
// library's production code paths.

#include <algorithm>
#include <cmath>
#include <cstdint>
#include <numeric>
#include <vector>

#include "tpfc/partition.hpp"
#include "tpfc/rng.hpp"
#include "tpfc/types.hpp"

namespace tpfc::test {

inline DataMatrix random_data(std::uint64_t seed, int n, int d, double lo = -5.0,
                              double hi = 5.0) {
  Rng rng(seed);
  Matrix samples(n, d);
  for (int j = 0; j < n; ++j) {
    for (int k = 0; k < d; ++k) samples(j, k) = rng.uniform(lo, hi);
  }
  return DataMatrix{std::move(samples), std::nullopt};
}

// Well-separated gaussian blobs, labels attached.
inline DataMatrix random_blobs(std::uint64_t seed, int n, int d, int clusters,
                               double spread = 1.0, double gap = 10.0) {
  Rng rng(seed);
  Matrix samples(n, d);
  std::vector<int> labels(static_cast<std::size_t>(n));
  for (int j = 0; j < n; ++j) {
    const int c = j % clusters;
    for (int k = 0; k < d; ++k) {
      const double center = (k % clusters == c % clusters) ? gap * (c + 1) : 0.0;
      samples(j, k) = center + spread * rng.gaussian();
    }
    labels[static_cast<std::size_t>(j)] = c;
  }
  return DataMatrix{std::move(samples), std::move(labels)};
}

inline FuzzyPartition random_partition(std::uint64_t seed, int c, Eigen::Index n) {
  return init_partition(seed, c, n);
}

inline CenterSet random_centers(std::uint64_t seed, int c, int d, double scale = 5.0) {
  Rng rng(seed);
  Matrix centers(c, d);
  for (int i = 0; i < c; ++i) {
    for (int k = 0; k < d; ++k) centers(i, k) = rng.uniform(-scale, scale);
  }
  return CenterSet{std::move(centers)};
}

inline PlaneSet random_planes(std::uint64_t seed, int c, int d) {
  Rng rng(seed);
  Matrix directions(c, d);
  Vector biases(c);
  for (int i = 0; i < c; ++i) {
    for (int k = 0; k < d; ++k) directions(i, k) = rng.gaussian();
    directions.row(i) /= directions.row(i).norm();
    biases(i) = rng.uniform(-3.0, 3.0);
  }
  return PlaneSet{std::move(directions), std::move(biases)};
}

inline SubspaceWeightSet random_weights(std::uint64_t seed, int c, int d) {
  Rng rng(seed);
  Matrix weights(c, d);
  for (int i = 0; i < c; ++i) {
    double sum = 0.0;
    for (int k = 0; k < d; ++k) {
      weights(i, k) = rng.uniform01();
      sum += weights(i, k);
    }
    double partial = 0.0;
    for (int k = 0; k < d - 1; ++k) {
      weights(i, k) /= sum;
      partial += weights(i, k);
    }
    weights(i, d - 1) = 1.0 - partial;
  }
  return SubspaceWeightSet{std::move(weights)};
}

inline SubspacePrototypes random_subspace(std::uint64_t seed, int c, int d) {
  return SubspacePrototypes{random_centers(seed, c, d), random_weights(seed + 1, c, d)};
}

inline std::vector<int> random_labels(std::uint64_t seed, int n, int classes) {
  Rng rng(seed);
  std::vector<int> labels(static_cast<std::size_t>(n));
  for (auto& v : labels) v = static_cast<int>(rng.index(static_cast<std::size_t>(classes)));
  return labels;
}

// O(N^2) pair-enumeration Rand index.
inline double ri_bruteforce(const std::vector<int>& pred, const std::vector<int>& truth) {
  long long agree = 0;
  long long total = 0;
  for (std::size_t a = 0; a < pred.size(); ++a) {
    for (std::size_t b = a + 1; b < pred.size(); ++b) {
      const bool same_pred = pred[a] == pred[b];
      const bool same_truth = truth[a] == truth[b];
      if (same_pred == same_truth) ++agree;
      ++total;
    }
  }
  return static_cast<double>(agree) / static_cast<double>(total);
}

// Direct contingency evaluation of the normalized mutual information.
inline double nmi_direct(const std::vector<int>& pred, const std::vector<int>& truth) {
  const int pc = 1 + *std::max_element(pred.begin(), pred.end());
  const int tc = 1 + *std::max_element(truth.begin(), truth.end());
  std::vector<std::vector<double>> joint(static_cast<std::size_t>(pc),
                                         std::vector<double>(static_cast<std::size_t>(tc), 0.0));
  for (std::size_t n = 0; n < pred.size(); ++n) {
    joint[static_cast<std::size_t>(pred[n])][static_cast<std::size_t>(truth[n])] += 1.0;
  }
  const auto total = static_cast<double>(pred.size());
  std::vector<double> prow(static_cast<std::size_t>(pc), 0.0);
  std::vector<double> pcol(static_cast<std::size_t>(tc), 0.0);
  for (int i = 0; i < pc; ++i) {
    for (int j = 0; j < tc; ++j) {
      prow[static_cast<std::size_t>(i)] += joint[static_cast<std::size_t>(i)][static_cast<std::size_t>(j)];
      pcol[static_cast<std::size_t>(j)] += joint[static_cast<std::size_t>(i)][static_cast<std::size_t>(j)];
    }
  }
  double mi = 0.0;
  for (int i = 0; i < pc; ++i) {
    for (int j = 0; j < tc; ++j) {
      const double nij = joint[static_cast<std::size_t>(i)][static_cast<std::size_t>(j)];
      if (nij > 0.0) {
        mi += nij * std::log(total * nij / (prow[static_cast<std::size_t>(i)] *
                                            pcol[static_cast<std::size_t>(j)]));
      }
    }
  }
  double hr = 0.0;
  for (double s : prow) {
    if (s > 0.0) hr += s * std::log(s / total);
  }
  double hc = 0.0;
  for (double s : pcol) {
    if (s > 0.0) hc += s * std::log(s / total);
  }
  if (hr == 0.0 || hc == 0.0) return 1.0;  // callers only use this on non-degenerate pairs
  return mi / std::sqrt(hr * hc);
}

inline double angle_between(const Vector& a, const Vector& b) {
  const double c = std::min(1.0, std::abs(a.dot(b)) / (a.norm() * b.norm()));
  return std::acos(c);
}

// Weighted plane residual sum_j u_j^m (x_j . v(theta) + b*)^2 with the
// optimal bias substituted.
inline double plane_residual_at(const DataMatrix& x, const Vector& u, double m, double theta) {
  Vector v(2);
  v << std::cos(theta), std::sin(theta);
  double mass = 0.0;
  double mean_proj = 0.0;
  for (Eigen::Index j = 0; j < x.sample_count(); ++j) {
    const double w = std::pow(u(j), m);
    mass += w;
    mean_proj += w * x.samples.row(j).dot(v);
  }
  const double b = -mean_proj / mass;
  double total = 0.0;
  for (Eigen::Index j = 0; j < x.sample_count(); ++j) {
    const double r = x.samples.row(j).dot(v) + b;
    total += std::pow(u(j), m) * r * r;
  }
  return total;
}

// 1-degree sweep over half the circle, then golden-section refinement in the
// winning 2-degree bracket.
inline Vector plane_normal_gridsearch(const DataMatrix& x, const Vector& u, double m) {
  constexpr double kPi = 3.141592653589793238462643383279502884;
  const double step = kPi / 180.0;
  double best_theta = 0.0;
  double best_value = plane_residual_at(x, u, m, 0.0);
  for (int deg = 1; deg < 180; ++deg) {
    const double theta = deg * step;
    const double value = plane_residual_at(x, u, m, theta);
    if (value < best_value) {
      best_value = value;
      best_theta = theta;
    }
  }
  double lo = best_theta - step;
  double hi = best_theta + step;
  const double ratio = (std::sqrt(5.0) - 1.0) / 2.0;
  double c = hi - ratio * (hi - lo);
  double d = lo + ratio * (hi - lo);
  double fc = plane_residual_at(x, u, m, c);
  double fd = plane_residual_at(x, u, m, d);
  while (hi - lo > 1e-9) {
    if (fc < fd) {
      hi = d;
      d = c;
      fd = fc;
      c = hi - ratio * (hi - lo);
      fc = plane_residual_at(x, u, m, c);
    } else {
      lo = c;
      c = d;
      fc = fd;
      d = lo + ratio * (hi - lo);
      fd = plane_residual_at(x, u, m, d);
    }
  }
  const double theta = 0.5 * (lo + hi);
  Vector v(2);
  v << std::cos(theta), std::sin(theta);
  return v;
}

// Best cluster-id permutation (pred id -> truth id) by label agreement.
inline std::vector<int> match_clusters(const std::vector<int>& pred,
                                       const std::vector<int>& truth, int clusters) {
  std::vector<int> perm(static_cast<std::size_t>(clusters));
  std::iota(perm.begin(), perm.end(), 0);
  std::vector<int> best = perm;
  long long best_score = -1;
  do {
    long long score = 0;
    for (std::size_t n = 0; n < pred.size(); ++n) {
      if (perm[static_cast<std::size_t>(pred[n])] == truth[n]) ++score;
    }
    if (score > best_score) {
      best_score = score;
      best = perm;
    }
  } while (std::next_permutation(perm.begin(), perm.end()));
  return best;
}

// Fraction of truly important features recovered by the top-weighted sets,
// with result clusters matched to true clusters by label agreement.
inline double identification_rate(const Matrix& weights, const std::vector<int>& pred,
                                  const std::vector<int>& truth,
                                  const std::vector<std::pair<int, int>>& intervals) {
  const int clusters = static_cast<int>(weights.rows());
  const auto mapping = match_clusters(pred, truth, clusters);
  int hits = 0;
  int total = 0;
  for (int p = 0; p < clusters; ++p) {
    const auto [lo, hi] = intervals[static_cast<std::size_t>(mapping[static_cast<std::size_t>(p)])];
    const int size = hi - lo + 1;
    std::vector<int> order(static_cast<std::size_t>(weights.cols()));
    std::iota(order.begin(), order.end(), 0);
    std::partial_sort(order.begin(), order.begin() + size, order.end(),
                      [&](int a, int b) { return weights(p, a) > weights(p, b); });
    for (int r = 0; r < size; ++r) {
      const int feature = order[static_cast<std::size_t>(r)] + 1;  // 1-based
      if (feature >= lo && feature <= hi) ++hits;
    }
    total += size;
  }
  return static_cast<double>(hits) / static_cast<double>(total);
}

}  // namespace tpfc::test
