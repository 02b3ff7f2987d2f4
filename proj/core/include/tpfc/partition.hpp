#pragma once

#include <cstdint>
#include <vector>

#include "tpfc/rng.hpp"
#include "tpfc/types.hpp"

namespace tpfc {

/// Random column-stochastic partition: per column, draw C uniforms in (0, 1)
/// and normalize so the column sums to exactly 1. Deterministic per seed.
FuzzyPartition init_partition(std::uint64_t rng_seed, int cluster_count, Eigen::Index sample_count);

/// Same draw procedure, continuing an existing stream (used by the fit loops
/// so that init and reseed draws share one seeded source).
FuzzyPartition init_partition(Rng& rng, int cluster_count, Eigen::Index sample_count);

/// Frobenius norm of the elementwise membership difference.
double partition_delta(const FuzzyPartition& u_new, const FuzzyPartition& u_old);

/// Crisp labels by per-column argmax; ties go to the smallest cluster index.
std::vector<int> harden(const FuzzyPartition& u);

}  // namespace tpfc
