#pragma once

#include "tpfc/types.hpp"

namespace tpfc {

// Non-transfer baselines. Each one is the corresponding transfer fit with all
// balance parameters forced to zero and a neutral knowledge bundle, so the
// baseline and transfer paths cannot drift apart.

/// Classical fuzzy c-means. lambda1/lambda2 in cfg are ignored.
RunResult fcm_fit(const DataMatrix& x, const AlgoConfig& cfg);

/// Fuzzy k-plane clustering. lambda in cfg is ignored.
RunResult fkpc_fit(const DataMatrix& x, const AlgoConfig& cfg);

/// Fuzzy subspace clustering with the fuzzy-partition relaxation.
RunResult fsc_fit(const DataMatrix& x, const AlgoConfig& cfg);

/// Cluster the source domain with the matching baseline and extract its
/// prototypes. Runs `restarts` seeded fits (seeds cfg.rng_seed + r) and keeps
/// the one with the lowest final objective; ties go to the earlier restart.
SourceKnowledge induce_knowledge(const DataMatrix& source, KnowledgeKind kind,
                                 const AlgoConfig& cfg, int restarts = 10);

/// Knowledge bundles that contribute nothing at zero balance; used by the
/// baseline fits and handy in tests.
CenterSet null_center_knowledge(int cluster_count, Eigen::Index feature_count);
PlaneSet null_plane_knowledge(int cluster_count, Eigen::Index feature_count);
SubspacePrototypes null_subspace_knowledge(int cluster_count, Eigen::Index feature_count);

/// Number of distinct rows in the dataset (exact comparison).
Eigen::Index distinct_sample_count(const DataMatrix& x);

}  // namespace tpfc
