#pragma once

#include <vector>

#include "tpfc/types.hpp"

namespace tpfc {

// Count matrix between predicted clusters (rows) and true classes (columns).
// Label values are compacted, so ids need not be contiguous.
struct ContingencyTable {
  Eigen::MatrixX<long long> counts;
  std::vector<long long> row_sums;
  std::vector<long long> col_sums;
  long long total = 0;

  static ContingencyTable from_labels(const std::vector<int>& pred,
                                      const std::vector<int>& truth);
};

/// Rand index: fraction of sample pairs on which the two labelings agree.
double rand_index(const std::vector<int>& pred, const std::vector<int>& truth);

/// Normalized mutual information with natural logs and 0 log 0 = 0.
/// Partitions identical up to relabeling give exactly 1; otherwise a
/// zero-entropy marginal gives 0.
double nmi(const std::vector<int>& pred, const std::vector<int>& truth);

enum class XbExponent {
  Classic,    // membership exponent 2
  Fuzzifier,  // membership exponent m
};

/// Xie-Beni compactness/separation ratio for center prototypes. Separation is
/// the squared minimum center distance.
double xb(const DataMatrix& x, const FuzzyPartition& u, const CenterSet& v, double m,
          XbExponent mode);

/// Plane-prototype variant: residual compactness over
/// min_{i != j} (||v_i - v_j|| + |b_i - b_j|).
double xb_fkpc(const DataMatrix& x, const FuzzyPartition& u, const PlaneSet& planes, double m);

/// Subspace variant: weighted compactness over the minimum weighted squared
/// center distance.
double xb_fsc(const DataMatrix& x, const FuzzyPartition& u, const CenterSet& v,
              const SubspaceWeightSet& w, double m, double tau);

}  // namespace tpfc
