#pragma once

#include "tpfc/rng.hpp"
#include "tpfc/types.hpp"

namespace tpfc {

// Empty-cluster handling for the prototype updates: when a cluster's
// effective mass sum_j u_ij^m drops to ~0, its prototype is reseeded from a
// uniformly drawn data sample instead of dividing by zero. Updates called
// without a context throw DegenerateDataError in that case.
struct ReseedContext {
  Rng& rng;
  int& count;
};

inline constexpr double kEmptyClusterMass = 1e-12;
inline constexpr double kZeroDistance = 1e-12;

// ---------------------------------------------------------------------------
// TFCM: center prototypes guided by source-domain centers.
// ---------------------------------------------------------------------------

/// Full TFCM criterion: target-data compactness plus the source-assignment
/// term (lambda1) and the center-matching term (lambda2).
double tfcm_objective(const DataMatrix& x, const FuzzyPartition& u, const CenterSet& v,
                      const CenterSet& source, double m, double lambda1, double lambda2);

/// Stationary center update: the u^m-weighted data mean pulled toward the
/// source center with weight lambda2.
CenterSet tfcm_center_update(const DataMatrix& x, const FuzzyPartition& u,
                             const CenterSet& source, double m, double lambda2,
                             ReseedContext* reseed = nullptr);

FuzzyPartition tfcm_membership_update(const DataMatrix& x, const CenterSet& v,
                                      const CenterSet& source, double m, double lambda1,
                                      double lambda2);

RunResult tfcm_fit(const DataMatrix& x, const CenterSet& source, const AlgoConfig& cfg);

// ---------------------------------------------------------------------------
// TFKPC: hyperplane prototypes guided by source-domain planes.
// ---------------------------------------------------------------------------

double tfkpc_objective(const DataMatrix& x, const FuzzyPartition& u, const PlaneSet& planes,
                       const PlaneSet& source, double m, double lambda);

/// Per cluster, the unit direction minimizing the weighted plane residual:
/// the smallest-eigenvalue eigenvector of the weighted scatter. The
/// knowledge term is constant in the directions, so no balance enters.
Matrix tfkpc_direction_update(const DataMatrix& x, const FuzzyPartition& u, double m);

/// Stationary bias b_i = -(sum_j u_ij^m v_i.x_j) / (sum_j u_ij^m).
Vector tfkpc_bias_update(const DataMatrix& x, const FuzzyPartition& u,
                         const Matrix& directions, double m, ReseedContext* reseed = nullptr);

FuzzyPartition tfkpc_membership_update(const DataMatrix& x, const PlaneSet& planes,
                                       const PlaneSet& source, double m, double lambda);

RunResult tfkpc_fit(const DataMatrix& x, const PlaneSet& source, const AlgoConfig& cfg);

// ---------------------------------------------------------------------------
// TFSC: center-plus-feature-weight prototypes guided by source subspaces.
// ---------------------------------------------------------------------------

double tfsc_objective(const DataMatrix& x, const FuzzyPartition& u, const CenterSet& v,
                      const SubspaceWeightSet& w, const SubspacePrototypes& source, double m,
                      double tau, double sigma, double lambda1, double lambda2);

/// Stationary per-coordinate center update. Coordinates whose combined
/// weight is zero are undetermined and keep their value from `current`.
CenterSet tfsc_center_update(const DataMatrix& x, const FuzzyPartition& u,
                             const SubspaceWeightSet& w, const SubspacePrototypes& source,
                             double m, double tau, double lambda2, const CenterSet& current,
                             ReseedContext* reseed = nullptr);

/// Feature-weight rows from inverse per-feature dispersions
/// E_ik = sum_j u_ij^m (x_jk - v_ik)^2 + sigma.
SubspaceWeightSet tfsc_weight_update(const DataMatrix& x, const FuzzyPartition& u,
                                     const CenterSet& v, double m, double tau, double sigma);

FuzzyPartition tfsc_membership_update(const DataMatrix& x, const CenterSet& v,
                                      const SubspaceWeightSet& w,
                                      const SubspacePrototypes& source, double m, double tau,
                                      double lambda1, double lambda2);

RunResult tfsc_fit(const DataMatrix& x, const SubspacePrototypes& source, const AlgoConfig& cfg);

/// Effective FSC/TFSC regularizer: the configured value, or
/// 0.1 * mean per-feature variance of the data when unset.
double effective_sigma(const DataMatrix& x, const AlgoConfig& cfg);

namespace detail {

/// Memberships from a C x N composite-distance matrix: column-normalized
/// (1/d)^(1/(m-1)). Columns containing distances <= kZeroDistance get a crisp
/// assignment split uniformly over the zero-distance clusters.
FuzzyPartition membership_from_distances(const Matrix& distances, double m);

/// Composite TFCM distances ||x-v||^2 + l1 ||x-vs||^2 + l2 ||vs-v||^2.
Matrix tfcm_distances(const DataMatrix& x, const CenterSet& v, const CenterSet& source,
                      double lambda1, double lambda2);

/// Composite TFKPC distances (x.v+b)^2 + l (x.vs+bs)^2.
Matrix tfkpc_distances(const DataMatrix& x, const PlaneSet& planes, const PlaneSet& source,
                       double lambda);

/// Composite TFSC distances with weighted coordinates.
Matrix tfsc_distances(const DataMatrix& x, const CenterSet& v, const SubspaceWeightSet& w,
                      const SubspacePrototypes& source, double tau, double lambda1,
                      double lambda2);

}  // namespace detail

}  // namespace tpfc
