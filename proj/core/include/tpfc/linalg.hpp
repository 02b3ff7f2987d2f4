#pragma once

#include <optional>

#include "tpfc/types.hpp"

namespace tpfc {

// Dense symmetric matrix; construction checks the symmetry tolerance.
struct SymmetricMatrix {
  Matrix values;

  static SymmetricMatrix from(Matrix m);

  Eigen::Index size() const { return values.rows(); }
};

/// Membership-weighted scatter X (D_i - S_i) X^T of one cluster, where
/// D_i = diag(u_ij^m) and S_i is the rank-one weighted-mean correction.
/// Equals the u^m-weighted centered scatter sum u^m (x - xbar)(x - xbar)^T,
/// so it is symmetric positive-semidefinite.
SymmetricMatrix weighted_scatter(const DataMatrix& x, const Vector& row_memberships, double m);

struct EigenDecomposition {
  Vector eigenvalues;   // ascending
  Matrix eigenvectors;  // orthonormal columns, matching order
};

/// Full symmetric eigendecomposition, eigenvalues ascending.
EigenDecomposition sym_eigen(const SymmetricMatrix& a);

struct PrincipalDirection {
  Vector direction;  // unit norm, first nonzero component positive
  double eigenvalue;  // clamped at 0 from below
};

/// Eigenvector of the smallest eigenvalue of a PSD matrix. The smallest
/// eigenvalue may be exactly 0 (flat clusters); values below -tol raise a
/// NumericError. tol defaults to 1e-9 * trace(a).
PrincipalDirection min_nonneg_eigvec(const SymmetricMatrix& a,
                                     std::optional<double> tol = std::nullopt);

}  // namespace tpfc
