#include "tpfc/linalg.hpp"

#include <Eigen/Eigenvalues>
#include <cmath>

#include "tpfc/errors.hpp"

namespace tpfc {

SymmetricMatrix SymmetricMatrix::from(Matrix m) {
  if (m.rows() != m.cols()) {
    throw DimensionError("symmetric matrix must be square");
  }
  if (!detail::all_finite(m)) {
    throw NumericError("symmetric matrix contains non-finite entries");
  }
  for (Eigen::Index p = 0; p < m.rows(); ++p) {
    for (Eigen::Index q = p + 1; q < m.cols(); ++q) {
      const double bound = 1e-12 * std::max(1.0, std::abs(m(p, q)));
      if (std::abs(m(p, q) - m(q, p)) > bound) {
        throw NumericError("matrix is not symmetric within tolerance");
      }
    }
  }
  return SymmetricMatrix{std::move(m)};
}

SymmetricMatrix weighted_scatter(const DataMatrix& x, const Vector& row_memberships, double m) {
  if (row_memberships.size() != x.sample_count()) {
    throw DimensionError("membership row length does not match sample count");
  }
  if (row_memberships.minCoeff() < 0.0) {
    throw NumericError("memberships must be nonnegative");
  }
  const Vector um = row_memberships.array().pow(m);
  const double total = um.sum();
  if (total <= 0.0) {
    throw DegenerateDataError("cluster has an all-zero membership row");
  }
  const Matrix xt = x.samples.transpose();  // d x N
  Matrix scatter = xt * um.asDiagonal() * xt.transpose();
  const Vector weighted_sum = xt * um;
  scatter.noalias() -= weighted_sum * (weighted_sum / total).transpose();
  // Kill round-off asymmetry from the rank-one correction.
  scatter = 0.5 * (scatter + scatter.transpose()).eval();
  return SymmetricMatrix{std::move(scatter)};
}

EigenDecomposition sym_eigen(const SymmetricMatrix& a) {
  if (!detail::all_finite(a.values)) {
    throw NumericError("eigendecomposition input contains non-finite entries");
  }
  Eigen::SelfAdjointEigenSolver<Matrix> solver(a.values);
  if (solver.info() != Eigen::Success) {
    throw NumericError("symmetric eigendecomposition failed to converge");
  }
  return EigenDecomposition{solver.eigenvalues(), solver.eigenvectors()};
}

PrincipalDirection min_nonneg_eigvec(const SymmetricMatrix& a, std::optional<double> tol) {
  const double bound = tol ? *tol : 1e-9 * a.values.trace();
  const EigenDecomposition eig = sym_eigen(a);
  const double smallest = eig.eigenvalues(0);
  if (smallest < -bound) {
    throw NumericError("matrix is not positive-semidefinite within tolerance");
  }
  Vector v = eig.eigenvectors.col(0);
  for (Eigen::Index k = 0; k < v.size(); ++k) {
    if (v(k) != 0.0) {
      if (v(k) < 0.0) v = -v;
      break;
    }
  }
  return PrincipalDirection{std::move(v), std::max(smallest, 0.0)};
}

}  // namespace tpfc
