#pragma once

#include <algorithm>
#include <cmath>
#include <numeric>
#include <stdexcept>
#include <string>
#include <vector>

#include <Eigen/Core>

namespace dee {

class NotSymmetric : public std::invalid_argument {
 public:
  NotSymmetric() : std::invalid_argument("matrix is not symmetric") {}
};

class NoConvergence : public std::runtime_error {
 public:
  explicit NoConvergence(int sweeps)
      : std::runtime_error("Jacobi iteration did not converge in " + std::to_string(sweeps) +
                           " sweeps"),
        sweeps_(sweeps) {}
  int sweeps() const { return sweeps_; }

 private:
  int sweeps_;
};

struct JacobiOptions {
  int max_sweeps = 100;
  /// Converged once off(A)_F < relative_tolerance * ||A||_F.
  double relative_tolerance = 1e-12;
  /// Off-diagonal entries with magnitude below this are not rotated.
  double skip_threshold = 1e-300;
  /// Admissible |a_ij - a_ji|.
  double symmetry_tolerance = 1e-12;
};

/// Eigenpairs of a real symmetric matrix, eigenvalues non-increasing and
/// eigenvectors in the matching columns.
template <typename Scalar>
struct SymmetricEigen {
  Eigen::Matrix<Scalar, Eigen::Dynamic, 1> values;
  Eigen::Matrix<Scalar, Eigen::Dynamic, Eigen::Dynamic> vectors;
  int sweeps = 0;
};

/// Cyclic Jacobi eigensolver.
///
/// Each sweep visits the strict upper triangle row by row and annihilates
/// a(p,q) with a plane rotation chosen by the smaller-angle rule. Throws
/// NotSymmetric for asymmetric input and NoConvergence when the off-diagonal
/// norm is still above tolerance after options.max_sweeps sweeps.
template <typename Derived>
SymmetricEigen<typename Derived::Scalar> jacobi_eigen(const Eigen::MatrixBase<Derived>& m,
                                                      const JacobiOptions& options = {}) {
  using Scalar = typename Derived::Scalar;
  static_assert(!Eigen::NumTraits<Scalar>::IsInteger, "cast integer matrices to a floating type");
  using Matrix = Eigen::Matrix<Scalar, Eigen::Dynamic, Eigen::Dynamic>;
  using std::abs;
  using std::sqrt;

  if (m.rows() != m.cols()) throw NotSymmetric();
  const Eigen::Index n = m.rows();
  Matrix a = m;
  if (((a - a.transpose()).cwiseAbs().array() > Scalar(options.symmetry_tolerance)).any())
    throw NotSymmetric();
  a = (a + a.transpose()) / Scalar(2);
  Matrix v = Matrix::Identity(n, n);

  const Scalar norm = a.norm();
  auto off_norm = [&] {
    Scalar s(0);
    for (Eigen::Index p = 0; p < n; ++p)
      for (Eigen::Index q = p + 1; q < n; ++q) s += a(p, q) * a(p, q);
    return sqrt(Scalar(2) * s);
  };

  int sweep = 0;
  while (off_norm() > Scalar(options.relative_tolerance) * norm) {
    if (sweep == options.max_sweeps) throw NoConvergence(sweep);
    ++sweep;
    for (Eigen::Index p = 0; p < n; ++p) {
      for (Eigen::Index q = p + 1; q < n; ++q) {
        const Scalar apq = a(p, q);
        if (abs(apq) < Scalar(options.skip_threshold)) continue;
        const Scalar theta = (a(q, q) - a(p, p)) / (Scalar(2) * apq);
        const Scalar t = (theta >= 0 ? Scalar(1) : Scalar(-1)) /
                         (abs(theta) + sqrt(theta * theta + Scalar(1)));
        const Scalar c = Scalar(1) / sqrt(t * t + Scalar(1));
        const Scalar s = t * c;

        // A <- J^T A J with J the rotation in the (p, q) plane.
        for (Eigen::Index k = 0; k < n; ++k) {
          const Scalar akp = a(k, p), akq = a(k, q);
          a(k, p) = c * akp - s * akq;
          a(k, q) = s * akp + c * akq;
        }
        for (Eigen::Index k = 0; k < n; ++k) {
          const Scalar apk = a(p, k), aqk = a(q, k);
          a(p, k) = c * apk - s * aqk;
          a(q, k) = s * apk + c * aqk;
        }
        a(p, q) = a(q, p) = Scalar(0);
        for (Eigen::Index k = 0; k < n; ++k) {
          const Scalar vkp = v(k, p), vkq = v(k, q);
          v(k, p) = c * vkp - s * vkq;
          v(k, q) = s * vkp + c * vkq;
        }
      }
    }
  }

  std::vector<Eigen::Index> order(static_cast<std::size_t>(n));
  std::iota(order.begin(), order.end(), Eigen::Index(0));
  std::stable_sort(order.begin(), order.end(),
                   [&](Eigen::Index i, Eigen::Index j) { return a(i, i) > a(j, j); });

  SymmetricEigen<Scalar> out;
  out.values.resize(n);
  out.vectors.resize(n, n);
  for (Eigen::Index k = 0; k < n; ++k) {
    out.values(k) = a(order[k], order[k]);
    out.vectors.col(k) = v.col(order[k]);
  }
  out.sweeps = sweep;
  return out;
}

/// Eigenvalues only, non-increasing.
template <typename Derived>
Eigen::Matrix<typename Derived::Scalar, Eigen::Dynamic, 1> eigen_symmetric(
    const Eigen::MatrixBase<Derived>& m, const JacobiOptions& options = {}) {
  return jacobi_eigen(m, options).values;
}

}  // namespace dee
