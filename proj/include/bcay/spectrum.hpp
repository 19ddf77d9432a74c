#pragma once

#include <Eigen/Core>
#include <cmath>
#include <string>
#include <utility>
#include <vector>

#include "bcay/graph.hpp"

namespace bcay {

/// Eigen decomposition of a real symmetric matrix.
template <typename Scalar>
struct JacobiResult {
  Eigen::Matrix<Scalar, Eigen::Dynamic, 1> values;
  Eigen::Matrix<Scalar, Eigen::Dynamic, Eigen::Dynamic> vectors;  // columns
  int sweeps = 0;
};

/// Cyclic Jacobi rotations until the off-diagonal Frobenius norm is at most
/// `tol`. Only the lower triangle of `a` is read.
template <typename Derived>
JacobiResult<typename Derived::Scalar> jacobi_eigen(const Eigen::MatrixBase<Derived>& a,
                                                    typename Derived::Scalar tol = typename Derived::Scalar(1e-9),
                                                    int max_sweeps = 100) {
  using Scalar = typename Derived::Scalar;
  using Matrix = Eigen::Matrix<Scalar, Eigen::Dynamic, Eigen::Dynamic>;
  const Eigen::Index n = a.rows();
  Matrix m = a.template selfadjointView<Eigen::Lower>();
  Matrix v = Matrix::Identity(n, n);
  JacobiResult<Scalar> out;

  auto off_norm = [&] {
    Scalar s(0);
    for (Eigen::Index j = 0; j < n; ++j)
      for (Eigen::Index i = j + 1; i < n; ++i) s += Scalar(2) * m(i, j) * m(i, j);
    return std::sqrt(s);
  };

  while (out.sweeps < max_sweeps && off_norm() > tol) {
    ++out.sweeps;
    for (Eigen::Index p = 0; p < n; ++p)
      for (Eigen::Index q = p + 1; q < n; ++q) {
        const Scalar apq = m(p, q);
        if (apq == Scalar(0)) continue;
        const Scalar theta = (m(q, q) - m(p, p)) / (Scalar(2) * apq);
        const Scalar t = (theta >= 0 ? Scalar(1) : Scalar(-1)) / (std::abs(theta) + std::sqrt(theta * theta + Scalar(1)));
        const Scalar c = Scalar(1) / std::sqrt(t * t + Scalar(1));
        const Scalar s = t * c;
        for (Eigen::Index k = 0; k < n; ++k) {
          const Scalar mkp = m(k, p), mkq = m(k, q);
          m(k, p) = c * mkp - s * mkq;
          m(k, q) = s * mkp + c * mkq;
        }
        for (Eigen::Index k = 0; k < n; ++k) {
          const Scalar mpk = m(p, k), mqk = m(q, k);
          m(p, k) = c * mpk - s * mqk;
          m(q, k) = s * mpk + c * mqk;
        }
        for (Eigen::Index k = 0; k < n; ++k) {
          const Scalar vkp = v(k, p), vkq = v(k, q);
          v(k, p) = c * vkp - s * vkq;
          v(k, q) = s * vkp + c * vkq;
        }
      }
  }
  out.values = m.diagonal();
  out.vectors = std::move(v);
  return out;
}

/// Clustered eigenvalues, largest first.
struct SpectrumSummary {
  std::vector<std::pair<double, int>> clusters;
  double max_residual = 0.0;

  [[nodiscard]] int total() const;
  /// Multiplicity of the cluster within `tol` of `value` (0 if none).
  [[nodiscard]] int multiplicity(double value, double tol = 1e-6) const;
};

inline constexpr double kClusterTol = 1e-6;

/// Group sorted values into clusters of width `tol` and snap cluster means
/// lying within `tol` of an integer or a square root of an integer.
SpectrumSummary cluster_eigenvalues(std::vector<double> values, double tol = kClusterTol);

Eigen::MatrixXd adjacency_matrix(const SimpleGraph& x);
/// Jacobi eigenvalues of the adjacency matrix (at most 128 vertices).
SpectrumSummary spectrum_direct(const SimpleGraph& x);
/// Spectrum of BCay(G, pi) from the spectrum of Cay(G, S(pi)).
SpectrumSummary spectrum_via_underlying(const CellFamily& f);

bool spectra_agree(const SpectrumSummary& a, const SpectrumSummary& b, double tol = kClusterTol);
bool symmetric_about_zero(const SpectrumSummary& s, double tol = kClusterTol);
/// "value^multiplicity" with six decimals, space separated.
std::string format_spectrum(const SpectrumSummary& s);

}  // namespace bcay
