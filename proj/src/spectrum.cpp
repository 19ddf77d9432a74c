#include "bcay/spectrum.hpp"

#include <algorithm>
#include <cstdio>

#include "bcay/error.hpp"

namespace bcay {

int SpectrumSummary::total() const {
  int t = 0;
  for (const auto& c : clusters) t += c.second;
  return t;
}

int SpectrumSummary::multiplicity(double value, double tol) const {
  for (const auto& c : clusters)
    if (std::abs(c.first - value) <= tol) return c.second;
  return 0;
}

namespace {

double snap(double x, double tol) {
  const double r = std::round(x);
  if (std::abs(x - r) <= tol) return r;
  const double sq = std::round(x * x);
  if (std::abs(std::abs(x) - std::sqrt(sq)) <= tol) return x < 0 ? -std::sqrt(sq) : std::sqrt(sq);
  return x;
}

}  // namespace

SpectrumSummary cluster_eigenvalues(std::vector<double> values, double tol) {
  std::sort(values.begin(), values.end(), std::greater<>());
  SpectrumSummary s;
  std::size_t i = 0;
  while (i < values.size()) {
    std::size_t j = i + 1;
    double sum = values[i];
    while (j < values.size() && values[j - 1] - values[j] <= tol) sum += values[j++];
    s.clusters.emplace_back(snap(sum / static_cast<double>(j - i), tol), static_cast<int>(j - i));
    i = j;
  }
  return s;
}

Eigen::MatrixXd adjacency_matrix(const SimpleGraph& x) {
  Eigen::MatrixXd a = Eigen::MatrixXd::Zero(x.order(), x.order());
  for (int u = 0; u < x.order(); ++u)
    for (int v : x.neighbors(u)) a(u, v) = 1.0;
  return a;
}

SpectrumSummary spectrum_direct(const SimpleGraph& x) {
  if (x.order() > 128) throw InvalidArgument("spectrum_direct supports at most 128 vertices");
  const Eigen::MatrixXd a = adjacency_matrix(x);
  const auto r = jacobi_eigen(a);
  double residual = 0.0;
  for (Eigen::Index i = 0; i < r.values.size(); ++i)
    residual = std::max(residual, (a * r.vectors.col(i) - r.values(i) * r.vectors.col(i)).norm());
  if (residual > 1e-8) throw Error("eigensolver residual " + std::to_string(residual) + " above 1e-8");
  SpectrumSummary s = cluster_eigenvalues(std::vector<double>(r.values.begin(), r.values.end()));
  s.max_residual = residual;
  return s;
}

SpectrumSummary spectrum_via_underlying(const CellFamily& f) {
  if (!f.valid()) throw InvalidArgument("spectrum_via_underlying needs a bcay-valid family");
  const int n = f.g().order();
  const int b = n * f.ell / f.k;
  const SpectrumSummary cay = spectrum_direct(build_cayley(f.g(), connection_set(f)));
  std::vector<double> values;
  int m_t = 0;
  for (const auto& [theta, m] : cay.clusters) {
    if (std::abs(theta + f.ell) <= kClusterTol) {
      m_t += m;
      continue;
    }
    const double r = std::sqrt(std::max(0.0, theta + f.ell));
    for (int i = 0; i < m; ++i) {
      values.push_back(r);
      values.push_back(-r);
    }
  }
  for (int i = 0; i < 2 * m_t + b - n; ++i) values.push_back(0.0);
  return cluster_eigenvalues(std::move(values));
}

bool spectra_agree(const SpectrumSummary& a, const SpectrumSummary& b, double tol) {
  if (a.clusters.size() != b.clusters.size()) return false;
  for (std::size_t i = 0; i < a.clusters.size(); ++i) {
    if (a.clusters[i].second != b.clusters[i].second) return false;
    if (std::abs(a.clusters[i].first - b.clusters[i].first) > tol) return false;
  }
  return true;
}

bool symmetric_about_zero(const SpectrumSummary& s, double tol) {
  const auto& c = s.clusters;
  for (std::size_t i = 0; i < c.size(); ++i) {
    const auto& d = c[c.size() - 1 - i];
    if (c[i].second != d.second || std::abs(c[i].first + d.first) > tol) return false;
  }
  return true;
}

std::string format_spectrum(const SpectrumSummary& s) {
  std::string out;
  char buf[64];
  for (const auto& [v, m] : s.clusters) {
    std::snprintf(buf, sizeof buf, "%.6f^%d", v == 0.0 ? 0.0 : v, m);
    if (!out.empty()) out += ' ';
    out += buf;
  }
  return out;
}

}  // namespace bcay
