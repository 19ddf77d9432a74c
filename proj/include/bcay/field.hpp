#pragma once

#include <vector>

namespace bcay {

/// GF(p^m) for p^m <= 64, built from an embedded primitive polynomial.
///
/// Field elements are integers 0..p^m-1 holding the coefficient vector of a
/// polynomial in the root alpha, base p with the constant term least
/// significant. antilog[i] = alpha^i.
class FiniteFieldTable {
 public:
  /// Throws InvalidArgument when p is not prime or p^m exceeds 64.
  FiniteFieldTable(int p, int m);

  [[nodiscard]] int p() const { return p_; }
  [[nodiscard]] int m() const { return m_; }
  [[nodiscard]] int size() const { return q_; }
  /// Coefficients c0..cm of the monic modulus.
  [[nodiscard]] const std::vector<int>& modulus() const { return modulus_; }
  [[nodiscard]] int antilog(int i) const { return antilog_[((i % (q_ - 1)) + (q_ - 1)) % (q_ - 1)]; }
  /// Discrete log of a non-zero element.
  [[nodiscard]] int log(int x) const { return log_[x]; }
  [[nodiscard]] int add(int a, int b) const;
  [[nodiscard]] int neg(int a) const;
  [[nodiscard]] int mul(int a, int b) const;

 private:
  int p_, m_, q_;
  std::vector<int> modulus_;
  std::vector<int> antilog_;
  std::vector<int> log_;
};

bool is_prime(int n);
/// (p, m) with q = p^m, or (0, 0) when q is not a prime power.
std::pair<int, int> prime_power(int q);

}  // namespace bcay
