#include "bcay/field.hpp"

#include <map>
#include <string>
#include <utility>

#include "bcay/error.hpp"

namespace bcay {

bool is_prime(int n) {
  if (n < 2) return false;
  for (int d = 2; d * d <= n; ++d)
    if (n % d == 0) return false;
  return true;
}

std::pair<int, int> prime_power(int q) {
  if (q < 2) return {0, 0};
  int p = 2;
  while (q % p != 0) ++p;
  int m = 0;
  int r = q;
  while (r % p == 0) {
    r /= p;
    ++m;
  }
  if (r != 1) return {0, 0};
  return {p, m};
}

namespace {

// Monic primitive polynomials, coefficients c0..cm.
const std::map<std::pair<int, int>, std::vector<int>>& primitive_table() {
  static const std::map<std::pair<int, int>, std::vector<int>> t = {
      {{2, 2}, {1, 1, 1}},           // x^2 + x + 1
      {{2, 3}, {1, 1, 0, 1}},        // x^3 + x + 1
      {{2, 4}, {1, 1, 0, 0, 1}},     // x^4 + x + 1
      {{2, 5}, {1, 0, 1, 0, 0, 1}},  // x^5 + x^2 + 1
      {{2, 6}, {1, 1, 0, 0, 0, 0, 1}},
      {{3, 2}, {2, 1, 1}},           // x^2 + x + 2
      {{3, 3}, {1, 2, 0, 1}},        // x^3 + 2x + 1
      {{5, 2}, {2, 1, 1}},           // x^2 + x + 2
      {{7, 2}, {3, 1, 1}},           // x^2 + x + 3
      // prime fields: x - g for a primitive root g
      {{2, 1}, {1, 1}},   {{3, 1}, {1, 1}},   {{5, 1}, {3, 1}},   {{7, 1}, {4, 1}},
      {{11, 1}, {9, 1}},  {{13, 1}, {11, 1}}, {{17, 1}, {14, 1}}, {{19, 1}, {17, 1}},
      {{23, 1}, {18, 1}}, {{29, 1}, {27, 1}}, {{31, 1}, {28, 1}}, {{37, 1}, {35, 1}},
      {{41, 1}, {35, 1}}, {{43, 1}, {40, 1}}, {{47, 1}, {42, 1}}, {{53, 1}, {51, 1}},
      {{59, 1}, {57, 1}}, {{61, 1}, {59, 1}},
  };
  return t;
}

}  // namespace

FiniteFieldTable::FiniteFieldTable(int p, int m) : p_(p), m_(m), q_(1) {
  if (!is_prime(p) || m < 1) throw InvalidArgument("field characteristic must be prime and degree positive");
  for (int i = 0; i < m; ++i) {
    q_ *= p;
    if (q_ > 64) throw InvalidArgument("field tables are limited to 64 elements");
  }
  auto it = primitive_table().find({p, m});
  if (it == primitive_table().end())
    throw InvalidArgument("no stored primitive polynomial for GF(" + std::to_string(p) + "^" + std::to_string(m) + ")");
  modulus_ = it->second;

  // alpha^(i+1) = alpha * alpha^i, reducing x^m = -(c0 + ... + c_{m-1} x^{m-1})
  antilog_.assign(q_ - 1, 0);
  log_.assign(q_, -1);
  std::vector<int> cur(m, 0);
  cur[0] = 1;
  auto encode = [&](const std::vector<int>& v) {
    int x = 0;
    for (int i = m - 1; i >= 0; --i) x = x * p + v[i];
    return x;
  };
  for (int i = 0; i < q_ - 1; ++i) {
    const int x = encode(cur);
    if (log_[x] >= 0) throw Error("stored polynomial for GF(" + std::to_string(q_) + ") is not primitive");
    antilog_[i] = x;
    log_[x] = i;
    const int top = cur[m - 1];
    for (int j = m - 1; j > 0; --j) cur[j] = cur[j - 1];
    cur[0] = 0;
    for (int j = 0; j < m; ++j) cur[j] = ((cur[j] - top * modulus_[j]) % p + p) % p;
  }
  if (encode(cur) != 1) throw Error("stored polynomial for GF(" + std::to_string(q_) + ") has the wrong period");
}

int FiniteFieldTable::add(int a, int b) const {
  int r = 0, scale = 1;
  for (int i = 0; i < m_; ++i) {
    r += ((a % p_ + b % p_) % p_) * scale;
    a /= p_;
    b /= p_;
    scale *= p_;
  }
  return r;
}

int FiniteFieldTable::neg(int a) const {
  int r = 0, scale = 1;
  for (int i = 0; i < m_; ++i) {
    r += ((p_ - a % p_) % p_) * scale;
    a /= p_;
    scale *= p_;
  }
  return r;
}

int FiniteFieldTable::mul(int a, int b) const {
  if (a == 0 || b == 0) return 0;
  return antilog_[(log_[a] + log_[b]) % (q_ - 1)];
}

}  // namespace bcay
