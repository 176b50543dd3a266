// SPDX-License-Identifier: Apache-2.0
#pragma once

#include <gmpxx.h>

#include <algorithm>
#include <cmath>
#include <cstddef>
#include <ostream>
#include <string>
#include <utility>
#include <vector>

#include "bhix/error.hpp"

namespace bhix {

/// Polynomial with arbitrary-precision integer coefficients, stored
/// low-order first and kept trimmed (no leading zeros; zero is empty).
class IntPoly {
 public:
  IntPoly() = default;
  explicit IntPoly(std::vector<mpz_class> coeffs) : c_(std::move(coeffs)) { trim(); }
  IntPoly(std::initializer_list<long> coeffs) {
    for (long x : coeffs) c_.emplace_back(x);
    trim();
  }

  static IntPoly constant(const mpz_class& k) { return IntPoly(std::vector<mpz_class>{k}); }
  static IntPoly x() { return IntPoly{0, 1}; }
  /// x - r
  static IntPoly linear_factor(long r) { return IntPoly{-r, 1}; }

  /// Degree; -1 for the zero polynomial.
  long degree() const noexcept { return static_cast<long>(c_.size()) - 1; }
  bool is_zero() const noexcept { return c_.empty(); }

  /// Coefficient of x^k (zero past the degree).
  mpz_class coeff(std::size_t k) const { return k < c_.size() ? c_[k] : mpz_class(0); }
  const std::vector<mpz_class>& coeffs() const noexcept { return c_; }

  friend IntPoly operator+(const IntPoly& a, const IntPoly& b) {
    std::vector<mpz_class> r(std::max(a.c_.size(), b.c_.size()));
    for (std::size_t k = 0; k < r.size(); ++k) r[k] = a.coeff(k) + b.coeff(k);
    return IntPoly(std::move(r));
  }

  friend IntPoly operator-(const IntPoly& a, const IntPoly& b) {
    std::vector<mpz_class> r(std::max(a.c_.size(), b.c_.size()));
    for (std::size_t k = 0; k < r.size(); ++k) r[k] = a.coeff(k) - b.coeff(k);
    return IntPoly(std::move(r));
  }

  friend IntPoly operator*(const IntPoly& a, const IntPoly& b) {
    if (a.is_zero() || b.is_zero()) return {};
    std::vector<mpz_class> r(a.c_.size() + b.c_.size() - 1);
    for (std::size_t i = 0; i < a.c_.size(); ++i) {
      if (a.c_[i] == 0) continue;
      for (std::size_t j = 0; j < b.c_.size(); ++j) r[i + j] += a.c_[i] * b.c_[j];
    }
    return IntPoly(std::move(r));
  }

  friend bool operator==(const IntPoly& a, const IntPoly& b) { return a.c_ == b.c_; }

  IntPoly pow(unsigned e) const {
    IntPoly result = constant(1);
    IntPoly base = *this;
    for (; e; e >>= 1) {
      if (e & 1U) result = result * base;
      if (e > 1) base = base * base;
    }
    return result;
  }

  /// Quotient and remainder by a monic divisor.
  std::pair<IntPoly, IntPoly> divmod_monic(const IntPoly& d) const {
    if (d.is_zero() || d.c_.back() != 1) {
      throw error(errc::invalid_input, "divisor must be monic");
    }
    if (degree() < d.degree()) return {{}, *this};
    std::vector<mpz_class> rem = c_;
    std::vector<mpz_class> quo(c_.size() - d.c_.size() + 1);
    for (std::size_t k = quo.size(); k-- > 0;) {
      const mpz_class lead = rem[k + d.c_.size() - 1];
      quo[k] = lead;
      if (lead == 0) continue;
      for (std::size_t j = 0; j < d.c_.size(); ++j) rem[k + j] -= lead * d.c_[j];
    }
    return {IntPoly(std::move(quo)), IntPoly(std::move(rem))};
  }

  double evaluate(double x) const {
    long double acc = 0.0L;
    for (std::size_t k = c_.size(); k-- > 0;) acc = acc * x + static_cast<long double>(c_[k].get_d());
    return static_cast<double>(acc);
  }

  mpz_class evaluate(const mpz_class& x) const {
    mpz_class acc = 0;
    for (std::size_t k = c_.size(); k-- > 0;) acc = acc * x + c_[k];
    return acc;
  }

  /// Largest coefficient magnitude.
  double max_abs_coeff() const {
    double best = 0.0;
    for (const auto& c : c_) best = std::max(best, std::abs(c.get_d()));
    return best;
  }

  std::string to_string() const {
    if (is_zero()) return "0";
    std::string out;
    for (std::size_t k = c_.size(); k-- > 0;) {
      if (c_[k] == 0) continue;
      mpz_class mag = abs(c_[k]);
      if (!out.empty()) out += c_[k] < 0 ? " - " : " + ";
      else if (c_[k] < 0) out += "-";
      if (mag != 1 || k == 0) out += mag.get_str();
      if (k >= 1) out += "x";
      if (k >= 2) out += "^" + std::to_string(k);
    }
    return out;
  }

  friend std::ostream& operator<<(std::ostream& os, const IntPoly& p) { return os << p.to_string(); }

 private:
  void trim() {
    while (!c_.empty() && c_.back() == 0) c_.pop_back();
  }

  std::vector<mpz_class> c_;
};

}  // namespace bhix
