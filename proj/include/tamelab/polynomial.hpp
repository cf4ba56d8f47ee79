#pragma once

#include <cstddef>
#include <initializer_list>
#include <sstream>
#include <string>
#include <utility>
#include <vector>

#include "tamelab/int_matrix.hpp"

namespace tamelab {

/// Univariate polynomial over Z, coefficients stored lowest degree first.
/// The zero polynomial has no coefficients.
class IntPoly {
 public:
  IntPoly() = default;
  explicit IntPoly(std::vector<Integer> coeffs) : c_(std::move(coeffs)) { trim(); }
  IntPoly(std::initializer_list<long> coeffs) : c_(coeffs.begin(), coeffs.end()) { trim(); }

  static IntPoly monomial(std::size_t degree, const Integer& coeff = 1) {
    std::vector<Integer> c(degree + 1);
    c[degree] = coeff;
    return IntPoly(std::move(c));
  }

  /// x^k - 1
  static IntPoly x_pow_minus_one(std::size_t k) {
    std::vector<Integer> c(k + 1);
    c[0] = -1;
    c[k] += 1;
    return IntPoly(std::move(c));
  }

  [[nodiscard]] bool is_zero() const noexcept { return c_.empty(); }
  /// Degree; -1 for the zero polynomial.
  [[nodiscard]] long degree() const noexcept { return static_cast<long>(c_.size()) - 1; }
  [[nodiscard]] const std::vector<Integer>& coeffs() const noexcept { return c_; }
  [[nodiscard]] Integer coeff(std::size_t i) const { return i < c_.size() ? c_[i] : Integer(0); }
  [[nodiscard]] const Integer& leading() const { return c_.back(); }
  [[nodiscard]] bool is_monic() const { return !c_.empty() && c_.back() == 1; }

  friend IntPoly operator+(const IntPoly& a, const IntPoly& b) {
    std::vector<Integer> c(std::max(a.c_.size(), b.c_.size()));
    for (std::size_t i = 0; i < a.c_.size(); ++i) c[i] += a.c_[i];
    for (std::size_t i = 0; i < b.c_.size(); ++i) c[i] += b.c_[i];
    return IntPoly(std::move(c));
  }
  friend IntPoly operator-(const IntPoly& a, const IntPoly& b) {
    std::vector<Integer> c(std::max(a.c_.size(), b.c_.size()));
    for (std::size_t i = 0; i < a.c_.size(); ++i) c[i] += a.c_[i];
    for (std::size_t i = 0; i < b.c_.size(); ++i) c[i] -= b.c_[i];
    return IntPoly(std::move(c));
  }
  friend IntPoly operator*(const IntPoly& a, const IntPoly& b) {
    if (a.is_zero() || b.is_zero()) return {};
    std::vector<Integer> c(a.c_.size() + b.c_.size() - 1);
    for (std::size_t i = 0; i < a.c_.size(); ++i) {
      if (a.c_[i] == 0) continue;
      for (std::size_t j = 0; j < b.c_.size(); ++j) {
        mpz_addmul(c[i + j].get_mpz_t(), a.c_[i].get_mpz_t(), b.c_[j].get_mpz_t());
      }
    }
    return IntPoly(std::move(c));
  }
  friend bool operator==(const IntPoly& a, const IntPoly& b) { return a.c_ == b.c_; }

  [[nodiscard]] IntPoly pow(unsigned e) const {
    IntPoly r{1};
    for (unsigned i = 0; i < e; ++i) r = r * *this;
    return r;
  }

  /// Quotient and remainder on division by a monic polynomial (exact over Z).
  [[nodiscard]] std::pair<IntPoly, IntPoly> divmod(const IntPoly& divisor) const {
    if (!divisor.is_monic()) throw Error(ErrorKind::InvalidArgument, "division by non-monic polynomial");
    if (degree() < divisor.degree()) return {IntPoly{}, *this};
    std::vector<Integer> rem = c_;
    const std::size_t dd = divisor.c_.size() - 1;
    std::vector<Integer> quo(rem.size() - dd);
    for (std::size_t k = rem.size(); k-- > dd;) {
      const Integer q = rem[k];
      if (q == 0) continue;
      quo[k - dd] = q;
      for (std::size_t j = 0; j <= dd; ++j) {
        mpz_submul(rem[k - dd + j].get_mpz_t(), q.get_mpz_t(), divisor.c_[j].get_mpz_t());
      }
    }
    rem.resize(dd);
    return {IntPoly(std::move(quo)), IntPoly(std::move(rem))};
  }

  [[nodiscard]] IntPoly mod(const IntPoly& divisor) const { return divmod(divisor).second; }

  /// Human-readable form, highest degree first, e.g. "x^2 + x + 1".
  [[nodiscard]] std::string to_string() const {
    if (is_zero()) return "0";
    std::ostringstream os;
    bool first = true;
    for (std::size_t k = c_.size(); k-- > 0;) {
      const Integer& a = c_[k];
      if (a == 0) continue;
      const Integer mag = abs(a);
      if (first) {
        if (a < 0) os << '-';
      } else {
        os << (a < 0 ? " - " : " + ");
      }
      first = false;
      if (k == 0 || mag != 1) os << mag;
      if (k >= 1) os << 'x';
      if (k >= 2) os << '^' << k;
    }
    return os.str();
  }

 private:
  void trim() {
    while (!c_.empty() && c_.back() == 0) c_.pop_back();
  }

  std::vector<Integer> c_;
};

}  // namespace tamelab
