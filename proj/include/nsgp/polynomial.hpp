#pragma once

#include <optional>
#include <string>
#include <vector>

#include "nsgp/error.hpp"
#include "nsgp/linalg.hpp"
#include "nsgp/semigroup.hpp"

namespace nsgp {

/// Dense univariate polynomial over Z with arbitrary-precision coefficients.
/// Invariant: no trailing zero coefficients; the zero polynomial has an empty
/// coefficient vector and degree() == -1 (the sentinel for "minus infinity").
class IntPolynomial {
 public:
  IntPolynomial() = default;
  explicit IntPolynomial(std::vector<BigInt> coeffs) : c_(std::move(coeffs)) {
    trim();
  }

  static IntPolynomial zero() { return IntPolynomial(); }
  static IntPolynomial one() { return monomial(0); }
  static IntPolynomial monomial(Int k, BigInt coeff = 1);
  static IntPolynomial from_ints(const std::vector<Int>& coeffs);

  bool is_zero() const { return c_.empty(); }
  Int degree() const { return static_cast<Int>(c_.size()) - 1; }
  BigInt coeff(Int k) const {
    return (k >= 0 && k < static_cast<Int>(c_.size()))
               ? c_[static_cast<size_t>(k)]
               : BigInt(0);
  }
  const std::vector<BigInt>& coeffs() const { return c_; }

  /// Lowest exponent with nonzero coefficient; -1 for the zero polynomial.
  Int order() const;

  BigInt eval_at_one() const;

  /// t^deg * p(1/t): the coefficient sequence reversed.
  IntPolynomial reversed() const;

  /// p(t^k), k >= 1.
  IntPolynomial inflate(Int k) const;

  /// Drops all terms of exponent > bound.
  IntPolynomial truncated(Int bound) const;

  friend bool operator==(const IntPolynomial&, const IntPolynomial&) = default;

 private:
  void trim() {
    while (!c_.empty() && c_.back() == 0) c_.pop_back();
  }
  std::vector<BigInt> c_;
};

IntPolynomial operator+(const IntPolynomial& a, const IntPolynomial& b);
IntPolynomial operator-(const IntPolynomial& a, const IntPolynomial& b);
IntPolynomial operator-(const IntPolynomial& a);
IntPolynomial operator*(const IntPolynomial& a, const IntPolynomial& b);

/// Product with all terms of exponent > bound discarded.
IntPolynomial mul_truncated(const IntPolynomial& a, const IntPolynomial& b,
                            Int bound);

/// 1 - t^k.
IntPolynomial one_minus_power(Int k);

/// Quotient a / b when the division is exact; nullopt otherwise.
std::optional<IntPolynomial> try_exact_div(const IntPolynomial& a,
                                           const IntPolynomial& b);

/// Exact quotient; throws InternalInconsistency when the division leaves a
/// remainder (callers use it only where exactness is a theorem).
IntPolynomial exact_div(const IntPolynomial& a, const IntPolynomial& b);

/// The n-th cyclotomic polynomial, by the Moebius-product recurrence
/// Phi_n = (t^n - 1) / prod_{d | n, d < n} Phi_d, with a process-wide cache.
const IntPolynomial& cyclotomic(Int n);

Int euler_phi(Int n);

/// Renders like "1 - t + t^3"; the zero polynomial renders as "0".
std::string format_polynomial(const IntPolynomial& p);

/// Accepts either a comma/space-separated coefficient list ("1,-1,0,1")
/// ordered by ascending exponent, or a sparse expression ("1-t+t^3").
IntPolynomial parse_polynomial(const std::string& text);

}  // namespace nsgp
