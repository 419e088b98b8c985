#include "nsgp/knots.hpp"

#include <algorithm>
#include <numeric>
#include <sstream>

#include "nsgp/series.hpp"

namespace nsgp {

IntPolynomial alexander_from_semigroup(const NumericalSemigroup& s) {
  Int c = s.conductor();
  IntPolynomial finite = poincare_truncated(s, c - 1);
  return finite * one_minus_power(1) + IntPolynomial::monomial(c);
}

AlexanderForm normalize_alexander(const IntPolynomial& p) {
  if (p.is_zero())
    fail(ErrorCode::ZeroPolynomial, "zero polynomial has no normalized form");
  IntPolynomial q = exact_div(p, IntPolynomial::monomial(p.order()));
  if (q.coeff(0) < 0) q = -q;

  AlexanderForm form;
  Int expected_sign = 1;
  for (Int k = 0; k <= q.degree(); ++k) {
    BigInt c = q.coeff(k);
    if (c == 0) continue;
    if (c != expected_sign) {
      std::ostringstream os;
      os << "coefficient of t^" << k << " breaks the alternating +-1 shape";
      fail(ErrorCode::NotLSpaceShape, os.str());
    }
    form.exponents.push_back(k);
    expected_sign = -expected_sign;
  }
  form.poly = std::move(q);
  return form;
}

bool FormalSemigroup::contains(Int n) const {
  if (n < 0) return false;
  if (n >= tail_from) return true;
  return std::binary_search(sporadic.begin(), sporadic.end(), n);
}

FormalSemigroup formal_semigroup_from_alexander(const AlexanderForm& form) {
  const IntPolynomial& p = form.poly;
  // Coefficients of p / (1 - t) are the partial sums of p; they must form
  // the indicator of a cofinite set.
  BigInt sum = 0;
  FormalSemigroup f;
  f.tail_from = p.degree();
  for (Int k = 0; k <= p.degree(); ++k) {
    sum += p.coeff(k);
    if (sum != 0 && sum != 1) {
      fail(ErrorCode::QuotientNotIndicator,
           "partial sums of the Alexander polynomial leave {0, 1}");
    }
    if (sum == 1 && k < f.tail_from) f.sporadic.push_back(k);
  }
  if (sum != 1) {
    // The expansion is eventually this constant; 0 would mean a finite set.
    fail(ErrorCode::QuotientNotIndicator,
         "the expansion of p / (1 - t) is not the indicator of a cofinite set");
  }
  ClosureReport closure = is_true_semigroup(f);
  f.closed = closure.closed;
  f.witness = closure.witness;
  return f;
}

ClosureReport is_true_semigroup(const FormalSemigroup& f) {
  // Sums with one term past the tail stay past the tail, so only pairs of
  // elements below tail_from can fail.
  std::vector<Int> low = f.sporadic;
  for (size_t i = 0; i < low.size(); ++i) {
    for (size_t j = i; j < low.size(); ++j) {
      if (!f.contains(low[i] + low[j])) {
        return {false, std::make_pair(low[i], low[j])};
      }
    }
  }
  return {true, std::nullopt};
}

RealizabilityReport realizability_necessary(const FormalSemigroup& f) {
  RealizabilityReport report;
  report.is_semigroup = f.closed;
  if (!f.closed) return report;
  // Generators: every minimal element not a sum of two smaller nonzero
  // members lies below tail_from + least nonzero element.
  Int least = 0;
  for (Int n = 1; n < f.tail_from && least == 0; ++n) {
    if (f.contains(n)) least = n;
  }
  if (least == 0) least = std::max<Int>(f.tail_from, 1);
  std::vector<Int> gens;
  for (Int n = 1; n <= f.tail_from + least; ++n) {
    if (!f.contains(n)) continue;
    bool decomposable = false;
    for (Int b = least; 2 * b <= n; ++b) {
      if (f.contains(b) && f.contains(n - b)) {
        decomposable = true;
        break;
      }
    }
    if (!decomposable) gens.push_back(n);
  }
  NumericalSemigroup s(gens);
  report.symmetric = s.is_symmetric();
  report.passes = *report.symmetric;
  report.semigroup = std::move(s);
  return report;
}

IntPolynomial torus_alexander(Int p, Int q) {
  if (p <= 0 || q <= 0)
    fail(ErrorCode::ZeroArgument, "torus parameters must be positive");
  if (std::gcd(p, q) != 1) {
    std::ostringstream os;
    os << "torus parameters " << p << ", " << q << " are not coprime";
    fail(ErrorCode::NotCoprime, os.str());
  }
  IntPolynomial numerator = one_minus_power(1) * one_minus_power(p * q);
  return exact_div(exact_div(numerator, one_minus_power(p)),
                   one_minus_power(q));
}

NumericalSemigroup teragaito_family(TeragaitoFamily family, Int n) {
  if (n <= 0) fail(ErrorCode::ZeroArgument, "family index must be positive");
  if (family == TeragaitoFamily::A) {
    return NumericalSemigroup({4, 4 * n + 2, 4 * n + 5});
  }
  return NumericalSemigroup(
      {6, 6 * n + 4, 6 * n + 8, 12 * n + 11, 12 * n + 15});
}

FormalSemigroup pretzel_example() {
  AlexanderForm form = normalize_alexander(
      parse_polynomial("1-t+t^3-t^4+t^5-t^6+t^7-t^9+t^10"));
  return formal_semigroup_from_alexander(form);
}

}  // namespace nsgp
