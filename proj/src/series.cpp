#include "nsgp/series.hpp"

#include "nsgp/ci.hpp"

namespace nsgp {

IntPolynomial poincare_truncated(const NumericalSemigroup& s, Int bound) {
  if (bound < 0) return IntPolynomial();
  std::vector<BigInt> c(static_cast<size_t>(bound) + 1, 0);
  for (Int n = 0; n <= bound; ++n) {
    if (s.contains(n)) c[static_cast<size_t>(n)] = 1;
  }
  return IntPolynomial(std::move(c));
}

IntPolynomial hilbert_numerator(const NumericalSemigroup& s) {
  Int c = s.conductor();
  // (1 - t) P_S(t) is the polynomial  finite_part * (1 - t) + t^c,  so the
  // numerator is that times prod (1 - t^{a_i}) / (1 - t); the division is
  // absorbed by expanding one factor as a geometric sum.
  IntPolynomial finite = poincare_truncated(s, c - 1);
  IntPolynomial series_numerator =
      finite * one_minus_power(1) + IntPolynomial::monomial(c);
  const std::vector<Int>& gens = s.minimal_generators();
  std::vector<BigInt> geometric(static_cast<size_t>(gens.front()), 1);
  IntPolynomial q = series_numerator * IntPolynomial(std::move(geometric));
  for (size_t i = 1; i < gens.size(); ++i) q = q * one_minus_power(gens[i]);
  return q;
}

bool gorenstein_functional_check(const NumericalSemigroup& s) {
  IntPolynomial q = hilbert_numerator(s);
  IntPolynomial r = q.reversed();
  return r == q || r == -q;
}

bool ci_numerator_check(const NumericalSemigroup& s,
                        const std::vector<Int>& degrees) {
  IntPolynomial expected = IntPolynomial::one();
  for (Int m : degrees) expected = expected * one_minus_power(m);
  return hilbert_numerator(s) == expected;
}

bool cyclotomic_test(const IntPolynomial& p) {
  if (p.is_zero())
    fail(ErrorCode::ZeroPolynomial, "cyclotomic test on the zero polynomial");
  // Strip the t^k unit factor first.
  IntPolynomial q = exact_div(p, IntPolynomial::monomial(p.order()));
  // Any cyclotomic divisor Phi_d of q has phi(d) <= deg q, and
  // d / phi(d) < 7 for every d below 3 * 10^14, so d <= 7 * deg q + 7
  // covers all feasible degrees.
  Int dmax = 7 * q.degree() + 7;
  for (Int d = 1; d <= dmax && q.degree() > 0; ++d) {
    if (euler_phi(d) > q.degree()) continue;
    const IntPolynomial& phi = cyclotomic(d);
    for (;;) {
      auto quotient = try_exact_div(q, phi);
      if (!quotient) break;
      q = std::move(*quotient);
    }
  }
  return q.degree() == 0 && (q.coeff(0) == 1 || q.coeff(0) == -1);
}

bool gluing_series_check(const NumericalSemigroup& s1,
                         const NumericalSemigroup& s2, Int d1, Int d2) {
  NumericalSemigroup glued = glue(s1, s2, d1, d2);
  Int bound = glued.conductor() + d1 * d2;
  IntPolynomial lhs = poincare_truncated(glued, bound);
  IntPolynomial p1 = poincare_truncated(s1, bound / d1).inflate(d1);
  IntPolynomial p2 = poincare_truncated(s2, bound / d2).inflate(d2);
  IntPolynomial rhs = mul_truncated(mul_truncated(p1, p2, bound),
                                    one_minus_power(d1 * d2), bound);
  return lhs == rhs;
}

}  // namespace nsgp
