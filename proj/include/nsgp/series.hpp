#pragma once

#include "nsgp/polynomial.hpp"
#include "nsgp/semigroup.hpp"

namespace nsgp {

/// Truncation of the Poincare series P_S(t) = sum_{s in S} t^s to degree
/// `bound` (coefficients are the membership indicator).
IntPolynomial poincare_truncated(const NumericalSemigroup& s, Int bound);

/// Numerator Q(t) = P_S(t) * prod (1 - t^{a_i}) over the minimal
/// generators; an honest polynomial of degree at most c - 1 + sum a_i
/// with Q(0) = 1.
IntPolynomial hilbert_numerator(const NumericalSemigroup& s);

/// Stanley's criterion in functional form: S is symmetric exactly when the
/// coefficient sequence of Q is its own reversal up to a global sign.
bool gorenstein_functional_check(const NumericalSemigroup& s);

/// For a complete intersection with relation degrees m_1..m_{g-1} the
/// numerator factors as prod (1 - t^{m_i}); this verifies that identity.
bool ci_numerator_check(const NumericalSemigroup& s,
                        const std::vector<Int>& degrees);

/// Whether p is, up to sign and a power of t, a product of cyclotomic
/// polynomials: trial division by Phi_d for every d with phi(d) <= deg,
/// repeated to multiplicity.  Throws ZeroPolynomial on the zero input.
bool cyclotomic_test(const IntPolynomial& p);

/// Verifies P_{<d1 S1, d2 S2>}(t) = (1 - t^{d1 d2}) P_{S1}(t^{d1})
/// P_{S2}(t^{d2}) by comparing truncations past the glued conductor.
bool gluing_series_check(const NumericalSemigroup& s1,
                         const NumericalSemigroup& s2, Int d1, Int d2);

}  // namespace nsgp
