#pragma once

#include <optional>
#include <utility>

#include "nsgp/polynomial.hpp"
#include "nsgp/semigroup.hpp"

namespace nsgp {

/// The Alexander polynomial of the link of the monomial curve of S (and of
/// the L-space knot realizing S when one exists): (1 - t) P_S(t), an honest
/// polynomial of degree c with constant term 1.
IntPolynomial alexander_from_semigroup(const NumericalSemigroup& s);

/// An Alexander polynomial in normalized L-space form: nonnegative
/// exponents, coefficients alternating +1, -1 starting with +1 at t^0.
struct AlexanderForm {
  IntPolynomial poly;
  std::vector<Int> exponents;  // support, increasing; signs alternate from +
};

/// Shifts/negates a +-t^k unit multiple into normalized form; throws
/// ZeroPolynomial on zero input and NotLSpaceShape when the coefficients
/// are not alternating +-1 after normalization.
AlexanderForm normalize_alexander(const IntPolynomial& p);

/// A cofinite subset of the nonnegative integers containing 0: the sporadic
/// elements below tail_from plus every integer >= tail_from.
struct FormalSemigroup {
  std::vector<Int> sporadic;  // strictly below tail_from, sorted, contains 0
  Int tail_from = 0;
  bool closed = false;
  std::optional<std::pair<Int, Int>> witness;  // first failure x + y, x <= y

  bool contains(Int n) const;
};

/// Expands p / (1 - t) as partial sums and reads the result as an indicator
/// function.  The partial sums must stay in {0, 1} and end at 1 (a cofinite
/// set); otherwise throws QuotientNotIndicator.  tail_from = deg p.
FormalSemigroup formal_semigroup_from_alexander(const AlexanderForm& form);

/// Closure under addition, checked exhaustively (sums of elements below the
/// tail); the witness is the lexicographically first failing pair.
struct ClosureReport {
  bool closed = false;
  std::optional<std::pair<Int, Int>> witness;
};

ClosureReport is_true_semigroup(const FormalSemigroup& f);

/// The necessary condition for an L-space knot semigroup to be realized by
/// an algebraic link: the set must be an honest semigroup and symmetric.
struct RealizabilityReport {
  bool is_semigroup = false;
  std::optional<bool> symmetric;  // unset when not a semigroup
  bool passes = false;
  std::optional<NumericalSemigroup> semigroup;
};

RealizabilityReport realizability_necessary(const FormalSemigroup& f);

/// Alexander polynomial of the (p, q) torus knot via the polynomial
/// identity (1 - t)(1 - t^{pq}) / ((1 - t^p)(1 - t^q)); requires coprime
/// positive p, q.  Computed without semigroup machinery so it can serve as
/// an independent cross-check.
IntPolynomial torus_alexander(Int p, Int q);

enum class TeragaitoFamily { A, B };

/// Family A: <4, 4n+2, 4n+5>.  Family B: <6, 6n+4, 6n+8, 12n+11, 12n+15>.
NumericalSemigroup teragaito_family(TeragaitoFamily family, Int n);

/// The pretzel example P(-2, 3, 7): sporadic {0, 3, 5, 7, 8} with tail
/// from 10; not closed under addition (witness 3 + 3).
FormalSemigroup pretzel_example();

}  // namespace nsgp
