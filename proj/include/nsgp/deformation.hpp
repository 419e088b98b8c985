#pragma once

#include <map>

#include "nsgp/resolution.hpp"
#include "nsgp/semigroup.hpp"

namespace nsgp {

/// Graded dimensions of T^1 for the monomial curve of S by the
/// combinatorial formula
///   dim T^1(n) = max(0, #{a_i : a_i + n not in S} - 1)
///                 - rank{ z_j : m_j + n not in S },
/// clamped at 0.  Outside [-max m_j, c - min a_i) every value vanishes.
struct T1Spectrum {
  std::map<Int, Int> dims;  // nonzero entries only
  Int tau = 0;
  Int tau_plus = 0;   // sum of dims over n > 0 (smoothing directions)
  Int tau_minus = 0;  // sum of dims over n < 0
  Int window_lo = 0;  // inclusive
  Int window_hi = 0;  // exclusive
};

Int t1_dimension(const NumericalSemigroup& s, const SyzygyData& relations,
                 Int n);
Int t1_dimension(const NumericalSemigroup& s, Int n);

T1Spectrum t1_spectrum(const NumericalSemigroup& s);

}  // namespace nsgp
