#include "nsgp/deformation.hpp"

#include <algorithm>

#include "nsgp/linalg.hpp"

namespace nsgp {

Int t1_dimension(const NumericalSemigroup& s, const SyzygyData& relations,
                 Int n) {
  const auto& gens = s.minimal_generators();

  Int derivations = 0;
  for (Int a : gens)
    if (!s.contains(a + n)) ++derivations;
  Int normal = std::max<Int>(0, derivations - 1);

  RankAccumulator span(gens.size());
  for (const auto& rel : relations.relations)
    if (!s.contains(rel.degree + n)) span.add(to_bigint(rel.z));

  return std::max<Int>(0, normal - span.rank());
}

Int t1_dimension(const NumericalSemigroup& s, Int n) {
  return t1_dimension(s, minimal_relations(s), n);
}

T1Spectrum t1_spectrum(const NumericalSemigroup& s) {
  SyzygyData relations = minimal_relations(s);
  T1Spectrum spectrum;

  // Support bounds: for n < -max m_j every relation degree shifts outside
  // S while all g derivation slots open, giving rank g - 1 against g - 1;
  // for n >= c - min a_i every a_i + n is in S.
  Int max_degree = 0;
  for (const auto& rel : relations.relations)
    max_degree = std::max(max_degree, rel.degree);
  spectrum.window_lo = -max_degree;
  spectrum.window_hi = s.conductor() - s.multiplicity();

  for (Int n = spectrum.window_lo; n < spectrum.window_hi; ++n) {
    Int d = t1_dimension(s, relations, n);
    if (d == 0) continue;
    spectrum.dims[n] = d;
    spectrum.tau += d;
    (n > 0 ? spectrum.tau_plus : spectrum.tau_minus) += d;
  }
  return spectrum;
}

}  // namespace nsgp
