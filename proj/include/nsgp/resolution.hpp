#pragma once

#include <cstdint>
#include <map>
#include <vector>

#include "nsgp/semigroup.hpp"

namespace nsgp {

/// All factorizations of m over `gens`: nonnegative vectors alpha with
/// sum alpha_i * gens_i = m, sorted lexicographically.
std::vector<std::vector<Int>> factorizations_over(const std::vector<Int>& gens,
                                                  Int m);

/// Factorizations of m over the minimal generators of S.
std::vector<std::vector<Int>> factorizations(const NumericalSemigroup& s,
                                             Int m);

/// The shaded simplicial complex of S in degree m: a subset I of the
/// generator index set is a face exactly when m - sum_{i in I} a_i lies
/// in S.  Faces are bitmasks over the minimal generators; the empty face
/// (mask 0) is present iff m is in S, and the complex is downward closed.
/// When m is not in S there are no faces at all.
struct ShadedComplex {
  Int degree = 0;
  std::vector<Int> vertex_values;   // minimal generators, ascending
  std::vector<std::uint64_t> faces; // sorted by (popcount, mask)

  bool has_face(std::uint64_t mask) const;
};

ShadedComplex shaded_complex(const NumericalSemigroup& s, Int m);

/// Reduced homology over Q.  Entry k of the result is dim H~_{k-1}, so the
/// vector starts with H~_{-1} (which is 1 exactly when the complex is {[]},
/// the empty face alone) and ends with H~_{g-1}.
std::vector<Int> reduced_homology_dims(const ShadedComplex& complex);

/// Graded Betti numbers of the defining ideal I_S: beta_{i,m} is the
/// dimension of H~_i of the shaded complex in degree m, so column i = 0
/// counts minimal generators of I_S and column i the i-th syzygies.
struct BettiDiagram {
  Int g = 0;      // embedding dimension
  Int theta = 0;  // degree bound c - 1 + sum of minimal generators
  std::map<std::pair<Int, Int>, Int> entries;  // (i, m) -> beta, beta > 0

  Int beta(Int i, Int m) const {
    auto it = entries.find({i, m});
    return it == entries.end() ? 0 : it->second;
  }
};

BettiDiagram betti_diagram(const NumericalSemigroup& s);

/// Whether the diagram is invariant under the central reflection that
/// matches the self-duality of the resolution: with the rank-one free cover
/// adjoined as column -1 (entry 1 in degree 0), entry (i, m) must equal
/// entry (g - 3 - i, theta - m).  Holds exactly for symmetric S.
bool square_is_symmetric(const BettiDiagram& diagram);

/// The diagram a complete intersection with relation degrees `degrees`
/// must have: beta_{i,m} counts (i+1)-element subsets of the degrees
/// summing to m (the Koszul complex on the g-1 relations).
BettiDiagram ci_predicted_diagram(const std::vector<Int>& degrees);

/// A minimal relation in degree `degree`: z = u - v for factorizations
/// u, v of the degree taken in distinct components of the factorization
/// graph; sum_i z_i a_i = 0.
struct Syzygy {
  Int degree = 0;
  std::vector<Int> z;
};

/// Minimal binomial relations of I_S with a deterministic representative
/// choice:  per degree the factorization graph (factorizations joined when
/// their supports intersect) is split into components, each component is
/// represented by its lexicographically smallest factorization, components
/// are ordered by representative, and the relations are rep_j - rep_0.
/// Degrees and counts are cross-checked against the homology betti numbers;
/// a mismatch throws InternalInconsistency.
struct SyzygyData {
  std::vector<Syzygy> relations;  // sorted by (degree, z)
};

SyzygyData minimal_relations(const NumericalSemigroup& s);

/// Degree bound theta = c - 1 + sum of minimal generators; every nonzero
/// Betti entry lives in a degree <= theta.
Int degree_bound(const NumericalSemigroup& s);

/// Connected components of the factorization graph; returns component ids
/// aligned with `facts`, numbered by first appearance.
std::vector<int> factorization_components(
    const std::vector<std::vector<Int>>& facts);

}  // namespace nsgp
