#pragma once

#include <memory>
#include <optional>
#include <string>
#include <vector>

#include "nsgp/resolution.hpp"
#include "nsgp/semigroup.hpp"

namespace nsgp {

/// Least positive element common to the monoids generated by gens_a and
/// gens_b (no gcd-1 requirement on either side).
Int min_intersection(const std::vector<Int>& gens_a,
                     const std::vector<Int>& gens_b);

/// Certificate produced by a successful Delorme run: a binary gluing tree
/// over the generator multiset.  Leaves carry one entry of the (sorted)
/// input multiset; a node records the merge of two blocks at the common
/// degree m = lcm(d_left, d_right), together with one factorization of the
/// degree over each side (coefficients aligned with the side's leaves in
/// (value, position) order; dividing the degree and the leaf values by the
/// side's gcd gives the scaled factorization).
struct GluingTree {
  bool leaf = true;
  Int value = 0;        // leaf payload
  size_t position = 0;  // index into the sorted input multiset

  Int d_left = 0;   // gcd of the left block
  Int d_right = 0;  // gcd of the right block
  Int degree = 0;   // relation degree of the merge
  int step = -1;    // merge order, 0-based
  std::vector<Int> left_factorization;
  std::vector<Int> right_factorization;
  std::unique_ptr<GluingTree> left, right;

  /// Leaves of the subtree in (value, position) order.
  std::vector<const GluingTree*> leaves() const;
  std::vector<Int> block_values() const;
};

struct CIFailure {
  enum class Reason { NoMatchingPair, DegreeNotLcm };
  Reason reason = Reason::NoMatchingPair;
  std::vector<std::vector<Int>> partition;  // blocks at the failing step
  std::vector<Int> m_values;                // m_L per block, aligned

  // DegreeNotLcm details: the matching pair whose degree is not the lcm.
  std::vector<Int> block_a, block_b;
  Int degree = 0;
  Int lcm = 0;
};

struct CIReport {
  bool is_ci = false;
  std::optional<GluingTree> tree;     // present on success
  std::optional<CIFailure> failure;   // present on failure
};

/// Delorme's algorithm on a generating multiset (the values must have gcd 1
/// but need not generate minimally and may repeat).  Starting from
/// singleton blocks, repeatedly merge two blocks L, L' whose degrees
/// m_L = min(S_L cap S_{complement}) agree and equal lcm(gcd L, gcd L');
/// S is a complete intersection exactly when the partition collapses to a
/// single block.  When several pairs qualify the one with the smallest
/// degree is merged, ties broken by block minima.
CIReport delorme_check(const std::vector<Int>& generators);

/// A defining binomial x^lhs - x^rhs of degree `degree`; exponents are
/// indexed by the position in the sorted generator multiset.
struct Binomial {
  std::vector<Int> lhs, rhs;
  Int degree = 0;
};

/// One binomial per gluing node, in merge order: the two factorizations of
/// the node degree lifted to ambient variables.
std::vector<Binomial> defining_binomials(const GluingTree& tree);

/// Renders like "x2^3 - x3^2  (deg 48)".
std::string format_binomial(const Binomial& b);

/// The gluing <d1 * S1, d2 * S2>.  Requires gcd(d1, d2) = 1 (NotCoprime),
/// d2 in S1 and d1 in S2 (MultiplierNotInPartner); the relation degree of
/// the glued presentation is d1 * d2.
NumericalSemigroup glue(const NumericalSemigroup& s1,
                        const NumericalSemigroup& s2, Int d1, Int d2);

/// Herzog-Kunz invariant m(S): the least possible sum of degrees of g - 1
/// linearly independent syzygy vectors.  Candidates are the pairwise
/// factorization differences in every degree up to the resolution bound;
/// a greedy pass in degree order is optimal (linear matroid).
struct HKData {
  Int m = 0;
  std::vector<Syzygy> chosen;  // g - 1 entries, degrees ascending
};

HKData herzog_kunz_m(const NumericalSemigroup& s);

/// Conductor identity: c <= m(S) - sum(a_i) + 1 always, with equality
/// exactly for complete intersections.
struct HKCheck {
  Int m = 0;
  Int conductor = 0;
  Int rhs = 0;  // m - sum of minimal generators + 1
  bool is_ci = false;
  std::vector<Syzygy> chosen;
};

HKCheck herzog_kunz_check(const NumericalSemigroup& s);

/// The fractional ideal D(S, h) = intersection of the principal ideals
/// (gamma) over gamma in Ap(S, h), tabulated on [0, bound].  D always
/// contains everything from h + 2c - 1 on and always sits inside the
/// shifted principal ideal (h + c - 1); equality holds exactly for
/// symmetric S, and D is principal exactly in that case.
struct SemimoduleWindow {
  Int h = 0;
  Int bound = 0;  // h + 2 * conductor
  std::vector<Int> apery;
  std::vector<bool> membership;  // [0, bound]
  bool equals_shifted_conductor_ideal = false;
  bool principal = false;
};

SemimoduleWindow dedekind_semimodule(const NumericalSemigroup& s, Int h);

}  // namespace nsgp
