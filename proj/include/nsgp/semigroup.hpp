#pragma once

#include <optional>
#include <vector>

#include "nsgp/error.hpp"

namespace nsgp {

using Int = long long;

/// Divides a generating multiset by its gcd (the escape hatch for inputs
/// describing a sub-monoid of d*N rather than a numerical semigroup).
std::vector<Int> normalize(std::vector<Int> generators);

/// Membership table [0..bound] for the additive monoid generated by `gens`.
/// No gcd-1 requirement; entries outside every residue class stay false.
std::vector<bool> monoid_table(const std::vector<Int>& gens, Int bound);

/// A numerical semigroup S = <a_1,...,a_k>, gcd(a_i) = 1.  Membership below
/// conductor + max generator is cached; everything >= conductor is in S.
class NumericalSemigroup {
 public:
  /// Throws EmptyGenerators, ZeroGenerator, GcdNotOne.
  explicit NumericalSemigroup(std::vector<Int> generators);

  /// Input generators, sorted and deduplicated.
  const std::vector<Int>& generators() const { return generators_; }

  /// The unique minimal generating set (elements of S* not in S* + S*).
  const std::vector<Int>& minimal_generators() const {
    return minimal_generators_;
  }

  Int embedding_dim() const {
    return static_cast<Int>(minimal_generators_.size());
  }
  Int multiplicity() const { return minimal_generators_.front(); }

  bool contains(Int n) const {
    if (n < 0) return false;
    if (n >= conductor_) return true;
    return membership_[static_cast<size_t>(n)];
  }

  /// Largest integer not in S; -1 when S = N.
  Int frobenius() const { return conductor_ - 1; }
  Int conductor() const { return conductor_; }
  /// Number of gaps.
  Int genus() const { return genus_; }
  /// The delta invariant of the associated monomial curve equals the genus.
  Int delta() const { return genus_; }
  /// Milnor number of the (unibranch) curve singularity: mu = 2*delta.
  Int milnor() const { return 2 * genus_; }
  Int elements_below_conductor() const { return conductor_ - genus_; }

  /// x in S  <=>  F - x not in S  <=>  c = 2 * genus.
  bool is_symmetric() const { return conductor_ == 2 * genus_; }

  /// Gaps of S in increasing order.
  std::vector<Int> gaps() const;

  /// Elements of S in [0, bound], increasing.
  std::vector<Int> elements_up_to(Int bound) const;

  /// Apery set Ap(S, s) = { w in S : w - s not in S }, sorted increasing;
  /// one element per residue class mod s.  Throws ZeroArgument when s = 0,
  /// NotAnElement when s not in S.
  std::vector<Int> apery_set(Int s) const;

 private:
  std::vector<Int> generators_;
  std::vector<Int> minimal_generators_;
  std::vector<bool> membership_;  // covers [0, conductor + max generator]
  Int conductor_ = 0;
  Int genus_ = 0;
};

/// Invariants of S and of the monomial curve branch it parametrizes.
struct NumericInvariants {
  Int frobenius;
  Int conductor;
  Int genus;
  Int delta;
  Int milnor;
};

NumericInvariants numeric_invariants(const NumericalSemigroup& s);

/// Certificate that S is free for a fixed ordering (a_1,...,a_g) of its
/// minimal generators: with d_i = gcd(a_1..a_i) and n_i = d_{i-1}/d_i,
/// every n_i > 1 and n_i * a_i lies in <a_1,...,a_{i-1}>.
struct FreeData {
  std::vector<Int> ordering;
  std::vector<Int> n;                 // n_2..n_g
  std::vector<Int> relation_degrees;  // m_i = n_i * a_i
  // ell[i-2] witnesses n_i * a_i = sum_j ell[i-2][j] * a_{j+1}, j < i-1,
  // chosen greedily largest-generator-first.
  std::vector<std::vector<Int>> ell;
};

/// Tests freeness under one ordering (must be a permutation of the minimal
/// generators; throws NotAPermutation otherwise).
std::optional<FreeData> is_free(const NumericalSemigroup& s,
                                const std::vector<Int>& ordering);

enum class BranchClass { PlaneBranch, AtInfinity, FreeOther, NotFree };

const char* to_string(BranchClass c);

/// PlaneBranch when some free ordering satisfies n_i a_i < a_{i+1} for all
/// 2 <= i <= g-1 (the plane-branch chain), AtInfinity when some free ordering
/// satisfies n_i a_i > a_{i+1} on that range, FreeOther when free but no
/// strict chain holds.  PlaneBranch takes precedence over AtInfinity.
struct BranchReport {
  BranchClass cls = BranchClass::NotFree;
  std::optional<FreeData> witness;
};

BranchReport classify_branch(const NumericalSemigroup& s);

}  // namespace nsgp
