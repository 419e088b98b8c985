#include "nsgp/semigroup.hpp"

#include <algorithm>
#include <numeric>
#include <sstream>

namespace nsgp {

namespace {

void validate_positive(const std::vector<Int>& generators) {
  if (generators.empty()) fail(ErrorCode::EmptyGenerators, "no generators given");
  for (Int a : generators) {
    if (a <= 0) {
      std::ostringstream os;
      os << "generator " << a << " is not a positive integer";
      fail(ErrorCode::ZeroGenerator, os.str());
    }
  }
}

Int gcd_all(const std::vector<Int>& values) {
  Int d = 0;
  for (Int v : values) d = std::gcd(d, v);
  return d;
}

// Reachability over the suffix of `desc` (values sorted descending) starting
// at position k; table[k][r] says r is a sum of values desc[k..].
std::vector<std::vector<bool>> suffix_reachability(const std::vector<Int>& desc,
                                                   Int target) {
  size_t n = desc.size();
  std::vector<std::vector<bool>> table(
      n + 1, std::vector<bool>(static_cast<size_t>(target) + 1, false));
  table[n][0] = true;
  for (size_t k = n; k-- > 0;) {
    for (Int r = 0; r <= target; ++r) {
      table[k][static_cast<size_t>(r)] =
          table[k + 1][static_cast<size_t>(r)] ||
          (r >= desc[k] && table[k][static_cast<size_t>(r - desc[k])]);
    }
  }
  return table;
}

}  // namespace

std::vector<Int> normalize(std::vector<Int> generators) {
  validate_positive(generators);
  Int d = gcd_all(generators);
  for (Int& a : generators) a /= d;
  return generators;
}

std::vector<bool> monoid_table(const std::vector<Int>& gens, Int bound) {
  std::vector<bool> table(static_cast<size_t>(bound) + 1, false);
  table[0] = true;
  for (Int n = 1; n <= bound; ++n) {
    for (Int a : gens) {
      if (a <= n && table[static_cast<size_t>(n - a)]) {
        table[static_cast<size_t>(n)] = true;
        break;
      }
    }
  }
  return table;
}

NumericalSemigroup::NumericalSemigroup(std::vector<Int> generators) {
  validate_positive(generators);
  std::sort(generators.begin(), generators.end());
  generators.erase(std::unique(generators.begin(), generators.end()),
                   generators.end());
  Int d = gcd_all(generators);
  if (d != 1) {
    std::ostringstream os;
    os << "generators have gcd " << d
       << "; divide by it first (see normalize)";
    fail(ErrorCode::GcdNotOne, os.str());
  }
  generators_ = generators;

  // Sieve until multiplicity() consecutive members appear: past that run
  // every integer is a member, so the run start is the conductor.
  Int least = generators_.front();
  Int maxgen = generators_.back();
  Int cap = 2 * maxgen + 2;
  for (;;) {
    membership_ = monoid_table(generators_, cap);
    Int run = 0;
    conductor_ = -1;
    for (Int n = 0; n <= cap; ++n) {
      run = membership_[static_cast<size_t>(n)] ? run + 1 : 0;
      if (run == least) {
        conductor_ = n - least + 1;
        break;
      }
    }
    if (conductor_ >= 0 && conductor_ + maxgen <= cap) break;
    cap *= 2;
  }
  membership_.resize(static_cast<size_t>(conductor_ + maxgen) + 1);
  genus_ = 0;
  for (Int n = 0; n < conductor_; ++n) {
    if (!membership_[static_cast<size_t>(n)]) ++genus_;
  }

  // Minimal generators are the members of S* that are not sums of two
  // members of S*; they form a subset of any generating set.
  for (Int a : generators_) {
    bool decomposable = false;
    for (Int b = least; 2 * b <= a; ++b) {
      if (contains(b) && contains(a - b)) {
        decomposable = true;
        break;
      }
    }
    if (!decomposable) minimal_generators_.push_back(a);
  }
}

std::vector<Int> NumericalSemigroup::gaps() const {
  std::vector<Int> out;
  for (Int n = 0; n < conductor_; ++n) {
    if (!membership_[static_cast<size_t>(n)]) out.push_back(n);
  }
  return out;
}

std::vector<Int> NumericalSemigroup::elements_up_to(Int bound) const {
  std::vector<Int> out;
  for (Int n = 0; n <= bound; ++n) {
    if (contains(n)) out.push_back(n);
  }
  return out;
}

std::vector<Int> NumericalSemigroup::apery_set(Int s) const {
  if (s == 0) fail(ErrorCode::ZeroArgument, "Apery set needs a nonzero element");
  if (!contains(s)) {
    std::ostringstream os;
    os << s << " is not an element of the semigroup";
    fail(ErrorCode::NotAnElement, os.str());
  }
  std::vector<Int> out;
  out.reserve(static_cast<size_t>(s));
  for (Int r = 0; r < s; ++r) {
    Int w = -1;
    for (Int n = r; n < conductor_; n += s) {
      if (contains(n)) {
        w = n;
        break;
      }
    }
    if (w < 0) {
      // First member of the class at or beyond the conductor.
      w = conductor_ + ((r - conductor_) % s + s) % s;
    }
    out.push_back(w);
  }
  std::sort(out.begin(), out.end());
  return out;
}

NumericInvariants numeric_invariants(const NumericalSemigroup& s) {
  return {s.frobenius(), s.conductor(), s.genus(), s.delta(), s.milnor()};
}

namespace {

// Free-chain data for a prefix ordering; grows one generator at a time.
struct FreeSearch {
  const NumericalSemigroup* s;
  std::vector<Int> ordering;
  std::vector<Int> n;
  std::vector<Int> degrees;
  std::vector<std::vector<Int>> ell;
  Int gcd_prefix = 0;

  // Tries to extend by `a`; fills `witness` (aligned with the prefix) when
  // n_i * a_i factors over the prefix, greedily largest-generator-first.
  bool extend_step(Int a, Int* n_i, std::vector<Int>* witness) const {
    Int d = std::gcd(gcd_prefix, a);
    Int ni = gcd_prefix / d;
    if (ni == 1) return false;
    Int target = ni * a;

    std::vector<size_t> by_value(ordering.size());
    std::iota(by_value.begin(), by_value.end(), size_t{0});
    std::sort(by_value.begin(), by_value.end(), [&](size_t x, size_t y) {
      return ordering[x] > ordering[y];
    });
    std::vector<Int> desc;
    for (size_t idx : by_value) desc.push_back(ordering[idx]);

    auto reach = suffix_reachability(desc, target);
    if (!reach[0][static_cast<size_t>(target)]) return false;

    std::vector<Int> counts(ordering.size(), 0);
    Int rem = target;
    for (size_t k = 0; k < desc.size(); ++k) {
      Int m = rem / desc[k];
      while (m > 0 && !reach[k + 1][static_cast<size_t>(rem - m * desc[k])])
        --m;
      counts[by_value[k]] = m;
      rem -= m * desc[k];
    }
    *n_i = ni;
    *witness = counts;
    return true;
  }

  void push(Int a, Int n_i, std::vector<Int> witness) {
    if (ordering.empty()) {
      gcd_prefix = a;
    } else {
      n.push_back(n_i);
      degrees.push_back(n_i * a);
      ell.push_back(std::move(witness));
      gcd_prefix = std::gcd(gcd_prefix, a);
    }
    ordering.push_back(a);
  }

  FreeData data() const { return {ordering, n, degrees, ell}; }
};

}  // namespace

std::optional<FreeData> is_free(const NumericalSemigroup& s,
                                const std::vector<Int>& ordering) {
  std::vector<Int> sorted = ordering;
  std::sort(sorted.begin(), sorted.end());
  if (sorted != s.minimal_generators()) {
    fail(ErrorCode::NotAPermutation,
         "ordering is not a permutation of the minimal generators");
  }
  FreeSearch search{&s, {}, {}, {}, {}, 0};
  for (Int a : ordering) {
    if (search.ordering.empty()) {
      search.push(a, 0, {});
      continue;
    }
    Int n_i = 0;
    std::vector<Int> witness;
    if (!search.extend_step(a, &n_i, &witness)) return std::nullopt;
    search.push(a, n_i, std::move(witness));
  }
  return search.data();
}

const char* to_string(BranchClass c) {
  switch (c) {
    case BranchClass::PlaneBranch: return "plane branch";
    case BranchClass::AtInfinity: return "branch at infinity";
    case BranchClass::FreeOther: return "free (no strict chain)";
    case BranchClass::NotFree: return "not free";
  }
  return "?";
}

namespace {

// Depth-first search over orderings, pruned by the free condition on the
// prefix; stops as soon as a plane-branch witness appears.
struct BranchSearch {
  const std::vector<Int>* gens;
  BranchReport report;
  bool done = false;

  void visit(FreeSearch& prefix, std::vector<char>& used, bool plane_ok,
             bool atinf_ok) {
    if (done) return;
    size_t g = gens->size();
    if (prefix.ordering.size() == g) {
      if (plane_ok) {
        report = {BranchClass::PlaneBranch, prefix.data()};
        done = true;
      } else if (atinf_ok && report.cls != BranchClass::AtInfinity) {
        report = {BranchClass::AtInfinity, prefix.data()};
      } else if (report.cls == BranchClass::NotFree) {
        report = {BranchClass::FreeOther, prefix.data()};
      }
      return;
    }
    // A branch that can no longer reach a better class than what we already
    // hold is dead.
    if (!plane_ok &&
        (report.cls == BranchClass::AtInfinity ||
         (!atinf_ok && report.cls != BranchClass::NotFree))) {
      return;
    }
    for (size_t j = 0; j < g; ++j) {
      if (used[j]) continue;
      Int a = (*gens)[j];
      size_t i = prefix.ordering.size() + 1;  // position being filled
      Int n_i = 0;
      std::vector<Int> witness;
      if (i == 1) {
        used[j] = 1;
        FreeSearch next = prefix;
        next.push(a, 0, {});
        visit(next, used, plane_ok, atinf_ok);
        used[j] = 0;
        continue;
      }
      if (!prefix.extend_step(a, &n_i, &witness)) continue;
      // Chain condition j = i-1 becomes checkable once a_i is placed.
      bool p = plane_ok, q = atinf_ok;
      if (i >= 3) {
        Int prev = prefix.degrees.back();
        p = p && prev < a;
        q = q && prev > a;
      }
      used[j] = 1;
      FreeSearch next = prefix;
      next.push(a, n_i, std::move(witness));
      visit(next, used, p, q);
      used[j] = 0;
      if (done) return;
    }
  }
};

}  // namespace

BranchReport classify_branch(const NumericalSemigroup& s) {
  const std::vector<Int>& gens = s.minimal_generators();
  BranchSearch search{&gens, {}, false};
  FreeSearch prefix{&s, {}, {}, {}, {}, 0};
  std::vector<char> used(gens.size(), 0);
  search.visit(prefix, used, true, true);
  return search.report;
}

const char* to_string(ErrorCode code) {
  switch (code) {
    case ErrorCode::EmptyGenerators: return "EmptyGenerators";
    case ErrorCode::ZeroGenerator: return "ZeroGenerator";
    case ErrorCode::GcdNotOne: return "GcdNotOne";
    case ErrorCode::NotAnElement: return "NotAnElement";
    case ErrorCode::ZeroArgument: return "ZeroArgument";
    case ErrorCode::NotAPermutation: return "NotAPermutation";
    case ErrorCode::NotCoprime: return "NotCoprime";
    case ErrorCode::MultiplierNotInPartner: return "MultiplierNotInPartner";
    case ErrorCode::NotLSpaceShape: return "NotLSpaceShape";
    case ErrorCode::QuotientNotIndicator: return "QuotientNotIndicator";
    case ErrorCode::ZeroPolynomial: return "ZeroPolynomial";
    case ErrorCode::InternalInconsistency: return "InternalInconsistency";
  }
  return "?";
}

}  // namespace nsgp
