#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include <numeric>

#include "nsgp/ci.hpp"
#include "nsgp/knots.hpp"
#include "nsgp/series.hpp"
#include "support/random_semigroups.hpp"

using namespace nsgp;
using namespace nsgp::test;

namespace {

/// Independent identity: (1 - t) P_S = 1 - (1 - t) * sum over gaps of t^l.
IntPolynomial alexander_via_gaps(const NumericalSemigroup& s) {
  IntPolynomial gap_sum;
  for (Int l : s.gaps()) gap_sum = gap_sum + IntPolynomial::monomial(l);
  return IntPolynomial::one() - one_minus_power(1) * gap_sum;
}

bool same_set(const FormalSemigroup& f, const NumericalSemigroup& s) {
  Int bound = std::max(f.tail_from, s.conductor()) + 5;
  for (Int n = -2; n <= bound; ++n) {
    if (f.contains(n) != s.contains(n)) return false;
  }
  return true;
}

}  // namespace

TEST_CASE("Alexander polynomial of the worked examples") {
  CHECK(alexander_from_semigroup(NumericalSemigroup({2, 3})) ==
        parse_polynomial("1-t+t^2"));
  CHECK(alexander_from_semigroup(NumericalSemigroup({1})) ==
        IntPolynomial::one());

  IntPolynomial d = alexander_from_semigroup(NumericalSemigroup({4, 6, 13}));
  CHECK(d.degree() == 16);
  CHECK(d.coeff(0) == 1);
  CHECK(d.coeff(16) == 1);
  CHECK(d == d.reversed());  // symmetric semigroup: palindromic polynomial

  for (const auto& gens : random_generator_sets(60, 0xa1a1a1ULL)) {
    CAPTURE(gens);
    NumericalSemigroup s(gens);
    IntPolynomial a = alexander_from_semigroup(s);
    CHECK(a == alexander_via_gaps(s));
    CHECK(a.degree() == s.conductor());
    CHECK(a.coeff(0) == 1);
    CHECK((a == a.reversed()) == s.is_symmetric());
  }
}

TEST_CASE("normalization to the alternating form") {
  AlexanderForm form = normalize_alexander(parse_polynomial("1-t+t^3-t^4+t^5-t^7+t^8"));
  CHECK(form.exponents == std::vector<Int>{0, 1, 3, 4, 5, 7, 8});
  CHECK(form.poly == parse_polynomial("1-t+t^3-t^4+t^5-t^7+t^8"));

  // Unit multiples normalize to the same form.
  IntPolynomial shifted =
      parse_polynomial("1-t+t^2") * IntPolynomial::monomial(4);
  CHECK(normalize_alexander(shifted).poly == parse_polynomial("1-t+t^2"));
  CHECK(normalize_alexander(-shifted).poly == parse_polynomial("1-t+t^2"));
  CHECK(normalize_alexander(parse_polynomial("-1+t-t^2")).poly ==
        parse_polynomial("1-t+t^2"));

  CHECK(normalize_alexander(IntPolynomial::one()).exponents ==
        std::vector<Int>{0});

  CHECK_THROWS_AS(normalize_alexander(IntPolynomial::zero()), Error);
  for (const char* bad : {"1+t", "1-2*t", "1-t+t^2+t^3", "1-t-t^2"}) {
    CAPTURE(bad);
    try {
      normalize_alexander(parse_polynomial(bad));
      FAIL("expected NotLSpaceShape");
    } catch (const Error& e) {
      CHECK(e.code() == ErrorCode::NotLSpaceShape);
    }
  }
}

TEST_CASE("indicator expansion and its failure modes") {
  FormalSemigroup f =
      formal_semigroup_from_alexander(normalize_alexander(parse_polynomial("1-t+t^2")));
  CHECK(f.sporadic == std::vector<Int>{0});
  CHECK(f.tail_from == 2);
  CHECK(f.closed);
  CHECK_FALSE(f.witness.has_value());
  CHECK(f.contains(0));
  CHECK_FALSE(f.contains(1));
  CHECK(f.contains(2));
  CHECK(f.contains(100));
  CHECK_FALSE(f.contains(-3));

  // 1 - t expands to 1 + 0*t + ...: the indicator of {0}, not cofinite.
  try {
    formal_semigroup_from_alexander(normalize_alexander(parse_polynomial("1-t")));
    FAIL("expected QuotientNotIndicator");
  } catch (const Error& e) {
    CHECK(e.code() == ErrorCode::QuotientNotIndicator);
  }
}

TEST_CASE("pretzel example is not closed under addition") {
  FormalSemigroup f = pretzel_example();
  CHECK(f.sporadic == std::vector<Int>{0, 3, 5, 7, 8});
  CHECK(f.tail_from == 10);
  CHECK_FALSE(f.closed);
  REQUIRE(f.witness.has_value());
  CHECK(*f.witness == std::pair<Int, Int>{3, 3});

  ClosureReport closure = is_true_semigroup(f);
  CHECK_FALSE(closure.closed);
  CHECK(*closure.witness == std::pair<Int, Int>{3, 3});

  RealizabilityReport report = realizability_necessary(f);
  CHECK_FALSE(report.is_semigroup);
  CHECK_FALSE(report.symmetric.has_value());
  CHECK_FALSE(report.passes);
  CHECK_FALSE(report.semigroup.has_value());

  // Same data via explicit parsing of the coefficient list.
  AlexanderForm form = normalize_alexander(
      parse_polynomial("1,-1,0,1,-1,1,-1,1,0,-1,1"));
  FormalSemigroup g = formal_semigroup_from_alexander(form);
  CHECK(g.sporadic == f.sporadic);
  CHECK(g.tail_from == f.tail_from);
}

TEST_CASE("round trip from semigroup through Alexander and back") {
  for (const auto& gens : random_generator_sets(80, 0xc0ffeeULL)) {
    CAPTURE(gens);
    NumericalSemigroup s(gens);
    AlexanderForm form = normalize_alexander(alexander_from_semigroup(s));
    FormalSemigroup f = formal_semigroup_from_alexander(form);
    CHECK(f.closed);
    CHECK(same_set(f, s));

    RealizabilityReport report = realizability_necessary(f);
    CHECK(report.is_semigroup);
    REQUIRE(report.symmetric.has_value());
    CHECK(*report.symmetric == s.is_symmetric());
    CHECK(report.passes == s.is_symmetric());
    REQUIRE(report.semigroup.has_value());
    CHECK(report.semigroup->minimal_generators() == s.minimal_generators());
  }
}

TEST_CASE("torus knot identity") {
  CHECK(torus_alexander(2, 3) == parse_polynomial("1-t+t^2"));
  CHECK(torus_alexander(3, 5) == parse_polynomial("1-t+t^3-t^4+t^5-t^7+t^8"));
  for (Int p = 2; p <= 12; ++p) {
    for (Int q = p + 1; q <= 12; ++q) {
      if (std::gcd(p, q) != 1) continue;
      CAPTURE(p);
      CAPTURE(q);
      CHECK(torus_alexander(p, q) ==
            alexander_from_semigroup(NumericalSemigroup({p, q})));
    }
  }
  CHECK_THROWS_AS(torus_alexander(4, 6), Error);
  CHECK_THROWS_AS(torus_alexander(0, 5), Error);
  CHECK_THROWS_AS(torus_alexander(3, -2), Error);
}

TEST_CASE("family A members are complete intersections") {
  for (Int n = 1; n <= 10; ++n) {
    CAPTURE(n);
    NumericalSemigroup s = teragaito_family(TeragaitoFamily::A, n);
    CHECK(s.minimal_generators() ==
          std::vector<Int>{4, 4 * n + 2, 4 * n + 5});
    CHECK(s.is_symmetric());
    CHECK(delorme_check(s.minimal_generators()).is_ci);
    CHECK(herzog_kunz_check(s).is_ci);
  }
}

TEST_CASE("family B members are symmetric but not complete intersections") {
  for (Int n = 1; n <= 10; ++n) {
    CAPTURE(n);
    NumericalSemigroup s = teragaito_family(TeragaitoFamily::B, n);
    CHECK(s.minimal_generators() ==
          std::vector<Int>{6, 6 * n + 4, 6 * n + 8, 12 * n + 11, 12 * n + 15});
    CHECK(s.is_symmetric());
    CHECK_FALSE(herzog_kunz_check(s).is_ci);

    CIReport report = delorme_check(s.minimal_generators());
    CHECK_FALSE(report.is_ci);
    REQUIRE(report.failure.has_value());
    CHECK(report.failure->reason == CIFailure::Reason::NoMatchingPair);
    // Pairwise distinct m-values block the very first merge.
    CHECK(report.failure->m_values ==
          std::vector<Int>{12 * n + 12, 12 * n + 8, 12 * n + 16, 24 * n + 22,
                           24 * n + 30});
  }
  CHECK_THROWS_AS(teragaito_family(TeragaitoFamily::B, 0), Error);
  CHECK_THROWS_AS(teragaito_family(TeragaitoFamily::A, -1), Error);
}
