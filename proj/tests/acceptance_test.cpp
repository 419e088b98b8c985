// Acceptance suite: one pass/fail line per criterion, nonzero exit on any
// failure.  Everything is exact integer equality; there are no tolerances.

#include <algorithm>
#include <functional>
#include <iostream>
#include <numeric>
#include <sstream>
#include <string>
#include <vector>

#include "cli_main.hpp"
#include "nsgp/ci.hpp"
#include "nsgp/deformation.hpp"
#include "nsgp/io.hpp"
#include "nsgp/knots.hpp"
#include "nsgp/resolution.hpp"
#include "nsgp/semigroup.hpp"
#include "nsgp/series.hpp"
#include "support/facet_tables.hpp"
#include "support/random_semigroups.hpp"
#include "support/t1_oracle.hpp"

using namespace nsgp;
using namespace nsgp::test;

namespace {

int failed_criteria = 0;
std::vector<std::string> notes;

void expect(bool ok, const std::string& what) {
  if (!ok) notes.push_back(what);
}

void criterion(int n, const std::string& label,
               const std::function<void()>& body) {
  notes.clear();
  try {
    body();
  } catch (const std::exception& e) {
    notes.push_back(std::string("exception: ") + e.what());
  }
  if (notes.empty()) {
    std::cout << "criterion " << n << ": PASS - " << label << '\n';
    return;
  }
  ++failed_criteria;
  std::cout << "criterion " << n << ": FAIL - " << label << '\n';
  size_t shown = 0;
  for (const std::string& note : notes) {
    if (++shown > 6) {
      std::cout << "    ... " << notes.size() - 6 << " more\n";
      break;
    }
    std::cout << "    " << note << '\n';
  }
}

std::string join(const std::vector<Int>& values) {
  std::ostringstream out;
  for (size_t i = 0; i < values.size(); ++i) {
    if (i) out << ',';
    out << values[i];
  }
  return out.str();
}

std::vector<Int> tree_degrees(const GluingTree& tree) {
  std::vector<Int> out;
  for (const Binomial& b : defining_binomials(tree)) out.push_back(b.degree);
  return out;
}

/// Betti diagram assembled degree by degree, with the Euler identity and the
/// factorization-component count checked along the way.
void check_diagram_properties(const NumericalSemigroup& s,
                              const BettiDiagram& diagram) {
  Int g = s.embedding_dim();
  Int theta = degree_bound(s);
  for (Int m = 0; m <= theta + 3; ++m) {
    ShadedComplex delta = shaded_complex(s, m);
    std::vector<Int> dims = reduced_homology_dims(delta);

    // Euler characteristic: alternating face count equals alternating
    // homology sum (indices shifted so slot j counts j-vertex faces).
    std::vector<Int> faces(static_cast<size_t>(g) + 1, 0);
    for (std::uint64_t mask : delta.faces)
      ++faces[static_cast<size_t>(__builtin_popcountll(mask))];
    Int lhs = 0, rhs = 0, sign = 1;
    for (size_t j = 0; j <= static_cast<size_t>(g); ++j) {
      lhs += sign * faces[j];
      rhs += sign * dims[j];
      sign = -sign;
    }
    if (lhs != rhs)
      expect(false, "Euler identity fails for <" + join(s.minimal_generators()) +
                        "> at degree " + std::to_string(m));

    // Homology against the tabulated diagram; past theta the complex is a
    // full simplex and every reduced group must vanish.
    for (size_t j = 0; j < dims.size(); ++j) {
      Int i = static_cast<Int>(j) - 1;
      Int expected = m > theta          ? 0
                     : i >= 0           ? diagram.beta(i, m)
                                        : dims[j];
      if (dims[j] != expected)
        expect(false, "betti mismatch for <" + join(s.minimal_generators()) +
                          "> at (i=" + std::to_string(i) +
                          ", m=" + std::to_string(m) + ")");
    }

    // Degreewise: components of the factorization graph vs the 0-column.
    if (s.contains(m) && m <= theta) {
      auto facts = factorizations(s, m);
      auto comp = factorization_components(facts);
      Int components = comp.empty() ? 0 : *std::max_element(comp.begin(), comp.end()) + 1;
      if (components - 1 != diagram.beta(0, m))
        expect(false, "component count vs beta_0 for <" +
                          join(s.minimal_generators()) + "> at degree " +
                          std::to_string(m));
    }
  }
}

}  // namespace

int main() {
  const std::vector<std::vector<Int>> paper = {
      {5, 7, 9}, {15, 16, 24, 28}, {6, 8, 10, 17, 19}};

  criterion(1, "<5,7,9>: diagram, tabulated complexes, both CI detectors", [&] {
    NumericalSemigroup s({5, 7, 9});
    expect(s.conductor() == 14, "conductor");

    BettiDiagram d = betti_diagram(s);
    std::map<std::pair<Int, Int>, Int> entries = {
        {{0, 14}, 1}, {{0, 25}, 1}, {{0, 27}, 1}, {{1, 32}, 1}, {{1, 34}, 1}};
    expect(d.entries == entries, "Betti support");

    for (const auto& [m, maximal] : facet_table_579()) {
      if (face_set(shaded_complex(s, m)) != facet_closure(maximal))
        expect(false, "complex at degree " + std::to_string(m));
    }
    for (Int m : {35, 40})
      expect(face_set(shaded_complex(s, m)) == facet_closure({7}),
             "full simplex past theta");

    expect(herzog_kunz_m(s).m == 39, "m(S)");
    HKCheck hk = herzog_kunz_check(s);
    expect(hk.conductor == 14 && hk.rhs == 19 && !hk.is_ci,
           "conductor identity strict");
    expect(!delorme_check({5, 7, 9}).is_ci, "gluing verdict");
  });

  criterion(2, "<15,16,24,28>: gluing certificate, m(S), freeness, Koszul", [&] {
    NumericalSemigroup s({15, 16, 24, 28});
    CIReport report = delorme_check({15, 16, 24, 28});
    expect(report.is_ci && report.tree.has_value(), "is a complete intersection");
    if (report.tree) {
      expect(tree_degrees(*report.tree) == std::vector<Int>{48, 56, 60},
             "merge degrees");
      std::vector<std::string> rendered;
      for (const Binomial& b : defining_binomials(*report.tree))
        rendered.push_back(format_binomial(b));
      expect(rendered == std::vector<std::string>{"x2^3 - x3^2  (deg 48)",
                                                  "x2^2x3 - x4^2  (deg 56)",
                                                  "x1^4 - x2^2x4  (deg 60)"},
             "defining binomials");
    }
    expect(herzog_kunz_m(s).m == 164, "m(S)");
    HKCheck hk = herzog_kunz_check(s);
    expect(hk.conductor == 82 && hk.rhs == 82 && hk.is_ci,
           "conductor identity equality");
    expect(is_free(s, {16, 24, 28, 15}).has_value(),
           "free under the ordering (16,24,28,15)");
    expect(betti_diagram(s).entries ==
               ci_predicted_diagram({48, 56, 60}).entries,
           "Koszul diagram");
  });

  criterion(3, "<6,8,10,17,19>: distinct m-values stop the first merge", [&] {
    CIReport report = delorme_check({6, 8, 10, 17, 19});
    expect(!report.is_ci, "not a complete intersection");
    expect(report.failure.has_value(), "failure certificate present");
    if (report.failure) {
      expect(report.failure->partition.size() == 5, "fails at step one");
      expect(report.failure->m_values == std::vector<Int>{18, 16, 20, 34, 38},
             "m-values");
    }
  });

  criterion(4, "families A (CI) and B (symmetric, not CI) for n = 1..10", [&] {
    for (Int n = 1; n <= 10; ++n) {
      NumericalSemigroup a = teragaito_family(TeragaitoFamily::A, n);
      if (!delorme_check(a.generators()).is_ci ||
          !herzog_kunz_check(a).is_ci)
        expect(false, "family A not CI at n = " + std::to_string(n));

      NumericalSemigroup b = teragaito_family(TeragaitoFamily::B, n);
      if (!b.is_symmetric())
        expect(false, "family B not symmetric at n = " + std::to_string(n));
      CIReport report = delorme_check(b.generators());
      if (report.is_ci || herzog_kunz_check(b).is_ci)
        expect(false, "family B spuriously CI at n = " + std::to_string(n));
      std::vector<Int> want = {12 * n + 12, 12 * n + 8, 12 * n + 16,
                               24 * n + 22, 24 * n + 30};
      if (!report.failure || report.failure->m_values != want)
        expect(false, "family B m-values at n = " + std::to_string(n));
    }
  });

  criterion(5, "pretzel set {0,3,5,7,8,10} + tail is not closed", [&] {
    FormalSemigroup f = pretzel_example();
    expect(f.sporadic == std::vector<Int>{0, 3, 5, 7, 8}, "sporadic part");
    expect(f.tail_from == 10, "tail start");
    expect(f.contains(10) && !f.contains(9), "tail membership");
    expect(!f.closed, "not closed");
    expect(f.witness && *f.witness == std::pair<Int, Int>{3, 3},
           "witness 3 + 3");
  });

  criterion(6, "torus knot polynomial identity for coprime p < q <= 12", [&] {
    for (Int p = 2; p <= 12; ++p) {
      for (Int q = p + 1; q <= 12; ++q) {
        if (std::gcd(p, q) != 1) continue;
        if (torus_alexander(p, q) !=
            alexander_from_semigroup(NumericalSemigroup({p, q})))
          expect(false, "mismatch at (" + std::to_string(p) + ", " +
                            std::to_string(q) + ")");
      }
    }
  });

  auto suite = random_generator_sets(200);

  criterion(7, "property suite over 200 random semigroups", [&] {
    for (const auto& gens : suite) {
      NumericalSemigroup s(gens);
      std::string tag = "<" + join(s.minimal_generators()) + ">";

      // (a), (b): conductor inequality and detector agreement.
      HKCheck hk = herzog_kunz_check(s);
      if (hk.conductor > hk.rhs) expect(false, "HK inequality " + tag);
      bool delorme_ci = delorme_check(s.minimal_generators()).is_ci;
      if (delorme_ci != (hk.conductor == hk.rhs))
        expect(false, "detector disagreement " + tag);
      if (delorme_ci != hk.is_ci) expect(false, "HK verdict flag " + tag);

      // (c): four equivalent symmetry readings.
      BettiDiagram diagram = betti_diagram(s);
      bool sym = s.is_symmetric();
      if (square_is_symmetric(diagram) != sym)
        expect(false, "square symmetry " + tag);
      if (gorenstein_functional_check(s) != sym)
        expect(false, "palindromic numerator " + tag);
      if ((s.conductor() == 2 * s.genus()) != sym)
        expect(false, "conductor = 2 genus " + tag);

      // (d), (e): component counts and Euler identity, degree by degree.
      check_diagram_properties(s, diagram);
    }

    // (f): gluing series identity on at least 50 random valid gluings.
    std::vector<NumericalSemigroup> small;
    for (const auto& gens : suite) {
      NumericalSemigroup s(gens);
      if (s.conductor() <= 150) small.push_back(std::move(s));
    }
    size_t glued = 0;
    for (size_t i = 0; i + 1 < small.size() && glued < 50; ++i) {
      const NumericalSemigroup& s1 = small[i];
      const NumericalSemigroup& s2 = small[i + 1];
      Int d1 = s2.multiplicity();
      Int d2 = 0;
      for (Int x : s1.elements_up_to(s1.conductor() + d1)) {
        if (x >= 2 && std::gcd(x, d1) == 1) {
          d2 = x;
          break;
        }
      }
      if (d2 == 0) continue;
      if (glue(s1, s2, d1, d2).conductor() + d1 * d2 > 3000) continue;
      if (!gluing_series_check(s1, s2, d1, d2))
        expect(false, "gluing series identity for <" +
                          join(s1.minimal_generators()) + "> and <" +
                          join(s2.minimal_generators()) + ">");
      ++glued;
    }
    expect(glued >= 50, "at least 50 gluings checked");

    // (g): iterated gluings: numerator factorization and cyclotomic test.
    for (const NumericalSemigroup& s :
         random_complete_intersections(30, 0xacce55edULL)) {
      std::string tag = "<" + join(s.minimal_generators()) + ">";
      CIReport report = delorme_check(s.minimal_generators());
      if (!report.is_ci) {
        expect(false, "glued semigroup not CI " + tag);
        continue;
      }
      if (!ci_numerator_check(s, tree_degrees(*report.tree)))
        expect(false, "CI numerator factorization " + tag);
      if (!cyclotomic_test(hilbert_numerator(s)))
        expect(false, "cyclotomic numerator " + tag);
    }

    // (h): pairwise coprime embedding dimension 3 is never CI.
    size_t triples = 0;
    for (Int a = 2; a <= 12; ++a) {
      for (Int b = a + 1; b <= 13; ++b) {
        for (Int c = b + 1; c <= 14; ++c) {
          if (std::gcd(a, b) != 1 || std::gcd(a, c) != 1 ||
              std::gcd(b, c) != 1)
            continue;
          NumericalSemigroup s({a, b, c});
          if (s.embedding_dim() != 3) continue;
          ++triples;
          if (delorme_check({a, b, c}).is_ci ||
              herzog_kunz_check(s).is_ci)
            expect(false, "coprime triple CI <" + join({a, b, c}) + ">");
        }
      }
    }
    expect(triples >= 20, "enough coprime triples");
  });

  criterion(8, "graded T1 against the independent rational oracle", [&] {
    T1Spectrum cusp = t1_spectrum(NumericalSemigroup({2, 3}));
    expect(cusp.dims == std::map<Int, Int>{{-6, 1}, {-4, 1}},
           "<2,3> spectrum");

    size_t compared = 0;
    for (const auto& gens : suite) {
      NumericalSemigroup s(gens);
      std::string tag = "<" + join(s.minimal_generators()) + ">";
      SyzygyData relations = minimal_relations(s);
      if (t1_dimension(s, relations, 0) != 0)
        expect(false, "T1(0) != 0 for " + tag);
      if (s.conductor() > 30 || s.embedding_dim() > 3) continue;
      T1OracleResult oracle = oracle_t1(s);
      T1Spectrum spectrum = t1_spectrum(s);
      if (spectrum.dims != oracle.dims || spectrum.tau != oracle.tau)
        expect(false, "oracle mismatch for " + tag);
      ++compared;
    }
    expect(compared >= 30, "enough small semigroups compared");
  });

  criterion(9, "round trips: semigroup recovery and JSON byte identity", [&] {
    for (const auto& gens : suite) {
      NumericalSemigroup s(gens);
      FormalSemigroup f = formal_semigroup_from_alexander(
          normalize_alexander(alexander_from_semigroup(s)));
      bool same = f.closed;
      for (Int n = 0; n <= std::max(f.tail_from, s.conductor()) + 2 && same;
           ++n)
        same = f.contains(n) == s.contains(n);
      RealizabilityReport real = realizability_necessary(f);
      if (!same || !real.semigroup ||
          real.semigroup->minimal_generators() != s.minimal_generators())
        expect(false,
               "recovery failed for <" + join(s.minimal_generators()) + ">");
    }

    auto run_json = [&](std::vector<std::string> args) {
      std::ostringstream out, err;
      std::string shown;
      for (const std::string& a : args) shown += a + " ";
      int code = nsgp::cli::run(args, out, err);
      if (code != 0) {
        expect(false, "exit " + std::to_string(code) + " from: " + shown);
        return;
      }
      std::string text = out.str();
      if (Json::parse(text, nullptr, false).is_discarded()) {
        expect(false, "unparseable JSON from: " + shown);
        return;
      }
      if (Json::parse(text).dump(2) + "\n" != text)
        expect(false, "JSON not byte-identical from: " + shown);
    };

    for (const auto& gens : paper) {
      std::string list = join(gens);
      for (const char* sub : {"analyze", "betti", "ci", "hk", "alexander", "t1"})
        run_json({sub, list, "--format", "json"});
      run_json({"hilbert", list, "--expand", "40", "--format", "json"});
      run_json({"formal-semigroup", "--alexander",
                format_polynomial(
                    alexander_from_semigroup(NumericalSemigroup(gens))),
                "--format", "json"});
    }
    run_json({"glue", "5,7,9", "1", "2", "15", "--format", "json"});
    run_json({"glue", "15,16,24,28", "1", "3", "16", "--format", "json"});
    run_json({"glue", "6,8,10,17,19", "1", "3", "8", "--format", "json"});
    run_json({"formal-semigroup", "--alexander",
              "1,-1,0,1,-1,1,-1,1,0,-1,1", "--format", "json"});
    run_json({"family", "A", "--n", "2", "--format", "json"});
    run_json({"family", "B", "--n", "2", "--format", "json"});
    run_json({"family", "torus", "--p", "5", "--q", "7", "--format", "json"});
  });

  if (failed_criteria == 0) {
    std::cout << "acceptance: all 9 criteria passed\n";
    return 0;
  }
  std::cout << "acceptance: " << failed_criteria << " criteria FAILED\n";
  return 1;
}
