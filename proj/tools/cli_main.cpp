#include "cli_main.hpp"

#include <algorithm>
#include <cstdlib>
#include <filesystem>
#include <fstream>
#include <ostream>
#include <sstream>
#include <string>

#include <CLI11.hpp>

#include "nsgp/ci.hpp"
#include "nsgp/deformation.hpp"
#include "nsgp/io.hpp"
#include "nsgp/knots.hpp"
#include "nsgp/resolution.hpp"
#include "nsgp/semigroup.hpp"
#include "nsgp/series.hpp"

namespace nsgp::cli {
namespace {

enum class Format { Text, Json, Dot };

Format to_format(const std::string& name) {
  if (name == "json") return Format::Json;
  if (name == "dot") return Format::Dot;
  return Format::Text;
}

const char* yesno(bool b) { return b ? "yes" : "no"; }

std::string join(const std::vector<Int>& values) {
  std::ostringstream out;
  for (size_t i = 0; i < values.size(); ++i) {
    if (i) out << ", ";
    out << values[i];
  }
  return out.str();
}

std::string factored_denominator(const std::vector<Int>& gens) {
  std::ostringstream out;
  for (Int a : gens) {
    out << "(1 - t";
    if (a != 1) out << '^' << a;
    out << ')';
  }
  return out.str();
}

void emit(const Json& j, std::ostream& out) { out << j.dump(2) << '\n'; }

/// Safety rail for user-supplied truncation degrees.
Int truncation_cap(Int conductor) {
  if (const char* env = std::getenv("NSGP_MAX_DEGREE")) {
    try {
      size_t used = 0;
      Int cap = std::stoll(env, &used);
      if (used == std::string(env).size()) return cap;
    } catch (const std::exception&) {
    }
    throw std::invalid_argument("NSGP_MAX_DEGREE must be an integer");
  }
  return 10 * conductor + 1000;
}

void add_format(CLI::App* cmd, std::string& target,
                const std::vector<std::string>& allowed) {
  cmd->add_option("--format", target, "output format")
      ->check(CLI::IsMember(allowed));
}

}  // namespace

int run(std::vector<std::string> args, std::ostream& out, std::ostream& err) {
  CLI::App app{"exact invariants of numerical semigroups and monomial curves"};
  app.require_subcommand(1);
  Format active = Format::Text;

  // analyze
  std::string an_gens, an_format = "text";
  auto* analyze = app.add_subcommand(
      "analyze", "numeric invariants and branch classification");
  analyze->add_option("generators", an_gens, "e.g. 5,7,9")->required();
  add_format(analyze, an_format, {"text", "json"});
  analyze->callback([&] {
    active = to_format(an_format);
    NumericalSemigroup s(parse_generators(an_gens));
    BranchReport branch = classify_branch(s);
    if (active == Format::Json) {
      Json j = semigroup_json(s);
      j["delta"] = s.delta();
      j["milnor"] = s.milnor();
      j["symmetric"] = s.is_symmetric();
      j["branch"] = to_string(branch.cls);
      if (branch.witness)
        j["free_ordering"] = branch.witness->ordering;
      else
        j["free_ordering"] = nullptr;
      emit(j, out);
      return;
    }
    out << "generators:         " << join(s.generators()) << '\n'
        << "minimal generators: " << join(s.minimal_generators()) << '\n'
        << "frobenius:          " << s.frobenius() << '\n'
        << "conductor:          " << s.conductor() << '\n'
        << "genus:              " << s.genus() << '\n'
        << "delta:              " << s.delta() << '\n'
        << "milnor:             " << s.milnor() << '\n'
        << "symmetric:          " << yesno(s.is_symmetric()) << '\n'
        << "branch class:       " << to_string(branch.cls) << '\n';
    if (branch.witness)
      out << "free ordering:      " << join(branch.witness->ordering) << '\n';
  });

  // betti
  std::string be_gens, be_format = "text";
  auto* betti = app.add_subcommand(
      "betti", "graded Betti numbers of the defining ideal");
  betti->add_option("generators", be_gens, "e.g. 5,7,9")->required();
  add_format(betti, be_format, {"text", "json"});
  betti->callback([&] {
    active = to_format(be_format);
    NumericalSemigroup s(parse_generators(be_gens));
    BettiDiagram diagram = betti_diagram(s);
    if (active == Format::Json)
      emit(betti_json(diagram), out);
    else
      out << betti_table(s, diagram);
  });

  // complex
  std::string cx_gens, cx_format = "dot", cx_out;
  Int cx_degree = -1;
  bool cx_all = false;
  auto* complex_cmd = app.add_subcommand(
      "complex", "Graphviz export of shaded simplicial complexes");
  complex_cmd->add_option("generators", cx_gens, "e.g. 5,7,9")->required();
  auto* deg_opt =
      complex_cmd->add_option("--degree", cx_degree, "export one degree");
  auto* all_opt = complex_cmd->add_flag(
      "--all", cx_all, "export every degree of S up to theta");
  deg_opt->excludes(all_opt);
  all_opt->excludes(deg_opt);
  add_format(complex_cmd, cx_format, {"dot"});
  complex_cmd->add_option("--out", cx_out, "directory for .dot files");
  complex_cmd->callback([&] {
    active = Format::Text;  // diagnostics are plain text
    NumericalSemigroup s(parse_generators(cx_gens));
    auto write_file = [&](Int m) {
      std::ofstream file(std::filesystem::path(cx_out) /
                         ("delta_" + std::to_string(m) + ".dot"));
      file << dot_shaded_complex(shaded_complex(s, m));
    };
    if (cx_all) {
      if (cx_out.empty())
        throw std::invalid_argument("--all requires --out DIR");
      std::filesystem::create_directories(cx_out);
      std::vector<Int> degrees = s.elements_up_to(degree_bound(s));
      for (Int m : degrees) write_file(m);
      out << "wrote " << degrees.size() << " files to " << cx_out << '\n';
    } else if (cx_degree >= 0) {
      if (cx_out.empty()) {
        out << dot_shaded_complex(shaded_complex(s, cx_degree));
      } else {
        std::filesystem::create_directories(cx_out);
        write_file(cx_degree);
        out << "wrote 1 file to " << cx_out << '\n';
      }
    } else {
      throw std::invalid_argument("pass --degree M or --all");
    }
  });

  // ci
  std::string ci_gens, ci_format = "text";
  auto* ci_cmd = app.add_subcommand(
      "ci", "complete intersection test: Delorme gluing and Herzog-Kunz");
  ci_cmd->add_option("generators", ci_gens, "e.g. 15,16,24,28")->required();
  add_format(ci_cmd, ci_format, {"text", "json"});
  ci_cmd->callback([&] {
    active = to_format(ci_format);
    std::vector<Int> gens = parse_generators(ci_gens);
    NumericalSemigroup s(gens);
    CIReport report = delorme_check(gens);
    HKCheck hk = herzog_kunz_check(s);
    if (report.is_ci != hk.is_ci)
      fail(ErrorCode::InternalInconsistency,
           "Delorme and Herzog-Kunz verdicts disagree");
    if (active == Format::Json) {
      Json j;
      j["is_ci"] = report.is_ci;
      if (report.tree) j["tree"] = gluing_tree_json(*report.tree);
      if (report.failure) j["failure"] = ci_failure_json(*report.failure);
      Json hkj;
      hkj["m"] = hk.m;
      hkj["c"] = hk.conductor;
      hkj["rhs"] = hk.rhs;
      j["herzog_kunz"] = std::move(hkj);
      emit(j, out);
      return;
    }
    out << "complete intersection: " << yesno(report.is_ci) << '\n';
    if (report.tree) {
      out << "gluing tree:\n" << gluing_tree_text(*report.tree);
      out << "defining binomials:\n";
      for (const Binomial& b : defining_binomials(*report.tree))
        out << "  " << format_binomial(b) << '\n';
    }
    if (report.failure) {
      const CIFailure& f = *report.failure;
      out << "failure: "
          << (f.reason == CIFailure::Reason::NoMatchingPair
                  ? "no block pair shares its lcm degree"
                  : "a matching pair meets below the lcm")
          << '\n';
      out << "blocks at the failing step:\n";
      for (size_t i = 0; i < f.partition.size(); ++i)
        out << "  {" << join(f.partition[i]) << "}  m = " << f.m_values[i]
            << '\n';
      if (f.reason == CIFailure::Reason::DegreeNotLcm)
        out << "  pair {" << join(f.block_a) << "}, {" << join(f.block_b)
            << "}: degree " << f.degree << " != lcm " << f.lcm << '\n';
    }
    out << "herzog-kunz: m(S) = " << hk.m << ", c = " << hk.conductor
        << ", m - sum + 1 = " << hk.rhs
        << (hk.is_ci ? "  [equality]" : "  [strict]") << '\n';
  });

  // hk
  std::string hk_gens, hk_format = "text";
  auto* hk_cmd = app.add_subcommand(
      "hk", "Herzog-Kunz invariant m(S) and conductor identity");
  hk_cmd->add_option("generators", hk_gens, "e.g. 5,7,9")->required();
  add_format(hk_cmd, hk_format, {"text", "json"});
  hk_cmd->callback([&] {
    active = to_format(hk_format);
    NumericalSemigroup s(parse_generators(hk_gens));
    HKCheck hk = herzog_kunz_check(s);
    if (active == Format::Json) {
      Json chosen = Json::array();
      for (const Syzygy& syz : hk.chosen) {
        Json entry;
        entry["degree"] = syz.degree;
        entry["z"] = syz.z;
        chosen.push_back(std::move(entry));
      }
      Json j;
      j["m"] = hk.m;
      j["conductor"] = hk.conductor;
      j["rhs"] = hk.rhs;
      j["is_ci"] = hk.is_ci;
      j["chosen"] = std::move(chosen);
      emit(j, out);
      return;
    }
    out << "m(S) = " << hk.m << '\n';
    out << "independent syzygies chosen:\n";
    for (const Syzygy& syz : hk.chosen)
      out << "  deg " << syz.degree << ": (" << join(syz.z) << ")\n";
    out << "c = " << hk.conductor << ", m - sum + 1 = " << hk.rhs << '\n';
    out << "complete intersection: " << yesno(hk.is_ci) << '\n';
  });

  // glue
  std::string gl_left, gl_right, gl_format = "text";
  Int gl_d1 = 0, gl_d2 = 0;
  auto* glue_cmd =
      app.add_subcommand("glue", "the gluing <d1*S1, d2*S2> and its series");
  glue_cmd->add_option("left", gl_left, "generators of S1")->required();
  glue_cmd->add_option("right", gl_right, "generators of S2")->required();
  glue_cmd->add_option("d1", gl_d1, "multiplier of S1 (must lie in S2)")
      ->required();
  glue_cmd->add_option("d2", gl_d2, "multiplier of S2 (must lie in S1)")
      ->required();
  add_format(glue_cmd, gl_format, {"text", "json"});
  glue_cmd->callback([&] {
    active = to_format(gl_format);
    NumericalSemigroup s1(parse_generators(gl_left));
    NumericalSemigroup s2(parse_generators(gl_right));
    NumericalSemigroup glued = glue(s1, s2, gl_d1, gl_d2);
    bool series_ok = gluing_series_check(s1, s2, gl_d1, gl_d2);
    if (!series_ok)
      fail(ErrorCode::InternalInconsistency, "gluing series identity failed");
    if (active == Format::Json) {
      Json j;
      j["semigroup"] = semigroup_json(glued);
      j["d1"] = gl_d1;
      j["d2"] = gl_d2;
      j["degree"] = gl_d1 * gl_d2;
      j["series_identity"] = series_ok;
      emit(j, out);
      return;
    }
    out << "glued generators:   " << join(glued.generators()) << '\n'
        << "minimal generators: " << join(glued.minimal_generators()) << '\n'
        << "relation degree:    " << gl_d1 * gl_d2 << '\n'
        << "frobenius:          " << glued.frobenius() << '\n'
        << "conductor:          " << glued.conductor() << '\n'
        << "genus:              " << glued.genus() << '\n'
        << "series identity:    ok\n";
  });

  // hilbert
  std::string hi_gens, hi_format = "text";
  Int hi_expand = -1;
  auto* hilbert_cmd = app.add_subcommand(
      "hilbert", "Hilbert-Poincare series numerator and cyclotomic test");
  hilbert_cmd->add_option("generators", hi_gens, "e.g. 2,3")->required();
  hilbert_cmd->add_option("--expand", hi_expand,
                          "also print the series truncated to this degree");
  add_format(hilbert_cmd, hi_format, {"text", "json"});
  hilbert_cmd->callback([&] {
    active = to_format(hi_format);
    NumericalSemigroup s(parse_generators(hi_gens));
    IntPolynomial q = hilbert_numerator(s);
    bool cyclo = cyclotomic_test(q);
    bool is_ci = delorme_check(s.generators()).is_ci;
    Int expand = -1;
    if (hi_expand >= 0)
      expand = std::min(hi_expand, truncation_cap(s.conductor()));
    if (active == Format::Json) {
      Json j;
      j["numerator"] = polynomial_json(q);
      j["denominator_degrees"] = s.minimal_generators();
      j["cyclotomic"] = cyclo;
      j["is_ci"] = is_ci;
      j["conjecture_consistent"] = cyclo == is_ci;
      if (expand >= 0)
        j["expansion"] = polynomial_json(poincare_truncated(s, expand));
      emit(j, out);
      return;
    }
    out << "numerator:   " << format_polynomial(q) << '\n';
    out << "denominator: " << factored_denominator(s.minimal_generators())
        << '\n';
    out << "cyclotomic numerator:  " << yesno(cyclo) << '\n';
    out << "complete intersection: " << yesno(is_ci) << '\n';
    out << "conjecture-consistent: " << yesno(cyclo == is_ci) << '\n';
    if (expand >= 0)
      out << "series (to degree " << expand
          << "): " << format_polynomial(poincare_truncated(s, expand))
          << " + ...\n";
  });

  // alexander
  std::string al_gens, al_format = "text";
  auto* alexander_cmd = app.add_subcommand(
      "alexander", "Alexander polynomial (1 - t) * P_S(t)");
  alexander_cmd->add_option("generators", al_gens, "e.g. 2,3")->required();
  add_format(alexander_cmd, al_format, {"text", "json"});
  alexander_cmd->callback([&] {
    active = to_format(al_format);
    NumericalSemigroup s(parse_generators(al_gens));
    IntPolynomial delta = alexander_from_semigroup(s);
    BranchReport branch = classify_branch(s);
    if (active == Format::Json) {
      Json j;
      j["alexander"] = polynomial_json(delta);
      j["degree"] = delta.degree();
      j["branch"] = to_string(branch.cls);
      emit(j, out);
      return;
    }
    out << "alexander:    " << format_polynomial(delta) << '\n';
    out << "degree:       " << delta.degree() << '\n';
    out << "branch class: " << to_string(branch.cls) << '\n';
    if (branch.cls == BranchClass::PlaneBranch)
      out << "plane branch: this is the Alexander polynomial of the knot "
             "of the branch\n";
  });

  // formal-semigroup
  std::string fs_alex, fs_format = "text";
  auto* fs_cmd = app.add_subcommand(
      "formal-semigroup",
      "the formal semigroup of an L-space Alexander polynomial");
  fs_cmd->add_option("--alexander", fs_alex,
                     "coefficient list \"1,-1,0,1\" or sparse \"1-t+t^3\"")
      ->required();
  add_format(fs_cmd, fs_format, {"text", "json"});
  fs_cmd->callback([&] {
    active = to_format(fs_format);
    AlexanderForm form = normalize_alexander(parse_polynomial(fs_alex));
    FormalSemigroup f = formal_semigroup_from_alexander(form);
    RealizabilityReport real = realizability_necessary(f);
    if (active == Format::Json) {
      Json j = formal_semigroup_json(f);
      j["is_semigroup"] = real.is_semigroup;
      if (real.symmetric)
        j["symmetric"] = *real.symmetric;
      else
        j["symmetric"] = nullptr;
      j["realizable_necessary"] = real.passes;
      emit(j, out);
      return;
    }
    out << "sporadic:  " << join(f.sporadic) << '\n';
    out << "tail from: " << f.tail_from << '\n';
    out << "closed:    " << yesno(f.closed) << '\n';
    if (f.witness)
      out << "witness:   " << f.witness->first << " + " << f.witness->second
          << " missing\n";
    out << "symmetric: "
        << (real.symmetric ? yesno(*real.symmetric) : "n/a") << '\n';
    out << "realizability (necessary condition): "
        << (real.passes ? "passes" : "fails") << '\n';
  });

  // t1
  std::string t1_gens, t1_format = "text";
  auto* t1_cmd = app.add_subcommand(
      "t1", "graded dimensions of T^1 of the monomial curve");
  t1_cmd->add_option("generators", t1_gens, "e.g. 2,3")->required();
  add_format(t1_cmd, t1_format, {"text", "json"});
  t1_cmd->callback([&] {
    active = to_format(t1_format);
    NumericalSemigroup s(parse_generators(t1_gens));
    T1Spectrum spectrum = t1_spectrum(s);
    if (active == Format::Json) {
      emit(t1_json(spectrum), out);
      return;
    }
    out << "   n  dim\n";
    for (const auto& [n, d] : spectrum.dims) {
      std::string label = std::to_string(n);
      out << std::string(label.size() < 4 ? 4 - label.size() : 0, ' ')
          << label << "  " << d << '\n';
    }
    out << "tau = " << spectrum.tau << "  (tau+ = " << spectrum.tau_plus
        << ", tau- = " << spectrum.tau_minus << ")\n";
  });

  // family
  std::string fa_type, fa_format = "text";
  Int fa_n = 1, fa_p = 2, fa_q = 3;
  auto* family_cmd =
      app.add_subcommand("family", "built-in knot semigroup families");
  family_cmd->add_option("type", fa_type, "A, B, or torus")
      ->required()
      ->check(CLI::IsMember({"A", "B", "torus"}));
  family_cmd->add_option("--n", fa_n, "index for families A and B");
  family_cmd->add_option("--p", fa_p, "torus knot parameter p");
  family_cmd->add_option("--q", fa_q, "torus knot parameter q");
  add_format(family_cmd, fa_format, {"text", "json"});
  family_cmd->callback([&] {
    active = to_format(fa_format);
    if (fa_type == "torus") {
      NumericalSemigroup s({fa_p, fa_q});
      IntPolynomial alex = torus_alexander(fa_p, fa_q);
      if (alex != alexander_from_semigroup(s))
        fail(ErrorCode::InternalInconsistency,
             "torus Alexander polynomial mismatch");
      if (active == Format::Json) {
        Json j;
        j["family"] = "torus";
        j["p"] = fa_p;
        j["q"] = fa_q;
        j["semigroup"] = semigroup_json(s);
        j["alexander"] = polynomial_json(alex);
        emit(j, out);
        return;
      }
      out << "torus knot (" << fa_p << ", " << fa_q << ")\n";
      out << "semigroup: " << join(s.generators()) << '\n';
      out << "alexander: " << format_polynomial(alex) << '\n';
      return;
    }
    if (fa_n < 1) throw std::invalid_argument("--n must be >= 1");
    NumericalSemigroup s = teragaito_family(
        fa_type == "A" ? TeragaitoFamily::A : TeragaitoFamily::B, fa_n);
    CIReport report = delorme_check(s.generators());
    if (active == Format::Json) {
      Json j;
      j["family"] = fa_type;
      j["n"] = fa_n;
      j["semigroup"] = semigroup_json(s);
      j["is_ci"] = report.is_ci;
      j["symmetric"] = s.is_symmetric();
      emit(j, out);
      return;
    }
    out << "family " << fa_type << ", n = " << fa_n << '\n';
    out << "generators:            " << join(s.generators()) << '\n';
    out << "complete intersection: " << yesno(report.is_ci) << '\n';
    out << "symmetric:             " << yesno(s.is_symmetric()) << '\n';
  });

  try {
    std::reverse(args.begin(), args.end());
    app.parse(std::move(args));
  } catch (const CLI::CallForHelp&) {
    out << app.help();
    return 0;
  } catch (const CLI::CallForAllHelp&) {
    out << app.help("", CLI::AppFormatMode::All);
    return 0;
  } catch (const CLI::ParseError& e) {
    err << e.what() << '\n' << app.help();
    return 2;
  } catch (const Error& e) {
    if (active == Format::Json)
      emit(error_json(e), out);
    else
      err << "error: " << to_string(e.code()) << ": " << e.what() << '\n';
    return 1;
  } catch (const std::invalid_argument& e) {
    err << "usage error: " << e.what() << '\n';
    return 2;
  }
  return 0;
}

int run(int argc, const char* const* argv, std::ostream& out,
        std::ostream& err) {
  std::vector<std::string> args;
  for (int i = 1; i < argc; ++i) args.emplace_back(argv[i]);
  return run(std::move(args), out, err);
}

}  // namespace nsgp::cli
