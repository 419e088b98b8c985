#pragma once

#include <string>
#include <vector>

#include <json.hpp>

#include "nsgp/ci.hpp"
#include "nsgp/deformation.hpp"
#include "nsgp/knots.hpp"
#include "nsgp/polynomial.hpp"
#include "nsgp/resolution.hpp"
#include "nsgp/semigroup.hpp"

namespace nsgp {

/// All JSON output is built on ordered_json so key order is canonical and
/// emitted documents parse and re-serialize byte-identically.
using Json = nlohmann::ordered_json;

/// Parses "5,7,9" (commas and/or whitespace); throws std::invalid_argument
/// on anything that is not an integer list.  Range/positivity is left to
/// the semigroup constructor.
std::vector<Int> parse_generators(const std::string& text);

Json semigroup_json(const NumericalSemigroup& s);
Json betti_json(const BettiDiagram& diagram);
Json polynomial_json(const IntPolynomial& p);
Json gluing_tree_json(const GluingTree& tree);
Json ci_failure_json(const CIFailure& failure);
Json formal_semigroup_json(const FormalSemigroup& f);
Json t1_json(const T1Spectrum& spectrum);
Json error_json(const Error& e);

/// Betti diagram as a text table: one row per element of S up to theta,
/// one column per homological index; zero entries render as ".".
std::string betti_table(const NumericalSemigroup& s,
                        const BettiDiagram& diagram);

/// Indented tree rendering of a gluing certificate.
std::string gluing_tree_text(const GluingTree& tree);

/// Graphviz source for a shaded complex: vertices labeled by generator
/// values, edges for 1-faces, style=filled clusters for 2-faces, larger
/// faces listed as comments.
std::string dot_shaded_complex(const ShadedComplex& complex);

}  // namespace nsgp
