#include "nsgp/io.hpp"

#include <algorithm>
#include <limits>
#include <sstream>

namespace nsgp {

namespace {

long long to_int64(const BigInt& v) {
  if (v < std::numeric_limits<long long>::min() ||
      v > std::numeric_limits<long long>::max())
    fail(ErrorCode::InternalInconsistency,
         "coefficient does not fit a 64-bit JSON number");
  return v.convert_to<long long>();
}

}  // namespace

std::vector<Int> parse_generators(const std::string& text) {
  std::string cleaned = text;
  std::replace(cleaned.begin(), cleaned.end(), ',', ' ');
  std::istringstream in(cleaned);
  std::vector<Int> values;
  std::string token;
  while (in >> token) {
    size_t used = 0;
    Int v = 0;
    try {
      v = std::stoll(token, &used);
    } catch (const std::exception&) {
      throw std::invalid_argument("not an integer: '" + token + "'");
    }
    if (used != token.size())
      throw std::invalid_argument("not an integer: '" + token + "'");
    values.push_back(v);
  }
  if (values.empty())
    throw std::invalid_argument("expected a comma-separated integer list");
  return values;
}

Json semigroup_json(const NumericalSemigroup& s) {
  Json j;
  j["generators"] = s.generators();
  j["minimal_generators"] = s.minimal_generators();
  j["frobenius"] = s.frobenius();
  j["conductor"] = s.conductor();
  j["genus"] = s.genus();
  return j;
}

Json betti_json(const BettiDiagram& diagram) {
  Json entries = Json::array();
  for (const auto& [key, beta] : diagram.entries) {
    Json entry;
    entry["i"] = key.first;
    entry["m"] = key.second;
    entry["beta"] = beta;
    entries.push_back(std::move(entry));
  }
  Json j;
  j["theta"] = diagram.theta;
  j["entries"] = std::move(entries);
  return j;
}

Json polynomial_json(const IntPolynomial& p) {
  Json coeffs = Json::array();
  for (const BigInt& c : p.coeffs()) coeffs.push_back(to_int64(c));
  Json j;
  j["coeffs"] = std::move(coeffs);
  return j;
}

Json gluing_tree_json(const GluingTree& tree) {
  Json j;
  if (tree.leaf) {
    j["leaf"] = tree.value;
    return j;
  }
  j["d_left"] = tree.d_left;
  j["d_right"] = tree.d_right;
  j["degree"] = tree.degree;
  j["left"] = gluing_tree_json(*tree.left);
  j["right"] = gluing_tree_json(*tree.right);
  return j;
}

Json ci_failure_json(const CIFailure& failure) {
  Json j;
  j["reason"] = failure.reason == CIFailure::Reason::NoMatchingPair
                    ? "no-matching-pair"
                    : "degree-not-lcm";
  j["partition"] = failure.partition;
  j["m_values"] = failure.m_values;
  if (failure.reason == CIFailure::Reason::DegreeNotLcm) {
    j["block_a"] = failure.block_a;
    j["block_b"] = failure.block_b;
    j["degree"] = failure.degree;
    j["lcm"] = failure.lcm;
  }
  return j;
}

Json formal_semigroup_json(const FormalSemigroup& f) {
  Json j;
  j["sporadic"] = f.sporadic;
  j["tail_from"] = f.tail_from;
  j["closed"] = f.closed;
  if (f.witness)
    j["witness"] = Json::array({f.witness->first, f.witness->second});
  else
    j["witness"] = nullptr;
  return j;
}

Json t1_json(const T1Spectrum& spectrum) {
  Json dims = Json::object();
  for (const auto& [n, d] : spectrum.dims) dims[std::to_string(n)] = d;
  Json j;
  j["dims"] = std::move(dims);
  j["tau"] = spectrum.tau;
  j["tau_plus"] = spectrum.tau_plus;
  j["tau_minus"] = spectrum.tau_minus;
  return j;
}

Json error_json(const Error& e) {
  Json inner;
  inner["code"] = to_string(e.code());
  inner["message"] = e.what();
  Json j;
  j["error"] = std::move(inner);
  return j;
}

std::string betti_table(const NumericalSemigroup& s,
                        const BettiDiagram& diagram) {
  Int g = diagram.g;
  std::vector<Int> rows = s.elements_up_to(diagram.theta);

  auto cell = [&](Int i, Int m) -> std::string {
    Int b = diagram.beta(i, m);
    return b == 0 ? "." : std::to_string(b);
  };

  std::vector<size_t> width(static_cast<size_t>(g));
  std::vector<std::string> heads(static_cast<size_t>(g));
  for (Int i = 0; i < g; ++i) {
    heads[static_cast<size_t>(i)] = "b" + std::to_string(i);
    size_t w = heads[static_cast<size_t>(i)].size();
    for (Int m : rows) w = std::max(w, cell(i, m).size());
    width[static_cast<size_t>(i)] = w;
  }
  size_t label = 1;
  for (Int m : rows) label = std::max(label, std::to_string(m).size());

  std::ostringstream out;
  auto pad = [&](const std::string& text, size_t w) {
    out << std::string(w - text.size(), ' ') << text;
  };
  pad("m", label);
  out << " |";
  for (Int i = 0; i < g; ++i) {
    out << ' ';
    pad(heads[static_cast<size_t>(i)], width[static_cast<size_t>(i)]);
  }
  out << '\n';
  out << std::string(label, '-') << "-+";
  for (Int i = 0; i < g; ++i)
    out << std::string(width[static_cast<size_t>(i)] + 1, '-');
  out << '\n';
  for (Int m : rows) {
    pad(std::to_string(m), label);
    out << " |";
    for (Int i = 0; i < g; ++i) {
      out << ' ';
      pad(cell(i, m), width[static_cast<size_t>(i)]);
    }
    out << '\n';
  }
  return out.str();
}

namespace {

void render_tree(const GluingTree& tree, int depth, std::ostringstream& out) {
  out << std::string(static_cast<size_t>(depth) * 2, ' ');
  if (tree.leaf) {
    out << "leaf " << tree.value << '\n';
    return;
  }
  out << "merge deg " << tree.degree << " = lcm(" << tree.d_left << ", "
      << tree.d_right << ")\n";
  render_tree(*tree.left, depth + 1, out);
  render_tree(*tree.right, depth + 1, out);
}

}  // namespace

std::string gluing_tree_text(const GluingTree& tree) {
  std::ostringstream out;
  render_tree(tree, 0, out);
  return out.str();
}

std::string dot_shaded_complex(const ShadedComplex& complex) {
  std::ostringstream out;
  out << "graph delta_" << complex.degree << " {\n";
  out << "  label=\"Delta_" << complex.degree << "\";\n";
  if (complex.faces.empty()) out << "  // void complex\n";

  size_t g = complex.vertex_values.size();
  for (size_t i = 0; i < g; ++i)
    if (complex.has_face(std::uint64_t{1} << i))
      out << "  v" << i << " [label=\"" << complex.vertex_values[i]
          << "\"];\n";

  int clusters = 0;
  for (std::uint64_t mask : complex.faces) {
    std::vector<size_t> members;
    for (size_t i = 0; i < g; ++i)
      if (mask >> i & 1) members.push_back(i);
    if (members.size() == 2) {
      out << "  v" << members[0] << " -- v" << members[1] << ";\n";
    } else if (members.size() == 3) {
      out << "  subgraph cluster_" << clusters++ << " { style=filled;";
      for (size_t i : members) out << " v" << i << ";";
      out << " }\n";
    } else if (members.size() > 3) {
      out << "  //";
      for (size_t i : members) out << " v" << i;
      out << " (" << members.size() - 1 << "-face)\n";
    }
  }
  out << "}\n";
  return out.str();
}

}  // namespace nsgp
