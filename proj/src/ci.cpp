#include "nsgp/ci.hpp"

#include <algorithm>
#include <numeric>
#include <sstream>

#include "nsgp/linalg.hpp"

namespace nsgp {

namespace {

Int gcd_all(const std::vector<Int>& values) {
  Int d = 0;
  for (Int v : values) d = std::gcd(d, v);
  return d;
}

void validate_positive(const std::vector<Int>& gens, const char* what) {
  if (gens.empty()) fail(ErrorCode::EmptyGenerators, std::string("empty ") + what);
  for (Int a : gens) {
    if (a <= 0) {
      std::ostringstream os;
      os << what << " contains the non-positive entry " << a;
      fail(ErrorCode::ZeroGenerator, os.str());
    }
  }
}

// First (lexicographically smallest) factorization of m over gens; gens in
// the coefficient order wanted by the caller.
bool first_factorization(const std::vector<Int>& gens,
                         const std::vector<Int>& suffix_gcd, size_t pos,
                         Int rem, std::vector<Int>& current) {
  if (pos + 1 == gens.size()) {
    if (rem % gens[pos] == 0) {
      current[pos] = rem / gens[pos];
      return true;
    }
    return false;
  }
  if (rem % suffix_gcd[pos] != 0) return false;
  for (Int count = 0; count * gens[pos] <= rem; ++count) {
    current[pos] = count;
    if (first_factorization(gens, suffix_gcd, pos + 1, rem - count * gens[pos],
                            current))
      return true;
  }
  current[pos] = 0;
  return false;
}

std::vector<Int> lex_min_factorization(const std::vector<Int>& gens, Int m) {
  std::vector<Int> suffix_gcd(gens.size() + 1, 0);
  for (size_t k = gens.size(); k-- > 0;)
    suffix_gcd[k] = std::gcd(suffix_gcd[k + 1], gens[k]);
  std::vector<Int> current(gens.size(), 0);
  if (!first_factorization(gens, suffix_gcd, 0, m, current)) {
    fail(ErrorCode::InternalInconsistency,
         "expected factorization over block does not exist");
  }
  return current;
}

}  // namespace

Int min_intersection(const std::vector<Int>& gens_a,
                     const std::vector<Int>& gens_b) {
  validate_positive(gens_a, "generator list");
  validate_positive(gens_b, "generator list");
  Int da = gcd_all(gens_a), db = gcd_all(gens_b);
  NumericalSemigroup scaled_a(normalize(gens_a));
  NumericalSemigroup scaled_b(normalize(gens_b));
  // Beyond d * conductor(S/d) the monoid holds every multiple of d, so some
  // common multiple of both gcds appears within one lcm past both bounds.
  Int bound = std::max(da * scaled_a.conductor(), db * scaled_b.conductor()) +
              std::lcm(da, db);
  for (Int n = 1; n <= bound; ++n) {
    if (n % da == 0 && n % db == 0 && scaled_a.contains(n / da) &&
        scaled_b.contains(n / db))
      return n;
  }
  fail(ErrorCode::InternalInconsistency,
       "monoid intersection bound produced no common element");
}

std::vector<const GluingTree*> GluingTree::leaves() const {
  if (leaf) return {this};
  std::vector<const GluingTree*> out = left->leaves();
  std::vector<const GluingTree*> r = right->leaves();
  out.insert(out.end(), r.begin(), r.end());
  std::sort(out.begin(), out.end(),
            [](const GluingTree* a, const GluingTree* b) {
              return std::make_pair(a->value, a->position) <
                     std::make_pair(b->value, b->position);
            });
  return out;
}

std::vector<Int> GluingTree::block_values() const {
  std::vector<Int> out;
  for (const GluingTree* l : leaves()) out.push_back(l->value);
  return out;
}

namespace {

struct Block {
  std::vector<size_t> positions;  // sorted by (value, position)
  std::vector<Int> values;        // aligned with positions
  Int gcd = 0;
  std::unique_ptr<GluingTree> tree;

  Int min_value() const { return values.front(); }
};

bool block_order(const Block& a, const Block& b) {
  if (a.values != b.values) return a.values < b.values;
  return a.positions < b.positions;
}

}  // namespace

CIReport delorme_check(const std::vector<Int>& generators) {
  validate_positive(generators, "generator multiset");
  Int d = gcd_all(generators);
  if (d != 1) {
    std::ostringstream os;
    os << "generator multiset has gcd " << d;
    fail(ErrorCode::GcdNotOne, os.str());
  }
  std::vector<Int> sorted = generators;
  std::sort(sorted.begin(), sorted.end());

  std::vector<Block> blocks;
  for (size_t p = 0; p < sorted.size(); ++p) {
    Block b;
    b.positions = {p};
    b.values = {sorted[p]};
    b.gcd = sorted[p];
    b.tree = std::make_unique<GluingTree>();
    b.tree->leaf = true;
    b.tree->value = sorted[p];
    b.tree->position = p;
    blocks.push_back(std::move(b));
  }

  int step = 0;
  while (blocks.size() >= 2) {
    std::sort(blocks.begin(), blocks.end(),
              [](const Block& a, const Block& b) { return block_order(a, b); });

    std::vector<Int> m_values(blocks.size());
    for (size_t i = 0; i < blocks.size(); ++i) {
      std::vector<Int> complement;
      for (size_t j = 0; j < blocks.size(); ++j) {
        if (j == i) continue;
        complement.insert(complement.end(), blocks[j].values.begin(),
                          blocks[j].values.end());
      }
      m_values[i] = min_intersection(blocks[i].values, complement);
    }

    auto snapshot_failure = [&](CIFailure::Reason reason) {
      CIFailure f;
      f.reason = reason;
      for (const Block& b : blocks) f.partition.push_back(b.values);
      f.m_values = m_values;
      return f;
    };

    // Matching pairs in (degree, block order) priority.
    size_t best_i = blocks.size(), best_j = blocks.size();
    size_t invalid_i = blocks.size(), invalid_j = blocks.size();
    for (size_t i = 0; i < blocks.size(); ++i) {
      for (size_t j = i + 1; j < blocks.size(); ++j) {
        if (m_values[i] != m_values[j]) continue;
        bool valid = m_values[i] == std::lcm(blocks[i].gcd, blocks[j].gcd);
        // Pairs are scanned in lexicographic block order, so the first
        // hit at each degree is already the tie-break winner.
        auto better = [&](size_t bi) {
          return bi == blocks.size() || m_values[i] < m_values[bi];
        };
        if (valid && better(best_i)) {
          best_i = i;
          best_j = j;
        } else if (!valid && better(invalid_i)) {
          invalid_i = i;
          invalid_j = j;
        }
      }
    }

    if (best_i == blocks.size()) {
      CIReport report;
      report.is_ci = false;
      if (invalid_i != blocks.size()) {
        CIFailure f = snapshot_failure(CIFailure::Reason::DegreeNotLcm);
        f.block_a = blocks[invalid_i].values;
        f.block_b = blocks[invalid_j].values;
        f.degree = m_values[invalid_i];
        f.lcm = std::lcm(blocks[invalid_i].gcd, blocks[invalid_j].gcd);
        report.failure = std::move(f);
      } else {
        report.failure = snapshot_failure(CIFailure::Reason::NoMatchingPair);
      }
      return report;
    }

    Block& lo = blocks[best_i];  // block order puts the smaller minimum first
    Block& hi = blocks[best_j];
    Int m = m_values[best_i];

    auto node = std::make_unique<GluingTree>();
    node->leaf = false;
    node->d_left = lo.gcd;
    node->d_right = hi.gcd;
    node->degree = m;
    node->step = step++;
    node->left_factorization = lex_min_factorization(lo.values, m);
    node->right_factorization = lex_min_factorization(hi.values, m);
    node->left = std::move(lo.tree);
    node->right = std::move(hi.tree);

    Block merged;
    merged.positions = lo.positions;
    merged.values = lo.values;
    for (size_t k = 0; k < hi.positions.size(); ++k) {
      merged.positions.push_back(hi.positions[k]);
      merged.values.push_back(hi.values[k]);
    }
    std::vector<size_t> order(merged.values.size());
    std::iota(order.begin(), order.end(), size_t{0});
    std::sort(order.begin(), order.end(), [&](size_t x, size_t y) {
      return std::make_pair(merged.values[x], merged.positions[x]) <
             std::make_pair(merged.values[y], merged.positions[y]);
    });
    Block sorted_block;
    for (size_t idx : order) {
      sorted_block.positions.push_back(merged.positions[idx]);
      sorted_block.values.push_back(merged.values[idx]);
    }
    sorted_block.gcd = std::gcd(lo.gcd, hi.gcd);
    sorted_block.tree = std::move(node);

    blocks.erase(blocks.begin() + static_cast<std::ptrdiff_t>(best_j));
    blocks.erase(blocks.begin() + static_cast<std::ptrdiff_t>(best_i));
    blocks.push_back(std::move(sorted_block));
  }

  CIReport report;
  report.is_ci = true;
  report.tree = std::move(*blocks.front().tree);
  return report;
}

namespace {

void collect_nodes(const GluingTree& tree, std::vector<const GluingTree*>& out) {
  if (tree.leaf) return;
  collect_nodes(*tree.left, out);
  collect_nodes(*tree.right, out);
  out.push_back(&tree);
}

}  // namespace

std::vector<Binomial> defining_binomials(const GluingTree& tree) {
  size_t ambient = tree.leaves().size();
  std::vector<const GluingTree*> nodes;
  collect_nodes(tree, nodes);
  std::sort(nodes.begin(), nodes.end(),
            [](const GluingTree* a, const GluingTree* b) {
              return a->step < b->step;
            });
  std::vector<Binomial> out;
  for (const GluingTree* node : nodes) {
    Binomial b;
    b.degree = node->degree;
    b.lhs.assign(ambient, 0);
    b.rhs.assign(ambient, 0);
    auto lift = [&](const GluingTree& side, const std::vector<Int>& fact,
                    std::vector<Int>& exponents) {
      std::vector<const GluingTree*> ls = side.leaves();
      for (size_t k = 0; k < ls.size(); ++k)
        exponents[ls[k]->position] += fact[k];
    };
    lift(*node->left, node->left_factorization, b.lhs);
    lift(*node->right, node->right_factorization, b.rhs);
    out.push_back(std::move(b));
  }
  return out;
}

std::string format_binomial(const Binomial& b) {
  auto side = [](const std::vector<Int>& exponents) {
    std::ostringstream os;
    bool any = false;
    for (size_t i = 0; i < exponents.size(); ++i) {
      if (exponents[i] == 0) continue;
      any = true;
      os << "x" << i + 1;
      if (exponents[i] > 1) os << "^" << exponents[i];
    }
    if (!any) os << "1";
    return os.str();
  };
  std::ostringstream os;
  os << side(b.lhs) << " - " << side(b.rhs) << "  (deg " << b.degree << ")";
  return os.str();
}

NumericalSemigroup glue(const NumericalSemigroup& s1,
                        const NumericalSemigroup& s2, Int d1, Int d2) {
  if (d1 <= 0 || d2 <= 0)
    fail(ErrorCode::ZeroArgument, "gluing multipliers must be positive");
  if (std::gcd(d1, d2) != 1) {
    std::ostringstream os;
    os << "gluing multipliers " << d1 << ", " << d2 << " are not coprime";
    fail(ErrorCode::NotCoprime, os.str());
  }
  if (!s1.contains(d2)) {
    std::ostringstream os;
    os << "multiplier " << d2 << " is not an element of the first semigroup";
    fail(ErrorCode::MultiplierNotInPartner, os.str());
  }
  if (!s2.contains(d1)) {
    std::ostringstream os;
    os << "multiplier " << d1 << " is not an element of the second semigroup";
    fail(ErrorCode::MultiplierNotInPartner, os.str());
  }
  std::vector<Int> gens;
  for (Int a : s1.generators()) gens.push_back(d1 * a);
  for (Int a : s2.generators()) gens.push_back(d2 * a);
  return NumericalSemigroup(std::move(gens));
}

HKData herzog_kunz_m(const NumericalSemigroup& s) {
  Int g = s.embedding_dim();
  HKData data;
  RankAccumulator acc(static_cast<size_t>(g));
  if (g == 1) return data;
  Int theta = degree_bound(s);
  for (Int m : s.elements_up_to(theta)) {
    auto facts = factorizations(s, m);
    if (facts.size() < 2) continue;
    for (size_t u = 0; u < facts.size() && acc.rank() < g - 1; ++u) {
      for (size_t v = u + 1; v < facts.size() && acc.rank() < g - 1; ++v) {
        std::vector<Int> z(static_cast<size_t>(g));
        for (size_t i = 0; i < z.size(); ++i) z[i] = facts[v][i] - facts[u][i];
        if (acc.add(to_bigint(z))) {
          data.chosen.push_back({m, std::move(z)});
          data.m += m;
        }
      }
    }
    if (acc.rank() == g - 1) break;
  }
  if (acc.rank() != g - 1) {
    fail(ErrorCode::InternalInconsistency,
         "syzygy candidates below the degree bound do not reach full rank");
  }
  return data;
}

HKCheck herzog_kunz_check(const NumericalSemigroup& s) {
  HKData data = herzog_kunz_m(s);
  const std::vector<Int>& gens = s.minimal_generators();
  Int total = std::accumulate(gens.begin(), gens.end(), Int{0});
  HKCheck check;
  check.m = data.m;
  check.conductor = s.conductor();
  check.rhs = data.m - total + 1;
  check.is_ci = check.conductor == check.rhs;
  check.chosen = std::move(data.chosen);
  if (check.conductor > check.rhs) {
    fail(ErrorCode::InternalInconsistency,
         "conductor exceeds the Herzog-Kunz bound");
  }
  return check;
}

SemimoduleWindow dedekind_semimodule(const NumericalSemigroup& s, Int h) {
  SemimoduleWindow window;
  window.h = h;
  window.apery = s.apery_set(h);  // validates h
  Int c = s.conductor();
  window.bound = h + 2 * c;
  window.membership.assign(static_cast<size_t>(window.bound) + 1, false);
  Int shift = h + c - 1;
  bool equal = true;
  for (Int n = 0; n <= window.bound; ++n) {
    bool in = true;
    for (Int gamma : window.apery) {
      if (!s.contains(n - gamma)) {
        in = false;
        break;
      }
    }
    window.membership[static_cast<size_t>(n)] = in;
    bool in_shifted = s.contains(n - shift);
    if (in && !in_shifted) {
      fail(ErrorCode::InternalInconsistency,
           "Dedekind semimodule escapes the shifted conductor ideal");
    }
    if (in != in_shifted) equal = false;
  }
  window.equals_shifted_conductor_ideal = equal;
  window.principal = equal;
  return window;
}

}  // namespace nsgp
