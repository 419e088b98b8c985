#include "nsgp/resolution.hpp"

#include <algorithm>
#include <bit>
#include <numeric>
#include <sstream>
#include <unordered_map>

#include "nsgp/linalg.hpp"

namespace nsgp {

namespace {

void enumerate_factorizations(const std::vector<Int>& gens,
                              const std::vector<Int>& suffix_gcd, size_t pos,
                              Int rem, std::vector<Int>& current,
                              std::vector<std::vector<Int>>& out) {
  if (pos + 1 == gens.size()) {
    if (rem % gens[pos] == 0) {
      current[pos] = rem / gens[pos];
      out.push_back(current);
      current[pos] = 0;
    }
    return;
  }
  if (rem % suffix_gcd[pos] != 0) return;
  for (Int count = 0; count * gens[pos] <= rem; ++count) {
    current[pos] = count;
    enumerate_factorizations(gens, suffix_gcd, pos + 1,
                             rem - count * gens[pos], current, out);
  }
  current[pos] = 0;
}

}  // namespace

std::vector<std::vector<Int>> factorizations_over(const std::vector<Int>& gens,
                                                  Int m) {
  if (gens.empty()) {
    if (m == 0) return {{}};
    return {};
  }
  if (m < 0) return {};
  std::vector<Int> suffix_gcd(gens.size());
  Int g = 0;
  for (size_t k = gens.size(); k-- > 0;) {
    g = std::gcd(g, gens[k]);
    suffix_gcd[k] = g;
  }
  std::vector<std::vector<Int>> out;
  std::vector<Int> current(gens.size(), 0);
  enumerate_factorizations(gens, suffix_gcd, 0, m, current, out);
  return out;  // lexicographic by construction
}

std::vector<std::vector<Int>> factorizations(const NumericalSemigroup& s,
                                             Int m) {
  return factorizations_over(s.minimal_generators(), m);
}

bool ShadedComplex::has_face(std::uint64_t mask) const {
  return std::binary_search(
      faces.begin(), faces.end(), mask, [](std::uint64_t a, std::uint64_t b) {
        return std::popcount(a) != std::popcount(b)
                   ? std::popcount(a) < std::popcount(b)
                   : a < b;
      });
}

ShadedComplex shaded_complex(const NumericalSemigroup& s, Int m) {
  const std::vector<Int>& gens = s.minimal_generators();
  size_t g = gens.size();
  if (g > 62) {
    throw std::invalid_argument(
        "embedding dimension too large for face enumeration");
  }
  ShadedComplex complex;
  complex.degree = m;
  complex.vertex_values = gens;
  for (std::uint64_t mask = 0; mask < (std::uint64_t{1} << g); ++mask) {
    Int shift = 0;
    for (size_t i = 0; i < g; ++i) {
      if (mask >> i & 1) shift += gens[i];
    }
    if (s.contains(m - shift)) complex.faces.push_back(mask);
  }
  std::sort(complex.faces.begin(), complex.faces.end(),
            [](std::uint64_t a, std::uint64_t b) {
              return std::popcount(a) != std::popcount(b)
                         ? std::popcount(a) < std::popcount(b)
                         : a < b;
            });
  return complex;
}

std::vector<Int> reduced_homology_dims(const ShadedComplex& complex) {
  size_t g = complex.vertex_values.size();
  // by_dim[k] holds the (k-1)-faces, so by_dim[0] is the empty face slot.
  std::vector<std::vector<std::uint64_t>> by_dim(g + 2);
  for (std::uint64_t mask : complex.faces)
    by_dim[static_cast<size_t>(std::popcount(mask))].push_back(mask);

  std::vector<std::unordered_map<std::uint64_t, size_t>> index(g + 2);
  for (size_t k = 0; k < by_dim.size(); ++k) {
    for (size_t i = 0; i < by_dim[k].size(); ++i) index[k][by_dim[k][i]] = i;
  }

  // boundary_rank[k] = rank of the map C_{k-1} -> C_{k-2} (faces of
  // cardinality k to cardinality k-1), including the augmentation.
  std::vector<int> boundary_rank(g + 3, 0);
  for (size_t k = 1; k <= g + 1; ++k) {
    if (by_dim[k].empty() || by_dim[k - 1].empty()) continue;
    RankAccumulator acc(by_dim[k - 1].size());
    for (std::uint64_t mask : by_dim[k]) {
      std::vector<BigInt> row(by_dim[k - 1].size(), 0);
      int sign = 1;
      for (size_t i = 0; i < g; ++i) {
        if (!(mask >> i & 1)) continue;
        std::uint64_t sub = mask & ~(std::uint64_t{1} << i);
        row[index[k - 1].at(sub)] = sign;  // k = 1 is the augmentation row
        sign = -sign;
      }
      acc.add(std::move(row));
    }
    boundary_rank[k] = acc.rank();
  }

  std::vector<Int> dims(g + 1, 0);
  for (size_t k = 0; k <= g; ++k) {
    // dims[k] = H~ of dimension k-1, carried by faces of cardinality k.
    dims[k] = static_cast<Int>(by_dim[k].size()) - boundary_rank[k] -
              boundary_rank[k + 1];
  }
  return dims;
}

Int degree_bound(const NumericalSemigroup& s) {
  const std::vector<Int>& gens = s.minimal_generators();
  return s.conductor() - 1 + std::accumulate(gens.begin(), gens.end(), Int{0});
}

BettiDiagram betti_diagram(const NumericalSemigroup& s) {
  BettiDiagram diagram;
  diagram.g = s.embedding_dim();
  diagram.theta = degree_bound(s);
  for (Int m : s.elements_up_to(diagram.theta)) {
    std::vector<Int> dims = reduced_homology_dims(shaded_complex(s, m));
    for (Int i = 0; i + 1 < static_cast<Int>(dims.size()); ++i) {
      if (dims[static_cast<size_t>(i) + 1] > 0)
        diagram.entries[{i, m}] = dims[static_cast<size_t>(i) + 1];
    }
  }
  return diagram;
}

bool square_is_symmetric(const BettiDiagram& diagram) {
  // Column -1 is the rank-one free cover in degree 0; the reflection pairs
  // (i, m) with (g - 3 - i, theta - m).
  auto entry = [&](Int i, Int m) -> Int {
    if (i == -1) return m == 0 ? 1 : 0;
    return diagram.beta(i, m);
  };
  auto mirrored = [&](Int i, Int m) {
    return entry(diagram.g - 3 - i, diagram.theta - m);
  };
  if (entry(-1, 0) != mirrored(-1, 0)) return false;
  for (const auto& [key, beta] : diagram.entries) {
    if (beta != mirrored(key.first, key.second)) return false;
  }
  // A zero entry with a nonzero mirror is caught when the loop reaches the
  // mirror, so one pass over the nonzero entries suffices.
  return true;
}

BettiDiagram ci_predicted_diagram(const std::vector<Int>& degrees) {
  size_t r = degrees.size();
  if (r > 30) {
    throw std::invalid_argument("too many relation degrees for enumeration");
  }
  BettiDiagram diagram;
  diagram.g = static_cast<Int>(r) + 1;
  diagram.theta = std::accumulate(degrees.begin(), degrees.end(), Int{0});
  for (std::uint64_t mask = 1; mask < (std::uint64_t{1} << r); ++mask) {
    Int sum = 0;
    for (size_t i = 0; i < r; ++i) {
      if (mask >> i & 1) sum += degrees[i];
    }
    diagram.entries[{std::popcount(mask) - 1, sum}] += 1;
  }
  return diagram;
}

std::vector<int> factorization_components(
    const std::vector<std::vector<Int>>& facts) {
  size_t n = facts.size();
  std::vector<int> parent(n);
  std::iota(parent.begin(), parent.end(), 0);
  auto find = [&](int x) {
    while (parent[static_cast<size_t>(x)] != x) {
      parent[static_cast<size_t>(x)] =
          parent[static_cast<size_t>(parent[static_cast<size_t>(x)])];
      x = parent[static_cast<size_t>(x)];
    }
    return x;
  };
  auto unite = [&](int a, int b) {
    parent[static_cast<size_t>(find(a))] = find(b);
  };
  if (n > 0) {
    size_t width = facts[0].size();
    for (size_t i = 0; i < width; ++i) {
      int first = -1;
      for (size_t f = 0; f < n; ++f) {
        if (facts[f][i] <= 0) continue;
        if (first < 0) {
          first = static_cast<int>(f);
        } else {
          unite(first, static_cast<int>(f));
        }
      }
    }
  }
  std::vector<int> ids(n, -1);
  std::unordered_map<int, int> renumber;
  for (size_t f = 0; f < n; ++f) {
    int root = find(static_cast<int>(f));
    auto it = renumber.emplace(root, static_cast<int>(renumber.size())).first;
    ids[f] = it->second;
  }
  return ids;
}

SyzygyData minimal_relations(const NumericalSemigroup& s) {
  Int g = s.embedding_dim();
  Int theta = degree_bound(s);
  SyzygyData data;
  RankAccumulator span(static_cast<size_t>(g));
  for (Int m : s.elements_up_to(theta)) {
    auto facts = factorizations(s, m);
    std::vector<int> ids = factorization_components(facts);
    int k = ids.empty() ? 0 : 1 + *std::max_element(ids.begin(), ids.end());

    // The component count must reproduce the homological beta_{0,m}.
    std::vector<Int> dims = reduced_homology_dims(shaded_complex(s, m));
    Int beta0 = g >= 1 ? dims[1] : 0;
    if (beta0 != std::max(0, k - 1)) {
      std::ostringstream os;
      os << "degree " << m << ": factorization graph gives " << k - 1
         << " relations but homology gives " << beta0;
      fail(ErrorCode::InternalInconsistency, os.str());
    }
    if (k < 2) continue;

    // Representatives: lexicographically smallest factorization of each
    // component; `facts` is lex-sorted, so first hit per component wins.
    std::vector<std::vector<Int>> reps(static_cast<size_t>(k));
    std::vector<bool> seen(static_cast<size_t>(k), false);
    for (size_t f = 0; f < facts.size(); ++f) {
      size_t id = static_cast<size_t>(ids[f]);
      if (!seen[id]) {
        seen[id] = true;
        reps[id] = facts[f];
      }
    }
    std::sort(reps.begin(), reps.end());
    for (size_t j = 1; j < reps.size(); ++j) {
      Syzygy rel;
      rel.degree = m;
      rel.z.resize(static_cast<size_t>(g));
      for (size_t i = 0; i < rel.z.size(); ++i)
        rel.z[i] = reps[j][i] - reps[0][i];
      span.add(to_bigint(rel.z));
      data.relations.push_back(std::move(rel));
    }
  }
  if (span.rank() != g - 1) {
    fail(ErrorCode::InternalInconsistency,
         "minimal relations do not span a rank g-1 lattice");
  }
  return data;
}

}  // namespace nsgp
