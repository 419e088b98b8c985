#include "nsgp/linalg.hpp"

namespace nsgp {

namespace {

size_t pivot_column(const std::vector<BigInt>& row) {
  size_t j = 0;
  while (j < row.size() && row[j] == 0) ++j;
  return j;
}

void divide_by_content(std::vector<BigInt>& row) {
  BigInt g = 0;
  for (const BigInt& x : row) g = boost::multiprecision::gcd(g, x);
  if (g > 1) {
    for (BigInt& x : row) x /= g;
  }
}

}  // namespace

bool RankAccumulator::add(std::vector<BigInt> v) {
  v.resize(width_, 0);
  for (const auto& row : echelon_) {
    size_t p = pivot_column(row);
    if (v[p] == 0) continue;
    // v := v * row[p] - row * v[p], zeroing column p without fractions.
    // The whole vector must be scaled, not just columns >= p: v may hold
    // nonzero entries at non-pivot columns left of p (row[j] = 0 there).
    BigInt a = row[p], b = v[p];
    for (size_t j = 0; j < width_; ++j) v[j] = v[j] * a - row[j] * b;
  }
  size_t p = pivot_column(v);
  if (p == width_) return false;
  divide_by_content(v);
  auto pos = echelon_.begin();
  while (pos != echelon_.end() && pivot_column(*pos) < p) ++pos;
  echelon_.insert(pos, std::move(v));
  return true;
}

int matrix_rank(const std::vector<std::vector<BigInt>>& rows, size_t width) {
  RankAccumulator acc(width);
  for (const auto& row : rows) acc.add(row);
  return acc.rank();
}

std::vector<BigInt> to_bigint(const std::vector<long long>& v) {
  return std::vector<BigInt>(v.begin(), v.end());
}

}  // namespace nsgp
