#pragma once

#include <boost/multiprecision/cpp_int.hpp>
#include <vector>

namespace nsgp {

using BigInt = boost::multiprecision::cpp_int;

/// Incremental rank over Q of a growing set of integer vectors, kept as a
/// fraction-free row echelon with content divided out after each reduction.
class RankAccumulator {
 public:
  explicit RankAccumulator(size_t width) : width_(width) {}

  /// Adds v to the span; returns true when the rank grew.
  bool add(std::vector<BigInt> v);

  int rank() const { return static_cast<int>(echelon_.size()); }

 private:
  size_t width_;
  std::vector<std::vector<BigInt>> echelon_;  // sorted by pivot column
};

/// Rank over Q of an integer matrix given as rows of equal length.
int matrix_rank(const std::vector<std::vector<BigInt>>& rows, size_t width);

std::vector<BigInt> to_bigint(const std::vector<long long>& v);

}  // namespace nsgp
