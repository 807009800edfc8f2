#pragma once

#include <cstddef>
#include <cstdint>
#include <vector>

namespace graphgeo {

/// Dense integer matrix, row-major.
struct IntMatrix {
  std::size_t rows = 0;
  std::size_t cols = 0;
  std::vector<std::int64_t> data;

  IntMatrix() = default;
  IntMatrix(std::size_t r, std::size_t c) : rows(r), cols(c), data(r * c, 0) {}

  std::int64_t& operator()(std::size_t r, std::size_t c) { return data[r * cols + c]; }
  std::int64_t operator()(std::size_t r, std::size_t c) const { return data[r * cols + c]; }
};

/// Rank over the rationals by fraction-free (Bareiss) elimination.
/// Runs in 64-bit arithmetic and redoes the elimination with arbitrary
/// precision integers if an intermediate value would overflow.
std::size_t exact_rank(const IntMatrix& m);

}  // namespace graphgeo
