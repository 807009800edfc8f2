#include "graphgeo/exact_rank.hpp"

#include <boost/multiprecision/cpp_int.hpp>
#include <optional>
#include <utility>

namespace graphgeo {

namespace {

struct Checked {
  static bool mul(std::int64_t a, std::int64_t b, std::int64_t& out) { return !__builtin_mul_overflow(a, b, &out); }
  static bool sub(std::int64_t a, std::int64_t b, std::int64_t& out) { return !__builtin_sub_overflow(a, b, &out); }
};

// Bareiss elimination with row pivoting. After step k every remaining entry
// is a (k+1)x(k+1) minor of the input, so the division by the previous pivot
// is exact.
template <typename Int, typename Update>
std::optional<std::size_t> bareiss_rank(std::vector<Int> a, std::size_t rows, std::size_t cols, Update update) {
  auto at = [&](std::size_t r, std::size_t c) -> Int& { return a[r * cols + c]; };
  Int prev = 1;
  std::size_t rank = 0;
  for (std::size_t col = 0; col < cols && rank < rows; ++col) {
    std::size_t pivot = rank;
    while (pivot < rows && at(pivot, col) == 0) ++pivot;
    if (pivot == rows) continue;
    if (pivot != rank)
      for (std::size_t c = col; c < cols; ++c) std::swap(at(pivot, c), at(rank, c));
    const Int p = at(rank, col);
    for (std::size_t r = rank + 1; r < rows; ++r) {
      const Int lead = at(r, col);
      for (std::size_t c = col + 1; c < cols; ++c) {
        if (!update(at(r, c), p, lead, at(rank, c), prev)) return std::nullopt;
      }
      at(r, col) = 0;
    }
    prev = p;
    ++rank;
  }
  return rank;
}

}  // namespace

std::size_t exact_rank(const IntMatrix& m) {
  if (m.rows == 0 || m.cols == 0) return 0;

  // x <- (p*x - lead*y) / prev
  auto fast = [](std::int64_t& x, std::int64_t p, std::int64_t lead, std::int64_t y, std::int64_t prev) {
    std::int64_t a = 0;
    std::int64_t b = 0;
    std::int64_t d = 0;
    if (!Checked::mul(p, x, a) || !Checked::mul(lead, y, b) || !Checked::sub(a, b, d)) return false;
    x = d / prev;
    return true;
  };
  if (auto r = bareiss_rank<std::int64_t>(m.data, m.rows, m.cols, fast)) return *r;

  using boost::multiprecision::cpp_int;
  std::vector<cpp_int> wide(m.data.begin(), m.data.end());
  auto exact = [](cpp_int& x, const cpp_int& p, const cpp_int& lead, const cpp_int& y, const cpp_int& prev) {
    x = (p * x - lead * y) / prev;
    return true;
  };
  return *bareiss_rank<cpp_int>(std::move(wide), m.rows, m.cols, exact);
}

}  // namespace graphgeo
