#include "bnsigma/linalg.hpp"

#include <boost/multiprecision/cpp_int.hpp>
#include <numeric>
#include <utility>

#include "bnsigma/error.hpp"

namespace bnsigma {

namespace {

using boost::multiprecision::cpp_int;
using BigMatrix = std::vector<std::vector<cpp_int>>;

BigMatrix to_big(const IntMatrix& a) {
  BigMatrix m(a.rows, std::vector<cpp_int>(a.cols));
  for (std::size_t r = 0; r < a.rows; ++r)
    for (std::size_t c = 0; c < a.cols; ++c) m[r][c] = a(r, c);
  return m;
}

std::int64_t narrow(const cpp_int& v) {
  if (v > std::numeric_limits<std::int64_t>::max() || v < std::numeric_limits<std::int64_t>::min()) {
    throw Error(ErrorKind::OutOfRange, "integer kernel entry exceeds 64 bits");
  }
  return v.convert_to<std::int64_t>();
}

// Row-style Hermite normal form, in place. Zero rows are dropped.
void hermite_rows(BigMatrix& rows, std::size_t cols) {
  std::size_t pivot_row = 0;
  for (std::size_t c = 0; c < cols && pivot_row < rows.size(); ++c) {
    // Euclid on column c among rows >= pivot_row.
    for (;;) {
      std::size_t best = rows.size();
      for (std::size_t i = pivot_row; i < rows.size(); ++i) {
        if (rows[i][c] != 0 && (best == rows.size() || abs(rows[i][c]) < abs(rows[best][c]))) best = i;
      }
      if (best == rows.size()) break;
      std::swap(rows[pivot_row], rows[best]);
      bool done = true;
      for (std::size_t i = pivot_row + 1; i < rows.size(); ++i) {
        if (rows[i][c] == 0) continue;
        cpp_int q = rows[i][c] / rows[pivot_row][c];
        for (std::size_t k = 0; k < cols; ++k) rows[i][k] -= q * rows[pivot_row][k];
        if (rows[i][c] != 0) done = false;
      }
      if (done) break;
    }
    if (rows[pivot_row][c] == 0) continue;
    if (rows[pivot_row][c] < 0)
      for (auto& x : rows[pivot_row]) x = -x;
    const cpp_int& p = rows[pivot_row][c];
    for (std::size_t i = 0; i < pivot_row; ++i) {
      cpp_int q = rows[i][c] / p;
      if (rows[i][c] - q * p < 0) q -= 1;
      if (q != 0)
        for (std::size_t k = 0; k < cols; ++k) rows[i][k] -= q * rows[pivot_row][k];
    }
    ++pivot_row;
  }
  rows.resize(pivot_row);
}

}  // namespace

std::size_t rational_rank(const IntMatrix& a) {
  BigMatrix m = to_big(a);
  std::size_t rank = 0;
  cpp_int prev = 1;
  for (std::size_t c = 0; c < a.cols && rank < a.rows; ++c) {
    std::size_t pivot = rank;
    while (pivot < a.rows && m[pivot][c] == 0) ++pivot;
    if (pivot == a.rows) continue;
    std::swap(m[rank], m[pivot]);
    for (std::size_t i = rank + 1; i < a.rows; ++i) {
      for (std::size_t k = c + 1; k < a.cols; ++k) {
        m[i][k] = (m[rank][c] * m[i][k] - m[i][c] * m[rank][k]) / prev;
      }
      m[i][c] = 0;
    }
    prev = m[rank][c];
    ++rank;
  }
  return rank;
}

std::vector<std::vector<std::int64_t>> integer_kernel(const IntMatrix& a) {
  // Unimodular column operations bring `a` to column echelon form; the
  // transform's columns past the last pivot span the integer kernel.
  BigMatrix m = to_big(a);
  const std::size_t n = a.cols;
  BigMatrix u(n, std::vector<cpp_int>(n));
  for (std::size_t i = 0; i < n; ++i) u[i][i] = 1;

  auto col_axpy = [&](std::size_t dst, std::size_t src, const cpp_int& q) {
    for (std::size_t r = 0; r < a.rows; ++r) m[r][dst] -= q * m[r][src];
    for (std::size_t r = 0; r < n; ++r) u[r][dst] -= q * u[r][src];
  };
  auto col_swap = [&](std::size_t x, std::size_t y) {
    for (std::size_t r = 0; r < a.rows; ++r) std::swap(m[r][x], m[r][y]);
    for (std::size_t r = 0; r < n; ++r) std::swap(u[r][x], u[r][y]);
  };

  std::size_t pivot = 0;
  for (std::size_t r = 0; r < a.rows && pivot < n; ++r) {
    for (;;) {
      std::size_t best = n;
      for (std::size_t c = pivot; c < n; ++c) {
        if (m[r][c] != 0 && (best == n || abs(m[r][c]) < abs(m[r][best]))) best = c;
      }
      if (best == n) break;
      col_swap(pivot, best);
      bool done = true;
      for (std::size_t c = pivot + 1; c < n; ++c) {
        if (m[r][c] == 0) continue;
        col_axpy(c, pivot, m[r][c] / m[r][pivot]);
        if (m[r][c] != 0) done = false;
      }
      if (done) break;
    }
    if (m[r][pivot] != 0) ++pivot;
  }

  BigMatrix basis;
  for (std::size_t c = pivot; c < n; ++c) {
    std::vector<cpp_int> v(n);
    for (std::size_t r = 0; r < n; ++r) v[r] = u[r][c];
    basis.push_back(std::move(v));
  }
  hermite_rows(basis, n);

  std::vector<std::vector<std::int64_t>> out;
  for (const auto& row : basis) {
    std::vector<std::int64_t> v;
    for (const auto& x : row) v.push_back(narrow(x));
    out.push_back(std::move(v));
  }
  return out;
}

std::int64_t content(const std::vector<std::int64_t>& v) {
  std::int64_t g = 0;
  for (auto x : v) g = std::gcd(g, x < 0 ? -x : x);
  return g;
}

}  // namespace bnsigma
