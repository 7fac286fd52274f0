#pragma once

#include <cstddef>
#include <cstdint>
#include <vector>

namespace bnsigma {

// Dense integer matrix, row-major. Entries are exponent sums, so 64 bits is
// ample for storage; elimination itself runs on arbitrary-precision integers.
struct IntMatrix {
  std::size_t rows = 0;
  std::size_t cols = 0;
  std::vector<std::int64_t> data;

  IntMatrix() = default;
  IntMatrix(std::size_t r, std::size_t c) : rows(r), cols(c), data(r * c, 0) {}

  std::int64_t& operator()(std::size_t r, std::size_t c) { return data[r * cols + c]; }
  std::int64_t operator()(std::size_t r, std::size_t c) const { return data[r * cols + c]; }

  friend bool operator==(const IntMatrix&, const IntMatrix&) = default;
};

// Rank over Q by fraction-free (Bareiss) elimination.
std::size_t rational_rank(const IntMatrix& a);

// Basis of {v in Z^cols : a v = 0}, in Hermite normal form (rows of the
// returned list are the basis vectors; leading entries positive).
std::vector<std::vector<std::int64_t>> integer_kernel(const IntMatrix& a);

std::int64_t content(const std::vector<std::int64_t>& v);

}  // namespace bnsigma
