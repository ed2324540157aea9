#pragma once

#include <cstddef>
#include <cstdint>
#include <vector>

#include <boost/multiprecision/cpp_int.hpp>

namespace linequiv {

using BigInt = boost::multiprecision::cpp_int;
using IntVector = std::vector<BigInt>;
using IntMatrix = std::vector<IntVector>;  // row-major, all rows of equal length

// Z-basis of the saturated lattice {v : v^T A = 0}. Found by unimodular row reduction of A;
// the transformation rows that annihilate A form the basis.
IntMatrix integer_left_kernel(const IntMatrix& a);

// LLL reduction with parameter delta = num/den, all in exact integer arithmetic.
// Rows must be linearly independent.
void lll_reduce(IntMatrix& basis, long delta_num = 3, long delta_den = 4);

// Whether v is an integer combination of the (independent) basis rows.
bool lattice_contains(const IntMatrix& basis, const IntVector& v);

std::size_t rational_rank(const IntMatrix& a);

IntMatrix to_big(const std::vector<std::vector<std::int64_t>>& a);
// Throws Overflow when an entry does not fit.
std::vector<std::int64_t> to_int64(const IntVector& v);

}  // namespace linequiv
