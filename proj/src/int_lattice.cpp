#include "linequiv/int_lattice.hpp"

#include <algorithm>
#include <limits>
#include <utility>

#include <boost/multiprecision/cpp_int.hpp>

#include "linequiv/errors.hpp"

namespace linequiv {

using boost::multiprecision::abs;
using BigRational = boost::multiprecision::cpp_rational;

namespace {

void row_axpy(IntVector& dst, const BigInt& q, const IntVector& src) {
  for (std::size_t i = 0; i < dst.size(); ++i) dst[i] -= q * src[i];
}

BigInt floor_div(const BigInt& a, const BigInt& b) {
  BigInt q = a / b;
  if ((a % b != 0) && ((a < 0) != (b < 0))) --q;
  return q;
}

// Nearest integer to a / b, b > 0.
BigInt round_div(const BigInt& a, const BigInt& b) { return floor_div(2 * a + b, 2 * b); }

BigInt dot(const IntVector& a, const IntVector& b) {
  BigInt s = 0;
  for (std::size_t i = 0; i < a.size(); ++i) s += a[i] * b[i];
  return s;
}

}  // namespace

IntMatrix integer_left_kernel(const IntMatrix& a) {
  const std::size_t rows = a.size();
  if (rows == 0) return {};
  const std::size_t cols = a.front().size();
  IntMatrix m = a;
  IntMatrix u(rows, IntVector(rows, 0));
  for (std::size_t i = 0; i < rows; ++i) u[i][i] = 1;

  std::size_t pivot = 0;
  for (std::size_t c = 0; c < cols && pivot < rows; ++c) {
    // Euclid on column c among rows pivot.. until one nonzero entry remains.
    while (true) {
      std::size_t best = rows;
      for (std::size_t r = pivot; r < rows; ++r)
        if (m[r][c] != 0 && (best == rows || abs(m[r][c]) < abs(m[best][c]))) best = r;
      if (best == rows) break;
      std::swap(m[pivot], m[best]);
      std::swap(u[pivot], u[best]);
      bool done = true;
      for (std::size_t r = pivot + 1; r < rows; ++r) {
        if (m[r][c] == 0) continue;
        BigInt q = floor_div(m[r][c], m[pivot][c]);
        row_axpy(m[r], q, m[pivot]);
        row_axpy(u[r], q, u[pivot]);
        if (m[r][c] != 0) done = false;
      }
      if (done) {
        ++pivot;
        break;
      }
    }
  }
  return IntMatrix(u.begin() + static_cast<std::ptrdiff_t>(pivot), u.end());
}

void lll_reduce(IntMatrix& b, long delta_num, long delta_den) {
  // Integral LLL (H. Cohen, A Course in Computational Algebraic Number Theory, 2.6.7),
  // 0-based: d[0] = 1, d[i + 1] is the Gram determinant of the first i + 1 vectors,
  // lam[k][j] = d[j + 1] * mu[k][j].
  const std::size_t n = b.size();
  if (n < 2) return;
  std::vector<BigInt> d(n + 1, 0);
  std::vector<IntVector> lam(n, IntVector(n, 0));
  d[0] = 1;

  auto gram_schmidt_row = [&](std::size_t k) {
    for (std::size_t j = 0; j <= k; ++j) {
      BigInt u = dot(b[k], b[j]);
      for (std::size_t i = 0; i < j; ++i) u = (d[i + 1] * u - lam[k][i] * lam[j][i]) / d[i];
      if (j < k)
        lam[k][j] = u;
      else {
        if (u == 0) throw InvalidArgument("LLL input vectors are linearly dependent");
        d[k + 1] = u;
      }
    }
  };

  auto reduce = [&](std::size_t k, std::size_t l) {
    if (2 * abs(lam[k][l]) > d[l + 1]) {
      BigInt q = round_div(lam[k][l], d[l + 1]);
      row_axpy(b[k], q, b[l]);
      lam[k][l] -= q * d[l + 1];
      for (std::size_t i = 0; i < l; ++i) lam[k][i] -= q * lam[l][i];
    }
  };

  std::size_t kmax = 0;
  gram_schmidt_row(0);
  std::size_t k = 1;
  while (k < n) {
    if (k > kmax) {
      kmax = k;
      gram_schmidt_row(k);
    }
    reduce(k, k - 1);
    // Lovasz: d[k+1] d[k-1] >= delta d[k]^2 - lam^2, scaled by delta_den.
    if (delta_den * d[k + 1] * d[k - 1] < delta_num * d[k] * d[k] - delta_den * lam[k][k - 1] * lam[k][k - 1]) {
      std::swap(b[k], b[k - 1]);
      for (std::size_t j = 0; j + 1 < k; ++j) std::swap(lam[k][j], lam[k - 1][j]);
      BigInt l = lam[k][k - 1];
      BigInt bb = (d[k - 1] * d[k + 1] + l * l) / d[k];
      for (std::size_t i = k + 1; i <= kmax; ++i) {
        BigInt t = lam[i][k];
        lam[i][k] = (d[k + 1] * lam[i][k - 1] - l * t) / d[k];
        lam[i][k - 1] = (bb * t + l * lam[i][k]) / d[k + 1];
      }
      d[k] = bb;
      if (k > 1) --k;
    } else {
      for (std::size_t l = k - 1; l-- > 0;) reduce(k, l);
      ++k;
    }
  }
}

namespace {

// Row echelon form over Q; returns the pivot columns.
std::vector<std::size_t> echelonize(std::vector<std::vector<BigRational>>& m) {
  std::vector<std::size_t> pivots;
  if (m.empty()) return pivots;
  const std::size_t rows = m.size(), cols = m.front().size();
  std::size_t r = 0;
  for (std::size_t c = 0; c < cols && r < rows; ++c) {
    std::size_t p = r;
    while (p < rows && m[p][c] == 0) ++p;
    if (p == rows) continue;
    std::swap(m[r], m[p]);
    for (std::size_t i = 0; i < rows; ++i) {
      if (i == r || m[i][c] == 0) continue;
      BigRational f = m[i][c] / m[r][c];
      for (std::size_t j = c; j < cols; ++j) m[i][j] -= f * m[r][j];
    }
    pivots.push_back(c);
    ++r;
  }
  return pivots;
}

}  // namespace

bool lattice_contains(const IntMatrix& basis, const IntVector& v) {
  if (basis.empty()) {
    return std::all_of(v.begin(), v.end(), [](const BigInt& x) { return x == 0; });
  }
  const std::size_t m = basis.size(), n = v.size();
  // Solve basis^T x = v: columns are basis vectors, augmented with v.
  std::vector<std::vector<BigRational>> aug(n, std::vector<BigRational>(m + 1));
  for (std::size_t i = 0; i < n; ++i) {
    for (std::size_t j = 0; j < m; ++j) aug[i][j] = BigRational(basis[j].at(i));
    aug[i][m] = BigRational(v[i]);
  }
  auto pivots = echelonize(aug);
  if (!pivots.empty() && pivots.back() == m) return false;  // inconsistent
  if (pivots.size() != m) throw InvalidArgument("lattice basis is not independent");
  for (std::size_t r = 0; r < pivots.size(); ++r) {
    BigRational x = aug[r][m] / aug[r][pivots[r]];
    if (boost::multiprecision::denominator(x) != 1) return false;
  }
  return true;
}

std::size_t rational_rank(const IntMatrix& a) {
  std::vector<std::vector<BigRational>> m;
  for (const auto& row : a) m.emplace_back(row.begin(), row.end());
  return echelonize(m).size();
}

IntMatrix to_big(const std::vector<std::vector<std::int64_t>>& a) {
  IntMatrix out;
  for (const auto& row : a) out.emplace_back(row.begin(), row.end());
  return out;
}

std::vector<std::int64_t> to_int64(const IntVector& v) {
  std::vector<std::int64_t> out;
  for (const auto& x : v) {
    if (x > std::numeric_limits<std::int64_t>::max() || x < std::numeric_limits<std::int64_t>::min())
      throw Overflow("integer entry exceeds 64 bits");
    out.push_back(static_cast<std::int64_t>(x));
  }
  return out;
}

}  // namespace linequiv
