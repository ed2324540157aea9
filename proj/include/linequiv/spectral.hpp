#pragma once

#include <cstddef>
#include <cstdint>
#include <map>
#include <optional>
#include <random>
#include <vector>

#include "linequiv/gset.hpp"
#include "linequiv/int_lattice.hpp"

namespace linequiv {

struct AdjacencyMatrix {
  std::size_t n = 0;
  std::vector<std::int64_t> entries;  // row-major
  std::int64_t at(std::size_t i, std::size_t j) const { return entries[i * n + j]; }
};

// Coefficients c[0..n] of det(t I - A) = sum c[k] t^k; monic.
struct IntPolynomial {
  std::vector<BigInt> coeffs;
  std::size_t degree() const { return coeffs.empty() ? 0 : coeffs.size() - 1; }
  IntPolynomial operator*(const IntPolynomial& o) const;
  friend bool operator==(const IntPolynomial&, const IntPolynomial&) = default;
};

// S together with the inverse of every element whose inverse is missing in
// multiplicity; the result is inverse-closed as a multiset.
std::vector<Element> symmetrize(const Group& g, std::vector<Element> s);

// A[x][y] = #{s in S : s x = y}, after symmetrizing S.
AdjacencyMatrix schreier_adjacency(const GSet& x, const std::vector<Element>& s);

// Division-free (Berkowitz) characteristic polynomial.
IntPolynomial char_poly(const AdjacencyMatrix& a);

// Product of the characteristic polynomials of the connected components; equal to
// char_poly of the whole matrix.
IntPolynomial schreier_char_poly(const GSet& x, const std::vector<Element>& s);

bool cospectral(const GSet& x, const GSet& y, const std::vector<Element>& s);

inline constexpr std::size_t kMaxMultisetDraws = 10000;

// k uniformly chosen elements, symmetrized, redrawn until they generate the group.
// Throws InvalidArgument after kMaxMultisetDraws failures.
std::vector<Element> random_generating_multiset(const Group& g, std::size_t k, std::mt19937_64& rng);

std::size_t connected_components(const AdjacencyMatrix& a);

}  // namespace linequiv
