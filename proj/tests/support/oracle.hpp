#pragma once

// Brute-force reference computations. None of these call the library's algorithms
// beyond element access, so they can check them independently.

#include <algorithm>
#include <boost/multiprecision/cpp_int.hpp>
#include <cstdint>
#include <numeric>
#include <set>
#include <vector>

#include "linequiv/group.hpp"
#include "linequiv/gset.hpp"

namespace linequiv::oracle {

using boost::multiprecision::cpp_int;
using boost::multiprecision::cpp_rational;

inline std::vector<Point> compose(const std::vector<Point>& p, const std::vector<Point>& q) {
  std::vector<Point> out(q.size());
  for (std::size_t i = 0; i < q.size(); ++i) out[i] = p[q[i]];
  return out;
}

inline std::vector<Point> images(const Group& g, Element e) {
  const Permutation& p = g.element(e);
  std::vector<Point> out(p.degree());
  for (std::size_t i = 0; i < out.size(); ++i) out[i] = p(static_cast<Point>(i));
  return out;
}

// Element index of the product, found by comparing image arrays.
inline Element product(const Group& g, Element a, Element b) {
  auto target = compose(images(g, a), images(g, b));
  for (Element e = 0; e < g.order(); ++e)
    if (images(g, e) == target) return e;
  return static_cast<Element>(-1);
}

inline std::vector<std::vector<Element>> multiplication_table(const Group& g) {
  std::vector<std::vector<Element>> t(g.order(), std::vector<Element>(g.order()));
  for (Element a = 0; a < g.order(); ++a)
    for (Element b = 0; b < g.order(); ++b) t[a][b] = product(g, a, b);
  return t;
}

inline std::vector<Element> inverses(const std::vector<std::vector<Element>>& t) {
  std::vector<Element> inv(t.size());
  for (Element a = 0; a < t.size(); ++a)
    for (Element b = 0; b < t.size(); ++b)
      if (t[a][b] == 0) inv[a] = b;
  return inv;
}

// Set partition into conjugacy classes, each sorted.
inline std::set<std::vector<Element>> conjugacy_classes(const Group& g) {
  auto t = multiplication_table(g);
  auto inv = inverses(t);
  std::set<std::vector<Element>> out;
  for (Element x = 0; x < g.order(); ++x) {
    std::set<Element> cls;
    for (Element y = 0; y < g.order(); ++y) cls.insert(t[t[y][x]][inv[y]]);
    out.insert({cls.begin(), cls.end()});
  }
  return out;
}

// Number of subgroups by testing every subset containing the identity. Only for |G| <= 16.
inline std::size_t subgroup_count_by_subsets(const Group& g) {
  auto t = multiplication_table(g);
  const std::size_t n = g.order();
  std::size_t count = 0;
  for (std::uint64_t mask = 1; mask < (std::uint64_t{1} << n); mask += 2) {
    bool closed = true;
    for (std::size_t a = 0; a < n && closed; ++a)
      if (mask >> a & 1)
        for (std::size_t b = 0; b < n && closed; ++b)
          if ((mask >> b & 1) && !(mask >> t[a][b] & 1)) closed = false;
    count += closed;
  }
  return count;
}

// |{cosets xH : g x H = x H}| = |{x : x^-1 g x in H}| / |H|.
inline std::int64_t coset_fixed_points(const Group& g, const std::vector<Element>& h, Element e) {
  auto t = multiplication_table(g);
  auto inv = inverses(t);
  std::int64_t count = 0;
  for (Element x = 0; x < g.order(); ++x)
    if (std::find(h.begin(), h.end(), t[t[inv[x]][e]][x]) != h.end()) ++count;
  return count / static_cast<std::int64_t>(h.size());
}

// Equivariant maps X -> Y by exhaustive enumeration of all |Y|^|X| functions.
inline std::size_t hom_count_exhaustive(const GSet& x, const GSet& y) {
  const std::size_t nx = x.size(), ny = y.size();
  if (nx == 0) return 1;
  if (ny == 0) return 0;
  std::vector<Point> f(nx, 0);
  std::size_t count = 0;
  while (true) {
    bool ok = true;
    for (Element e = 0; e < x.group().order() && ok; ++e)
      for (Point p = 0; p < nx && ok; ++p)
        if (f[x.act(e, p)] != y.act(e, f[p])) ok = false;
    count += ok;
    std::size_t i = 0;
    while (i < nx && ++f[i] == ny) f[i++] = 0;
    if (i == nx) break;
  }
  return count;
}

// Orbits of the diagonal action on X x Y.
inline std::size_t diagonal_orbit_count(const GSet& x, const GSet& y) {
  const std::size_t n = x.size() * y.size();
  std::vector<std::size_t> parent(n);
  std::iota(parent.begin(), parent.end(), 0);
  auto find = [&](std::size_t v) {
    while (parent[v] != v) v = parent[v] = parent[parent[v]];
    return v;
  };
  for (Element e = 0; e < x.group().order(); ++e)
    for (Point a = 0; a < x.size(); ++a)
      for (Point b = 0; b < y.size(); ++b)
        parent[find(a * y.size() + b)] = find(x.act(e, a) * y.size() + y.act(e, b));
  std::size_t roots = 0;
  for (std::size_t v = 0; v < n; ++v) roots += find(v) == v;
  return roots;
}

inline std::size_t rational_rank(std::vector<std::vector<cpp_rational>> m) {
  std::size_t rank = 0;
  const std::size_t cols = m.empty() ? 0 : m[0].size();
  for (std::size_t c = 0; c < cols && rank < m.size(); ++c) {
    std::size_t piv = rank;
    while (piv < m.size() && m[piv][c] == 0) ++piv;
    if (piv == m.size()) continue;
    std::swap(m[piv], m[rank]);
    for (std::size_t r = 0; r < m.size(); ++r) {
      if (r == rank || m[r][c] == 0) continue;
      cpp_rational f = m[r][c] / m[rank][c];
      for (std::size_t k = c; k < cols; ++k) m[r][k] -= f * m[rank][k];
    }
    ++rank;
  }
  return rank;
}

template <typename Int>
std::size_t rational_rank_of(const std::vector<std::vector<Int>>& rows) {
  std::vector<std::vector<cpp_rational>> m;
  for (const auto& r : rows) {
    m.emplace_back();
    for (const auto& v : r) m.back().emplace_back(cpp_int(v));
  }
  return rational_rank(std::move(m));
}

// Exact determinant by rational elimination.
inline cpp_int determinant(std::vector<std::vector<cpp_int>> a) {
  const std::size_t n = a.size();
  std::vector<std::vector<cpp_rational>> m(n);
  for (std::size_t i = 0; i < n; ++i)
    for (const auto& v : a[i]) m[i].emplace_back(v);
  cpp_rational det = 1;
  for (std::size_t c = 0; c < n; ++c) {
    std::size_t piv = c;
    while (piv < n && m[piv][c] == 0) ++piv;
    if (piv == n) return 0;
    if (piv != c) {
      std::swap(m[piv], m[c]);
      det = -det;
    }
    det *= m[c][c];
    for (std::size_t r = c + 1; r < n; ++r) {
      cpp_rational f = m[r][c] / m[c][c];
      for (std::size_t k = c; k < n; ++k) m[r][k] -= f * m[c][k];
    }
  }
  return boost::multiprecision::numerator(det);
}

// gcd of all maximal minors of a k x n integer matrix (k <= n). Equal to 1 iff the
// rows span a saturated sublattice of Z^n.
inline cpp_int maximal_minor_gcd(const std::vector<std::vector<std::int64_t>>& rows) {
  const std::size_t k = rows.size(), n = rows.empty() ? 0 : rows[0].size();
  std::vector<std::size_t> pick(k);
  std::iota(pick.begin(), pick.end(), 0);
  cpp_int g = 0;
  while (true) {
    std::vector<std::vector<cpp_int>> sq(k, std::vector<cpp_int>(k));
    for (std::size_t i = 0; i < k; ++i)
      for (std::size_t j = 0; j < k; ++j) sq[i][j] = rows[i][pick[j]];
    g = boost::multiprecision::gcd(g, abs(determinant(sq)));
    if (g == 1) return g;
    std::size_t i = k;
    while (i > 0 && pick[i - 1] == n - k + i - 1) --i;
    if (i == 0) break;
    ++pick[i - 1];
    for (std::size_t j = i; j < k; ++j) pick[j] = pick[j - 1] + 1;
  }
  return g;
}

inline cpp_rational dot(const std::vector<cpp_rational>& a, const std::vector<cpp_rational>& b) {
  cpp_rational s = 0;
  for (std::size_t i = 0; i < a.size(); ++i) s += a[i] * b[i];
  return s;
}

// Size reduction |mu_ij| <= 1/2 and the Lovasz condition with delta = 3/4.
inline bool lll_reduced(const std::vector<std::vector<std::int64_t>>& basis) {
  const std::size_t k = basis.size();
  std::vector<std::vector<cpp_rational>> b(k), star(k);
  for (std::size_t i = 0; i < k; ++i)
    for (auto v : basis[i]) b[i].emplace_back(v);
  std::vector<std::vector<cpp_rational>> mu(k, std::vector<cpp_rational>(k));
  std::vector<cpp_rational> norm(k);
  for (std::size_t i = 0; i < k; ++i) {
    star[i] = b[i];
    for (std::size_t j = 0; j < i; ++j) {
      mu[i][j] = dot(b[i], star[j]) / norm[j];
      for (std::size_t c = 0; c < star[i].size(); ++c) star[i][c] -= mu[i][j] * star[j][c];
    }
    norm[i] = dot(star[i], star[i]);
    if (norm[i] == 0) return false;
  }
  const cpp_rational half(1, 2), delta(3, 4);
  for (std::size_t i = 0; i < k; ++i)
    for (std::size_t j = 0; j < i; ++j)
      if (abs(mu[i][j]) > half) return false;
  for (std::size_t i = 1; i < k; ++i)
    if (norm[i] < (delta - mu[i][i - 1] * mu[i][i - 1]) * norm[i - 1]) return false;
  return true;
}

}  // namespace linequiv::oracle
