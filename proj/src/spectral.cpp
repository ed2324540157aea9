#include "linequiv/spectral.hpp"

#include <algorithm>
#include <map>
#include <string>

#include "linequiv/errors.hpp"
#include "linequiv/subgroups.hpp"

namespace linequiv {

IntPolynomial IntPolynomial::operator*(const IntPolynomial& o) const {
  if (coeffs.empty() || o.coeffs.empty()) return {};
  IntPolynomial out;
  out.coeffs.assign(coeffs.size() + o.coeffs.size() - 1, 0);
  for (std::size_t i = 0; i < coeffs.size(); ++i)
    for (std::size_t j = 0; j < o.coeffs.size(); ++j) out.coeffs[i + j] += coeffs[i] * o.coeffs[j];
  return out;
}

std::vector<Element> symmetrize(const Group& g, std::vector<Element> s) {
  std::map<Element, std::size_t> count;
  for (Element e : s) {
    if (e >= g.order()) throw InvalidArgument("element index out of range");
    ++count[e];
  }
  std::vector<Element> out;
  for (auto [e, c] : count) {
    Element inv = g.inverse(e);
    auto it = count.find(inv);
    std::size_t ci = it == count.end() ? 0 : it->second;
    out.insert(out.end(), std::max(c, ci), e);
  }
  for (auto [e, c] : count) {
    Element inv = g.inverse(e);
    if (!count.count(inv)) out.insert(out.end(), c, inv);
  }
  std::sort(out.begin(), out.end());
  return out;
}

AdjacencyMatrix schreier_adjacency(const GSet& x, const std::vector<Element>& s) {
  auto sym = symmetrize(x.group(), s);
  AdjacencyMatrix a{x.size(), std::vector<std::int64_t>(x.size() * x.size(), 0)};
  for (Element e : sym)
    for (Point p = 0; p < x.size(); ++p) ++a.entries[p * a.n + x.act(e, p)];
  return a;
}

IntPolynomial char_poly(const AdjacencyMatrix& a) {
  // Berkowitz: p_k = T_k p_{k-1}, where T_k is lower-triangular Toeplitz with first
  // column (1, -a_kk, -R C, -R A C, ..., -R A^{k-2} C) for the bordering row R and
  // column C of the k-th leading principal submatrix.
  const std::size_t n = a.n;
  std::vector<BigInt> p{1};  // decreasing degree
  for (std::size_t k = 0; k < n; ++k) {
    std::vector<BigInt> q(k + 2);
    q[0] = 1;
    q[1] = -BigInt(a.at(k, k));
    std::vector<BigInt> v(k);
    for (std::size_t i = 0; i < k; ++i) v[i] = a.at(i, k);
    for (std::size_t j = 2; j <= k + 1; ++j) {
      BigInt rv = 0;
      for (std::size_t i = 0; i < k; ++i) rv += a.at(k, i) * v[i];
      q[j] = -rv;
      std::vector<BigInt> next(k, 0);
      for (std::size_t r = 0; r < k; ++r)
        for (std::size_t c = 0; c < k; ++c)
          if (a.at(r, c) != 0) next[r] += a.at(r, c) * v[c];
      v = std::move(next);
    }
    std::vector<BigInt> np(k + 2, 0);
    for (std::size_t i = 0; i <= k + 1; ++i)
      for (std::size_t j = 0; j <= std::min(i, k); ++j) np[i] += q[i - j] * p[j];
    p = std::move(np);
  }
  std::reverse(p.begin(), p.end());
  return {p};
}

namespace {

std::vector<std::size_t> component_labels(const AdjacencyMatrix& a, std::size_t& count) {
  std::vector<std::size_t> label(a.n, SIZE_MAX);
  count = 0;
  for (std::size_t s = 0; s < a.n; ++s) {
    if (label[s] != SIZE_MAX) continue;
    std::vector<std::size_t> stack{s};
    label[s] = count;
    while (!stack.empty()) {
      std::size_t u = stack.back();
      stack.pop_back();
      for (std::size_t w = 0; w < a.n; ++w)
        if ((a.at(u, w) != 0 || a.at(w, u) != 0) && label[w] == SIZE_MAX) {
          label[w] = count;
          stack.push_back(w);
        }
    }
    ++count;
  }
  return label;
}

}  // namespace

std::size_t connected_components(const AdjacencyMatrix& a) {
  std::size_t count = 0;
  component_labels(a, count);
  return count;
}

IntPolynomial schreier_char_poly(const GSet& x, const std::vector<Element>& s) {
  AdjacencyMatrix a = schreier_adjacency(x, s);
  std::size_t count = 0;
  auto label = component_labels(a, count);
  IntPolynomial out{{1}};
  for (std::size_t c = 0; c < count; ++c) {
    std::vector<std::size_t> verts;
    for (std::size_t v = 0; v < a.n; ++v)
      if (label[v] == c) verts.push_back(v);
    AdjacencyMatrix sub{verts.size(), std::vector<std::int64_t>(verts.size() * verts.size())};
    for (std::size_t i = 0; i < verts.size(); ++i)
      for (std::size_t j = 0; j < verts.size(); ++j) sub.entries[i * sub.n + j] = a.at(verts[i], verts[j]);
    out = out * char_poly(sub);
  }
  return out;
}

bool cospectral(const GSet& x, const GSet& y, const std::vector<Element>& s) {
  if (x.group_ptr() != y.group_ptr()) throw InvalidArgument("G-sets over different groups");
  return schreier_char_poly(x, s) == schreier_char_poly(y, s);
}

std::vector<Element> random_generating_multiset(const Group& g, std::size_t k, std::mt19937_64& rng) {
  if (k == 0) throw InvalidArgument("multiset size must be positive");
  // k below the minimal number of generators would never succeed.
  for (std::size_t attempt = 0; attempt < kMaxMultisetDraws; ++attempt) {
    std::vector<Element> s;
    for (std::size_t i = 0; i < k; ++i) s.push_back(static_cast<Element>(rng() % g.order()));
    if (generate_subgroup(g, s).order() == g.order()) return symmetrize(g, std::move(s));
  }
  throw InvalidArgument("no generating multiset of size " + std::to_string(k) + " found in " +
                        std::to_string(kMaxMultisetDraws) + " draws");
}

}  // namespace linequiv
