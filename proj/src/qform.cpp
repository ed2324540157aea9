#include "linequiv/qform.hpp"

#include <algorithm>
#include <cmath>
#include <numeric>

#include "linequiv/errors.hpp"

namespace linequiv {

namespace {

using i128 = __int128;

std::int64_t isqrt(i128 v) {
  if (v <= 0) return 0;
  auto r = static_cast<i128>(std::sqrt(static_cast<long double>(v)));
  while (r * r > v) --r;
  while ((r + 1) * (r + 1) <= v) ++r;
  return static_cast<std::int64_t>(r);
}

i128 floor_div(i128 a, i128 b) {
  i128 q = a / b;
  if ((a % b != 0) && ((a < 0) != (b < 0))) --q;
  return q;
}

i128 ceil_div(i128 a, i128 b) { return -floor_div(-a, b); }

std::int64_t narrow(i128 v) {
  if (v > INT64_MAX || v < INT64_MIN) throw Overflow("quadratic form entry exceeds 64 bits");
  return static_cast<std::int64_t>(v);
}

}  // namespace

ReducedForm reduce(const QForm& q) {
  if (!q.positive_definite()) throw InvalidArgument("form is not positive definite");
  i128 a = q.a, b = 2 * static_cast<i128>(q.b), c = q.c;
  while (true) {
    if (a > c) {
      std::swap(a, c);
      b = -b;
    }
    if (b > a || b < -a) {
      // m -> m - k n with k nearest to b / 2a
      i128 k = floor_div(b + a, 2 * a);
      c = a * k * k - b * k + c;
      b = b - 2 * k * a;
      continue;
    }
    if (a <= c) break;
  }
  if (b < 0) b = -b;
  return {narrow(a), narrow(b), narrow(c), q.denominator};
}

QForm transform(const QForm& f, std::int64_t p, std::int64_t q, std::int64_t r, std::int64_t s) {
  // Variables (m, n) -> (p m + q n, r m + s n).
  i128 a = static_cast<i128>(f.a) * p * p + 2 * static_cast<i128>(f.b) * p * r + static_cast<i128>(f.c) * r * r;
  i128 b = static_cast<i128>(f.a) * p * q + static_cast<i128>(f.b) * (p * s + q * r) + static_cast<i128>(f.c) * r * s;
  i128 c = static_cast<i128>(f.a) * q * q + 2 * static_cast<i128>(f.b) * q * s + static_cast<i128>(f.c) * s * s;
  return {narrow(a), narrow(b), narrow(c), f.denominator};
}

QForm torus_quotient_form(long p, const std::vector<std::pair<long, long>>& h_generators) {
  if (p < 1) throw InvalidArgument("p must be positive");
  // Dual lattice {w in Z^2 : w . h = 0 mod p for all h}; it contains p Z^2, so its
  // Hermite basis (alpha, beta), (0, gamma) is read off from residues mod p.
  auto in_dual = [&](long u, long v) {
    return std::all_of(h_generators.begin(), h_generators.end(), [&](const auto& h) {
      return ((u * h.first + v * h.second) % p + p) % p == 0;
    });
  };
  long gamma = p;
  for (long v = 1; v < p; ++v)
    if (in_dual(0, v)) {
      gamma = v;
      break;
    }
  long alpha = p, beta = 0;
  for (long u = 1; u < p && alpha == p; ++u)
    for (long v = 0; v < p; ++v)
      if (in_dual(u, v)) {
        alpha = u;
        beta = v % gamma;
        break;
      }
  return {alpha * alpha + beta * beta, beta * gamma, gamma * gamma, 1};
}

RepCounts representation_counts(const std::vector<QForm>& forms, std::int64_t bound) {
  if (bound < 0) throw InvalidArgument("bound must be nonnegative");
  RepCounts out;
  for (const auto& f : forms) {
    if (!f.positive_definite() || f.denominator <= 0) throw InvalidArgument("form is not positive definite");
    out.denominator = std::lcm(out.denominator, f.denominator);
  }
  const i128 top = static_cast<i128>(bound) * out.denominator;
  out.counts.assign(static_cast<std::size_t>(narrow(top)) + 1, 0);
  for (const auto& f : forms) {
    const i128 scale = out.denominator / f.denominator;
    const i128 a = f.a * scale, b = f.b * scale, c = f.c * scale;
    const i128 det = a * c - b * b;
    // a q = (a m + b n)^2 + det n^2, so det n^2 <= a * top.
    const std::int64_t nmax = isqrt(a * top / det);
    for (i128 n = -nmax; n <= nmax; ++n) {
      i128 room = a * top - det * n * n;
      if (room < 0) continue;
      i128 s = isqrt(room);
      for (i128 m = ceil_div(-s - b * n, a); m <= floor_div(s - b * n, a); ++m) {
        i128 value = a * m * m + 2 * b * m * n + c * n * n;
        if (value <= top) ++out.counts[static_cast<std::size_t>(value)];
      }
    }
  }
  return out;
}

HeckeVerdict hecke_check(long p, std::int64_t bound) {
  if (p < 2) throw InvalidArgument("p must be at least 2");
  HeckeVerdict v;
  v.p = p;
  v.bound = bound;
  for (long lambda = 0; lambda < p; ++lambda) v.x_forms.push_back(torus_quotient_form(p, {{1, lambda}}));
  v.x_forms.push_back(torus_quotient_form(p, {{0, 1}}));
  v.y_forms.push_back(torus_quotient_form(p, {}));
  for (long i = 0; i < p; ++i) v.y_forms.push_back(torus_quotient_form(p, {{1, 0}, {0, 1}}));
  RepCounts x = representation_counts(v.x_forms, bound);
  RepCounts y = representation_counts(v.y_forms, bound);
  v.equal = x.counts == y.counts;
  for (std::size_t t = 0; t < x.counts.size() && !v.equal; ++t)
    if (x.counts[t] != y.counts[t]) {
      v.witness = static_cast<std::int64_t>(t);
      v.x_count = x.counts[t];
      v.y_count = y.counts[t];
      break;
    }
  return v;
}

}  // namespace linequiv
