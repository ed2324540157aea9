#pragma once

#include <cstddef>
#include <cstdint>
#include <optional>
#include <utility>
#include <vector>

namespace linequiv {

// Positive-definite binary form with Gram matrix [[a, b], [b, c]] / denominator:
// q(m, n) = (a m^2 + 2 b m n + c n^2) / denominator.
struct QForm {
  std::int64_t a = 1;
  std::int64_t b = 0;
  std::int64_t c = 1;
  std::int64_t denominator = 1;

  std::int64_t determinant_numerator() const { return a * c - b * b; }
  bool positive_definite() const { return a > 0 && determinant_numerator() > 0; }
  friend bool operator==(const QForm&, const QForm&) = default;
};

// Gauss-reduced representative of the GL2(Z)-class as (a, B, c) for a m^2 + B m n + c n^2
// with 0 <= B <= a <= c (numerators over the same denominator).
struct ReducedForm {
  std::int64_t a, b, c, denominator;
  friend bool operator==(const ReducedForm&, const ReducedForm&) = default;
  friend auto operator<=>(const ReducedForm&, const ReducedForm&) = default;
};
ReducedForm reduce(const QForm& q);

// g^T G g for a 2x2 integer matrix {{p, q}, {r, s}} acting on the variables.
QForm transform(const QForm& f, std::int64_t p, std::int64_t q, std::int64_t r, std::int64_t s);

// Translation subgroup H of (Z/p)^2, given by generators (x, y) acting as
// (u, v) -> (u + x/p, v + y/p) on R^2/Z^2. Returns the form of the dual lattice of
// Z^2 + (1/p) H, whose values are the Laplace eigenvalues of the quotient torus / 4 pi^2.
QForm torus_quotient_form(long p, const std::vector<std::pair<long, long>>& h_generators);

// counts[t] = number of (form, m, n) with q(m, n) = t / common denominator, t <= bound.
struct RepCounts {
  std::int64_t denominator = 1;
  std::vector<std::int64_t> counts;  // indexed by t
};

RepCounts representation_counts(const std::vector<QForm>& forms, std::int64_t bound);

struct HeckeVerdict {
  long p = 0;
  std::int64_t bound = 0;
  bool equal = false;
  std::optional<std::int64_t> witness;  // smallest t with differing counts
  std::int64_t x_count = 0;             // counts at the witness
  std::int64_t y_count = 0;
  std::vector<QForm> x_forms;
  std::vector<QForm> y_forms;
};

// X side: the tori for H_l = <(1, l)>, l = 0..p-1, and H_inf = <(0, 1)>.
// Y side: the full torus and p copies of the torus mod (Z/p)^2.
HeckeVerdict hecke_check(long p, std::int64_t bound);

}  // namespace linequiv
