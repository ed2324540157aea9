#include "linequiv/burnside.hpp"

#include <algorithm>
#include <map>

#include "linequiv/errors.hpp"
#include "linequiv/int_lattice.hpp"

namespace linequiv {

bool BurnsideElement::is_zero() const {
  return std::all_of(coeffs.begin(), coeffs.end(), [](std::int64_t c) { return c == 0; });
}

BurnsideElement BurnsideElement::operator+(const BurnsideElement& o) const {
  if (coeffs.size() != o.coeffs.size()) throw InvalidArgument("Burnside elements of different rank");
  BurnsideElement out = *this;
  for (std::size_t i = 0; i < coeffs.size(); ++i)
    if (__builtin_add_overflow(out.coeffs[i], o.coeffs[i], &out.coeffs[i]))
      throw Overflow("Burnside coefficient overflow");
  return out;
}

BurnsideElement BurnsideElement::operator-() const {
  BurnsideElement out = *this;
  for (auto& c : out.coeffs) {
    if (c == INT64_MIN) throw Overflow("Burnside coefficient overflow");
    c = -c;
  }
  return out;
}

BurnsideElement BurnsideElement::operator-(const BurnsideElement& o) const { return *this + (-o); }

std::vector<std::int64_t> CharacterMatrix::row(std::size_t i) const {
  return {entries.begin() + static_cast<std::ptrdiff_t>(i * cols),
          entries.begin() + static_cast<std::ptrdiff_t>((i + 1) * cols)};
}

PermCharacter quasiregular_character(const Group& g, const Subgroup& h) {
  if (h.parent != &g) throw InvalidArgument("subgroup of a different group");
  PermCharacter chi;
  for (const auto& c : g.conjugacy_classes()) {
    std::int64_t meet = 0;
    for (Element m : c.members)
      if (h.contains(m)) ++meet;
    auto centralizer_order = static_cast<std::int64_t>(g.order() / c.size());
    std::int64_t num = meet * centralizer_order;
    if (num % static_cast<std::int64_t>(h.order()) != 0)
      throw VerificationFailure("quasiregular character value is not an integer");
    chi.values.push_back(num / static_cast<std::int64_t>(h.order()));
  }
  return chi;
}

CharacterMatrix character_matrix(const SubgroupLattice& lattice) {
  const Group& g = lattice.group();
  CharacterMatrix m;
  m.rows = lattice.rank();
  m.cols = g.conjugacy_classes().size();
  for (const auto& c : lattice.classes()) {
    auto chi = quasiregular_character(g, c.representative);
    m.entries.insert(m.entries.end(), chi.values.begin(), chi.values.end());
  }
  return m;
}

std::vector<std::int64_t> apply_character(const CharacterMatrix& m, const BurnsideElement& v) {
  if (v.coeffs.size() != m.rows) throw InvalidArgument("Burnside element has wrong length");
  std::vector<std::int64_t> out(m.cols, 0);
  for (std::size_t i = 0; i < m.rows; ++i)
    for (std::size_t j = 0; j < m.cols; ++j) {
      std::int64_t t;
      if (__builtin_mul_overflow(v.coeffs[i], m.at(i, j), &t) || __builtin_add_overflow(out[j], t, &out[j]))
        throw Overflow("character evaluation overflow");
    }
  return out;
}

bool in_kernel(const CharacterMatrix& m, const BurnsideElement& v) {
  auto img = apply_character(m, v);
  return std::all_of(img.begin(), img.end(), [](std::int64_t x) { return x == 0; });
}

std::vector<BurnsideElement> kernel_basis(const CharacterMatrix& m) {
  IntMatrix a(m.rows, IntVector(m.cols));
  for (std::size_t i = 0; i < m.rows; ++i)
    for (std::size_t j = 0; j < m.cols; ++j) a[i][j] = m.at(i, j);
  IntMatrix basis = integer_left_kernel(a);
  lll_reduce(basis);
  std::vector<BurnsideElement> out;
  for (auto& row : basis) {
    auto it = std::find_if(row.begin(), row.end(), [](const BigInt& x) { return x != 0; });
    if (it != row.end() && *it < 0)
      for (auto& x : row) x = -x;
    out.push_back({to_int64(row)});
  }
  std::sort(out.begin(), out.end());
  for (const auto& v : out)
    if (!in_kernel(m, v)) throw VerificationFailure("kernel vector does not annihilate the characters");
  return out;
}

std::vector<BurnsideElement> kernel_basis(const SubgroupLattice& lattice) {
  return kernel_basis(character_matrix(lattice));
}

bool kernel_contains(const std::vector<BurnsideElement>& basis, const BurnsideElement& v) {
  IntMatrix b;
  for (const auto& e : basis) b.emplace_back(e.coeffs.begin(), e.coeffs.end());
  return lattice_contains(b, IntVector(v.coeffs.begin(), v.coeffs.end()));
}

OrbitType positive_part(const BurnsideElement& v) {
  OrbitType t;
  for (std::size_t i = 0; i < v.coeffs.size(); ++i)
    if (v.coeffs[i] > 0) t.terms.emplace_back(i, static_cast<std::size_t>(v.coeffs[i]));
  return t;
}

OrbitType negative_part(const BurnsideElement& v) { return positive_part(-v); }

ReducedPair to_reduced_pair(const SubgroupLattice& lattice, const BurnsideElement& v) {
  if (v.coeffs.size() != lattice.rank()) throw InvalidArgument("Burnside element has wrong length");
  if (v.is_zero()) throw InvalidArgument("zero element has no nontrivial reduced pair");
  return {realize(positive_part(v), lattice), realize(negative_part(v), lattice)};
}

namespace {

std::map<std::size_t, std::int64_t> orbit_size_balance(const SubgroupLattice& lattice,
                                                       const BurnsideElement& v) {
  std::map<std::size_t, std::int64_t> balance;
  for (std::size_t i = 0; i < v.coeffs.size(); ++i)
    balance[lattice.classes()[i].representative.index()] += v.coeffs[i];
  return balance;
}

}  // namespace

bool is_unbalanced(const SubgroupLattice& lattice, const CharacterMatrix& m, const BurnsideElement& v) {
  if (!in_kernel(m, v)) throw InvalidArgument("element is not linearly trivial");
  for (auto [size, net] : orbit_size_balance(lattice, v))
    if (net != 0) return true;
  return false;
}

bool is_unbalanced(const SubgroupLattice& lattice, const BurnsideElement& v) {
  return is_unbalanced(lattice, character_matrix(lattice), v);
}

std::vector<std::pair<std::size_t, std::size_t>> sunada_pairs(const SubgroupLattice& lattice) {
  CharacterMatrix m = character_matrix(lattice);
  std::vector<std::pair<std::size_t, std::size_t>> out;
  for (std::size_t i = 0; i < m.rows; ++i)
    for (std::size_t j = i + 1; j < m.rows; ++j)
      if (m.row(i) == m.row(j)) out.emplace_back(i, j);
  return out;
}

}  // namespace linequiv
