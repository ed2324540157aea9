#pragma once

#include <cstddef>
#include <cstdint>
#include <utility>
#include <vector>

#include "linequiv/gset.hpp"
#include "linequiv/subgroups.hpp"

namespace linequiv {

// Element of the Burnside ring: sum of coeffs[i] * G/H_i over the canonical class basis.
struct BurnsideElement {
  std::vector<std::int64_t> coeffs;

  bool is_zero() const;
  BurnsideElement operator+(const BurnsideElement& o) const;
  BurnsideElement operator-(const BurnsideElement& o) const;
  BurnsideElement operator-() const;
  friend bool operator==(const BurnsideElement&, const BurnsideElement&) = default;
  friend auto operator<=>(const BurnsideElement&, const BurnsideElement&) = default;
};

// Rows: subgroup classes; columns: conjugacy classes; entry = fixed points of the column
// class on G/H_row.
struct CharacterMatrix {
  std::size_t rows = 0;
  std::size_t cols = 0;
  std::vector<std::int64_t> entries;

  std::int64_t at(std::size_t i, std::size_t j) const { return entries[i * cols + j]; }
  std::vector<std::int64_t> row(std::size_t i) const;
};

// |g^G ∩ H| * |C_G(g)| / |H| at each conjugacy class.
PermCharacter quasiregular_character(const Group& g, const Subgroup& h);

CharacterMatrix character_matrix(const SubgroupLattice& lattice);

// v^T * matrix, exactly.
std::vector<std::int64_t> apply_character(const CharacterMatrix& m, const BurnsideElement& v);
bool in_kernel(const CharacterMatrix& m, const BurnsideElement& v);

// Z-basis of the linearly trivial elements: saturated integer kernel, LLL-reduced
// (delta = 3/4), each vector with positive leading coefficient, sorted.
std::vector<BurnsideElement> kernel_basis(const SubgroupLattice& lattice);
std::vector<BurnsideElement> kernel_basis(const CharacterMatrix& m);

bool kernel_contains(const std::vector<BurnsideElement>& basis, const BurnsideElement& v);

// Positive part and negative part of v, as G-sets.
struct ReducedPair {
  GSet x;
  GSet y;
};

OrbitType positive_part(const BurnsideElement& v);
OrbitType negative_part(const BurnsideElement& v);
ReducedPair to_reduced_pair(const SubgroupLattice& lattice, const BurnsideElement& v);

// Orbit-size multisets of the two sides differ. Throws InvalidArgument when v is not
// linearly trivial.
bool is_unbalanced(const SubgroupLattice& lattice, const CharacterMatrix& m, const BurnsideElement& v);
bool is_unbalanced(const SubgroupLattice& lattice, const BurnsideElement& v);

// Unordered pairs (i, j), i < j, of distinct classes with equal quasiregular characters.
std::vector<std::pair<std::size_t, std::size_t>> sunada_pairs(const SubgroupLattice& lattice);

}  // namespace linequiv
