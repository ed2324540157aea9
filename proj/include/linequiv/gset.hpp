#pragma once

#include <cstddef>
#include <cstdint>
#include <utility>
#include <vector>

#include "linequiv/group.hpp"
#include "linequiv/subgroups.hpp"

namespace linequiv {

// A finite set with a left action of a group, stored as a full table:
// act(g, x) for every element g and point x.
class GSet {
 public:
  GSet() = default;
  // Checks that every row is a permutation and that the identity acts trivially.
  GSet(GroupPtr group, std::size_t size, std::vector<Point> table);

  const Group& group() const { return *group_; }
  const GroupPtr& group_ptr() const { return group_; }
  std::size_t size() const { return size_; }
  Point act(Element g, Point x) const { return table_[g * size_ + x]; }

 private:
  GroupPtr group_;
  std::size_t size_ = 0;
  std::vector<Point> table_;
};

// act(g, act(h, x)) == act(gh, x) for all g, h, x.
bool satisfies_action_axioms(const GSet& x);

GSet empty_gset(const Group& g);
GSet one_point(const Group& g);
GSet regular_gset(const Group& g);

// Left cosets xH; the coset of the identity is point 0.
GSet coset_space(const Group& g, const Subgroup& h);
GSet disjoint_union(const GSet& x, const GSet& y);
GSet repeat(const GSet& x, std::size_t copies);
// X x Y with the diagonal action; point (x, y) is x * |Y| + y.
GSet cartesian_product(const GSet& x, const GSet& y);

// X x_G Y for two left G-sets: the orbit set of the diagonal action on X x Y.
struct TensorProduct {
  std::size_t size = 0;                   // number of points of X x_G Y
  std::vector<std::size_t> point_of_pair;  // indexed by x * |Y| + y
};
TensorProduct tensor(const GSet& x, const GSet& y);

// G x_H X for an H-set X, H embedded in G.
GSet induce(const SubgroupEmbedding& emb, const GSet& x);
// Y viewed as an H-set.
GSet restrict_to(const SubgroupEmbedding& emb, const GSet& y);
// A G/N-set viewed as a G-set through the projection.
GSet inflate(const Quotient& q, const GSet& x);

// S^X for |S| = s, with (g f)(x) = f(g^-1 x). Point f is the base-s number
// f(0) + s f(1) + ...
GSet function_gset(const GSet& x, std::size_t s, std::size_t size_cap = 1u << 20);

std::size_t fixed_points(const GSet& x, Element g);

struct PermCharacter {
  std::vector<std::int64_t> values;  // indexed by conjugacy class
  friend bool operator==(const PermCharacter&, const PermCharacter&) = default;
};

PermCharacter perm_character(const GSet& x);
bool linearly_equivalent(const GSet& x, const GSet& y);

// Orbits as sorted point lists, ordered by smallest point.
std::vector<std::vector<Point>> orbits(const GSet& x);
Subgroup stabilizer(const GSet& x, Point p);

// Multiset of subgroup classes, one entry per orbit.
struct OrbitType {
  std::vector<std::pair<std::size_t, std::size_t>> terms;  // (class index, multiplicity), sorted
  std::size_t size(const SubgroupLattice& lattice) const;
  friend bool operator==(const OrbitType&, const OrbitType&) = default;
};

OrbitType orbit_decomposition(const GSet& x, const SubgroupLattice& lattice);
// Realizes a multiset of classes as a union of coset spaces, classes in increasing order.
GSet realize(const OrbitType& t, const SubgroupLattice& lattice);
bool isomorphic(const GSet& x, const GSet& y);

// Sorted orbit sizes.
std::vector<std::size_t> orbit_sizes(const GSet& x);

inline constexpr double kDefaultHomSearchCap = 1e12;

// Number of equivariant maps X -> Y, by exhaustive backtracking. The cap bounds
// |Y|^|X|, the nominal size of the search space.
std::size_t hom_count(const GSet& x, const GSet& y, double search_cap = kDefaultHomSearchCap);

}  // namespace linequiv
