#pragma once

#include <cstddef>
#include <cstdint>
#include <optional>
#include <span>
#include <string>
#include <unordered_map>
#include <vector>

#include "linequiv/group.hpp"

namespace linequiv {

// Dynamic bitset over the element indices of one group.
class ElementSet {
 public:
  ElementSet() = default;
  explicit ElementSet(std::size_t universe) : universe_(universe), words_((universe + 63) / 64, 0) {}

  std::size_t universe() const { return universe_; }
  bool contains(Element e) const { return (words_[e >> 6] >> (e & 63)) & 1u; }
  void insert(Element e) { words_[e >> 6] |= std::uint64_t{1} << (e & 63); }
  std::size_t count() const;
  std::vector<Element> to_vector() const;
  bool is_subset_of(const ElementSet& other) const;
  ElementSet intersect(const ElementSet& other) const;

  friend bool operator==(const ElementSet&, const ElementSet&) = default;
  std::size_t hash() const noexcept;

 private:
  std::size_t universe_ = 0;
  std::vector<std::uint64_t> words_;
};

struct ElementSetHash {
  std::size_t operator()(const ElementSet& s) const noexcept { return s.hash(); }
};

// A subgroup of a specific parent group. The parent must outlive it.
struct Subgroup {
  const Group* parent = nullptr;
  std::vector<Element> members;    // sorted
  ElementSet set;
  std::vector<Element> generators;  // some generating set, possibly empty for the trivial group

  std::size_t order() const { return members.size(); }
  std::size_t index() const { return parent->order() / order(); }
  bool contains(Element g) const { return set.contains(g); }
  // Generators in cycle notation, e.g. "<(0 1), (2 3)>".
  std::string describe() const;
  // Generators as words in the parent's named generators, e.g. "<t, t*s^2>".
  std::string describe_words() const;
};

bool operator==(const Subgroup& a, const Subgroup& b);
// Order first, then lexicographic member lists.
bool canonical_less(const Subgroup& a, const Subgroup& b);

Subgroup generate_subgroup(const Group& g, std::span<const Element> generators);
Subgroup trivial_subgroup(const Group& g);
Subgroup whole_group(const Group& g);
// Throws InvalidArgument unless the members contain e and are closed under products and inverses.
Subgroup subgroup_from_members(const Group& g, std::vector<Element> members);

// Set {x h x^-1 : h in H}.
Subgroup conjugate_subgroup(const Subgroup& h, Element x);
bool is_normal(const Subgroup& h);

// Every subgroup exactly once, sorted by canonical_less.
std::vector<Subgroup> all_subgroups(const Group& g);

struct SubgroupClass {
  Subgroup representative;  // the canonically smallest conjugate
  std::size_t class_size = 0;
  std::size_t index_in_basis = 0;
};

std::vector<SubgroupClass> subgroup_classes(const Group& g);

// Some x with x H x^-1 = K, or nullopt.
std::optional<Element> are_conjugate(const Group& g, const Subgroup& h, const Subgroup& k);

// All subgroups of a group together with their conjugacy classes; the canonical basis
// of the Burnside ring.
class SubgroupLattice {
 public:
  explicit SubgroupLattice(GroupPtr group);

  const Group& group() const { return *group_; }
  const GroupPtr& group_ptr() const { return group_; }
  const std::vector<Subgroup>& subgroups() const { return subgroups_; }
  const std::vector<SubgroupClass>& classes() const { return classes_; }
  std::size_t rank() const { return classes_.size(); }

  // Class index of any subgroup of the group.
  std::size_t class_index(const Subgroup& h) const;
  std::size_t subgroup_index(const Subgroup& h) const;
  const std::vector<std::size_t>& class_members(std::size_t c) const { return members_of_class_[c]; }

 private:
  GroupPtr group_;
  std::vector<Subgroup> subgroups_;
  std::vector<SubgroupClass> classes_;
  std::vector<std::size_t> class_of_subgroup_;
  std::vector<std::vector<std::size_t>> members_of_class_;
  std::unordered_map<ElementSet, std::size_t, ElementSetHash> lookup_;
};

// H regarded as a group in its own right, with its elements mapped into the parent.
struct SubgroupEmbedding {
  GroupPtr parent;
  GroupPtr sub;
  std::vector<Element> into_parent;  // indexed by elements of sub
  Subgroup image;
};

SubgroupEmbedding embed_subgroup(const Group& g, const Subgroup& h);

// G/N as a permutation group on the cosets of N.
struct Quotient {
  GroupPtr parent;
  GroupPtr quotient;
  std::vector<Element> projection;  // indexed by elements of parent
  Subgroup kernel;
};

// Throws InvalidArgument when N is not normal.
Quotient quotient_group(const Group& g, const Subgroup& n);

}  // namespace linequiv
