#pragma once

#include <cstddef>
#include <cstdint>
#include <memory>
#include <optional>
#include <span>
#include <string>
#include <unordered_map>
#include <vector>

#include "linequiv/group_spec.hpp"
#include "linequiv/permutation.hpp"

namespace linequiv {

using Element = std::uint32_t;

inline constexpr std::size_t kDefaultOrderCap = 512;

struct ConjClass {
  Element representative = 0;
  std::vector<Element> members;  // sorted
  std::size_t size() const { return members.size(); }
};

class Group;
using GroupPtr = std::shared_ptr<const Group>;

// A finite permutation group with every element enumerated.
//
// Elements are numbered breadth-first from the generators: index 0 is the identity,
// each later layer holds the elements first reachable by one more generator, sorted by
// image sequence. The full multiplication table is stored.
class Group : public std::enable_shared_from_this<Group> {
 public:
  static GroupPtr from_generators(std::size_t degree, std::vector<Permutation> generators,
                                  std::vector<std::string> names = {},
                                  std::size_t order_cap = kDefaultOrderCap);

  std::size_t order() const { return elements_.size(); }
  std::size_t degree() const { return degree_; }
  static constexpr Element identity() { return 0; }

  const Permutation& element(Element g) const { return elements_[g]; }
  const std::vector<Permutation>& elements() const { return elements_; }
  Element product(Element g, Element h) const { return table_[g * order() + h]; }
  Element inverse(Element g) const { return inverse_[g]; }
  Element conjugate(Element g, Element x) const { return product(product(g, x), inverse(g)); }
  Element power(Element g, long k) const;
  std::optional<Element> find(const Permutation& p) const;

  const std::vector<Element>& generators() const { return generators_; }
  const std::vector<std::string>& generator_names() const { return names_; }
  // Shortest word in the generators reaching g, e.g. "t*s^3"; "e" for the identity.
  std::string word(Element g) const;

  std::size_t element_order(Element g) const { return element_orders_[g]; }
  bool is_abelian() const;
  bool is_cyclic() const;

  const std::vector<ConjClass>& conjugacy_classes() const { return classes_; }
  std::size_t class_of(Element g) const { return class_of_[g]; }

  GroupPtr ptr() const { return shared_from_this(); }

 private:
  Group() = default;

  std::size_t degree_ = 0;
  std::vector<Permutation> elements_;
  std::unordered_map<Permutation, Element, PermutationHash> index_;
  std::vector<Element> table_;
  std::vector<Element> inverse_;
  std::vector<std::size_t> element_orders_;
  std::vector<Element> generators_;
  std::vector<std::string> names_;
  std::vector<std::vector<std::uint16_t>> words_;
  std::vector<ConjClass> classes_;
  std::vector<std::size_t> class_of_;
};

GroupPtr construct(const GroupSpec& spec, std::size_t order_cap = kDefaultOrderCap);

std::vector<ConjClass> conjugacy_classes(const Group& g);

// Sorted list of elements commuting with g.
std::vector<Element> centralizer(const Group& group, Element g);

}  // namespace linequiv
