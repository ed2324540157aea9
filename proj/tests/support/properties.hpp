#pragma once

// Randomized and exhaustive property checks shared by the property suite and the
// acceptance runner. Each returns a pass flag and a one-line summary.

#include <cmath>
#include <random>
#include <sstream>
#include <string>
#include <vector>

#include "linequiv/burnside.hpp"
#include "linequiv/gset.hpp"
#include "linequiv/subgroups.hpp"
#include "support/catalog.hpp"

namespace linequiv::testing {

struct PropertyResult {
  std::string name;
  bool passed = true;
  std::size_t cases = 0;
  std::string failure;

  void fail(const std::string& what) {
    if (passed) failure = what;
    passed = false;
  }
};

struct LoadedGroup {
  std::string name;
  GroupPtr group;
  std::shared_ptr<SubgroupLattice> lattice;
};

inline std::vector<LoadedGroup> load_catalog() {
  std::vector<LoadedGroup> out;
  for (const auto& e : catalog()) {
    GroupPtr g = construct(e.spec);
    out.push_back({e.name, g, std::make_shared<SubgroupLattice>(g)});
  }
  return out;
}

// g(h x) = (gh) x, checked directly on the table rather than through the library helper.
inline bool action_law_holds(const GSet& x) {
  const Group& g = x.group();
  for (Point p = 0; p < x.size(); ++p)
    if (x.act(0, p) != p) return false;
  for (Element a = 0; a < g.order(); ++a)
    for (Element b = 0; b < g.order(); ++b)
      for (Point p = 0; p < x.size(); ++p)
        if (x.act(a, x.act(b, p)) != x.act(g.product(a, b), p)) return false;
  return true;
}

inline PropertyResult action_axioms(const std::vector<LoadedGroup>& groups) {
  PropertyResult r{"action axioms"};
  for (const auto& lg : groups) {
    const Group& g = *lg.group;
    const auto& classes = lg.lattice->classes();
    std::vector<GSet> sets;
    for (const auto& c : classes) sets.push_back(coset_space(g, c.representative));
    sets.push_back(regular_gset(g));
    sets.push_back(disjoint_union(sets.front(), sets.back()));
    if (classes.size() >= 2) sets.push_back(cartesian_product(sets[1], sets[classes.size() - 2]));
    for (const auto& x : sets) {
      ++r.cases;
      if (!action_law_holds(x)) r.fail(lg.name + ": action law fails on a G-set of size " + std::to_string(x.size()));
    }
  }
  return r;
}

inline PropertyResult lagrange(const std::vector<LoadedGroup>& groups) {
  PropertyResult r{"Lagrange"};
  for (const auto& lg : groups) {
    const Group& g = *lg.group;
    for (Element e = 0; e < g.order(); ++e) {
      ++r.cases;
      if (g.order() % g.element_order(e) != 0) r.fail(lg.name + ": element order does not divide |G|");
    }
    for (const auto& h : lg.lattice->subgroups()) {
      ++r.cases;
      if (g.order() % h.order() != 0) r.fail(lg.name + ": subgroup order does not divide |G|");
    }
  }
  return r;
}

// Union of 1..max_terms random coset spaces of lattice class representatives.
inline GSet random_gset(const Group& g, const std::vector<Subgroup>& subs, std::mt19937_64& rng,
                        std::size_t max_terms, std::size_t max_size) {
  while (true) {
    GSet x = empty_gset(g);
    std::size_t terms = 1 + rng() % max_terms;
    for (std::size_t i = 0; i < terms; ++i) x = disjoint_union(x, coset_space(g, subs[rng() % subs.size()]));
    if (x.size() <= max_size) return x;
  }
}

// Instances whose brute-force hom search would exceed the library cap are redrawn.
inline bool within_hom_cap(const GSet& x, const GSet& y) {
  return std::pow(static_cast<double>(y.size()), static_cast<double>(x.size())) <= kDefaultHomSearchCap;
}

inline std::vector<const LoadedGroup*> small_groups(const std::vector<LoadedGroup>& groups, std::size_t max_order) {
  std::vector<const LoadedGroup*> out;
  for (const auto& lg : groups)
    if (lg.group->order() > 1 && lg.group->order() <= max_order) out.push_back(&lg);
  return out;
}

// Hom_G(G x_H X, Y) = Hom_H(X, Res Y), counted on both sides.
inline PropertyResult adjunction(const std::vector<LoadedGroup>& groups, std::uint64_t seed, std::size_t instances) {
  PropertyResult r{"induction adjunction"};
  std::mt19937_64 rng(seed);
  auto pool = small_groups(groups, 24);
  while (r.cases < instances) {
    const LoadedGroup& lg = *pool[rng() % pool.size()];
    const Group& g = *lg.group;
    const auto& all = lg.lattice->subgroups();
    const Subgroup& h = all[rng() % all.size()];
    SubgroupEmbedding emb = embed_subgroup(g, h);
    auto inner = all_subgroups(*emb.sub);
    GSet x = random_gset(*emb.sub, inner, rng, 2, 8);
    std::vector<Subgroup> reps;
    for (const auto& c : lg.lattice->classes()) reps.push_back(c.representative);
    GSet y = random_gset(g, reps, rng, 2, 8);
    GSet induced = induce(emb, x);
    if (!within_hom_cap(induced, y)) continue;
    std::size_t left = hom_count(induced, y);
    std::size_t right = hom_count(x, restrict_to(emb, y));
    ++r.cases;
    if (left != right) {
      std::ostringstream o;
      o << lg.name << ", |H| = " << h.order() << ": " << left << " != " << right;
      r.fail(o.str());
    }
  }
  return r;
}

// chi(X + Y) = chi(X) + chi(Y) and chi(X x Y) = chi(X) chi(Y), pointwise on every element.
inline PropertyResult character_homomorphism(const std::vector<LoadedGroup>& groups, std::uint64_t seed,
                                             std::size_t instances) {
  PropertyResult r{"character ring homomorphism"};
  std::mt19937_64 rng(seed);
  auto pool = small_groups(groups, 32);
  while (r.cases < instances) {
    const LoadedGroup& lg = *pool[rng() % pool.size()];
    const Group& g = *lg.group;
    std::vector<Subgroup> reps;
    for (const auto& c : lg.lattice->classes()) reps.push_back(c.representative);
    GSet x = random_gset(g, reps, rng, 3, 40);
    GSet y = random_gset(g, reps, rng, 3, 40);
    GSet sum = disjoint_union(x, y);
    GSet prod = cartesian_product(x, y);
    ++r.cases;
    for (Element e = 0; e < g.order(); ++e) {
      std::size_t fx = fixed_points(x, e), fy = fixed_points(y, e);
      if (fixed_points(sum, e) != fx + fy || fixed_points(prod, e) != fx * fy) {
        r.fail(lg.name + ": character is not additive and multiplicative at element " + std::to_string(e));
        break;
      }
    }
  }
  return r;
}

// |S|^{|X x_G Y|} = |Hom_G(Y, S^X)|.
inline PropertyResult exponential_law(const std::vector<LoadedGroup>& groups, std::uint64_t seed,
                                      std::size_t instances) {
  PropertyResult r{"exponential law cardinality"};
  std::mt19937_64 rng(seed);
  auto pool = small_groups(groups, 12);
  while (r.cases < instances) {
    const LoadedGroup& lg = *pool[rng() % pool.size()];
    const Group& g = *lg.group;
    std::vector<Subgroup> reps;
    for (const auto& c : lg.lattice->classes()) reps.push_back(c.representative);
    GSet x = random_gset(g, reps, rng, 2, 6);
    GSet y = random_gset(g, reps, rng, 2, 12);
    std::size_t s = 1 + rng() % 3;
    GSet fx = function_gset(x, s);
    if (!within_hom_cap(y, fx)) continue;
    auto expected = static_cast<std::size_t>(std::llround(std::pow(s, tensor(x, y).size)));
    ++r.cases;
    if (hom_count(y, fx) != expected) r.fail(lg.name + ": exponential law cardinality mismatch");
  }
  return r;
}

// Linearly equivalent sets from the kernel have equal size and equal orbit count.
inline PropertyResult equal_size_and_orbit_count(const std::vector<LoadedGroup>& groups) {
  PropertyResult r{"kernel pairs have equal size and orbit count"};
  for (const auto& lg : groups) {
    for (const auto& v : kernel_basis(*lg.lattice)) {
      ReducedPair p = to_reduced_pair(*lg.lattice, v);
      ++r.cases;
      if (p.x.size() != p.y.size() || orbits(p.x).size() != orbits(p.y).size())
        r.fail(lg.name + ": kernel pair differs in size or orbit count");
      if (!linearly_equivalent(p.x, p.y)) r.fail(lg.name + ": kernel pair is not linearly equivalent");
    }
  }
  return r;
}

inline std::vector<PropertyResult> all_properties(const std::vector<LoadedGroup>& groups, std::uint64_t seed) {
  return {action_axioms(groups),
          lagrange(groups),
          adjunction(groups, seed, 50),
          character_homomorphism(groups, seed + 1, 50),
          exponential_law(groups, seed + 2, 20),
          equal_size_and_orbit_count(groups)};
}

}  // namespace linequiv::testing
