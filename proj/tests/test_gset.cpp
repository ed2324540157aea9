#include <cmath>

#include "doctest.h"
#include "linequiv/errors.hpp"
#include "linequiv/gset.hpp"
#include "linequiv/subgroups.hpp"
#include "support/catalog.hpp"
#include "support/oracle.hpp"

using namespace linequiv;

namespace {

Subgroup gen(const Group& g, std::initializer_list<Element> e) {
  std::vector<Element> v(e);
  return generate_subgroup(g, v);
}

GroupPtr klein() { return construct(testing::product(GroupSpec::cyclic(2), GroupSpec::cyclic(2))); }

// The three order-2 coset spaces versus regular plus two points.
std::pair<GSet, GSet> klein_pair(const Group& g) {
  GSet x = empty_gset(g);
  for (Element e = 1; e < 4; ++e) x = disjoint_union(x, coset_space(g, gen(g, {e})));
  GSet y = disjoint_union(regular_gset(g), repeat(one_point(g), 2));
  return {x, y};
}

}  // namespace

TEST_SUITE("gset") {
  TEST_CASE("coset spaces") {
    auto d6 = construct(GroupSpec::dihedral(6));
    CHECK(coset_space(*d6, whole_group(*d6)).size() == 1);
    GSet reg = coset_space(*d6, trivial_subgroup(*d6));
    CHECK(reg.size() == 12);
    CHECK(orbits(reg).size() == 1);
    Element s = d6->generators()[0];
    GSet two = coset_space(*d6, gen(*d6, {s}));
    CHECK(two.size() == 2);
    CHECK(fixed_points(two, s) == 2);
    for (const auto& h : all_subgroups(*d6)) {
      GSet x = coset_space(*d6, h);
      CHECK(x.size() == h.index());
      CHECK(orbits(x).size() == 1);
      CHECK(are_conjugate(*d6, stabilizer(x, 0), h));
      CHECK(satisfies_action_axioms(x));
    }
  }

  TEST_CASE("disjoint union") {
    auto g = klein();
    auto [x, y] = klein_pair(*g);
    CHECK(x.size() == 6);
    GSet u = disjoint_union(x, empty_gset(*g));
    CHECK(u.size() == x.size());
    for (Element e = 0; e < 4; ++e) CHECK(fixed_points(disjoint_union(x, y), e) == fixed_points(x, e) + fixed_points(y, e));
    auto other = construct(GroupSpec::cyclic(4));
    CHECK_THROWS_AS(disjoint_union(x, one_point(*other)), InvalidArgument);
  }

  TEST_CASE("fixed points and characters") {
    auto g = klein();
    auto [x, y] = klein_pair(*g);
    CHECK(fixed_points(x, 0) == 6);
    for (Element e = 1; e < 4; ++e) {
      CHECK(fixed_points(x, e) == 2);
      CHECK(fixed_points(y, e) == 2);
    }
    for (const auto& spec : {GroupSpec::dihedral(6), testing::symmetric4(), GroupSpec::metacyclic(7, 3, 2)}) {
      auto grp = construct(spec);
      for (const auto& h : all_subgroups(*grp)) {
        GSet c = coset_space(*grp, h);
        for (Element e = 0; e < grp->order(); ++e)
          REQUIRE(static_cast<std::int64_t>(fixed_points(c, e)) == oracle::coset_fixed_points(*grp, h.members, e));
      }
      auto chi = perm_character(regular_gset(*grp)).values;
      CHECK(chi.front() == static_cast<std::int64_t>(grp->order()));
      CHECK(std::all_of(chi.begin() + 1, chi.end(), [](auto v) { return v == 0; }));
      auto one = perm_character(one_point(*grp)).values;
      CHECK(std::all_of(one.begin(), one.end(), [](auto v) { return v == 1; }));
    }
    // abelian: [G:H] on classes inside H, 0 outside
    auto ab = construct(testing::product(GroupSpec::cyclic(2), GroupSpec::cyclic(4)));
    for (const auto& h : all_subgroups(*ab)) {
      auto chi = perm_character(coset_space(*ab, h)).values;
      const auto& classes = ab->conjugacy_classes();
      for (std::size_t c = 0; c < classes.size(); ++c)
        CHECK(chi[c] == (h.contains(classes[c].representative) ? static_cast<std::int64_t>(h.index()) : 0));
    }
  }

  TEST_CASE("linear equivalence and isomorphism") {
    auto g = klein();
    auto [x, y] = klein_pair(*g);
    CHECK(linearly_equivalent(x, y));
    CHECK_FALSE(isomorphic(x, y));
    CHECK(isomorphic(x, x));
    auto d6 = construct(GroupSpec::dihedral(6));
    GSet a = coset_space(*d6, gen(*d6, {d6->generators()[0]}));
    GSet b = repeat(one_point(*d6), 2);
    CHECK_FALSE(linearly_equivalent(a, b));
    Subgroup tau = gen(*d6, {d6->generators()[1]});
    for (Element x2 = 0; x2 < d6->order(); ++x2)
      CHECK(isomorphic(coset_space(*d6, tau), coset_space(*d6, conjugate_subgroup(tau, x2))));
  }

  TEST_CASE("orbit decomposition") {
    auto g = klein();
    SubgroupLattice lattice(g);
    auto [x, y] = klein_pair(*g);
    CHECK(orbit_sizes(x) == std::vector<std::size_t>{2, 2, 2});
    CHECK(orbit_sizes(y) == std::vector<std::size_t>{1, 1, 4});
    OrbitType tx = orbit_decomposition(x, lattice);
    CHECK(tx.terms.size() == 3);
    CHECK(tx.size(lattice) == 6);
    OrbitType reg = orbit_decomposition(regular_gset(*g), lattice);
    CHECK(reg.terms == std::vector<std::pair<std::size_t, std::size_t>>{{0, 1}});
    CHECK(isomorphic(realize(tx, lattice), x));

    auto s4 = construct(testing::symmetric4());
    SubgroupLattice l4(s4);
    for (std::size_t c = 0; c < l4.rank(); ++c) {
      OrbitType t = orbit_decomposition(coset_space(*s4, l4.classes()[c].representative), l4);
      CHECK(t.terms == std::vector<std::pair<std::size_t, std::size_t>>{{c, 1}});
    }
  }

  TEST_CASE("tensor") {
    auto d6 = construct(GroupSpec::dihedral(6));
    GSet y = disjoint_union(coset_space(*d6, gen(*d6, {d6->generators()[1]})), one_point(*d6));
    CHECK(tensor(regular_gset(*d6), y).size == y.size());
    CHECK(tensor(one_point(*d6), y).size == orbits(y).size());
    GSet h = coset_space(*d6, gen(*d6, {d6->generators()[1]}));
    GSet k = coset_space(*d6, gen(*d6, {d6->generators()[0]}));
    TensorProduct t = tensor(h, k);
    CHECK(t.size == oracle::diagonal_orbit_count(h, k));
    CHECK(t.point_of_pair.size() == h.size() * k.size());
  }

  TEST_CASE("induction") {
    auto d6 = construct(GroupSpec::dihedral(6));
    SubgroupEmbedding whole = embed_subgroup(*d6, whole_group(*d6));
    GSet x = coset_space(*whole.sub, gen(*whole.sub, {1}));
    GSet induced = induce(whole, x);
    CHECK(induced.size() == x.size());
    CHECK(orbit_sizes(induced) == orbit_sizes(x));

    for (const auto& h : all_subgroups(*d6)) {
      SubgroupEmbedding emb = embed_subgroup(*d6, h);
      GSet ind = induce(emb, one_point(*emb.sub));
      CHECK(satisfies_action_axioms(ind));
      CHECK(isomorphic(ind, coset_space(*d6, h)));
    }
    Subgroup rot = gen(*d6, {d6->generators()[0]});
    SubgroupEmbedding emb = embed_subgroup(*d6, rot);
    GSet reg = induce(emb, regular_gset(*emb.sub));
    CHECK(reg.size() == 12);
    CHECK(isomorphic(reg, regular_gset(*d6)));
  }

  TEST_CASE("inflation") {
    auto q8 = construct(testing::quaternion());
    Quotient trivial = quotient_group(*q8, trivial_subgroup(*q8));
    GSet x = coset_space(*trivial.quotient, gen(*trivial.quotient, {1}));
    GSet inf = inflate(trivial, x);
    CHECK(inf.size() == x.size());
    CHECK(satisfies_action_axioms(inf));
    Quotient full = quotient_group(*q8, whole_group(*q8));
    GSet pts = inflate(full, repeat(one_point(*full.quotient), 3));
    for (Element e = 0; e < q8->order(); ++e) CHECK(fixed_points(pts, e) == 3);
  }

  TEST_CASE("hom_count") {
    auto d6 = construct(GroupSpec::dihedral(6));
    GSet y = disjoint_union(coset_space(*d6, gen(*d6, {d6->generators()[1]})), repeat(one_point(*d6), 2));
    CHECK(hom_count(one_point(*d6), y) == 2);
    CHECK(hom_count(regular_gset(*d6), y) == y.size());
    for (const auto& h : all_subgroups(*d6)) {
      GSet c = coset_space(*d6, h);
      std::size_t expected = 0;
      for (Point p = 0; p < y.size(); ++p)
        expected += std::all_of(h.members.begin(), h.members.end(), [&](Element e) { return y.act(e, p) == p; });
      CHECK(hom_count(c, y) == expected);
    }
    auto g = klein();
    auto [x, z] = klein_pair(*g);
    CHECK(hom_count(x, z) == oracle::hom_count_exhaustive(x, z));
    CHECK(hom_count(z, x) == oracle::hom_count_exhaustive(z, x));
    CHECK_THROWS_AS(hom_count(regular_gset(*d6), regular_gset(*d6), 100.0), CapExceeded);
  }

  TEST_CASE("function G-set and the exponential law") {
    auto g = klein();
    auto [x, y] = klein_pair(*g);
    GSet small = coset_space(*g, gen(*g, {1}));
    for (std::size_t s : {1u, 2u, 3u}) {
      GSet fx = function_gset(small, s);
      CHECK(fx.size() == static_cast<std::size_t>(std::pow(s, small.size())));
      CHECK(satisfies_action_axioms(fx));
      auto orbits_xy = tensor(small, y).size;
      CHECK(hom_count(y, fx) == static_cast<std::size_t>(std::pow(s, orbits_xy)));
    }
  }

  TEST_CASE("cartesian product") {
    auto s4 = construct(testing::symmetric4());
    auto subs = all_subgroups(*s4);
    GSet a = coset_space(*s4, subs[5]), b = coset_space(*s4, subs[12]);
    GSet ab = cartesian_product(a, b);
    CHECK(ab.size() == a.size() * b.size());
    CHECK(satisfies_action_axioms(ab));
    for (Element e = 0; e < s4->order(); ++e) CHECK(fixed_points(ab, e) == fixed_points(a, e) * fixed_points(b, e));
  }

  TEST_CASE("action table validation") {
    auto g = construct(GroupSpec::cyclic(2));
    CHECK_THROWS_AS(GSet(g, 2, {1, 0, 1, 0}), InvalidArgument);  // identity must act trivially
    CHECK_THROWS_AS(GSet(g, 2, {0, 1, 0, 0}), InvalidArgument);  // not a permutation
    CHECK_THROWS_AS(GSet(g, 2, {0, 1}), InvalidArgument);        // wrong table size
  }
}
