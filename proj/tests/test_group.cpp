#include <numeric>

#include "doctest.h"
#include "linequiv/errors.hpp"
#include "linequiv/group.hpp"
#include "support/catalog.hpp"
#include "support/oracle.hpp"

using namespace linequiv;

TEST_SUITE("group") {
  TEST_CASE("permutation basics") {
    Permutation p = Permutation::from_cycles(4, {{0, 1, 2}});
    Permutation q = Permutation::from_cycles(4, {{0, 1}});
    CHECK((p * q)(0) == p(q(0)));
    CHECK((p * p.inverse()).is_identity());
    CHECK(p.to_cycle_string() == "(0 1 2)");
    CHECK(Permutation::identity(3).to_cycle_string() == "()");
    CHECK_THROWS_AS(Permutation({0, 0, 1}), InvalidArgument);
    CHECK_THROWS_AS(Permutation::from_cycles(3, {{0, 3}}), InvalidArgument);
    CHECK_THROWS_AS(Permutation::from_cycles(3, {{0, 1}, {1, 2}}), InvalidArgument);
  }

  TEST_CASE("construct orders") {
    CHECK(construct(GroupSpec::dihedral(6))->order() == 12);
    CHECK(construct(GroupSpec::cyclic(1))->order() == 1);
    CHECK(construct(testing::holomorph8())->order() == 32);
    CHECK(construct(GroupSpec::metacyclic(7, 3, 2))->order() == 21);
    CHECK(construct(GroupSpec::metacyclic(5, 4, 2))->order() == 20);
    CHECK(construct(testing::product(GroupSpec::dihedral(3), GroupSpec::cyclic(4)))->order() == 24);
    CHECK(construct(GroupSpec::dihedral(1))->order() == 2);
    CHECK(construct(GroupSpec::dihedral(2))->order() == 4);
    CHECK(construct(testing::quaternion())->order() == 8);
    CHECK(construct(testing::symmetric4())->order() == 24);
    CHECK(construct(testing::alternating4())->order() == 12);
  }

  TEST_CASE("construct rejects bad specs") {
    CHECK_THROWS_AS(construct(GroupSpec::cyclic(0)), InvalidArgument);
    CHECK_THROWS_AS(construct(GroupSpec::dihedral(0)), InvalidArgument);
    CHECK_THROWS_AS(construct(GroupSpec::metacyclic(7, 3, 3)), InvalidArgument);  // 3^3 = 6 mod 7
    CHECK_THROWS_AS(construct(GroupSpec::metacyclic(6, 2, 5)), InvalidArgument);  // gcd(6, 8) = 2
    CHECK_THROWS_AS(construct(GroupSpec::generators(3, {Permutation::identity(4)})), InvalidArgument);
    CHECK_THROWS_AS(construct(GroupSpec::cyclic(600)), CapExceeded);
    CHECK(construct(GroupSpec::cyclic(600), 600)->order() == 600);
  }

  TEST_CASE("group axioms against the permutation oracle") {
    for (const auto& entry : testing::catalog()) {
      CAPTURE(entry.name);
      auto g = construct(entry.spec);
      if (g->order() > 32) continue;
      auto table = oracle::multiplication_table(*g);
      CHECK(g->element(0).is_identity());
      for (Element a = 0; a < g->order(); ++a) {
        CHECK(g->inverse(g->inverse(a)) == a);
        CHECK(g->product(a, g->inverse(a)) == 0);
        CHECK(g->order() % g->element_order(a) == 0);
        for (Element b = 0; b < g->order(); ++b) REQUIRE(g->product(a, b) == table[a][b]);
      }
    }
  }

  TEST_CASE("associativity exhaustive for small orders") {
    for (const auto& spec : {GroupSpec::dihedral(6), testing::quaternion(), testing::symmetric4()}) {
      auto g = construct(spec);
      bool ok = true;
      for (Element a = 0; a < g->order(); ++a)
        for (Element b = 0; b < g->order(); ++b)
          for (Element c = 0; c < g->order(); ++c)
            ok = ok && g->product(g->product(a, b), c) == g->product(a, g->product(b, c));
      CHECK(ok);
    }
  }

  TEST_CASE("conjugacy classes") {
    auto c4 = construct(GroupSpec::cyclic(4));
    CHECK(conjugacy_classes(*c4).size() == 4);
    auto d6 = construct(GroupSpec::dihedral(6));
    CHECK(conjugacy_classes(*d6).size() == 6);
    auto s3 = construct(GroupSpec::metacyclic(3, 2, 2));
    std::vector<std::size_t> sizes;
    for (const auto& c : conjugacy_classes(*s3)) sizes.push_back(c.size());
    std::sort(sizes.begin(), sizes.end());
    CHECK(sizes == std::vector<std::size_t>{1, 2, 3});

    for (const auto& entry : testing::catalog()) {
      CAPTURE(entry.name);
      auto g = construct(entry.spec);
      if (g->order() > 32) continue;
      auto classes = conjugacy_classes(*g);
      std::set<std::vector<Element>> mine;
      std::size_t total = 0;
      for (std::size_t i = 0; i < classes.size(); ++i) {
        mine.insert(classes[i].members);
        total += classes[i].size();
        CHECK(classes[i].members.front() == classes[i].representative);
        if (i) CHECK(classes[i - 1].members.front() < classes[i].members.front());
        CHECK(centralizer(*g, classes[i].representative).size() * classes[i].size() == g->order());
      }
      CHECK(classes.front().members == std::vector<Element>{0});
      CHECK(total == g->order());
      CHECK(mine == oracle::conjugacy_classes(*g));
    }
  }

  TEST_CASE("centralizer") {
    auto d6 = construct(GroupSpec::dihedral(6));
    CHECK(centralizer(*d6, 0).size() == 12);
    std::size_t reflections = 0;
    for (Element e = 1; e < d6->order(); ++e) {
      bool reflection = d6->element_order(e) == 2 && d6->element(e) * d6->element(d6->generators()[0]) !=
                                                         d6->element(d6->generators()[0]) * d6->element(e);
      if (!reflection) continue;
      ++reflections;
      CHECK(centralizer(*d6, e).size() == 4);
    }
    CHECK(reflections == 6);
    auto ab = construct(testing::product(GroupSpec::cyclic(3), GroupSpec::cyclic(5)));
    for (Element e = 0; e < ab->order(); ++e) CHECK(centralizer(*ab, e).size() == 15);
    CHECK_THROWS_AS(centralizer(*d6, 12), InvalidArgument);
  }

  TEST_CASE("element indices are deterministic") {
    auto a = construct(testing::symmetric4());
    auto b = construct(testing::symmetric4());
    for (Element e = 0; e < a->order(); ++e) CHECK(a->element(e) == b->element(e));
  }

  TEST_CASE("words") {
    auto d6 = construct(GroupSpec::dihedral(6));
    CHECK(d6->word(0) == "e");
    for (Element e = 0; e < d6->order(); ++e) CHECK(d6->element_order(e) >= 1);
    CHECK(d6->generator_names() == std::vector<std::string>{"s", "t"});
  }

  TEST_CASE("group spec text") {
    auto s = testing::product(GroupSpec::cyclic(2), GroupSpec::dihedral(3));
    CHECK(to_string(s) == "P(C(2),D(3))");
    CHECK(to_string(GroupSpec::metacyclic(7, 3, 2)) == "M(7,3,2)");
    CHECK(to_string(testing::symmetric4()) == "gens(4;(0 1 2 3);(0 1))");
  }
}
