#include <algorithm>
#include <numeric>
#include <set>
#include <vector>

#include "doctest.h"
#include "tcl/color_system.hpp"
#include "tcl/perm_group.hpp"
#include "tcl/permutation.hpp"
#include "tcl/subgroup_lattice.hpp"

using namespace tcl;

TEST_SUITE("permgroup") {

TEST_CASE("identity, composition, inverse") {
  Permutation id3 = Permutation::identity(3);
  Permutation p = Permutation::from_cycles(3, "(1 2 3)");
  CHECK(compose(id3, p) == p);
  CHECK(compose(p, id3) == p);
  CHECK(compose(p, p.inverse()) == id3);
  CHECK(compose(p.inverse(), p) == id3);

  Permutation t = Permutation::from_cycles(3, "(12)");
  CHECK(compose(t, t) == id3);

  // (123)∘(123) maps 1->3, 2->1, 3->2, i.e. (132).
  CHECK(compose(p, p) == Permutation::from_cycles(3, "(132)"));

  Permutation q = Permutation::from_images({2, 3, 1});
  CHECK(q == p);
  CHECK(q.apply(1) == 2);
  CHECK(q(3) == 1);
  CHECK_THROWS_AS(compose(Permutation::identity(3), Permutation::identity(4)), dimension_error);
}

TEST_CASE("cycle parsing accepts both spacing styles") {
  CHECK(Permutation::from_cycles(5, "(1 2 3)(4 5)") == Permutation::from_cycles(5, "(123)(45)"));
  CHECK(Permutation::from_cycles(4, "()") == Permutation::identity(4));
  CHECK(Permutation::from_cycles(4, "id") == Permutation::identity(4));
}

TEST_CASE("cycle type, order, cycle_string round trip") {
  Permutation p = Permutation::from_cycles(6, "(123)(45)");
  CHECK(p.cycle_type() == std::vector<int>{3, 2, 1});
  CHECK(p.order() == 6);
  CHECK(Permutation::from_cycles(6, p.cycle_string()) == p);
  CHECK(Permutation::identity(5).cycle_type() == std::vector<int>{1, 1, 1, 1, 1});
}

TEST_CASE("rank/unrank is a bijection onto 0..r!-1") {
  for (int r = 1; r <= 5; ++r) {
    std::set<uint32_t> seen;
    for (uint32_t rk = 0; rk < Permutation::factorial(r); ++rk) {
      Permutation p = Permutation::unrank(r, rk);
      CHECK(p.rank() == rk);
      seen.insert(p.rank());
    }
    CHECK(seen.size() == Permutation::factorial(r));
  }
  CHECK(Permutation::factorial(8) == 40320u);
}

TEST_CASE("act_tuple moves the entry at position i to position pi(i)") {
  Permutation p = Permutation::from_cycles(3, "(123)");  // 1->2, 2->3, 3->1
  std::vector<int> in{10, 20, 30};
  std::vector<int> out = p.act_tuple(in);
  CHECK(out == std::vector<int>{30, 10, 20});
  // Action property: (pq).act = p.act ∘ q.act
  Permutation q = Permutation::from_cycles(3, "(12)");
  CHECK(compose(p, q).act_tuple(in) == p.act_tuple(q.act_tuple(in)));
  CHECK_THROWS_AS(p.act_tuple(std::vector<int>{1, 2}), dimension_error);
}

TEST_CASE("powers of the canonical r-cycle") {
  CHECK(cyc_power(3, 1) == Permutation::from_cycles(3, "(123)"));
  CHECK(cyc_power(6, 2) == Permutation::from_cycles(6, "(135)(246)"));
  CHECK(cyc_power(4, 2) == Permutation::from_cycles(4, "(13)(24)"));
  CHECK_THROWS_AS(cyc_power(4, 0), invalid_residue_error);
  CHECK_THROWS_AS(cyc_power(4, 4), invalid_residue_error);
  CHECK_THROWS_AS(cyc_power(4, -4), invalid_residue_error);

  // Cycle type is (r/m)^m with m = gcd(r,k), for every r and residue.
  for (int r = 2; r <= 8; ++r) {
    for (int k = 1; k < r; ++k) {
      int m = std::gcd(r, k);
      std::vector<int> expect(m, r / m);
      CHECK(cyc_power(r, k).cycle_type() == expect);
    }
  }
}

TEST_CASE("closure of generating sets") {
  CHECK(PermGroup::closure(3, {}).order() == 1);
  CHECK(PermGroup::closure(3, {Permutation::from_cycles(3, "(12)")}).order() == 2);
  PermGroup v = PermGroup::closure(
      4, {Permutation::from_cycles(4, "(12)"), Permutation::from_cycles(4, "(34)")});
  CHECK(v.order() == 4);
  CHECK(v.contains(Permutation::from_cycles(4, "(12)(34)")));
  CHECK(PermGroup::symmetric(4).order() == 24);
  CHECK(PermGroup::alternating(4).order() == 12);
  CHECK(PermGroup::symmetric(4).contains_cycle_type({4}));
  CHECK_FALSE(PermGroup::alternating(4).contains_cycle_type({4}));
}

TEST_CASE("from_elements validates closure") {
  std::vector<Permutation> good{Permutation::identity(3), Permutation::from_cycles(3, "(12)")};
  CHECK(PermGroup::from_elements(3, good).order() == 2);
  std::vector<Permutation> bad{Permutation::identity(3), Permutation::from_cycles(3, "(123)")};
  CHECK_THROWS_AS(PermGroup::from_elements(3, bad), argument_error);
}

TEST_CASE("set stabilizers have order i!(r-i)!") {
  CHECK(young_subgroup(3, {1}).order() == 2);
  CHECK(young_subgroup(4, {1, 2}).order() == 4);
  CHECK(young_subgroup(6, {1, 2, 3}).order() == 36);
  // Every element maps the support onto itself.
  PermGroup g = young_subgroup(4, {1, 2});
  for (const Permutation& p : g.elements()) {
    std::set<int> image{p.apply(1), p.apply(2)};
    CHECK(image == std::set<int>{1, 2});
  }
}

TEST_CASE("conjugate avoidance by cycle type") {
  CHECK(is_conjugate_avoiding(PermGroup::trivial(3), Permutation::from_cycles(3, "(123)")));
  CHECK_FALSE(is_conjugate_avoiding(PermGroup::symmetric(4), cyc_power(4, 1)));
  PermGroup t = PermGroup::closure(3, {Permutation::from_cycles(3, "(12)")});
  CHECK(is_conjugate_avoiding(t, Permutation::from_cycles(3, "(123)")));
  CHECK_FALSE(is_conjugate_avoiding(t, Permutation::from_cycles(3, "(13)")));
}

TEST_CASE("conjugation relabels a subgroup") {
  PermGroup g = young_subgroup(4, {1, 2});
  Permutation sigma = Permutation::from_cycles(4, "(14)");
  PermGroup conj = g.conjugated_by(sigma);
  CHECK(conj.order() == g.order());
  CHECK(conj == young_subgroup(4, {2, 4}));
}

TEST_CASE("availability closed form: spot values and brute-force agreement") {
  CHECK_FALSE(si_available(6, 2, 3));
  CHECK(si_available(6, 2, 1));
  CHECK_FALSE(si_available(4, 2, 2));
  CHECK(si_available(4, 2, 1));
  for (int r = 2; r <= 6; ++r)
    for (int k = 1; k < r; ++k)
      for (int i = 1; i < r; ++i) {
        CAPTURE(r);
        CAPTURE(k);
        CAPTURE(i);
        std::vector<int> prefix(i);
        std::iota(prefix.begin(), prefix.end(), 1);
        CHECK(si_available(r, k, i) == si_available_bruteforce(r, k, i));
        CHECK(si_available(r, k, i) ==
              is_conjugate_avoiding(young_subgroup(r, prefix), cyc_power(r, k)));
      }
}

TEST_CASE("transposition partition") {
  auto blocks_of = [](const PermGroup& g) { return g.transposition_partition(); };
  CHECK(blocks_of(PermGroup::trivial(4)) ==
        std::vector<std::vector<int>>{{1}, {2}, {3}, {4}});
  PermGroup g = PermGroup::closure(
      4, {Permutation::from_cycles(4, "(12)"), Permutation::from_cycles(4, "(23)")});
  CHECK(blocks_of(g) == std::vector<std::vector<int>>{{1, 2, 3}, {4}});
  CHECK(blocks_of(PermGroup::symmetric(4)) == std::vector<std::vector<int>>{{1, 2, 3, 4}});
  // The alternating group contains no transposition at all.
  CHECK(blocks_of(PermGroup::alternating(4)) ==
        std::vector<std::vector<int>>{{1}, {2}, {3}, {4}});
}

TEST_CASE("two-block subgroup sweep finds no counterexamples at small degree") {
  for (int r = 2; r <= 4; ++r) {
    TwoBlockSweepReport rep = check_claim_simaximal(r);
    CHECK(rep.ok());
    CHECK(rep.r == r);
    CHECK(rep.groups_checked > 0);
  }
  CHECK_THROWS_AS(check_claim_simaximal(7), capability_error);
}

TEST_CASE("subgroup lattice sizes of small symmetric groups") {
  CHECK(all_subgroups(1).size() == 1);
  CHECK(all_subgroups(2).size() == 2);
  CHECK(all_subgroups(3).size() == 6);
  CHECK(all_subgroups(4).size() == 30);
  CHECK(all_subgroups(5).size() == 156);
  // Every entry is a genuine subgroup: order divides r! and closure is free.
  for (const PermGroup& g : all_subgroups(4)) CHECK(24 % g.order() == 0);
  CHECK_THROWS_AS(all_subgroups(7), capability_error);
}

TEST_CASE("subgroup conjugacy and canonical keys") {
  PermGroup a = PermGroup::closure(3, {Permutation::from_cycles(3, "(12)")});
  PermGroup b = PermGroup::closure(3, {Permutation::from_cycles(3, "(13)")});
  PermGroup c = PermGroup::closure(3, {Permutation::from_cycles(3, "(123)")});
  CHECK(conjugate_subgroups(a, b));
  CHECK_FALSE(conjugate_subgroups(a, c));
  CHECK(conjugacy_canonical_key(a) == conjugacy_canonical_key(b));
  CHECK(conjugacy_canonical_key(a) != conjugacy_canonical_key(c));
}

TEST_CASE("coset spaces act by left multiplication") {
  CosetSpace cs = CosetSpace::build(young_subgroup(4, {1, 2}), 2);
  CHECK(cs.coset_count == 6);  // 24 / 4
  CHECK(cs.coset_of_perm(Permutation::identity(4)) == 0);
  Permutation p = Permutation::from_cycles(4, "(1234)");
  Permutation q = Permutation::from_cycles(4, "(12)");
  for (int c = 0; c < cs.coset_count; ++c) {
    CHECK(cs.act(Permutation::identity(4), c) == c);
    CHECK(cs.act(p.compose(q), c) == cs.act(p, cs.act(q, c)));
    // Membership in the coset does not depend on the representative.
    CHECK(cs.coset_of_perm(cs.representative(c)) == c);
  }
  // The action permutes cosets bijectively.
  std::set<int> image;
  for (int c = 0; c < cs.coset_count; ++c) image.insert(cs.act(p, c));
  CHECK(static_cast<int>(image.size()) == cs.coset_count);
}

TEST_CASE("color systems: stabilizer-only mode") {
  auto sys = enumerate_available_colors(6, 2, ColorMode::young_only);
  REQUIRE(sys->colors.size() == 2);
  CHECK(sys->colors[0].young_i == 1);
  CHECK(sys->colors[1].young_i == 2);
  CHECK(sys->colors[0].group.order() == 120);  // 1!·5!
  CHECK(sys->colors[1].group.order() == 48);   // 2!·4!
  CHECK(sys->colors[0].coset_count == 6);
  CHECK(sys->colors[1].coset_count == 15);
  CHECK(sys->total_values() == 21);

  auto sys42 = enumerate_available_colors(4, 2, ColorMode::young_only);
  REQUIRE(sys42->colors.size() == 1);  // i = 2 is unavailable for k = 2
  CHECK(sys42->colors[0].young_i == 1);
}

TEST_CASE("color systems: full enumeration at small degree") {
  auto s3 = enumerate_available_colors(3, 1, ColorMode::full);
  REQUIRE(s3->colors.size() == 1);
  CHECK(s3->colors[0].group.order() == 2);
  CHECK(s3->colors[0].young_i == 1);

  auto s2 = enumerate_available_colors(2, 1, ColorMode::full);
  REQUIRE(s2->colors.size() == 1);
  CHECK(s2->colors[0].group.order() == 1);

  // Degree 4, residue 1: the two set stabilizers plus the even subgroup.
  auto s4 = enumerate_available_colors(4, 1, ColorMode::full);
  REQUIRE(s4->colors.size() == 3);
  std::vector<int> orders;
  for (const auto& c : s4->colors) orders.push_back(c.group.order());
  CHECK(orders == std::vector<int>{6, 4, 12});
  CHECK(s4->colors[0].young_i == 1);
  CHECK(s4->colors[1].young_i == 2);
  CHECK(s4->colors[2].young_i == 0);
  CHECK(s4->colors[2].group == PermGroup::alternating(4));

  CHECK_THROWS_AS(enumerate_available_colors(7, 1, ColorMode::full), capability_error);
}

TEST_CASE("full-mode classes are avoiding, pairwise non-conjugate, and maximal") {
  for (auto [r, k] : std::vector<std::pair<int, int>>{{3, 1}, {4, 1}, {4, 2}, {5, 2}}) {
    auto sys = enumerate_available_colors(r, k, ColorMode::full);
    Permutation target = cyc_power(r, k);
    for (size_t a = 0; a < sys->colors.size(); ++a) {
      const PermGroup& g = sys->colors[a].group;
      CHECK(is_conjugate_avoiding(g, target));
      for (size_t b = a + 1; b < sys->colors.size(); ++b)
        CHECK_FALSE(conjugate_subgroups(g, sys->colors[b].group));
      // Extending by any outside element and closing reaches the target type.
      PermGroup whole = PermGroup::symmetric(r);
      for (const Permutation& x : whole.elements()) {
        if (g.contains(x)) continue;
        std::vector<Permutation> gens = g.elements();
        gens.push_back(x);
        CHECK_FALSE(is_conjugate_avoiding(PermGroup::closure(r, gens), target));
      }
    }
  }
}

}  // TEST_SUITE
