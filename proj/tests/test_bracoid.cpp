#include <catch2/catch_amalgamated.hpp>

#include <set>

#include "bracoid/bracoid.hpp"
#include "bracoid/constructions.hpp"
#include "bracoid/holomorph_bridge.hpp"

using namespace bracoid;

namespace {

// Family action rebuilt from its defining formula, for spot checks.
int family_action(int n, int d, int g, int k) {
  const int i = g % n, j = g / n;
  return ((i + (j == 0 ? k : -k)) % d + d) % d;
}

}  // namespace

TEST_CASE("bracoid validation", "[bracoid]") {
  SECTION("a skew brace seen as a bracoid is valid") {
    auto b = trivial_brace_bracoid(dihedral(3));
    CHECK(b.stab.size() == 1);
    CHECK(b.reduced());
  }
  SECTION("the dihedral family instance is valid") {
    auto b = d2n_family(6, 3);
    for (int g = 0; g < 12; ++g)
      for (int k = 0; k < 3; ++k)
        CHECK(b.act(g, k) == family_action(6, 3, g, k));
  }
  SECTION("corrupting one action cell is caught with a witness") {
    auto good = d2n_family(4, 4);
    auto table = good.action.table;
    std::swap(table[5][1], table[5][2]);
    try {
      validate_bracoid(good.mult, good.add, GroupAction{table});
      FAIL("expected a validation error");
    } catch (const Error& e) {
      CHECK((e.code == errc::not_an_action ||
             e.code == errc::bracoid_relation_fails ||
             e.code == errc::not_transitive));
    }
  }
  SECTION("non-permutation row is rejected") {
    auto good = d2n_family(2, 2);
    auto table = good.action.table;
    table[1][0] = table[1][1];
    CHECK_THROWS_AS(validate_bracoid(good.mult, good.add, GroupAction{table}),
                    Error);
  }
}

TEST_CASE("stabilizer", "[bracoid]") {
  SECTION("family instances have S = <r^d, s>") {
    auto b = d2n_family(12, 4);
    CHECK(b.stab.members == std::vector<int>{0, 4, 8, 12, 16, 20});
    CHECK(b.stab.size() == 6);
  }
  SECTION("reduced family has S = <s>") {
    auto b = d2n_family(5, 5);
    CHECK(b.stab.members == std::vector<int>{0, 5});
  }
  SECTION("skew brace as bracoid has trivial stabiliser") {
    CHECK(trivial_brace_bracoid(cyclic(6)).stab.size() == 1);
  }
}

TEST_CASE("gamma map", "[bracoid]") {
  SECTION("family (D_2n, C_n): gamma(r^i s^j) is inversion^j") {
    for (int n : {3, 4, 6}) {
      auto b = d2n_family(n, n);
      auto gm = gamma_map(b);
      for (int g = 0; g < 2 * n; ++g) {
        const int j = g / n;
        for (int k = 0; k < n; ++k)
          CHECK(gm[g](k) == (j == 0 ? k : (n - k) % n));
      }
    }
  }
  SECTION("trivial skew brace has trivial gamma") {
    auto gm = gamma_map(trivial_brace_bracoid(dihedral(4)));
    for (const auto& p : gm.gamma) CHECK(p.is_identity());
  }
  SECTION("lambda factorisation g ⊙ x = (g ⊙ e) ★ gamma(g)(x)") {
    for (auto b : {d2n_family(12, 4), d2n_family(6, 6), d2n_family(9, 3)}) {
      auto gm = gamma_map(b);
      for (int g = 0; g < b.mult.order; ++g)
        for (int x = 0; x < b.add.order; ++x)
          CHECK(b.act(g, x) == b.add.mul(b.act_e(g), gm[g](x)));
    }
  }
  SECTION("the gamma formula on almost classical instances") {
    // gamma(h1 s1)(h2 ⊙ e) = s1 h2 s1^{-1} ⊙ e
    for (auto [n, d, hgen] : {std::tuple{6, 6, 1}, std::tuple{12, 4, 3}}) {
      auto b = d2n_family(n, d);
      auto gm = gamma_map(b);
      Subgroup h = closure(b.mult, {hgen});
      for (int h1 : h.members)
        for (int s1 : b.stab.members)
          for (int h2 : h.members)
            CHECK(gm[b.mult.mul(h1, s1)](b.act_e(h2)) ==
                  b.act_e(b.mult.conj(s1, h2)));
    }
  }
}

TEST_CASE("classification of the dihedral family", "[bracoid]") {
  SECTION("(n, n): <r> is almost classical for every n") {
    for (int n = 1; n <= 8; ++n) {
      auto c = classify(d2n_family(n, n));
      std::vector<int> r_members;
      for (int i = 0; i < n; ++i) r_members.push_back(i);
      bool found = false;
      for (const auto& rep : c.contains_brace)
        if (rep.h.members == r_members) {
          found = true;
          CHECK(rep.normal);
          CHECK(rep.trivial_brace);
          CHECK(rep.isomorphic_to_additive);
        }
      CHECK(found);
    }
  }
  SECTION("(n, n) even, n >= 4: <r^2, rs> is merely almost a brace") {
    for (int n : {4, 6, 8}) {
      auto b = d2n_family(n, n);
      auto c = classify(b);
      REQUIRE(c.contains_brace.size() == 2);
      Subgroup extra = closure(b.mult, {2, n + 1});
      bool found = false;
      for (const auto& rep : c.contains_brace)
        if (rep.h == extra) {
          found = true;
          CHECK(rep.normal);
          CHECK_FALSE(rep.trivial_brace);
          CHECK_FALSE(rep.isomorphic_to_additive);
        }
      CHECK(found);
    }
  }
  SECTION("(2, 2): the second complement <rs> is also almost classical") {
    auto c = classify(d2n_family(2, 2));
    REQUIRE(c.contains_brace.size() == 2);
    for (const auto& rep : c.contains_brace) {
      CHECK(rep.normal);
      CHECK(rep.trivial_brace);
      CHECK(rep.isomorphic_to_additive);
    }
  }
  SECTION("(12, 4)") {
    auto b = d2n_family(12, 4);
    auto c = classify(b);
    REQUIRE(c.contains_brace.size() == 4);
    auto ac = c.almost_classical();
    REQUIRE(ac.size() == 1);
    CHECK(ac[0].members == std::vector<int>{0, 3, 6, 9});
    std::set<std::vector<int>> non_normal;
    for (const auto& rep : c.contains_brace)
      if (!rep.normal) non_normal.insert(rep.h.members);
    std::set<std::vector<int>> expect;
    for (int cc : {1, 3, 5})
      expect.insert(closure(b.mult, {6, 12 + cc}).members);
    CHECK(non_normal == expect);
  }
  SECTION("(12, 6): two complements, none normal, none cyclic") {
    auto b = d2n_family(12, 6);
    auto c = classify(b);
    REQUIRE(c.contains_brace.size() == 2);
    for (const auto& rep : c.contains_brace) {
      CHECK_FALSE(rep.normal);
      CHECK_FALSE(isomorphic(subgroup_as_group(b.mult, rep.h), cyclic(6)));
    }
    CHECK_FALSE(c.is_almost_brace());
  }
  SECTION("(9, 3): does not contain a brace") {
    auto c = classify(d2n_family(9, 3));
    CHECK(c.contains_brace.empty());
  }
  SECTION("degenerate additive group of order 1") {
    auto c = classify(d2n_family(3, 1));
    REQUIRE(c.contains_brace.size() == 1);
    CHECK(c.contains_brace[0].h.members == std::vector<int>{0});
    CHECK(c.contains_brace[0].normal);
    CHECK(c.contains_brace[0].trivial_brace);
  }
  SECTION("inverse-orbit identity on almost classical complements") {
    // (h ⊙ e)^{-1} = h^{-1} ⊙ e for h in H
    auto b = d2n_family(12, 4);
    Subgroup h = closure(b.mult, {3});
    for (int hm : h.members)
      CHECK(b.add.inv(b.act_e(hm)) == b.act_e(b.mult.inv(hm)));
  }
}

TEST_CASE("reduced form", "[bracoid]") {
  SECTION("already reduced input has an order-preserving quotient") {
    auto b = d2n_family(4, 4);
    auto r = reduced_form(b);
    CHECK(r.mult.order == b.mult.order);
    CHECK(r.kernel.size() == 1);
  }
  SECTION("(D_18, C_3) reduces to (D_6, C_3), which is almost classical") {
    auto b = d2n_family(9, 3);
    CHECK(classify(b).contains_brace.empty());
    auto r = reduced_form(b);
    CHECK(r.mult.order == 6);
    CHECK(isomorphic(r.mult, dihedral(3)));
    CHECK(classify(r).is_almost_classical());
  }
  SECTION("(12, 4) reduces to an order-8 multiplicative group") {
    auto b = d2n_family(12, 4);
    auto r = reduced_form(b);
    CHECK(r.mult.order == 8);
    auto c = classify(r);
    CHECK(c.is_almost_classical());
    CHECK(c.contains_brace.size() >= 2);
  }
}

TEST_CASE("to_skew_brace", "[bracoid]") {
  SECTION("(n, n) with H = <r> is essentially trivial") {
    auto b = d2n_family(5, 5);
    auto eb = to_skew_brace(b, closure(b.mult, {1}));
    CHECK(eb.bracoid.stab.size() == 1);
    CHECK(eb.trivial);
  }
  SECTION("(n, n) even with H = <r^2, rs> is a brace but not trivial") {
    auto b = d2n_family(4, 4);
    auto eb = to_skew_brace(b, closure(b.mult, {2, 5}));
    CHECK(eb.bracoid.stab.size() == 1);
    CHECK_FALSE(eb.trivial);
  }
  SECTION("trivial brace with H = G returns itself") {
    auto b = trivial_brace_bracoid(cyclic(4));
    auto eb = to_skew_brace(b, whole_subgroup(b.mult));
    CHECK(eb.trivial);
    CHECK(eb.bracoid.action.table == b.action.table);
  }
  SECTION("a non-complement is rejected") {
    auto b = d2n_family(6, 3);
    CHECK_THROWS_AS(to_skew_brace(b, closure(b.mult, {3})), Error);
  }
}

TEST_CASE("left ideals", "[bracoid]") {
  auto b = d2n_family(6, 6);
  SECTION("the trivial subgroup and all of N are left ideals") {
    CHECK(is_left_ideal(b, {b.add.identity}));
    CHECK(is_left_ideal(b, whole_subgroup(b.add).members));
  }
  SECTION("orbits of subgroups containing S are left ideals") {
    for (const auto& rec : left_ideals_over_stabilizer(b)) {
      CHECK(rec.left_ideal);
      CHECK(is_subgroup(b.add, Subgroup{rec.orbit}));
    }
  }
  SECTION("G' = S gives the trivial orbit; G' = G gives all of N") {
    auto recs = left_ideals_over_stabilizer(b);
    bool saw_trivial = false, saw_whole = false;
    for (const auto& rec : recs) {
      if (rec.gprime.members == b.stab.members) {
        saw_trivial = true;
        CHECK(rec.orbit == std::vector<int>{b.add.identity});
      }
      if (rec.gprime.size() == b.mult.order) {
        saw_whole = true;
        CHECK(static_cast<int>(rec.orbit.size()) == b.add.order);
      }
    }
    CHECK(saw_trivial);
    CHECK(saw_whole);
  }
  SECTION("a star-subgroup that is not gamma-closed is not a left ideal") {
    // over C2 x C2 the full holomorph permutes the three order-2 subgroups
    auto v4 = direct_product(cyclic(2, "a"), cyclic(2, "b"));
    auto hol = holomorph(v4);
    auto bb = bracoid_from_hol(hol, whole_subgroup(hol.group));
    bool found_non_ideal = false;
    for (int v = 0; v < v4.order; ++v) {
      if (v == v4.identity) continue;
      if (!is_left_ideal(bb, {v4.identity, v})) found_non_ideal = true;
    }
    CHECK(found_non_ideal);
  }
  SECTION("non-subgroup subsets are rejected as ideals") {
    CHECK_FALSE(is_left_ideal(b, {1, 2}));
  }
}
