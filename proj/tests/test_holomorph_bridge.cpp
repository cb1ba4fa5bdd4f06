#include <catch2/catch_amalgamated.hpp>

#include <algorithm>
#include <set>

#include "bracoid/constructions.hpp"
#include "bracoid/holomorph_bridge.hpp"

using namespace bracoid;

namespace {

// beta from a bracoid's own action rows
std::vector<Permutation> action_rows(const SkewBracoid& b) {
  std::vector<Permutation> rows;
  for (const auto& row : b.action.table) rows.push_back(Permutation{row});
  return rows;
}

std::set<std::vector<int>> image_set(const std::vector<Permutation>& v) {
  std::set<std::vector<int>> out;
  for (const auto& p : v) out.insert(p.images);
  return out;
}

// brute-force centraliser over all of Perm(X), feasible for |X| <= 4
std::vector<Permutation> centralizer_by_scan(
    const std::vector<Permutation>& elems) {
  const int m = elems.front().degree();
  std::vector<int> imgs(m);
  std::iota(imgs.begin(), imgs.end(), 0);
  std::vector<Permutation> out;
  do {
    Permutation cand{imgs};
    bool ok = true;
    for (const auto& t : elems)
      if (cand * t != t * cand) {
        ok = false;
        break;
      }
    if (ok) out.push_back(cand);
  } while (std::next_permutation(imgs.begin(), imgs.end()));
  std::sort(out.begin(), out.end());
  return out;
}

}  // namespace

TEST_CASE("lambda image", "[holomorph]") {
  SECTION("(n, n) maps onto N x| <inversion>") {
    for (int n : {3, 4, 6}) {
      auto b = d2n_family(n, n);
      auto a = lambda_image(b);
      CHECK(a.transitive);
      CHECK(a.members.size() == 2 * n);
      CHECK(a.contains_n_id);
      // members are exactly the pairs (eta, id) and (eta, inversion)
      std::vector<int> inv_images(n);
      for (int k = 0; k < n; ++k) inv_images[k] = (n - k) % n;
      int inv_idx = -1;
      for (size_t t = 0; t < a.hol.aut.size(); ++t)
        if (a.hol.aut[t].images == inv_images) inv_idx = static_cast<int>(t);
      REQUIRE(inv_idx >= 0);
      const int idt = a.hol.identity_aut();
      std::set<int> expect;
      for (int eta = 0; eta < n; ++eta) {
        expect.insert(a.hol.pair_index(eta, idt));
        expect.insert(a.hol.pair_index(eta, inv_idx));
      }
      CHECK(std::set<int>(a.members.members.begin(), a.members.members.end()) ==
            expect);
    }
  }
  SECTION("trivial skew brace maps onto (N, id)") {
    auto b = trivial_brace_bracoid(cyclic(5));
    auto a = lambda_image(b);
    CHECK(a.members.size() == 5);
    CHECK(a.regular);
    CHECK(a.contains_n_id);
  }
  SECTION("(9, 3) collapses to an image of order 6") {
    auto a = lambda_image(d2n_family(9, 3));
    CHECK(a.members.size() == 6);
  }
}

TEST_CASE("bracoid from a holomorph subgroup", "[holomorph]") {
  SECTION("(N, id) gives the trivial skew brace") {
    auto hol = holomorph(cyclic(4));
    const int idt = hol.identity_aut();
    std::vector<int> mem;
    for (int eta = 0; eta < 4; ++eta) mem.push_back(hol.pair_index(eta, idt));
    std::sort(mem.begin(), mem.end());
    auto b = bracoid_from_hol(hol, Subgroup{mem});
    auto c = classify(b);
    CHECK(c.essentially_brace);
    CHECK(c.essentially_trivial);
  }
  SECTION("the full Hol(C_3) gives a dihedral almost classical bracoid") {
    auto hol = holomorph(cyclic(3));
    auto b = bracoid_from_hol(hol, whole_subgroup(hol.group));
    CHECK(isomorphic(b.mult, dihedral(3)));
    CHECK(classify(b).is_almost_classical());
  }
  SECTION("a non-transitive subgroup is rejected") {
    auto hol = holomorph(cyclic(4));
    // the purely-automorphism part fixes e_N, so it cannot be transitive
    std::vector<int> mem;
    for (size_t t = 0; t < hol.aut.size(); ++t)
      mem.push_back(hol.pair_index(hol.base.identity, static_cast<int>(t)));
    std::sort(mem.begin(), mem.end());
    CHECK_THROWS_AS(bracoid_from_hol(hol, Subgroup{mem}), Error);
  }
  SECTION("round trip against the reduced form") {
    for (auto b : {d2n_family(3, 3), d2n_family(4, 4), d2n_family(9, 3),
                   d2n_family(12, 4)}) {
      auto a = lambda_image(b);
      auto round = bracoid_from_hol(a.hol, a.members);
      CHECK(equivalent_reduced(round, reduced_form(b)));
    }
  }
}

TEST_CASE("form detection", "[holomorph]") {
  SECTION("N x| <inversion> contains (N, id)") {
    auto b = d2n_family(6, 6);
    auto a = lambda_image(b);
    auto d = detect_forms(a.hol, a.members);
    CHECK(d.contains_n_id);
    CHECK(d.has_rb_form);
    REQUIRE(d.r_witness.has_value());
    CHECK(detail::regular_in_hol(d.hol, d.r_witness->members));
  }
  SECTION("a regular subgroup alone has both forms") {
    auto hol = holomorph(cyclic(4));
    const int idt = hol.identity_aut();
    std::vector<int> mem;
    for (int eta = 0; eta < 4; ++eta) mem.push_back(hol.pair_index(eta, idt));
    std::sort(mem.begin(), mem.end());
    auto d = detect_forms(hol, Subgroup{mem});
    CHECK(d.regular);
    CHECK(d.contains_n_id);
    CHECK(d.has_rb_form);
  }
  SECTION("detection matches classification on every transitive subgroup") {
    std::vector<FiniteGroup> bases = {cyclic(4), cyclic(5), cyclic(6),
                                      direct_product(cyclic(2, "a"),
                                                     cyclic(2, "b"))};
    for (const auto& n : bases) {
      auto hol = holomorph(n);
      for (const auto& sub : all_subgroups(hol.group)) {
        std::vector<char> orbit(n.order, 0);
        for (int p : sub.members) orbit[hol.action[p][n.identity]] = 1;
        bool transitive = true;
        for (int x = 0; x < n.order; ++x)
          if (!orbit[x]) transitive = false;
        if (!transitive) continue;
        // detect_forms itself asserts agreement with classify; reaching the
        // checks below means the cross-check passed
        auto d = detect_forms(hol, sub);
        auto c = classify(bracoid_from_hol(hol, sub));
        CHECK(d.has_rb_form == c.is_almost_brace());
        CHECK(d.contains_n_id == c.is_almost_classical());
      }
    }
  }
  SECTION("a transitive subgroup with no normal regular subgroup") {
    // the affine group of C_2^3 contains a transitive copy of the simple
    // group GL_3(2); simplicity leaves no normal subgroup of order 8
    auto n = direct_product(direct_product(cyclic(2, "a"), cyclic(2, "b")),
                            cyclic(2, "c"));
    auto hol = holomorph(n);
    REQUIRE(hol.group.order == 1344);
    // basis images encode the automorphisms: a cyclic coordinate shift and a
    // transvection, which together generate the full automorphism group
    auto aut_perm = [&](std::array<std::array<int, 3>, 3> mat) {
      // vector index: (a, b, c) -> ((a*2) + b)*2 + c
      std::vector<int> imgs(8);
      for (int v = 0; v < 8; ++v) {
        const int bits[3] = {v >> 2 & 1, v >> 1 & 1, v & 1};
        int w[3] = {0, 0, 0};
        for (int i = 0; i < 3; ++i)
          for (int j = 0; j < 3; ++j) w[i] ^= mat[i][j] & bits[j];
        imgs[v] = (w[0] << 2) | (w[1] << 1) | w[2];
      }
      return Permutation{imgs};
    };
    Permutation shift = aut_perm({{{0, 0, 1}, {1, 0, 0}, {0, 1, 0}}});
    Permutation transv = aut_perm({{{1, 1, 0}, {0, 1, 0}, {0, 0, 1}}});
    int ts = -1, tt = -1;
    for (size_t t = 0; t < hol.aut.size(); ++t) {
      if (hol.aut[t] == shift) ts = static_cast<int>(t);
      if (hol.aut[t] == transv) tt = static_cast<int>(t);
    }
    REQUIRE(ts >= 0);
    REQUIRE(tt >= 0);
    // search translation parts making the closure a transitive complement
    bool found = false;
    for (int u = 0; u < 8 && !found; ++u)
      for (int v = 0; v < 8 && !found; ++v) {
        auto sub = closure(hol.group,
                           {hol.pair_index(u, ts), hol.pair_index(v, tt)});
        if (sub.size() != 168) continue;
        std::vector<char> orbit(8, 0);
        for (int p : sub.members) orbit[hol.action[p][n.identity]] = 1;
        bool transitive = true;
        for (int x = 0; x < 8; ++x)
          if (!orbit[x]) transitive = false;
        if (!transitive) continue;
        found = true;
        auto d = detect_forms(hol, sub);
        CHECK_FALSE(d.contains_n_id);
        CHECK_FALSE(d.has_rb_form);
        CHECK(d.transitive);
        // simple: only the trivial and full normal subgroups
        CHECK(normal_subgroups(subgroup_as_group(hol.group, sub)).size() == 2);
      }
    CHECK(found);
  }
}

TEST_CASE("almost classical enumeration", "[holomorph]") {
  SECTION("counts for small cyclic groups") {
    CHECK(enumerate_almost_classical(cyclic(2)).count == 1);
    auto e3 = enumerate_almost_classical(cyclic(3));
    CHECK(e3.count == 2);
    // two representatives: the trivial brace and a dihedral one
    bool saw_trivial = false, saw_dihedral = false;
    for (const auto& b : e3.bracoids) {
      if (b.mult.order == 3) saw_trivial = true;
      if (b.mult.order == 6 && isomorphic(b.mult, dihedral(3)))
        saw_dihedral = true;
      CHECK(classify(b).is_almost_classical());
    }
    CHECK(saw_trivial);
    CHECK(saw_dihedral);
  }
  SECTION("count equals the oracle for C_12") {
    auto e = enumerate_almost_classical(cyclic(12));
    CHECK(e.count == 5);
    CHECK(oracle_count_almost_classical(cyclic(12)) == 5);
  }
  SECTION("the interval above (N, id) matches filtering all subgroups") {
    for (const auto& n :
         {cyclic(3), cyclic(4),
          direct_product(cyclic(2, "a"), cyclic(2, "b"))}) {
      auto hol = holomorph(n);
      const int idt = hol.identity_aut();
      std::vector<int> nid;
      for (int eta = 0; eta < n.order; ++eta)
        nid.push_back(hol.pair_index(eta, idt));
      std::sort(nid.begin(), nid.end());
      auto above = subgroups_above(hol.group, Subgroup{nid});
      std::set<std::vector<int>> expect;
      for (const auto& sub : all_subgroups(hol.group)) {
        bool contains = true;
        for (int p : nid)
          if (!sub.contains(p)) contains = false;
        if (contains) expect.insert(sub.members);
      }
      std::set<std::vector<int>> got;
      for (const auto& sub : above) got.insert(sub.members);
      CHECK(got == expect);
    }
  }
}

TEST_CASE("rho_star versus opposite left translation", "[holomorph]") {
  SECTION("family (n, n) with H = <r>") {
    for (int n : {4, 6}) {
      auto b = d2n_family(n, n);
      auto rep = rho_star_vs_opp(b, closure(b.mult, {1}));
      CHECK(rep.pointwise_equal);
      CHECK(rep.commutes);
      CHECK(rep.coset_multiplicativity);
      CHECK(rep.commutation_pairs == n * n);
    }
  }
  SECTION("|X| = 1 is trivially fine") {
    auto b = d2n_family(1, 1);
    auto rep = rho_star_vs_opp(b, trivial_subgroup(b.mult));
    CHECK(rep.pointwise_equal);
    CHECK(rep.commutes);
  }
  SECTION("a merely almost-a-brace complement is rejected") {
    auto b = d2n_family(4, 4);
    CHECK_THROWS_AS(rho_star_vs_opp(b, closure(b.mult, {2, 5})), Error);
  }
}

TEST_CASE("embedding translation", "[holomorph]") {
  SECTION("left translation seed gives right translation back") {
    for (auto n : {cyclic(4), dihedral(3)}) {
      // G = N, G' trivial: X identifies with N itself
      std::vector<Permutation> lam(n.order), rho(n.order);
      for (int eta = 0; eta < n.order; ++eta) {
        std::vector<int> li(n.order), ri(n.order);
        for (int mu = 0; mu < n.order; ++mu) {
          li[mu] = n.mul(eta, mu);
          ri[mu] = n.mul(mu, n.inv(eta));
        }
        lam[eta] = Permutation{li};
        rho[eta] = Permutation{ri};
      }
      auto p = alpha_to_beta(n, n, trivial_subgroup(n), lam);
      for (int eta = 0; eta < n.order; ++eta) CHECK(p.beta[eta] == rho[eta]);
      // a is inversion
      for (int eta = 0; eta < n.order; ++eta) CHECK(p.a[eta] == n.inv(eta));
      // round trip reproduces alpha
      auto p2 = beta_to_alpha(n, n, trivial_subgroup(n), p.beta);
      CHECK(p2.alpha == p.alpha);
      CHECK(p2.a == p.a);
      CHECK(p2.b == p.b);
    }
  }
  SECTION("trivial group") {
    auto n = trivial_group();
    auto p = alpha_to_beta(n, n, trivial_subgroup(n),
                           {Permutation::identity(1)});
    CHECK(p.beta.size() == 1);
    CHECK(p.galois_closure);
  }
  SECTION("round trips on bracoid-constructed pairs") {
    for (int n : {3, 4, 6}) {
      auto b = d2n_family(n, n);
      auto p = beta_to_alpha(b.add, b.mult, b.stab, action_rows(b));
      auto p2 = alpha_to_beta(b.add, b.mult, b.stab, p.alpha);
      CHECK(p2.beta == p.beta);
      CHECK(p2.a == p.a);
      CHECK(p2.b == p.b);
      CHECK(p.galois_closure);  // the reduced family acts faithfully
      // b and a are mutually inverse
      for (int eta = 0; eta < b.add.order; ++eta)
        CHECK(p.b[p.a[eta]] == eta);
    }
  }
  SECTION("stabiliser condition failures are reported") {
    auto b = d2n_family(4, 4);
    // declare the wrong subgroup: reflections are not the stabiliser of e_N
    Subgroup wrong = closure(b.mult, {2, 4});
    CHECK_THROWS_AS(beta_to_alpha(b.add, b.mult, wrong, action_rows(b)),
                    Error);
  }
}

TEST_CASE("iota twist and opposites", "[holomorph]") {
  SECTION("abelian N: the twisted image equals the original") {
    auto n = cyclic(4);
    std::vector<Permutation> lam(n.order);
    for (int eta = 0; eta < n.order; ++eta) {
      std::vector<int> li(n.order);
      for (int mu = 0; mu < n.order; ++mu) li[mu] = n.mul(eta, mu);
      lam[eta] = Permutation{li};
    }
    auto p = alpha_to_beta(n, n, trivial_subgroup(n), lam);
    auto p_hat = iota_twist(p);
    CHECK(image_set(p.alpha) == image_set(p_hat.alpha));
    CHECK(opp_check(p, p_hat));
  }
  SECTION("nonabelian N: the twist is a genuine opposite") {
    auto n = dihedral(3);
    std::vector<Permutation> lam(n.order);
    for (int eta = 0; eta < n.order; ++eta) {
      std::vector<int> li(n.order);
      for (int mu = 0; mu < n.order; ++mu) li[mu] = n.mul(eta, mu);
      lam[eta] = Permutation{li};
    }
    auto p = alpha_to_beta(n, n, trivial_subgroup(n), lam);
    auto p_hat = iota_twist(p);
    CHECK(image_set(p.alpha) != image_set(p_hat.alpha));
    CHECK(opp_check(p, p_hat));
    // double twist is the identity
    auto p_hh = iota_twist(p_hat);
    CHECK(p_hh.beta == p.beta);
    CHECK(p_hh.alpha == p.alpha);
  }
  SECTION("constructive centraliser matches the brute-force scan") {
    auto n = cyclic(4);
    std::vector<Permutation> lam(n.order);
    for (int eta = 0; eta < n.order; ++eta) {
      std::vector<int> li(n.order);
      for (int mu = 0; mu < n.order; ++mu) li[mu] = n.mul(eta, mu);
      lam[eta] = Permutation{li};
    }
    CHECK(centralizer_in_sym(lam) == centralizer_by_scan(lam));
    // and for a nonabelian regular image of order 6 the centraliser has
    // exactly six elements
    auto s3 = dihedral(3);
    std::vector<Permutation> lam6(s3.order);
    for (int eta = 0; eta < s3.order; ++eta) {
      std::vector<int> li(s3.order);
      for (int mu = 0; mu < s3.order; ++mu) li[mu] = s3.mul(eta, mu);
      lam6[eta] = Permutation{li};
    }
    CHECK(centralizer_in_sym(lam6).size() == 6);
  }
}

TEST_CASE("G-stability", "[holomorph]") {
  SECTION("pairs from valid bracoids are stable and land in Hol(N)") {
    for (int n : {3, 4, 6}) {
      auto b = d2n_family(n, n);
      auto p = beta_to_alpha(b.add, b.mult, b.stab, action_rows(b));
      auto gs = g_stability_check(p);
      CHECK(gs.alpha_g_stable);
      CHECK(gs.beta_in_hol);
    }
  }
  SECTION("a hand-built non-stable regular embedding at |X| = 4") {
    auto g = dihedral(4);
    auto n = cyclic(4);
    Subgroup gp = closure(g, {4});  // <s>, core-free
    // alpha generated by the 4-cycle (0 1 3 2) on cosets, which left
    // translation by r does not normalise
    Permutation c{{1, 3, 0, 2}};
    std::vector<Permutation> alpha(4, Permutation::identity(4));
    for (int k = 1; k < 4; ++k) alpha[k] = alpha[k - 1] * c;
    auto p = alpha_to_beta(n, g, gp, alpha);
    auto gs = g_stability_check(p);
    CHECK_FALSE(gs.alpha_g_stable);
    CHECK_FALSE(gs.beta_in_hol);
  }
}
