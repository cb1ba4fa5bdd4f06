#pragma once

#include <array>
#include <map>
#include <optional>
#include <string>
#include <thread>
#include <utility>
#include <vector>

#include "bracoid/bracoid.hpp"
#include "bracoid/constructions.hpp"

namespace bracoid {

// A set-theoretic map r : X x X -> X x X with its sigma/tau components,
// r(g1, g2) = (sigma_{g1}(g2), tau_{g2}(g1)). Flags are recomputed
// exhaustively, never trusted.
struct SolutionTable {
  int size = 0;
  std::vector<std::string> labels;
  std::vector<std::vector<std::pair<int, int>>> r;
  std::vector<std::vector<int>> sigma;  // sigma[g1][g2]
  std::vector<std::vector<int>> tau;    // tau[g2][g1]
  bool braid_verified = false;
  bool left_nondegenerate = false;
  bool right_nondegenerate = false;
};

struct BraidResult {
  bool ok = true;
  std::array<int, 3> witness{-1, -1, -1};
};

// Exhaustive braid check:
// (r x id)(id x r)(r x id) = (id x r)(r x id)(id x r) on X^3.
inline BraidResult verify_braid(const SolutionTable& s, bool parallel = false) {
  const int m = s.size;
  auto braid_at = [&](int x, int y, int z) {
    // left side
    auto [a1, b1] = s.r[x][y];
    auto [b2, c2] = s.r[b1][z];
    auto [a3, b3] = s.r[a1][b2];
    // right side
    auto [p1, q1] = s.r[y][z];
    auto [o2, p2] = s.r[x][p1];
    auto [p3, q3] = s.r[p2][q1];
    return a3 == o2 && b3 == p3 && c2 == q3;
  };
  auto scan_range = [&](int lo, int hi) -> BraidResult {
    for (int x = lo; x < hi; ++x)
      for (int y = 0; y < m; ++y)
        for (int z = 0; z < m; ++z)
          if (!braid_at(x, y, z)) return BraidResult{false, {x, y, z}};
    return BraidResult{};
  };
  const unsigned hw = std::thread::hardware_concurrency();
  if (!parallel || m < 16 || hw < 2) return scan_range(0, m);

  const int parts = static_cast<int>(std::min<unsigned>(hw, 8));
  std::vector<BraidResult> results(parts);
  std::vector<std::thread> threads;
  for (int p = 0; p < parts; ++p)
    threads.emplace_back([&, p] {
      results[p] = scan_range(m * p / parts, m * (p + 1) / parts);
    });
  for (auto& t : threads) t.join();
  for (const auto& res : results)
    if (!res.ok) return res;  // ranges are ordered, first failure wins
  return BraidResult{};
}

inline std::pair<bool, bool> degeneracy(const SolutionTable& s) {
  auto all_bijective = [&](const std::vector<std::vector<int>>& t) {
    for (const auto& row : t)
      if (!Permutation{row}.is_bijection()) return false;
    return true;
  };
  return {all_bijective(s.sigma), all_bijective(s.tau)};
}

// A skew bracoid relabelled so that its additive group *is* a chosen
// complement H <= G, via the inverse of the evaluation bijection h -> h ⊙ e.
// Solutions are then maps on G whose sigma component lands in H.
struct GHForm {
  SkewBracoid bracoid;        // (G, (H, ★))
  Subgroup h;
  std::vector<int> member;    // additive index -> element of G (in H)
  std::vector<int> g_to_add;  // element of G -> additive index, or -1
};

inline GHForm gh_form(const SkewBracoid& b, const Subgroup& h) {
  if (!is_subgroup(b.mult, h) ||
      h.size() * b.stab.size() != b.mult.order ||
      intersect(h.members, b.stab.members).size() != 1)
    throw Error(errc::not_a_complement,
                "subgroup is not a complement to the stabiliser");
  const FiniteGroup& g = b.mult;
  const FiniteGroup& n = b.add;
  GHForm out;
  out.h = h;
  out.member.assign(n.order, -1);
  out.g_to_add.assign(g.order, -1);
  std::vector<int> add_of_eta(n.order, -1);
  for (int i = 0; i < h.size(); ++i) {
    const int hm = h.members[i];
    const int eta = b.act_e(hm);
    if (add_of_eta[eta] >= 0)
      throw Error(errc::invalid_input, "internal: evaluation not injective on H");
    add_of_eta[eta] = i;
    out.member[i] = hm;
    out.g_to_add[hm] = i;
  }
  // transport ★ and the action through the bijection
  std::vector<std::vector<int>> t(n.order, std::vector<int>(n.order));
  std::vector<std::string> labels(n.order);
  for (int i = 0; i < n.order; ++i) {
    labels[i] = g.label(out.member[i]);
    const int ei = b.act_e(out.member[i]);
    for (int j = 0; j < n.order; ++j)
      t[i][j] = add_of_eta[n.mul(ei, b.act_e(out.member[j]))];
  }
  GroupAction act;
  act.table.assign(g.order, std::vector<int>(n.order));
  for (int x = 0; x < g.order; ++x)
    for (int i = 0; i < n.order; ++i)
      act.table[x][i] = add_of_eta[b.act(x, b.act_e(out.member[i]))];
  out.bracoid =
      validate_bracoid(g, from_cayley_table(std::move(t), std::move(labels)),
                       std::move(act));
  return out;
}

// sigma_{g1}(g2) = gamma_{g1}(g2 ⊙ e) and tau_{g2}(g1) = sigma_{g1}(g2)^{-1}
// g1 g2, both read back into G through the (G, H) form.
inline SolutionTable solution_from_bracoid(const GHForm& gh,
                                           bool parallel = false) {
  const SkewBracoid& b = gh.bracoid;
  const FiniteGroup& g = b.mult;
  auto gm = gamma_map(b);
  SolutionTable s;
  s.size = g.order;
  s.labels.resize(g.order);
  for (int x = 0; x < g.order; ++x) s.labels[x] = g.label(x);
  s.r.assign(g.order, std::vector<std::pair<int, int>>(g.order));
  s.sigma.assign(g.order, std::vector<int>(g.order));
  s.tau.assign(g.order, std::vector<int>(g.order));
  for (int g1 = 0; g1 < g.order; ++g1)
    for (int g2 = 0; g2 < g.order; ++g2) {
      const int sig = gh.member[gm[g1](b.act_e(g2))];
      const int tau = g.mul(g.inv(sig), g.mul(g1, g2));
      s.r[g1][g2] = {sig, tau};
      s.sigma[g1][g2] = sig;
      s.tau[g2][g1] = tau;
    }
  s.braid_verified = verify_braid(s, parallel).ok;
  auto [l, r] = degeneracy(s);
  s.left_nondegenerate = l;
  s.right_nondegenerate = r;
  return s;
}

// Closed form for the almost classical case:
// r(h1 s1, h2 s2) = (s1 h2 s1^{-1}, s1 h2^{-1} s1^{-1} h1 s1 h2 s2).
inline SolutionTable almost_classical_solution(const GHForm& gh) {
  const SkewBracoid& b = gh.bracoid;
  const FiniteGroup& g = b.mult;
  const Subgroup& h = gh.h;
  if (!is_normal(g, h))
    throw Error(errc::not_almost_classical, "complement is not normal");
  for (int h1 : h.members)
    for (int h2 : h.members)
      if (b.add.mul(gh.g_to_add[h1], gh.g_to_add[h2]) !=
          gh.g_to_add[g.mul(h1, h2)])
        throw Error(errc::not_almost_classical,
                    "transferred operation differs from multiplication on H",
                    witness_elems({h1, h2}, "pair"));
  auto f = detail::factorise(g, h, b.stab);
  SolutionTable s;
  s.size = g.order;
  s.labels.resize(g.order);
  for (int x = 0; x < g.order; ++x) s.labels[x] = g.label(x);
  s.r.assign(g.order, std::vector<std::pair<int, int>>(g.order));
  s.sigma.assign(g.order, std::vector<int>(g.order));
  s.tau.assign(g.order, std::vector<int>(g.order));
  for (int x = 0; x < g.order; ++x) {
    const int h1 = f.hpart[x], s1 = f.spart[x];
    for (int y = 0; y < g.order; ++y) {
      const int h2 = f.hpart[y], s2 = f.spart[y];
      const int sig = g.conj(s1, h2);
      int tau = g.mul(g.mul(g.conj(s1, g.inv(h2)), h1),
                      g.mul(s1, g.mul(h2, s2)));
      s.r[x][y] = {sig, tau};
      s.sigma[x][y] = sig;
      s.tau[y][x] = tau;
    }
  }
  s.braid_verified = verify_braid(s).ok;
  auto [l, r] = degeneracy(s);
  s.left_nondegenerate = l;
  s.right_nondegenerate = r;
  return s;
}

// Semidirect decomposition of a solution coming from an almost-a-brace
// bracoid: the matched-product actions read off the tables must be
// alpha_h(s) = s and beta_s(h) = s h s^{-1}, and tau_g must stabilise S.
struct DecompositionReport {
  bool alpha_trivial = false;
  bool beta_is_conjugation = false;
  bool tau_stabilizes_s = false;
  bool ker_tau_restricted_is_h = false;
};

inline DecompositionReport decomposition_check(const SolutionTable& s,
                                               const GHForm& gh) {
  const FiniteGroup& g = gh.bracoid.mult;
  const Subgroup& h = gh.h;
  const Subgroup& stab = gh.bracoid.stab;
  if (!is_normal(g, h))
    throw Error(errc::not_almost_a_brace, "complement is not normal");
  DecompositionReport rep;
  rep.alpha_trivial = true;
  rep.beta_is_conjugation = true;
  for (int hm : h.members)
    for (int sm : stab.members) {
      // alpha_h(s) = (tau_{h^{-1}}(s^{-1}))^{-1}
      if (g.inv(s.tau[g.inv(hm)][g.inv(sm)]) != sm) rep.alpha_trivial = false;
      if (s.sigma[sm][hm] != g.conj(sm, hm)) rep.beta_is_conjugation = false;
    }
  rep.tau_stabilizes_s = true;
  for (int x = 0; x < g.order; ++x) {
    std::vector<int> image;
    for (int sm : stab.members) image.push_back(s.tau[x][sm]);
    std::sort(image.begin(), image.end());
    if (image != stab.members) rep.tau_stabilizes_s = false;
  }
  std::vector<int> ker;
  for (int x = 0; x < g.order; ++x) {
    bool fixes = true;
    for (int sm : stab.members)
      if (s.tau[x][sm] != sm) {
        fixes = false;
        break;
      }
    if (fixes) ker.push_back(x);
  }
  rep.ker_tau_restricted_is_h = ker == h.members;
  return rep;
}

// ---------------------------------------------------------------------------
// Comparison

struct SolutionInvariants {
  int size = 0;
  bool r_bijective = false;
  std::vector<int> r_cycle_type;  // empty unless bijective
  int r_fixed_pairs = 0;
  int diagonal_fixed = 0;  // points with r(x, x) = (x, x)
  std::vector<int> sigma_image_sizes;  // sorted
  std::vector<int> tau_image_sizes;    // sorted
  int sigma_bijective = 0;
  int tau_bijective = 0;

  bool operator==(const SolutionInvariants&) const = default;
};

inline SolutionInvariants solution_invariants(const SolutionTable& s) {
  SolutionInvariants inv;
  inv.size = s.size;
  const int m = s.size;
  std::vector<int> rperm(m * m, -1);
  std::vector<char> hit(m * m, 0);
  inv.r_bijective = true;
  for (int x = 0; x < m; ++x)
    for (int y = 0; y < m; ++y) {
      auto [u, v] = s.r[x][y];
      const int to = u * m + v;
      rperm[x * m + y] = to;
      if (hit[to]) inv.r_bijective = false;
      hit[to] = 1;
      if (u == x && v == y) {
        ++inv.r_fixed_pairs;
        if (x == y) ++inv.diagonal_fixed;
      }
    }
  if (inv.r_bijective) {
    std::vector<char> seen(m * m, 0);
    for (int p = 0; p < m * m; ++p) {
      if (seen[p]) continue;
      int len = 0, q = p;
      while (!seen[q]) {
        seen[q] = 1;
        q = rperm[q];
        ++len;
      }
      inv.r_cycle_type.push_back(len);
    }
    std::sort(inv.r_cycle_type.begin(), inv.r_cycle_type.end());
  }
  auto image_sizes = [&](const std::vector<std::vector<int>>& t,
                         std::vector<int>& sizes, int& bij) {
    for (const auto& row : t) {
      std::vector<int> img = row;
      std::sort(img.begin(), img.end());
      img.erase(std::unique(img.begin(), img.end()), img.end());
      sizes.push_back(static_cast<int>(img.size()));
      if (static_cast<int>(img.size()) == m) ++bij;
    }
    std::sort(sizes.begin(), sizes.end());
  };
  image_sizes(s.sigma, inv.sigma_image_sizes, inv.sigma_bijective);
  image_sizes(s.tau, inv.tau_image_sizes, inv.tau_bijective);
  return inv;
}

enum class IsoVerdict { yes, no, unknown };

namespace detail {

// Backtracking search for a bijection phi with (phi x phi) r = r' (phi x phi).
// Exhaustive for small sizes; for larger ones the node budget turns the
// answer into "unknown" rather than a guess.
struct SolutionIso {
  const SolutionTable& s1;
  const SolutionTable& s2;
  int m;
  std::vector<int> phi, used;
  long long budget;
  bool found = false;
  bool exhausted = true;

  SolutionIso(const SolutionTable& a, const SolutionTable& b, long long nb)
      : s1(a), s2(b), m(a.size), phi(a.size, -1), used(a.size, 0), budget(nb) {}

  bool consistent(int x) {
    for (int y = 0; y < m; ++y) {
      if (phi[y] < 0) continue;
      auto [u, v] = s1.r[x][y];
      if (phi[u] >= 0 && phi[v] >= 0) {
        auto [pu, pv] = s2.r[phi[x]][phi[y]];
        if (pu != phi[u] || pv != phi[v]) return false;
      }
      auto [u2, v2] = s1.r[y][x];
      if (phi[u2] >= 0 && phi[v2] >= 0) {
        auto [pu, pv] = s2.r[phi[y]][phi[x]];
        if (pu != phi[u2] || pv != phi[v2]) return false;
      }
    }
    return true;
  }

  void rec(int x) {
    if (found || budget < 0) return;
    if (x == m) {
      for (int i = 0; i < m && budget >= 0; ++i)
        for (int j = 0; j < m; ++j) {
          auto [u, v] = s1.r[i][j];
          auto [pu, pv] = s2.r[phi[i]][phi[j]];
          if (pu != phi[u] || pv != phi[v]) return;
        }
      found = true;
      return;
    }
    for (int c = 0; c < m && !found; ++c) {
      if (used[c]) continue;
      if (--budget < 0) {
        exhausted = false;
        return;
      }
      phi[x] = c;
      used[c] = 1;
      if (consistent(x)) rec(x + 1);
      phi[x] = -1;
      used[c] = 0;
    }
  }
};

}  // namespace detail

struct CompareResult {
  bool equal = false;
  SolutionInvariants invariants1, invariants2;
  IsoVerdict isomorphic = IsoVerdict::unknown;
};

inline CompareResult compare_solutions(const SolutionTable& a,
                                       const SolutionTable& b,
                                       long long node_budget = 4'000'000) {
  if (a.size != b.size)
    throw Error(errc::size_mismatch, "solutions have different sizes");
  CompareResult out;
  out.equal = a.r == b.r;
  out.invariants1 = solution_invariants(a);
  out.invariants2 = solution_invariants(b);
  if (out.equal) {
    out.isomorphic = IsoVerdict::yes;
    return out;
  }
  if (!(out.invariants1 == out.invariants2)) {
    out.isomorphic = IsoVerdict::no;
    return out;
  }
  detail::SolutionIso search(a, b, a.size <= 8 ? (1LL << 62) : node_budget);
  search.rec(0);
  if (search.found)
    out.isomorphic = IsoVerdict::yes;
  else if (search.exhausted)
    out.isomorphic = IsoVerdict::no;
  else
    out.isomorphic = IsoVerdict::unknown;
  return out;
}

}  // namespace bracoid
