#pragma once

#include <optional>
#include <string>
#include <vector>

#include "bracoid/automorphisms.hpp"
#include "bracoid/group.hpp"
#include "bracoid/subgroups.hpp"

namespace bracoid {

struct GroupAction {
  std::vector<std::vector<int>> table;  // one row per group element

  int apply(int g, int x) const { return table[g][x]; }
  int rows() const { return static_cast<int>(table.size()); }
  int degree() const { return table.empty() ? 0 : static_cast<int>(table[0].size()); }
};

// A finite skew bracoid (G, N, ⊙): a transitive action of the multiplicative
// group on the additive one satisfying
//   g ⊙ (x ★ y) = (g ⊙ x) ★ (g ⊙ e)^{-1} ★ (g ⊙ y).
// Validation is eager and total; the stabiliser of the additive identity and
// the kernel of the action are cached on construction.
struct SkewBracoid {
  FiniteGroup mult;   // (G, ·)
  FiniteGroup add;    // (N, ★)
  GroupAction action;
  Subgroup stab;      // Stab_G(e_N)
  Subgroup kernel;    // elements acting as the identity permutation

  int act(int g, int x) const { return action.table[g][x]; }
  int act_e(int g) const { return action.table[g][add.identity]; }
  bool reduced() const { return kernel.size() == 1; }
};

inline SkewBracoid validate_bracoid(FiniteGroup g, FiniteGroup n,
                                    GroupAction action) {
  if (action.rows() != g.order)
    throw Error(errc::invalid_input, "action needs one row per group element");
  for (int a = 0; a < g.order; ++a)
    if (static_cast<int>(action.table[a].size()) != n.order)
      throw Error(errc::invalid_input, "action row has wrong length",
                  witness_elems({a}, "row"));

  for (int a = 0; a < g.order; ++a) {
    Permutation row{action.table[a]};
    if (!row.is_bijection())
      throw Error(errc::not_an_action, "row is not a permutation",
                  witness_elems({a}, "element"));
  }
  for (int x = 0; x < n.order; ++x)
    if (action.table[g.identity][x] != x)
      throw Error(errc::not_an_action, "identity does not act trivially",
                  witness_elems({x}, "point"));
  for (int a = 0; a < g.order; ++a)
    for (int b = 0; b < g.order; ++b) {
      const int ab = g.mul(a, b);
      for (int x = 0; x < n.order; ++x)
        if (action.table[ab][x] != action.table[a][action.table[b][x]])
          throw Error(errc::not_an_action, "rows do not compose",
                      witness_elems({a, b, x}, "witness"));
    }

  std::vector<char> orbit(n.order, 0);
  for (int a = 0; a < g.order; ++a) orbit[action.table[a][n.identity]] = 1;
  for (int x = 0; x < n.order; ++x)
    if (!orbit[x])
      throw Error(errc::not_transitive, "orbit of the additive identity misses a point",
                  witness_elems({x}, "point"));

  for (int a = 0; a < g.order; ++a) {
    const int ge = action.table[a][n.identity];
    const int gei = n.inv(ge);
    for (int x = 0; x < n.order; ++x) {
      const int gx = action.table[a][x];
      for (int y = 0; y < n.order; ++y)
        if (action.table[a][n.mul(x, y)] !=
            n.mul(gx, n.mul(gei, action.table[a][y])))
          throw Error(errc::bracoid_relation_fails, "skew bracoid relation fails",
                      witness_elems({a, x, y}, "triple"));
    }
  }

  SkewBracoid b;
  b.mult = std::move(g);
  b.add = std::move(n);
  b.action = std::move(action);
  std::vector<int> smem, kmem;
  for (int a = 0; a < b.mult.order; ++a) {
    if (b.action.table[a][b.add.identity] == b.add.identity) smem.push_back(a);
    bool id = true;
    for (int x = 0; x < b.add.order && id; ++x)
      id = b.action.table[a][x] == x;
    if (id) kmem.push_back(a);
  }
  b.stab = Subgroup{std::move(smem)};
  b.kernel = Subgroup{std::move(kmem)};
  return b;
}

// Any skew brace (G, ★, ·) seen as a skew bracoid: the multiplicative group
// acts on the additive one (same underlying set) by plain multiplication.
inline SkewBracoid skew_brace_as_bracoid(const FiniteGroup& mult,
                                         const FiniteGroup& add) {
  if (mult.order != add.order)
    throw Error(errc::invalid_input, "skew brace needs one underlying set");
  return validate_bracoid(mult, add, GroupAction{mult.table});
}

inline SkewBracoid trivial_brace_bracoid(const FiniteGroup& n) {
  return skew_brace_as_bracoid(n, n);
}

inline Subgroup stabilizer(const SkewBracoid& b) { return b.stab; }

// gamma(g) : x -> (g ⊙ e)^{-1} ★ (g ⊙ x); a homomorphism G -> Aut(N).
struct GammaMap {
  std::vector<Permutation> gamma;  // one automorphism per group element

  const Permutation& operator[](int g) const { return gamma[g]; }
};

inline GammaMap gamma_map(const SkewBracoid& b) {
  GammaMap gm;
  gm.gamma.reserve(b.mult.order);
  for (int g = 0; g < b.mult.order; ++g) {
    const int gei = b.add.inv(b.act_e(g));
    std::vector<int> imgs(b.add.order);
    for (int x = 0; x < b.add.order; ++x)
      imgs[x] = b.add.mul(gei, b.act(g, x));
    Permutation p{std::move(imgs)};
    if (!is_automorphism(b.add, p))
      throw Error(errc::gamma_not_automorphism,
                  "gamma(g) is not an automorphism (internal inconsistency)",
                  witness_elems({g}, "element"));
    gm.gamma.push_back(std::move(p));
  }
  for (int g1 = 0; g1 < b.mult.order; ++g1)
    for (int g2 = 0; g2 < b.mult.order; ++g2)
      if (gm.gamma[b.mult.mul(g1, g2)] != gm.gamma[g1] * gm.gamma[g2])
        throw Error(errc::gamma_not_automorphism,
                    "gamma is not a homomorphism (internal inconsistency)",
                    witness_elems({g1, g2}, "pair"));
  return gm;
}

// The identity-orbit triviality condition (h1 ⊙ e)(h2 ⊙ e) = h1 h2 ⊙ e on a
// subgroup; for a complement this says the transferred skew brace is trivial.
inline bool orbit_multiplicative_on(const SkewBracoid& b, const Subgroup& h) {
  for (int h1 : h.members)
    for (int h2 : h.members)
      if (b.add.mul(b.act_e(h1), b.act_e(h2)) != b.act_e(b.mult.mul(h1, h2)))
        return false;
  return true;
}

struct ComplementReport {
  Subgroup h;
  bool normal = false;
  bool trivial_brace = false;          // (H, N) trivial as a skew brace
  bool isomorphic_to_additive = false; // H ≅ N as groups
};

struct Classification {
  Subgroup stabilizer;
  std::vector<ComplementReport> contains_brace;  // all complements of S
  bool essentially_brace = false;    // S trivial
  bool essentially_trivial = false;  // essentially a brace and trivial

  std::vector<Subgroup> almost_brace() const {
    std::vector<Subgroup> v;
    for (const auto& c : contains_brace)
      if (c.normal) v.push_back(c.h);
    return v;
  }
  std::vector<Subgroup> almost_classical() const {
    std::vector<Subgroup> v;
    for (const auto& c : contains_brace)
      if (c.normal && c.trivial_brace) v.push_back(c.h);
    return v;
  }
  bool is_almost_brace() const {
    for (const auto& c : contains_brace)
      if (c.normal) return true;
    return false;
  }
  bool is_almost_classical() const {
    for (const auto& c : contains_brace)
      if (c.normal && c.trivial_brace) return true;
    return false;
  }
};

// Full classification: every complement H to the stabiliser (an exact
// factorisation G = HS), with normality and triviality flags. The triviality
// test is run both as the identity-orbit condition and as H ⊆ ker(gamma);
// the two must agree.
inline Classification classify(const SkewBracoid& b,
                               int order_cap = kDefaultOrderCap) {
  Classification c;
  c.stabilizer = b.stab;
  auto gm = gamma_map(b);
  for (const auto& comp : complements(b.mult, b.stab, order_cap)) {
    ComplementReport r;
    r.h = comp.subgroup;
    r.normal = comp.normal;
    r.trivial_brace = orbit_multiplicative_on(b, r.h);
    bool in_ker = true;
    for (int h : r.h.members)
      if (!gm[h].is_identity()) {
        in_ker = false;
        break;
      }
    if (in_ker != r.trivial_brace)
      throw Error(errc::gamma_not_automorphism,
                  "triviality tests disagree (internal inconsistency)");
    r.isomorphic_to_additive =
        isomorphic(subgroup_as_group(b.mult, r.h), b.add);
    c.contains_brace.push_back(std::move(r));
  }
  c.essentially_brace = b.stab.size() == 1;
  c.essentially_trivial =
      c.essentially_brace && orbit_multiplicative_on(b, whole_subgroup(b.mult));
  return c;
}

// Quotient by the kernel of the action; the result acts faithfully.
inline SkewBracoid reduced_form(const SkewBracoid& b) {
  auto q = quotient_group(b.mult, b.kernel);
  GroupAction a;
  a.table.resize(q.group.order);
  for (int c = 0; c < q.group.order; ++c) a.table[c] = b.action.table[q.rep[c]];
  auto out = validate_bracoid(q.group, b.add, std::move(a));
  if (!out.reduced())
    throw Error(errc::invalid_input, "internal: reduced form is not reduced");
  return out;
}

struct EssentialBrace {
  SkewBracoid bracoid;  // (H, N) with trivial stabiliser
  bool trivial = false;
};

// Restrict the action to a complement H: the sub-skew bracoid (H, N), which
// is essentially a skew brace.
inline EssentialBrace to_skew_brace(const SkewBracoid& b, const Subgroup& h) {
  if (!is_subgroup(b.mult, h) ||
      h.size() * b.stab.size() != b.mult.order ||
      intersect(h.members, b.stab.members).size() != 1)
    throw Error(errc::not_a_complement,
                "subgroup is not a complement to the stabiliser");
  FiniteGroup hg = subgroup_as_group(b.mult, h);
  GroupAction a;
  a.table.reserve(h.size());
  for (int m : h.members) a.table.push_back(b.action.table[m]);
  EssentialBrace out;
  out.bracoid = validate_bracoid(std::move(hg), b.add, std::move(a));
  if (out.bracoid.stab.size() != 1)
    throw Error(errc::invalid_input, "internal: complement does not act freely");
  out.trivial = orbit_multiplicative_on(b, h);
  return out;
}

// A left ideal is a ★-subgroup of N closed under every gamma(g).
inline bool is_left_ideal(const SkewBracoid& b, const std::vector<int>& subset) {
  std::vector<int> m = subset;
  std::sort(m.begin(), m.end());
  m.erase(std::unique(m.begin(), m.end()), m.end());
  Subgroup s{m};
  if (!is_subgroup(b.add, s)) return false;
  auto gm = gamma_map(b);
  for (int g = 0; g < b.mult.order; ++g)
    for (int x : s.members)
      if (!s.contains(gm[g](x))) return false;
  return true;
}

struct LeftIdealRecord {
  Subgroup gprime;         // subgroup of G containing S
  std::vector<int> orbit;  // G' ⊙ e_N, sorted
  bool left_ideal = false;
};

// One record per subgroup G' of G containing the stabiliser: its identity
// orbit and whether that orbit is a left ideal.
inline std::vector<LeftIdealRecord> left_ideals_over_stabilizer(
    const SkewBracoid& b, int order_cap = kDefaultOrderCap) {
  if (b.mult.order > order_cap)
    throw Error(errc::order_cap_exceeded, "subgroup sweep capped");
  std::vector<LeftIdealRecord> out;
  for (const auto& gp : subgroups_above(b.mult, b.stab)) {
    LeftIdealRecord rec;
    rec.gprime = gp;
    std::vector<char> seen(b.add.order, 0);
    for (int g : gp.members) {
      const int x = b.act_e(g);
      if (!seen[x]) {
        seen[x] = 1;
        rec.orbit.push_back(x);
      }
    }
    std::sort(rec.orbit.begin(), rec.orbit.end());
    rec.left_ideal = is_left_ideal(b, rec.orbit);
    out.push_back(std::move(rec));
  }
  return out;
}

}  // namespace bracoid
