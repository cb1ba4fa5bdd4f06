#pragma once

#include <map>
#include <string>
#include <vector>

#include "bracoid/group.hpp"
#include "bracoid/subgroups.hpp"

namespace bracoid {

using Automorphism = Permutation;

inline bool is_automorphism(const FiniteGroup& g, const Permutation& p) {
  if (p.degree() != g.order || !p.is_bijection()) return false;
  if (p(g.identity) != g.identity) return false;
  for (int a = 0; a < g.order; ++a)
    for (int b = 0; b < g.order; ++b)
      if (p(g.mul(a, b)) != g.mul(p(a), p(b))) return false;
  return true;
}

// Complete Aut(N) in canonical order (lexicographic on image arrays), closure
// and inverse-closure verified.
inline std::vector<Automorphism> automorphism_group(
    const FiniteGroup& n, int order_cap = kDefaultOrderCap) {
  if (n.order > order_cap)
    throw Error(errc::order_cap_exceeded, "automorphism search capped at " +
                                              std::to_string(order_cap));
  auto auts = all_isomorphisms(n, n);
  for (const auto& a : auts)
    if (!is_automorphism(n, a))
      throw Error(errc::invalid_input, "internal: search returned a non-automorphism");
  std::map<std::vector<int>, int> index;
  for (size_t i = 0; i < auts.size(); ++i) index[auts[i].images] = i;
  for (const auto& a : auts) {
    if (!index.count(a.inverse().images))
      throw Error(errc::invalid_input, "internal: Aut(N) not inverse-closed");
    for (const auto& b : auts)
      if (!index.count((a * b).images))
        throw Error(errc::invalid_input, "internal: Aut(N) not closed");
  }
  return auts;
}

// The automorphism list as an abstract group under composition; element i is
// auts[i].
inline FiniteGroup automorphisms_as_group(const std::vector<Automorphism>& auts) {
  const int m = static_cast<int>(auts.size());
  std::map<std::vector<int>, int> index;
  for (int i = 0; i < m; ++i) index[auts[i].images] = i;
  std::vector<std::vector<int>> t(m, std::vector<int>(m));
  std::vector<std::string> labels(m);
  for (int i = 0; i < m; ++i) {
    labels[i] = "θ" + std::to_string(i);
    for (int j = 0; j < m; ++j) {
      auto it = index.find((auts[i] * auts[j]).images);
      if (it == index.end())
        throw Error(errc::invalid_input, "automorphism list is not closed");
      t[i][j] = it->second;
    }
  }
  return from_cayley_table(std::move(t), std::move(labels));
}

// Holomorph N x| Aut(N): elements are pairs (eta, theta) with index
// eta*|Aut| + t, product (eta1 theta1(eta2), theta1 theta2) and natural
// action (eta, theta) mu = eta * theta(mu).
struct HolomorphGroup {
  FiniteGroup base;
  std::vector<Automorphism> aut;
  FiniteGroup group;
  std::vector<std::vector<int>> action;  // pair element x base point

  int pair_index(int eta, int t) const {
    return eta * static_cast<int>(aut.size()) + t;
  }
  int pair_eta(int p) const { return p / static_cast<int>(aut.size()); }
  int pair_aut(int p) const { return p % static_cast<int>(aut.size()); }
  int identity_aut() const {
    for (size_t t = 0; t < aut.size(); ++t)
      if (aut[t].is_identity()) return static_cast<int>(t);
    return -1;
  }
};

inline HolomorphGroup holomorph(const FiniteGroup& n,
                                int hol_cap = kDefaultHolCap) {
  HolomorphGroup h;
  h.base = n;
  h.aut = automorphism_group(n, kDefaultOrderCap);
  const int na = static_cast<int>(h.aut.size());
  const long long total = static_cast<long long>(n.order) * na;
  if (total > hol_cap)
    throw Error(errc::order_cap_exceeded,
                "holomorph order " + std::to_string(total) + " exceeds cap " +
                    std::to_string(hol_cap));
  const int m = static_cast<int>(total);
  std::map<std::vector<int>, int> aindex;
  for (int t = 0; t < na; ++t) aindex[h.aut[t].images] = t;
  std::vector<std::vector<int>> comp(na, std::vector<int>(na));
  for (int t1 = 0; t1 < na; ++t1)
    for (int t2 = 0; t2 < na; ++t2)
      comp[t1][t2] = aindex.at((h.aut[t1] * h.aut[t2]).images);

  std::vector<std::vector<int>> table(m, std::vector<int>(m));
  std::vector<std::string> labels(m);
  for (int e1 = 0; e1 < n.order; ++e1)
    for (int t1 = 0; t1 < na; ++t1) {
      const int x = e1 * na + t1;
      labels[x] = "(" + n.label(e1) + ",θ" + std::to_string(t1) + ")";
      for (int e2 = 0; e2 < n.order; ++e2) {
        const int lead = n.mul(e1, h.aut[t1](e2)) * na;
        for (int t2 = 0; t2 < na; ++t2)
          table[x][e2 * na + t2] = lead + comp[t1][t2];
      }
    }
  h.group = from_cayley_table(std::move(table), std::move(labels));

  h.action.assign(m, std::vector<int>(n.order));
  for (int e1 = 0; e1 < n.order; ++e1)
    for (int t1 = 0; t1 < na; ++t1)
      for (int mu = 0; mu < n.order; ++mu)
        h.action[e1 * na + t1][mu] = n.mul(e1, h.aut[t1](mu));

  // the natural action is faithful and transitive
  std::vector<char> orbit(n.order, 0);
  for (int p = 0; p < m; ++p) {
    orbit[h.action[p][n.identity]] = 1;
    if (p != h.group.identity) {
      bool trivial = true;
      for (int mu = 0; mu < n.order && trivial; ++mu)
        trivial = h.action[p][mu] == mu;
      if (trivial)
        throw Error(errc::invalid_input, "internal: holomorph action not faithful");
    }
  }
  for (int mu = 0; mu < n.order; ++mu)
    if (!orbit[mu])
      throw Error(errc::invalid_input, "internal: holomorph action not transitive");
  return h;
}

}  // namespace bracoid
