#pragma once

#include <algorithm>
#include <optional>
#include <string>
#include <vector>

#include "bracoid/errors.hpp"
#include "bracoid/perm.hpp"

namespace bracoid {

// Finite group on the elements 0..order-1 given by its full Cayley table.
// Instances are immutable once validated; every operation here is a pure
// function of its arguments.
struct FiniteGroup {
  int order = 0;
  std::vector<std::vector<int>> table;  // table[a][b] = a*b
  int identity = 0;
  std::vector<int> inverse;
  std::vector<std::string> labels;

  int mul(int a, int b) const { return table[a][b]; }
  int inv(int a) const { return inverse[a]; }
  int conj(int g, int x) const { return mul(mul(g, x), inv(g)); }

  int power(int a, long long k) const {
    int base = a;
    if (k < 0) {
      base = inv(a);
      k = -k;
    }
    int acc = identity;
    while (k > 0) {
      if (k & 1) acc = mul(acc, base);
      base = mul(base, base);
      k >>= 1;
    }
    return acc;
  }

  int element_order(int a) const {
    int x = a, n = 1;
    while (x != identity) {
      x = mul(x, a);
      ++n;
    }
    return n;
  }

  bool is_abelian() const {
    for (int a = 0; a < order; ++a)
      for (int b = a + 1; b < order; ++b)
        if (mul(a, b) != mul(b, a)) return false;
    return true;
  }

  std::string label(int a) const {
    if (a >= 0 && a < static_cast<int>(labels.size()) && !labels[a].empty())
      return labels[a];
    return "g" + std::to_string(a);
  }

  // Multiset of element orders; cheap isomorphism invariant.
  std::vector<int> order_profile() const {
    std::vector<int> p(order);
    for (int a = 0; a < order; ++a) p[a] = element_order(a);
    std::sort(p.begin(), p.end());
    return p;
  }
};

namespace detail {

// Greedy generating set: repeatedly adjoin the smallest element outside the
// closure so far.
inline std::vector<int> generating_set(const FiniteGroup& g) {
  std::vector<char> in(g.order, 0);
  in[g.identity] = 1;
  int count = 1;
  std::vector<int> gens;
  std::vector<int> members{g.identity};
  while (count < g.order) {
    int x = 0;
    while (in[x]) ++x;
    gens.push_back(x);
    // close members under multiplication by the enlarged set
    members.push_back(x);
    in[x] = 1;
    ++count;
    bool grew = true;
    while (grew) {
      grew = false;
      for (size_t i = 0; i < members.size(); ++i)
        for (size_t j = 0; j < members.size(); ++j) {
          int p = g.mul(members[i], members[j]);
          if (!in[p]) {
            in[p] = 1;
            members.push_back(p);
            ++count;
            grew = true;
          }
        }
    }
  }
  return gens;
}

}  // namespace detail

// Validates a raw multiplication table and assembles the group. Checks run in
// the order: shape, Latin square, identity, inverses, associativity; the first
// failure is reported with a witness. Full n^3 associativity is scanned up to
// order 256; beyond that Light's test over a generating set is used.
inline FiniteGroup from_cayley_table(std::vector<std::vector<int>> table,
                                     std::vector<std::string> labels = {}) {
  const int n = static_cast<int>(table.size());
  if (n == 0) throw Error(errc::invalid_input, "empty table");
  for (int a = 0; a < n; ++a) {
    if (static_cast<int>(table[a].size()) != n)
      throw Error(errc::invalid_input, "table is not square",
                  witness_elems({a}, "row"));
    for (int b = 0; b < n; ++b)
      if (table[a][b] < 0 || table[a][b] >= n)
        throw Error(errc::invalid_input, "entry out of range",
                    witness_elems({a, b}, "cell"));
  }

  for (int a = 0; a < n; ++a) {
    std::vector<char> row(n, 0), col(n, 0);
    for (int b = 0; b < n; ++b) {
      if (row[table[a][b]]++)
        throw Error(errc::not_latin_square,
                    "row " + std::to_string(a) + " repeats a value",
                    witness_elems({a, b}, "cell"));
      if (col[table[b][a]]++)
        throw Error(errc::not_latin_square,
                    "column " + std::to_string(a) + " repeats a value",
                    witness_elems({b, a}, "cell"));
    }
  }

  int identity = -1;
  for (int e = 0; e < n; ++e) {
    bool ok = true;
    for (int a = 0; a < n && ok; ++a)
      ok = table[e][a] == a && table[a][e] == a;
    if (ok) {
      identity = e;
      break;
    }
  }
  if (identity < 0) throw Error(errc::no_identity, "no two-sided identity");

  std::vector<int> inverse(n, -1);
  for (int a = 0; a < n; ++a) {
    for (int b = 0; b < n; ++b)
      if (table[a][b] == identity && table[b][a] == identity) {
        inverse[a] = b;
        break;
      }
    if (inverse[a] < 0)
      throw Error(errc::no_inverse,
                  "element " + std::to_string(a) + " has no two-sided inverse",
                  witness_elems({a}, "element"));
  }

  FiniteGroup g;
  g.order = n;
  g.table = std::move(table);
  g.identity = identity;
  g.inverse = std::move(inverse);
  g.labels = std::move(labels);

  if (n <= 256) {
    for (int a = 0; a < n; ++a)
      for (int b = 0; b < n; ++b)
        for (int c = 0; c < n; ++c)
          if (g.mul(g.mul(a, b), c) != g.mul(a, g.mul(b, c)))
            throw Error(errc::not_associative, "associativity fails",
                        witness_elems({a, b, c}, "triple"));
  } else {
    // Light's associativity test: checking a(xb) = (ax)b for x in a
    // generating set suffices.
    for (int x : detail::generating_set(g))
      for (int a = 0; a < n; ++a)
        for (int b = 0; b < n; ++b)
          if (g.mul(a, g.mul(x, b)) != g.mul(g.mul(a, x), b))
            throw Error(errc::not_associative, "associativity fails",
                        witness_elems({a, x, b}, "triple"));
  }
  return g;
}

inline FiniteGroup trivial_group() {
  return from_cayley_table({{0}}, {"e"});
}

inline std::string power_label(const std::string& symbol, int k) {
  if (k == 0) return "e";
  if (k == 1) return symbol;
  return symbol + "^" + std::to_string(k);
}

// Cyclic group of order d; element i is the i-th power of the generator.
inline FiniteGroup cyclic(int d, const std::string& symbol = "η") {
  if (d < 1) throw Error(errc::invalid_input, "order must be positive");
  std::vector<std::vector<int>> t(d, std::vector<int>(d));
  std::vector<std::string> labels(d);
  for (int a = 0; a < d; ++a) {
    labels[a] = power_label(symbol, a);
    for (int b = 0; b < d; ++b) t[a][b] = (a + b) % d;
  }
  return from_cayley_table(std::move(t), std::move(labels));
}

// Dihedral group of order 2n with elements ordered e, r, ..., r^{n-1},
// s, rs, ..., r^{n-1}s and the relation s r s = r^{-1}.
inline FiniteGroup dihedral(int n) {
  if (n < 1) throw Error(errc::invalid_input, "n must be positive");
  const int m = 2 * n;
  auto enc = [&](int i, int j) { return ((i % n + n) % n) + (j % 2) * n; };
  std::vector<std::vector<int>> t(m, std::vector<int>(m));
  std::vector<std::string> labels(m);
  for (int a = 0; a < m; ++a) {
    const int i1 = a % n, j1 = a / n;
    labels[a] = j1 == 0 ? power_label("r", i1)
                        : (i1 == 0 ? "s" : power_label("r", i1) + "s");
    for (int b = 0; b < m; ++b) {
      const int i2 = b % n, j2 = b / n;
      // r^{i1} s^{j1} r^{i2} s^{j2} = r^{i1 + (-1)^{j1} i2} s^{j1+j2}
      const int i = j1 == 0 ? i1 + i2 : i1 - i2;
      t[a][b] = enc(i, j1 + j2);
    }
  }
  return from_cayley_table(std::move(t), std::move(labels));
}

inline std::string pair_label(const std::string& la, const std::string& lb) {
  if (la == "e") return lb;
  if (lb == "e") return la;
  return la + lb;
}

// Direct product with pair encoding index = a*|B| + b.
inline FiniteGroup direct_product(const FiniteGroup& A, const FiniteGroup& B) {
  const int n = A.order * B.order;
  std::vector<std::vector<int>> t(n, std::vector<int>(n));
  std::vector<std::string> labels(n);
  for (int a1 = 0; a1 < A.order; ++a1)
    for (int b1 = 0; b1 < B.order; ++b1) {
      const int x = a1 * B.order + b1;
      labels[x] = pair_label(A.label(a1), B.label(b1));
      for (int a2 = 0; a2 < A.order; ++a2)
        for (int b2 = 0; b2 < B.order; ++b2)
          t[x][a2 * B.order + b2] =
              A.mul(a1, a2) * B.order + B.mul(b1, b2);
    }
  return from_cayley_table(std::move(t), std::move(labels));
}

// Semidirect product H x| S for an action of S on H by automorphisms:
// (h1,s1)(h2,s2) = (h1 * act[s1](h2), s1 s2). The assignment s -> act[s]
// must be a homomorphism into Aut(H); this is checked.
inline FiniteGroup semidirect_product(const FiniteGroup& H,
                                      const FiniteGroup& S,
                                      const std::vector<Permutation>& act) {
  if (static_cast<int>(act.size()) != S.order)
    throw Error(errc::invalid_input, "one automorphism per S element required");
  for (int s = 0; s < S.order; ++s) {
    if (act[s].degree() != H.order || !act[s].is_bijection())
      throw Error(errc::not_a_homomorphism, "action value is not a bijection",
                  witness_elems({s}, "element"));
    for (int a = 0; a < H.order; ++a)
      for (int b = 0; b < H.order; ++b)
        if (act[s](H.mul(a, b)) != H.mul(act[s](a), act[s](b)))
          throw Error(errc::not_a_homomorphism,
                      "action value is not an automorphism",
                      witness_elems({s, a, b}, "witness"));
  }
  if (!act[S.identity].is_identity())
    throw Error(errc::not_a_homomorphism, "identity must act trivially");
  for (int s1 = 0; s1 < S.order; ++s1)
    for (int s2 = 0; s2 < S.order; ++s2)
      if (act[S.mul(s1, s2)] != act[s1] * act[s2])
        throw Error(errc::not_a_homomorphism,
                    "assignment is not a homomorphism",
                    witness_elems({s1, s2}, "pair"));

  const int n = H.order * S.order;
  std::vector<std::vector<int>> t(n, std::vector<int>(n));
  std::vector<std::string> labels(n);
  for (int h1 = 0; h1 < H.order; ++h1)
    for (int s1 = 0; s1 < S.order; ++s1) {
      const int x = h1 * S.order + s1;
      labels[x] = pair_label(H.label(h1), S.label(s1));
      for (int h2 = 0; h2 < H.order; ++h2)
        for (int s2 = 0; s2 < S.order; ++s2)
          t[x][h2 * S.order + s2] =
              H.mul(h1, act[s1](h2)) * S.order + S.mul(s1, s2);
    }
  return from_cayley_table(std::move(t), std::move(labels));
}

// ---------------------------------------------------------------------------
// Subgroups

struct Subgroup {
  std::vector<int> members;  // sorted, duplicate-free

  int size() const { return static_cast<int>(members.size()); }
  bool contains(int x) const {
    return std::binary_search(members.begin(), members.end(), x);
  }
  bool operator==(const Subgroup&) const = default;
  auto operator<=>(const Subgroup&) const = default;
};

inline Subgroup closure(const FiniteGroup& g, const std::vector<int>& gens) {
  std::vector<char> in(g.order, 0);
  std::vector<int> members{g.identity};
  in[g.identity] = 1;
  for (int x : gens)
    if (!in[x]) {
      in[x] = 1;
      members.push_back(x);
    }
  bool grew = true;
  while (grew) {
    grew = false;
    for (size_t i = 0; i < members.size(); ++i)
      for (size_t j = 0; j < members.size(); ++j) {
        int p = g.mul(members[i], members[j]);
        if (!in[p]) {
          in[p] = 1;
          members.push_back(p);
          grew = true;
        }
      }
  }
  std::sort(members.begin(), members.end());
  return Subgroup{std::move(members)};
}

inline bool is_subgroup(const FiniteGroup& g, const Subgroup& h) {
  if (h.members.empty() || !h.contains(g.identity)) return false;
  for (int a : h.members) {
    if (a < 0 || a >= g.order) return false;
    if (!h.contains(g.inv(a))) return false;
    for (int b : h.members)
      if (!h.contains(g.mul(a, b))) return false;
  }
  return true;
}

inline bool is_normal(const FiniteGroup& g, const Subgroup& h) {
  for (int x = 0; x < g.order; ++x)
    for (int a : h.members)
      if (!h.contains(g.conj(x, a))) return false;
  return true;
}

inline Subgroup trivial_subgroup(const FiniteGroup& g) {
  return Subgroup{{g.identity}};
}

inline Subgroup whole_subgroup(const FiniteGroup& g) {
  std::vector<int> m(g.order);
  std::iota(m.begin(), m.end(), 0);
  return Subgroup{std::move(m)};
}

// Intersection of two sorted member lists.
inline std::vector<int> intersect(const std::vector<int>& a,
                                  const std::vector<int>& b) {
  std::vector<int> out;
  std::set_intersection(a.begin(), a.end(), b.begin(), b.end(),
                        std::back_inserter(out));
  return out;
}

// The subgroup as a group in its own right; element i of the result is
// h.members[i] in the parent.
inline FiniteGroup subgroup_as_group(const FiniteGroup& g, const Subgroup& h) {
  if (!is_subgroup(g, h))
    throw Error(errc::invalid_input, "member list is not a subgroup");
  const int n = h.size();
  std::vector<int> pos(g.order, -1);
  for (int i = 0; i < n; ++i) pos[h.members[i]] = i;
  std::vector<std::vector<int>> t(n, std::vector<int>(n));
  std::vector<std::string> labels(n);
  for (int i = 0; i < n; ++i) {
    labels[i] = g.label(h.members[i]);
    for (int j = 0; j < n; ++j)
      t[i][j] = pos[g.mul(h.members[i], h.members[j])];
  }
  return from_cayley_table(std::move(t), std::move(labels));
}

// Quotient G/K for K normal. Cosets are ordered by their minimal element;
// coset_of maps a parent element to its coset index and rep picks the minimal
// representative.
struct QuotientGroup {
  FiniteGroup group;
  std::vector<int> coset_of;
  std::vector<int> rep;
};

inline QuotientGroup quotient_group(const FiniteGroup& g, const Subgroup& k) {
  if (!is_subgroup(g, k) || !is_normal(g, k))
    throw Error(errc::invalid_input, "quotient requires a normal subgroup");
  std::vector<int> coset_of(g.order, -1);
  std::vector<int> rep;
  for (int x = 0; x < g.order; ++x) {
    if (coset_of[x] >= 0) continue;
    const int c = static_cast<int>(rep.size());
    rep.push_back(x);
    for (int a : k.members) coset_of[g.mul(x, a)] = c;
  }
  const int m = static_cast<int>(rep.size());
  std::vector<std::vector<int>> t(m, std::vector<int>(m));
  std::vector<std::string> labels(m);
  for (int c1 = 0; c1 < m; ++c1) {
    labels[c1] = "[" + g.label(rep[c1]) + "]";
    for (int c2 = 0; c2 < m; ++c2)
      t[c1][c2] = coset_of[g.mul(rep[c1], rep[c2])];
  }
  QuotientGroup q;
  q.group = from_cayley_table(std::move(t), std::move(labels));
  q.coset_of = std::move(coset_of);
  q.rep = std::move(rep);
  return q;
}

}  // namespace bracoid
