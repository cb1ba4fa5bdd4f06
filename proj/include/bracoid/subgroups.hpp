#pragma once

#include <cstdint>
#include <optional>
#include <unordered_map>
#include <unordered_set>
#include <vector>

#include "bracoid/group.hpp"

namespace bracoid {

namespace detail {

// Subgroup enumeration below works on uint64_t membership masks, which caps
// the group order at 64. Closure of a mask under the table:
inline uint64_t closure_mask(const FiniteGroup& g, uint64_t mask) {
  mask |= uint64_t{1} << g.identity;
  bool grew = true;
  while (grew) {
    grew = false;
    for (int a = 0; a < g.order; ++a) {
      if (!(mask >> a & 1)) continue;
      for (int b = 0; b < g.order; ++b) {
        if (!(mask >> b & 1)) continue;
        const int p = g.mul(a, b);
        if (!(mask >> p & 1)) {
          mask |= uint64_t{1} << p;
          grew = true;
        }
      }
    }
  }
  return mask;
}

inline Subgroup mask_to_subgroup(const FiniteGroup& g, uint64_t mask) {
  std::vector<int> m;
  for (int x = 0; x < g.order; ++x)
    if (mask >> x & 1) m.push_back(x);
  return Subgroup{std::move(m)};
}

inline uint64_t subgroup_to_mask(const Subgroup& h) {
  uint64_t m = 0;
  for (int x : h.members) m |= uint64_t{1} << x;
  return m;
}

inline uint64_t conj_mask(const FiniteGroup& g, int x, uint64_t mask) {
  uint64_t out = 0;
  for (int a = 0; a < g.order; ++a)
    if (mask >> a & 1) out |= uint64_t{1} << g.conj(x, a);
  return out;
}

inline void require_cap(const FiniteGroup& g, int cap, const char* what) {
  if (g.order > cap || g.order > 64)
    throw Error(errc::order_cap_exceeded,
                std::string(what) + " capped at order " +
                    std::to_string(std::min(cap, 64)) + ", got " +
                    std::to_string(g.order));
}

inline bool mask_sorted_less(const FiniteGroup& g, uint64_t a, uint64_t b) {
  const int ca = __builtin_popcountll(a), cb = __builtin_popcountll(b);
  if (ca != cb) return ca < cb;
  for (int x = 0; x < g.order; ++x) {
    const bool ia = a >> x & 1, ib = b >> x & 1;
    if (ia != ib) return ia;  // earlier member wins lexicographically
  }
  return false;
}

}  // namespace detail

// Complete list of subgroups, sorted by size then lexicographic member list.
inline std::vector<Subgroup> all_subgroups(const FiniteGroup& g,
                                           int order_cap = kDefaultOrderCap) {
  detail::require_cap(g, order_cap, "subgroup enumeration");
  std::unordered_set<uint64_t> seen;
  std::vector<uint64_t> work{detail::closure_mask(g, 0)};
  seen.insert(work[0]);
  for (size_t i = 0; i < work.size(); ++i) {
    const uint64_t base = work[i];
    for (int x = 0; x < g.order; ++x) {
      if (base >> x & 1) continue;
      const uint64_t u = detail::closure_mask(g, base | uint64_t{1} << x);
      if (seen.insert(u).second) work.push_back(u);
    }
  }
  std::sort(work.begin(), work.end(), [&](uint64_t a, uint64_t b) {
    return detail::mask_sorted_less(g, a, b);
  });
  std::vector<Subgroup> out;
  out.reserve(work.size());
  for (uint64_t m : work) out.push_back(detail::mask_to_subgroup(g, m));
  return out;
}

// All subgroups containing the given one (the interval above it in the
// subgroup lattice). No order cap beyond the mask width: the interval is
// small even when the full lattice is not.
inline std::vector<Subgroup> subgroups_above(const FiniteGroup& g,
                                             const Subgroup& h) {
  if (g.order > 64)
    throw Error(errc::order_cap_exceeded, "mask enumeration needs order <= 64");
  std::unordered_set<uint64_t> seen;
  std::vector<uint64_t> work{detail::closure_mask(g, detail::subgroup_to_mask(h))};
  seen.insert(work[0]);
  for (size_t i = 0; i < work.size(); ++i) {
    const uint64_t base = work[i];
    for (int x = 0; x < g.order; ++x) {
      if (base >> x & 1) continue;
      const uint64_t u = detail::closure_mask(g, base | uint64_t{1} << x);
      if (seen.insert(u).second) work.push_back(u);
    }
  }
  std::sort(work.begin(), work.end(), [&](uint64_t a, uint64_t b) {
    return detail::mask_sorted_less(g, a, b);
  });
  std::vector<Subgroup> out;
  for (uint64_t m : work) out.push_back(detail::mask_to_subgroup(g, m));
  return out;
}

// Normal subgroups via closures of unions of conjugacy classes. Scales past
// the subgroup-lattice cap because the normal lattice is small.
inline std::vector<Subgroup> normal_subgroups(const FiniteGroup& g) {
  // conjugacy classes of elements
  std::vector<int> cls(g.order, -1);
  std::vector<std::vector<int>> classes;
  for (int x = 0; x < g.order; ++x) {
    if (cls[x] >= 0) continue;
    const int c = static_cast<int>(classes.size());
    classes.emplace_back();
    for (int y = 0; y < g.order; ++y) {
      const int z = g.conj(y, x);
      if (cls[z] < 0) {
        cls[z] = c;
        classes[c].push_back(z);
      }
    }
  }
  auto close_members = [&](std::vector<int> seed) {
    std::vector<char> in(g.order, 0);
    std::vector<int> m;
    auto add = [&](int x) {
      if (!in[x]) {
        in[x] = 1;
        m.push_back(x);
      }
    };
    add(g.identity);
    for (int x : seed) add(x);
    for (size_t i = 0; i < m.size(); ++i)
      for (size_t j = 0; j < m.size(); ++j) add(g.mul(m[i], m[j]));
    std::sort(m.begin(), m.end());
    return m;
  };

  std::vector<std::vector<int>> found{close_members({})};
  for (size_t i = 0; i < found.size(); ++i) {
    for (const auto& c : classes) {
      if (std::binary_search(found[i].begin(), found[i].end(), c[0])) continue;
      std::vector<int> seed = found[i];
      seed.insert(seed.end(), c.begin(), c.end());
      auto u = close_members(std::move(seed));
      if (std::find(found.begin(), found.end(), u) == found.end())
        found.push_back(std::move(u));
    }
  }
  std::sort(found.begin(), found.end(), [](const auto& a, const auto& b) {
    if (a.size() != b.size()) return a.size() < b.size();
    return a < b;
  });
  std::vector<Subgroup> out;
  for (auto& m : found) out.push_back(Subgroup{std::move(m)});
  return out;
}

struct Complement {
  Subgroup subgroup;
  bool normal = false;
};

// All H <= G with |H| * |S| = |G| and trivial intersection with S, i.e. the
// exact factorisations G = HS. Search extends subgroups by generators outside
// S, pruning by divisibility and the trivial-intersection condition; both
// survive passage to any subgroup of a complement, so the search is
// exhaustive.
inline std::vector<Complement> complements(const FiniteGroup& g,
                                           const Subgroup& s,
                                           int order_cap = kDefaultOrderCap) {
  detail::require_cap(g, order_cap, "complement search");
  if (!is_subgroup(g, s))
    throw Error(errc::invalid_input, "stabiliser argument is not a subgroup");
  if (g.order % s.size() != 0)
    throw Error(errc::invalid_input, "subgroup order does not divide group order");
  const int target = g.order / s.size();
  const uint64_t smask = detail::subgroup_to_mask(s);
  const uint64_t emask = uint64_t{1} << g.identity;

  std::unordered_set<uint64_t> seen;
  std::vector<uint64_t> work{detail::closure_mask(g, 0)};
  seen.insert(work[0]);
  std::vector<uint64_t> hits;
  if (target == 1) hits.push_back(work[0]);
  for (size_t i = 0; i < work.size(); ++i) {
    const uint64_t base = work[i];
    if (__builtin_popcountll(base) == target) continue;
    for (int x = 0; x < g.order; ++x) {
      if ((base >> x & 1) || (smask >> x & 1)) continue;
      const uint64_t u = detail::closure_mask(g, base | uint64_t{1} << x);
      if ((u & smask) != emask) continue;
      const int sz = __builtin_popcountll(u);
      if (sz > target || target % sz != 0) continue;
      if (!seen.insert(u).second) continue;
      work.push_back(u);
      if (sz == target) hits.push_back(u);
    }
  }
  std::sort(hits.begin(), hits.end(), [&](uint64_t a, uint64_t b) {
    return detail::mask_sorted_less(g, a, b);
  });
  std::vector<Complement> out;
  for (uint64_t m : hits) {
    Complement c;
    c.subgroup = detail::mask_to_subgroup(g, m);
    c.normal = is_normal(g, c.subgroup);
    out.push_back(std::move(c));
  }
  return out;
}

// Partition of all subgroups into conjugation orbits. Classes are sorted by
// (subgroup size, lexicographic minimum member list); each class lists its
// members in canonical order with the minimum first.
inline std::vector<std::vector<Subgroup>> conjugacy_classes_of_subgroups(
    const FiniteGroup& g, int order_cap = kDefaultOrderCap) {
  auto subs = all_subgroups(g, order_cap);
  std::unordered_map<uint64_t, int> index;
  for (size_t i = 0; i < subs.size(); ++i)
    index[detail::subgroup_to_mask(subs[i])] = static_cast<int>(i);
  std::vector<char> used(subs.size(), 0);
  std::vector<std::vector<Subgroup>> classes;
  for (size_t i = 0; i < subs.size(); ++i) {
    if (used[i]) continue;
    std::vector<uint64_t> orbit{detail::subgroup_to_mask(subs[i])};
    std::unordered_set<uint64_t> in_orbit{orbit[0]};
    for (size_t j = 0; j < orbit.size(); ++j)
      for (int x = 0; x < g.order; ++x) {
        const uint64_t m = detail::conj_mask(g, x, orbit[j]);
        if (in_orbit.insert(m).second) orbit.push_back(m);
      }
    std::sort(orbit.begin(), orbit.end(), [&](uint64_t a, uint64_t b) {
      return detail::mask_sorted_less(g, a, b);
    });
    std::vector<Subgroup> cls;
    for (uint64_t m : orbit) {
      used[index.at(m)] = 1;
      cls.push_back(detail::mask_to_subgroup(g, m));
    }
    classes.push_back(std::move(cls));
  }
  std::sort(classes.begin(), classes.end(),
            [](const std::vector<Subgroup>& a, const std::vector<Subgroup>& b) {
              if (a[0].size() != b[0].size()) return a[0].size() < b[0].size();
              return a[0].members < b[0].members;
            });
  return classes;
}

// ---------------------------------------------------------------------------
// Isomorphism search: backtracking on images of a generating chain. Each
// candidate extension is rebuilt by closing the product relations and fully
// re-verified, so a returned map is always a genuine isomorphism.

namespace detail {

struct IsoSearch {
  const FiniteGroup& A;
  const FiniteGroup& B;
  std::vector<int> gens;                   // generating chain of A
  std::vector<std::vector<int>> chain;     // members of <g_0..g_i>
  std::vector<Permutation> results;
  bool stop_at_first;
  bool done = false;

  IsoSearch(const FiniteGroup& a, const FiniteGroup& b, bool first)
      : A(a), B(b), stop_at_first(first) {
    gens = generating_set(A);
    std::vector<int> cur{A.identity};
    for (int gi : gens) {
      cur.push_back(gi);
      cur = closure(A, cur).members;
      chain.push_back(cur);
    }
    if (gens.empty()) chain.push_back({A.identity});
  }

  // Extend a partial map defined on the previous chain subgroup to the next
  // one by propagating products; returns false and leaves phi dirty on
  // conflict (caller discards).
  bool extend(std::vector<int>& phi, int level) {
    const auto& u = chain[level];
    // propagate until everything in u is defined
    bool progress = true;
    while (progress) {
      progress = false;
      for (int x : u) {
        if (phi[x] >= 0) continue;
        // try to express x as a product of two defined members
        for (int y : u) {
          if (phi[y] < 0) continue;
          // x = y * z  =>  z = y^{-1} x
          const int z = A.mul(A.inv(y), x);
          if (phi[z] >= 0) {
            phi[x] = B.mul(phi[y], phi[z]);
            progress = true;
            break;
          }
        }
      }
    }
    for (int x : u)
      if (phi[x] < 0) return false;  // not generated as expected
    // full multiplicativity + injectivity on u
    std::vector<char> hit(B.order, 0);
    for (int x : u) {
      if (hit[phi[x]]) return false;
      hit[phi[x]] = 1;
    }
    for (int x : u)
      for (int y : u)
        if (phi[A.mul(x, y)] != B.mul(phi[x], phi[y])) return false;
    return true;
  }

  void rec(std::vector<int>& phi, int level) {
    if (done) return;
    if (level == static_cast<int>(gens.size())) {
      Permutation p{phi};
      results.push_back(std::move(p));
      if (stop_at_first) done = true;
      return;
    }
    const int gi = gens[level];
    const int ord = A.element_order(gi);
    for (int c = 0; c < B.order; ++c) {
      if (B.element_order(c) != ord) continue;
      std::vector<int> next = phi;
      next[gi] = c;
      if (extend(next, level)) rec(next, level + 1);
      if (done) return;
    }
  }

  void run() {
    if (A.order != B.order) return;
    if (A.order_profile() != B.order_profile()) return;
    std::vector<int> phi(A.order, -1);
    phi[A.identity] = B.identity;
    if (gens.empty()) {
      results.push_back(Permutation{phi});
      return;
    }
    rec(phi, 0);
  }
};

}  // namespace detail

// First isomorphism A -> B if one exists (phi[a] = image of a), else nullopt.
inline std::optional<Permutation> find_isomorphism(const FiniteGroup& a,
                                                   const FiniteGroup& b) {
  detail::IsoSearch s(a, b, true);
  s.run();
  if (s.results.empty()) return std::nullopt;
  return s.results.front();
}

inline bool isomorphic(const FiniteGroup& a, const FiniteGroup& b) {
  return find_isomorphism(a, b).has_value();
}

inline std::vector<Permutation> all_isomorphisms(const FiniteGroup& a,
                                                 const FiniteGroup& b) {
  detail::IsoSearch s(a, b, false);
  s.run();
  std::sort(s.results.begin(), s.results.end());
  return s.results;
}

}  // namespace bracoid
