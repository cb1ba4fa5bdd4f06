#pragma once

#include <string>
#include <vector>

#include <json.hpp>

#include "bracoid/bracoid.hpp"
#include "bracoid/holomorph_bridge.hpp"
#include "bracoid/ybe.hpp"

namespace bracoid {

using json = nlohmann::json;

// Canonical serialisation: nlohmann's object keys are sorted, dump(2) is
// deterministic, so identical inputs produce byte-identical output.
inline std::string canonical_dump(const json& j) { return j.dump(2) + "\n"; }

inline json group_to_json(const FiniteGroup& g) {
  json j;
  j["order"] = g.order;
  j["table"] = g.table;
  if (!g.labels.empty()) j["labels"] = g.labels;
  return j;
}

inline FiniteGroup group_from_json(const json& j) {
  if (!j.is_object() || !j.contains("table"))
    throw Error(errc::invalid_input, "group JSON needs a table");
  std::vector<std::vector<int>> table =
      j.at("table").get<std::vector<std::vector<int>>>();
  std::vector<std::string> labels;
  if (j.contains("labels")) labels = j.at("labels").get<std::vector<std::string>>();
  if (j.contains("order") &&
      j.at("order").get<int>() != static_cast<int>(table.size()))
    throw Error(errc::invalid_input, "declared order does not match the table");
  return from_cayley_table(std::move(table), std::move(labels));
}

inline json bracoid_to_json(const SkewBracoid& b, json provenance = nullptr) {
  json j;
  j["multiplicative"] = group_to_json(b.mult);
  j["additive"] = group_to_json(b.add);
  j["action"] = b.action.table;
  if (!provenance.is_null()) j["provenance"] = std::move(provenance);
  return j;
}

inline SkewBracoid bracoid_from_json(const json& j) {
  if (!j.is_object() || !j.contains("multiplicative") || !j.contains("additive") ||
      !j.contains("action"))
    throw Error(errc::invalid_input,
                "bracoid JSON needs multiplicative, additive and action");
  GroupAction a;
  a.table = j.at("action").get<std::vector<std::vector<int>>>();
  return validate_bracoid(group_from_json(j.at("multiplicative")),
                          group_from_json(j.at("additive")), std::move(a));
}

inline json classification_to_json(const Classification& c) {
  json j;
  j["stabilizer"] = c.stabilizer.members;
  j["contains_brace"] = json::array();
  for (const auto& r : c.contains_brace) {
    json e;
    e["members"] = r.h.members;
    e["normal"] = r.normal;
    e["trivial_brace"] = r.trivial_brace;
    e["isomorphic_to_additive"] = r.isomorphic_to_additive;
    j["contains_brace"].push_back(std::move(e));
  }
  j["almost_brace"] = json::array();
  for (const auto& h : c.almost_brace()) j["almost_brace"].push_back(h.members);
  j["almost_classical"] = json::array();
  for (const auto& h : c.almost_classical())
    j["almost_classical"].push_back(h.members);
  j["essentially_brace"] = c.essentially_brace;
  j["essentially_trivial"] = c.essentially_trivial;
  return j;
}

inline json solution_to_json(const SolutionTable& s) {
  json j;
  j["size"] = s.size;
  j["labels"] = s.labels;
  json rows = json::array();
  for (const auto& row : s.r) {
    json jr = json::array();
    for (const auto& [u, v] : row) jr.push_back(json::array({u, v}));
    rows.push_back(std::move(jr));
  }
  j["r"] = std::move(rows);
  j["flags"] = {{"braid_verified", s.braid_verified},
                {"left_nondegenerate", s.left_nondegenerate},
                {"right_nondegenerate", s.right_nondegenerate}};
  return j;
}

inline SolutionTable solution_from_json(const json& j) {
  if (!j.is_object() || !j.contains("size") || !j.contains("r"))
    throw Error(errc::invalid_input, "solution JSON needs size and r");
  SolutionTable s;
  s.size = j.at("size").get<int>();
  if (j.contains("labels"))
    s.labels = j.at("labels").get<std::vector<std::string>>();
  const auto& rows = j.at("r");
  if (static_cast<int>(rows.size()) != s.size)
    throw Error(errc::invalid_input, "r table has wrong number of rows");
  s.r.assign(s.size, std::vector<std::pair<int, int>>(s.size));
  s.sigma.assign(s.size, std::vector<int>(s.size));
  s.tau.assign(s.size, std::vector<int>(s.size));
  for (int x = 0; x < s.size; ++x) {
    if (static_cast<int>(rows[x].size()) != s.size)
      throw Error(errc::invalid_input, "r row has wrong length");
    for (int y = 0; y < s.size; ++y) {
      const auto& cell = rows[x][y];
      if (!cell.is_array() || cell.size() != 2)
        throw Error(errc::invalid_input, "r entries must be pairs");
      const int u = cell[0].get<int>(), v = cell[1].get<int>();
      if (u < 0 || u >= s.size || v < 0 || v >= s.size)
        throw Error(errc::invalid_input, "r entry out of range",
                    witness_elems({x, y}, "cell"));
      s.r[x][y] = {u, v};
      s.sigma[x][y] = u;
      s.tau[y][x] = v;
    }
  }
  s.braid_verified = verify_braid(s).ok;
  auto [l, r] = degeneracy(s);
  s.left_nondegenerate = l;
  s.right_nondegenerate = r;
  return s;
}

inline json invariants_to_json(const SolutionInvariants& i) {
  json j;
  j["size"] = i.size;
  j["r_bijective"] = i.r_bijective;
  if (i.r_bijective) j["r_cycle_type"] = i.r_cycle_type;
  j["r_fixed_pairs"] = i.r_fixed_pairs;
  j["diagonal_fixed"] = i.diagonal_fixed;
  j["sigma_image_sizes"] = i.sigma_image_sizes;
  j["tau_image_sizes"] = i.tau_image_sizes;
  j["sigma_bijective"] = i.sigma_bijective;
  j["tau_bijective"] = i.tau_bijective;
  return j;
}

inline json error_to_json(const Error& e) {
  json j;
  j["code"] = errc_name(e.code);
  j["message"] = e.what();
  j["witness"] = json::parse(e.witness, nullptr, false);
  if (j["witness"].is_discarded()) j["witness"] = nullptr;
  return j;
}

inline json embedding_pair_to_json(const EmbeddingPair& p) {
  json j;
  j["X_size"] = p.xspace.size();
  json alpha = json::array(), beta = json::array();
  for (const auto& perm : p.alpha) alpha.push_back(perm.images);
  for (const auto& perm : p.beta) beta.push_back(perm.images);
  j["maps"] = {{"alpha", std::move(alpha)},
               {"beta", std::move(beta)},
               {"a", p.a},
               {"b", p.b}};
  j["checks"] = {{"galois_closure", p.galois_closure}};
  return j;
}

}  // namespace bracoid
