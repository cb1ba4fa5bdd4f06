#pragma once

#include <stdexcept>
#include <string>

namespace bracoid {

inline constexpr int kDefaultOrderCap = 64;
inline constexpr int kDefaultHolCap = 1344;

enum class errc {
  invalid_input,
  not_latin_square,
  no_identity,
  no_inverse,
  not_associative,
  order_cap_exceeded,
  not_a_homomorphism,
  not_an_action,
  not_transitive,
  bracoid_relation_fails,
  gamma_not_automorphism,
  not_a_complement,
  not_a_divisor,
  not_almost_a_brace,
  not_almost_classical,
  stabilizer_mismatch,
  not_regular,
  stab_condition_fails,
  size_mismatch,
};

inline const char* errc_name(errc c) {
  switch (c) {
    case errc::invalid_input: return "invalid-input";
    case errc::not_latin_square: return "not-latin-square";
    case errc::no_identity: return "no-identity";
    case errc::no_inverse: return "no-inverse";
    case errc::not_associative: return "not-associative";
    case errc::order_cap_exceeded: return "order-cap-exceeded";
    case errc::not_a_homomorphism: return "not-a-homomorphism";
    case errc::not_an_action: return "not-an-action";
    case errc::not_transitive: return "not-transitive";
    case errc::bracoid_relation_fails: return "bracoid-relation-fails";
    case errc::gamma_not_automorphism: return "gamma-not-automorphism";
    case errc::not_a_complement: return "not-a-complement";
    case errc::not_a_divisor: return "not-a-divisor";
    case errc::not_almost_a_brace: return "not-almost-a-brace";
    case errc::not_almost_classical: return "not-almost-classical";
    case errc::stabilizer_mismatch: return "stabilizer-mismatch";
    case errc::not_regular: return "not-regular";
    case errc::stab_condition_fails: return "stab-condition-fails";
    case errc::size_mismatch: return "size-mismatch";
  }
  return "unknown";
}

// Witness payloads are rendered as small JSON fragments so the CLI can emit
// machine-readable {code, witness} records without the core depending on a
// JSON library.
struct Error : std::runtime_error {
  errc code;
  std::string witness;  // JSON fragment, e.g. {"triple":[1,2,3]}

  Error(errc c, const std::string& msg, std::string w = "null")
      : std::runtime_error(std::string(errc_name(c)) + ": " + msg),
        code(c),
        witness(std::move(w)) {}
};

inline std::string witness_elems(std::initializer_list<int> xs,
                                 const char* key = "elements") {
  std::string s = "{\"";
  s += key;
  s += "\":[";
  bool first = true;
  for (int x : xs) {
    if (!first) s += ',';
    s += std::to_string(x);
    first = false;
  }
  s += "]}";
  return s;
}

}  // namespace bracoid
