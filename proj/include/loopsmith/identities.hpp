#pragma once

// Loop identity checkers with witness extraction. Each tag is a fixed closed
// equation in at most three variables, decided by exhaustive scan.

#include <array>
#include <cstdint>
#include <optional>
#include <string>
#include <vector>

#include "loopsmith/core.hpp"

namespace loopsmith {

enum class IdentityId {
  LcA,          // (xx)(yz) = (x(xy))z
  LcB,          // (x·xy)z = x(x·yz)
  RcA,          // (zy)(xx) = z((yx)x)
  RcB,          // z(yx·x) = (zy·x)x
  C,            // x(y(yz)) = ((xy)y)z
  LeftBol,      // x(y(xz)) = (x(yx))z
  RightBol,     // ((zx)y)x = z((xy)x)
  Moufang,      // (xy)(zx) = (x(yz))x
  Extra,        // x(y(zx)) = ((xy)z)x
  LeftAlt,      // x·xy = (xx)y
  RightAlt,     // yx·x = y(xx)
  Alt,          // both alternative laws
  Flexible,     // x(yx) = (xy)x
  Commutative,  // xy = yx
  Associative,  // (xy)z = x(yz)
};

inline constexpr int kIdentityCount = 15;

inline constexpr std::array<IdentityId, kIdentityCount> all_identities() {
  return {IdentityId::LcA,      IdentityId::LcB,      IdentityId::RcA,
          IdentityId::RcB,      IdentityId::C,        IdentityId::LeftBol,
          IdentityId::RightBol, IdentityId::Moufang,  IdentityId::Extra,
          IdentityId::LeftAlt,  IdentityId::RightAlt, IdentityId::Alt,
          IdentityId::Flexible, IdentityId::Commutative,
          IdentityId::Associative};
}

// Stable lowercase names used by the CLI and filter expressions.
inline const char* identity_name(IdentityId id) {
  switch (id) {
    case IdentityId::LcA: return "lc";
    case IdentityId::LcB: return "lc-b";
    case IdentityId::RcA: return "rc";
    case IdentityId::RcB: return "rc-b";
    case IdentityId::C: return "c";
    case IdentityId::LeftBol: return "left-bol";
    case IdentityId::RightBol: return "right-bol";
    case IdentityId::Moufang: return "moufang";
    case IdentityId::Extra: return "extra";
    case IdentityId::LeftAlt: return "left-alt";
    case IdentityId::RightAlt: return "right-alt";
    case IdentityId::Alt: return "alt";
    case IdentityId::Flexible: return "flexible";
    case IdentityId::Commutative: return "comm";
    case IdentityId::Associative: return "assoc";
  }
  return "?";
}

inline std::optional<IdentityId> identity_from_name(const std::string& s) {
  for (IdentityId id : all_identities())
    if (s == identity_name(id)) return id;
  return std::nullopt;
}

// Number of distinct variables in the tag's equation (Alt counts as 2).
inline int identity_arity(IdentityId id) {
  switch (id) {
    case IdentityId::LeftAlt:
    case IdentityId::RightAlt:
    case IdentityId::Alt:
    case IdentityId::Flexible:
    case IdentityId::Commutative:
      return 2;
    default:
      return 3;
  }
}

// Evaluates the tag's equation at one variable assignment.
inline bool identity_holds_at(const LoopTable& L, IdentityId id, Element x,
                              Element y, Element z) {
  switch (id) {
    case IdentityId::LcA:
      return L.mul(L.mul(x, x), L.mul(y, z)) ==
             L.mul(L.mul(x, L.mul(x, y)), z);
    case IdentityId::LcB:
      return L.mul(L.mul(x, L.mul(x, y)), z) ==
             L.mul(x, L.mul(x, L.mul(y, z)));
    case IdentityId::RcA:
      return L.mul(L.mul(z, y), L.mul(x, x)) ==
             L.mul(z, L.mul(L.mul(y, x), x));
    case IdentityId::RcB:
      return L.mul(z, L.mul(L.mul(y, x), x)) ==
             L.mul(L.mul(L.mul(z, y), x), x);
    case IdentityId::C:
      return L.mul(x, L.mul(y, L.mul(y, z))) ==
             L.mul(L.mul(L.mul(x, y), y), z);
    case IdentityId::LeftBol:
      return L.mul(x, L.mul(y, L.mul(x, z))) ==
             L.mul(L.mul(x, L.mul(y, x)), z);
    case IdentityId::RightBol:
      return L.mul(L.mul(L.mul(z, x), y), x) ==
             L.mul(z, L.mul(L.mul(x, y), x));
    case IdentityId::Moufang:
      return L.mul(L.mul(x, y), L.mul(z, x)) ==
             L.mul(L.mul(x, L.mul(y, z)), x);
    case IdentityId::Extra:
      return L.mul(x, L.mul(y, L.mul(z, x))) ==
             L.mul(L.mul(L.mul(x, y), z), x);
    case IdentityId::LeftAlt:
      return L.mul(x, L.mul(x, y)) == L.mul(L.mul(x, x), y);
    case IdentityId::RightAlt:
      return L.mul(L.mul(y, x), x) == L.mul(y, L.mul(x, x));
    case IdentityId::Alt:
      return identity_holds_at(L, IdentityId::LeftAlt, x, y, z) &&
             identity_holds_at(L, IdentityId::RightAlt, x, y, z);
    case IdentityId::Flexible:
      return L.mul(x, L.mul(y, x)) == L.mul(L.mul(x, y), x);
    case IdentityId::Commutative:
      return L.mul(x, y) == L.mul(y, x);
    case IdentityId::Associative:
      return L.mul(L.mul(x, y), z) == L.mul(x, L.mul(y, z));
  }
  return false;
}

// First violating assignment in lexicographic (x, y, z) order; for
// two-variable laws the reported z is 0 and ignored by the equation.
inline std::optional<std::array<Element, 3>> failing_witness(const LoopTable& L,
                                                             IdentityId id) {
  const int n = L.order();
  const int zmax = identity_arity(id) == 2 ? 1 : n;
  for (int x = 0; x < n; ++x)
    for (int y = 0; y < n; ++y)
      for (int z = 0; z < zmax; ++z)
        if (!identity_holds_at(L, id, x, y, z))
          return std::array<Element, 3>{x, y, z};
  return std::nullopt;
}

inline bool satisfies(const LoopTable& L, IdentityId id) {
  return !failing_witness(L, id).has_value();
}

using IdentityMask = std::uint32_t;

inline IdentityMask identity_bit(IdentityId id) {
  return IdentityMask{1} << static_cast<int>(id);
}

inline bool mask_contains(IdentityMask m, IdentityId id) {
  return (m & identity_bit(id)) != 0;
}

// Fingerprint of every tag the loop satisfies.
inline IdentityMask classify(const LoopTable& L) {
  IdentityMask m = 0;
  for (IdentityId id : all_identities())
    if (satisfies(L, id)) m |= identity_bit(id);
  return m;
}

inline std::vector<IdentityId> mask_to_ids(IdentityMask m) {
  std::vector<IdentityId> v;
  for (IdentityId id : all_identities())
    if (mask_contains(m, id)) v.push_back(id);
  return v;
}

inline std::string mask_to_string(IdentityMask m) {
  std::string s;
  for (IdentityId id : mask_to_ids(m)) {
    if (!s.empty()) s += ",";
    s += identity_name(id);
  }
  return s;
}

inline bool is_central_loop(const LoopTable& L) {
  return satisfies(L, IdentityId::LcA) || satisfies(L, IdentityId::RcA) ||
         satisfies(L, IdentityId::C);
}

}  // namespace loopsmith
