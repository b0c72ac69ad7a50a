#pragma once

// The supertropical semifield S = G(0) u G(1) u {eps} over G = (Q, +, <=).
//
//   eps (+) s = s              eps (.) s = eps
//   a(i) (+) b(j) = b(j)       for a < b
//   b(i) (+) b(j) = b(0)
//   a(i) (.) b(j) = (a+b)(ij)
//
// Tag 1 is tangible, tag 0 is ghost. Text encoding: "e" for eps, otherwise a
// canonical rational followed by 't' or 'g' ("3t", "-1/2g").

#include <cstdint>
#include <optional>
#include <ostream>
#include <stdexcept>
#include <string>
#include <string_view>

#include "supertrop/errors.hpp"
#include "supertrop/group_value.hpp"

namespace supertrop {

class Scalar {
public:
  enum class Kind : std::uint8_t { Eps, Ghost, Tangible };

  constexpr Scalar() = default; // eps

  static constexpr Scalar eps() { return Scalar(); }
  static Scalar tangible(GroupValue g) { return Scalar(Kind::Tangible, g); }
  static Scalar ghost(GroupValue g) { return Scalar(Kind::Ghost, g); }
  /// The multiplicative unit 0(1).
  static Scalar one() { return tangible(0); }

  constexpr Kind kind() const { return kind_; }
  constexpr bool is_eps() const { return kind_ == Kind::Eps; }
  constexpr bool is_ghost() const { return kind_ == Kind::Ghost; }
  constexpr bool is_tangible() const { return kind_ == Kind::Tangible; }

  /// Group value of a non-eps element. Precondition: !is_eps().
  const GroupValue &value() const { return value_; }

  friend bool operator==(const Scalar &a, const Scalar &b) {
    return a.kind_ == b.kind_ && (a.is_eps() || a.value_ == b.value_);
  }

  std::string to_string() const {
    switch (kind_) {
    case Kind::Eps:
      return "e";
    case Kind::Ghost:
      return value_.to_string() + 'g';
    case Kind::Tangible:
      return value_.to_string() + 't';
    }
    return {};
  }

  static Scalar parse(std::string_view text) {
    if (text == "e")
      return eps();
    if (text.size() >= 2) {
      char tag = text.back();
      GroupValue g;
      if ((tag == 't' || tag == 'g') &&
          GroupValue::parse(text.substr(0, text.size() - 1), g))
        return tag == 't' ? tangible(g) : ghost(g);
    }
    throw ParseError("invalid scalar token '" + std::string(text) + "'");
  }

private:
  Scalar(Kind k, GroupValue g) : kind_(k), value_(g) {}

  Kind kind_ = Kind::Eps;
  GroupValue value_{};
};

inline std::ostream &operator<<(std::ostream &os, const Scalar &s) {
  return os << s.to_string();
}

/// Supertropical sum.
inline Scalar add(const Scalar &a, const Scalar &b) {
  if (a.is_eps())
    return b;
  if (b.is_eps())
    return a;
  auto c = a.value() <=> b.value();
  if (c > 0)
    return a;
  if (c < 0)
    return b;
  return Scalar::ghost(a.value());
}

/// Supertropical product.
inline Scalar mul(const Scalar &a, const Scalar &b) {
  if (a.is_eps() || b.is_eps())
    return Scalar::eps();
  GroupValue v = a.value() + b.value();
  if (a.is_tangible() && b.is_tangible())
    return Scalar::tangible(v);
  return Scalar::ghost(v);
}

inline Scalar operator+(const Scalar &a, const Scalar &b) { return add(a, b); }
inline Scalar operator*(const Scalar &a, const Scalar &b) { return mul(a, b); }
inline Scalar &operator+=(Scalar &a, const Scalar &b) { return a = add(a, b); }
inline Scalar &operator*=(Scalar &a, const Scalar &b) { return a = mul(a, b); }

/// k-th supertropical power. Negative powers exist only for tangibles;
/// pow(a, 0) is the unit for every a except eps.
inline Scalar pow(const Scalar &a, std::int64_t k) {
  if (a.is_eps()) {
    if (k <= 0)
      throw NotInvertible("pow: eps has no power of exponent <= 0");
    return a;
  }
  if (k == 0)
    return Scalar::one();
  if (k < 0 && !a.is_tangible())
    throw NotInvertible("pow: ghost " + a.to_string() +
                        " has no multiplicative inverse");
  GroupValue v = scale(a.value(), k);
  return a.is_tangible() ? Scalar::tangible(v) : Scalar::ghost(v);
}

/// Tag-forgetting map; nullopt stands for eps.
inline std::optional<GroupValue> nu(const Scalar &a) {
  if (a.is_eps())
    return std::nullopt;
  return a.value();
}

inline bool nu_equiv(const Scalar &a, const Scalar &b) { return nu(a) == nu(b); }

/// c |= d  iff  c = d (+) g for some g in {eps} u G(0).
inline bool ghost_surpasses(const Scalar &c, const Scalar &d) {
  if (c == d)
    return true;
  if (!c.is_ghost())
    return false;
  return d.is_eps() || c.value() >= d.value();
}

} // namespace supertrop
