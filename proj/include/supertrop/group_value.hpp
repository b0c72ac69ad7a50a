#pragma once

// Exact rational element of the ordered group (Q, +, 0, <=).
//
// Values are kept as int64 numerator/denominator in lowest terms with a
// positive denominator. Intermediate arithmetic runs in 128 bits; any result
// that does not fit back into 64 bits throws std::overflow_error instead of
// wrapping.

#include <compare>
#include <cstdint>
#include <cstdlib>
#include <numeric>
#include <stdexcept>
#include <string>
#include <string_view>

namespace supertrop {

class GroupValue {
public:
  constexpr GroupValue() = default;
  constexpr GroupValue(std::int64_t value) : num_(value) {} // NOLINT(implicit)

  GroupValue(std::int64_t num, std::int64_t den) {
    if (den == 0)
      throw std::domain_error("GroupValue: zero denominator");
    *this = normalized(num, den);
  }

  constexpr std::int64_t num() const { return num_; }
  constexpr std::int64_t den() const { return den_; }
  constexpr bool is_integer() const { return den_ == 1; }

  friend GroupValue operator+(const GroupValue &a, const GroupValue &b) {
    if (a.den_ == 1 && b.den_ == 1)
      return GroupValue(checked_add(a.num_, b.num_));
    __int128 n = static_cast<__int128>(a.num_) * b.den_ +
                 static_cast<__int128>(b.num_) * a.den_;
    __int128 d = static_cast<__int128>(a.den_) * b.den_;
    return normalized(n, d);
  }

  friend GroupValue operator-(const GroupValue &a) {
    if (a.num_ == INT64_MIN)
      throw std::overflow_error("GroupValue: negation overflow");
    GroupValue r;
    r.num_ = -a.num_;
    r.den_ = a.den_;
    return r;
  }

  friend GroupValue operator-(const GroupValue &a, const GroupValue &b) {
    return a + (-b);
  }

  GroupValue &operator+=(const GroupValue &o) { return *this = *this + o; }
  GroupValue &operator-=(const GroupValue &o) { return *this = *this - o; }

  /// Repeated group operation: `times` copies of `a` (negative means inverse).
  friend GroupValue scale(const GroupValue &a, std::int64_t times) {
    __int128 n = static_cast<__int128>(a.num_) * times;
    return normalized(n, a.den_);
  }

  friend bool operator==(const GroupValue &, const GroupValue &) = default;

  friend std::strong_ordering operator<=>(const GroupValue &a,
                                          const GroupValue &b) {
    if (a.den_ == b.den_)
      return a.num_ <=> b.num_;
    __int128 l = static_cast<__int128>(a.num_) * b.den_;
    __int128 r = static_cast<__int128>(b.num_) * a.den_;
    return l <=> r;
  }

  /// "p" or "p/q" in lowest terms.
  std::string to_string() const {
    std::string s = std::to_string(num_);
    if (den_ != 1) {
      s += '/';
      s += std::to_string(den_);
    }
    return s;
  }

  /// Parses the canonical text form only: an optional '-', digits without
  /// leading zeros, and an optional "/q" with q > 1 coprime to p. "-0" is
  /// rejected. Returns false on any deviation.
  static bool parse(std::string_view text, GroupValue &out) {
    auto slash = text.find('/');
    std::int64_t n = 0, d = 1;
    if (!parse_int(text.substr(0, slash), n, true))
      return false;
    if (slash != std::string_view::npos) {
      if (!parse_int(text.substr(slash + 1), d, false) || d <= 1)
        return false;
      if (std::gcd(n < 0 ? -n : n, d) != 1)
        return false;
    }
    out = GroupValue(n, d);
    return true;
  }

private:
  std::int64_t num_ = 0;
  std::int64_t den_ = 1;

  static std::int64_t checked_add(std::int64_t a, std::int64_t b) {
    std::int64_t r;
    if (__builtin_add_overflow(a, b, &r))
      throw std::overflow_error("GroupValue: addition overflow");
    return r;
  }

  static __int128 gcd128(__int128 a, __int128 b) {
    if (a < 0)
      a = -a;
    if (b < 0)
      b = -b;
    while (b != 0) {
      __int128 t = a % b;
      a = b;
      b = t;
    }
    return a;
  }

  static GroupValue normalized(__int128 n, __int128 d) {
    if (d < 0) {
      n = -n;
      d = -d;
    }
    __int128 g = gcd128(n, d);
    if (g > 1) {
      n /= g;
      d /= g;
    }
    if (n > INT64_MAX || n < -INT64_MAX || d > INT64_MAX)
      throw std::overflow_error("GroupValue: result out of 64-bit range");
    GroupValue r;
    r.num_ = static_cast<std::int64_t>(n);
    r.den_ = static_cast<std::int64_t>(d);
    return r;
  }

  static bool parse_int(std::string_view s, std::int64_t &out,
                        bool allow_sign) {
    bool neg = false;
    if (allow_sign && !s.empty() && s.front() == '-') {
      neg = true;
      s.remove_prefix(1);
    }
    if (s.empty() || s.size() > 18)
      return false;
    if (s.size() > 1 && s.front() == '0')
      return false;
    std::int64_t v = 0;
    for (char c : s) {
      if (c < '0' || c > '9')
        return false;
      v = v * 10 + (c - '0');
    }
    if (neg && v == 0)
      return false;
    out = neg ? -v : v;
    return true;
  }
};

} // namespace supertrop
