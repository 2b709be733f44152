#pragma once

#include <boost/multiprecision/gmp.hpp>

#include <compare>
#include <cstdint>
#include <string>
#include <string_view>

namespace pfc {

using Rational = boost::multiprecision::number<boost::multiprecision::gmp_rational,
                                               boost::multiprecision::et_off>;
using BigInt = boost::multiprecision::number<boost::multiprecision::gmp_int,
                                             boost::multiprecision::et_off>;

/// "a/b", or "a" when the denominator is 1.
std::string to_string(const Rational& r);

/// Accepts "a", "-a" or "a/b". Throws std::invalid_argument.
Rational parse_rational(std::string_view text);

/// Element of (1/2)Z stored as twice its value.
class HalfInt {
 public:
  constexpr HalfInt() = default;
  static constexpr HalfInt from_doubled(std::int64_t d) { return HalfInt(d); }
  static constexpr HalfInt from_int(std::int64_t v) { return HalfInt(2 * v); }

  constexpr std::int64_t doubled() const { return doubled_; }
  constexpr bool is_integer() const { return doubled_ % 2 == 0; }
  /// Throws std::domain_error when the value is not an integer.
  std::int64_t as_int() const;

  friend constexpr HalfInt operator+(HalfInt a, HalfInt b) { return HalfInt(a.doubled_ + b.doubled_); }
  friend constexpr HalfInt operator-(HalfInt a, HalfInt b) { return HalfInt(a.doubled_ - b.doubled_); }
  friend constexpr HalfInt operator-(HalfInt a) { return HalfInt(-a.doubled_); }
  friend constexpr bool operator==(HalfInt, HalfInt) = default;
  friend constexpr auto operator<=>(HalfInt, HalfInt) = default;

 private:
  constexpr explicit HalfInt(std::int64_t d) : doubled_(d) {}
  std::int64_t doubled_ = 0;
};

std::string to_string(HalfInt h);

}  // namespace pfc
