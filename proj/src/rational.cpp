#include "pfc/rational.hpp"

#include <stdexcept>

namespace pfc {

std::string to_string(const Rational& r) {
  return r.str();
}

Rational parse_rational(std::string_view text) {
  std::string s(text);
  auto bad = [&] { return std::invalid_argument("not a rational number: '" + s + "'"); };
  if (s.empty()) throw bad();
  auto slash = s.find('/');
  auto check_int = [&](const std::string& part) {
    std::size_t i = (!part.empty() && (part[0] == '-' || part[0] == '+')) ? 1 : 0;
    if (i == part.size()) throw bad();
    for (; i < part.size(); ++i)
      if (part[i] < '0' || part[i] > '9') throw bad();
  };
  if (slash == std::string::npos) {
    check_int(s);
    return Rational(BigInt(s));
  }
  std::string num = s.substr(0, slash), den = s.substr(slash + 1);
  check_int(num);
  check_int(den);
  BigInt d(den);
  if (d == 0) throw bad();
  return Rational(BigInt(num), d);
}

std::int64_t HalfInt::as_int() const {
  if (!is_integer()) throw std::domain_error("half-integer has no integer value");
  return doubled_ / 2;
}

std::string to_string(HalfInt h) {
  if (h.is_integer()) return std::to_string(h.doubled() / 2);
  return std::to_string(h.doubled()) + "/2";
}

}  // namespace pfc
