#include "qtails/checked_int.hpp"

#include <ostream>

namespace qtails {

namespace {
using U128 = unsigned __int128;

constexpr U128 kMagnitudeMax = (U128(1) << 127) - 1;  // |INT128_MIN| - 1

U128 magnitude(__int128 v) {
  return v < 0 ? U128(0) - static_cast<U128>(v) : static_cast<U128>(v);
}
}  // namespace

__int128 Int::mul_checked(__int128 a, __int128 b) {
  if (a == 0 || b == 0) return 0;
  const bool negative = (a < 0) != (b < 0);
  const U128 ua = magnitude(a);
  const U128 ub = magnitude(b);
  const U128 limit = negative ? kMagnitudeMax + 1 : kMagnitudeMax;
  if (ua > limit / ub) throw safety_error("Int: overflow in multiplication");
  const U128 m = ua * ub;
  if (!negative) return static_cast<__int128>(m);
  return -static_cast<__int128>(m - 1) - 1;
}

std::string Int::str() const {
  if (v_ == 0) return "0";
  U128 m = magnitude(v_);
  std::string digits;
  while (m != 0) {
    digits.push_back(static_cast<char>('0' + static_cast<int>(m % 10)));
    m /= 10;
  }
  if (v_ < 0) digits.push_back('-');
  return {digits.rbegin(), digits.rend()};
}

Int Int::from_string(std::string_view text) {
  size_t i = 0;
  bool negative = false;
  if (i < text.size() && (text[i] == '+' || text[i] == '-')) {
    negative = text[i] == '-';
    ++i;
  }
  if (i == text.size()) throw std::invalid_argument("Int: empty numeral");
  U128 m = 0;
  const U128 limit = negative ? kMagnitudeMax + 1 : kMagnitudeMax;
  for (; i < text.size(); ++i) {
    const char ch = text[i];
    if (ch < '0' || ch > '9') throw std::invalid_argument("Int: invalid digit in numeral");
    const unsigned digit = static_cast<unsigned>(ch - '0');
    if (m > (limit - digit) / 10) throw safety_error("Int: numeral out of 128-bit range");
    m = m * 10 + digit;
  }
  if (!negative) return raw(static_cast<__int128>(m));
  if (m == 0) return raw(0);
  return raw(-static_cast<__int128>(m - 1) - 1);
}

std::ostream& operator<<(std::ostream& os, const Int& v) { return os << v.str(); }

}  // namespace qtails
