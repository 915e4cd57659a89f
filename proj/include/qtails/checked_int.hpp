#pragma once

#include <compare>
#include <iosfwd>
#include <stdexcept>
#include <string>
#include <string_view>

namespace qtails {

// Thrown when exact arithmetic cannot proceed: 128-bit overflow, or an
// exactness guard firing (for example halving a value that must be even).
// Callers treat it as a hard abort of the computation, never as a
// recoverable condition.
class safety_error : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

// Exact signed 128-bit integer with overflow detection. Every statistic in
// range here stays far below 2^127 at the supported truncation orders, so a
// checked fixed width keeps the arithmetic exact without a bignum
// dependency; an overflow throws safety_error instead of wrapping.
class Int {
 public:
  constexpr Int() = default;
  constexpr Int(long long value) : v_(value) {}  // implicit: literal-friendly

  friend Int operator+(Int a, Int b) {
    __int128 r;
    if (__builtin_add_overflow(a.v_, b.v_, &r)) throw safety_error("Int: overflow in addition");
    return raw(r);
  }
  friend Int operator-(Int a, Int b) {
    __int128 r;
    if (__builtin_sub_overflow(a.v_, b.v_, &r)) throw safety_error("Int: overflow in subtraction");
    return raw(r);
  }
  friend Int operator*(Int a, Int b) {
    // Values below 2^62 in magnitude cannot overflow a 128-bit product.
    constexpr __int128 fast = static_cast<__int128>(1) << 62;
    if (a.v_ > -fast && a.v_ < fast && b.v_ > -fast && b.v_ < fast) return raw(a.v_ * b.v_);
    return raw(mul_checked(a.v_, b.v_));
  }
  Int operator-() const { return Int(0) - *this; }
  Int& operator+=(Int o) { return *this = *this + o; }
  Int& operator-=(Int o) { return *this = *this - o; }
  Int& operator*=(Int o) { return *this = *this * o; }

  friend constexpr bool operator==(Int, Int) = default;
  friend constexpr auto operator<=>(Int a, Int b) { return a.v_ <=> b.v_; }

  bool is_even() const { return (v_ & 1) == 0; }

  // Exact halving. Values that reach this are even by construction (rank and
  // crank moments); an odd one means the computation is wrong, so abort.
  Int half_exact() const {
    if (!is_even()) throw safety_error("Int: half_exact on odd value");
    return raw(v_ / 2);
  }

  std::string str() const;
  static Int from_string(std::string_view text);

 private:
  static constexpr Int raw(__int128 v) {
    Int i;
    i.v_ = v;
    return i;
  }
  static __int128 mul_checked(__int128 a, __int128 b);

  __int128 v_ = 0;
};

std::ostream& operator<<(std::ostream& os, const Int& v);

}  // namespace qtails
