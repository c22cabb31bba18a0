#pragma once

// Exact rational numbers for rod positions, lengths and readings.
//
// Always stored reduced with a positive denominator; the sign lives on the
// numerator and zero is 0/1. Integers are arbitrary precision (GMP), since
// greedy unit-fraction denominators grow doubly exponentially.

#include <compare>
#include <cstdint>
#include <functional>
#include <ostream>
#include <string>
#include <string_view>

#include <gmpxx.h>

namespace cubit {

using BigInt = mpz_class;

class Rational {
 public:
  Rational() = default;
  Rational(long n) : q_(n) {}  // NOLINT(google-explicit-constructor)
  Rational(int n) : q_(static_cast<long>(n)) {}  // NOLINT
  Rational(const BigInt& n) : q_(n) {}  // NOLINT
  Rational(const BigInt& num, const BigInt& den);
  Rational(long num, long den) : Rational(BigInt(num), BigInt(den)) {}

  static Rational from_mpq(mpq_class q) {
    Rational r;
    r.q_ = std::move(q);
    r.q_.canonicalize();
    return r;
  }

  BigInt numerator() const { return q_.get_num(); }
  BigInt denominator() const { return q_.get_den(); }
  const mpq_class& mpq() const { return q_; }

  int sign() const { return sgn(q_); }
  bool is_zero() const { return sign() == 0; }
  bool is_integer() const { return q_.get_den() == 1; }

  // Largest integer <= value.
  BigInt floor() const;
  // value - floor(value), always in [0, 1).
  Rational fractional_part() const;

  Rational abs() const { return from_mpq(::abs(q_)); }

  Rational& operator+=(const Rational& o) { q_ += o.q_; return *this; }
  Rational& operator-=(const Rational& o) { q_ -= o.q_; return *this; }
  Rational& operator*=(const Rational& o) { q_ *= o.q_; return *this; }
  Rational& operator/=(const Rational& o);

  friend Rational operator+(Rational a, const Rational& b) { return a += b; }
  friend Rational operator-(Rational a, const Rational& b) { return a -= b; }
  friend Rational operator*(Rational a, const Rational& b) { return a *= b; }
  friend Rational operator/(Rational a, const Rational& b) { return a /= b; }
  friend Rational operator-(const Rational& a) { return from_mpq(-a.q_); }

  friend bool operator==(const Rational& a, const Rational& b) {
    return a.q_ == b.q_;
  }
  friend std::strong_ordering operator<=>(const Rational& a,
                                          const Rational& b) {
    const int c = cmp(a.q_, b.q_);
    return c < 0 ? std::strong_ordering::less
                 : (c > 0 ? std::strong_ordering::greater
                          : std::strong_ordering::equal);
  }

  // Debug form "p/q"; use the codecs in text.hpp for user-facing output.
  friend std::ostream& operator<<(std::ostream& os, const Rational& r);

  std::size_t hash() const;

 private:
  mpq_class q_{0};
};

inline Rational abs(const Rational& r) { return r.abs(); }

}  // namespace cubit

template <>
struct std::hash<cubit::Rational> {
  std::size_t operator()(const cubit::Rational& r) const { return r.hash(); }
};
