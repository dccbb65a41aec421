#pragma once

#include <gmpxx.h>

#include <compare>
#include <cstdint>
#include <functional>
#include <iosfwd>
#include <optional>
#include <string>

#include "eszlab/error.hpp"

namespace eszlab::exactq {

using BigInt = mpz_class;

/**
 * Exact rational number in canonical form: denominator positive,
 * gcd(|num|, den) = 1, zero stored as 0/1. Equality is structural, so
 * Rationals can be hashed and used as set/map keys by value.
 */
class Rational {
public:
  Rational() : num_(0), den_(1) {}
  Rational(long n) : num_(n), den_(1) {}
  Rational(const BigInt& n) : num_(n), den_(1) {}
  Rational(const BigInt& num, const BigInt& den) : num_(num), den_(den) { canonicalize(); }
  Rational(long num, long den) : num_(num), den_(den) { canonicalize(); }

  const BigInt& num() const { return num_; }
  const BigInt& den() const { return den_; }

  bool is_zero() const { return num_ == 0; }
  bool is_integer() const { return den_ == 1; }
  int sign() const { return sgn(num_); }

  Rational operator-() const { return Rational(raw{}, -num_, den_); }

  friend Rational operator+(const Rational& a, const Rational& b) {
    return Rational(a.num_ * b.den_ + b.num_ * a.den_, a.den_ * b.den_);
  }
  friend Rational operator-(const Rational& a, const Rational& b) {
    return Rational(a.num_ * b.den_ - b.num_ * a.den_, a.den_ * b.den_);
  }
  friend Rational operator*(const Rational& a, const Rational& b) {
    return Rational(a.num_ * b.num_, a.den_ * b.den_);
  }
  friend Rational operator/(const Rational& a, const Rational& b) {
    if (b.num_ == 0) throw Error(errc::division_by_zero, "division by zero");
    return Rational(a.num_ * b.den_, a.den_ * b.num_);
  }

  Rational& operator+=(const Rational& o) { return *this = *this + o; }
  Rational& operator-=(const Rational& o) { return *this = *this - o; }
  Rational& operator*=(const Rational& o) { return *this = *this * o; }
  Rational& operator/=(const Rational& o) { return *this = *this / o; }

  friend bool operator==(const Rational& a, const Rational& b) {
    return a.num_ == b.num_ && a.den_ == b.den_;
  }
  friend bool operator!=(const Rational& a, const Rational& b) { return !(a == b); }
  friend bool operator<(const Rational& a, const Rational& b) {
    return cmp(a.num_ * b.den_, b.num_ * a.den_) < 0;
  }
  friend bool operator>(const Rational& a, const Rational& b) { return b < a; }
  friend bool operator<=(const Rational& a, const Rational& b) { return !(b < a); }
  friend bool operator>=(const Rational& a, const Rational& b) { return !(a < b); }

  Rational abs() const { return num_ < 0 ? -*this : *this; }

  // Exponent may be negative for nonzero values.
  Rational pow(long e) const;

  double to_double() const { return mpq_class(num_, den_).get_d(); }

  // "u/v" with the slash omitted for integers.
  std::string str() const;

  std::size_t hash() const;

private:
  struct raw {};
  Rational(raw, const BigInt& n, const BigInt& d) : num_(n), den_(d) {}
  void canonicalize();

  BigInt num_;
  BigInt den_;
};

// Factory matching the canonicalization contract; throws on zero denominator.
inline Rational rat_make(const BigInt& num, const BigInt& den) { return Rational(num, den); }
inline Rational rat_make(long num, long den) { return Rational(num, den); }

// Exact square root: the nonnegative s with s^2 = r, when r is a square of a
// rational (both reduced parts perfect squares). Negative or non-square input
// yields nullopt.
std::optional<Rational> rational_sqrt(const Rational& r);

// Exact k-th root for k >= 1 (nonnegative result for even k).
std::optional<Rational> rational_kth_root(const Rational& r, unsigned k);

std::ostream& operator<<(std::ostream& os, const Rational& r);

}  // namespace eszlab::exactq

template <>
struct std::hash<eszlab::exactq::Rational> {
  std::size_t operator()(const eszlab::exactq::Rational& r) const { return r.hash(); }
};
