#pragma once

#include <array>
#include <iosfwd>
#include <map>
#include <string>
#include <vector>

#include "eszlab/rational.hpp"

namespace eszlab::exactq {

enum class Var : int { x = 0, y = 1, z = 2 };

constexpr const char* var_name(Var v) {
  switch (v) {
    case Var::x: return "x";
    case Var::y: return "y";
    default: return "z";
  }
}

// Exponent vector (x, y, z).
using Monomial = std::array<int, 3>;

/**
 * Sparse polynomial over Q in the variables {x, y, z}. Canonical: no zero
 * coefficients are stored, so equality is structural (term-map equality).
 */
class Poly {
public:
  Poly() = default;
  Poly(const Rational& c) {
    if (!c.is_zero()) terms_[{0, 0, 0}] = c;
  }
  Poly(long c) : Poly(Rational(c)) {}

  static Poly variable(Var v, int exp = 1);
  static Poly monomial(const Rational& c, const Monomial& m);

  const std::map<Monomial, Rational>& terms() const { return terms_; }
  bool is_zero() const { return terms_.empty(); }

  // Max exponent of v over stored terms; 0 when v is absent.
  int degree_in(Var v) const;
  int total_degree() const;  // -1 for the zero polynomial
  bool depends_on(Var v) const { return degree_in(v) > 0; }
  std::vector<Var> variables() const;

  bool is_constant() const;
  // Constant term (the value when the polynomial is constant).
  Rational constant_value() const;

  Poly operator-() const;
  friend Poly operator+(const Poly& a, const Poly& b);
  friend Poly operator-(const Poly& a, const Poly& b);
  friend Poly operator*(const Poly& a, const Poly& b);
  Poly& operator+=(const Poly& o) { return *this = *this + o; }
  Poly& operator-=(const Poly& o) { return *this = *this - o; }
  Poly& operator*=(const Poly& o) { return *this = *this * o; }
  friend Poly operator*(const Rational& c, const Poly& p);

  friend bool operator==(const Poly& a, const Poly& b) { return a.terms_ == b.terms_; }
  friend bool operator!=(const Poly& a, const Poly& b) { return !(a == b); }

  std::string str() const;

private:
  void add_term(const Monomial& m, const Rational& c);

  std::map<Monomial, Rational> terms_;
};

Poly pow(const Poly& base, unsigned exp);

// Substitutes rationals for a subset of {x,y,z}; ring homomorphism into the
// polynomial ring on the remaining variables.
Poly eval_partial(const Poly& f, const std::map<Var, Rational>& assignments);

// Full evaluation.
Rational eval(const Poly& f, const Rational& x, const Rational& y, const Rational& z);

Poly derivative(const Poly& f, Var v);

// f as a dense coefficient list in v, entries in Q[remaining vars];
// result[i] is the coefficient of v^i, result.size() == degree_in(v)+1.
std::vector<Poly> coefficients_in(const Poly& f, Var v);

// Replaces every variable v by v^2 (used for the rational-radii variant of
// the circle machinery).
Poly substitute_squares(const Poly& f);

/**
 * Dense univariate polynomial over Q. Coefficients are stored lowest power
 * first with a nonzero leading coefficient; the zero polynomial has an empty
 * coefficient list (degree -1).
 */
class UniPoly {
public:
  UniPoly() : var_(Var::x) {}
  explicit UniPoly(Var v) : var_(v) {}
  UniPoly(Var v, std::vector<Rational> coeffs) : var_(v), c_(std::move(coeffs)) { trim(); }

  Var var() const { return var_; }
  const std::vector<Rational>& coeffs() const { return c_; }
  int degree() const { return static_cast<int>(c_.size()) - 1; }
  bool is_zero() const { return c_.empty(); }
  Rational coeff(int i) const {
    return i >= 0 && i < static_cast<int>(c_.size()) ? c_[i] : Rational(0);
  }
  const Rational& leading() const { return c_.back(); }

  Rational operator()(const Rational& t) const;  // Horner

  UniPoly operator-() const;
  friend UniPoly operator+(const UniPoly& a, const UniPoly& b);
  friend UniPoly operator-(const UniPoly& a, const UniPoly& b);
  friend UniPoly operator*(const UniPoly& a, const UniPoly& b);
  friend UniPoly operator*(const Rational& s, const UniPoly& p);
  friend bool operator==(const UniPoly& a, const UniPoly& b) {
    return a.var_ == b.var_ && a.c_ == b.c_;
  }

  UniPoly derivative() const;
  UniPoly monic() const;  // leading coefficient scaled to 1; zero stays zero

  std::string str() const;

private:
  void trim() {
    while (!c_.empty() && c_.back().is_zero()) c_.pop_back();
  }

  Var var_;
  std::vector<Rational> c_;
};

// Conversions. to_unipoly requires f to involve no variable other than v.
UniPoly to_unipoly(const Poly& f, Var v);
Poly to_poly(const UniPoly& f);

std::ostream& operator<<(std::ostream& os, const Poly& p);
std::ostream& operator<<(std::ostream& os, const UniPoly& p);

}  // namespace eszlab::exactq
