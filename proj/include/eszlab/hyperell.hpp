#pragma once

#include <vector>

#include "eszlab/polyops.hpp"

namespace eszlab::hyperell {

using exactq::Poly;
using exactq::Rational;
using exactq::UniPoly;
using exactq::Var;

/** y^2 = f(x) with deg f >= 5 and f squarefree; genus floor((d-1)/2) >= 2. */
struct HyperellipticCurve {
  UniPoly f;
  int degree = 0;
  int genus = 0;
};

struct CurvePoint {
  Rational x;
  Rational y;
  friend bool operator==(const CurvePoint& a, const CurvePoint& b) {
    return a.x == b.x && a.y == b.y;
  }
  friend bool operator<(const CurvePoint& a, const CurvePoint& b) {
    return a.x != b.x ? a.x < b.x : a.y < b.y;
  }
};

// Validates degree >= 5 and squarefreeness; distinct error codes.
HyperellipticCurve make_curve(const UniPoly& f);

// floor((d-1)/2) for d >= 5.
int genus_of(int d);

// Y^2 = prod_i p(a_i, X): the fibers of p at the tuple entries multiplied
// together, validated as a hyperelliptic curve. Fails exactly when a fiber
// has a repeated root, two fibers share a root, the entries repeat, or the
// total degree stays below 5.
HyperellipticCurve product_curve(const Poly& p, const std::vector<Rational>& a_tuple);

// All affine points with x = u/v in lowest terms, |u| <= height, 1 <= v <=
// height. Output sorted by (x, y) and closed under y -> -y.
std::vector<CurvePoint> search_points(const HyperellipticCurve& curve, long height);

/** Membership test for Y^2 - X^k = m (k >= 5, m != 0). */
struct ShiftedPowerCurve {
  Rational m;
  int k = 0;
  int genus = 0;
  bool contains(const Rational& x, const Rational& y) const;
};

ShiftedPowerCurve shifted_power_curve(const Rational& m, int k);

}  // namespace eszlab::hyperell
