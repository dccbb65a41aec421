#include "eszlab/hyperell.hpp"

#include <algorithm>
#include <cstdlib>
#include <numeric>

namespace eszlab::hyperell {

using exactq::coefficients_in;
using exactq::eval;
using exactq::is_squarefree;
using exactq::rational_sqrt;

HyperellipticCurve make_curve(const UniPoly& f) {
  if (f.degree() < 5)
    throw Error(errc::degree, "hyperelliptic curve needs deg f >= 5, got " +
                                  std::to_string(f.degree()));
  if (!is_squarefree(f))
    throw Error(errc::not_squarefree, "f has a repeated root");
  return HyperellipticCurve{f, f.degree(), genus_of(f.degree())};
}

int genus_of(int d) {
  if (d < 5) throw Error(errc::degree, "genus formula applies for d >= 5");
  return (d - 1) / 2;
}

HyperellipticCurve product_curve(const Poly& p, const std::vector<Rational>& a_tuple) {
  if (p.degree_in(Var::y) < 1)
    throw Error(errc::degree, "p must have positive degree in y");
  for (std::size_t i = 0; i < a_tuple.size(); ++i)
    for (std::size_t j = i + 1; j < a_tuple.size(); ++j)
      if (a_tuple[i] == a_tuple[j])
        throw Error(errc::invalid_argument,
                    "tuple entries must be distinct (repeated fiber gives a repeated root)");
  const auto y_coeffs = coefficients_in(p, Var::y);
  UniPoly prod(Var::x, {Rational(1)});
  for (const auto& a : a_tuple) {
    std::vector<Rational> cs;
    cs.reserve(y_coeffs.size());
    for (const auto& c : y_coeffs) cs.push_back(eval(c, a, Rational(0), Rational(0)));
    // The fiber variable plays the curve's X role.
    prod = prod * UniPoly(Var::x, std::move(cs));
  }
  if (prod.is_zero())
    throw Error(errc::not_squarefree, "a fiber vanished identically");
  return make_curve(prod);
}

std::vector<CurvePoint> search_points(const HyperellipticCurve& curve, long height) {
  if (height < 1) throw Error(errc::invalid_argument, "height must be >= 1");
  std::vector<CurvePoint> points;
  for (long v = 1; v <= height; ++v) {
    for (long u = -height; u <= height; ++u) {
      if (std::gcd(std::abs(u), v) != 1) continue;  // lowest terms only
      const Rational x(u, v);
      const Rational fx = curve.f(x);
      if (auto y = rational_sqrt(fx)) {
        points.push_back({x, *y});
        if (!y->is_zero()) points.push_back({x, -*y});
      }
    }
  }
  std::sort(points.begin(), points.end());
  return points;
}

bool ShiftedPowerCurve::contains(const Rational& x, const Rational& y) const {
  return y * y - x.pow(k) == m;
}

ShiftedPowerCurve shifted_power_curve(const Rational& m, int k) {
  if (k < 5) throw Error(errc::degree, "shifted power curve needs k >= 5");
  if (m.is_zero()) throw Error(errc::invalid_argument, "shift m must be nonzero");
  return ShiftedPowerCurve{m, k, (k - 1) / 2};
}

}  // namespace eszlab::hyperell
