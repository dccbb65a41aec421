#pragma once

#include <optional>
#include <utility>
#include <vector>

#include "eszlab/eszcount.hpp"

namespace eszlab::circlegeom {

using eszcount::Decomposition;
using eszcount::RatSet;
using exactq::Poly;
using exactq::Rational;
using exactq::UniPoly;
using exactq::Var;

struct RationalPoint {
  Rational u, v;
  friend bool operator==(const RationalPoint& a, const RationalPoint& b) {
    return a.u == b.u && a.v == b.v;
  }
  friend bool operator<(const RationalPoint& a, const RationalPoint& b) {
    return a.u != b.u ? a.u < b.u : a.v < b.v;
  }
};

/** Concentric circles: one center, finitely many positive squared radii. */
struct CircleFamily {
  RationalPoint center;
  RatSet radii_sq;
};

CircleFamily make_family(RationalPoint center, std::vector<Rational> radii_sq);

/**
 * Image of the three centers under the rational affine map sending p1 to the
 * origin and p2 to (1, a): (u, v) -> ((u-u1)/(u2-u1), (v-v1)/(u2-u1)),
 * coordinates swapped first when u2 = u1. The scale 1/(u2-u1) is signed; a
 * negative scale composes the dilation |scale| with a half-turn, which leaves
 * all distances untouched. Squared radii transform by scale^2.
 */
struct NormalizedConfig {
  Rational a, b, c;
  bool swapped = false;
  RationalPoint translation;  // added before scaling
  Rational scale;
  Rational dilation() const { return scale.abs(); }
  RationalPoint apply(const RationalPoint& p) const;
};

NormalizedConfig normalize_configuration(const RationalPoint& p1, const RationalPoint& p2,
                                         const RationalPoint& p3);

/**
 * The polynomial whose zeros on R1^2 x R2^2 x R3^2 are the triple points,
 * derived by eliminating the point coordinates from the squared-distance
 * system with resultants. f has z^2-coefficient a^2+1; g = f/(a^2+1) is
 * monic in z and decomposes as g = q^2 - p with deg_y(p) = 2.
 */
struct CirclePolynomials {
  Poly f, g, q, p;
  Decomposition dec;  // validated decomposition of g
};

CirclePolynomials circle_es_polynomial(const NormalizedConfig& cfg);

// The rational-radii variant: every variable is replaced by its square, so
// the zeros are taken on R1 x R2 x R3 and deg_y(p) becomes 4 (s = 2).
CirclePolynomials circle_es_polynomial_sqrt(const NormalizedConfig& cfg);

struct FiberReport {
  Rational discriminant;  // of the fiber cleared to a monic quadratic
  bool repeated_root = false;
  bool real_roots = false;
  // Present when the fiber splits over Q.
  std::optional<std::pair<Rational, Rational>> roots;
};

FiberReport p_fiber_analysis(const NormalizedConfig& cfg, const Rational& x);

// Exact count of radius triples whose three circles share a real point.
long long triple_points_geometric(const CircleFamily& f1, const CircleFamily& f2,
                                  const CircleFamily& f3);

// The same count through the eliminated polynomial on the normalized grid of
// squared radii. With rational_radii set, every squared radius must be a
// rational square and the count runs through the squared-variable polynomial
// on the radius grid instead.
long long triple_points_algebraic(const CircleFamily& f1, const CircleFamily& f2,
                                  const CircleFamily& f3, bool rational_radii = false);

struct PinnedDistances {
  RatSet d1_sq, d2_sq;
  double ratio = 0;  // max(|D1|, |D2|) / |P|^(3/5)
};

PinnedDistances pinned_distance_sets(const std::vector<RationalPoint>& points,
                                     const RationalPoint& p1, const RationalPoint& p2);

// Points with both coordinates rational lying on one circle of each family,
// sorted by (u, v).
std::vector<RationalPoint> rational_intersections(const CircleFamily& f1,
                                                  const CircleFamily& f2);

}  // namespace eszlab::circlegeom
