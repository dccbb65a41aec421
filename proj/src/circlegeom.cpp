#include "eszlab/circlegeom.hpp"

#include <algorithm>
#include <cmath>
#include <map>

#include "eszlab/polyops.hpp"

namespace eszlab::circlegeom {

using exactq::coefficients_in;
using exactq::discriminant_uni;
using exactq::eval_partial;
using exactq::gcd_uni;
using exactq::rational_sqrt;
using exactq::to_unipoly;

CircleFamily make_family(RationalPoint center, std::vector<Rational> radii_sq) {
  for (const auto& r : radii_sq)
    if (r.sign() <= 0)
      throw Error(errc::invalid_argument, "squared radii must be positive");
  return CircleFamily{std::move(center), RatSet(std::move(radii_sq))};
}

RationalPoint NormalizedConfig::apply(const RationalPoint& p) const {
  RationalPoint q = swapped ? RationalPoint{p.v, p.u} : p;
  return {(q.u + translation.u) * scale, (q.v + translation.v) * scale};
}

NormalizedConfig normalize_configuration(const RationalPoint& p1, const RationalPoint& p2,
                                         const RationalPoint& p3) {
  if (p1 == p2 || p1 == p3 || p2 == p3)
    throw Error(errc::coincident_points, "centers must be pairwise distinct");
  NormalizedConfig cfg;
  RationalPoint q1 = p1, q2 = p2, q3 = p3;
  if (q1.u == q2.u) {
    cfg.swapped = true;
    std::swap(q1.u, q1.v);
    std::swap(q2.u, q2.v);
    std::swap(q3.u, q3.v);
  }
  cfg.translation = {-q1.u, -q1.v};
  cfg.scale = Rational(1) / (q2.u - q1.u);
  cfg.a = (q2.v - q1.v) * cfg.scale;
  cfg.b = (q3.u - q1.u) * cfg.scale;
  cfg.c = (q3.v - q1.v) * cfg.scale;
  if (cfg.a * cfg.b == cfg.c)
    throw Error(errc::collinear, "centers are collinear");
  return cfg;
}

namespace {

// Polynomials in the point coordinates (u, v) with coefficients in Q[x,y,z];
// just enough ring structure to run the two resultant eliminations.
struct BiPoly {
  std::map<std::pair<int, int>, Poly> terms;

  static BiPoly from(const Poly& p) {
    BiPoly r;
    if (!p.is_zero()) r.terms[{0, 0}] = p;
    return r;
  }
  static BiPoly uv(int du, int dv, const Poly& p) {
    BiPoly r;
    if (!p.is_zero()) r.terms[{du, dv}] = p;
    return r;
  }

  void add_term(const std::pair<int, int>& m, const Poly& p) {
    if (p.is_zero()) return;
    auto it = terms.find(m);
    if (it == terms.end()) {
      terms[m] = p;
      return;
    }
    it->second += p;
    if (it->second.is_zero()) terms.erase(it);
  }

  friend BiPoly operator+(const BiPoly& a, const BiPoly& b) {
    BiPoly r = a;
    for (const auto& [m, p] : b.terms) r.add_term(m, p);
    return r;
  }
  friend BiPoly operator-(const BiPoly& a, const BiPoly& b) {
    BiPoly r = a;
    for (const auto& [m, p] : b.terms) r.add_term(m, -p);
    return r;
  }
  friend BiPoly operator*(const BiPoly& a, const BiPoly& b) {
    BiPoly r;
    for (const auto& [ma, pa] : a.terms)
      for (const auto& [mb, pb] : b.terms)
        r.add_term({ma.first + mb.first, ma.second + mb.second}, pa * pb);
    return r;
  }

  bool is_zero() const { return terms.empty(); }

  int deg(int which) const {  // 0 = u, 1 = v
    int d = 0;
    for (const auto& [m, p] : terms) d = std::max(d, which == 0 ? m.first : m.second);
    return d;
  }

  std::vector<BiPoly> coeffs(int which) const {
    std::vector<BiPoly> out(static_cast<std::size_t>(deg(which)) + 1);
    for (const auto& [m, p] : terms) {
      auto rest = m;
      const int e = which == 0 ? m.first : m.second;
      (which == 0 ? rest.first : rest.second) = 0;
      out[static_cast<std::size_t>(e)].add_term(rest, p);
    }
    return out;
  }

  const Poly& constant() const {
    static const Poly zero;
    auto it = terms.find({0, 0});
    return it == terms.end() ? zero : it->second;
  }
};

BiPoly det(const std::vector<std::vector<BiPoly>>& m) {
  const std::size_t n = m.size();
  if (n == 1) return m[0][0];
  BiPoly acc;
  int sign = 1;
  for (std::size_t col = 0; col < n; ++col) {
    if (!m[0][col].is_zero()) {
      std::vector<std::vector<BiPoly>> minor;
      minor.reserve(n - 1);
      for (std::size_t r = 1; r < n; ++r) {
        std::vector<BiPoly> row;
        for (std::size_t ccol = 0; ccol < n; ++ccol)
          if (ccol != col) row.push_back(m[r][ccol]);
        minor.push_back(std::move(row));
      }
      const BiPoly term = m[0][col] * det(minor);
      acc = sign > 0 ? acc + term : acc - term;
    }
    sign = -sign;
  }
  return acc;
}

// Sylvester resultant of two BiPolys with respect to u (which = 0) or v.
BiPoly resultant_uv(const BiPoly& f, const BiPoly& g, int which) {
  const auto fc = f.coeffs(which);
  const auto gc = g.coeffs(which);
  const std::size_t m = fc.size() - 1, n = gc.size() - 1;
  std::vector<std::vector<BiPoly>> mat(m + n, std::vector<BiPoly>(m + n));
  for (std::size_t i = 0; i < n; ++i)
    for (std::size_t k = 0; k <= m; ++k) mat[i][i + k] = fc[m - k];
  for (std::size_t j = 0; j < m; ++j)
    for (std::size_t k = 0; k <= n; ++k) mat[n + j][j + k] = gc[n - k];
  return det(mat);
}

CirclePolynomials build_circle_polys(const NormalizedConfig& cfg, bool square_vars) {
  const Rational& a = cfg.a;
  const Rational& b = cfg.b;
  const Rational& c = cfg.c;
  const Poly X = Poly::variable(Var::x);
  const Poly Y = Poly::variable(Var::y);
  const Poly Z = Poly::variable(Var::z);
  const Poly one(Rational(1));

  // Squared distances from (u, v) to the normalized centers.
  const BiPoly u = BiPoly::uv(1, 0, one), v = BiPoly::uv(0, 1, one);
  const BiPoly e1 = u * u + v * v - BiPoly::from(X);
  const BiPoly e2 = (u - BiPoly::from(Poly(Rational(1)))) * (u - BiPoly::from(Poly(Rational(1)))) +
                    (v - BiPoly::from(Poly(a))) * (v - BiPoly::from(Poly(a))) - BiPoly::from(Y);
  const BiPoly e3 = (u - BiPoly::from(Poly(b))) * (u - BiPoly::from(Poly(b))) +
                    (v - BiPoly::from(Poly(c))) * (v - BiPoly::from(Poly(c))) - BiPoly::from(Z);

  // The pair differences are linear in (u, v); eliminate u, then v.
  const BiPoly g1 = e2 - e1;
  const BiPoly g2 = e3 - e1;
  const BiPoly h = resultant_uv(e1, g1, 0);
  const BiPoly k = g2.deg(0) >= 1 ? resultant_uv(g1, g2, 0) : g2;
  const Poly f_raw = resultant_uv(h, k, 1).constant();

  // Normalize so g is monic in z; the full polynomial carries z^2
  // coefficient a^2 + 1.
  const Poly zc_poly = coefficients_in(f_raw, Var::z).at(2);
  const Rational zc = zc_poly.constant_value();
  const Rational a2p1 = a * a + Rational(1);
  Poly g = (Rational(1) / zc) * f_raw;
  Poly f = a2p1 * g;

  // Closed forms for the decomposition g = q^2 - p.
  const Rational qc = -a * a * b * b + a * a * a * c - a * a * c * c + a * a * b - b * b + a * c -
                      c * c + b;
  Poly q = Z + (Rational(1) / a2p1) *
                   (Poly((-a * a + a * c + b - Rational(1))) * X + Poly(-a * c - b) * Y + Poly(qc));
  const Rational pref = -((a * b - c) / a2p1) * ((a * b - c) / a2p1);
  const Poly inner = Y * Y - Rational(2) * ((Poly(a2p1) + X) * Y) + (Poly(a2p1) - X) * (Poly(a2p1) - X);
  Poly p = pref * inner;

  if (square_vars) {
    f = exactq::substitute_squares(f);
    g = exactq::substitute_squares(g);
    q = exactq::substitute_squares(q);
    p = exactq::substitute_squares(p);
  }
  CirclePolynomials out{f, g, q, p, eszcount::verify_decomposition(g, q, p)};
  return out;
}

Rational dot(const RationalPoint& a, const RationalPoint& b) { return a.u * b.u + a.v * b.v; }

RationalPoint sub(const RationalPoint& a, const RationalPoint& b) {
  return {a.u - b.u, a.v - b.v};
}

Rational dist_sq(const RationalPoint& a, const RationalPoint& b) {
  const RationalPoint d = sub(a, b);
  return dot(d, d);
}

// Radical-line data for circles ||P-p1||^2 = r1s and ||P-p2||^2 = r2s.
struct RadicalLine {
  RationalPoint foot;       // point of the line closest to p1
  RationalPoint direction;  // perpendicular to p2 - p1
  Rational dir_sq;
  Rational along_sq;  // ||foot - p1||^2
};

RadicalLine radical_line(const RationalPoint& p1, const RationalPoint& p2, const Rational& r1s,
                         const Rational& r2s) {
  const RationalPoint d = sub(p2, p1);
  const Rational k = r1s - r2s + dot(p2, p2) - dot(p1, p1);
  const Rational mu = (k - Rational(2) * dot(d, p1)) / (Rational(2) * dot(d, d));
  RadicalLine line;
  line.foot = {p1.u + mu * d.u, p1.v + mu * d.v};
  line.direction = {-d.v, d.u};
  line.dir_sq = dot(line.direction, line.direction);
  line.along_sq = dist_sq(line.foot, p1);
  return line;
}

}  // namespace

CirclePolynomials circle_es_polynomial(const NormalizedConfig& cfg) {
  return build_circle_polys(cfg, false);
}

CirclePolynomials circle_es_polynomial_sqrt(const NormalizedConfig& cfg) {
  return build_circle_polys(cfg, true);
}

FiberReport p_fiber_analysis(const NormalizedConfig& cfg, const Rational& x) {
  const auto polys = circle_es_polynomial(cfg);
  const UniPoly fiber = to_unipoly(eval_partial(polys.p, {{Var::x, x}}), Var::y);
  // Clear the constant square prefactor to a monic quadratic.
  const UniPoly monic = fiber.monic();
  FiberReport report;
  report.discriminant = discriminant_uni(monic);
  report.repeated_root = report.discriminant.is_zero();
  report.real_roots = report.discriminant.sign() >= 0;
  if (auto s = rational_sqrt(report.discriminant)) {
    const Rational mid = -monic.coeff(1) / Rational(2);
    report.roots = {{mid - *s / Rational(2), mid + *s / Rational(2)}};
  }
  return report;
}

namespace {

void check_centers(const RationalPoint& p1, const RationalPoint& p2, const RationalPoint& p3) {
  if (p1 == p2 || p1 == p3 || p2 == p3)
    throw Error(errc::coincident_points, "centers must be pairwise distinct");
  const RationalPoint d2 = sub(p2, p1), d3 = sub(p3, p1);
  if (d2.u * d3.v - d2.v * d3.u == Rational(0))
    throw Error(errc::collinear, "centers are collinear");
}

}  // namespace

long long triple_points_geometric(const CircleFamily& f1, const CircleFamily& f2,
                                  const CircleFamily& f3) {
  check_centers(f1.center, f2.center, f3.center);
  long long count = 0;
  for (const auto& r1s : f1.radii_sq.elems()) {
    for (const auto& r2s : f2.radii_sq.elems()) {
      const RadicalLine line = radical_line(f1.center, f2.center, r1s, r2s);
      // Circles 1 and 2 meet in a real point iff the foot is inside circle 1.
      const Rational slack = r1s - line.along_sq;
      if (slack.sign() < 0) continue;
      // Along the line, membership of circle i is a rational quadratic in t.
      const UniPoly q1(Var::x, {-slack, Rational(0), line.dir_sq});
      const RationalPoint to3 = sub(line.foot, f3.center);
      for (const auto& r3s : f3.radii_sq.elems()) {
        const UniPoly q3(Var::x, {dot(to3, to3) - r3s,
                                  Rational(2) * dot(line.direction, to3), line.dir_sq});
        if (gcd_uni(q1, q3).degree() >= 1) ++count;
      }
    }
  }
  return count;
}

long long triple_points_algebraic(const CircleFamily& f1, const CircleFamily& f2,
                                  const CircleFamily& f3, bool rational_radii) {
  check_centers(f1.center, f2.center, f3.center);
  const NormalizedConfig cfg = normalize_configuration(f1.center, f2.center, f3.center);
  const Rational scale_sq = cfg.scale * cfg.scale;
  const auto polys = rational_radii ? circle_es_polynomial_sqrt(cfg) : circle_es_polynomial(cfg);

  auto transform = [&](const RatSet& radii_sq) {
    std::vector<Rational> out;
    out.reserve(radii_sq.size());
    for (const auto& r : radii_sq.elems()) {
      const Rational scaled = scale_sq * r;
      if (rational_radii) {
        auto root = rational_sqrt(scaled);
        if (!root)
          throw Error(errc::not_a_square,
                      "squared radius " + r.str() + " is not a rational square");
        out.push_back(*root);
      } else {
        out.push_back(scaled);
      }
    }
    return RatSet(std::move(out));
  };

  eszcount::Grid grid{transform(f1.radii_sq), transform(f2.radii_sq), transform(f3.radii_sq)};
  return count_zeros_fast(polys.g, grid).count;
}

PinnedDistances pinned_distance_sets(const std::vector<RationalPoint>& points,
                                     const RationalPoint& p1, const RationalPoint& p2) {
  std::vector<Rational> d1, d2;
  d1.reserve(points.size());
  d2.reserve(points.size());
  for (const auto& p : points) {
    d1.push_back(dist_sq(p1, p));
    d2.push_back(dist_sq(p2, p));
  }
  PinnedDistances out;
  out.d1_sq = RatSet(std::move(d1));
  out.d2_sq = RatSet(std::move(d2));
  if (!points.empty()) {
    const double biggest = static_cast<double>(std::max(out.d1_sq.size(), out.d2_sq.size()));
    out.ratio = biggest / std::pow(static_cast<double>(points.size()), 3.0 / 5.0);
  }
  return out;
}

std::vector<RationalPoint> rational_intersections(const CircleFamily& f1,
                                                  const CircleFamily& f2) {
  if (f1.center == f2.center)
    throw Error(errc::coincident_points, "families must have distinct centers");
  std::vector<RationalPoint> points;
  for (const auto& r1s : f1.radii_sq.elems()) {
    for (const auto& r2s : f2.radii_sq.elems()) {
      const RadicalLine line = radical_line(f1.center, f2.center, r1s, r2s);
      const Rational t_sq = (r1s - line.along_sq) / line.dir_sq;
      const auto t = rational_sqrt(t_sq);
      if (!t) continue;
      points.push_back({line.foot.u + *t * line.direction.u, line.foot.v + *t * line.direction.v});
      if (!t->is_zero())
        points.push_back(
            {line.foot.u - *t * line.direction.u, line.foot.v - *t * line.direction.v});
    }
  }
  std::sort(points.begin(), points.end());
  return points;
}

}  // namespace eszlab::circlegeom
