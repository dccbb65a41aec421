#include "eszlab/arithapps.hpp"

#include <algorithm>
#include <cmath>
#include <numeric>

#include "eszlab/parse.hpp"

namespace eszlab::arithapps {

using exactq::eval;
using exactq::is_squarefree;
using exactq::rational_kth_root;
using exactq::rational_sqrt;
using exactq::to_poly;

BipartiteGraph make_graph(std::vector<Rational> left, std::vector<Rational> right,
                          std::vector<std::pair<std::size_t, std::size_t>> edges) {
  for (const auto& [i, j] : edges)
    if (i >= left.size() || j >= right.size())
      throw Error(errc::invalid_argument, "edge index out of range");
  std::sort(edges.begin(), edges.end());
  edges.erase(std::unique(edges.begin(), edges.end()), edges.end());
  return BipartiteGraph{std::move(left), std::move(right), std::move(edges)};
}

BipartiteGraph complete_graph(std::vector<Rational> left, std::vector<Rational> right) {
  std::vector<std::pair<std::size_t, std::size_t>> edges;
  edges.reserve(left.size() * right.size());
  for (std::size_t i = 0; i < left.size(); ++i)
    for (std::size_t j = 0; j < right.size(); ++j) edges.emplace_back(i, j);
  return BipartiteGraph{std::move(left), std::move(right), std::move(edges)};
}

ExpanderReport expander_image(const UniPoly& h, const Poly& g, const RatSet& a_set,
                              const RatSet& b_set) {
  if (h.derivative().is_zero())
    throw Error(errc::degree, "h must be nonconstant");
  if (exactq::derivative(g, Var::y).is_zero())
    throw Error(errc::degree, "g must depend on y");
  if (g.depends_on(Var::z))
    throw Error(errc::invalid_argument, "g must involve only x and y");

  std::vector<Rational> image;
  image.reserve(a_set.size() * b_set.size());
  for (const auto& a : a_set.elems()) {
    const Rational ha = h(a);
    for (const auto& b : b_set.elems()) {
      const Rational gv = eval(g, a, b, Rational(0));
      image.push_back(ha + gv * gv);
    }
  }
  ExpanderReport report;
  report.image = RatSet(std::move(image));
  report.s = eszcount::s_parameter(h.degree());

  // Hypothesis check: t - h(x) squarefree for every output t.
  const Poly hp = to_poly(h);
  for (const auto& t : report.image.elems()) {
    const UniPoly shifted = exactq::to_unipoly(Poly(t) - hp, h.var());
    if (!is_squarefree(shifted)) report.repeated_root_violations.push_back(t);
  }

  if (!a_set.empty() && !b_set.empty())
    report.ratio = static_cast<double>(report.image.size()) /
                   (static_cast<double>(b_set.size()) *
                    std::pow(static_cast<double>(a_set.size()), 1.0 / report.s));
  return report;
}

long long ap3_count(const RatSet& a_set) {
  std::vector<Rational> doubled;
  doubled.reserve(a_set.size());
  for (const auto& a : a_set.elems()) doubled.push_back(Rational(2) * a);
  const RatSet two_a(std::move(doubled));
  long long count = 0;
  for (const auto& x : a_set.elems())
    for (const auto& y : a_set.elems())
      if (two_a.contains(x + y)) ++count;
  return count;
}

Ap3ZerosReport ap3_count_via_zeros(const RatSet& a_squares) {
  std::vector<Rational> roots;
  roots.reserve(a_squares.size());
  bool has_zero = false;
  for (const auto& a : a_squares.elems()) {
    const auto r = rational_sqrt(a);
    if (!r) throw Error(errc::not_a_square, a.str() + " is not a rational square");
    if (r->is_zero())
      has_zero = true;
    else
      roots.push_back(*r);
  }
  const RatSet b(std::move(roots));

  Ap3ZerosReport report;
  const Poly f = exactq::parse_poly("z^2 - 1/2*(x^2 + y^2)");
  report.via_zeros = count_zeros_fast(f, eszcount::Grid{b, b, b}).count;

  if (has_zero) {
    // Progressions alpha + beta = 2 gamma with a zero entry, counted directly.
    std::vector<Rational> doubled;
    for (const auto& a : a_squares.elems()) doubled.push_back(Rational(2) * a);
    const RatSet two_a(std::move(doubled));
    for (const auto& x : a_squares.elems())
      for (const auto& y : a_squares.elems()) {
        if (!two_a.contains(x + y)) continue;
        const Rational gamma = (x + y) / Rational(2);
        if (x.is_zero() || y.is_zero() || gamma.is_zero()) ++report.zero_part;
      }
  }
  report.total = report.via_zeros + report.zero_part;
  return report;
}

std::vector<SquareAp3> pythagorean_square_ap3(long n) {
  if (n < 5) throw Error(errc::invalid_argument, "needs n >= 5");
  std::vector<SquareAp3> out;
  // Euclid parametrization with multiples enumerates every triple once.
  for (long m = 2; m * m + 1 <= n; ++m) {
    for (long k = 1; k < m; ++k) {
      if ((m - k) % 2 == 0 || std::gcd(m, k) != 1) continue;
      const long leg1 = m * m - k * k, leg2 = 2 * m * k, hyp = m * m + k * k;
      for (long d = 1; d * hyp <= n; ++d) {
        const long a = d * std::max(leg1, leg2);
        const long b = d * std::min(leg1, leg2);
        const long c = d * hyp;
        if (a + b > 2 * n) continue;
        out.push_back({(a - b) * (a - b), c * c, (a + b) * (a + b)});
      }
    }
  }
  std::sort(out.begin(), out.end());
  return out;
}

SquaresReport squares_in_set(const RatSet& a_set) {
  if (a_set.empty()) throw Error(errc::invalid_argument, "set must be nonempty");
  std::vector<Rational> squares;
  for (const auto& a : a_set.elems())
    if (rational_sqrt(a)) squares.push_back(a);

  std::vector<Rational> sums;
  sums.reserve(a_set.size() * a_set.size());
  for (const auto& x : a_set.elems())
    for (const auto& y : a_set.elems()) sums.push_back(x + y);
  const RatSet sumset(std::move(sums));

  SquaresReport report;
  report.squares = RatSet(std::move(squares));
  report.doubling = Rational(static_cast<long>(sumset.size()), static_cast<long>(a_set.size()));
  report.ratio = static_cast<double>(report.squares.size()) /
                 std::pow(static_cast<double>(sumset.size()), 3.0 / 4.0);
  return report;
}

RepFunction rep_function(const RatSet& a_set, const RatSet& b_set) {
  RepFunction table;
  for (const auto& a : a_set.elems())
    for (const auto& b : b_set.elems()) ++table[a - b];
  return table;
}

EnergyValue energy(const RatSet& a_set, const RatSet& b_set, double l) {
  if (!(l > 0)) throw Error(errc::invalid_argument, "l must be positive");
  const RepFunction table = rep_function(a_set, b_set);
  EnergyValue out;
  const bool integral = l == std::floor(l) && l < 1e9;
  if (integral) {
    BigInt sum(0);
    for (const auto& [m, r] : table) {
      BigInt p;
      mpz_ui_pow_ui(p.get_mpz_t(), static_cast<unsigned long>(r),
                    static_cast<unsigned long>(l));
      sum += p;
    }
    out.exact = sum;
    out.value = sum.get_d();
  } else {
    double sum = 0;
    for (const auto& [m, r] : table) sum += std::pow(static_cast<double>(r), l);
    out.value = sum;
  }
  return out;
}

EnergyCurveReport energy_curve_check(const RatSet& a_squares, const RatSet& b_kpowers, int k) {
  if (k < 5) throw Error(errc::degree, "needs k >= 5");
  std::map<Rational, std::vector<std::pair<Rational, Rational>>> by_m;
  std::vector<std::pair<Rational, Rational>> a_roots, b_roots;
  for (const auto& a : a_squares.elems()) {
    const auto r = rational_sqrt(a);
    if (!r) throw Error(errc::not_a_square, a.str() + " is not a rational square");
    a_roots.emplace_back(a, *r);
  }
  for (const auto& b : b_kpowers.elems()) {
    const auto r = rational_kth_root(b, static_cast<unsigned>(k));
    if (!r) throw Error(errc::not_a_kth_power, b.str() + " is not a rational k-th power");
    b_roots.emplace_back(b, *r);
  }

  EnergyCurveReport report;
  for (const auto& [a, ya] : a_roots) {
    for (const auto& [b, xb] : b_roots) {
      const Rational m = a - b;
      if (m.is_zero()) {
        ++report.zero_rep;
        continue;
      }
      const auto curve = hyperell::shifted_power_curve(m, k);
      if (!curve.contains(xb, ya))
        throw Error(errc::invalid_argument, "representation point fails the curve equation");
      by_m[m].emplace_back(xb, ya);
    }
  }
  for (auto& [m, pts] : by_m) {
    report.max_rep = std::max(report.max_rep, static_cast<long long>(pts.size()));
    report.entries.push_back({m, std::move(pts)});
  }
  return report;
}

Poly graph_products_poly(const Rational& alpha, const Rational& beta) {
  if (alpha.is_zero() || beta.is_zero())
    throw Error(errc::zero_shift, "shifts must be nonzero");
  const Poly X = Poly::variable(Var::x), Y = Poly::variable(Var::y), Z = Poly::variable(Var::z);
  const Rational inv_a = Rational(1) / alpha;
  return (inv_a * X + Z) * (Z + Poly(beta)) - inv_a * (Z * Y);
}

GraphProducts graph_products(const BipartiteGraph& graph, const Rational& alpha,
                             const Rational& beta) {
  if (alpha.is_zero() || beta.is_zero())
    throw Error(errc::zero_shift, "shifts must be nonzero");
  for (const auto& v : graph.left)
    if (v.is_zero()) throw Error(errc::zero_element, "0 in A");
  for (const auto& v : graph.right)
    if (v.is_zero()) throw Error(errc::zero_element, "0 in B");

  const Poly f = graph_products_poly(alpha, beta);
  std::vector<Rational> cs, ds;
  cs.reserve(graph.edges.size());
  ds.reserve(graph.edges.size());
  for (const auto& [i, j] : graph.edges) {
    const Rational& a = graph.left[i];
    const Rational& b = graph.right[j];
    const Rational c = a * b;
    const Rational d = (a + alpha) * (b + beta);
    if (!eval(f, c, d, b).is_zero())
      throw Error(errc::invalid_argument, "edge solution fails the product polynomial");
    cs.push_back(c);
    ds.push_back(d);
  }
  GraphProducts out;
  out.c = RatSet(std::move(cs));
  out.d = RatSet(std::move(ds));
  out.s = static_cast<long long>(graph.edges.size());
  if (out.s > 0)
    out.ratio = static_cast<double>(std::max(out.c.size(), out.d.size())) /
                std::pow(static_cast<double>(out.s), 3.0 / 5.0);
  return out;
}

Decomposition graph_products_decomposition(const Rational& alpha, const Rational& beta) {
  const Poly f = graph_products_poly(alpha, beta);
  const Poly X = Poly::variable(Var::x), Y = Poly::variable(Var::y), Z = Poly::variable(Var::z);
  const Rational inv_a = Rational(1) / alpha;
  const Poly shift = inv_a * (X - Y) + Poly(beta);  // (x-y)/alpha + beta
  const Poly q = Z + Rational(1, 2) * shift;
  const Poly p = Rational(1, 4) * (shift * shift) - (beta * inv_a) * X;
  return eszcount::verify_decomposition(f, q, p);
}

long long sum_in_squares_pairs(const RatSet& a_set, const RatSet& b_set,
                               const RatSet& c_squares) {
  std::vector<Rational> roots;
  roots.reserve(c_squares.size());
  for (const auto& c : c_squares.elems()) {
    const auto r = rational_sqrt(c);
    if (!r) throw Error(errc::not_a_square, c.str() + " is not a rational square");
    roots.push_back(*r);
  }
  long long direct = 0;
  for (const auto& a : a_set.elems())
    for (const auto& b : b_set.elems())
      if (c_squares.contains(a + b)) ++direct;

  const Poly f = exactq::parse_poly("z^2 - x - y");
  const long long via_zeros =
      count_zeros_fast(f, eszcount::Grid{a_set, b_set, RatSet(std::move(roots))}).count;
  if (direct != via_zeros)
    throw Error(errc::invalid_argument, "direct count and zero count disagree");
  return direct;
}

}  // namespace eszlab::arithapps
