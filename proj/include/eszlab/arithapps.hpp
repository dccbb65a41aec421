#pragma once

#include <map>
#include <optional>
#include <utility>
#include <vector>

#include "eszlab/eszcount.hpp"
#include "eszlab/hyperell.hpp"

namespace eszlab::arithapps {

using eszcount::BigInt;
using eszcount::Decomposition;
using eszcount::RatSet;
using exactq::Poly;
using exactq::Rational;
using exactq::UniPoly;
using exactq::Var;

/** Bipartite graph over A x B with edges as index pairs into the sets. */
struct BipartiteGraph {
  std::vector<Rational> left, right;
  std::vector<std::pair<std::size_t, std::size_t>> edges;
};

BipartiteGraph make_graph(std::vector<Rational> left, std::vector<Rational> right,
                          std::vector<std::pair<std::size_t, std::size_t>> edges);
BipartiteGraph complete_graph(std::vector<Rational> left, std::vector<Rational> right);

struct ExpanderReport {
  RatSet image;  // { h(a) + g(a,b)^2 }
  int s = 0;     // smallest s with s deg(h) >= 5
  double ratio = 0;  // |image| / (|B| |A|^(1/s))
  // Output values t for which t - h(x) has a repeated root.
  std::vector<Rational> repeated_root_violations;
};

ExpanderReport expander_image(const UniPoly& h, const Poly& g, const RatSet& a_set,
                              const RatSet& b_set);

// Ordered pairs (alpha, beta) in A^2 with alpha + beta in 2A; trivial
// progressions included.
long long ap3_count(const RatSet& a_set);

struct Ap3ZerosReport {
  long long total = 0;      // equals ap3_count
  long long via_zeros = 0;  // zeros of z^2 - (x^2+y^2)/2 on the positive roots
  long long zero_part = 0;  // progressions with a zero entry, counted directly
};

// Every element must be a rational square; 0 is removed from the root set and
// its contribution counted separately.
Ap3ZerosReport ap3_count_via_zeros(const RatSet& a_squares);

struct SquareAp3 {
  long long first, mid, last;  // ((a-b)^2, c^2, (a+b)^2)
  friend bool operator==(const SquareAp3& x, const SquareAp3& y) {
    return x.first == y.first && x.mid == y.mid && x.last == y.last;
  }
  friend bool operator<(const SquareAp3& x, const SquareAp3& y) {
    return std::pair(x.mid, x.first) < std::pair(y.mid, y.first);
  }
};

// One 3AP of squares for every Pythagorean triple a^2 + b^2 = c^2 with a >= b
// and c <= n; all members lie among the first 2n squares.
std::vector<SquareAp3> pythagorean_square_ap3(long n);

struct SquaresReport {
  RatSet squares;
  Rational doubling;  // K = |A+A| / |A|
  double ratio = 0;   // |squares| / (K |A|)^(3/4)
};

SquaresReport squares_in_set(const RatSet& a_set);

// r_{A-B}: difference value -> number of representations.
using RepFunction = std::map<Rational, long long>;
RepFunction rep_function(const RatSet& a_set, const RatSet& b_set);

struct EnergyValue {
  double value = 0;
  std::optional<BigInt> exact;  // populated for positive integer l
};

// E_l(A,B) = sum over the difference set of r^l.
EnergyValue energy(const RatSet& a_set, const RatSet& b_set, double l);

struct EnergyCurveEntry {
  Rational m;
  // (b^(1/k), a^(1/2)) for each representation a - b = m, each verified to
  // lie on Y^2 - X^k = m.
  std::vector<std::pair<Rational, Rational>> points;
};

struct EnergyCurveReport {
  std::vector<EnergyCurveEntry> entries;  // m != 0 only
  long long max_rep = 0;                  // max over m != 0 of r_{A-B}(m)
  long long zero_rep = 0;                 // r_{A-B}(0) = |A cap B|
};

EnergyCurveReport energy_curve_check(const RatSet& a_squares, const RatSet& b_kpowers, int k);

struct GraphProducts {
  RatSet c, d;       // A .G B and (A+alpha) .G (B+beta)
  long long s = 0;   // |E(G)|
  double ratio = 0;  // max(|C|, |D|) / |E(G)|^(3/5)
};

GraphProducts graph_products(const BipartiteGraph& graph, const Rational& alpha,
                             const Rational& beta);

// (x/alpha + z)(z + beta) - z y / alpha
Poly graph_products_poly(const Rational& alpha, const Rational& beta);

Decomposition graph_products_decomposition(const Rational& alpha, const Rational& beta);

// |{(a,b) in A x B : a + b in C}| computed directly and as a zero count of
// z^2 - x - y over A x B x sqrt(C); the two routes must agree.
long long sum_in_squares_pairs(const RatSet& a_set, const RatSet& b_set,
                               const RatSet& c_squares);

}  // namespace eszlab::arithapps
