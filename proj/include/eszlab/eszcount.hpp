#pragma once

#include <cstdint>
#include <map>
#include <optional>
#include <unordered_set>
#include <utility>
#include <vector>

#include "eszlab/polyops.hpp"

namespace eszlab::eszcount {

using exactq::BigInt;
using exactq::Poly;
using exactq::Rational;
using exactq::UniPoly;
using exactq::Var;

/** Finite set of rationals with a constant-time membership index. */
class RatSet {
public:
  RatSet() = default;
  explicit RatSet(std::vector<Rational> elems);

  const std::vector<Rational>& elems() const { return elems_; }
  bool contains(const Rational& r) const { return index_.count(r) != 0; }
  std::size_t size() const { return elems_.size(); }
  bool empty() const { return elems_.empty(); }

private:
  std::vector<Rational> elems_;  // sorted, duplicate-free
  std::unordered_set<Rational> index_;
};

struct Grid {
  RatSet a, b, c;
};

struct CountOptions {
  unsigned root_bit_threshold = 64;
  // Scan C by Horner evaluation instead of solving for roots when |C| is at
  // most this; also the fallback when the root solver refuses.
  std::size_t scan_cutoff = 64;
};

// Exhaustive triple loop; the reference the fast path is tested against.
long long count_zeros_oracle(const Poly& f, const Grid& grid);

struct FastCount {
  long long count = 0;
  long long identically_zero_pairs = 0;
};

// Per-fiber counting: for each (a,b) either the z-specialization vanishes
// identically (contributes |C|) or it has at most deg f roots, which are
// intersected with C's membership index.
FastCount count_zeros_fast(const Poly& f, const Grid& grid, const CountOptions& opts = {});

// |{(a,b) in A x B : f(a,b,z) == 0 as a polynomial in z}|
long long compute_lf(const Poly& f, const RatSet& a, const RatSet& b);

/** Validated presentation f = q^2 - p with p free of z. */
struct Decomposition {
  Poly f, q, p;
  int d;    // total degree of f
  int d_p;  // deg_y(p)
  int s;    // smallest integer with s*d_p >= 5
};

Decomposition verify_decomposition(const Poly& f, const Poly& q, const Poly& p);

// ceil(5 / d_p)
int s_parameter(int d_p);

// Elements a of A whose fiber p(a,y) is zero, drops to degree 0, or has a
// repeated root.
std::vector<Rational> repeated_root_check(const Poly& p, const RatSet& a_set);

struct CommonRootPairs {
  // Unordered pairs {a, a'} with vanishing fiber resultant, stored (min,max).
  std::vector<std::pair<Rational, Rational>> pairs;
  // Fibers whose y-degree dropped below deg_y(p); excluded from pairing.
  std::vector<Rational> degenerate;
};

CommonRootPairs common_root_pairs(const Poly& p, const RatSet& a_set);

inline constexpr unsigned long long kDefaultTupleBudget = 10'000'000ULL;

// |M_{A,p}|: ordered s-tuples of distinct elements containing at least one
// pair whose fibers share a complex root. Throws errc::budget_exceeded when
// |A|^s exceeds the budget (use m_set_bound instead).
BigInt m_set_count(const Poly& p, const RatSet& a_set, int s,
                   unsigned long long budget = kDefaultTupleBudget);

// pair_degree_bound * C(s,2) * a_size^(s-1)
BigInt m_set_bound(long long pair_degree_bound, long long a_size, int s);

/** Weighted bipartite solution graph on A' x B. */
struct SolutionGraph {
  std::vector<Rational> left;      // A' (sorted)
  std::vector<Rational> right;     // B (sorted)
  std::vector<Rational> excluded;  // leading-coefficient vanishing set R cap A
  // (left index, right index) -> |{c in C : f(a,b,c)=0}|, stored only when >= 1
  std::map<std::pair<std::size_t, std::size_t>, long long> weights;
  std::size_t c_size = 0;

  long long edge_count() const { return static_cast<long long>(weights.size()); }
  BigInt weight_sum() const;
  // Left-side neighborhoods keyed by right index.
  std::vector<std::vector<std::size_t>> left_neighborhoods() const;
};

SolutionGraph build_solution_graph(const Poly& f, const Grid& grid,
                                   const std::optional<Decomposition>& dec = std::nullopt,
                                   const CountOptions& opts = {});

struct NeighborhoodSums {
  BigInt s;   // sum over s-tuples of common-neighborhood sizes
  BigInt s1;  // distinct entries, no fiber pair sharing a root
  BigInt s2;  // distinct entries, some fiber pair sharing a root
  BigInt s3;  // repeated entries
};

// When p is absent the common-root relation is unavailable: s2 = 0 and all
// distinct-tuple contributions are reported in s1.
NeighborhoodSums common_neighborhood_sum(const SolutionGraph& graph, int s,
                                         const std::optional<Poly>& p = std::nullopt,
                                         unsigned long long budget = kDefaultTupleBudget);

struct BoundTerms {
  double a_bs = 0;       // |A| |B|^(1-1/s)
  double as_b = 0;       // |A|^(1-1/s) |B|
  double m_b = 0;        // |M|^(1/s) |B|
  double lf_c = 0;       // L_F |C|
  double rhs_without_constant = 0;
  int s = 0;
  int d = 0;
  // The bound carries an unspecified constant factor depending on (s, d);
  // the terms are reported without it.
  static constexpr const char* kNote = "up to a constant factor depending on (s, d)";
};

BoundTerms bound_terms(const Decomposition& dec, const Grid& grid, const BigInt& m_count,
                       long long l_f);

struct Instance {
  Poly f;
  Grid grid;
};

// A = B = {1..n}, C = {1..2n} with f = (x-y)^2 + x - z; the zero count grows
// like n^(3/2).
Instance lower_bound_construction(long n);

}  // namespace eszlab::eszcount
