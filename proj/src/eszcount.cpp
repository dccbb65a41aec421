#include "eszlab/eszcount.hpp"

#include <algorithm>
#include <cmath>

#include "eszlab/parse.hpp"

namespace eszlab::eszcount {

using exactq::coefficients_in;
using exactq::derivative;
using exactq::eval;
using exactq::is_squarefree;
using exactq::rational_roots_bounded;
using exactq::resultant_uni;

RatSet::RatSet(std::vector<Rational> elems) : elems_(std::move(elems)) {
  std::sort(elems_.begin(), elems_.end());
  elems_.erase(std::unique(elems_.begin(), elems_.end()), elems_.end());
  index_.reserve(elems_.size() * 2);
  index_.insert(elems_.begin(), elems_.end());
}

long long count_zeros_oracle(const Poly& f, const Grid& grid) {
  long long count = 0;
  for (const auto& a : grid.a.elems())
    for (const auto& b : grid.b.elems())
      for (const auto& c : grid.c.elems())
        if (eval(f, a, b, c).is_zero()) ++count;
  return count;
}

namespace {

// Coefficients of f(a, b, z) in z.
std::vector<Rational> specialize_fiber(const std::vector<Poly>& z_coeffs, const Rational& a,
                                       const Rational& b) {
  std::vector<Rational> out;
  out.reserve(z_coeffs.size());
  for (const auto& c : z_coeffs) out.push_back(eval(c, a, b, Rational(0)));
  return out;
}

bool all_zero(const std::vector<Rational>& cs) {
  return std::all_of(cs.begin(), cs.end(), [](const Rational& c) { return c.is_zero(); });
}

// Number of c in C with H(c) = 0 for a nonzero fiber H.
long long fiber_root_count(const UniPoly& h, const RatSet& c_set, const CountOptions& opts) {
  if (h.degree() < 1) return 0;
  if (c_set.size() > opts.scan_cutoff) {
    if (auto roots = rational_roots_bounded(h, opts.root_bit_threshold)) {
      long long n = 0;
      for (const auto& r : *roots)
        if (c_set.contains(r)) ++n;
      return n;
    }
  }
  long long n = 0;
  for (const auto& c : c_set.elems())
    if (h(c).is_zero()) ++n;
  return n;
}

}  // namespace

FastCount count_zeros_fast(const Poly& f, const Grid& grid, const CountOptions& opts) {
  FastCount out;
  const auto z_coeffs = coefficients_in(f, Var::z);
  for (const auto& a : grid.a.elems()) {
    for (const auto& b : grid.b.elems()) {
      auto cs = specialize_fiber(z_coeffs, a, b);
      if (all_zero(cs)) {
        out.count += static_cast<long long>(grid.c.size());
        ++out.identically_zero_pairs;
        continue;
      }
      UniPoly h(Var::z, std::move(cs));
      if (h.degree() == 0) continue;
      out.count += fiber_root_count(h, grid.c, opts);
    }
  }
  return out;
}

long long compute_lf(const Poly& f, const RatSet& a_set, const RatSet& b_set) {
  const auto z_coeffs = coefficients_in(f, Var::z);
  long long n = 0;
  for (const auto& a : a_set.elems())
    for (const auto& b : b_set.elems())
      if (all_zero(specialize_fiber(z_coeffs, a, b))) ++n;
  return n;
}

Decomposition verify_decomposition(const Poly& f, const Poly& q, const Poly& p) {
  if (p.depends_on(Var::z))
    throw Error(errc::decomposition_has_z, "p must not involve z");
  if (f != q * q - p)
    throw Error(errc::decomposition_identity, "f != q^2 - p");
  if (derivative(f, Var::z).is_zero())
    throw Error(errc::decomposition_no_z_dep, "f has no z dependence");
  const int d_p = p.degree_in(Var::y);
  if (d_p < 1) throw Error(errc::decomposition_degree, "p must have positive degree in y");
  return Decomposition{f, q, p, f.total_degree(), d_p, s_parameter(d_p)};
}

int s_parameter(int d_p) {
  if (d_p < 1) throw Error(errc::invalid_argument, "d_p must be at least 1");
  return (5 + d_p - 1) / d_p;
}

namespace {

// p(a, y) as a univariate polynomial in y.
UniPoly y_fiber(const std::vector<Poly>& y_coeffs, const Rational& a) {
  std::vector<Rational> cs;
  cs.reserve(y_coeffs.size());
  for (const auto& c : y_coeffs) cs.push_back(eval(c, a, Rational(0), Rational(0)));
  return UniPoly(Var::y, std::move(cs));
}

}  // namespace

std::vector<Rational> repeated_root_check(const Poly& p, const RatSet& a_set) {
  if (p.degree_in(Var::y) < 1)
    throw Error(errc::degree, "p must have positive degree in y");
  const auto y_coeffs = coefficients_in(p, Var::y);
  std::vector<Rational> offending;
  for (const auto& a : a_set.elems()) {
    const UniPoly fiber = y_fiber(y_coeffs, a);
    if (fiber.is_zero() || fiber.degree() == 0 || !is_squarefree(fiber))
      offending.push_back(a);
  }
  return offending;
}

CommonRootPairs common_root_pairs(const Poly& p, const RatSet& a_set) {
  const int d_p = p.degree_in(Var::y);
  if (d_p < 1) throw Error(errc::degree, "p must have positive degree in y");
  const auto y_coeffs = coefficients_in(p, Var::y);

  CommonRootPairs out;
  std::vector<std::pair<Rational, UniPoly>> fibers;
  for (const auto& a : a_set.elems()) {
    UniPoly fiber = y_fiber(y_coeffs, a);
    if (fiber.degree() < d_p) {
      out.degenerate.push_back(a);
      continue;
    }
    fibers.emplace_back(a, std::move(fiber));
  }
  for (std::size_t i = 0; i < fibers.size(); ++i)
    for (std::size_t j = i + 1; j < fibers.size(); ++j)
      if (resultant_uni(fibers[i].second, fibers[j].second).is_zero())
        out.pairs.emplace_back(fibers[i].first, fibers[j].first);
  return out;
}

namespace {

BigInt falling_factorial(long long n, int k) {
  BigInt r(1);
  for (int i = 0; i < k; ++i) r *= BigInt(static_cast<long>(n - i));
  return n >= k ? r : BigInt(0);
}

// Ordered s-tuples of distinct indices 0..n-1 containing at least one related
// pair. Tuples are counted where their first related pair is completed, so
// only relation-free prefixes are expanded.
BigInt count_tuples_with_pair(const std::vector<std::vector<bool>>& rel, int s) {
  const long long n = static_cast<long long>(rel.size());
  BigInt total(0);
  std::vector<std::size_t> prefix;
  std::vector<bool> used(rel.size(), false);
  auto rec = [&](auto&& self) -> void {
    const int k = static_cast<int>(prefix.size());
    if (k == s) return;
    for (std::size_t cand = 0; cand < rel.size(); ++cand) {
      if (used[cand]) continue;
      bool pairs_up = false;
      for (std::size_t prev : prefix)
        if (rel[prev][cand]) {
          pairs_up = true;
          break;
        }
      if (pairs_up) {
        total += falling_factorial(n - k - 1, s - k - 1);
      } else {
        used[cand] = true;
        prefix.push_back(cand);
        self(self);
        prefix.pop_back();
        used[cand] = false;
      }
    }
  };
  rec(rec);
  return total;
}

void check_tuple_budget(std::size_t n, int s, unsigned long long budget) {
  BigInt space;
  mpz_ui_pow_ui(space.get_mpz_t(), static_cast<unsigned long>(n), static_cast<unsigned long>(s));
  if (space > BigInt(static_cast<unsigned long>(budget)))
    throw Error(errc::budget_exceeded,
                "tuple space exceeds the enumeration budget; use m_set_bound");
}

std::vector<std::vector<bool>> pair_relation(const Poly& p, const std::vector<Rational>& elems) {
  RatSet as(elems);
  const auto cr = common_root_pairs(p, as);
  std::map<Rational, std::size_t> pos;
  for (std::size_t i = 0; i < elems.size(); ++i) pos[elems[i]] = i;
  std::vector<std::vector<bool>> rel(elems.size(), std::vector<bool>(elems.size(), false));
  for (const auto& [a1, a2] : cr.pairs) {
    rel[pos[a1]][pos[a2]] = true;
    rel[pos[a2]][pos[a1]] = true;
  }
  return rel;
}

}  // namespace

BigInt m_set_count(const Poly& p, const RatSet& a_set, int s, unsigned long long budget) {
  if (s < 2) throw Error(errc::invalid_argument, "m_set_count needs s >= 2");
  check_tuple_budget(a_set.size(), s, budget);
  return count_tuples_with_pair(pair_relation(p, a_set.elems()), s);
}

BigInt m_set_bound(long long pair_degree_bound, long long a_size, int s) {
  if (s < 2) throw Error(errc::invalid_argument, "m_set_bound needs s >= 2");
  BigInt pow_term;
  mpz_ui_pow_ui(pow_term.get_mpz_t(), static_cast<unsigned long>(a_size),
                static_cast<unsigned long>(s - 1));
  const BigInt choose2 = BigInt(s) * BigInt(s - 1) / 2;
  return BigInt(static_cast<long>(pair_degree_bound)) * choose2 * pow_term;
}

BigInt SolutionGraph::weight_sum() const {
  BigInt sum(0);
  for (const auto& [e, w] : weights) sum += BigInt(static_cast<long>(w));
  return sum;
}

std::vector<std::vector<std::size_t>> SolutionGraph::left_neighborhoods() const {
  std::vector<std::vector<std::size_t>> nb(right.size());
  for (const auto& [e, w] : weights) nb[e.second].push_back(e.first);
  return nb;
}

SolutionGraph build_solution_graph(const Poly& f, const Grid& grid,
                                   const std::optional<Decomposition>& dec,
                                   const CountOptions& opts) {
  SolutionGraph g;
  g.right = grid.b.elems();
  g.c_size = grid.c.size();
  if (dec) {
    // Drop the leading-coefficient vanishing set R = {a : r_{d_p}(a) = 0}.
    const Poly lead = coefficients_in(dec->p, Var::y).back();
    for (const auto& a : grid.a.elems()) {
      if (eval(lead, a, Rational(0), Rational(0)).is_zero())
        g.excluded.push_back(a);
      else
        g.left.push_back(a);
    }
  } else {
    g.left = grid.a.elems();
  }

  const auto z_coeffs = coefficients_in(f, Var::z);
  for (std::size_t i = 0; i < g.left.size(); ++i) {
    for (std::size_t j = 0; j < g.right.size(); ++j) {
      auto cs = specialize_fiber(z_coeffs, g.left[i], g.right[j]);
      long long w = 0;
      if (all_zero(cs)) {
        w = static_cast<long long>(grid.c.size());
      } else {
        UniPoly h(Var::z, std::move(cs));
        w = fiber_root_count(h, grid.c, opts);
      }
      if (w > 0) g.weights[{i, j}] = w;
    }
  }
  return g;
}

NeighborhoodSums common_neighborhood_sum(const SolutionGraph& graph, int s,
                                         const std::optional<Poly>& p,
                                         unsigned long long budget) {
  if (s < 1) throw Error(errc::invalid_argument, "tuple length must be >= 1");
  check_tuple_budget(graph.left.size(), s, budget);

  std::vector<std::vector<bool>> rel;
  if (p) rel = pair_relation(*p, graph.left);

  NeighborhoodSums out{BigInt(0), BigInt(0), BigInt(0), BigInt(0)};
  for (const auto& hood : graph.left_neighborhoods()) {
    const long long k = static_cast<long long>(hood.size());
    BigInt tuples;
    mpz_ui_pow_ui(tuples.get_mpz_t(), static_cast<unsigned long>(k),
                  static_cast<unsigned long>(s));
    const BigInt distinct = falling_factorial(k, s);
    out.s += tuples;
    out.s3 += tuples - distinct;
    BigInt with_pair(0);
    if (p && s >= 2) {
      std::vector<std::vector<bool>> sub(hood.size(), std::vector<bool>(hood.size(), false));
      for (std::size_t i = 0; i < hood.size(); ++i)
        for (std::size_t j = 0; j < hood.size(); ++j) sub[i][j] = rel[hood[i]][hood[j]];
      with_pair = count_tuples_with_pair(sub, s);
    }
    out.s2 += with_pair;
    out.s1 += distinct - with_pair;
  }
  return out;
}

BoundTerms bound_terms(const Decomposition& dec, const Grid& grid, const BigInt& m_count,
                       long long l_f) {
  BoundTerms t;
  t.s = dec.s;
  t.d = dec.d;
  const double na = static_cast<double>(grid.a.size());
  const double nb = static_cast<double>(grid.b.size());
  const double nc = static_cast<double>(grid.c.size());
  const double inv_s = 1.0 / static_cast<double>(dec.s);
  t.a_bs = na * std::pow(nb, 1.0 - inv_s);
  t.as_b = std::pow(na, 1.0 - inv_s) * nb;
  t.m_b = std::pow(m_count.get_d(), inv_s) * nb;
  t.lf_c = static_cast<double>(l_f) * nc;
  t.rhs_without_constant = t.a_bs + t.as_b + t.m_b + t.lf_c;
  return t;
}

Instance lower_bound_construction(long n) {
  if (n < 4) throw Error(errc::invalid_argument, "construction needs N >= 4");
  std::vector<Rational> ab, c;
  ab.reserve(static_cast<std::size_t>(n));
  c.reserve(static_cast<std::size_t>(2 * n));
  for (long i = 1; i <= n; ++i) ab.emplace_back(i);
  for (long i = 1; i <= 2 * n; ++i) c.emplace_back(i);
  Instance inst;
  inst.f = exactq::parse_poly("(x-y)^2 + x - z");
  inst.grid.a = RatSet(ab);
  inst.grid.b = RatSet(ab);
  inst.grid.c = RatSet(c);
  return inst;
}

}  // namespace eszlab::eszcount
