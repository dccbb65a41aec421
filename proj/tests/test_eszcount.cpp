#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include <random>
#include <set>

#include "eszlab/eszcount.hpp"
#include "eszlab/parse.hpp"

using namespace eszlab;
using namespace eszlab::eszcount;
using exactq::parse_poly;

namespace {

Poly P(const char* s) { return parse_poly(s); }
Rational Q(long n, long d = 1) { return Rational(n, d); }

RatSet ints(std::initializer_list<long> xs) {
  std::vector<Rational> v;
  for (long x : xs) v.emplace_back(x);
  return RatSet(std::move(v));
}

RatSet range1(long n) {
  std::vector<Rational> v;
  for (long i = 1; i <= n; ++i) v.emplace_back(i);
  return RatSet(std::move(v));
}

Grid grid3(RatSet a, RatSet b, RatSet c) { return Grid{std::move(a), std::move(b), std::move(c)}; }

Poly random_poly(std::mt19937_64& rng, int max_deg, int terms) {
  std::uniform_int_distribution<int> ed(0, max_deg);
  std::uniform_int_distribution<long> cd(-9, 9);
  Poly p;
  for (int t = 0; t < terms; ++t) {
    exactq::Monomial m{ed(rng), ed(rng), ed(rng)};
    if (m[0] + m[1] + m[2] > max_deg) continue;
    p += Poly::monomial(Rational(cd(rng)), m);
  }
  return p;
}

RatSet random_set(std::mt19937_64& rng, std::size_t size, long lo, long hi, long dmax) {
  std::uniform_int_distribution<long> nd(lo, hi), dd(1, dmax);
  std::vector<Rational> v;
  while (v.size() < size) v.push_back(Rational(nd(rng), dd(rng)));
  return RatSet(std::move(v));
}

}  // namespace

TEST_CASE("oracle count on pinned instances") {
  CHECK(count_zeros_oracle(P("x+y+z"), grid3(ints({0}), ints({0}), ints({0}))) == 1);
  CHECK(count_zeros_oracle(P("(x-y)^2+x-z"), grid3(ints({1, 2, 3}), ints({1, 2, 3}), range1(5))) ==
        8);
  CHECK(count_zeros_oracle(P("x+y+z"), grid3(RatSet(), ints({0}), ints({0}))) == 0);
}

TEST_CASE("fast count matches oracle and reports vanishing fibers") {
  const Grid g = grid3(ints({1, 2, 3}), ints({1, 2, 3}), range1(5));
  const auto fc = count_zeros_fast(P("(x-y)^2+x-z"), g);
  CHECK(fc.count == 8);
  CHECK(fc.identically_zero_pairs == 0);

  const auto fz = count_zeros_fast(P("(x-y)*z"), grid3(ints({1, 2}), ints({1, 2}), ints({5})));
  CHECK(fz.count == 2);
  CHECK(fz.identically_zero_pairs == 2);

  const auto f1 = count_zeros_fast(P("z^2-x-y"), grid3(ints({0}), ints({0}), ints({0})));
  CHECK(f1.count == 1);
  CHECK(f1.identically_zero_pairs == 0);
}

TEST_CASE("differential: fast vs oracle on random instances") {
  std::mt19937_64 rng(2024);
  std::uniform_int_distribution<int> size_d(1, 8);
  for (int i = 0; i < 250; ++i) {
    const Grid g = grid3(random_set(rng, size_d(rng), -9, 9, 2), random_set(rng, size_d(rng), -9, 9, 2),
                         random_set(rng, size_d(rng), -9, 9, 2));
    const Poly f = random_poly(rng, 4, 5);
    const auto fast = count_zeros_fast(f, g);
    CHECK(fast.count == count_zeros_oracle(f, g));
    CHECK(fast.identically_zero_pairs == compute_lf(f, g.a, g.b));
  }
}

TEST_CASE("trivial lower bound for graph surfaces") {
  // f(x,y) - z vanishes on (a, b, f(a,b)); count >= |A||B| when C covers the image.
  std::mt19937_64 rng(77);
  for (int i = 0; i < 20; ++i) {
    Poly f2 = random_poly(rng, 3, 4);
    f2 = eval_partial(f2, {{Var::z, Q(1)}});  // force f to involve only x, y
    const RatSet a = random_set(rng, 4, -5, 5, 1), b = random_set(rng, 4, -5, 5, 1);
    std::vector<Rational> image;
    for (const auto& x : a.elems())
      for (const auto& y : b.elems()) image.push_back(exactq::eval(f2, x, y, Q(0)));
    const Grid g = grid3(a, b, RatSet(image));
    const Poly f = f2 - Poly::variable(Var::z);
    CHECK(count_zeros_oracle(f, g) >= static_cast<long long>(a.size() * b.size()));
  }
}

TEST_CASE("compute_lf") {
  CHECK(compute_lf(P("(x-y)*z"), ints({1, 2}), ints({1, 2})) == 2);
  CHECK(compute_lf(P("z^2-x-y"), ints({1, 2, 3}), ints({1, 2, 3})) == 0);  // monic in z
  CHECK(compute_lf(P("x-y"), ints({1, 2}), ints({2, 3})) == 1);
}

TEST_CASE("verify_decomposition") {
  const auto dec = verify_decomposition(P("z^2-x-y"), P("z"), P("x+y"));
  CHECK(dec.d_p == 1);
  CHECK(dec.s == 5);
  CHECK(dec.d == 2);

  CHECK_THROWS_AS(verify_decomposition(P("z^2-x-y"), P("z"), P("x-y")), Error);
  try {
    verify_decomposition(P("z^2-x-y"), P("z"), P("x-y"));
  } catch (const Error& e) {
    CHECK(e.code() == errc::decomposition_identity);
  }
  try {
    verify_decomposition(P("z^2-x-y*z"), P("z"), P("x+y*z-2*y*z"));
  } catch (const Error& e) {
    CHECK(e.code() == errc::decomposition_has_z);
  }
  // q, p free of z makes F = q^2 - p z-independent
  try {
    verify_decomposition(P("y^2-x"), P("y"), P("x"));
  } catch (const Error& e) {
    CHECK(e.code() == errc::decomposition_no_z_dep);
  }
  try {
    verify_decomposition(P("z^2-x"), P("z"), P("x"));
  } catch (const Error& e) {
    CHECK(e.code() == errc::decomposition_degree);
  }
}

TEST_CASE("s_parameter") {
  CHECK(s_parameter(1) == 5);
  CHECK(s_parameter(2) == 3);
  CHECK(s_parameter(5) == 1);
  CHECK_THROWS_AS(s_parameter(0), Error);
  for (int dp = 1; dp <= 10; ++dp) {
    const int s = s_parameter(dp);
    CHECK(s * dp >= 5);
    CHECK((s - 1) * dp < 5);
  }
}

TEST_CASE("repeated_root_check") {
  CHECK(repeated_root_check(P("x+y"), ints({1, 2, 3})).empty());
  CHECK(repeated_root_check(P("y^2"), ints({1, 2})) == std::vector<Rational>{Q(1), Q(2)});
  // degree drop to 0 and vanishing fibers are offenders too
  CHECK(repeated_root_check(P("x*y^2 + 1"), ints({0, 1})) == std::vector<Rational>{Q(0)});
  CHECK(repeated_root_check(P("x*y"), ints({0, 1})) == std::vector<Rational>{Q(0)});
}

TEST_CASE("common_root_pairs") {
  CHECK(common_root_pairs(P("x+y"), ints({1, 2, 3})).pairs.empty());

  const auto touching = common_root_pairs(P("y^2-x^2"), ints({-1, 1, 2}));
  REQUIRE(touching.pairs.size() == 1);
  CHECK(touching.pairs[0] == std::pair<Rational, Rational>(Q(-1), Q(1)));

  // Degenerate fibers (leading y-coefficient vanishing) go to the side report.
  const auto degen = common_root_pairs(P("x*y^2 + y"), ints({0, 1}));
  CHECK(degen.degenerate == std::vector<Rational>{Q(0)});
}

TEST_CASE("m_set_count") {
  CHECK(m_set_count(P("x+y"), ints({1, 2, 3, 4}), 3) == 0);
  CHECK(m_set_count(P("y^2-x^2"), ints({-1, 1, 2}), 2) == 2);
  CHECK(m_set_count(P("y^2-x^2"), ints({-1, 1, 2, 3}), 3) == 12);
  CHECK_THROWS_AS(m_set_count(P("x+y"), ints({1}), 1), Error);
  CHECK_THROWS_AS(m_set_count(P("x+y"), range1(100), 5), Error);  // budget: 100^5 > 1e7
  try {
    m_set_count(P("x+y"), range1(100), 5);
  } catch (const Error& e) {
    CHECK(e.code() == errc::budget_exceeded);
  }

  // Brute-force cross-check on small instances.
  std::mt19937_64 rng(3);
  for (int trial = 0; trial < 20; ++trial) {
    const RatSet a = random_set(rng, 5, -3, 3, 1);
    const Poly p = P("y^2-x^2");
    const auto rel = common_root_pairs(p, a);
    auto related = [&](const Rational& u, const Rational& v) {
      for (const auto& pr : rel.pairs)
        if ((pr.first == u && pr.second == v) || (pr.first == v && pr.second == u)) return true;
      return false;
    };
    const int s = 3;
    long brute = 0;
    const auto& e = a.elems();
    for (std::size_t i = 0; i < e.size(); ++i)
      for (std::size_t j = 0; j < e.size(); ++j)
        for (std::size_t k = 0; k < e.size(); ++k) {
          if (i == j || j == k || i == k) continue;
          if (related(e[i], e[j]) || related(e[j], e[k]) || related(e[i], e[k])) ++brute;
        }
    CHECK(m_set_count(p, a, s) == BigInt(brute));
  }
}

TEST_CASE("m_set_bound") {
  CHECK(m_set_bound(4, 7, 3) == 12 * 49);
  CHECK(m_set_bound(4, 7, 2) == 4 * 7);
  CHECK(m_set_bound(0, 7, 4) == 0);
}

TEST_CASE("solution graph") {
  const auto g =
      build_solution_graph(P("(x-y)^2+x-z"), grid3(ints({1, 2, 3}), ints({1, 2, 3}), range1(5)));
  CHECK(g.edge_count() == 8);
  for (const auto& [e, w] : g.weights) CHECK(w == 1);
  CHECK(g.weight_sum() == BigInt(8));

  const auto empty_c =
      build_solution_graph(P("(x-y)^2+x-z"), grid3(ints({1, 2}), ints({1, 2}), RatSet()));
  CHECK(empty_c.edge_count() == 0);

  const auto g2 =
      build_solution_graph(P("z^2-x-y"), grid3(ints({0, 1}), ints({0, 1}), ints({-1, 0, 1})));
  CHECK(g2.edge_count() == 3);
  CHECK(g2.weight_sum() == BigInt(5));

  // weights are <= d or exactly |C|
  const auto g3 = build_solution_graph(P("(x-y)*z"), grid3(ints({1, 2}), ints({1, 2}), range1(7)));
  const int d = P("(x-y)*z").total_degree();
  for (const auto& [e, w] : g3.weights) CHECK((w <= d || w == 7));

  // weight sum equals the zero count over A' x B x C
  std::mt19937_64 rng(8);
  for (int i = 0; i < 20; ++i) {
    const Poly f = random_poly(rng, 3, 4);
    const Grid gd = grid3(random_set(rng, 4, -4, 4, 1), random_set(rng, 4, -4, 4, 1),
                          random_set(rng, 4, -4, 4, 1));
    const auto sg = build_solution_graph(f, gd);
    CHECK(sg.weight_sum() == BigInt(static_cast<long>(count_zeros_oracle(f, gd))));
  }
}

TEST_CASE("solution graph excludes the leading-drop set with a decomposition") {
  // p = x*y^2 + 1: leading y-coefficient x vanishes at a = 0.
  const Poly p = P("x*y^2+1");
  const Poly q = P("z");
  const Poly f = q * q - p;
  const auto dec = verify_decomposition(f, q, p);
  const auto g = build_solution_graph(f, grid3(ints({0, 1, 2}), ints({1}), ints({1, 2, 3})), dec);
  CHECK(g.excluded == std::vector<Rational>{Q(0)});
  CHECK(g.left == std::vector<Rational>{Q(1), Q(2)});
  // weight sum counts over A' x B x C, i.e. with the excluded set removed
  const Grid pruned = grid3(ints({1, 2}), ints({1}), ints({1, 2, 3}));
  CHECK(g.weight_sum() == BigInt(static_cast<long>(count_zeros_oracle(f, pruned))));
}

TEST_CASE("common neighborhood sums") {
  const auto g2 =
      build_solution_graph(P("z^2-x-y"), grid3(ints({0, 1}), ints({0, 1}), ints({-1, 0, 1})));
  const auto s1 = common_neighborhood_sum(g2, 1);
  CHECK(s1.s == BigInt(static_cast<long>(g2.edge_count())));

  // Empty graph.
  const auto ge = build_solution_graph(P("x+y+z"), grid3(RatSet(), RatSet(), RatSet()));
  const auto se = common_neighborhood_sum(ge, 2);
  CHECK(se.s == 0);
  CHECK(se.s1 == 0);
  CHECK(se.s2 == 0);
  CHECK(se.s3 == 0);

  // s = 2 with p supplied: brute-force the definition.
  const auto sums = common_neighborhood_sum(g2, 2, P("x+y"));
  CHECK(sums.s2 == 0);  // x+y fibers never share roots
  BigInt brute(0);
  const auto hoods = g2.left_neighborhoods();
  // S = sum over ordered pairs (a1, a2) of |N(a1) cap N(a2)|, i.e. sum_b deg(b)^2.
  for (const auto& h : hoods) brute += BigInt(h.size()) * BigInt(h.size());
  CHECK(sums.s == brute);
  CHECK(sums.s == sums.s1 + sums.s2 + sums.s3);

  // Hoelder: |E|^s <= |B|^(s-1) * S.
  std::mt19937_64 rng(15);
  for (int i = 0; i < 15; ++i) {
    const Poly f = random_poly(rng, 3, 4);
    const Grid gd = grid3(random_set(rng, 5, -4, 4, 1), random_set(rng, 5, -4, 4, 1),
                          random_set(rng, 5, -4, 4, 1));
    const auto sg = build_solution_graph(f, gd);
    for (int s = 1; s <= 3; ++s) {
      const auto ns = common_neighborhood_sum(sg, s);
      BigInt lhs, rhs;
      mpz_ui_pow_ui(lhs.get_mpz_t(), static_cast<unsigned long>(sg.edge_count()),
                    static_cast<unsigned long>(s));
      mpz_ui_pow_ui(rhs.get_mpz_t(), static_cast<unsigned long>(sg.right.size()),
                    static_cast<unsigned long>(s - 1));
      CHECK(lhs <= rhs * ns.s);
      CHECK(ns.s == ns.s1 + ns.s2 + ns.s3);
    }
  }
}

TEST_CASE("bound terms") {
  const auto dec = verify_decomposition(P("z^2-x-y"), P("z"), P("x+y"));
  Grid g;
  {
    std::vector<Rational> v;
    for (long i = 1; i <= 1000; ++i) v.emplace_back(i);
    g.a = RatSet(v);
    g.b = RatSet(v);
    g.c = RatSet(v);
  }
  // s = 3 for this check comes from a d_p = 2 decomposition.
  const auto dec3 = verify_decomposition(P("z^2-x-y^2"), P("z"), P("x+y^2"));
  const auto t = bound_terms(dec3, g, BigInt(0), 0);
  CHECK(t.a_bs == doctest::Approx(1e5).epsilon(1e-9));
  CHECK(t.as_b == doctest::Approx(1e5).epsilon(1e-9));
  CHECK(t.m_b == 0.0);
  CHECK(t.lf_c == 0.0);

  // |A|=|B|=n, s=5 -> 2 n^{9/5}
  Grid g2;
  {
    std::vector<Rational> v;
    for (long i = 1; i <= 100; ++i) v.emplace_back(i);
    g2.a = RatSet(v);
    g2.b = RatSet(v);
  }
  const auto t2 = bound_terms(dec, g2, BigInt(0), 0);
  CHECK(t2.rhs_without_constant == doctest::Approx(2 * std::pow(100.0, 1.8)).epsilon(1e-9));

  Grid g3;
  {
    std::vector<Rational> v;
    for (long i = 1; i <= 7; ++i) v.emplace_back(i);
    g3.c = RatSet(v);
  }
  const auto t3 = bound_terms(dec, g3, BigInt(0), 2);
  CHECK(t3.lf_c == doctest::Approx(14.0));
}

TEST_CASE("lower bound construction") {
  const auto inst = lower_bound_construction(4);
  CHECK(inst.f == P("(x-y)^2 + x - z"));
  CHECK(inst.grid.a.size() == 4);
  CHECK(inst.grid.c.size() == 8);
  const long long n4 = count_zeros_oracle(inst.f, inst.grid);
  CHECK(n4 == 14);
  CHECK(n4 >= 8);  // N^{3/2} = 8

  const auto inst100 = lower_bound_construction(100);
  const auto fast = count_zeros_fast(inst100.f, inst100.grid);
  CHECK(fast.count >= 1000);
  CHECK_THROWS_AS(lower_bound_construction(3), Error);
}

TEST_CASE("S2 equals m_set_count times |B| on complete bipartite graphs") {
  // The zero polynomial makes every fiber vanish identically, so the
  // solution graph is complete bipartite whenever C is nonempty.
  std::mt19937_64 rng(47);
  for (int trial = 0; trial < 10; ++trial) {
    const RatSet a = random_set(rng, 4, -3, 3, 1);
    const RatSet b = random_set(rng, 3, -3, 3, 1);
    const Grid g = grid3(a, b, ints({1, 2}));
    const auto sg = build_solution_graph(Poly(), g);
    CHECK(sg.edge_count() == static_cast<long long>(a.size() * b.size()));

    const Poly p = P("y^2-x^2");
    for (int s = 2; s <= 3; ++s) {
      const auto sums = common_neighborhood_sum(sg, s, p);
      CHECK(sums.s2 == m_set_count(p, a, s) * BigInt(static_cast<long>(b.size())));
    }
  }
}

TEST_CASE("neighborhood sums against a tuple-enumeration oracle") {
  std::mt19937_64 rng(51);
  for (int trial = 0; trial < 15; ++trial) {
    const Poly f = random_poly(rng, 3, 4);
    const Grid gd = grid3(random_set(rng, 4, -3, 3, 1), random_set(rng, 4, -3, 3, 1),
                          random_set(rng, 4, -3, 3, 1));
    const Poly p = P("y^2-x^2");
    const auto sg = build_solution_graph(f, gd);

    // adjacency as sets of right indices per left vertex
    std::vector<std::set<std::size_t>> nbr(sg.left.size());
    for (const auto& [e, w] : sg.weights) nbr[e.first].insert(e.second);
    const auto cr = common_root_pairs(p, RatSet(sg.left));
    auto related = [&](std::size_t i, std::size_t j) {
      for (const auto& pr : cr.pairs)
        if ((pr.first == sg.left[i] && pr.second == sg.left[j]) ||
            (pr.first == sg.left[j] && pr.second == sg.left[i]))
          return true;
      return false;
    };

    for (int s = 1; s <= 3; ++s) {
      long S = 0, S1 = 0, S2 = 0, S3 = 0;
      const std::size_t n = sg.left.size();
      std::vector<std::size_t> tuple(static_cast<std::size_t>(s), 0);
      // odometer over all ordered tuples in left^s
      for (;;) {
        std::set<std::size_t> common = nbr.empty() ? std::set<std::size_t>{} : nbr[tuple[0]];
        for (int i = 1; i < s; ++i) {
          std::set<std::size_t> next;
          for (std::size_t b : common)
            if (nbr[tuple[static_cast<std::size_t>(i)]].count(b)) next.insert(b);
          common = std::move(next);
        }
        const long size = static_cast<long>(common.size());
        S += size;
        bool repeated = false, has_pair = false;
        for (int i = 0; i < s && !repeated; ++i)
          for (int j = i + 1; j < s; ++j)
            if (tuple[static_cast<std::size_t>(i)] == tuple[static_cast<std::size_t>(j)])
              repeated = true;
        for (int i = 0; i < s && !has_pair && !repeated; ++i)
          for (int j = i + 1; j < s; ++j)
            if (related(tuple[static_cast<std::size_t>(i)], tuple[static_cast<std::size_t>(j)]))
              has_pair = true;
        (repeated ? S3 : has_pair ? S2 : S1) += size;

        int pos = s - 1;
        while (pos >= 0 && ++tuple[static_cast<std::size_t>(pos)] == n) {
          tuple[static_cast<std::size_t>(pos)] = 0;
          --pos;
        }
        if (pos < 0 || n == 0) break;
      }

      const auto sums = common_neighborhood_sum(sg, s, p);
      CHECK(sums.s == BigInt(S));
      CHECK(sums.s1 == BigInt(S1));
      CHECK(sums.s2 == BigInt(S2));
      CHECK(sums.s3 == BigInt(S3));
    }
  }
}
