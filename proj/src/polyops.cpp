#include "eszlab/polyops.hpp"

#include <algorithm>
#include <numeric>
#include <unordered_map>

namespace eszlab::exactq {

namespace {

Rational det_rational(std::vector<std::vector<Rational>> m) {
  const std::size_t n = m.size();
  int sign = 1;
  for (std::size_t col = 0; col < n; ++col) {
    std::size_t pivot = col;
    while (pivot < n && m[pivot][col].is_zero()) ++pivot;
    if (pivot == n) return Rational(0);
    if (pivot != col) {
      std::swap(m[pivot], m[col]);
      sign = -sign;
    }
    for (std::size_t row = col + 1; row < n; ++row) {
      if (m[row][col].is_zero()) continue;
      const Rational factor = m[row][col] / m[col][col];
      for (std::size_t k = col; k < n; ++k) m[row][k] -= factor * m[col][k];
    }
  }
  Rational det(sign);
  for (std::size_t i = 0; i < n; ++i) det *= m[i][i];
  return det;
}

// Laplace expansion over rows with memoization on the used-column mask.
// Exponential in the dimension; the elimination work in this project only
// ever builds small matrices.
Poly det_poly(const std::vector<std::vector<Poly>>& m) {
  const std::size_t n = m.size();
  if (n == 0) return Poly(Rational(1));
  if (n > 20)
    throw Error(errc::invalid_argument, "resultant matrix too large for dense expansion");
  std::unordered_map<std::uint32_t, Poly> memo;
  auto rec = [&](auto&& self, std::uint32_t mask) -> Poly {
    const std::size_t row = static_cast<std::size_t>(__builtin_popcount(mask));
    if (row == n) return Poly(Rational(1));
    auto it = memo.find(mask);
    if (it != memo.end()) return it->second;
    Poly acc;
    int sign = 1;
    for (std::size_t col = 0; col < n; ++col) {
      if (mask & (1u << col)) continue;
      if (!m[row][col].is_zero()) {
        Poly sub = self(self, mask | (1u << col));
        acc += sign > 0 ? m[row][col] * sub : -(m[row][col] * sub);
      }
      sign = -sign;
    }
    memo.emplace(mask, acc);
    return acc;
  };
  return rec(rec, 0);
}

// Sylvester matrix with f-rows first. Entries of type T, coefficients given
// lowest power first.
template <typename T>
std::vector<std::vector<T>> sylvester(const std::vector<T>& fc, const std::vector<T>& gc,
                                      const T& zero) {
  const std::size_t m = fc.size() - 1, n = gc.size() - 1;
  std::vector<std::vector<T>> mat(m + n, std::vector<T>(m + n, zero));
  for (std::size_t i = 0; i < n; ++i)
    for (std::size_t k = 0; k <= m; ++k) mat[i][i + k] = fc[m - k];
  for (std::size_t j = 0; j < m; ++j)
    for (std::size_t k = 0; k <= n; ++k) mat[n + j][j + k] = gc[n - k];
  return mat;
}

std::vector<BigInt> divisors_of(const BigInt& n_in) {
  std::vector<BigInt> out;
  BigInt n = ::abs(n_in);
  if (n == 0) return out;
  if (mpz_fits_ulong_p(n.get_mpz_t())) {
    const unsigned long v = mpz_get_ui(n.get_mpz_t());
    for (unsigned long d = 1; d <= v / d; ++d) {
      if (v % d) continue;
      out.emplace_back(d);
      if (d != v / d) out.emplace_back(v / d);
    }
  } else {
    // Only reachable when the caller raised the bit threshold past 64.
    for (BigInt d = 1; d * d <= n; ++d) {
      if (n % d != 0) continue;
      out.push_back(d);
      if (d * d != n) out.push_back(n / d);
    }
  }
  return out;
}

}  // namespace

std::pair<UniPoly, UniPoly> divmod_uni(const UniPoly& f, const UniPoly& g) {
  if (g.is_zero()) throw Error(errc::division_by_zero, "polynomial division by zero");
  UniPoly r = f;
  std::vector<Rational> q(
      f.degree() >= g.degree() ? static_cast<std::size_t>(f.degree() - g.degree()) + 1 : 0,
      Rational(0));
  while (!r.is_zero() && r.degree() >= g.degree()) {
    const int shift = r.degree() - g.degree();
    const Rational c = r.leading() / g.leading();
    q[static_cast<std::size_t>(shift)] = c;
    std::vector<Rational> sub(static_cast<std::size_t>(shift), Rational(0));
    sub.push_back(c);
    r = r - UniPoly(g.var(), sub) * g;
  }
  return {UniPoly(f.var(), std::move(q)), r};
}

UniPoly gcd_uni(const UniPoly& f, const UniPoly& g) {
  if (f.is_zero() && g.is_zero())
    throw Error(errc::zero_polynomial, "gcd of two zero polynomials");
  UniPoly a = f, b = g;
  while (!b.is_zero()) {
    UniPoly r = divmod_uni(a, b).second;
    a = b;
    b = r;
  }
  return a.monic();
}

Rational resultant_uni(const UniPoly& f, const UniPoly& g) {
  if (f.degree() < 1 || g.degree() < 1)
    throw Error(errc::degree, "resultant needs positive degree in the eliminated variable");
  return det_rational(sylvester<Rational>(f.coeffs(), g.coeffs(), Rational(0)));
}

Poly resultant_elim(const Poly& f, const Poly& g, Var v) {
  if (f.degree_in(v) < 1 || g.degree_in(v) < 1)
    throw Error(errc::degree, "resultant needs positive degree in the eliminated variable");
  const auto fc = coefficients_in(f, v);
  const auto gc = coefficients_in(g, v);
  const bool constant_coeffs =
      std::all_of(fc.begin(), fc.end(), [](const Poly& p) { return p.is_constant(); }) &&
      std::all_of(gc.begin(), gc.end(), [](const Poly& p) { return p.is_constant(); });
  if (constant_coeffs) {
    std::vector<Rational> fr, gr;
    for (const auto& p : fc) fr.push_back(p.constant_value());
    for (const auto& p : gc) gr.push_back(p.constant_value());
    return Poly(det_rational(sylvester<Rational>(fr, gr, Rational(0))));
  }
  return det_poly(sylvester<Poly>(fc, gc, Poly()));
}

Rational discriminant_uni(const UniPoly& f) {
  const int d = f.degree();
  if (d < 1) throw Error(errc::degree, "discriminant needs degree >= 1");
  if (d == 1) return Rational(1);
  const Rational res = resultant_uni(f, f.derivative());
  const int sign = (static_cast<long>(d) * (d - 1) / 2) % 2 == 0 ? 1 : -1;
  return Rational(sign) * res / f.leading();
}

Poly discriminant_in(const Poly& f, Var v) {
  const int d = f.degree_in(v);
  if (d < 1) throw Error(errc::degree, "discriminant needs degree >= 1");
  bool univariate = true;
  for (Var w : {Var::x, Var::y, Var::z})
    if (w != v && f.depends_on(w)) univariate = false;
  if (univariate) return Poly(discriminant_uni(to_unipoly(f, v)));
  if (d == 1) return Poly(Rational(1));
  const Poly res = resultant_elim(f, derivative(f, v), v);
  const int sign = (static_cast<long>(d) * (d - 1) / 2) % 2 == 0 ? 1 : -1;
  const Poly lead = coefficients_in(f, v).back();
  if (lead.is_constant()) return (Rational(sign) / lead.constant_value()) * res;
  auto q = divide_exact(res, lead);
  if (!q) throw Error(errc::invalid_argument, "leading coefficient does not divide resultant");
  return Rational(sign) * *q;
}

bool is_squarefree(const UniPoly& f) {
  if (f.is_zero()) throw Error(errc::zero_polynomial, "squarefree test on zero polynomial");
  if (f.degree() < 1) return true;
  return gcd_uni(f, f.derivative()).degree() == 0;
}

std::optional<std::vector<Rational>> rational_roots_bounded(const UniPoly& f,
                                                            unsigned bit_threshold) {
  if (f.is_zero()) throw Error(errc::zero_polynomial, "root search on zero polynomial");

  // Clear denominators and content to get a primitive integer polynomial.
  BigInt lcm_den(1);
  for (const auto& c : f.coeffs())
    mpz_lcm(lcm_den.get_mpz_t(), lcm_den.get_mpz_t(), c.den().get_mpz_t());
  std::vector<BigInt> a;
  a.reserve(f.coeffs().size());
  for (const auto& c : f.coeffs()) a.push_back(c.num() * (lcm_den / c.den()));
  BigInt content(0);
  for (const auto& v : a) mpz_gcd(content.get_mpz_t(), content.get_mpz_t(), v.get_mpz_t());
  if (content > 1)
    for (auto& v : a) v /= content;

  std::vector<Rational> roots;
  std::size_t shift = 0;
  while (shift < a.size() && a[shift] == 0) ++shift;
  if (shift > 0) roots.push_back(Rational(0));

  const std::size_t deg = a.size() - 1 - shift;
  if (deg == 0) {
    std::sort(roots.begin(), roots.end());
    return roots;
  }
  const BigInt& a0 = a[shift];
  const BigInt& lead = a.back();
  if (deg == 1) {
    roots.push_back(Rational(-a0, lead));
    std::sort(roots.begin(), roots.end());
    return roots;
  }
  if (mpz_sizeinbase(a0.get_mpz_t(), 2) > bit_threshold ||
      mpz_sizeinbase(lead.get_mpz_t(), 2) > bit_threshold)
    return std::nullopt;

  std::vector<Rational> shifted;
  shifted.reserve(deg + 1);
  for (std::size_t i = shift; i < a.size(); ++i) shifted.emplace_back(a[i]);
  const UniPoly g(f.var(), std::move(shifted));

  const auto ps = divisors_of(a0);
  const auto qs = divisors_of(lead);
  for (const auto& p : ps) {
    for (const auto& q : qs) {
      BigInt common;
      mpz_gcd(common.get_mpz_t(), p.get_mpz_t(), q.get_mpz_t());
      if (common != 1) continue;
      for (int sign : {1, -1}) {
        const Rational cand(sign > 0 ? p : -p, q);
        if (g(cand).is_zero()) roots.push_back(cand);
      }
    }
  }
  std::sort(roots.begin(), roots.end());
  roots.erase(std::unique(roots.begin(), roots.end()), roots.end());
  return roots;
}

std::vector<Rational> rational_roots(const UniPoly& f) {
  auto r = rational_roots_bounded(f);
  if (!r)
    throw Error(errc::budget_exceeded,
                "coefficients exceed the factoring bit threshold; use the fallback scan");
  return *r;
}

std::optional<Poly> divide_exact(const Poly& a, const Poly& b) {
  if (b.is_zero()) throw Error(errc::division_by_zero, "polynomial division by zero");
  Poly rem = a, quot;
  const auto& bt = *b.terms().rbegin();  // lex-leading term of the divisor
  while (!rem.is_zero()) {
    const auto& rt = *rem.terms().rbegin();
    Monomial q;
    for (int i = 0; i < 3; ++i) {
      q[i] = rt.first[i] - bt.first[i];
      if (q[i] < 0) return std::nullopt;
    }
    const Poly t = Poly::monomial(rt.second / bt.second, q);
    quot += t;
    rem -= t * b;
  }
  return quot;
}

}  // namespace eszlab::exactq
