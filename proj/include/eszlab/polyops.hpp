#pragma once

#include <optional>
#include <utility>
#include <vector>

#include "eszlab/poly.hpp"

namespace eszlab::exactq {

// Quotient/remainder of univariate division over Q (g nonzero).
std::pair<UniPoly, UniPoly> divmod_uni(const UniPoly& f, const UniPoly& g);

// Monic greatest common divisor over Q; errors when both inputs are zero.
UniPoly gcd_uni(const UniPoly& f, const UniPoly& g);

// Sylvester resultant of two univariate polynomials of positive degree
// (f-rows first, then g-rows).
Rational resultant_uni(const UniPoly& f, const UniPoly& g);

// Sylvester resultant with respect to v; coefficients may involve the other
// variables. Both arguments need positive degree in v.
Poly resultant_elim(const Poly& f, const Poly& g, Var v);

// disc(f) = (-1)^(d(d-1)/2) * Res_v(f, df/dv) / lead_v(f), d = deg_v(f) >= 1.
Poly discriminant_in(const Poly& f, Var v);
Rational discriminant_uni(const UniPoly& f);

// true iff gcd(f, f') = 1; errors on the zero polynomial.
bool is_squarefree(const UniPoly& f);

// All rational roots of nonzero f, sorted ascending. Integer clearing plus
// the rational root theorem over the divisors of the constant and leading
// coefficients, each candidate verified by exact evaluation. Returns nullopt
// when either coefficient exceeds bit_threshold bits (callers fall back to
// scanning their candidate sets).
std::optional<std::vector<Rational>> rational_roots_bounded(const UniPoly& f,
                                                            unsigned bit_threshold = 64);

// Same, but throws errc::budget_exceeded instead of refusing.
std::vector<Rational> rational_roots(const UniPoly& f);

// Exact multivariate division: a / b when the division leaves no remainder.
std::optional<Poly> divide_exact(const Poly& a, const Poly& b);

}  // namespace eszlab::exactq
