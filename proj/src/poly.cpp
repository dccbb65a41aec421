#include "eszlab/poly.hpp"

#include <algorithm>
#include <ostream>
#include <sstream>

namespace eszlab::exactq {

Poly Poly::variable(Var v, int exp) {
  Poly p;
  if (exp < 0) throw Error(errc::invalid_argument, "negative exponent");
  Monomial m{0, 0, 0};
  m[static_cast<int>(v)] = exp;
  p.terms_[m] = Rational(1);
  return p;
}

Poly Poly::monomial(const Rational& c, const Monomial& m) {
  Poly p;
  if (!c.is_zero()) p.terms_[m] = c;
  return p;
}

int Poly::degree_in(Var v) const {
  int d = 0;
  for (const auto& [m, c] : terms_) d = std::max(d, m[static_cast<int>(v)]);
  return d;
}

int Poly::total_degree() const {
  if (terms_.empty()) return -1;
  int d = 0;
  for (const auto& [m, c] : terms_) d = std::max(d, m[0] + m[1] + m[2]);
  return d;
}

std::vector<Var> Poly::variables() const {
  std::vector<Var> out;
  for (Var v : {Var::x, Var::y, Var::z})
    if (depends_on(v)) out.push_back(v);
  return out;
}

bool Poly::is_constant() const {
  return terms_.empty() || (terms_.size() == 1 && terms_.begin()->first == Monomial{0, 0, 0});
}

Rational Poly::constant_value() const {
  auto it = terms_.find({0, 0, 0});
  return it == terms_.end() ? Rational(0) : it->second;
}

void Poly::add_term(const Monomial& m, const Rational& c) {
  if (c.is_zero()) return;
  auto it = terms_.find(m);
  if (it == terms_.end()) {
    terms_[m] = c;
    return;
  }
  it->second += c;
  if (it->second.is_zero()) terms_.erase(it);
}

Poly Poly::operator-() const {
  Poly r;
  for (const auto& [m, c] : terms_) r.terms_[m] = -c;
  return r;
}

Poly operator+(const Poly& a, const Poly& b) {
  Poly r = a;
  for (const auto& [m, c] : b.terms_) r.add_term(m, c);
  return r;
}

Poly operator-(const Poly& a, const Poly& b) {
  Poly r = a;
  for (const auto& [m, c] : b.terms_) r.add_term(m, -c);
  return r;
}

Poly operator*(const Poly& a, const Poly& b) {
  Poly r;
  for (const auto& [ma, ca] : a.terms_)
    for (const auto& [mb, cb] : b.terms_)
      r.add_term({ma[0] + mb[0], ma[1] + mb[1], ma[2] + mb[2]}, ca * cb);
  return r;
}

Poly operator*(const Rational& c, const Poly& p) {
  Poly r;
  if (c.is_zero()) return r;
  for (const auto& [m, pc] : p.terms()) r.terms_[m] = c * pc;
  return r;
}

Poly pow(const Poly& base, unsigned exp) {
  Poly r(Rational(1));
  Poly b = base;
  while (exp) {
    if (exp & 1) r *= b;
    b *= b;
    exp >>= 1;
  }
  return r;
}

Poly eval_partial(const Poly& f, const std::map<Var, Rational>& assignments) {
  Poly r;
  for (const auto& [m, c] : f.terms()) {
    Rational coeff = c;
    Monomial rest = m;
    for (const auto& [v, value] : assignments) {
      const int i = static_cast<int>(v);
      if (rest[i] > 0) {
        coeff *= value.pow(rest[i]);
        rest[i] = 0;
      }
    }
    r += Poly::monomial(coeff, rest);
  }
  return r;
}

Rational eval(const Poly& f, const Rational& x, const Rational& y, const Rational& z) {
  // Power tables keep repeated monomial evaluation cheap.
  const int dx = f.degree_in(Var::x), dy = f.degree_in(Var::y), dz = f.degree_in(Var::z);
  std::vector<Rational> px(dx + 1, Rational(1)), py(dy + 1, Rational(1)), pz(dz + 1, Rational(1));
  for (int i = 1; i <= dx; ++i) px[i] = px[i - 1] * x;
  for (int i = 1; i <= dy; ++i) py[i] = py[i - 1] * y;
  for (int i = 1; i <= dz; ++i) pz[i] = pz[i - 1] * z;
  Rational acc(0);
  for (const auto& [m, c] : f.terms()) acc += c * px[m[0]] * py[m[1]] * pz[m[2]];
  return acc;
}

Poly derivative(const Poly& f, Var v) {
  const int i = static_cast<int>(v);
  Poly r;
  for (const auto& [m, c] : f.terms()) {
    if (m[i] == 0) continue;
    Monomial d = m;
    d[i] -= 1;
    r += Poly::monomial(Rational(m[i]) * c, d);
  }
  return r;
}

std::vector<Poly> coefficients_in(const Poly& f, Var v) {
  const int i = static_cast<int>(v);
  std::vector<Poly> out(static_cast<std::size_t>(f.degree_in(v)) + 1);
  for (const auto& [m, c] : f.terms()) {
    Monomial rest = m;
    const int e = rest[i];
    rest[i] = 0;
    out[e] += Poly::monomial(c, rest);
  }
  return out;
}

Poly substitute_squares(const Poly& f) {
  Poly r;
  for (const auto& [m, c] : f.terms()) r += Poly::monomial(c, {2 * m[0], 2 * m[1], 2 * m[2]});
  return r;
}

std::string Poly::str() const {
  if (terms_.empty()) return "0";
  // Highest total degree first, then reverse-lex, for a stable readable form
  // that re-parses under the expression grammar.
  std::vector<std::pair<Monomial, Rational>> ts(terms_.begin(), terms_.end());
  std::sort(ts.begin(), ts.end(), [](const auto& a, const auto& b) {
    const int da = a.first[0] + a.first[1] + a.first[2];
    const int db = b.first[0] + b.first[1] + b.first[2];
    if (da != db) return da > db;
    return a.first > b.first;
  });
  std::ostringstream os;
  bool first = true;
  for (const auto& [m, c] : ts) {
    const Rational mag = c.abs();
    bool lead_negative = false;
    if (first) {
      if (c.sign() < 0) {
        os << "-";
        lead_negative = true;  // "-x" is not in the grammar; emit "-1*x"
      }
      first = false;
    } else {
      os << (c.sign() < 0 ? " - " : " + ");
    }
    const bool is_const = (m == Monomial{0, 0, 0});
    std::vector<std::string> factors;
    if (mag != Rational(1) || is_const || lead_negative) factors.push_back(mag.str());
    for (Var v : {Var::x, Var::y, Var::z}) {
      const int e = m[static_cast<int>(v)];
      if (e == 1)
        factors.push_back(var_name(v));
      else if (e > 1)
        factors.push_back(std::string(var_name(v)) + "^" + std::to_string(e));
    }
    for (std::size_t i = 0; i < factors.size(); ++i) {
      if (i) os << "*";
      os << factors[i];
    }
  }
  return os.str();
}

Rational UniPoly::operator()(const Rational& t) const {
  Rational acc(0);
  for (auto it = c_.rbegin(); it != c_.rend(); ++it) acc = acc * t + *it;
  return acc;
}

UniPoly UniPoly::operator-() const {
  UniPoly r(var_);
  r.c_.reserve(c_.size());
  for (const auto& c : c_) r.c_.push_back(-c);
  return r;
}

UniPoly operator+(const UniPoly& a, const UniPoly& b) {
  UniPoly r(a.var_);
  r.c_.resize(std::max(a.c_.size(), b.c_.size()), Rational(0));
  for (std::size_t i = 0; i < a.c_.size(); ++i) r.c_[i] += a.c_[i];
  for (std::size_t i = 0; i < b.c_.size(); ++i) r.c_[i] += b.c_[i];
  r.trim();
  return r;
}

UniPoly operator-(const UniPoly& a, const UniPoly& b) { return a + (-b); }

UniPoly operator*(const UniPoly& a, const UniPoly& b) {
  UniPoly r(a.var_);
  if (a.is_zero() || b.is_zero()) return r;
  r.c_.assign(a.c_.size() + b.c_.size() - 1, Rational(0));
  for (std::size_t i = 0; i < a.c_.size(); ++i)
    for (std::size_t j = 0; j < b.c_.size(); ++j) r.c_[i + j] += a.c_[i] * b.c_[j];
  r.trim();
  return r;
}

UniPoly operator*(const Rational& s, const UniPoly& p) {
  UniPoly r(p.var_);
  if (s.is_zero()) return r;
  r.c_.reserve(p.c_.size());
  for (const auto& c : p.c_) r.c_.push_back(s * c);
  return r;
}

UniPoly UniPoly::derivative() const {
  UniPoly r(var_);
  for (std::size_t i = 1; i < c_.size(); ++i) r.c_.push_back(Rational(static_cast<long>(i)) * c_[i]);
  r.trim();
  return r;
}

UniPoly UniPoly::monic() const {
  if (is_zero()) return *this;
  return (Rational(1) / leading()) * *this;
}

std::string UniPoly::str() const { return to_poly(*this).str(); }

UniPoly to_unipoly(const Poly& f, Var v) {
  for (Var w : {Var::x, Var::y, Var::z})
    if (w != v && f.depends_on(w))
      throw Error(errc::invalid_argument,
                  std::string("polynomial is not univariate in ") + var_name(v));
  std::vector<Rational> cs(static_cast<std::size_t>(f.degree_in(v)) + 1, Rational(0));
  for (const auto& [m, c] : f.terms()) cs[m[static_cast<int>(v)]] = c;
  return UniPoly(v, std::move(cs));
}

Poly to_poly(const UniPoly& f) {
  Poly r;
  Monomial m{0, 0, 0};
  for (std::size_t i = 0; i < f.coeffs().size(); ++i) {
    m[static_cast<int>(f.var())] = static_cast<int>(i);
    r += Poly::monomial(f.coeffs()[i], m);
  }
  return r;
}

std::ostream& operator<<(std::ostream& os, const Poly& p) { return os << p.str(); }
std::ostream& operator<<(std::ostream& os, const UniPoly& p) { return os << p.str(); }

}  // namespace eszlab::exactq
