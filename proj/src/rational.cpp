#include "eszlab/rational.hpp"

#include <ostream>

namespace eszlab::exactq {

void Rational::canonicalize() {
  if (den_ == 0) throw Error(errc::division_by_zero, "division by zero");
  if (num_ == 0) {
    den_ = 1;
    return;
  }
  if (den_ < 0) {
    num_ = -num_;
    den_ = -den_;
  }
  BigInt g;
  mpz_gcd(g.get_mpz_t(), num_.get_mpz_t(), den_.get_mpz_t());
  if (g != 1) {
    num_ /= g;
    den_ /= g;
  }
}

Rational Rational::pow(long e) const {
  if (e == 0) return Rational(1);
  bool invert = e < 0;
  unsigned long k = invert ? static_cast<unsigned long>(-e) : static_cast<unsigned long>(e);
  if (invert && num_ == 0) throw Error(errc::division_by_zero, "zero to a negative power");
  BigInt n, d;
  mpz_pow_ui(n.get_mpz_t(), num_.get_mpz_t(), k);
  mpz_pow_ui(d.get_mpz_t(), den_.get_mpz_t(), k);
  // num/den reduced implies num^k/den^k reduced; sign already lives in n.
  return invert ? Rational(d, n) : Rational(n, d);
}

std::string Rational::str() const {
  if (den_ == 1) return num_.get_str();
  return num_.get_str() + "/" + den_.get_str();
}

std::size_t Rational::hash() const {
  auto mix = [](std::size_t h, std::size_t v) {
    h ^= v + 0x9e3779b97f4a7c15ULL + (h << 6) + (h >> 2);
    return h;
  };
  auto hash_mpz = [&](const BigInt& z) {
    std::size_t h = static_cast<std::size_t>(mpz_sgn(z.get_mpz_t()) + 2);
    const std::size_t limbs = mpz_size(z.get_mpz_t());
    for (std::size_t i = 0; i < limbs; ++i)
      h = mix(h, static_cast<std::size_t>(mpz_getlimbn(z.get_mpz_t(), i)));
    return h;
  };
  return mix(hash_mpz(num_), hash_mpz(den_));
}

std::optional<Rational> rational_sqrt(const Rational& r) {
  if (r.sign() < 0) return std::nullopt;
  if (r.is_zero()) return Rational(0);
  if (!mpz_perfect_square_p(r.num().get_mpz_t()) || !mpz_perfect_square_p(r.den().get_mpz_t()))
    return std::nullopt;
  BigInt n, d;
  mpz_sqrt(n.get_mpz_t(), r.num().get_mpz_t());
  mpz_sqrt(d.get_mpz_t(), r.den().get_mpz_t());
  return Rational(n, d);
}

std::optional<Rational> rational_kth_root(const Rational& r, unsigned k) {
  if (k == 0) throw Error(errc::invalid_argument, "k-th root needs k >= 1");
  if (k == 1) return r;
  if (r.is_zero()) return Rational(0);
  if (r.sign() < 0 && k % 2 == 0) return std::nullopt;
  BigInt n, d;
  // mpz_root returns nonzero iff the root is exact.
  if (!mpz_root(n.get_mpz_t(), r.num().get_mpz_t(), k)) return std::nullopt;
  if (!mpz_root(d.get_mpz_t(), r.den().get_mpz_t(), k)) return std::nullopt;
  return Rational(n, d);
}

std::ostream& operator<<(std::ostream& os, const Rational& r) { return os << r.str(); }

}  // namespace eszlab::exactq
