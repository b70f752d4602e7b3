#include "circact/rational.hpp"

#include <cctype>
#include <limits>

namespace circact {

namespace {

constexpr long long kMax = std::numeric_limits<long long>::max();

bool fits_small(__int128 n, __int128 d) {
  // -kMax (not min) so negation never overflows.
  return n >= -static_cast<__int128>(kMax) && n <= kMax && d <= kMax;
}

}  // namespace

Rational Rational::make_reduced(i128 n, i128 d) {
  // Callers guarantee d > 0.
  if (n == 0) return Rational();
  u128 un = n < 0 ? u128(-n) : u128(n);
  u128 g = gcd_u128(un, u128(d));
  n /= i128(g);
  d /= i128(g);
  if (fits_small(n, d)) {
    Rational r;
    r.n_ = static_cast<long long>(n);
    r.d_ = static_cast<long long>(d);
    return r;
  }
  auto to_mpz = [](i128 v) {
    bool neg = v < 0;
    u128 u = neg ? u128(-v) : u128(v);
    mpz_class hi(static_cast<unsigned long>(u >> 64));
    mpz_class out = (hi << 64) + mpz_class(static_cast<unsigned long>(u));
    return neg ? mpz_class(-out) : out;
  };
  Rational r;
  r.big_ = std::make_unique<mpq_class>(mpq_class(to_mpz(n)) /
                                       mpq_class(to_mpz(d)));
  return r;
}

void Rational::assign(long long n, long long d) {
  if (d == 0) throw ValidationError("Rational: zero denominator");
  i128 nn = n;
  i128 dd = d;
  if (dd < 0) {
    nn = -nn;
    dd = -dd;
  }
  *this = make_reduced(nn, dd);
}

void Rational::assign(const mpq_class& q) {
  mpq_class c = q;
  c.canonicalize();
  if (mpz_fits_slong_p(c.get_num_mpz_t()) &&
      mpz_fits_slong_p(c.get_den_mpz_t())) {
    n_ = mpz_get_si(c.get_num_mpz_t());
    d_ = mpz_get_si(c.get_den_mpz_t());
    big_.reset();
  } else {
    n_ = 0;
    d_ = 1;
    big_ = std::make_unique<mpq_class>(std::move(c));
  }
}

bool Rational::is_integer() const {
  if (!big_) return d_ == 1;
  return mpz_cmp_ui(big_->get_den_mpz_t(), 1) == 0;
}

Rational Rational::floor() const {
  if (!big_) {
    long long q = n_ / d_;
    if (n_ < 0 && n_ % d_ != 0) --q;
    return Rational(q);
  }
  mpz_class f;
  mpz_fdiv_q(f.get_mpz_t(), big_->get_num_mpz_t(), big_->get_den_mpz_t());
  return Rational(mpq_class(f));
}

long long Rational::floor_ll() const {
  Rational f = floor();
  if (!f.is_small()) throw OutOfRange("Rational: floor does not fit int64");
  return f.n_;
}

Rational Rational::from_string(std::string_view s) {
  size_t b = 0, e = s.size();
  while (b < e && std::isspace(static_cast<unsigned char>(s[b]))) ++b;
  while (e > b && std::isspace(static_cast<unsigned char>(s[e - 1]))) --e;
  s = s.substr(b, e - b);
  if (s.empty()) throw ParseError("Rational: empty string");

  auto is_int_token = [](std::string_view t) {
    if (t.empty()) return false;
    size_t i = (t[0] == '+' || t[0] == '-') ? 1 : 0;
    if (i == t.size()) return false;
    for (; i < t.size(); ++i) {
      if (!std::isdigit(static_cast<unsigned char>(t[i]))) return false;
    }
    return true;
  };

  std::string_view num = s, den;
  size_t slash = s.find('/');
  bool has_den = slash != std::string_view::npos;
  if (has_den) {
    num = s.substr(0, slash);
    den = s.substr(slash + 1);
  }
  if (!is_int_token(num) || (has_den && !is_int_token(den))) {
    throw ParseError("Rational: malformed literal '" + std::string(s) + "'");
  }
  auto strip_plus = [](std::string_view t) {
    return std::string(t[0] == '+' ? t.substr(1) : t);
  };
  mpq_class q(mpz_class(strip_plus(num)));
  if (has_den) {
    mpz_class d(strip_plus(den));
    if (d == 0) throw ParseError("Rational: zero denominator");
    q /= mpq_class(d);
  }
  return Rational(q);
}

std::string Rational::str() const {
  if (big_) return big_->get_str();
  if (d_ == 1) return std::to_string(n_);
  return std::to_string(n_) + "/" + std::to_string(d_);
}

Rational dyadic(int k) {
  if (k < 0) throw ValidationError("dyadic: negative exponent");
  if (k <= 62) return Rational(1, 1LL << k);
  mpz_class d = 1;
  d <<= k;
  return Rational(mpq_class(1) / mpq_class(d));
}

}  // namespace circact
