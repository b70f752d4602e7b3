#pragma once

#include <gmpxx.h>

#include <compare>
#include <cstdint>
#include <memory>
#include <numeric>
#include <ostream>
#include <string>
#include <string_view>

#include "circact/errors.hpp"

namespace circact {

// Exact rational scalar.
//
// Values that fit keep an int64 numerator/denominator pair (denominator > 0,
// fraction reduced) and all arithmetic runs through __int128 intermediates.
// Results that do not fit are promoted to a heap mpq_class; big results are
// demoted back as soon as they fit again, so the small representation is
// canonical: a non-null big_ never holds a small value.
class Rational {
 public:
  Rational() = default;
  Rational(long long n) : n_(n) {}  // NOLINT: implicit by design
  Rational(long long n, long long d) { assign(n, d); }
  explicit Rational(const mpq_class& q) { assign(q); }

  Rational(const Rational& o) : n_(o.n_), d_(o.d_) {
    if (o.big_) big_ = std::make_unique<mpq_class>(*o.big_);
  }
  Rational& operator=(const Rational& o) {
    if (this != &o) {
      n_ = o.n_;
      d_ = o.d_;
      big_ = o.big_ ? std::make_unique<mpq_class>(*o.big_) : nullptr;
    }
    return *this;
  }
  Rational(Rational&&) noexcept = default;
  Rational& operator=(Rational&&) noexcept = default;

  // Parses "num" or "num/den" (optional sign, arbitrary precision).
  static Rational from_string(std::string_view s);
  std::string str() const;

  bool is_small() const { return big_ == nullptr; }
  bool is_zero() const { return !big_ && n_ == 0; }
  bool is_integer() const;
  int sign() const {
    if (big_) return mpq_sgn(big_->get_mpq_t());
    return n_ > 0 ? 1 : (n_ < 0 ? -1 : 0);
  }

  // Small-path accessors; valid only when is_small().
  long long num_small() const { return n_; }
  long long den_small() const { return d_; }

  mpq_class to_mpq() const {
    if (big_) return *big_;
    return mpq_class(static_cast<long>(n_)) / mpq_class(static_cast<long>(d_));
  }
  double to_double() const { return to_mpq().get_d(); }

  // Largest integer <= value, as an (integer-valued) Rational.
  Rational floor() const;
  // floor() as long long; requires the result to fit.
  long long floor_ll() const;

  friend Rational operator-(const Rational& a) {
    if (!a.big_) {
      Rational r;
      r.n_ = -a.n_;
      r.d_ = a.d_;
      return r;
    }
    return Rational(mpq_class(-*a.big_));
  }

  friend Rational operator+(const Rational& a, const Rational& b) {
    if (!a.big_ && !b.big_) {
      if (a.d_ == b.d_) {
        return make_reduced(i128(a.n_) + b.n_, i128(a.d_));
      }
      return make_reduced(i128(a.n_) * b.d_ + i128(b.n_) * a.d_,
                          i128(a.d_) * b.d_);
    }
    return Rational(mpq_class(a.to_mpq() + b.to_mpq()));
  }
  friend Rational operator-(const Rational& a, const Rational& b) {
    if (!a.big_ && !b.big_) {
      if (a.d_ == b.d_) {
        return make_reduced(i128(a.n_) - b.n_, i128(a.d_));
      }
      return make_reduced(i128(a.n_) * b.d_ - i128(b.n_) * a.d_,
                          i128(a.d_) * b.d_);
    }
    return Rational(mpq_class(a.to_mpq() - b.to_mpq()));
  }
  friend Rational operator*(const Rational& a, const Rational& b) {
    if (!a.big_ && !b.big_) {
      return make_reduced(i128(a.n_) * b.n_, i128(a.d_) * b.d_);
    }
    return Rational(mpq_class(a.to_mpq() * b.to_mpq()));
  }
  friend Rational operator/(const Rational& a, const Rational& b) {
    if (b.is_zero()) throw Error("Rational: division by zero");
    if (!a.big_ && !b.big_) {
      i128 n = i128(a.n_) * b.d_;
      i128 d = i128(a.d_) * b.n_;
      if (d < 0) {
        n = -n;
        d = -d;
      }
      return make_reduced(n, d);
    }
    return Rational(mpq_class(a.to_mpq() / b.to_mpq()));
  }

  Rational& operator+=(const Rational& b) { return *this = *this + b; }
  Rational& operator-=(const Rational& b) { return *this = *this - b; }
  Rational& operator*=(const Rational& b) { return *this = *this * b; }
  Rational& operator/=(const Rational& b) { return *this = *this / b; }

  friend bool operator==(const Rational& a, const Rational& b) {
    if (!a.big_ && !b.big_) return a.n_ == b.n_ && a.d_ == b.d_;
    return cmp_mixed(a, b) == 0;
  }
  friend std::strong_ordering operator<=>(const Rational& a,
                                          const Rational& b) {
    int c;
    if (!a.big_ && !b.big_) {
      i128 lhs = i128(a.n_) * b.d_;
      i128 rhs = i128(b.n_) * a.d_;
      c = lhs < rhs ? -1 : (lhs > rhs ? 1 : 0);
    } else {
      c = cmp_mixed(a, b);
    }
    return c <=> 0;
  }

  friend std::ostream& operator<<(std::ostream& os, const Rational& r) {
    return os << r.str();
  }

 private:
  using i128 = __int128;
  using u128 = unsigned __int128;

  static u128 gcd_u128(u128 a, u128 b) {
    while (b != 0) {
      u128 t = a % b;
      a = b;
      b = t;
    }
    return a;
  }

  // Builds a value from a raw (possibly unreduced) int128 fraction, d > 0.
  static Rational make_reduced(i128 n, i128 d);

  void assign(long long n, long long d);
  void assign(const mpq_class& q);  // demotes when it fits

  static int cmp_mixed(const Rational& a, const Rational& b) {
    return mpq_cmp(a.to_mpq().get_mpq_t(), b.to_mpq().get_mpq_t());
  }

  long long n_ = 0;
  long long d_ = 1;
  std::unique_ptr<mpq_class> big_;
};

inline Rational abs(const Rational& a) { return a.sign() < 0 ? -a : a; }

// 1 / 2^k for k >= 0.
Rational dyadic(int k);

// Representative of x mod 1 in [0,1).
inline Rational mod1(const Rational& x) { return x - x.floor(); }

}  // namespace circact
