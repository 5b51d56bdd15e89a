#pragma once

#include <gmpxx.h>

#include <cstdint>
#include <limits>
#include <memory>
#include <ostream>
#include <stdexcept>
#include <string>
#include <string_view>

namespace manyfaces {

namespace detail {

using i128 = __int128;
using u128 = unsigned __int128;

inline u128 uabs128(i128 v) { return v < 0 ? u128(0) - u128(v) : u128(v); }

inline u128 gcd128(u128 a, u128 b) {
  while (b != 0) {
    u128 t = a % b;
    a = b;
    b = t;
  }
  return a;
}

inline constexpr std::int64_t kSmallMax = std::numeric_limits<std::int64_t>::max();

inline bool fits_small(i128 v) { return v <= kSmallMax && v >= -kSmallMax; }

inline void set_mpz(mpz_class& z, i128 v) {
  u128 u = uabs128(v);
  std::uint64_t limbs[2] = {std::uint64_t(u), std::uint64_t(u >> 64)};
  mpz_import(z.get_mpz_t(), 2, -1, sizeof(std::uint64_t), 0, 0, limbs);
  if (v < 0) z = -z;
}

}  // namespace detail

// Exact rational number. Values that fit in 64-bit numerator and denominator
// are kept inline; anything larger lives in a shared immutable mpq.
class Rational {
 public:
  Rational() = default;
  Rational(std::int64_t v) : num_(v) {  // NOLINT(google-explicit-constructor)
    if (v == std::numeric_limits<std::int64_t>::min()) promote(detail::i128(v), 1);
  }
  Rational(int v) : num_(v) {}  // NOLINT(google-explicit-constructor)
  Rational(std::int64_t n, std::int64_t d) { assign(n, d); }
  explicit Rational(const mpq_class& q) {
    mpq_class c(q);
    c.canonicalize();
    assign_mpq(c);
  }

  static Rational from_i128(detail::i128 n, detail::i128 d) {
    Rational r;
    r.assign(n, d);
    return r;
  }

  // Accepts "p", "-p", "p/q".
  static Rational parse(std::string_view s) {
    if (s.empty()) throw std::invalid_argument("empty rational");
    std::string t(s);
    auto slash = t.find('/');
    auto valid = [](const std::string& part) {
      if (part.empty()) return false;
      std::size_t i = (part[0] == '-' || part[0] == '+') ? 1 : 0;
      if (i == part.size()) return false;
      for (; i < part.size(); ++i)
        if (part[i] < '0' || part[i] > '9') return false;
      return true;
    };
    std::string n = t.substr(0, slash);
    std::string d = slash == std::string::npos ? "1" : t.substr(slash + 1);
    if (!valid(n) || !valid(d)) throw std::invalid_argument("bad rational '" + t + "'");
    if (n[0] == '+') n.erase(0, 1);
    if (d[0] == '+') d.erase(0, 1);
    mpz_class zn(n), zd(d);
    if (zd == 0) throw std::invalid_argument("zero denominator in '" + t + "'");
    mpq_class q(zn, zd);
    q.canonicalize();
    return Rational(q);
  }

  bool is_small() const { return !big_; }
  std::int64_t small_num() const { return num_; }
  std::int64_t small_den() const { return den_; }

  int sign() const {
    if (big_) return sgn(*big_);
    return (num_ > 0) - (num_ < 0);
  }
  bool is_zero() const { return !big_ && num_ == 0; }
  bool is_integer() const { return big_ ? big_->get_den() == 1 : den_ == 1; }

  mpq_class to_mpq() const {
    if (big_) return *big_;
    return mpq_class(mpz_class(static_cast<long>(num_)), mpz_class(static_cast<long>(den_)));
  }
  double to_double() const {
    if (big_) return big_->get_d();
    return double(num_) / double(den_);
  }
  std::string str() const {
    if (big_) return big_->get_str();
    if (den_ == 1) return std::to_string(num_);
    return std::to_string(num_) + "/" + std::to_string(den_);
  }

  Rational operator-() const {
    if (big_) return Rational(mpq_class(-*big_));
    Rational r;
    r.num_ = -num_;
    r.den_ = den_;
    return r;
  }

  friend Rational operator+(const Rational& a, const Rational& b) {
    if (!a.big_ && !b.big_) {
      if (a.den_ == 1 && b.den_ == 1) return from_int(detail::i128(a.num_) + b.num_);
      if (a.den_ == b.den_) return from_i128(detail::i128(a.num_) + b.num_, a.den_);
      return from_i128(detail::i128(a.num_) * b.den_ + detail::i128(b.num_) * a.den_,
                       detail::i128(a.den_) * b.den_);
    }
    return Rational(mpq_class(a.to_mpq() + b.to_mpq()));
  }
  friend Rational operator-(const Rational& a, const Rational& b) {
    if (!a.big_ && !b.big_) {
      if (a.den_ == 1 && b.den_ == 1) return from_int(detail::i128(a.num_) - b.num_);
      if (a.den_ == b.den_) return from_i128(detail::i128(a.num_) - b.num_, a.den_);
      return from_i128(detail::i128(a.num_) * b.den_ - detail::i128(b.num_) * a.den_,
                       detail::i128(a.den_) * b.den_);
    }
    return Rational(mpq_class(a.to_mpq() - b.to_mpq()));
  }
  friend Rational operator*(const Rational& a, const Rational& b) {
    if (!a.big_ && !b.big_) {
      if (a.den_ == 1 && b.den_ == 1) return from_int(detail::i128(a.num_) * b.num_);
      return from_i128(detail::i128(a.num_) * b.num_, detail::i128(a.den_) * b.den_);
    }
    return Rational(mpq_class(a.to_mpq() * b.to_mpq()));
  }
  friend Rational operator/(const Rational& a, const Rational& b) {
    if (b.is_zero()) throw std::domain_error("division by zero");
    if (!a.big_ && !b.big_)
      return from_i128(detail::i128(a.num_) * b.den_, detail::i128(a.den_) * b.num_);
    return Rational(mpq_class(a.to_mpq() / b.to_mpq()));
  }
  Rational& operator+=(const Rational& o) { return *this = *this + o; }
  Rational& operator-=(const Rational& o) { return *this = *this - o; }
  Rational& operator*=(const Rational& o) { return *this = *this * o; }
  Rational& operator/=(const Rational& o) { return *this = *this / o; }

  friend int cmp(const Rational& a, const Rational& b) {
    if (!a.big_ && !b.big_) {
      if (a.den_ == b.den_) return (a.num_ > b.num_) - (a.num_ < b.num_);
      detail::i128 l = detail::i128(a.num_) * b.den_;
      detail::i128 r = detail::i128(b.num_) * a.den_;
      return (l > r) - (l < r);
    }
    int c = ::cmp(a.to_mpq(), b.to_mpq());
    return (c > 0) - (c < 0);
  }
  friend bool operator==(const Rational& a, const Rational& b) {
    if (!a.big_ && !b.big_) return a.num_ == b.num_ && a.den_ == b.den_;
    if (!a.big_ || !b.big_) return false;
    return *a.big_ == *b.big_;
  }
  friend std::strong_ordering operator<=>(const Rational& a, const Rational& b) {
    int c = cmp(a, b);
    return c < 0 ? std::strong_ordering::less
                 : (c > 0 ? std::strong_ordering::greater : std::strong_ordering::equal);
  }
  friend std::ostream& operator<<(std::ostream& os, const Rational& r) { return os << r.str(); }

 private:
  static Rational from_int(detail::i128 v) {
    Rational r;
    if (detail::fits_small(v)) {
      r.num_ = std::int64_t(v);
    } else {
      r.promote(v, 1);
    }
    return r;
  }

  void assign(detail::i128 n, detail::i128 d) {
    if (d == 0) throw std::domain_error("zero denominator");
    if (d < 0) {
      n = -n;
      d = -d;
    }
    if (d != 1) {
      detail::u128 g = detail::gcd128(detail::uabs128(n), detail::u128(d));
      if (g > 1) {
        n /= detail::i128(g);
        d /= detail::i128(g);
      }
    }
    if (detail::fits_small(n) && detail::fits_small(d)) {
      num_ = std::int64_t(n);
      den_ = std::int64_t(d);
      big_.reset();
    } else {
      promote(n, d);
    }
  }

  void promote(detail::i128 n, detail::i128 d) {
    mpz_class zn, zd;
    detail::set_mpz(zn, n);
    detail::set_mpz(zd, d);
    mpq_class q(zn, zd);
    q.canonicalize();
    big_ = std::make_shared<const mpq_class>(q);
    num_ = 0;
    den_ = 1;
  }

  void assign_mpq(const mpq_class& q) {
    const mpz_class& n = q.get_num();
    const mpz_class& d = q.get_den();
    if (n.fits_slong_p() && d.fits_slong_p() && n.get_si() != std::numeric_limits<long>::min()) {
      num_ = n.get_si();
      den_ = d.get_si();
      big_.reset();
    } else {
      big_ = std::make_shared<const mpq_class>(q);
      num_ = 0;
      den_ = 1;
    }
  }

  std::int64_t num_ = 0;
  std::int64_t den_ = 1;
  std::shared_ptr<const mpq_class> big_;
};

using Coord = Rational;

}  // namespace manyfaces
