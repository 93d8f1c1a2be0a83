#pragma once

/// @file rational.hpp
/// Exact rational scalar type backing every coefficient in the library.
///
/// A thin wrapper over GMP's mpq_class that enforces the canonical form
/// (gcd(|num|, den) = 1, den > 0) on construction and provides the string
/// wire format "p/q" (or "p" when q = 1) used by the JSON documents.
/// There is deliberately no floating-point conversion in the public API:
/// every identity this library checks is exact.

#include <gmpxx.h>

#include <cstdint>
#include <limits>
#include <stdexcept>
#include <string>
#include <string_view>

namespace polarity {

class Rational {
 public:
  Rational() : q_(0) {}
  Rational(int n) : q_(n) {}                 // NOLINT: implicit by design
  Rational(long n) : q_(static_cast<long>(n)) {}
  Rational(long long n) : q_(int64_to_mpz(n)) {}

  /// num/den, normalized. Rejects den = 0.
  Rational(long long num, long long den) {
    if (den == 0) throw std::domain_error("Rational: zero denominator");
    q_ = mpq_class(int64_to_mpz(num), int64_to_mpz(den));
    q_.canonicalize();
  }

  explicit Rational(const mpq_class& q) : q_(q) { q_.canonicalize(); }

  /// Parses "p", "p/q", or "-p/q" (ASCII minus, base 10). Rejects anything
  /// else, including "1/0", signs on the denominator, and whitespace (GMP's
  /// own parser would silently skip blanks, so the shape is checked first).
  static Rational from_string(std::string_view text) {
    const std::string s(text);
    const auto slash = s.find('/');
    const auto is_integer = [](std::string_view part, bool allow_sign) {
      if (allow_sign && !part.empty() && part.front() == '-') part.remove_prefix(1);
      if (part.empty()) return false;
      for (const char ch : part)
        if (ch < '0' || ch > '9') return false;
      return true;
    };
    if (slash == std::string::npos) {
      if (!is_integer(s, true)) throw std::invalid_argument("Rational: malformed value \"" + s + "\"");
      return Rational(mpq_class(mpz_class(s, 10), 1));
    }
    const std::string num_part = s.substr(0, slash);
    const std::string den_part = s.substr(slash + 1);
    if (!is_integer(num_part, true) || !is_integer(den_part, false))
      throw std::invalid_argument("Rational: malformed value \"" + s + "\"");
    const mpz_class den(den_part, 10);
    if (den == 0) throw std::domain_error("Rational: zero denominator in \"" + s + "\"");
    mpq_class q(mpz_class(num_part, 10), den);
    q.canonicalize();
    return Rational(q);
  }

  /// Canonical wire form: "p" when the denominator is 1, else "p/q" with q > 0.
  std::string to_string() const { return q_.get_str(); }

  mpz_class num() const { return q_.get_num(); }
  mpz_class den() const { return q_.get_den(); }

  bool is_zero() const { return q_ == 0; }
  int sign() const { return sgn(q_); }
  Rational abs() const { return Rational(mpq_class(::abs(q_))); }

  Rational operator-() const { return Rational(mpq_class(-q_)); }

  Rational inv() const {
    if (is_zero()) throw std::domain_error("Rational: inverse of zero");
    return Rational(mpq_class(1) / q_);
  }

  /// x^e for non-negative integer exponents (numerator/denominator powers).
  Rational pow(unsigned e) const {
    mpz_class n, d;
    mpz_pow_ui(n.get_mpz_t(), q_.get_num_mpz_t(), e);
    mpz_pow_ui(d.get_mpz_t(), q_.get_den_mpz_t(), e);
    return Rational(mpq_class(n, d));  // already canonical, ctor re-checks cheaply
  }

  friend Rational operator+(const Rational& a, const Rational& b) { return Rational(mpq_class(a.q_ + b.q_)); }
  friend Rational operator-(const Rational& a, const Rational& b) { return Rational(mpq_class(a.q_ - b.q_)); }
  friend Rational operator*(const Rational& a, const Rational& b) { return Rational(mpq_class(a.q_ * b.q_)); }
  friend Rational operator/(const Rational& a, const Rational& b) {
    if (b.is_zero()) throw std::domain_error("Rational: division by zero");
    return Rational(mpq_class(a.q_ / b.q_));
  }

  Rational& operator+=(const Rational& o) { q_ += o.q_; return *this; }
  Rational& operator-=(const Rational& o) { q_ -= o.q_; return *this; }
  Rational& operator*=(const Rational& o) { q_ *= o.q_; return *this; }
  Rational& operator/=(const Rational& o) { *this = *this / o; return *this; }

  friend bool operator==(const Rational& a, const Rational& b) { return a.q_ == b.q_; }
  friend bool operator!=(const Rational& a, const Rational& b) { return a.q_ != b.q_; }
  friend bool operator<(const Rational& a, const Rational& b) { return a.q_ < b.q_; }
  friend bool operator<=(const Rational& a, const Rational& b) { return a.q_ <= b.q_; }
  friend bool operator>(const Rational& a, const Rational& b) { return a.q_ > b.q_; }
  friend bool operator>=(const Rational& a, const Rational& b) { return a.q_ >= b.q_; }

 private:
  static mpz_class int64_to_mpz(long long v) {
    // mpz_class has no long long ctor on LP64-agnostic paths; go through string
    // only when the value exceeds long range.
    if (v >= static_cast<long long>(std::numeric_limits<long>::min()) &&
        v <= static_cast<long long>(std::numeric_limits<long>::max())) {
      return mpz_class(static_cast<long>(v));
    }
    return mpz_class(std::to_string(v), 10);
  }

  mpq_class q_;
};

inline Rational max(const Rational& a, const Rational& b) { return a < b ? b : a; }

inline std::string to_string(const Rational& r) { return r.to_string(); }

}  // namespace polarity
