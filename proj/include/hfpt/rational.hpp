#pragma once

#include <compare>
#include <cstdint>
#include <iosfwd>
#include <span>
#include <string>
#include <string_view>
#include <vector>

#include <gmpxx.h>

namespace hfpt {

/// Exact rational number, always in lowest terms with a positive denominator.
///
/// Thin value wrapper around GMP's mpq_class. The wrapper exists so that the
/// rest of the library never sees an uncanonicalized fraction and so that the
/// textual form ("a/b", "0/1" for zero) is fixed in one place.
class Rational {
 public:
  Rational() = default;
  Rational(long value) : q_(value) {}  // NOLINT(google-explicit-constructor)
  Rational(long num, long den);
  Rational(const mpz_class& num, const mpz_class& den);
  explicit Rational(mpq_class q);

  /// Accepts "a/b" or a plain integer, optional leading '-'. Throws DomainError.
  static Rational parse(std::string_view text);

  mpz_class numerator() const { return q_.get_num(); }
  mpz_class denominator() const { return q_.get_den(); }
  const mpq_class& raw() const noexcept { return q_; }

  /// Always "num/den", e.g. "0/1", "3/1", "-2/5".
  std::string to_string() const;

  mpz_class floor() const;
  mpz_class ceil() const;

  bool is_zero() const { return sgn(q_) == 0; }
  bool is_positive() const { return sgn(q_) > 0; }
  bool is_integer() const { return q_.get_den() == 1; }

  Rational operator-() const { return Rational(mpq_class(-q_)); }
  Rational& operator+=(const Rational& o);
  Rational& operator-=(const Rational& o);
  Rational& operator*=(const Rational& o);
  Rational& operator/=(const Rational& o);

  friend Rational operator+(Rational a, const Rational& b) { return a += b; }
  friend Rational operator-(Rational a, const Rational& b) { return a -= b; }
  friend Rational operator*(Rational a, const Rational& b) { return a *= b; }
  friend Rational operator/(Rational a, const Rational& b) { return a /= b; }

  friend bool operator==(const Rational& a, const Rational& b) { return a.q_ == b.q_; }
  friend std::strong_ordering operator<=>(const Rational& a, const Rational& b) {
    const int c = cmp(a.q_, b.q_);
    return c < 0 ? std::strong_ordering::less
                 : (c > 0 ? std::strong_ordering::greater : std::strong_ordering::equal);
  }

 private:
  mpq_class q_;
};

std::ostream& operator<<(std::ostream& os, const Rational& r);

Rational sum(std::span<const Rational> values);

/// Converts an mpz to int64, throwing DomainError when it does not fit.
std::int64_t to_int64(const mpz_class& z);

/// Sorts ascending and removes duplicates.
void sort_unique(std::vector<Rational>& values);

/// Comma-separated list of rationals; the empty string parses to the empty list.
std::vector<Rational> parse_rational_list(std::string_view text);

bool is_prime(std::uint64_t n);

}  // namespace hfpt
