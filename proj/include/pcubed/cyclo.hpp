#pragma once

#include <gmpxx.h>

#include <optional>
#include <ostream>
#include <span>
#include <string>
#include <utility>
#include <vector>

namespace pcubed {

using Rational = mpq_class;
using BigInt = mpz_class;

bool is_odd_prime(long n);

// Throws std::invalid_argument("unsupported prime ...") unless p is an odd prime.
void require_odd_prime(long p);

// Field parameters of Q(w), w a primitive p^3-th root of unity.
struct CycloField {
  int p = 0;
  long p2 = 0;     // p^2
  long order = 0;  // p^3, the multiplicative order of w
  int degree = 0;  // phi(p^3) = p^2 (p - 1)

  static CycloField of(int p);
};

// An element of Q(w) in the power basis 1, w, ..., w^(degree-1) modulo the
// cyclotomic polynomial Phi_{p^3}(x) = sum_{k<p} x^{k p^2}.
//
// Coefficients are kept sparse: (exponent, coefficient) pairs sorted by
// exponent, every coefficient non-zero and canonical (gmp keeps rationals in
// lowest terms with positive denominator). Two values are equal iff their term
// lists are equal.
//
// A default constructed value is a zero that is not yet bound to a prime; it
// combines with a value of any prime.
class CycloNum {
 public:
  using Term = std::pair<int, Rational>;

  CycloNum() = default;
  explicit CycloNum(int p);
  CycloNum(int p, const Rational& value);
  CycloNum(int p, long value) : CycloNum(p, Rational(value)) {}

  // w^e for any integer e (reduced mod p^3).
  static CycloNum root_of_unity(int p, long e);

  // Reduces an arbitrary-length coefficient vector (coefficient i multiplies
  // w^i) into canonical form.
  static CycloNum from_coefficients(int p, std::span<const Rational> coeffs);

  int prime() const { return p_; }
  const std::vector<Term>& terms() const { return terms_; }

  // Dense coefficient vector of length phi(p^3).
  std::vector<Rational> coefficients() const;
  Rational coefficient(int exponent) const;

  bool is_zero() const { return terms_.empty(); }
  bool is_one() const;
  bool is_rational() const {
    return terms_.empty() || (terms_.size() == 1 && terms_[0].first == 0);
  }
  // Value as a rational; only meaningful when is_rational().
  Rational rational_value() const;

  // k in [0, p^3) with *this == w^k, if any.
  std::optional<long> root_of_unity_exponent() const;

  CycloNum operator-() const;
  CycloNum& operator+=(const CycloNum& rhs);
  CycloNum& operator-=(const CycloNum& rhs);
  CycloNum& operator*=(const CycloNum& rhs);
  CycloNum& operator*=(const Rational& rhs);

  friend CycloNum operator+(CycloNum a, const CycloNum& b) { return a += b; }
  friend CycloNum operator-(CycloNum a, const CycloNum& b) { return a -= b; }
  friend CycloNum operator*(const CycloNum& a, const CycloNum& b);
  friend CycloNum operator*(CycloNum a, const Rational& b) { return a *= b; }
  friend CycloNum operator*(const Rational& a, CycloNum b) { return b *= a; }

  // Multiplicative inverse by the extended Euclidean algorithm against
  // Phi_{p^3}. Throws std::domain_error on zero.
  CycloNum inverse() const;

  CycloNum pow(long e) const;

  friend bool operator==(const CycloNum& a, const CycloNum& b);
  friend bool operator!=(const CycloNum& a, const CycloNum& b) { return !(a == b); }

  // "0", "1", "-1/2 + w^3 - 2*w^9", ...
  std::string to_string() const;
  // "w^k" for roots of unity ("1" for k = 0), to_string() otherwise.
  std::string to_compact_string() const;

 private:
  CycloNum(int p, std::vector<Term> terms) : p_(p), terms_(std::move(terms)) {}

  int p_ = 0;
  std::vector<Term> terms_;

  friend int common_prime(const CycloNum& a, const CycloNum& b);
};

inline std::ostream& operator<<(std::ostream& os, const CycloNum& x) { return os << x.to_string(); }

CycloNum add(const CycloNum& a, const CycloNum& b);
CycloNum sub(const CycloNum& a, const CycloNum& b);
CycloNum mul(const CycloNum& a, const CycloNum& b);
CycloNum neg(const CycloNum& a);
CycloNum inv(const CycloNum& a);

std::string rational_to_string(const Rational& q);

}  // namespace pcubed
