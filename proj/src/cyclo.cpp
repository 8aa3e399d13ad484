#include "pcubed/cyclo.hpp"

#include <algorithm>
#include <sstream>
#include <stdexcept>

namespace pcubed {

bool is_odd_prime(long n) {
  if (n < 3 || n % 2 == 0) return false;
  for (long d = 3; d * d <= n; d += 2) {
    if (n % d == 0) return false;
  }
  return true;
}

void require_odd_prime(long p) {
  if (!is_odd_prime(p)) {
    throw std::invalid_argument("unsupported prime: " + std::to_string(p) +
                                " (p must be an odd prime)");
  }
}

CycloField CycloField::of(int p) {
  require_odd_prime(p);
  CycloField f;
  f.p = p;
  f.p2 = static_cast<long>(p) * p;
  f.order = f.p2 * p;
  f.degree = static_cast<int>(f.p2 * (p - 1));
  return f;
}

namespace {

using Poly = std::vector<Rational>;

// Reusable dense accumulator. Entries are zero between uses.
struct Scratch {
  std::vector<Rational> buf;
  Rational tmp;

  void reserve(std::size_t n) {
    if (buf.size() < n) buf.resize(n);
  }
};

Scratch& scratch() {
  thread_local Scratch s;
  return s;
}

// Folds scratch entries [degree, hi] down using x^degree = -sum_{j<p-1} x^{j p^2},
// then moves the surviving coefficients into a term list and clears the buffer.
std::vector<CycloNum::Term> reduce_and_collect(const CycloField& f, Scratch& s, long hi) {
  auto& buf = s.buf;
  for (long k = hi; k >= f.degree; --k) {
    if (sgn(buf[k]) == 0) continue;
    const long base = k - f.degree;
    for (int j = 0; j + 1 < f.p; ++j) buf[base + j * f.p2] -= buf[k];
    buf[k] = 0;
  }
  std::vector<CycloNum::Term> out;
  const long top = std::min<long>(hi, f.degree - 1);
  for (long k = 0; k <= top; ++k) {
    if (sgn(buf[k]) != 0) {
      out.emplace_back(static_cast<int>(k), buf[k]);
      buf[k] = 0;
    }
  }
  return out;
}

void trim(Poly& a) {
  while (!a.empty() && sgn(a.back()) == 0) a.pop_back();
}

// Quotient and remainder of a / b, b non-zero and trimmed.
std::pair<Poly, Poly> divmod(Poly a, const Poly& b) {
  trim(a);
  if (a.size() < b.size()) return {Poly{}, a};
  Poly q(a.size() - b.size() + 1);
  const Rational lead_inv = 1 / b.back();
  for (std::size_t i = a.size(); i-- >= b.size();) {
    if (sgn(a[i]) == 0) continue;
    const std::size_t shift = i - (b.size() - 1);
    Rational c = a[i] * lead_inv;
    for (std::size_t j = 0; j < b.size(); ++j) a[shift + j] -= c * b[j];
    q[shift] = c;
  }
  trim(a);
  trim(q);
  return {q, a};
}

Poly poly_mul(const Poly& a, const Poly& b) {
  if (a.empty() || b.empty()) return {};
  Poly out(a.size() + b.size() - 1);
  for (std::size_t i = 0; i < a.size(); ++i) {
    if (sgn(a[i]) == 0) continue;
    for (std::size_t j = 0; j < b.size(); ++j) out[i + j] += a[i] * b[j];
  }
  trim(out);
  return out;
}

Poly poly_sub(const Poly& a, const Poly& b) {
  Poly out(std::max(a.size(), b.size()));
  for (std::size_t i = 0; i < a.size(); ++i) out[i] += a[i];
  for (std::size_t i = 0; i < b.size(); ++i) out[i] -= b[i];
  trim(out);
  return out;
}

}  // namespace

int common_prime(const CycloNum& a, const CycloNum& b) {
  if (a.p_ == 0) return b.p_;
  if (b.p_ == 0 || a.p_ == b.p_) return a.p_;
  throw std::invalid_argument("mismatched primes: " + std::to_string(a.p_) + " vs " +
                              std::to_string(b.p_));
}

CycloNum::CycloNum(int p) : p_(p) { require_odd_prime(p); }

CycloNum::CycloNum(int p, const Rational& value) : p_(p) {
  require_odd_prime(p);
  if (sgn(value) != 0) terms_.emplace_back(0, value);
}

CycloNum CycloNum::root_of_unity(int p, long e) {
  const CycloField f = CycloField::of(p);
  long k = e % f.order;
  if (k < 0) k += f.order;
  std::vector<Term> terms;
  if (k < f.degree) {
    terms.emplace_back(static_cast<int>(k), Rational(1));
  } else {
    const long base = k - f.degree;
    for (int j = 0; j + 1 < p; ++j) terms.emplace_back(static_cast<int>(base + j * f.p2), Rational(-1));
  }
  return CycloNum(p, std::move(terms));
}

CycloNum CycloNum::from_coefficients(int p, std::span<const Rational> coeffs) {
  const CycloField f = CycloField::of(p);
  Scratch& s = scratch();
  s.reserve(std::max<std::size_t>(coeffs.size(), 2 * static_cast<std::size_t>(f.degree)));
  for (std::size_t i = 0; i < coeffs.size(); ++i) s.buf[i] = coeffs[i];
  const long hi = static_cast<long>(coeffs.size()) - 1;
  if (hi < 0) return CycloNum(p);
  return CycloNum(p, reduce_and_collect(f, s, hi));
}

std::vector<Rational> CycloNum::coefficients() const {
  if (p_ == 0) return {};
  std::vector<Rational> out(CycloField::of(p_).degree);
  for (const auto& [e, c] : terms_) out[e] = c;
  return out;
}

Rational CycloNum::coefficient(int exponent) const {
  for (const auto& [e, c] : terms_) {
    if (e == exponent) return c;
  }
  return Rational(0);
}

bool CycloNum::is_one() const {
  return terms_.size() == 1 && terms_[0].first == 0 && terms_[0].second == 1;
}

Rational CycloNum::rational_value() const {
  return terms_.empty() ? Rational(0) : terms_[0].second;
}

std::optional<long> CycloNum::root_of_unity_exponent() const {
  if (terms_.size() == 1 && terms_[0].second == 1) return terms_[0].first;
  if (p_ == 0 || terms_.size() != static_cast<std::size_t>(p_ - 1)) return std::nullopt;
  const CycloField f = CycloField::of(p_);
  const long base = terms_[0].first;
  if (base >= f.p2) return std::nullopt;
  for (int j = 0; j + 1 < p_; ++j) {
    if (terms_[j].first != base + j * f.p2 || terms_[j].second != -1) return std::nullopt;
  }
  return base + f.degree;
}

CycloNum CycloNum::operator-() const {
  CycloNum out = *this;
  for (auto& t : out.terms_) t.second = -t.second;
  return out;
}

CycloNum& CycloNum::operator+=(const CycloNum& rhs) {
  p_ = common_prime(*this, rhs);
  if (rhs.terms_.empty()) return *this;
  if (terms_.empty()) {
    terms_ = rhs.terms_;
    return *this;
  }
  std::vector<Term> out;
  out.reserve(terms_.size() + rhs.terms_.size());
  auto a = terms_.begin();
  auto b = rhs.terms_.begin();
  while (a != terms_.end() || b != rhs.terms_.end()) {
    if (b == rhs.terms_.end() || (a != terms_.end() && a->first < b->first)) {
      out.push_back(std::move(*a++));
    } else if (a == terms_.end() || b->first < a->first) {
      out.push_back(*b++);
    } else {
      Rational c = a->second + b->second;
      if (sgn(c) != 0) out.emplace_back(a->first, std::move(c));
      ++a;
      ++b;
    }
  }
  terms_ = std::move(out);
  return *this;
}

CycloNum& CycloNum::operator-=(const CycloNum& rhs) { return *this += -rhs; }

CycloNum& CycloNum::operator*=(const Rational& rhs) {
  if (sgn(rhs) == 0) {
    terms_.clear();
    return *this;
  }
  for (auto& t : terms_) t.second *= rhs;
  return *this;
}

CycloNum& CycloNum::operator*=(const CycloNum& rhs) {
  *this = *this * rhs;
  return *this;
}

CycloNum operator*(const CycloNum& a, const CycloNum& b) {
  const int p = common_prime(a, b);
  if (a.is_zero() || b.is_zero()) return p == 0 ? CycloNum() : CycloNum(p);
  if (a.is_rational()) return b * a.terms_[0].second;
  if (b.is_rational()) return a * b.terms_[0].second;

  const CycloField f = CycloField::of(p);
  Scratch& s = scratch();
  s.reserve(2 * static_cast<std::size_t>(f.degree));
  long hi = 0;
  for (const auto& [ea, ca] : a.terms_) {
    for (const auto& [eb, cb] : b.terms_) {
      mpq_mul(s.tmp.get_mpq_t(), ca.get_mpq_t(), cb.get_mpq_t());
      s.buf[ea + eb] += s.tmp;
      hi = std::max<long>(hi, ea + eb);
    }
  }
  return CycloNum(p, reduce_and_collect(f, s, hi));
}

bool operator==(const CycloNum& a, const CycloNum& b) {
  if (a.terms_.empty() && b.terms_.empty()) return true;
  return common_prime(a, b) != 0 && a.terms_ == b.terms_;
}

CycloNum CycloNum::inverse() const {
  if (is_zero()) throw std::domain_error("division by zero in cyclotomic field");
  if (is_rational()) return CycloNum(p_, 1 / terms_[0].second);
  if (auto k = root_of_unity_exponent()) return root_of_unity(p_, -*k);

  const CycloField f = CycloField::of(p_);
  Poly phi(f.degree + 1);
  for (int k = 0; k < p_; ++k) phi[k * f.p2] = 1;
  Poly self(terms_.back().first + 1);
  for (const auto& [e, c] : terms_) self[e] = c;

  // Invariant: r_i = s_i * self (mod phi).
  Poly r0 = phi, r1 = self;
  Poly s0{}, s1{Rational(1)};
  while (!r1.empty()) {
    auto [q, r] = divmod(r0, r1);
    Poly s2 = poly_sub(s0, poly_mul(q, s1));
    r0 = std::move(r1);
    r1 = std::move(r);
    s0 = std::move(s1);
    s1 = std::move(s2);
  }
  // phi is irreducible, so the gcd r0 is a non-zero constant.
  if (r0.size() != 1) throw std::logic_error("cyclotomic inverse: non-constant gcd");
  const Rational scale = 1 / r0[0];
  for (auto& c : s0) c *= scale;
  return from_coefficients(p_, s0);
}

CycloNum CycloNum::pow(long e) const {
  if (e < 0) return inverse().pow(-e);
  if (auto k = root_of_unity_exponent()) {
    const long order = CycloField::of(p_).order;
    return root_of_unity(p_, (*k * (e % order)) % order);
  }
  CycloNum result = p_ == 0 ? CycloNum() : CycloNum(p_, 1);
  CycloNum base = *this;
  while (e > 0) {
    if (e & 1) result *= base;
    e >>= 1;
    if (e > 0) base *= base;
  }
  return result;
}

std::string rational_to_string(const Rational& q) { return q.get_str(); }

std::string CycloNum::to_string() const {
  if (terms_.empty()) return "0";
  std::ostringstream os;
  bool first = true;
  for (const auto& [e, c] : terms_) {
    Rational mag = abs(c);
    if (first) {
      if (sgn(c) < 0) os << "-";
    } else {
      os << (sgn(c) < 0 ? " - " : " + ");
    }
    first = false;
    if (e == 0) {
      os << mag.get_str();
    } else {
      if (mag != 1) os << mag.get_str() << "*";
      os << "w^" << e;
    }
  }
  return os.str();
}

std::string CycloNum::to_compact_string() const {
  if (auto k = root_of_unity_exponent()) {
    return *k == 0 ? std::string("1") : "w^" + std::to_string(*k);
  }
  return to_string();
}

CycloNum add(const CycloNum& a, const CycloNum& b) { return a + b; }
CycloNum sub(const CycloNum& a, const CycloNum& b) { return a - b; }
CycloNum mul(const CycloNum& a, const CycloNum& b) { return a * b; }
CycloNum neg(const CycloNum& a) { return -a; }
CycloNum inv(const CycloNum& a) { return a.inverse(); }

}  // namespace pcubed
