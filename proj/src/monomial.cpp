#include "pcubed/monomial.hpp"

#include <stdexcept>

namespace pcubed {

namespace {

long mod(long a, long m) {
  a %= m;
  return a < 0 ? a + m : a;
}

}  // namespace

MonomialMatrix MonomialMatrix::identity(long order, int dim) {
  MonomialMatrix m;
  m.order = order;
  m.column.resize(dim);
  m.exponent.assign(dim, 0);
  for (int i = 0; i < dim; ++i) m.column[i] = i;
  return m;
}

MonomialMatrix MonomialMatrix::shift(long order, int dim, long s) {
  MonomialMatrix m = identity(order, dim);
  for (int i = 0; i < dim; ++i) m.column[i] = static_cast<int>(mod(i + s, dim));
  return m;
}

MonomialMatrix MonomialMatrix::diagonal(long order, std::vector<long> exponents) {
  MonomialMatrix m = identity(order, static_cast<int>(exponents.size()));
  for (std::size_t i = 0; i < exponents.size(); ++i) m.exponent[i] = mod(exponents[i], order);
  return m;
}

bool MonomialMatrix::is_identity() const {
  for (int i = 0; i < dim(); ++i)
    if (column[i] != i || exponent[i] != 0) return false;
  return true;
}

MonomialMatrix operator*(const MonomialMatrix& a, const MonomialMatrix& b) {
  if (a.dim() != b.dim()) throw std::invalid_argument("monomial matrix shape mismatch");
  MonomialMatrix out;
  out.order = a.order;
  out.column.resize(a.dim());
  out.exponent.resize(a.dim());
  for (int i = 0; i < a.dim(); ++i) {
    const int k = a.column[i];
    out.column[i] = b.column[k];
    out.exponent[i] = mod(a.exponent[i] + b.exponent[k], a.order);
  }
  return out;
}

MonomialMatrix MonomialMatrix::inverse() const {
  MonomialMatrix out = *this;
  for (int i = 0; i < dim(); ++i) {
    out.column[column[i]] = i;
    out.exponent[column[i]] = mod(-exponent[i], order);
  }
  return out;
}

MonomialMatrix MonomialMatrix::inverse_transpose() const {
  // M^t has w^e at (column[i], i); inverting gives w^-e at (i, column[i]).
  MonomialMatrix out = *this;
  for (int i = 0; i < dim(); ++i) out.exponent[i] = mod(-exponent[i], order);
  return out;
}

MonomialMatrix MonomialMatrix::pow(long e) const {
  if (e < 0) return inverse().pow(-e);
  MonomialMatrix result = identity(order, dim());
  MonomialMatrix base = *this;
  while (e > 0) {
    if (e & 1) result = result * base;
    e >>= 1;
    if (e > 0) base = base * base;
  }
  return result;
}

MonomialMatrix MonomialMatrix::scaled(long exponent_shift) const {
  MonomialMatrix out = *this;
  for (auto& e : out.exponent) e = mod(e + exponent_shift, order);
  return out;
}

std::vector<long> MonomialMatrix::trace_exponents() const {
  std::vector<long> out;
  for (int i = 0; i < dim(); ++i)
    if (column[i] == i) out.push_back(exponent[i]);
  return out;
}

CycloMatrix MonomialMatrix::to_dense(int p) const {
  CycloMatrix m(p, dim(), dim());
  for (int i = 0; i < dim(); ++i) m(i, column[i]) = CycloNum::root_of_unity(p, exponent[i]);
  return m;
}

CycloNum MonomialMatrix::trace(int p) const {
  CycloNum t(p);
  for (long e : trace_exponents()) t += CycloNum::root_of_unity(p, e);
  return t;
}

}  // namespace pcubed
