#pragma once

#include <vector>

#include "pcubed/linalg.hpp"

namespace pcubed {

// Invertible monomial matrix whose non-zero entries are powers of w: row i
// holds w^exponent[i] in column column[i]. Exponents are reduced mod p^3.
// Every irreducible representation built here takes values in this form.
struct MonomialMatrix {
  long order = 1;  // p^3
  std::vector<int> column;
  std::vector<long> exponent;

  static MonomialMatrix identity(long order, int dim);
  // Cyclic shift raised to the power s: row i has its 1 in column i + s (mod dim).
  static MonomialMatrix shift(long order, int dim, long s);
  static MonomialMatrix diagonal(long order, std::vector<long> exponents);

  int dim() const { return static_cast<int>(column.size()); }
  bool is_identity() const;
  MonomialMatrix inverse() const;
  MonomialMatrix transpose() const { return inverse_transpose().inverse(); }
  // (M^t)^{-1}, the image under the dual representation.
  MonomialMatrix inverse_transpose() const;
  MonomialMatrix pow(long e) const;
  MonomialMatrix scaled(long exponent_shift) const;

  // Exponents of w on the diagonal (fixed points of the column map).
  std::vector<long> trace_exponents() const;

  CycloMatrix to_dense(int p) const;
  CycloNum trace(int p) const;

  friend MonomialMatrix operator*(const MonomialMatrix& a, const MonomialMatrix& b);
  friend bool operator==(const MonomialMatrix& a, const MonomialMatrix& b) {
    return a.column == b.column && a.exponent == b.exponent;
  }
};

}  // namespace pcubed
