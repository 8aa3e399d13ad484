#pragma once

#include <cstddef>
#include <string>
#include <vector>

#include "pcubed/cyclo.hpp"

namespace pcubed {

// Dense row-major matrix over Q(w).
class CycloMatrix {
 public:
  CycloMatrix() = default;
  CycloMatrix(int p, std::size_t rows, std::size_t cols);

  static CycloMatrix identity(int p, std::size_t n);

  int prime() const { return p_; }
  std::size_t rows() const { return rows_; }
  std::size_t cols() const { return cols_; }

  CycloNum& operator()(std::size_t r, std::size_t c) { return data_[r * cols_ + c]; }
  const CycloNum& operator()(std::size_t r, std::size_t c) const { return data_[r * cols_ + c]; }

  const std::vector<CycloNum>& entries() const { return data_; }

  CycloMatrix transpose() const;
  bool is_zero() const;
  bool is_rational() const;
  CycloNum trace() const;

  // Scales so that the first non-zero entry in row-major order is 1.
  // Leaves the zero matrix untouched.
  void normalize_leading();

  CycloMatrix& operator+=(const CycloMatrix& rhs);
  CycloMatrix& operator-=(const CycloMatrix& rhs);
  CycloMatrix& operator*=(const CycloNum& s);

  friend CycloMatrix operator+(CycloMatrix a, const CycloMatrix& b) { return a += b; }
  friend CycloMatrix operator-(CycloMatrix a, const CycloMatrix& b) { return a -= b; }
  friend CycloMatrix operator*(const CycloMatrix& a, const CycloMatrix& b);
  friend CycloMatrix operator*(CycloMatrix a, const CycloNum& s) { return a *= s; }
  friend bool operator==(const CycloMatrix& a, const CycloMatrix& b);
  friend bool operator!=(const CycloMatrix& a, const CycloMatrix& b) { return !(a == b); }

  std::string to_string(bool compact = true) const;

 private:
  int p_ = 0;
  std::size_t rows_ = 0;
  std::size_t cols_ = 0;
  std::vector<CycloNum> data_;
};

// Block diagonal matrix with the given blocks in order.
CycloMatrix block_diagonal(int p, const std::vector<const CycloMatrix*>& blocks);

// Exact rank by fraction-free elimination (pivot: first non-zero entry of the
// current column in row order).
std::size_t rank(const CycloMatrix& m);

// Rank of a family of vectors (each of equal length).
std::size_t rank_of_vectors(int p, const std::vector<std::vector<CycloNum>>& vectors);

// Basis of { v : equations * v = 0 }. One vector per free column, in column
// order; each scaled so its first non-zero coordinate is 1.
std::vector<std::vector<CycloNum>> nullspace(const CycloMatrix& equations);

}  // namespace pcubed
