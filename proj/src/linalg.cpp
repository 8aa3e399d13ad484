#include "pcubed/linalg.hpp"

#include <optional>
#include <sstream>
#include <stdexcept>

namespace pcubed {

CycloMatrix::CycloMatrix(int p, std::size_t rows, std::size_t cols)
    : p_(p), rows_(rows), cols_(cols), data_(rows * cols) {
  require_odd_prime(p);
}

CycloMatrix CycloMatrix::identity(int p, std::size_t n) {
  CycloMatrix m(p, n, n);
  for (std::size_t i = 0; i < n; ++i) m(i, i) = CycloNum(p, 1);
  return m;
}

CycloMatrix CycloMatrix::transpose() const {
  CycloMatrix t(p_, cols_, rows_);
  for (std::size_t r = 0; r < rows_; ++r)
    for (std::size_t c = 0; c < cols_; ++c) t(c, r) = (*this)(r, c);
  return t;
}

bool CycloMatrix::is_zero() const {
  for (const auto& x : data_)
    if (!x.is_zero()) return false;
  return true;
}

bool CycloMatrix::is_rational() const {
  for (const auto& x : data_)
    if (!x.is_rational()) return false;
  return true;
}

CycloNum CycloMatrix::trace() const {
  CycloNum t(p_);
  for (std::size_t i = 0; i < std::min(rows_, cols_); ++i) t += (*this)(i, i);
  return t;
}

void CycloMatrix::normalize_leading() {
  for (const auto& x : data_) {
    if (x.is_zero()) continue;
    if (x.is_one()) return;
    const CycloNum s = x.inverse();
    for (auto& y : data_)
      if (!y.is_zero()) y = y * s;
    return;
  }
}

CycloMatrix& CycloMatrix::operator+=(const CycloMatrix& rhs) {
  if (rows_ != rhs.rows_ || cols_ != rhs.cols_) throw std::invalid_argument("matrix shape mismatch");
  for (std::size_t i = 0; i < data_.size(); ++i) data_[i] += rhs.data_[i];
  return *this;
}

CycloMatrix& CycloMatrix::operator-=(const CycloMatrix& rhs) {
  if (rows_ != rhs.rows_ || cols_ != rhs.cols_) throw std::invalid_argument("matrix shape mismatch");
  for (std::size_t i = 0; i < data_.size(); ++i) data_[i] -= rhs.data_[i];
  return *this;
}

CycloMatrix& CycloMatrix::operator*=(const CycloNum& s) {
  for (auto& x : data_)
    if (!x.is_zero()) x = x * s;
  return *this;
}

CycloMatrix operator*(const CycloMatrix& a, const CycloMatrix& b) {
  if (a.cols_ != b.rows_) throw std::invalid_argument("matrix shape mismatch");
  CycloMatrix out(a.p_, a.rows_, b.cols_);
  for (std::size_t i = 0; i < a.rows_; ++i) {
    for (std::size_t k = 0; k < a.cols_; ++k) {
      const CycloNum& x = a(i, k);
      if (x.is_zero()) continue;
      for (std::size_t j = 0; j < b.cols_; ++j) {
        const CycloNum& y = b(k, j);
        if (!y.is_zero()) out(i, j) += x * y;
      }
    }
  }
  return out;
}

bool operator==(const CycloMatrix& a, const CycloMatrix& b) {
  return a.rows_ == b.rows_ && a.cols_ == b.cols_ && a.data_ == b.data_;
}

std::string CycloMatrix::to_string(bool compact) const {
  std::ostringstream os;
  for (std::size_t r = 0; r < rows_; ++r) {
    os << "[";
    for (std::size_t c = 0; c < cols_; ++c) {
      if (c) os << ", ";
      const CycloNum& x = (*this)(r, c);
      os << (compact ? x.to_compact_string() : x.to_string());
    }
    os << "]\n";
  }
  return os.str();
}

CycloMatrix block_diagonal(int p, const std::vector<const CycloMatrix*>& blocks) {
  std::size_t n = 0;
  for (const auto* b : blocks) n += b->rows();
  CycloMatrix out(p, n, n);
  std::size_t off = 0;
  for (const auto* b : blocks) {
    for (std::size_t r = 0; r < b->rows(); ++r)
      for (std::size_t c = 0; c < b->cols(); ++c) out(off + r, off + c) = (*b)(r, c);
    off += b->rows();
  }
  return out;
}

namespace {

using Row = std::vector<CycloNum>;
using QRow = std::vector<Rational>;

struct Echelon {
  std::vector<std::size_t> pivot_cols;
  std::vector<Row> rows;  // rows[i] is the pivot row of pivot_cols[i]
};

struct QEchelon {
  std::vector<std::size_t> pivot_cols;
  std::vector<QRow> rows;  // pivots normalized to 1
};

std::optional<CycloNum> cheap_inverse(const CycloNum& x) {
  if (x.is_rational() || x.root_of_unity_exponent()) return x.inverse();
  return std::nullopt;
}

// Rescales a row without changing its span: a single non-zero entry becomes
// 1; otherwise the rational content of all coefficients is divided out.
void normalize_row(Row& row, int p) {
  std::size_t nnz = 0, last = 0;
  for (std::size_t j = 0; j < row.size(); ++j) {
    if (!row[j].is_zero()) {
      ++nnz;
      last = j;
    }
  }
  if (nnz == 0) return;
  if (nnz == 1) {
    row[last] = CycloNum(p, 1);
    return;
  }
  BigInt g = 0, l = 1;
  for (const auto& x : row) {
    for (const auto& [e, c] : x.terms()) {
      mpz_gcd(g.get_mpz_t(), g.get_mpz_t(), c.get_num_mpz_t());
      mpz_lcm(l.get_mpz_t(), l.get_mpz_t(), c.get_den_mpz_t());
    }
  }
  if (g == 1 && l == 1) return;
  Rational scale(l, g);
  scale.canonicalize();
  for (auto& x : row)
    if (!x.is_zero()) x *= scale;
}

// Fraction-free elimination. With reduce_above every pivot column ends up
// zero outside its pivot row.
Echelon eliminate(std::vector<Row> rows, std::size_t ncols, int p, bool reduce_above) {
  Echelon out;
  std::size_t rank = 0;
  for (std::size_t c = 0; c < ncols && rank < rows.size(); ++c) {
    std::size_t pr = rank;
    while (pr < rows.size() && rows[pr][c].is_zero()) ++pr;
    if (pr == rows.size()) continue;
    std::swap(rows[rank], rows[pr]);
    Row& piv_row = rows[rank];
    if (auto s = cheap_inverse(piv_row[c])) {
      for (auto& x : piv_row)
        if (!x.is_zero()) x = x * *s;
    } else {
      normalize_row(piv_row, p);
    }
    const CycloNum piv = piv_row[c];
    const bool unit = piv.is_one();
    for (std::size_t r = reduce_above ? 0 : rank + 1; r < rows.size(); ++r) {
      if (r == rank || rows[r][c].is_zero()) continue;
      Row& row = rows[r];
      const CycloNum e = row[c];
      // Earlier pivot rows carry their own pivots left of c; those must be
      // rescaled too when the current pivot is not 1.
      for (std::size_t j = (unit || r > rank) ? c : 0; j < ncols; ++j) {
        const bool pz = piv_row[j].is_zero();
        if (pz && (unit || row[j].is_zero())) continue;
        CycloNum v = unit ? row[j] : piv * row[j];
        if (!pz) v -= e * piv_row[j];
        row[j] = std::move(v);
      }
      normalize_row(row, p);
    }
    out.pivot_cols.push_back(c);
    ++rank;
  }
  rows.resize(rank);
  out.rows = std::move(rows);
  return out;
}

QEchelon eliminate_rational(std::vector<QRow> rows, std::size_t ncols, bool reduce_above) {
  QEchelon out;
  std::size_t rank = 0;
  Rational tmp;
  for (std::size_t c = 0; c < ncols && rank < rows.size(); ++c) {
    std::size_t pr = rank;
    while (pr < rows.size() && sgn(rows[pr][c]) == 0) ++pr;
    if (pr == rows.size()) continue;
    std::swap(rows[rank], rows[pr]);
    QRow& piv_row = rows[rank];
    if (piv_row[c] != 1) {
      const Rational s = 1 / piv_row[c];
      for (auto& x : piv_row)
        if (sgn(x) != 0) x *= s;
    }
    for (std::size_t r = reduce_above ? 0 : rank + 1; r < rows.size(); ++r) {
      if (r == rank || sgn(rows[r][c]) == 0) continue;
      const Rational e = rows[r][c];
      for (std::size_t j = c; j < ncols; ++j) {
        if (sgn(piv_row[j]) == 0) continue;
        mpq_mul(tmp.get_mpq_t(), e.get_mpq_t(), piv_row[j].get_mpq_t());
        rows[r][j] -= tmp;
      }
    }
    out.pivot_cols.push_back(c);
    ++rank;
  }
  rows.resize(rank);
  out.rows = std::move(rows);
  return out;
}

bool all_rational(const std::vector<Row>& rows) {
  for (const auto& row : rows)
    for (const auto& x : row)
      if (!x.is_rational()) return false;
  return true;
}

std::vector<QRow> to_rational(const std::vector<Row>& rows) {
  std::vector<QRow> out;
  out.reserve(rows.size());
  for (const auto& row : rows) {
    QRow q;
    q.reserve(row.size());
    for (const auto& x : row) q.push_back(x.rational_value());
    out.push_back(std::move(q));
  }
  return out;
}

std::vector<Row> rows_of(const CycloMatrix& m) {
  std::vector<Row> rows(m.rows());
  for (std::size_t r = 0; r < m.rows(); ++r) {
    rows[r].assign(m.entries().begin() + r * m.cols(), m.entries().begin() + (r + 1) * m.cols());
  }
  return rows;
}

std::size_t rank_rows(std::vector<Row> rows, std::size_t ncols, int p) {
  if (all_rational(rows)) return eliminate_rational(to_rational(rows), ncols, false).rows.size();
  return eliminate(std::move(rows), ncols, p, false).rows.size();
}

void normalize_vector(std::vector<CycloNum>& v) {
  for (const auto& x : v) {
    if (x.is_zero()) continue;
    if (x.is_one()) return;
    const CycloNum s = x.inverse();
    for (auto& y : v)
      if (!y.is_zero()) y = y * s;
    return;
  }
}

}  // namespace

std::size_t rank(const CycloMatrix& m) { return rank_rows(rows_of(m), m.cols(), m.prime()); }

std::size_t rank_of_vectors(int p, const std::vector<std::vector<CycloNum>>& vectors) {
  if (vectors.empty()) return 0;
  return rank_rows(vectors, vectors.front().size(), p);
}

std::vector<std::vector<CycloNum>> nullspace(const CycloMatrix& equations) {
  const int p = equations.prime();
  const std::size_t n = equations.cols();
  std::vector<Row> rows = rows_of(equations);
  std::vector<std::vector<CycloNum>> basis;

  if (all_rational(rows)) {
    QEchelon ech = eliminate_rational(to_rational(rows), n, true);
    std::vector<bool> is_pivot(n, false);
    for (auto c : ech.pivot_cols) is_pivot[c] = true;
    for (std::size_t f = 0; f < n; ++f) {
      if (is_pivot[f]) continue;
      std::vector<CycloNum> v(n, CycloNum(p));
      v[f] = CycloNum(p, 1);
      for (std::size_t i = 0; i < ech.rows.size(); ++i) {
        if (sgn(ech.rows[i][f]) != 0) v[ech.pivot_cols[i]] = CycloNum(p, -ech.rows[i][f]);
      }
      normalize_vector(v);
      basis.push_back(std::move(v));
    }
    return basis;
  }

  Echelon ech = eliminate(std::move(rows), n, p, true);
  std::vector<bool> is_pivot(n, false);
  for (auto c : ech.pivot_cols) is_pivot[c] = true;
  std::vector<std::optional<CycloNum>> pivot_inv(ech.rows.size());
  for (std::size_t f = 0; f < n; ++f) {
    if (is_pivot[f]) continue;
    std::vector<CycloNum> v(n, CycloNum(p));
    v[f] = CycloNum(p, 1);
    for (std::size_t i = 0; i < ech.rows.size(); ++i) {
      const CycloNum& a = ech.rows[i][f];
      if (a.is_zero()) continue;
      if (!pivot_inv[i]) pivot_inv[i] = ech.rows[i][ech.pivot_cols[i]].inverse();
      v[ech.pivot_cols[i]] = -(a * *pivot_inv[i]);
    }
    normalize_vector(v);
    basis.push_back(std::move(v));
  }
  return basis;
}

}  // namespace pcubed
