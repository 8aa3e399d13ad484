#include "pcubed/solver.hpp"

#include <algorithm>

namespace pcubed {

namespace {

CycloMatrix slice(const CycloMatrix& m, std::size_t r0, std::size_t c0, std::size_t rows, std::size_t cols) {
  CycloMatrix out(m.prime(), rows, cols);
  for (std::size_t r = 0; r < rows; ++r)
    for (std::size_t c = 0; c < cols; ++c) out(r, c) = m(r0 + r, c0 + c);
  return out;
}

// Non-zero entries of each column: nz[c] = {(row, value)}.
using ColumnEntries = std::vector<std::vector<std::pair<std::size_t, const CycloNum*>>>;

ColumnEntries column_entries(const CycloMatrix& m) {
  ColumnEntries nz(m.cols());
  for (std::size_t r = 0; r < m.rows(); ++r)
    for (std::size_t c = 0; c < m.cols(); ++c)
      if (!m(r, c).is_zero()) nz[c].emplace_back(r, &m(r, c));
  return nz;
}

// Null space of X -> A_g^t X B_g - X over all g, X of shape rows(A) x rows(B);
// each solution returned as a row-major matrix.
std::vector<CycloMatrix> solve_pair(int p, const std::vector<CycloMatrix>& as, const std::vector<CycloMatrix>& bs) {
  const std::size_t rows = as.front().rows(), cols = bs.front().rows();
  const std::size_t vars = rows * cols;
  CycloMatrix eq(p, as.size() * vars, vars);
  const CycloNum one(p, 1);
  for (std::size_t g = 0; g < as.size(); ++g) {
    const ColumnEntries an = column_entries(as[g]);
    const ColumnEntries bn = column_entries(bs[g]);
    for (std::size_t r = 0; r < rows; ++r) {
      for (std::size_t c = 0; c < cols; ++c) {
        const std::size_t row = g * vars + r * cols + c;
        // (A^t X B)_{rc} = sum_{a,b} A_{ar} X_{ab} B_{bc}
        for (const auto& [a, av] : an[r])
          for (const auto& [b, bv] : bn[c]) eq(row, a * cols + b) += *av * *bv;
        eq(row, r * cols + c) -= one;
      }
    }
  }
  std::vector<CycloMatrix> out;
  for (const auto& v : nullspace(eq)) {
    CycloMatrix x(p, rows, cols);
    for (std::size_t i = 0; i < vars; ++i) x(i / cols, i % cols) = v[i];
    out.push_back(std::move(x));
  }
  return out;
}

void record_support(InvSpace& space, const CycloMatrix& x, const RepAssembly& rep) {
  for (std::size_t r = 0; r < x.rows(); ++r)
    for (std::size_t c = 0; c < x.cols(); ++c)
      if (!x(r, c).is_zero()) space.block_support.emplace(rep.irrep_of_row[r], rep.irrep_of_row[c]);
}

}  // namespace

RepAssembly assemble(const MultVec& k, const IrrepSet& irreps) {
  if (k.family != irreps.group().family() || k.p != irreps.prime())
    throw std::invalid_argument("multiplicity vector belongs to a different group");
  if (static_cast<int>(k.k.size()) != irreps.size())
    throw std::invalid_argument("multiplicity vector length does not match the irrep count");
  if (k.n <= 0) throw std::invalid_argument("the zero representation has no matrices");
  const int p = irreps.prime();
  RepAssembly rep;
  rep.k = k;
  std::size_t offset = 0;
  for (int i = 1; i <= irreps.size(); ++i) {
    rep.offsets.push_back(offset);
    const std::size_t size = rep.block_size(i, irreps);
    rep.irrep_of_row.insert(rep.irrep_of_row.end(), size, i);
    offset += size;
  }
  if (offset != rep.n()) throw std::invalid_argument("multiplicity vector degree is inconsistent");
  const std::size_t gens = irreps.irrep(1).generator_images.size();
  for (std::size_t g = 0; g < gens; ++g) {
    std::vector<CycloMatrix> dense;
    for (int i = 1; i <= irreps.size(); ++i)
      if (k.at(i) > 0) dense.push_back(irreps.irrep(i).generator_images[g].to_dense(p));
    std::vector<const CycloMatrix*> blocks;
    std::size_t d = 0;
    for (int i = 1; i <= irreps.size(); ++i) {
      if (k.at(i) == 0) continue;
      for (long copy = 0; copy < k.at(i); ++copy) blocks.push_back(&dense[d]);
      ++d;
    }
    rep.generator_matrices.push_back(block_diagonal(p, blocks));
  }
  return rep;
}

CycloMatrix assembled_element(const RepAssembly& rep, const IrrepSet& irreps, int element) {
  const int p = irreps.prime();
  std::vector<CycloMatrix> dense;
  std::vector<const CycloMatrix*> blocks;
  dense.reserve(irreps.size());
  for (int i = 1; i <= irreps.size(); ++i)
    dense.push_back(rep.k.at(i) > 0 ? irreps.image(i, element).to_dense(p) : CycloMatrix());
  for (int i = 1; i <= irreps.size(); ++i)
    for (long copy = 0; copy < rep.k.at(i); ++copy) blocks.push_back(&dense[i - 1]);
  return block_diagonal(p, blocks);
}

InvSpace solve_invariance(int p, const std::vector<CycloMatrix>& matrices) {
  if (matrices.empty()) throw std::invalid_argument("at least one matrix is required");
  InvSpace space;
  space.n = matrices.front().rows();
  space.basis = solve_pair(p, matrices, matrices);
  space.dimension = static_cast<long>(space.basis.size());
  return space;
}

InvSpace invariant_space(const RepAssembly& rep, const IrrepSet& irreps, SolveStrategy strategy) {
  const int p = irreps.prime();
  if (strategy == SolveStrategy::kAuto) strategy = rep.n() <= 8 ? SolveStrategy::kFull : SolveStrategy::kBlockPairs;
  InvSpace space;
  space.n = rep.n();
  if (strategy == SolveStrategy::kFull) {
    space.basis = solve_pair(p, rep.generator_matrices, rep.generator_matrices);
  } else {
    std::vector<int> present;
    for (int i = 1; i <= irreps.size(); ++i)
      if (rep.k.at(i) > 0) present.push_back(i);
    std::vector<std::vector<CycloMatrix>> diag(present.size());
    for (std::size_t t = 0; t < present.size(); ++t) {
      const std::size_t off = rep.offsets[present[t] - 1];
      const std::size_t size = rep.block_size(present[t], irreps);
      for (const auto& g : rep.generator_matrices) diag[t].push_back(slice(g, off, off, size, size));
    }
    for (std::size_t s = 0; s < present.size(); ++s) {
      for (std::size_t t = 0; t < present.size(); ++t) {
        const std::size_t r0 = rep.offsets[present[s] - 1], c0 = rep.offsets[present[t] - 1];
        for (const auto& block : solve_pair(p, diag[s], diag[t])) {
          CycloMatrix x(p, rep.n(), rep.n());
          for (std::size_t r = 0; r < block.rows(); ++r)
            for (std::size_t c = 0; c < block.cols(); ++c) x(r0 + r, c0 + c) = block(r, c);
          space.basis.push_back(std::move(x));
        }
      }
    }
  }
  space.dimension = static_cast<long>(space.basis.size());
  for (const auto& x : space.basis) record_support(space, x, rep);
  return space;
}

bool is_invariant(const CycloMatrix& x, const std::vector<CycloMatrix>& matrices) {
  for (const auto& c : matrices)
    if (c.transpose() * x * c != x) return false;
  return true;
}

std::optional<CycloMatrix> nondegenerate_witness(const MultVec& k, const IrrepSet& irreps) {
  const DualPairing& pairing = irreps.pairing();
  if (!admits_nondegenerate(k, pairing)) return std::nullopt;
  const int p = irreps.prime();
  if (k.n == 0) return CycloMatrix(p, 0, 0);
  const RepAssembly rep = assemble(k, irreps);
  CycloMatrix x(p, rep.n(), rep.n());
  const CycloNum one(p, 1);
  for (const auto& [i, j] : pairing.pairs()) {
    const long m = k.at(i);
    const int d = irreps.irrep(i).degree;
    if (m == 0) continue;
    const std::size_t r0 = rep.offsets[i - 1], c0 = rep.offsets[j - 1];
    for (long copy = 0; copy < m; ++copy) {
      const std::size_t base = static_cast<std::size_t>(copy * d);
      for (int t = 0; t < d; ++t) {
        // Self-dual blocks get the identity, paired degree-p blocks get L.
        const int col = (i == j || d == 1) ? t : d - 1 - t;
        x(r0 + base + t, c0 + base + col) = one;
      }
    }
  }
  if (!is_invariant(x, rep.generator_matrices)) throw SolverError("constructed witness is not invariant");
  if (rank(x) != rep.n()) throw SolverError("constructed witness is singular");
  return x;
}

long symmetric_part_dim(const InvSpace& space) {
  std::vector<std::vector<CycloNum>> parts;
  for (const auto& x : space.basis) parts.push_back((x + x.transpose()).entries());
  return parts.empty() ? 0 : static_cast<long>(rank_of_vectors(space.basis.front().prime(), parts));
}

long skew_part_dim(const InvSpace& space) {
  std::vector<std::vector<CycloNum>> parts;
  for (const auto& x : space.basis) parts.push_back((x - x.transpose()).entries());
  return parts.empty() ? 0 : static_cast<long>(rank_of_vectors(space.basis.front().prime(), parts));
}

std::vector<std::pair<int, int>> support_outside_pairing(const InvSpace& space, const DualPairing& pairing) {
  std::vector<std::pair<int, int>> out;
  for (const auto& [i, j] : space.block_support)
    if (!pairing.contains(i, j)) out.emplace_back(i, j);
  return out;
}

std::vector<std::string> l_shape_violations(const InvSpace& space, const RepAssembly& rep, const IrrepSet& irreps) {
  std::vector<std::string> out;
  const int p = irreps.prime();
  for (std::size_t b = 0; b < space.basis.size(); ++b) {
    const CycloMatrix& x = space.basis[b];
    for (int i = 1; i <= irreps.size(); ++i) {
      if (irreps.irrep(i).degree != p || rep.k.at(i) == 0) continue;
      for (int j = 1; j <= irreps.size(); ++j) {
        if (irreps.irrep(j).degree != p || rep.k.at(j) == 0) continue;
        for (long u = 0; u < rep.k.at(i); ++u) {
          for (long v = 0; v < rep.k.at(j); ++v) {
            const std::size_t r0 = rep.offsets[i - 1] + static_cast<std::size_t>(u * p);
            const std::size_t c0 = rep.offsets[j - 1] + static_cast<std::size_t>(v * p);
            const CycloNum& scale = x(r0, c0 + p - 1);
            bool ok = true;
            for (int r = 0; r < p && ok; ++r)
              for (int c = 0; c < p && ok; ++c)
                ok = r + c == p - 1 ? x(r0 + r, c0 + c) == scale : x(r0 + r, c0 + c).is_zero();
            if (!ok) {
              out.push_back("basis " + std::to_string(b) + " block (" + std::to_string(i) + "," + std::to_string(j) +
                            ") copy (" + std::to_string(u) + "," + std::to_string(v) + ") is not a multiple of L");
            }
          }
        }
      }
    }
  }
  return out;
}

CycloMatrix random_member(const InvSpace& space, std::mt19937_64& rng) {
  if (space.basis.empty()) throw std::invalid_argument("the zero space has no random members to draw");
  std::uniform_int_distribution<long> num(1, 9), den(1, 5), sign(0, 1);
  CycloMatrix out = space.basis.front() * CycloNum(space.basis.front().prime(), 0);
  for (const auto& x : space.basis) {
    Rational c(num(rng) * (sign(rng) ? 1 : -1), den(rng));
    c.canonicalize();
    out += x * CycloNum(x.prime(), c);
  }
  return out;
}

InvSpace charp_mode(long n, int p) {
  if (n < 1) throw std::invalid_argument("charp mode needs n >= 1");
  require_odd_prime(p);
  const auto size = static_cast<std::size_t>(n);
  // Every element acts as the identity; two generators mirror the groups here.
  const std::vector<CycloMatrix> action(2, CycloMatrix::identity(p, size));
  InvSpace space = solve_invariance(p, action);
  return space;
}

}  // namespace pcubed
