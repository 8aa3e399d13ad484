#pragma once

#include <cstdint>
#include <optional>
#include <random>
#include <set>
#include <stdexcept>
#include <string>
#include <utility>
#include <vector>

#include "pcubed/combinat.hpp"
#include "pcubed/irreps.hpp"
#include "pcubed/linalg.hpp"

namespace pcubed {

// Raised when a constructed object fails its own exact verification.
class SolverError : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

// Block-diagonal representation with k_i copies of irrep i, in irrep order.
struct RepAssembly {
  MultVec k;
  std::vector<CycloMatrix> generator_matrices;
  std::vector<std::size_t> offsets;  // offsets[i - 1]: first row of the irrep-i block
  std::vector<int> irrep_of_row;     // 1-based irrep index owning each row

  std::size_t n() const { return static_cast<std::size_t>(k.n); }
  std::size_t block_size(int i, const IrrepSet& irreps) const {
    return static_cast<std::size_t>(irreps.irrep(i).degree * k.at(i));
  }
};

// Throws std::invalid_argument for n = 0 or a vector that does not fit the irreps.
RepAssembly assemble(const MultVec& k, const IrrepSet& irreps);

// Image of an arbitrary group element under the assembled representation.
CycloMatrix assembled_element(const RepAssembly& rep, const IrrepSet& irreps, int element);

struct InvSpace {
  std::size_t n = 0;
  long dimension = 0;
  std::vector<CycloMatrix> basis;
  std::set<std::pair<int, int>> block_support;  // (i, j) irrep blocks touched by the basis
};

enum class SolveStrategy {
  kAuto,        // full system up to n = 8, block pairs beyond
  kFull,        // one n^2-variable system
  kBlockPairs,  // one system per (i, j) with k_i, k_j > 0
};

// Exact solution space of C^t X C = X over all generator images C.
InvSpace invariant_space(const RepAssembly& rep, const IrrepSet& irreps,
                         SolveStrategy strategy = SolveStrategy::kAuto);

// Solution space of C^t X C = X for an explicit list of matrices; no block
// bookkeeping.
InvSpace solve_invariance(int p, const std::vector<CycloMatrix>& matrices);

bool is_invariant(const CycloMatrix& x, const std::vector<CycloMatrix>& matrices);

// Identity on the trivial block, I_m on each degree-1 dual pair block and
// I_m (x) L on each degree-p dual pair block, L the anti-diagonal. Returns
// nothing when some dual pair has unequal multiplicities. Throws SolverError
// if the constructed matrix is not invariant or not of full rank.
std::optional<CycloMatrix> nondegenerate_witness(const MultVec& k, const IrrepSet& irreps);

// Dimensions of the symmetric and skew-symmetric parts of a computed space.
long symmetric_part_dim(const InvSpace& space);
long skew_part_dim(const InvSpace& space);

// Block pairs touched by the basis that are not dual pairs.
std::vector<std::pair<int, int>> support_outside_pairing(const InvSpace& space, const DualPairing& pairing);

// Degree-p sub-blocks of basis matrices that are not a scalar multiple of L.
std::vector<std::string> l_shape_violations(const InvSpace& space, const RepAssembly& rep, const IrrepSet& irreps);

// Linear combination of the basis with random non-zero rational coefficients.
CycloMatrix random_member(const InvSpace& space, std::mt19937_64& rng);

// Invariant forms when every group element acts trivially on F^n: all of
// M_n(F). Solved with the same elimination as the other spaces.
InvSpace charp_mode(long n, int p = 3);

}  // namespace pcubed
