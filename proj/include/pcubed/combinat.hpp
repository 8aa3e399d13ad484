#pragma once

#include <cstdint>
#include <span>
#include <vector>

#include "pcubed/cyclo.hpp"
#include "pcubed/groups.hpp"
#include "pcubed/layout.hpp"

namespace pcubed {

// C(a, b); zero when b < 0 or a < b.
BigInt binomial(long a, long b);

// Number of n-degree representations up to isomorphism.
BigInt count_reps(Family family, int p, long n);

// Number of n-degree representations whose invariant forms include a
// non-degenerate one (every irrep and its dual occur equally often).
BigInt count_nondegenerate(Family family, int p, long n);

// Same count with the inner binomials written as C(l + (p-3)/2, (p-3)/2) and
// C(s + (p^2-3)/2, (p^2-3)/2); kept to cross-check the two spellings.
BigInt count_nondegenerate_alt(Family family, int p, long n);

struct Census {
  long n = 0;
  BigInt total;
  BigInt nondegenerate_admitting;
  BigInt degenerate_only;
};

Census census(Family family, int p, long n);

// Multiplicities (k_1, ..., k_r) of the irreps in a direct sum decomposition.
struct MultVec {
  Family family = Family::kHeis;
  int p = 0;
  std::vector<long> k;
  long n = 0;  // sum_i d_i k_i

  // Throws std::invalid_argument when the length differs from r or an entry is negative.
  static MultVec make(const IrrepLayout& layout, std::vector<long> k);

  long at(int index) const { return k.at(index - 1); }
};

long invariant_dim(const MultVec& k, const DualPairing& pairing);
long symmetric_dim(const MultVec& k, const DualPairing& pairing);
long skew_dim(const MultVec& k, const DualPairing& pairing);
bool admits_nondegenerate(const MultVec& k, const DualPairing& pairing);

// Streams every solution of sum_i d_i k_i = n exactly once, in lexicographic
// order, without materializing the set. Requires degrees in non-decreasing
// order drawn from {1, p} with at least one linear character (all layouts
// built here qualify).
//
//   MultVecStream s(layout, n);
//   while (s.next()) use(s.current());
class MultVecStream {
 public:
  MultVecStream(const IrrepLayout& layout, long n);

  bool next() {
    if (fast_tail_ && started_ && !done_ && k_.back() > 0) {
      const std::size_t i = k_.size() - 2;
      ++k_[i];
      if (--k_.back() == 0) last_nonzero_ = static_cast<long>(i);
      changed_[0] = i;
      changed_[1] = i + 1;
      changed_count_ = 2;
      return true;
    }
    return advance();
  }
  const std::vector<long>& current() const { return k_; }
  // Positions that may differ from the previous vector (all positions for the
  // first one). May repeat an index.
  std::span<const std::size_t> changed() const { return {changed_.data(), changed_count_}; }
  MultVec current_multvec() const { return MultVec{family_, p_, k_, n_}; }

 private:
  bool advance();
  bool representable(long budget, std::size_t from) const;
  void mark(std::size_t i) { changed_[changed_count_++] = i; }

  Family family_;
  int p_;
  long n_;
  std::vector<long> degrees_;
  std::vector<long> k_;
  long last_linear_ = -1;   // index of the last degree-1 slot
  long last_nonzero_ = -1;  // index of the last non-zero multiplicity
  std::vector<std::size_t> changed_;
  std::size_t changed_count_ = 0;
  bool fast_tail_ = false;  // the last two slots trade one unit in one step
  bool started_ = false;
  bool done_ = false;
};

// Length of the enumeration stream and the number of its vectors that admit
// a non-degenerate form, both counted one vector at a time.
struct EnumerationTally {
  std::uint64_t total = 0;
  std::uint64_t nondegenerate = 0;
};

EnumerationTally tally_enumeration(const IrrepLayout& layout, long n);

}  // namespace pcubed
