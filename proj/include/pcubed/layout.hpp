#pragma once

#include <utility>
#include <vector>

#include "pcubed/groups.hpp"

namespace pcubed {

// The duality pairing A_G on irrep indices 1..r: (i, j) belongs to it iff
// rho_j is the dual of rho_i. Stored as the involution i -> i*.
class DualPairing {
 public:
  DualPairing() = default;
  // dual[i - 1] is the dual index of irrep i.
  explicit DualPairing(std::vector<int> dual);

  // Index 1 self-dual, every other index paired with its neighbour: {2,3}, {4,5}, ...
  static DualPairing adjacent(int r);

  int size() const { return static_cast<int>(dual_.size()); }
  int dual_of(int i) const { return dual_.at(i - 1); }
  bool contains(int i, int j) const { return dual_of(i) == j; }
  // All ordered pairs (i, i*), sorted by i.
  std::vector<std::pair<int, int>> pairs() const;
  std::vector<int> self_dual() const;

  friend bool operator==(const DualPairing&, const DualPairing&) = default;

 private:
  std::vector<int> dual_;
};

// Degrees and duality of the irreps of one group, in their global order.
struct IrrepLayout {
  Family family = Family::kHeis;
  int p = 0;
  std::vector<int> degrees;  // degrees[i - 1] = d_i
  DualPairing pairing;

  int r() const { return static_cast<int>(degrees.size()); }
  int degree(int i) const { return degrees.at(i - 1); }

  // The layout every construction here produces: p^3 linear characters for
  // abelian groups; p^2 linear characters then p - 1 of degree p otherwise;
  // trivial first and duals adjacent. Valid for any odd prime p.
  static IrrepLayout canonical(Family family, int p);

  friend bool operator==(const IrrepLayout&, const IrrepLayout&) = default;
};

}  // namespace pcubed
