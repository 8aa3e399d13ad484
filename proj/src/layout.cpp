#include "pcubed/layout.hpp"

#include <stdexcept>

#include "pcubed/cyclo.hpp"

namespace pcubed {

DualPairing::DualPairing(std::vector<int> dual) : dual_(std::move(dual)) {
  const int r = size();
  for (int i = 1; i <= r; ++i) {
    const int j = dual_of(i);
    if (j < 1 || j > r || dual_of(j) != i) {
      throw std::invalid_argument("dual pairing is not an involution at index " + std::to_string(i));
    }
  }
}

DualPairing DualPairing::adjacent(int r) {
  if (r < 1 || r % 2 == 0) throw std::invalid_argument("adjacent pairing needs an odd irrep count");
  std::vector<int> dual(r);
  dual[0] = 1;
  for (int i = 2; i <= r; i += 2) {
    dual[i - 1] = i + 1;
    dual[i] = i;
  }
  return DualPairing(std::move(dual));
}

std::vector<std::pair<int, int>> DualPairing::pairs() const {
  std::vector<std::pair<int, int>> out;
  for (int i = 1; i <= size(); ++i) out.emplace_back(i, dual_of(i));
  return out;
}

std::vector<int> DualPairing::self_dual() const {
  std::vector<int> out;
  for (int i = 1; i <= size(); ++i)
    if (dual_of(i) == i) out.push_back(i);
  return out;
}

IrrepLayout IrrepLayout::canonical(Family family, int p) {
  require_odd_prime(p);
  IrrepLayout l;
  l.family = family;
  l.p = p;
  const int p2 = p * p;
  if (is_abelian(family)) {
    l.degrees.assign(static_cast<std::size_t>(p2) * p, 1);
  } else {
    l.degrees.assign(p2, 1);
    l.degrees.insert(l.degrees.end(), p - 1, p);
  }
  l.pairing = DualPairing::adjacent(l.r());
  return l;
}

}  // namespace pcubed
