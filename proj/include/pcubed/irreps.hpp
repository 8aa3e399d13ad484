#pragma once

#include <span>
#include <stdexcept>
#include <string>
#include <vector>

#include "pcubed/cyclo.hpp"
#include "pcubed/groups.hpp"
#include "pcubed/layout.hpp"
#include "pcubed/linalg.hpp"
#include "pcubed/monomial.hpp"

namespace pcubed {

// Raised when a constructed representation fails a relation, the
// homomorphism check or the orthogonality relations.
class IrrepVerificationError : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

struct Irrep {
  int index = 0;  // 1-based; index 1 is the trivial representation
  int degree = 1;
  std::string label;
  std::vector<MonomialMatrix> generator_images;
  std::vector<CycloNum> character;  // indexed by conjugacy class
  int dual_index = 0;
};

// All irreducible representations of one group over Q(w), in the global
// order: trivial first, remaining linear characters as dual-adjacent pairs
// sorted by generator exponents, degree-p representations last.
class IrrepSet {
 public:
  // Builds and verifies the full list. Throws IrrepVerificationError naming
  // the offending irrep if any check fails.
  static IrrepSet build(const Group& group);

  const Group& group() const { return group_; }
  int prime() const { return group_.prime(); }
  int size() const { return static_cast<int>(irreps_.size()); }
  const std::vector<Irrep>& irreps() const { return irreps_; }
  const Irrep& irrep(int index) const { return irreps_.at(index - 1); }

  int dual_of(int index) const { return irrep(index).dual_index; }
  const DualPairing& pairing() const { return pairing_; }
  IrrepLayout layout() const;

  // Image of a group element (by index) under irrep `index`.
  const MonomialMatrix& image(int index, int element) const {
    return images_.at(index - 1).at(element);
  }
  CycloMatrix rep_matrix(int index, int element) const;
  CycloMatrix rep_matrix(int index, const GroupElem& g) const;
  // Images of the group generators, in generator order, as dense matrices.
  std::vector<CycloMatrix> generator_matrices(int index) const;

  CycloNum inner_product(int i, int j) const;

  // Construction log, e.g. when a diagonal generator image had to be rephased.
  const std::vector<std::string>& notes() const { return notes_; }

 private:
  explicit IrrepSet(const Group& group) : group_(group) {}

  void add(std::string label, std::vector<MonomialMatrix> gens);
  void compute_images_and_characters();
  void verify_orthogonality() const;
  void compute_duals();

  Group group_;
  std::vector<Irrep> irreps_;
  std::vector<std::vector<MonomialMatrix>> images_;
  // trace_exponents_[i][c]: exponents of w summing to the character of irrep
  // i + 1 on class c.
  std::vector<std::vector<std::vector<long>>> trace_exponents_;
  DualPairing pairing_;
  std::vector<std::string> notes_;
};

// (1/|G|) sum_g chi(g) psi(g^-1), with both class functions given per
// conjugacy class of `group`.
CycloNum character_inner_product(const Group& group, std::span<const CycloNum> chi,
                                 std::span<const CycloNum> psi);

// Checks the tabulated closed forms (central scalars of the degree-p irreps,
// the column layout of the Z_{p^2} x Z_p table) against the constructed
// irreps. One line per check, prefixed "ok:" or "mismatch:".
std::vector<std::string> tabulated_form_report(const IrrepSet& irreps);

}  // namespace pcubed
