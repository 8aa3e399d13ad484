#pragma once

#include <array>
#include <string>
#include <string_view>
#include <vector>

namespace pcubed {

// The five isomorphism types of groups of order p^3, p odd.
enum class Family { kHeis, kGp, kZp3, kZp2xZp, kZpxZpxZp };

inline constexpr std::array<Family, 5> kAllFamilies = {Family::kHeis, Family::kGp, Family::kZp3,
                                                       Family::kZp2xZp, Family::kZpxZpxZp};

bool is_abelian(Family f);
// CLI spelling: heis, gp, zp3, zp2xzp, zpxzpxzp.
std::string_view family_name(Family f);
Family parse_family(std::string_view name);

// Coordinates of one group element:
//   Heis:  (alpha, beta, gamma), the unitriangular matrix [[1,alpha,beta],[0,1,gamma],[0,0,1]] over Z_p
//   Gp:    (gamma, delta), the matrix [[1+p*gamma, delta],[0,1]] with gamma in Z_p, delta in Z_{p^2}
//   Zp3:   (a) in Z_{p^3}
//   Zp2xZp: (a, b) in Z_{p^2} x Z_p
//   ZpxZpxZp: (a, b, c) in Z_p^3
// Unused trailing coordinates are zero.
struct GroupElem {
  Family family = Family::kHeis;
  std::array<int, 3> coords{0, 0, 0};

  friend bool operator==(const GroupElem&, const GroupElem&) = default;
  std::string to_string() const;
};

// A relation lhs = rhs between words in the generators. A word is a list of
// (generator index, exponent) factors read left to right.
struct Relation {
  using Word = std::vector<std::pair<int, long>>;
  std::string text;
  Word lhs;
  Word rhs;
};

// A fully materialized group of order p^3. Elements are indexed 0..p^3-1 with
// the identity at index 0; products go through a precomputed Cayley table.
class Group {
 public:
  static Group make(Family family, int p);

  Family family() const { return family_; }
  int prime() const { return p_; }
  int order() const { return static_cast<int>(elements_.size()); }
  bool abelian() const { return is_abelian(family_); }

  const std::vector<GroupElem>& elements() const { return elements_; }
  const GroupElem& element(int i) const { return elements_.at(i); }
  int index_of(const GroupElem& g) const;

  int identity() const { return 0; }
  int multiply(int a, int b) const { return table_[static_cast<std::size_t>(a) * order() + b]; }
  int inverse(int a) const { return inverse_[a]; }
  int power(int a, long e) const;
  int element_order(int a) const;

  // Element-level arithmetic; throws std::invalid_argument on a family mismatch.
  GroupElem multiply(const GroupElem& a, const GroupElem& b) const;
  GroupElem inverse(const GroupElem& a) const;
  GroupElem identity_element() const { return elements_[0]; }

  // Canonical generators in a frozen order: Heis (x, a), Gp (x, y),
  // Zp3 (a), Zp2xZp (a, b), ZpxZpxZp (a, b, c).
  const std::vector<int>& generators() const { return generators_; }
  const std::vector<std::string>& generator_names() const { return generator_names_; }
  const std::vector<Relation>& relations() const { return relations_; }
  int evaluate(const Relation::Word& w) const;

  std::vector<int> center() const;

  // Classes ordered by smallest member; class 0 is {identity}.
  const std::vector<std::vector<int>>& conjugacy_classes() const { return classes_; }
  int class_of(int a) const { return class_of_[a]; }
  int class_count() const { return static_cast<int>(classes_.size()); }

 private:
  Group() = default;
  GroupElem raw_multiply(const GroupElem& a, const GroupElem& b) const;
  int encode(const GroupElem& g) const;

  Family family_ = Family::kHeis;
  int p_ = 0;
  std::array<int, 3> radix_{1, 1, 1};
  std::vector<GroupElem> elements_;
  std::vector<int> table_;
  std::vector<int> inverse_;
  std::vector<int> generators_;
  std::vector<std::string> generator_names_;
  std::vector<Relation> relations_;
  std::vector<std::vector<int>> classes_;
  std::vector<int> class_of_;
};

}  // namespace pcubed
