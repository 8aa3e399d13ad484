#include <algorithm>
#include <random>
#include <set>
#include <stdexcept>
#include <vector>

#include <gtest/gtest.h>

#include "pcubed/solver.hpp"

namespace pcubed {
namespace {

class SolverTest : public ::testing::Test {
 protected:
  static const IrrepSet& heis() {
    static const IrrepSet s = IrrepSet::build(Group::make(Family::kHeis, 3));
    return s;
  }
  static const IrrepSet& gp() {
    static const IrrepSet s = IrrepSet::build(Group::make(Family::kGp, 3));
    return s;
  }
  static const IrrepSet& zp3() {
    static const IrrepSet s = IrrepSet::build(Group::make(Family::kZp3, 3));
    return s;
  }

  static MultVec vec(const IrrepSet& s, std::initializer_list<std::pair<int, long>> entries) {
    std::vector<long> k(s.size());
    for (const auto& [i, v] : entries) k[i - 1] = v;
    return MultVec::make(s.layout(), k);
  }
};

CycloMatrix rational_matrix(std::initializer_list<std::initializer_list<long>> rows) {
  CycloMatrix m(3, rows.size(), rows.begin()->size());
  std::size_t r = 0;
  for (const auto& row : rows) {
    std::size_t c = 0;
    for (long v : row) m(r, c++) = CycloNum(3, v);
    ++r;
  }
  return m;
}

TEST_F(SolverTest, AssembleTrivialBlock) {
  const RepAssembly rep = assemble(vec(zp3(), {{1, 2}}), zp3());
  ASSERT_EQ(rep.generator_matrices.size(), 1u);
  EXPECT_EQ(rep.generator_matrices[0], CycloMatrix::identity(3, 2));
}

TEST_F(SolverTest, AssembleShiftAndMixed) {
  const RepAssembly one = assemble(vec(heis(), {{10, 1}}), heis());
  EXPECT_EQ(one.generator_matrices[0], heis().rep_matrix(10, GroupElem{Family::kHeis, {1, 0, 0}}));
  const RepAssembly mixed = assemble(vec(heis(), {{1, 1}, {10, 1}}), heis());
  const CycloMatrix& x = mixed.generator_matrices[0];
  ASSERT_EQ(x.rows(), 4u);
  EXPECT_TRUE(x(0, 0).is_one());
  for (std::size_t i = 1; i < 4; ++i) EXPECT_TRUE(x(0, i).is_zero() && x(i, 0).is_zero());
  EXPECT_TRUE(x(1, 2).is_one());
  EXPECT_EQ(mixed.irrep_of_row, (std::vector<int>{1, 10, 10, 10}));
}

TEST_F(SolverTest, AssembleRejectsZero) {
  EXPECT_THROW(assemble(vec(heis(), {}), heis()), std::invalid_argument);
  EXPECT_THROW(assemble(vec(heis(), {{1, 1}}), zp3()), std::invalid_argument);
}

TEST_F(SolverTest, TrivialLine) {
  const InvSpace s = invariant_space(assemble(vec(zp3(), {{1, 1}}), zp3()), zp3());
  ASSERT_EQ(s.dimension, 1);
  EXPECT_EQ(s.basis[0], CycloMatrix::identity(3, 1));
}

TEST_F(SolverTest, DegreeOneDualPair) {
  const InvSpace s = invariant_space(assemble(vec(zp3(), {{2, 1}, {3, 1}}), zp3()), zp3());
  ASSERT_EQ(s.dimension, 2);
  EXPECT_EQ(s.basis[0], rational_matrix({{0, 1}, {0, 0}}));
  EXPECT_EQ(s.basis[1], rational_matrix({{0, 0}, {1, 0}}));
  EXPECT_EQ(s.block_support, (std::set<std::pair<int, int>>{{2, 3}, {3, 2}}));
}

TEST_F(SolverTest, DegreeThreePairIsAntiDiagonal) {
  for (const IrrepSet* irreps : {&heis(), &gp()}) {
    const RepAssembly rep = assemble(vec(*irreps, {{10, 1}, {11, 1}}), *irreps);
    const InvSpace s = invariant_space(rep, *irreps);
    ASSERT_EQ(s.dimension, 2);
    EXPECT_TRUE(l_shape_violations(s, rep, *irreps).empty());
    for (const auto& x : s.basis) {
      EXPECT_TRUE(is_invariant(x, rep.generator_matrices));
      int nonzero = 0;
      for (const auto& e : x.entries()) nonzero += e.is_zero() ? 0 : 1;
      EXPECT_EQ(nonzero, 3);
    }
    EXPECT_EQ(s.block_support, (std::set<std::pair<int, int>>{{10, 11}, {11, 10}}));
  }
}

TEST_F(SolverTest, LopsidedPairOnlyZeroForm) {
  const InvSpace s = invariant_space(assemble(vec(zp3(), {{2, 2}}), zp3()), zp3());
  EXPECT_EQ(s.dimension, 0);
}

TEST_F(SolverTest, FullAndBlockStrategiesAgree) {
  for (const IrrepSet* irreps : {&heis(), &gp()}) {
    for (const auto& k : {vec(*irreps, {{1, 1}, {10, 1}, {11, 1}}), vec(*irreps, {{2, 1}, {3, 2}, {10, 1}}),
                          vec(*irreps, {{1, 2}, {4, 1}, {5, 1}})}) {
      const RepAssembly rep = assemble(k, *irreps);
      const InvSpace full = invariant_space(rep, *irreps, SolveStrategy::kFull);
      const InvSpace blocks = invariant_space(rep, *irreps, SolveStrategy::kBlockPairs);
      EXPECT_EQ(full.dimension, blocks.dimension);
      EXPECT_EQ(full.dimension, invariant_dim(k, irreps->pairing()));
      EXPECT_EQ(full.block_support, blocks.block_support);
      std::vector<std::vector<CycloNum>> both;
      for (const auto& x : full.basis) both.push_back(x.entries());
      for (const auto& x : blocks.basis) both.push_back(x.entries());
      EXPECT_EQ(rank_of_vectors(3, both), static_cast<std::size_t>(full.dimension));
    }
  }
}

TEST_F(SolverTest, LargeDegreeUsesBlocks) {
  const MultVec k = vec(heis(), {{1, 1}, {10, 2}, {11, 1}});
  const RepAssembly rep = assemble(k, heis());
  const InvSpace s = invariant_space(rep, heis());
  EXPECT_EQ(s.n, 10u);
  EXPECT_EQ(s.dimension, invariant_dim(k, heis().pairing()));
  EXPECT_TRUE(l_shape_violations(s, rep, heis()).empty());
}

TEST_F(SolverTest, GeneratorsSufficeForWholeGroup) {
  std::mt19937_64 rng(3);
  for (const IrrepSet* irreps : {&heis(), &gp()}) {
    const RepAssembly rep = assemble(vec(*irreps, {{1, 1}, {6, 1}, {7, 1}, {10, 1}, {11, 1}}), *irreps);
    const InvSpace s = invariant_space(rep, *irreps);
    const CycloMatrix x = random_member(s, rng);
    std::uniform_int_distribution<int> pick(0, irreps->group().order() - 1);
    int tested = 0;
    while (tested < 20) {
      const int e = pick(rng);
      const auto& gens = irreps->group().generators();
      if (std::find(gens.begin(), gens.end(), e) != gens.end()) continue;
      const CycloMatrix c = assembled_element(rep, *irreps, e);
      EXPECT_EQ(c.transpose() * x * c, x);
      ++tested;
    }
  }
}

TEST_F(SolverTest, SymmetricSkewSplit) {
  const MultVec k = vec(zp3(), {{1, 2}, {2, 1}, {3, 1}});
  const InvSpace s = invariant_space(assemble(k, zp3()), zp3());
  EXPECT_EQ(symmetric_part_dim(s), symmetric_dim(k, zp3().pairing()));
  EXPECT_EQ(skew_part_dim(s), skew_dim(k, zp3().pairing()));
}

TEST_F(SolverTest, WitnessExamples) {
  const auto pair = nondegenerate_witness(vec(zp3(), {{2, 1}, {3, 1}}), zp3());
  ASSERT_TRUE(pair.has_value());
  EXPECT_EQ(*pair, rational_matrix({{0, 1}, {1, 0}}));
  EXPECT_EQ(rank(*pair), 2u);
  EXPECT_FALSE(nondegenerate_witness(vec(zp3(), {{2, 1}}), zp3()).has_value());
  const auto trivial = nondegenerate_witness(vec(zp3(), {{1, 3}}), zp3());
  ASSERT_TRUE(trivial.has_value());
  EXPECT_EQ(*trivial, CycloMatrix::identity(3, 3));
  const auto sigma = nondegenerate_witness(vec(heis(), {{10, 2}, {11, 2}}), heis());
  ASSERT_TRUE(sigma.has_value());
  EXPECT_EQ(rank(*sigma), 12u);
}

TEST_F(SolverTest, DegenerateSpacesAreSingular) {
  std::mt19937_64 rng(5);
  const MultVec k = vec(zp3(), {{2, 2}, {3, 1}});
  const RepAssembly rep = assemble(k, zp3());
  const InvSpace s = invariant_space(rep, zp3());
  ASSERT_EQ(s.dimension, 4);
  for (const auto& x : s.basis) EXPECT_LT(rank(x), 3u);
  for (int t = 0; t < 100; ++t) EXPECT_LT(rank(random_member(s, rng)), 3u);
}

TEST_F(SolverTest, SupportStaysOnDualPairs) {
  const RepAssembly rep = assemble(vec(gp(), {{1, 1}, {2, 1}, {3, 1}, {4, 1}, {10, 1}}), gp());
  const InvSpace s = invariant_space(rep, gp());
  EXPECT_TRUE(support_outside_pairing(s, gp().pairing()).empty());
}

TEST(Rank, Examples) {
  EXPECT_EQ(rank(CycloMatrix::identity(3, 5)), 5u);
  EXPECT_EQ(rank(rational_matrix({{0, 1}, {1, 0}})), 2u);
}

TEST(CharP, DimensionIsNSquared) {
  EXPECT_EQ(charp_mode(1).dimension, 1);
  EXPECT_EQ(charp_mode(3).dimension, 9);
  const InvSpace two = charp_mode(2);
  EXPECT_EQ(two.dimension, 4);
  std::vector<std::vector<CycloNum>> vs;
  for (const auto& x : two.basis) vs.push_back(x.entries());
  vs.push_back(CycloMatrix::identity(3, 2).entries());
  EXPECT_EQ(rank_of_vectors(3, vs), 4u);
  EXPECT_THROW(charp_mode(0), std::invalid_argument);
}

}  // namespace
}  // namespace pcubed
