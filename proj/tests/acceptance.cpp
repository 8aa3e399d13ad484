// Acceptance run: one PASS/FAIL line per criterion. All comparisons are exact.
#include <algorithm>
#include <chrono>
#include <cstdio>
#include <map>
#include <random>
#include <string>
#include <vector>

#include "pcubed/combinat.hpp"
#include "pcubed/groups.hpp"
#include "pcubed/irreps.hpp"
#include "pcubed/solver.hpp"

using namespace pcubed;

namespace {

constexpr std::uint64_t kSeed = 20240611;
constexpr long kSampleSize = 200;
constexpr long kSingularSamples = 100;

double seconds_since(std::chrono::steady_clock::time_point t0) {
  return std::chrono::duration<double>(std::chrono::steady_clock::now() - t0).count();
}

struct Line {
  bool pass = true;
  std::string detail;
  void fail(const std::string& why) {
    if (pass) detail = why;
    pass = false;
  }
};

struct Result {
  std::string name;
  Line line;
  std::string summary;
};

std::map<int, Result> results;

void report(int id, const char* name, const Line& line, const std::string& summary) {
  results[id] = Result{name, line, summary};
}

BigInt big(std::uint64_t v) { return BigInt(std::to_string(v)); }

// Tallies per (layout, n), computed once per distinct layout.
std::map<std::pair<Family, long>, EnumerationTally> enumerate_all(int p, long nmax, const std::vector<Family>& families) {
  std::map<std::pair<Family, long>, EnumerationTally> out;
  std::vector<std::pair<IrrepLayout, std::vector<Family>>> layouts;
  for (Family f : families) {
    const IrrepLayout l = IrrepSet::build(Group::make(f, p)).layout();
    bool merged = false;
    for (auto& [existing, members] : layouts) {
      if (existing.degrees == l.degrees && existing.pairing == l.pairing) {
        members.push_back(f);
        merged = true;
        break;
      }
    }
    if (!merged) layouts.push_back({l, {f}});
  }
  for (const auto& [layout, members] : layouts) {
    for (long n = 0; n <= nmax; ++n) {
      const EnumerationTally t = tally_enumeration(layout, n);
      for (Family f : members) out[{f, n}] = t;
    }
  }
  return out;
}

std::vector<MultVec> sample_vectors(const IrrepLayout& layout, long n, long size, std::mt19937_64& rng) {
  // Reservoir sample over the stream.
  std::vector<MultVec> out;
  MultVecStream s(layout, n);
  long seen = 0;
  while (s.next()) {
    ++seen;
    if (static_cast<long>(out.size()) < size) {
      out.push_back(s.current_multvec());
    } else {
      std::uniform_int_distribution<long> pick(0, seen - 1);
      const long j = pick(rng);
      if (j < size) out[j] = s.current_multvec();
    }
  }
  return out;
}

}  // namespace

int main() {
  const std::vector<Family> families(kAllFamilies.begin(), kAllFamilies.end());
  bool all_pass = true;
  std::printf("seed %llu\n", static_cast<unsigned long long>(kSeed));

  // Criteria 1 and 2 share one enumeration pass.
  {
    const auto t0 = std::chrono::steady_clock::now();
    Line c1, c2;
    const auto tallies = enumerate_all(3, 12, families);
    std::uint64_t streamed = 0;
    for (Family f : families) {
      for (long n = 0; n <= 12; ++n) {
        const EnumerationTally& t = tallies.at({f, n});
        streamed += t.total;
        const std::string where = std::string(family_name(f)) + " n=" + std::to_string(n);
        if (big(t.total) != count_reps(f, 3, n))
          c1.fail(where + ": stream " + std::to_string(t.total) + " vs formula " + count_reps(f, 3, n).get_str());
        if (big(t.nondegenerate) != count_nondegenerate(f, 3, n))
          c2.fail(where + ": filtered " + std::to_string(t.nondegenerate) + " vs formula " +
                  count_nondegenerate(f, 3, n).get_str());
        if (count_nondegenerate(f, 3, n) != count_nondegenerate_alt(f, 3, n))
          c2.fail(where + ": the two spellings of the non-degenerate count differ");
      }
    }
    if (count_reps(Family::kHeis, 3, 1) != 9 || tallies.at({Family::kHeis, 1}).total != 9) c1.fail("Heis n=1 is not 9");
    if (count_reps(Family::kHeis, 3, 3) != 167 || tallies.at({Family::kHeis, 3}).total != 167)
      c1.fail("Heis n=3 is not 167");
    if (count_reps(Family::kZp3, 3, 1) != 27 || tallies.at({Family::kZp3, 1}).total != 27) c1.fail("Z27 n=1 is not 27");
    const auto p5 = enumerate_all(5, 10, {Family::kHeis, Family::kGp});
    for (Family f : {Family::kHeis, Family::kGp})
      for (long n = 0; n <= 10; ++n)
        if (big(p5.at({f, n}).total) != count_reps(f, 5, n))
          c1.fail(std::string(family_name(f)) + " p=5 n=" + std::to_string(n) + " differs");
    if (count_nondegenerate(Family::kHeis, 3, 2) != 5 || tallies.at({Family::kHeis, 2}).nondegenerate != 5)
      c2.fail("Heis n=2 is not 5 on both paths");
    if (count_nondegenerate(Family::kZp3, 3, 2) != 14 || tallies.at({Family::kZp3, 2}).nondegenerate != 14)
      c2.fail("Z27 n=2 is not 14 on both paths");
    const double secs = seconds_since(t0);
    if (secs >= 60.0) c1.fail("enumeration took " + std::to_string(secs) + " s, budget 60 s");
    report(1, "counting", c1,
           "p=3 n=0..12 all families, p=5 n=0..10 non-abelian; " + std::to_string(streamed) + " vectors streamed; " +
               std::to_string(static_cast<int>(secs)) + " s");
    report(2, "non-degenerate census", c2, "p=3 n=0..12 all families, exact");
    all_pass = all_pass && c1.pass && c2.pass;
  }

  // Criteria 3, 4, 6 and 7 share one solver sweep.
  {
    const auto t0 = std::chrono::steady_clock::now();
    Line c3, c4, c6, c7;
    long vectors = 0, witnesses = 0, singular_checks = 0, zero_spaces = 0, l_reported = 0;
    std::mt19937_64 rng(kSeed);
    for (Family f : families) {
      const IrrepSet irreps = IrrepSet::build(Group::make(f, 3));
      const IrrepLayout layout = irreps.layout();
      const DualPairing& pairing = irreps.pairing();
      std::vector<MultVec> work;
      for (long n = 1; n <= 4; ++n) {
        MultVecStream s(layout, n);
        while (s.next()) work.push_back(s.current_multvec());
      }
      for (long n : {5L, 6L}) {
        auto sample = sample_vectors(layout, n, kSampleSize, rng);
        work.insert(work.end(), sample.begin(), sample.end());
      }
      for (const MultVec& k : work) {
        ++vectors;
        std::string tag = std::string(family_name(f)) + " k=";
        for (std::size_t i = 0; i < k.k.size(); ++i) tag += (i ? "," : "") + std::to_string(k.k[i]);
        const RepAssembly rep = assemble(k, irreps);
        const InvSpace space = invariant_space(rep, irreps);
        const long dim = invariant_dim(k, pairing);
        if (space.dimension != dim)
          c3.fail(tag + ": solver " + std::to_string(space.dimension) + " vs formula " + std::to_string(dim));
        const long sym = symmetric_part_dim(space), skew = skew_part_dim(space);
        if (sym != symmetric_dim(k, pairing) || skew != skew_dim(k, pairing) || sym + skew != space.dimension)
          c4.fail(tag + ": symmetric " + std::to_string(sym) + ", skew " + std::to_string(skew));
        const bool admits = admits_nondegenerate(k, pairing);
        const auto w = nondegenerate_witness(k, irreps);
        if (w.has_value() != admits) c6.fail(tag + ": witness disagrees with the multiplicity criterion");
        if (w) ++witnesses;
        if (!admits && space.dimension == 0) ++zero_spaces;
        if (!admits && space.dimension > 0) {
          for (long s = 0; s < kSingularSamples; ++s) {
            ++singular_checks;
            if (rank(random_member(space, rng)) >= rep.n()) {
              c6.fail(tag + ": random member has full rank");
              break;
            }
          }
        }
        if (!support_outside_pairing(space, pairing).empty()) c7.fail(tag + ": basis touches a non-dual block");
        const auto shape = l_shape_violations(space, rep, irreps);
        if (!shape.empty()) {
          ++l_reported;
          c7.fail(tag + ": " + shape.front());
        }
      }
    }
    const double secs = seconds_since(t0);
    if (secs >= 600.0) c3.fail("sweep took " + std::to_string(secs) + " s, budget 600 s");
    const std::string summary = std::to_string(vectors) + " vectors, " + std::to_string(static_cast<int>(secs)) + " s";
    report(3, "dimension", c3, summary + ", n<=4 exhaustive plus 200 sampled at n=5 and n=6");
    report(4, "symmetric/skew split", c4, summary);
    all_pass = all_pass && c3.pass && c4.pass;
    report(6, "non-degeneracy soundness", c6,
           std::to_string(witnesses) + " witnesses, " + std::to_string(singular_checks) + " random members ranked, " +
               std::to_string(zero_spaces) + " degenerate vectors with only the zero form");
    report(7, "block structure", c7, "support inside dual pairs; degree-p blocks multiples of L; " +
                                         std::to_string(l_reported) + " shape reports");
    all_pass = all_pass && c6.pass && c7.pass;
  }

  {
    const auto t0 = std::chrono::steady_clock::now();
    Line c5;
    for (int p : {3, 5}) {
      for (Family f : families) {
        const Group g = Group::make(f, p);
        const IrrepSet irreps = IrrepSet::build(g);
        const std::string where = std::string(family_name(f)) + " p=" + std::to_string(p);
        const CycloNum one(p, 1), zero(p);
        for (int i = 1; i <= irreps.size(); ++i)
          for (int j = 1; j <= irreps.size(); ++j)
            if (character_inner_product(g, irreps.irrep(i).character, irreps.irrep(j).character) != (i == j ? one : zero))
              c5.fail(where + ": <chi_" + std::to_string(i) + ", chi_" + std::to_string(j) + "> is wrong");
        long squares = 0;
        int self_dual = 0;
        for (const auto& irrep : irreps.irreps()) {
          squares += static_cast<long>(irrep.degree) * irrep.degree;
          if (irrep.dual_index == irrep.index) ++self_dual;
        }
        if (squares != static_cast<long>(p) * p * p) c5.fail(where + ": sum of squared degrees is " + std::to_string(squares));
        if (self_dual != 1) c5.fail(where + ": " + std::to_string(self_dual) + " self-dual irreps");
        const std::vector<int> centre = g.center();
        for (const auto& irrep : irreps.irreps()) {
          if (irrep.degree != p) continue;
          std::vector<MonomialMatrix> seen;
          for (int e = 0; e < g.order(); ++e) {
            const MonomialMatrix& m = irreps.image(irrep.index, e);
            for (const auto& s : seen)
              if (s == m) c5.fail(where + ": " + irrep.label + " is not faithful");
            seen.push_back(m);
            const bool central = std::find(centre.begin(), centre.end(), e) != centre.end();
            if (!central && !m.trace(p).is_zero()) c5.fail(where + ": " + irrep.label + " has non-zero trace off the centre");
          }
        }
      }
    }
    report(5, "character theory", c5,
           "p=3,5 all families; orthogonality exact; " + std::to_string(static_cast<int>(seconds_since(t0))) + " s");
    all_pass = all_pass && c5.pass;
  }

  {
    Line c8;
    for (long n = 1; n <= 10; ++n) {
      const InvSpace space = charp_mode(n);
      if (space.dimension != n * n)
        c8.fail("n=" + std::to_string(n) + ": dimension " + std::to_string(space.dimension));
    }
    report(8, "characteristic-p mode", c8, "n=1..10 dimension n^2");
    all_pass = all_pass && c8.pass;
  }

  for (const auto& [id, r] : results)
    std::printf("criterion %d %s: %s (%s)\n", id, r.name.c_str(), r.line.pass ? "PASS" : "FAIL",
                r.line.pass ? r.summary.c_str() : r.line.detail.c_str());
  std::printf("%s\n", all_pass ? "ALL PASS" : "SOME FAILED");
  return all_pass ? 0 : 1;
}
