#include "pcubed/combinat.hpp"

#include <stdexcept>

namespace pcubed {

BigInt binomial(long a, long b) {
  if (b < 0 || a < b) return 0;
  BigInt out;
  mpz_bin_uiui(out.get_mpz_t(), static_cast<unsigned long>(a), static_cast<unsigned long>(b));
  return out;
}

namespace {

void require_degree(long n) {
  if (n < 0) throw std::invalid_argument("representation degree must be non-negative");
}

}  // namespace

BigInt count_reps(Family family, int p, long n) {
  require_odd_prime(p);
  require_degree(n);
  const long p2 = static_cast<long>(p) * p, p3 = p2 * p;
  if (is_abelian(family)) return binomial(n + p3 - 1, p3 - 1);
  BigInt total = 0;
  for (long mu = 0; mu <= n / p; ++mu) total += binomial(mu + p - 2, p - 2) * binomial(n - mu * p + p2 - 1, p2 - 1);
  return total;
}

BigInt count_nondegenerate(Family family, int p, long n) {
  require_odd_prime(p);
  require_degree(n);
  const long p2 = static_cast<long>(p) * p, p3 = p2 * p;
  BigInt total = 0;
  if (is_abelian(family)) {
    const long pairs = (p3 - 1) / 2;
    for (long l = 0; l <= n / 2; ++l) total += binomial(l + pairs - 1, pairs - 1);
    return total;
  }
  const long big_pairs = (p - 1) / 2;     // dual pairs of degree p
  const long small_pairs = (p2 - 1) / 2;  // dual pairs of degree 1
  for (long l = 0; l <= n / (2 * p); ++l) {
    BigInt inner = 0;
    for (long s = 0; s <= (n - 2 * p * l) / 2; ++s) inner += binomial(s + small_pairs - 1, small_pairs - 1);
    total += binomial(l + big_pairs - 1, big_pairs - 1) * inner;
  }
  return total;
}

BigInt count_nondegenerate_alt(Family family, int p, long n) {
  require_odd_prime(p);
  require_degree(n);
  const long p2 = static_cast<long>(p) * p, p3 = p2 * p;
  BigInt total = 0;
  if (is_abelian(family)) {
    for (long l = 0; l <= n / 2; ++l) total += binomial(l + (p3 - 3) / 2, (p3 - 3) / 2);
    return total;
  }
  for (long l = 0; l <= n / (2 * p); ++l) {
    BigInt inner = 0;
    for (long s = 0; s <= (n - 2 * p * l) / 2; ++s) inner += binomial(s + (p2 - 3) / 2, (p2 - 3) / 2);
    total += binomial(l + (p - 3) / 2, (p - 3) / 2) * inner;
  }
  return total;
}

Census census(Family family, int p, long n) {
  Census c;
  c.n = n;
  c.total = count_reps(family, p, n);
  c.nondegenerate_admitting = count_nondegenerate(family, p, n);
  c.degenerate_only = c.total - c.nondegenerate_admitting;
  return c;
}

MultVec MultVec::make(const IrrepLayout& layout, std::vector<long> k) {
  if (static_cast<int>(k.size()) != layout.r()) {
    throw std::invalid_argument("multiplicity vector has " + std::to_string(k.size()) + " entries; expected " +
                                std::to_string(layout.r()));
  }
  MultVec v{layout.family, layout.p, std::move(k), 0};
  for (int i = 1; i <= layout.r(); ++i) {
    if (v.at(i) < 0) throw std::invalid_argument("multiplicities must be non-negative");
    v.n += layout.degree(i) * v.at(i);
  }
  return v;
}

long invariant_dim(const MultVec& k, const DualPairing& pairing) {
  long dim = 0;
  for (const auto& [i, j] : pairing.pairs()) dim += k.at(i) * k.at(j);
  return dim;
}

long symmetric_dim(const MultVec& k, const DualPairing& pairing) {
  // Twice the value, so every term stays integral until the end.
  long twice = 0;
  for (const auto& [i, j] : pairing.pairs()) twice += i == j ? k.at(i) * (k.at(i) + 1) : k.at(i) * k.at(j);
  return twice / 2;
}

long skew_dim(const MultVec& k, const DualPairing& pairing) {
  long twice = 0;
  for (const auto& [i, j] : pairing.pairs()) twice += i == j ? k.at(i) * (k.at(i) - 1) : k.at(i) * k.at(j);
  return twice / 2;
}

bool admits_nondegenerate(const MultVec& k, const DualPairing& pairing) {
  for (const auto& [i, j] : pairing.pairs())
    if (k.at(i) != k.at(j)) return false;
  return true;
}

MultVecStream::MultVecStream(const IrrepLayout& layout, long n)
    : family_(layout.family), p_(layout.p), n_(n), degrees_(layout.degrees.begin(), layout.degrees.end()) {
  require_degree(n);
  const std::size_t r = degrees_.size();
  k_.assign(r, 0);
  changed_.assign(r + 4, 0);
  for (std::size_t i = 0; i < r; ++i) {
    if (degrees_[i] != 1 && degrees_[i] != p_) throw std::invalid_argument("irrep degrees must be 1 or p");
    if (i > 0 && degrees_[i] < degrees_[i - 1]) throw std::invalid_argument("irrep degrees must be non-decreasing");
    if (degrees_[i] == 1) last_linear_ = static_cast<long>(i);
  }
  if (last_linear_ < 0) throw std::invalid_argument("layout has no linear character");
  fast_tail_ = r >= 2 && degrees_[r - 2] == degrees_[r - 1] &&
               (static_cast<long>(r) - 2 != last_linear_ || degrees_[r - 1] == 1);
}

bool MultVecStream::representable(long budget, std::size_t from) const {
  if (budget < 0) return false;
  if (from >= k_.size()) return budget == 0;
  if (static_cast<long>(from) <= last_linear_) return true;
  return budget % p_ == 0;
}

bool MultVecStream::advance() {
  if (done_) return false;
  const std::size_t r = k_.size();
  const std::size_t last = r - 1;
  const auto ll = static_cast<std::size_t>(last_linear_);
  std::size_t i = 0;
  long budget = n_;
  if (!started_) {
    started_ = true;
    changed_count_ = 0;
    for (std::size_t j = 0; j < r; ++j) mark(j);
  } else {
    // Slots right of the last non-zero entry are empty, so the pivot lies
    // strictly left of it.
    long suffix = last_nonzero_ >= 0 ? degrees_[last_nonzero_] * k_[last_nonzero_] : 0;
    bool found = false;
    for (long t = last_nonzero_ - 1; t >= 0; --t) {
      const auto ti = static_cast<std::size_t>(t);
      long step = 1;
      if (ti == ll && ti + 1 < r) {
        step = suffix % p_;
        if (step == 0) step = p_;
      }
      budget = suffix - step * degrees_[ti];
      if (budget >= 0 && representable(budget, ti + 1)) {
        changed_count_ = 0;
        k_[ti] += step;
        mark(ti);
        for (long j = t + 1; j <= last_nonzero_; ++j) {
          if (k_[j] != 0) {
            k_[j] = 0;
            mark(static_cast<std::size_t>(j));
          }
        }
        i = ti + 1;
        found = true;
        break;
      }
      suffix += degrees_[ti] * k_[ti];
    }
    if (!found) {
      done_ = true;
      return false;
    }
  }
  // Lexicographically smallest completion of slots i.. with weight `budget`;
  // those slots are all zero here.
  long tail_nonzero = static_cast<long>(i) - 1;
  if (i < r && budget > 0) {
    if (i <= ll) {
      if (ll == last) {
        k_[last] = budget;
        budget = 0;
      } else if (const long v = budget % p_; v != 0) {
        k_[ll] = v;
        budget -= v;
        mark(ll);
        tail_nonzero = static_cast<long>(ll);
      }
    }
    if (budget > 0) k_[last] = ll == last ? k_[last] : budget / p_;
    if (k_[last] > 0) {
      mark(last);
      tail_nonzero = static_cast<long>(last);
    }
  }
  last_nonzero_ = tail_nonzero;
  if (last_nonzero_ < 0) {
    for (long j = static_cast<long>(r) - 1; j >= 0; --j)
      if (k_[j] != 0) {
        last_nonzero_ = j;
        break;
      }
  }
  return true;
}

EnumerationTally tally_enumeration(const IrrepLayout& layout, long n) {
  EnumerationTally tally;
  MultVecStream stream(layout, n);
  const std::size_t r = layout.degrees.size();
  std::vector<std::size_t> dual(r);
  for (std::size_t i = 0; i < r; ++i) dual[i] = static_cast<std::size_t>(layout.pairing.dual_of(static_cast<int>(i) + 1) - 1);
  // equal[i] tracks k_i == k_{i*}; mismatched counts indices where it fails.
  std::vector<char> equal(r, 1);
  std::size_t mismatched = 0;
  while (stream.next()) {
    const auto& k = stream.current();
    for (const std::size_t m : stream.changed()) {
      const std::size_t d = dual[m];
      const char now = k[m] == k[d];
      if (now != equal[m]) {
        if (now) --mismatched; else ++mismatched;
        equal[m] = now;
      }
      if (now != equal[d]) {
        if (now) --mismatched; else ++mismatched;
        equal[d] = now;
      }
    }
    ++tally.total;
    if (mismatched == 0) ++tally.nondegenerate;
  }
  return tally;
}

}  // namespace pcubed
