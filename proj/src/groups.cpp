#include "pcubed/groups.hpp"

#include <algorithm>
#include <numeric>
#include <stdexcept>

#include "pcubed/cyclo.hpp"

namespace pcubed {

bool is_abelian(Family f) { return f != Family::kHeis && f != Family::kGp; }

std::string_view family_name(Family f) {
  switch (f) {
    case Family::kHeis: return "heis";
    case Family::kGp: return "gp";
    case Family::kZp3: return "zp3";
    case Family::kZp2xZp: return "zp2xzp";
    case Family::kZpxZpxZp: return "zpxzpxzp";
  }
  return "?";
}

Family parse_family(std::string_view name) {
  for (Family f : kAllFamilies)
    if (family_name(f) == name) return f;
  throw std::invalid_argument("unknown group family: " + std::string(name) +
                              " (expected heis, gp, zp3, zp2xzp or zpxzpxzp)");
}

std::string GroupElem::to_string() const {
  const auto& c = coords;
  switch (family) {
    case Family::kHeis:
      return "((" + std::to_string(c[0]) + "," + std::to_string(c[1]) + ")," + std::to_string(c[2]) + ")";
    case Family::kZp3: return "(" + std::to_string(c[0]) + ")";
    case Family::kGp:
    case Family::kZp2xZp: return "(" + std::to_string(c[0]) + "," + std::to_string(c[1]) + ")";
    case Family::kZpxZpxZp:
      return "(" + std::to_string(c[0]) + "," + std::to_string(c[1]) + "," + std::to_string(c[2]) + ")";
  }
  return "?";
}

namespace {

int mod(long a, long m) {
  a %= m;
  return static_cast<int>(a < 0 ? a + m : a);
}

Relation power_relation(const std::string& gen, int g, long e, const std::string& e_text) {
  return Relation{gen + "^" + e_text + " = 1", {{g, e}}, {}};
}

Relation commute_relation(const std::string& a, int ga, const std::string& b, int gb) {
  return Relation{a + b + " = " + b + a, {{ga, 1}, {gb, 1}}, {{gb, 1}, {ga, 1}}};
}

}  // namespace

Group Group::make(Family family, int p) {
  require_odd_prime(p);
  Group g;
  g.family_ = family;
  g.p_ = p;
  const int p2 = p * p, p3 = p2 * p;
  switch (family) {
    case Family::kHeis:
    case Family::kZpxZpxZp: g.radix_ = {p, p, p}; break;
    case Family::kGp: g.radix_ = {p, p2, 1}; break;
    case Family::kZp3: g.radix_ = {p3, 1, 1}; break;
    case Family::kZp2xZp: g.radix_ = {p2, p, 1}; break;
  }

  g.elements_.reserve(p3);
  for (int a = 0; a < g.radix_[0]; ++a)
    for (int b = 0; b < g.radix_[1]; ++b)
      for (int c = 0; c < g.radix_[2]; ++c) g.elements_.push_back(GroupElem{family, {a, b, c}});

  const int n = g.order();
  g.table_.resize(static_cast<std::size_t>(n) * n);
  for (int i = 0; i < n; ++i)
    for (int j = 0; j < n; ++j)
      g.table_[static_cast<std::size_t>(i) * n + j] = g.encode(g.raw_multiply(g.elements_[i], g.elements_[j]));

  g.inverse_.assign(n, -1);
  for (int i = 0; i < n; ++i)
    for (int j = 0; j < n; ++j)
      if (g.multiply(i, j) == 0) g.inverse_[i] = j;

  auto gen = [&](std::string name, std::array<int, 3> coords) {
    g.generators_.push_back(g.encode(GroupElem{family, coords}));
    g.generator_names_.push_back(std::move(name));
  };
  switch (family) {
    case Family::kHeis:
      gen("x", {1, 0, 0});
      gen("a", {0, 0, 1});
      g.relations_ = {
          power_relation("x", 0, p, "p"),
          power_relation("a", 1, p, "p"),
          {"x(a^-1 x a)x^-1 = a^-1 x a", {{0, 1}, {1, -1}, {0, 1}, {1, 1}, {0, -1}}, {{1, -1}, {0, 1}, {1, 1}}},
          {"a(x a x^-1)a^-1 = x a x^-1", {{1, 1}, {0, 1}, {1, 1}, {0, -1}, {1, -1}}, {{0, 1}, {1, 1}, {0, -1}}},
      };
      break;
    case Family::kGp:
      gen("x", {1, 0, 0});
      gen("y", {0, 1, 0});
      g.relations_ = {
          power_relation("x", 0, p, "p"),
          power_relation("y", 1, p2, "p^2"),
          {"xy = y^(p+1)x", {{0, 1}, {1, 1}}, {{1, p + 1}, {0, 1}}},
      };
      break;
    case Family::kZp3:
      gen("a", {1, 0, 0});
      g.relations_ = {power_relation("a", 0, p3, "p^3")};
      break;
    case Family::kZp2xZp:
      gen("a", {1, 0, 0});
      gen("b", {0, 1, 0});
      g.relations_ = {power_relation("a", 0, p2, "p^2"), power_relation("b", 1, p, "p"),
                      commute_relation("a", 0, "b", 1)};
      break;
    case Family::kZpxZpxZp:
      gen("a", {1, 0, 0});
      gen("b", {0, 1, 0});
      gen("c", {0, 0, 1});
      g.relations_ = {power_relation("a", 0, p, "p"),       power_relation("b", 1, p, "p"),
                      power_relation("c", 2, p, "p"),       commute_relation("a", 0, "b", 1),
                      commute_relation("a", 0, "c", 2),     commute_relation("b", 1, "c", 2)};
      break;
  }

  g.class_of_.assign(n, -1);
  for (int i = 0; i < n; ++i) {
    if (g.class_of_[i] >= 0) continue;
    const int id = static_cast<int>(g.classes_.size());
    std::vector<int> cls;
    for (int h = 0; h < n; ++h) {
      const int conj = g.multiply(g.multiply(h, i), g.inverse(h));
      if (g.class_of_[conj] < 0) {
        g.class_of_[conj] = id;
        cls.push_back(conj);
      }
    }
    std::sort(cls.begin(), cls.end());
    g.classes_.push_back(std::move(cls));
  }
  return g;
}

int Group::encode(const GroupElem& g) const {
  for (int i = 0; i < 3; ++i) {
    if (g.coords[i] < 0 || g.coords[i] >= radix_[i]) {
      throw std::invalid_argument("group element " + g.to_string() + " has out-of-range coordinates");
    }
  }
  return (g.coords[0] * radix_[1] + g.coords[1]) * radix_[2] + g.coords[2];
}

int Group::index_of(const GroupElem& g) const {
  if (g.family != family_) {
    throw std::invalid_argument("group family mismatch: element of " + std::string(family_name(g.family)) +
                                " used with " + std::string(family_name(family_)));
  }
  return encode(g);
}

GroupElem Group::raw_multiply(const GroupElem& a, const GroupElem& b) const {
  const auto& x = a.coords;
  const auto& y = b.coords;
  GroupElem out{family_, {0, 0, 0}};
  auto& z = out.coords;
  switch (family_) {
    case Family::kHeis:
      z = {mod(x[0] + y[0], p_), mod(x[1] + y[1] + static_cast<long>(x[0]) * y[2], p_), mod(x[2] + y[2], p_)};
      break;
    case Family::kGp:
      // [[1+p g, d],[0,1]] * [[1+p g', d'],[0,1]] = [[1+p(g+g'), d + d' + p g d'],[0,1]] mod p^2
      z = {mod(x[0] + y[0], p_), mod(x[1] + y[1] + static_cast<long>(p_) * x[0] * y[1], radix_[1]), 0};
      break;
    default:
      for (int i = 0; i < 3; ++i) z[i] = mod(x[i] + y[i], radix_[i]);
      break;
  }
  return out;
}

GroupElem Group::multiply(const GroupElem& a, const GroupElem& b) const {
  return elements_[multiply(index_of(a), index_of(b))];
}

GroupElem Group::inverse(const GroupElem& a) const { return elements_[inverse(index_of(a))]; }

int Group::power(int a, long e) const {
  const int n = order();
  long k = e % n;
  if (k < 0) k += n;  // every element order divides |G|
  int result = 0, base = a;
  while (k > 0) {
    if (k & 1) result = multiply(result, base);
    base = multiply(base, base);
    k >>= 1;
  }
  return result;
}

int Group::element_order(int a) const {
  int k = 1;
  for (int x = a; x != 0; x = multiply(x, a)) ++k;
  return k;
}

int Group::evaluate(const Relation::Word& w) const {
  int acc = 0;
  for (const auto& [gen, e] : w) acc = multiply(acc, power(generators_.at(gen), e));
  return acc;
}

std::vector<int> Group::center() const {
  std::vector<int> out;
  for (int i = 0; i < order(); ++i) {
    bool central = true;
    for (int j = 0; j < order() && central; ++j) central = multiply(i, j) == multiply(j, i);
    if (central) out.push_back(i);
  }
  return out;
}

}  // namespace pcubed
