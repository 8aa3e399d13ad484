#include "pcubed/irreps.hpp"

#include <algorithm>
#include <map>
#include <set>
#include <sstream>

namespace pcubed {

namespace {

long mod(long a, long m) {
  a %= m;
  return a < 0 ? a + m : a;
}

MonomialMatrix evaluate(const std::vector<MonomialMatrix>& gens, const Relation::Word& w) {
  MonomialMatrix acc = MonomialMatrix::identity(gens.front().order, gens.front().dim());
  for (const auto& [g, e] : w) acc = acc * gens.at(g).pow(e);
  return acc;
}

// First relation of `group` violated by the generator images, or nullptr.
const Relation* violated_relation(const Group& group, const std::vector<MonomialMatrix>& gens) {
  for (const auto& rel : group.relations()) {
    if (!(evaluate(gens, rel.lhs) == evaluate(gens, rel.rhs))) return &rel;
  }
  return nullptr;
}

// Modulus and w-exponent step of each generator's image under a linear
// character: generator k maps to w^(t_k * step_k) with t_k in Z_{modulus_k}.
std::vector<std::pair<long, long>> linear_character_params(Family family, int p) {
  const long p2 = static_cast<long>(p) * p, p3 = p2 * p;
  switch (family) {
    case Family::kHeis:
    case Family::kGp: return {{p, p2}, {p, p2}};  // factor through G/[G,G] = Z_p x Z_p
    case Family::kZp3: return {{p3, 1}};
    case Family::kZp2xZp: return {{p2, p}, {p, p2}};
    case Family::kZpxZpxZp: return {{p, p2}, {p, p2}, {p, p2}};
  }
  return {};
}

std::string join_key(const std::vector<CycloNum>& values) {
  std::string key;
  for (const auto& v : values) {
    key += v.to_string();
    key += ';';
  }
  return key;
}

}  // namespace

void IrrepSet::add(std::string label, std::vector<MonomialMatrix> gens) {
  Irrep irrep;
  irrep.index = size() + 1;
  irrep.degree = gens.front().dim();
  irrep.label = std::move(label);
  irrep.generator_images = std::move(gens);
  if (const Relation* rel = violated_relation(group_, irrep.generator_images)) {
    throw IrrepVerificationError("irrep " + std::to_string(irrep.index) + " (" + irrep.label +
                                 ") violates relation " + rel->text);
  }
  irreps_.push_back(std::move(irrep));
}

IrrepSet IrrepSet::build(const Group& group) {
  IrrepSet set(group);
  const int p = group.prime();
  const long p2 = static_cast<long>(p) * p, order = p2 * p;
  const auto& names = group.generator_names();

  // Linear characters, enumerated as exponent tuples in lexicographic order.
  const auto params = linear_character_params(group.family(), p);
  long total = 1;
  for (const auto& [m, step] : params) total *= m;
  auto decode = [&](long code) {
    std::vector<long> t(params.size());
    for (std::size_t k = params.size(); k-- > 0;) {
      t[k] = code % params[k].first;
      code /= params[k].first;
    }
    return t;
  };
  auto encode = [&](const std::vector<long>& t) {
    long code = 0;
    for (std::size_t k = 0; k < params.size(); ++k) code = code * params[k].first + t[k];
    return code;
  };
  auto add_linear = [&](const std::vector<long>& t) {
    std::vector<MonomialMatrix> gens;
    std::string label;
    for (std::size_t k = 0; k < params.size(); ++k) {
      const long e = t[k] * params[k].second;
      gens.push_back(MonomialMatrix::diagonal(order, {e}));
      if (k) label += ",";
      label += names[k] + "->w^" + std::to_string(e);
    }
    set.add(std::move(label), std::move(gens));
  };
  std::vector<bool> placed(total, false);
  for (long code = 0; code < total; ++code) {
    if (placed[code]) continue;
    std::vector<long> t = decode(code);
    std::vector<long> dual(t.size());
    for (std::size_t k = 0; k < t.size(); ++k) dual[k] = mod(-t[k], params[k].first);
    placed[code] = true;
    add_linear(t);
    const long dual_code = encode(dual);
    if (!placed[dual_code]) {
      placed[dual_code] = true;
      add_linear(dual);
    }
  }

  // Degree-p representations: shift power paired with a diagonal generator.
  if (!group.abelian()) {
    for (int eta = 1; eta <= (p - 1) / 2; ++eta) {
      for (int member = 0; member < 2; ++member) {
        const int s = 2 * eta - 1 + member;
        std::vector<long> diag(p);
        for (int i = 0; i < p; ++i) {
          if (group.family() == Family::kHeis) {
            // a -> diag(eps^(eta+i)) and diag(eps^(p+1-eta+i)), eps = w^(p^2)
            diag[i] = p2 * (member == 0 ? eta + i : p + 1 - eta + i);
          } else {
            // y -> diag(w^(eta p + i p^2)) and diag(w^((i+1) p^2 - eta p))
            diag[i] = member == 0 ? eta * p + i * p2 : (i + 1) * p2 - eta * p;
          }
        }
        const MonomialMatrix x_image = MonomialMatrix::shift(order, p, member == 0 ? eta : -eta);
        const MonomialMatrix d_image = MonomialMatrix::diagonal(order, diag);
        std::vector<MonomialMatrix> gens{x_image, d_image};
        const std::string label = "sigma_" + std::to_string(s);
        if (violated_relation(group, gens)) {
          bool fixed = false;
          for (int m = 1; m < p && !fixed; ++m) {
            std::vector<MonomialMatrix> trial{x_image, d_image.scaled(m * p2)};
            if (!violated_relation(group, trial)) {
              gens = std::move(trial);
              fixed = true;
              set.notes_.push_back(label + ": diagonal generator rephased by w^" + std::to_string(m * p2));
            }
          }
        }
        set.add(label, std::move(gens));
      }
    }
  }

  set.compute_images_and_characters();
  set.verify_orthogonality();
  set.compute_duals();
  return set;
}

void IrrepSet::compute_images_and_characters() {
  const Group& g = group_;
  const int n = g.order();
  const int p = g.prime();
  images_.assign(irreps_.size(), {});
  trace_exponents_.assign(irreps_.size(), {});
  for (auto& irrep : irreps_) {
    auto& img = images_[irrep.index - 1];
    img.assign(n, MonomialMatrix{});
    std::vector<bool> seen(n, false);
    img[0] = MonomialMatrix::identity(irrep.generator_images.front().order, irrep.degree);
    seen[0] = true;
    std::vector<int> queue{0};
    for (std::size_t head = 0; head < queue.size(); ++head) {
      const int e = queue[head];
      for (std::size_t k = 0; k < g.generators().size(); ++k) {
        const int next = g.multiply(e, g.generators()[k]);
        MonomialMatrix candidate = img[e] * irrep.generator_images[k];
        if (!seen[next]) {
          seen[next] = true;
          img[next] = std::move(candidate);
          queue.push_back(next);
        } else if (!(img[next] == candidate)) {
          throw IrrepVerificationError("irrep " + std::to_string(irrep.index) + " (" + irrep.label +
                                       ") is not a homomorphism at element " +
                                       g.element(next).to_string());
        }
      }
    }
    if (static_cast<int>(queue.size()) != n) {
      throw IrrepVerificationError("generators do not reach every element of the group");
    }

    auto& traces = trace_exponents_[irrep.index - 1];
    irrep.character.clear();
    for (int c = 0; c < g.class_count(); ++c) {
      const auto& members = g.conjugacy_classes()[c];
      std::vector<long> exps = img[members.front()].trace_exponents();
      std::sort(exps.begin(), exps.end());
      const CycloNum value = img[members.front()].trace(p);
      for (int m : members) {
        std::vector<long> other = img[m].trace_exponents();
        std::sort(other.begin(), other.end());
        if (other != exps && img[m].trace(p) != value) {
          throw IrrepVerificationError("character of irrep " + std::to_string(irrep.index) +
                                       " is not constant on conjugacy class " + std::to_string(c));
        }
      }
      traces.push_back(std::move(exps));
      irrep.character.push_back(value);
    }
  }
}

void IrrepSet::verify_orthogonality() const {
  // Sum over classes of |C| chi_i(C) chi_j(C^-1), accumulated as an integer
  // histogram over powers of w and reduced modulo Phi_{p^3}.
  const Group& g = group_;
  const CycloField f = CycloField::of(g.prime());
  std::vector<int> inverse_class(g.class_count());
  for (int c = 0; c < g.class_count(); ++c) {
    inverse_class[c] = g.class_of(g.inverse(g.conjugacy_classes()[c].front()));
  }
  std::vector<long> hist(f.order);
  for (int i = 0; i < size(); ++i) {
    for (int j = 0; j < size(); ++j) {
      std::fill(hist.begin(), hist.end(), 0);
      for (int c = 0; c < g.class_count(); ++c) {
        const long weight = static_cast<long>(g.conjugacy_classes()[c].size());
        for (long a : trace_exponents_[i][c])
          for (long b : trace_exponents_[j][inverse_class[c]]) hist[(a + b) % f.order] += weight;
      }
      for (long k = f.order - 1; k >= f.degree; --k) {
        if (hist[k] == 0) continue;
        for (int t = 0; t + 1 < f.p; ++t) hist[k - f.degree + t * f.p2] -= hist[k];
        hist[k] = 0;
      }
      const long expected0 = i == j ? g.order() : 0;
      bool ok = hist[0] == expected0;
      for (long k = 1; k < f.degree && ok; ++k) ok = hist[k] == 0;
      if (!ok) {
        throw IrrepVerificationError("orthogonality fails for irreps " + std::to_string(i + 1) + " and " +
                                     std::to_string(j + 1));
      }
    }
  }
}

void IrrepSet::compute_duals() {
  const Group& g = group_;
  std::map<std::string, int> by_character;
  for (const auto& irrep : irreps_) by_character.emplace(join_key(irrep.character), irrep.index);
  std::vector<int> duals;
  long degree_squares = 0;
  for (auto& irrep : irreps_) {
    std::vector<CycloNum> conj(g.class_count());
    for (int c = 0; c < g.class_count(); ++c) {
      conj[c] = irrep.character[g.class_of(g.inverse(g.conjugacy_classes()[c].front()))];
    }
    auto it = by_character.find(join_key(conj));
    if (it == by_character.end()) {
      throw IrrepVerificationError("no dual found for irrep " + std::to_string(irrep.index));
    }
    irrep.dual_index = it->second;
    duals.push_back(it->second);
    degree_squares += static_cast<long>(irrep.degree) * irrep.degree;
  }
  pairing_ = DualPairing(std::move(duals));
  if (pairing_.self_dual() != std::vector<int>{1}) {
    throw IrrepVerificationError("expected the trivial representation to be the only self-dual irrep");
  }
  if (degree_squares != g.order() || size() != g.class_count()) {
    throw IrrepVerificationError("irrep degrees do not account for the group order");
  }
}

IrrepLayout IrrepSet::layout() const {
  IrrepLayout l;
  l.family = group_.family();
  l.p = group_.prime();
  for (const auto& irrep : irreps_) l.degrees.push_back(irrep.degree);
  l.pairing = pairing_;
  return l;
}

CycloMatrix IrrepSet::rep_matrix(int index, int element) const {
  return image(index, element).to_dense(prime());
}

CycloMatrix IrrepSet::rep_matrix(int index, const GroupElem& g) const {
  return rep_matrix(index, group_.index_of(g));
}

std::vector<CycloMatrix> IrrepSet::generator_matrices(int index) const {
  std::vector<CycloMatrix> out;
  for (const auto& m : irrep(index).generator_images) out.push_back(m.to_dense(prime()));
  return out;
}

CycloNum IrrepSet::inner_product(int i, int j) const {
  return character_inner_product(group_, irrep(i).character, irrep(j).character);
}

CycloNum character_inner_product(const Group& group, std::span<const CycloNum> chi,
                                 std::span<const CycloNum> psi) {
  if (chi.size() != static_cast<std::size_t>(group.class_count()) || psi.size() != chi.size()) {
    throw std::invalid_argument("class function length does not match the class count");
  }
  CycloNum sum(group.prime());
  for (int c = 0; c < group.class_count(); ++c) {
    const auto& members = group.conjugacy_classes()[c];
    const int inv_class = group.class_of(group.inverse(members.front()));
    sum += chi[c] * psi[inv_class] * Rational(static_cast<long>(members.size()));
  }
  return sum * Rational(1, group.order());
}

std::vector<std::string> tabulated_form_report(const IrrepSet& irreps) {
  const Group& g = irreps.group();
  const int p = g.prime();
  const long p2 = static_cast<long>(p) * p, order = p2 * p;
  std::vector<std::string> out;

  if (!g.abelian()) {
    const auto& gens = g.generators();
    int z;
    if (g.family() == Family::kHeis) {
      z = g.multiply(g.multiply(gens[0], gens[1]), g.multiply(g.inverse(gens[0]), g.inverse(gens[1])));
    } else {
      z = g.power(gens[1], p);
      const int diag = g.index_of(GroupElem{Family::kGp, {1, 0, 0}});
      const auto center = g.center();
      const bool central = std::find(center.begin(), center.end(), diag) != center.end();
      out.push_back(std::string(central ? "ok" : "mismatch") +
                    ": the matrix [[1+p,0],[0,1]] tabulated as the centre generator is " +
                    (central ? "" : "not ") + "central; the centre is generated by y^p = " +
                    g.element(z).to_string());
    }
    for (int eta = 1; eta <= (p - 1) / 2; ++eta) {
      for (int member = 0; member < 2; ++member) {
        const int index = static_cast<int>(p2) + 2 * eta - 1 + member;
        const long want = mod((member == 0 ? eta : p - eta) * p2, order);
        const MonomialMatrix& img = irreps.image(index, z);
        bool scalar = true;
        for (int i = 0; i < img.dim(); ++i) scalar = scalar && img.column[i] == i && img.exponent[i] == want;
        out.push_back(std::string(scalar ? "ok" : "mismatch") + ": sigma_" + std::to_string(2 * eta - 1 + member) +
                      " maps the central generator to w^" + std::to_string(want) + " I");
      }
    }
    return out;
  }

  if (g.family() != Family::kZp2xZp) return out;

  // Z_{p^2} x Z_p table, read column group by column group. Each entry is a
  // listed pair of characters (a-exponent, b-exponent) claimed to be dual.
  struct Listed {
    std::pair<long, long> first, second;
  };
  std::vector<std::pair<std::string, std::vector<Listed>>> groups;
  const long h = (p - 1) / 2;
  {
    std::vector<Listed> v;
    for (long t = 1; t <= h; ++t) v.push_back({{0, t * p2}, {0, (p - t) * p2}});
    groups.emplace_back("sigma_(p^2,t) / sigma_(p^2,p-t)", v);
  }
  {
    std::vector<Listed> v;
    for (long s = 1; s <= h; ++s) v.push_back({{s * p2, 0}, {(p - s) * p2, 0}});
    groups.emplace_back("sigma_(s,p) / sigma_(p-s,p), |a| = p", v);
  }
  {
    std::vector<Listed> v;
    for (long s = 1; s < p; ++s)
      for (long t = 1; t < p; ++t)
        if (s <= h || t <= h) v.push_back({{s * p2, s * p2}, {(p - s) * p2, (p - t) * p2}});
    groups.emplace_back("sigma_(s,t) / sigma_(p-s,p-t) with b -> w^(s p^2) as printed", v);
  }
  {
    std::vector<Listed> v;
    for (long s = 1; s <= p2 - p; ++s)
      for (long t = 1; t < p; ++t)
        if (s <= (p2 - p) / 2 || t <= h) v.push_back({{s * p, t * p2}, {(p2 - s) * p, (p - t) * p2}});
    groups.emplace_back("sigma_(s,t) / sigma_(p^2-s,p-t), |a| = p^2", v);
  }
  {
    std::vector<Listed> v;
    for (long s = 1; s <= (p2 - p) / 2; ++s) v.push_back({{s * p, 0}, {(p2 - s) * p, 0}});
    groups.emplace_back("sigma_(s,p) / sigma_(p-s,p), |a| = p^2", v);
  }

  std::set<std::pair<long, long>> covered{{0, 0}};
  for (const auto& [name, listed] : groups) {
    std::size_t bad = 0;
    for (const auto& l : listed) {
      covered.insert({mod(l.first.first, order), mod(l.first.second, order)});
      covered.insert({mod(l.second.first, order), mod(l.second.second, order)});
      if (mod(l.first.first + l.second.first, order) != 0 || mod(l.first.second + l.second.second, order) != 0) ++bad;
    }
    std::ostringstream os;
    if (bad == 0) {
      os << "ok: " << name << ": " << listed.size() << " listed pairs are mutually dual";
    } else {
      os << "mismatch: " << name << ": " << bad << " of " << listed.size() << " listed pairs are not mutually dual";
    }
    out.push_back(os.str());
  }
  std::ostringstream os;
  const bool complete = covered.size() == static_cast<std::size_t>(order);
  os << (complete ? "ok" : "mismatch") << ": the columns list " << covered.size() << " distinct characters; the group has "
     << order << " (constructed: " << irreps.size() << ")";
  out.push_back(os.str());
  return out;
}

}  // namespace pcubed
