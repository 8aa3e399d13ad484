#include <algorithm>
#include <atomic>
#include <cstdlib>
#include <fstream>
#include <iostream>
#include <map>
#include <mutex>
#include <sstream>
#include <string>
#include <thread>
#include <vector>

#include <CLI11.hpp>

#include "pcubed/combinat.hpp"
#include "pcubed/export.hpp"
#include "pcubed/groups.hpp"
#include "pcubed/irreps.hpp"
#include "pcubed/solver.hpp"

using namespace pcubed;

namespace {

constexpr int kExitInvalid = 1;
constexpr int kExitVerification = 2;

class VerificationFailure : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

struct Options {
  int p = 3;
  std::string family;
  std::string n = "1";
  std::string k;
  std::string format = "table";
  std::string output;
  std::uint64_t seed = 1;
  bool compact = false;
  bool oracle = false;
  bool tables = false;
  long nmax = 4;
  long samples = 3;
};

std::pair<long, long> parse_range(const std::string& text) {
  auto parse_one = [&](const std::string& s) {
    std::size_t used = 0;
    long v = 0;
    try {
      v = std::stol(s, &used);
    } catch (const std::exception&) {
      throw std::invalid_argument("invalid degree: '" + text + "'");
    }
    if (used != s.size() || v < 0) throw std::invalid_argument("invalid degree: '" + text + "'");
    return v;
  };
  const auto dots = text.find("..");
  if (dots == std::string::npos) {
    const long v = parse_one(text);
    return {v, v};
  }
  const long a = parse_one(text.substr(0, dots)), b = parse_one(text.substr(dots + 2));
  if (a > b) throw std::invalid_argument("empty degree range: '" + text + "'");
  return {a, b};
}

std::vector<long> parse_k(const std::string& text) {
  if (text.empty()) throw std::invalid_argument("--k is required");
  std::vector<long> out;
  std::stringstream ss(text);
  std::string item;
  while (std::getline(ss, item, ',')) {
    std::size_t used = 0;
    long v = -1;
    try {
      v = std::stol(item, &used);
    } catch (const std::exception&) {
      used = 0;
    }
    if (used == 0 || used != item.size()) throw std::invalid_argument("invalid multiplicity: '" + item + "'");
    out.push_back(v);
  }
  return out;
}

std::vector<Family> selected_families(const Options& o) {
  if (o.family.empty()) return {kAllFamilies.begin(), kAllFamilies.end()};
  return {parse_family(o.family)};
}

Family single_family(const Options& o) {
  if (o.family.empty()) throw std::invalid_argument("--family is required");
  return parse_family(o.family);
}

void require_format(const Options& o) {
  if (o.format != "table" && o.format != "csv" && o.format != "json")
    throw std::invalid_argument("unknown format: " + o.format);
}

unsigned worker_count() {
  if (const char* env = std::getenv("PCUBED_THREADS")) {
    const long v = std::atol(env);
    if (v >= 1) return static_cast<unsigned>(v);
  }
  return std::max(1u, std::thread::hardware_concurrency());
}

// Runs fn(i) for i in [0, count) on a worker pool; results keep index order.
template <class Fn>
auto parallel_map(std::size_t count, Fn fn) -> std::vector<decltype(fn(std::size_t{}))> {
  std::vector<decltype(fn(std::size_t{}))> results(count);
  std::atomic<std::size_t> next{0};
  std::exception_ptr error;
  std::mutex error_mutex;
  auto work = [&] {
    for (std::size_t i; (i = next.fetch_add(1)) < count;) {
      try {
        results[i] = fn(i);
      } catch (...) {
        std::lock_guard lock(error_mutex);
        if (!error) error = std::current_exception();
      }
    }
  };
  const unsigned n = std::min<std::size_t>(worker_count(), std::max<std::size_t>(count, 1));
  std::vector<std::thread> pool;
  for (unsigned t = 1; t < n; ++t) pool.emplace_back(work);
  work();
  for (auto& t : pool) t.join();
  if (error) std::rethrow_exception(error);
  return results;
}

std::string join(const std::vector<long>& v) {
  std::string out;
  for (std::size_t i = 0; i < v.size(); ++i) out += (i ? "," : "") + std::to_string(v[i]);
  return out;
}

// Left-aligned columns separated by two spaces.
std::string render_table(const std::vector<std::vector<std::string>>& rows) {
  std::vector<std::size_t> width;
  for (const auto& row : rows)
    for (std::size_t c = 0; c < row.size(); ++c) {
      if (width.size() <= c) width.push_back(0);
      width[c] = std::max(width[c], row[c].size());
    }
  std::ostringstream os;
  for (const auto& row : rows) {
    std::string line;
    for (std::size_t c = 0; c < row.size(); ++c) {
      line += row[c];
      if (c + 1 < row.size()) line += std::string(width[c] - row[c].size() + 2, ' ');
    }
    os << line << '\n';
  }
  return os.str();
}

std::string run_groups(const Options& o) {
  require_format(o);
  Json all = Json::array();
  std::vector<std::vector<std::string>> rows{{"family", "p", "order", "center", "classes", "class sizes", "generators"}};
  std::ostringstream csv;
  csv << "family,p,order,center,classes,class_sizes,generators\n";
  for (Family f : selected_families(o)) {
    const Group g = Group::make(f, o.p);
    std::map<std::size_t, int> sizes;
    for (const auto& cls : g.conjugacy_classes()) ++sizes[cls.size()];
    std::string size_text;
    for (const auto& [s, count] : sizes) size_text += (size_text.empty() ? "" : " ") + std::to_string(s) + "x" + std::to_string(count);
    std::string gen_text;
    Json gens = Json::array();
    for (std::size_t i = 0; i < g.generators().size(); ++i) {
      const int e = g.generators()[i];
      gen_text += (i ? " " : "") + g.generator_names()[i] + "=" + g.element(e).to_string() + "|" +
                  std::to_string(g.element_order(e));
      gens.push_back({{"name", g.generator_names()[i]}, {"element", g.element(e).to_string()}, {"order", g.element_order(e)}});
    }
    for (const auto& rel : g.relations())
      if (g.evaluate(rel.lhs) != g.evaluate(rel.rhs)) throw VerificationFailure("relation fails: " + rel.text);
    const std::string name(family_name(f));
    rows.push_back({name, std::to_string(o.p), std::to_string(g.order()), std::to_string(g.center().size()),
                    std::to_string(g.class_count()), size_text, gen_text});
    csv << name << ',' << o.p << ',' << g.order() << ',' << g.center().size() << ',' << g.class_count() << ','
        << csv_field(size_text) << ',' << csv_field(gen_text) << '\n';
    Json cls = Json::object();
    for (const auto& [s, count] : sizes) cls[std::to_string(s)] = count;
    Json rels = Json::array();
    for (const auto& rel : g.relations()) rels.push_back(rel.text);
    all.push_back({{"family", name}, {"p", o.p}, {"order", g.order()}, {"center_size", g.center().size()},
                   {"class_count", g.class_count()}, {"class_sizes", cls}, {"generators", gens}, {"relations", rels}});
  }
  if (o.format == "json") return Json{{"schema", 1}, {"groups", all}}.dump(2) + "\n";
  if (o.format == "csv") return csv.str();
  return render_table(rows);
}

std::string run_irreps(const Options& o) {
  require_format(o);
  const Group g = Group::make(single_family(o), o.p);
  const IrrepSet irreps = IrrepSet::build(g);
  std::string out;
  if (o.format == "csv") {
    out = character_table_csv(irreps);
  } else if (o.format == "json") {
    Json j = irreps_to_json(irreps);
    if (o.tables) j["table_report"] = tabulated_form_report(irreps);
    out = j.dump(2) + "\n";
  } else {
    out += std::string(family_name(g.family())) + " p=" + std::to_string(o.p) + ": " + std::to_string(irreps.size()) +
           " irreps\n";
    out += layout_summary(irreps.layout()) + "\n";
    std::vector<std::vector<std::string>> rows{{"irrep", "label", "deg", "dual"}};
    for (const auto& cls : g.conjugacy_classes()) rows[0].push_back(g.element(cls.front()).to_string());
    for (const auto& irrep : irreps.irreps()) {
      std::vector<std::string> row{std::to_string(irrep.index), irrep.label, std::to_string(irrep.degree),
                                   std::to_string(irrep.dual_index)};
      for (const auto& v : irrep.character) row.push_back(v.to_compact_string());
      rows.push_back(std::move(row));
    }
    out += render_table(rows);
    for (const auto& note : irreps.notes()) out += "note: " + note + "\n";
    if (o.tables)
      for (const auto& line : tabulated_form_report(irreps)) out += line + "\n";
  }
  return out;
}

std::string run_count(const Options& o) {
  require_format(o);
  const Family f = single_family(o);
  const auto [a, b] = parse_range(o.n);
  std::vector<std::vector<std::string>> rows{{"n", "count"}};
  std::string csv = "n,count\n";
  Json list = Json::array();
  for (long n = a; n <= b; ++n) {
    const std::string c = count_reps(f, o.p, n).get_str();
    rows.push_back({std::to_string(n), c});
    csv += std::to_string(n) + "," + c + "\n";
    list.push_back({{"n", n}, {"count", c}});
  }
  if (o.format == "json")
    return Json{{"schema", 1}, {"family", std::string(family_name(f))}, {"p", o.p}, {"counts", list}}.dump(2) + "\n";
  if (o.format == "csv") return csv;
  if (a == b) return rows[1][1] + "\n";
  return render_table(rows);
}

std::string run_census(const Options& o) {
  require_format(o);
  const Family f = single_family(o);
  const auto [a, b] = parse_range(o.n);
  std::vector<Census> rows;
  for (long n = a; n <= b; ++n) rows.push_back(census(f, o.p, n));
  if (o.format == "json") return census_to_json(f, o.p, rows).dump(2) + "\n";
  if (o.format == "csv") return census_csv(rows);
  std::vector<std::vector<std::string>> table{{"n", "total", "nondegenerate", "degenerate_only"}};
  for (const auto& c : rows)
    table.push_back({std::to_string(c.n), c.total.get_str(), c.nondegenerate_admitting.get_str(), c.degenerate_only.get_str()});
  return render_table(table);
}

std::string run_dim(const Options& o) {
  require_format(o);
  const Family f = single_family(o);
  const IrrepLayout layout = IrrepLayout::canonical(f, o.p);
  const MultVec k = MultVec::make(layout, parse_k(o.k));
  const long dim = invariant_dim(k, layout.pairing), sym = symmetric_dim(k, layout.pairing),
             skew = skew_dim(k, layout.pairing);
  const bool nondeg = admits_nondegenerate(k, layout.pairing);
  Json j{{"schema", 1}, {"family", std::string(family_name(f))}, {"p", o.p}, {"k", k.k}, {"n", k.n},
         {"dimension", dim}, {"symmetric", sym}, {"skew", skew}, {"nondegenerate", nondeg}};
  std::vector<std::vector<std::string>> rows{{"n", std::to_string(k.n)},
                                             {"dimension", std::to_string(dim)},
                                             {"symmetric", std::to_string(sym)},
                                             {"skew", std::to_string(skew)},
                                             {"nondegenerate", nondeg ? "yes" : "no"}};
  bool match = true;
  if (o.oracle) {
    long odim = 0, osym = 0, oskew = 0;
    if (k.n > 0) {
      const IrrepSet irreps = IrrepSet::build(Group::make(f, o.p));
      const InvSpace space = invariant_space(assemble(k, irreps), irreps);
      odim = space.dimension;
      osym = symmetric_part_dim(space);
      oskew = skew_part_dim(space);
    }
    match = odim == dim && osym == sym && oskew == skew;
    rows.push_back({"oracle dimension", std::to_string(odim)});
    rows.push_back({"oracle symmetric", std::to_string(osym)});
    rows.push_back({"oracle skew", std::to_string(oskew)});
    rows.push_back({"match", match ? "yes" : "no"});
    j["oracle"] = {{"dimension", odim}, {"symmetric", osym}, {"skew", oskew}, {"match", match}};
  }
  std::string out;
  if (o.format == "json") {
    j["layout"] = layout_to_json(layout);
    out = j.dump(2) + "\n";
  } else if (o.format == "csv") {
    out = "key,value\n";
    for (const auto& row : rows) out += csv_field(row[0]) + "," + row[1] + "\n";
  } else {
    out = layout_summary(layout) + "\n" + render_table(rows);
  }
  if (!match) throw VerificationFailure(out + "formula and oracle disagree for k = " + join(k.k));
  return out;
}

std::string run_witness(const Options& o) {
  require_format(o);
  const Family f = single_family(o);
  const IrrepSet irreps = IrrepSet::build(Group::make(f, o.p));
  const MultVec k = MultVec::make(irreps.layout(), parse_k(o.k));
  const auto w = nondegenerate_witness(k, irreps);
  if (o.format == "json") {
    Json j{{"schema", 1}, {"family", std::string(family_name(f))}, {"p", o.p}, {"k", k.k}};
    j["witness"] = w ? matrix_to_json(*w, o.compact) : Json(nullptr);
    return j.dump(2) + "\n";
  }
  if (!w) return "none\n";
  if (o.format == "csv") {
    std::string out;
    for (std::size_t r = 0; r < w->rows(); ++r) {
      for (std::size_t c = 0; c < w->cols(); ++c) {
        const CycloNum& x = (*w)(r, c);
        out += (c ? "," : "") + csv_field(x.is_zero() ? "0" : x.to_compact_string());
      }
      out += "\n";
    }
    return out;
  }
  return layout_summary(irreps.layout()) + "\n" + w->to_string(true) + "\n";
}

struct VectorReport {
  std::vector<std::string> problems;
};

VectorReport check_vector(const MultVec& k, const IrrepSet& irreps, std::uint64_t seed, long samples) {
  VectorReport rep;
  const DualPairing& pairing = irreps.pairing();
  const RepAssembly asm_ = assemble(k, irreps);
  const InvSpace space = invariant_space(asm_, irreps);
  const std::string tag = "k=" + join(k.k) + ": ";
  if (space.dimension != invariant_dim(k, pairing))
    rep.problems.push_back(tag + "dimension " + std::to_string(space.dimension) + " vs formula " +
                           std::to_string(invariant_dim(k, pairing)));
  if (symmetric_part_dim(space) != symmetric_dim(k, pairing) || skew_part_dim(space) != skew_dim(k, pairing))
    rep.problems.push_back(tag + "symmetric/skew split differs from the formulas");
  if (!support_outside_pairing(space, pairing).empty()) rep.problems.push_back(tag + "basis touches a non-dual block");
  for (const auto& v : l_shape_violations(space, asm_, irreps)) rep.problems.push_back(tag + v);
  const bool admits = admits_nondegenerate(k, pairing);
  if (nondegenerate_witness(k, irreps).has_value() != admits) rep.problems.push_back(tag + "witness disagrees with criterion");
  if (!admits && space.dimension > 0) {
    std::mt19937_64 rng(seed);
    for (long s = 0; s < samples; ++s)
      if (rank(random_member(space, rng)) >= asm_.n()) rep.problems.push_back(tag + "random member is non-degenerate");
  }
  return rep;
}

std::string run_verify(const Options& o, bool& failed) {
  require_format(o);
  if (o.nmax < 0) throw std::invalid_argument("--nmax must be non-negative");
  std::vector<std::vector<std::string>> rows{{"family", "p", "vectors", "count checks", "mismatches"}};
  Json families = Json::array();
  std::string details;
  for (Family f : selected_families(o)) {
    const IrrepSet irreps = IrrepSet::build(Group::make(f, o.p));
    const IrrepLayout layout = irreps.layout();
    std::vector<std::string> problems;
    for (long n = 0; n <= o.nmax; ++n) {
      const EnumerationTally t = tally_enumeration(layout, n);
      if (BigInt(std::to_string(t.total)) != count_reps(f, o.p, n))
        problems.push_back("n=" + std::to_string(n) + ": enumeration length differs from the count formula");
      if (BigInt(std::to_string(t.nondegenerate)) != count_nondegenerate(f, o.p, n))
        problems.push_back("n=" + std::to_string(n) + ": filtered enumeration differs from the non-degenerate count");
    }
    std::vector<MultVec> work;
    for (long n = 1; n <= o.nmax; ++n) {
      MultVecStream s(layout, n);
      while (s.next()) work.push_back(s.current_multvec());
    }
    const auto reports = parallel_map(work.size(), [&](std::size_t i) {
      return check_vector(work[i], irreps, o.seed + i, o.samples);
    });
    for (const auto& r : reports) problems.insert(problems.end(), r.problems.begin(), r.problems.end());
    const std::string name(family_name(f));
    rows.push_back({name, std::to_string(o.p), std::to_string(work.size()), std::to_string(o.nmax + 1),
                    std::to_string(problems.size())});
    families.push_back({{"family", name}, {"p", o.p}, {"vectors", work.size()}, {"mismatches", problems}});
    for (const auto& pr : problems) details += name + " " + pr + "\n";
    if (!problems.empty()) failed = true;
  }
  if (o.format == "json")
    return Json{{"schema", 1}, {"nmax", o.nmax}, {"seed", o.seed}, {"families", families}, {"ok", !failed}}.dump(2) + "\n";
  if (o.format == "csv") {
    std::string out = "family,p,vectors,count_checks,mismatches\n";
    for (std::size_t i = 1; i < rows.size(); ++i)
      out += rows[i][0] + "," + rows[i][1] + "," + rows[i][2] + "," + rows[i][3] + "," + rows[i][4] + "\n";
    return out;
  }
  return render_table(rows) + details + (failed ? "FAIL\n" : "OK\n");
}

std::string run_charp(const Options& o, bool& failed) {
  require_format(o);
  const auto [a, b] = parse_range(o.n);
  if (a < 1) throw std::invalid_argument("charp needs n >= 1");
  std::vector<std::vector<std::string>> rows{{"n", "dimension", "expected", "identity nondegenerate"}};
  std::string csv = "n,dimension,expected,identity_nondegenerate\n";
  Json list = Json::array();
  for (long n = a; n <= b; ++n) {
    const InvSpace space = charp_mode(n, o.p);
    const auto size = static_cast<std::size_t>(n);
    const CycloMatrix id = CycloMatrix::identity(o.p, size);
    const bool id_ok = rank_of_vectors(o.p, [&] {
                         std::vector<std::vector<CycloNum>> v;
                         for (const auto& x : space.basis) v.push_back(x.entries());
                         v.push_back(id.entries());
                         return v;
                       }()) == space.basis.size() &&
                       rank(id) == size;
    const bool ok = space.dimension == n * n && id_ok;
    if (!ok) failed = true;
    rows.push_back({std::to_string(n), std::to_string(space.dimension), std::to_string(n * n), id_ok ? "yes" : "no"});
    csv += std::to_string(n) + "," + std::to_string(space.dimension) + "," + std::to_string(n * n) + "," +
           (id_ok ? "yes" : "no") + "\n";
    list.push_back({{"n", n}, {"dimension", space.dimension}, {"expected", n * n}, {"identity_nondegenerate", id_ok}});
  }
  if (o.format == "json") return Json{{"schema", 1}, {"charp", list}}.dump(2) + "\n";
  if (o.format == "csv") return csv;
  return render_table(rows);
}

void emit(const Options& o, const std::string& text) {
  if (o.output.empty()) {
    std::cout << text;
    return;
  }
  std::ofstream f(o.output, std::ios::binary);
  if (!f) throw std::invalid_argument("cannot write " + o.output);
  f << text;
}

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{"Groups of order p^3: irreps, representation counts and invariant bilinear forms"};
  app.require_subcommand(1);
  Options o;

  auto common = [&](CLI::App* sub) {
    sub->add_option("--p", o.p, "odd prime")->capture_default_str();
    sub->add_option("--format", o.format, "table, csv or json")->capture_default_str();
    sub->add_option("--output", o.output, "write to this file instead of stdout");
  };
  auto family_opt = [&](CLI::App* sub) {
    sub->add_option("--family", o.family, "heis, gp, zp3, zp2xzp or zpxzpxzp");
  };

  auto* groups = app.add_subcommand("groups", "order, centre and conjugacy classes");
  common(groups);
  family_opt(groups);
  auto* irreps = app.add_subcommand("irreps", "character table and irrep data");
  common(irreps);
  family_opt(irreps);
  irreps->add_flag("--tables", o.tables, "compare against the tabulated closed forms");
  auto* count = app.add_subcommand("count", "number of n-degree representations");
  common(count);
  family_opt(count);
  count->add_option("--n", o.n, "degree or range a..b");
  auto* cen = app.add_subcommand("census", "total, non-degenerate and degenerate-only counts");
  common(cen);
  family_opt(cen);
  cen->add_option("--n", o.n, "degree or range a..b");
  auto* dim = app.add_subcommand("dim", "invariant form dimensions for a multiplicity vector");
  common(dim);
  family_opt(dim);
  dim->add_option("--k", o.k, "comma separated multiplicities in irrep order");
  dim->add_flag("--oracle", o.oracle, "also solve the invariance equations");
  auto* wit = app.add_subcommand("witness", "non-degenerate invariant form, or none");
  common(wit);
  family_opt(wit);
  wit->add_option("--k", o.k, "comma separated multiplicities in irrep order");
  wit->add_flag("--compact", o.compact, "entries as w^k strings");
  auto* ver = app.add_subcommand("verify", "formula against oracle sweep");
  common(ver);
  family_opt(ver);
  ver->add_option("--nmax", o.nmax, "largest degree")->capture_default_str();
  ver->add_option("--seed", o.seed, "seed for random members")->capture_default_str();
  ver->add_option("--samples", o.samples, "random members per degenerate vector")->capture_default_str();
  auto* charp = app.add_subcommand("charp", "forms when every element acts trivially");
  common(charp);
  charp->add_option("--n", o.n, "degree or range a..b");

  try {
    app.parse(argc, argv);
  } catch (const CLI::ParseError& e) {
    const int code = app.exit(e);
    return code == 0 ? 0 : kExitInvalid;
  }

  try {
    bool failed = false;
    std::string out;
    if (*groups) out = run_groups(o);
    else if (*irreps) out = run_irreps(o);
    else if (*count) out = run_count(o);
    else if (*cen) out = run_census(o);
    else if (*dim) out = run_dim(o);
    else if (*wit) out = run_witness(o);
    else if (*ver) out = run_verify(o, failed);
    else if (*charp) out = run_charp(o, failed);
    emit(o, out);
    return failed ? kExitVerification : 0;
  } catch (const VerificationFailure& e) {
    std::cout << e.what() << '\n';
    return kExitVerification;
  } catch (const IrrepVerificationError& e) {
    std::cerr << "verification failed: " << e.what() << '\n';
    return kExitVerification;
  } catch (const SolverError& e) {
    std::cerr << "verification failed: " << e.what() << '\n';
    return kExitVerification;
  } catch (const std::invalid_argument& e) {
    std::cerr << "error: " << e.what() << '\n';
    return kExitInvalid;
  } catch (const std::exception& e) {
    std::cerr << "error: " << e.what() << '\n';
    return kExitInvalid;
  }
}
