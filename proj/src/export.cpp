#include "pcubed/export.hpp"

#include <sstream>

namespace pcubed {

std::string csv_field(const std::string& s) {
  if (s.find_first_of(",\"\n") == std::string::npos) return s;
  std::string out = "\"";
  for (char c : s) {
    if (c == '"') out += '"';
    out += c;
  }
  return out + "\"";
}

Json cyclo_to_json(const CycloNum& x) {
  Json arr = Json::array();
  for (const auto& c : x.coefficients()) arr.push_back(rational_to_string(c));
  return arr;
}

Json matrix_to_json(const CycloMatrix& m, bool compact) {
  Json rows = Json::array();
  for (std::size_t r = 0; r < m.rows(); ++r) {
    Json row = Json::array();
    for (std::size_t c = 0; c < m.cols(); ++c) {
      CycloNum x = m(r, c);
      if (x.prime() == 0) x = CycloNum(m.prime());
      if (compact) {
        row.push_back(x.to_compact_string());
      } else {
        row.push_back(cyclo_to_json(x));
      }
    }
    rows.push_back(std::move(row));
  }
  return rows;
}

std::string character_table_csv(const IrrepSet& irreps) {
  const Group& g = irreps.group();
  std::ostringstream os;
  os << "irrep,label,degree,dual";
  for (const auto& cls : g.conjugacy_classes()) os << ',' << csv_field(g.element(cls.front()).to_string());
  os << '\n';
  for (const auto& irrep : irreps.irreps()) {
    os << irrep.index << ',' << csv_field(irrep.label) << ',' << irrep.degree << ',' << irrep.dual_index;
    for (const auto& value : irrep.character) os << ',' << csv_field(value.to_compact_string());
    os << '\n';
  }
  return os.str();
}

Json irreps_to_json(const IrrepSet& irreps) {
  const Group& g = irreps.group();
  const int p = irreps.prime();
  Json out;
  out["schema"] = 1;
  out["family"] = std::string(family_name(g.family()));
  out["p"] = p;
  out["order"] = g.order();
  out["generators"] = g.generator_names();
  Json classes = Json::array();
  for (const auto& cls : g.conjugacy_classes()) {
    classes.push_back({{"representative", g.element(cls.front()).to_string()}, {"size", cls.size()}});
  }
  out["classes"] = std::move(classes);
  Json list = Json::array();
  for (const auto& irrep : irreps.irreps()) {
    Json item;
    item["index"] = irrep.index;
    item["label"] = irrep.label;
    item["degree"] = irrep.degree;
    item["dual"] = irrep.dual_index;
    Json gens = Json::array();
    for (const auto& m : irrep.generator_images) gens.push_back(matrix_to_json(m.to_dense(p), false));
    item["generator_images"] = std::move(gens);
    Json chi = Json::array();
    for (const auto& value : irrep.character) chi.push_back(value.to_compact_string());
    item["character"] = std::move(chi);
    list.push_back(std::move(item));
  }
  out["irreps"] = std::move(list);
  return out;
}

std::string layout_summary(const IrrepLayout& layout) {
  std::ostringstream os;
  os << "irrep order (index:degree:dual):";
  for (int i = 1; i <= layout.r(); ++i) os << ' ' << i << ':' << layout.degree(i) << ':' << layout.pairing.dual_of(i);
  return os.str();
}

Json layout_to_json(const IrrepLayout& layout) {
  Json out = Json::array();
  for (int i = 1; i <= layout.r(); ++i)
    out.push_back({{"index", i}, {"degree", layout.degree(i)}, {"dual", layout.pairing.dual_of(i)}});
  return out;
}

std::string census_csv(const std::vector<Census>& rows) {
  std::ostringstream os;
  os << "n,total,nondegenerate,degenerate_only\n";
  for (const auto& c : rows)
    os << c.n << ',' << c.total.get_str() << ',' << c.nondegenerate_admitting.get_str() << ','
       << c.degenerate_only.get_str() << '\n';
  return os.str();
}

Json census_to_json(Family family, int p, const std::vector<Census>& rows) {
  Json out;
  out["schema"] = 1;
  out["family"] = std::string(family_name(family));
  out["p"] = p;
  Json list = Json::array();
  for (const auto& c : rows) {
    list.push_back({{"n", c.n},
                    {"total", c.total.get_str()},
                    {"nondegenerate", c.nondegenerate_admitting.get_str()},
                    {"degenerate_only", c.degenerate_only.get_str()}});
  }
  out["census"] = std::move(list);
  return out;
}

Json basis_to_json(const InvSpace& space, bool compact) {
  Json out;
  out["schema"] = 1;
  out["n"] = space.n;
  out["dimension"] = space.dimension;
  Json support = Json::array();
  for (const auto& [i, j] : space.block_support) support.push_back({i, j});
  out["block_support"] = std::move(support);
  Json basis = Json::array();
  for (const auto& x : space.basis) basis.push_back(matrix_to_json(x, compact));
  out["basis"] = std::move(basis);
  return out;
}

}  // namespace pcubed
