#pragma once

#include <string>
#include <vector>

#include <json.hpp>

#include "pcubed/combinat.hpp"
#include "pcubed/irreps.hpp"
#include "pcubed/linalg.hpp"
#include "pcubed/solver.hpp"

namespace pcubed {

using Json = nlohmann::ordered_json;

// Field quoted when it holds a comma, quote or newline.
std::string csv_field(const std::string& s);

// Dense coefficient vector with every rational written as a string.
Json cyclo_to_json(const CycloNum& x);
// Matrix as rows of entries: coefficient arrays, or "w^k"/polynomial strings when compact.
Json matrix_to_json(const CycloMatrix& m, bool compact);

// Rows are irreps, columns are conjugacy class representatives.
std::string character_table_csv(const IrrepSet& irreps);
Json irreps_to_json(const IrrepSet& irreps);

// Irrep order, degrees and dual indices, so k-vectors can be written by hand.
std::string layout_summary(const IrrepLayout& layout);
Json layout_to_json(const IrrepLayout& layout);

std::string census_csv(const std::vector<Census>& rows);
Json census_to_json(Family family, int p, const std::vector<Census>& rows);

Json basis_to_json(const InvSpace& space, bool compact);

}  // namespace pcubed
