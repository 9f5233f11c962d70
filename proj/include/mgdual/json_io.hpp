#pragma once

#include "mgdual/gram.hpp"
#include "mgdual/pairing.hpp"
#include "mgdual/rep_variety.hpp"

#include <json.hpp>

#include <string>
#include <vector>

namespace mgdual {

/// {"num": "...", "den": "..."}; strings so consumers never truncate.
nlohmann::json to_json(const Rational& r);
Rational rational_from_json(const nlohmann::json& j);

/// [{"monomial": label, "coeff": {num, den}}, ...] in canonical order.
nlohmann::json to_json(const CohClass& c);

/// {genus, degree, rows, cols, entries}; entries is row-major nested.
nlohmann::json to_json(const GramMatrix& gm);
/// Comma-separated, header row of column labels, one row per row label.
std::string to_csv(const GramMatrix& gm);

nlohmann::json to_json(int genus, const std::vector<TableRow>& rows);
std::string to_csv(const std::vector<TableRow>& rows);

nlohmann::json to_json(const DualPartner& d);
nlohmann::json to_json(const NewsteadReport& r);

/// {genus, samples, mu_residual_max, jacobian_rank_histogram,
///  stabilizer_rank_histogram, dims: {ambient, fiber, quotient}, failures}
nlohmann::json to_json(const rep::RepReport& r);

}  // namespace mgdual
