#include "mgdual/json_io.hpp"

#include <sstream>

namespace mgdual {

using nlohmann::json;

json to_json(const Rational& r) {
  return {{"num", r.numerator().get_str()}, {"den", r.denominator().get_str()}};
}

Rational rational_from_json(const json& j) {
  return Rational(BigInt(j.at("num").get<std::string>(), 10),
                  BigInt(j.at("den").get<std::string>(), 10));
}

json to_json(const CohClass& c) {
  json terms = json::array();
  for (const auto& [shape, coeff] : c.terms())
    terms.push_back({{"monomial", label(shape)}, {"coeff", to_json(coeff)}});
  return terms;
}

json to_json(const GramMatrix& gm) {
  json rows = json::array(), cols = json::array(), entries = json::array();
  for (const auto& r : gm.rows) rows.push_back(label(r));
  for (const auto& c : gm.cols) cols.push_back(label(c));
  for (std::size_t i = 0; i < gm.rows.size(); ++i) {
    json row = json::array();
    for (std::size_t j = 0; j < gm.cols.size(); ++j) row.push_back(to_json(gm.at(i, j)));
    entries.push_back(std::move(row));
  }
  return {{"genus", gm.genus}, {"degree", gm.degree}, {"rows", rows}, {"cols", cols},
          {"entries", entries}};
}

std::string to_csv(const GramMatrix& gm) {
  std::ostringstream out;
  out << "monomial";
  for (const auto& c : gm.cols) out << ',' << label(c);
  out << '\n';
  for (std::size_t i = 0; i < gm.rows.size(); ++i) {
    out << label(gm.rows[i]);
    for (std::size_t j = 0; j < gm.cols.size(); ++j) out << ',' << gm.at(i, j).str();
    out << '\n';
  }
  return out.str();
}

json to_json(int genus, const std::vector<TableRow>& rows) {
  json out = json::array();
  for (const auto& r : rows)
    out.push_back({{"m", r.m}, {"n", r.n}, {"p", r.p}, {"value", to_json(r.value)}});
  return {{"genus", genus}, {"rows", out}};
}

std::string to_csv(const std::vector<TableRow>& rows) {
  std::ostringstream out;
  out << "m,n,p,value\n";
  for (const auto& r : rows) out << r.m << ',' << r.n << ',' << r.p << ',' << r.value.str() << '\n';
  return out.str();
}

json to_json(const DualPartner& d) {
  json functional = json::array();
  for (std::size_t i = 0; i < d.functional.basis.size(); ++i)
    functional.push_back(
        {{"monomial", label(d.functional.basis[i])}, {"value", to_json(d.functional.values[i])}});
  return {{"generator", d.generator.name()},
          {"partner", to_json(d.partner)},
          {"partner_text", d.partner.str()},
          {"functional", functional}};
}

json to_json(const NewsteadReport& r) {
  json violations = json::array();
  for (const auto& v : r.violations)
    violations.push_back({{"monomial", label(v.partner)}, {"value", to_json(v.value)}});
  return {{"genus", r.genus},
          {"vacuous", r.vacuous},
          {"checked", r.checked},
          {"passed", r.passed()},
          {"violations", violations}};
}

json to_json(const rep::RepReport& r) {
  auto histogram = [](const std::map<int, int>& h) {
    json out = json::object();
    for (const auto& [rank, count] : h) out[std::to_string(rank)] = count;
    return out;
  };
  json failures = json::array();
  for (const auto& f : r.failures) failures.push_back({{"seed", f.seed}, {"reason", f.reason}});
  return {{"genus", r.genus},
          {"samples", r.samples},
          {"seed", r.seed},
          {"tol", r.tol},
          {"mu_residual_max", r.mu_residual_max},
          {"jacobian_rank_histogram", histogram(r.jacobian_rank_histogram)},
          {"stabilizer_rank_histogram", histogram(r.stabilizer_rank_histogram)},
          {"dims", {{"ambient", r.dims.ambient}, {"fiber", r.dims.fiber}, {"quotient", r.dims.quotient}}},
          {"failures", failures}};
}

}  // namespace mgdual
