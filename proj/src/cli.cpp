#include "mgdual/cli.hpp"

#include "mgdual/errors.hpp"
#include "mgdual/gram.hpp"
#include "mgdual/json_io.hpp"
#include "mgdual/pairing.hpp"
#include "mgdual/rep_variety.hpp"

#include <CLI11.hpp>

#include <algorithm>
#include <cstdint>
#include <ostream>

namespace mgdual::cli {

namespace {

enum class Format { plain, json, csv };

struct CliConfig {
  int genus = 0;
  SignConvention sign_convention = SignConvention::consistent;
  Format format = Format::plain;
  bool strict = false;
  std::uint64_t seed = 0;
  int samples = 100;
  double tol = 1e-12;
};

const char* kSignHelp =
    "Global sign of the closed-form a/f pairing. 'consistent' uses (-1)^g and "
    "gives the one-point M_1 the value 1. 'paper-literal' uses (-1)^(g-1) as "
    "the formula is commonly printed; it flips the sign of every pairing and "
    "makes the point count of M_1 equal to -1.";

void validate(const CliConfig& cfg) {
  if (cfg.genus < 1)
    throw GenusOutOfRange("genus must be >= 1, got " + std::to_string(cfg.genus));
  if (cfg.samples < 1) throw Error("--samples must be >= 1");
  if (!(cfg.tol > 0)) throw Error("--tol must be > 0");
}

int cmd_pair(const CliConfig& cfg, const std::string& text, std::ostream& out, std::ostream& err) {
  Monomial m = parse_monomial(text, cfg.genus);
  NormalizedMonomial x = normalize(m, cfg.genus);
  if (cfg.strict && m.degree() != top_degree(cfg.genus)) {
    err << "error: degree " << m.degree() << " of '" << text << "' differs from dim M_"
        << cfg.genus << " = " << top_degree(cfg.genus) << '\n';
    return kDegreeMismatch;
  }
  Rational value = pair_monomial(x, cfg.genus, cfg.sign_convention);
  switch (cfg.format) {
    case Format::plain: out << value.str() << '\n'; break;
    case Format::json:
      out << nlohmann::json{{"genus", cfg.genus},
                            {"monomial", text},
                            {"normalized", render(x)},
                            {"degree", m.degree()},
                            {"value", to_json(value)}}
                 .dump()
          << '\n';
      break;
    case Format::csv: out << "monomial,value\n" << render(x) << ',' << value.str() << '\n'; break;
  }
  return kOk;
}

int cmd_table(const CliConfig& cfg, std::ostream& out) {
  auto rows = table(cfg.genus, cfg.sign_convention);
  switch (cfg.format) {
    case Format::plain:
      out << "m n p value\n";
      for (const auto& r : rows) out << r.m << ' ' << r.n << ' ' << r.p << ' ' << r.value << '\n';
      break;
    case Format::json: out << to_json(cfg.genus, rows).dump() << '\n'; break;
    case Format::csv: out << to_csv(rows); break;
  }
  return kOk;
}

int cmd_gram(const CliConfig& cfg, int degree, std::ostream& out) {
  GramMatrix gm = gram(cfg.genus, degree, cfg.sign_convention);
  RankReport rr = rank_and_radical(gm);
  switch (cfg.format) {
    case Format::plain: {
      out << "gram genus " << gm.genus << " degree " << gm.degree << " x "
          << top_degree(gm.genus) - gm.degree << ": " << gm.rows.size() << " x "
          << gm.cols.size() << '\n';
      for (std::size_t i = 0; i < gm.rows.size(); ++i) {
        out << label(gm.rows[i]) << ':';
        for (std::size_t j = 0; j < gm.cols.size(); ++j) out << ' ' << gm.at(i, j);
        out << '\n';
      }
      out << "rank " << rr.rank << '\n';
      out << "radical dimension " << rr.radical.size() << '\n';
      for (const auto& v : rr.radical) out << "radical: " << v.str() << '\n';
      break;
    }
    case Format::json: {
      nlohmann::json j = to_json(gm);
      j["rank"] = rr.rank;
      nlohmann::json radical = nlohmann::json::array();
      for (const auto& v : rr.radical) radical.push_back(to_json(v));
      j["radical"] = radical;
      out << j.dump() << '\n';
      break;
    }
    case Format::csv:
      out << to_csv(gm);
      out << "# rank " << rr.rank << '\n';
      out << "# radical_dimension " << rr.radical.size() << '\n';
      break;
  }
  return kOk;
}

int cmd_dual(const CliConfig& cfg, const std::string& token, std::ostream& out) {
  DualPartner d = dual_partner(cfg.genus, Generator::parse(token, cfg.genus), cfg.sign_convention);
  switch (cfg.format) {
    case Format::plain:
      out << d.partner.str() << '\n';
      for (std::size_t i = 0; i < d.functional.basis.size(); ++i)
        out << "<" << d.generator.name() << " * " << label(d.functional.basis[i])
            << "> = " << d.functional.values[i] << '\n';
      break;
    case Format::json: {
      nlohmann::json j = to_json(d);
      j["genus"] = cfg.genus;
      out << j.dump() << '\n';
      break;
    }
    case Format::csv:
      out << "monomial,value\n";
      for (std::size_t i = 0; i < d.functional.basis.size(); ++i)
        out << label(d.functional.basis[i]) << ',' << d.functional.values[i] << '\n';
      break;
  }
  return kOk;
}

int cmd_newstead(const CliConfig& cfg, std::ostream& out) {
  NewsteadReport r = newstead_check(cfg.genus, cfg.sign_convention);
  if (!r.passed()) {
    out << to_json(r).dump() << '\n';
    return kCheckFailed;
  }
  switch (cfg.format) {
    case Format::plain:
      if (r.vacuous)
        out << "genus " << r.genus << ": vacuous (deg a^" << r.genus << " = " << 4 * r.genus
            << " > " << top_degree(r.genus) << ")\n";
      else
        out << "genus " << r.genus << ": a^" << r.genus << " pairs to zero against all "
            << r.checked << " complementary monomials\n";
      break;
    case Format::json: out << to_json(r).dump() << '\n'; break;
    case Format::csv:
      out << "genus,vacuous,checked,violations\n"
          << r.genus << ',' << (r.vacuous ? "true" : "false") << ',' << r.checked << ",0\n";
      break;
  }
  return kOk;
}

int cmd_verify_rep(const CliConfig& cfg, std::ostream& out) {
  rep::RepReport r = rep::verify_rep(cfg.genus, cfg.samples, cfg.seed, cfg.tol);
  if (!r.passed()) {
    out << to_json(r).dump() << '\n';
    return kCheckFailed;
  }
  switch (cfg.format) {
    case Format::plain: {
      out << "genus " << r.genus << ", " << r.samples << " samples from seed " << r.seed << '\n';
      out << "mu residual max " << r.mu_residual_max << '\n';
      auto hist = [&](const char* name, const std::map<int, int>& h) {
        out << name << ':';
        for (const auto& [rank, count] : h) out << ' ' << rank << "x" << count;
        out << '\n';
      };
      hist("jacobian rank", r.jacobian_rank_histogram);
      hist("stabilizer rank", r.stabilizer_rank_histogram);
      out << "dims ambient " << r.dims.ambient << " fiber " << r.dims.fiber << " quotient "
          << r.dims.quotient << '\n';
      break;
    }
    case Format::json: out << to_json(r).dump() << '\n'; break;
    case Format::csv:
      out << "genus,samples,mu_residual_max,ambient,fiber,quotient\n"
          << r.genus << ',' << r.samples << ',' << r.mu_residual_max << ',' << r.dims.ambient
          << ',' << r.dims.fiber << ',' << r.dims.quotient << '\n';
      break;
  }
  return kOk;
}

}  // namespace

int run(const std::vector<std::string>& args, std::ostream& out, std::ostream& err) {
  CLI::App app{"Intersection pairings and Poincare duals on the moduli space M_g(2,1)", "mgdual"};
  app.require_subcommand(1);

  CliConfig cfg;
  app.add_option("--genus,-g", cfg.genus, "Genus of the surface (>= 1)")->required();
  app.add_option("--sign-convention", cfg.sign_convention, kSignHelp)
      ->transform(CLI::CheckedTransformer(
          std::map<std::string, SignConvention>{{"consistent", SignConvention::consistent},
                                                {"paper-literal", SignConvention::literal},
                                                {"paper_literal", SignConvention::literal}},
          CLI::ignore_case));
  app.add_option("--format", cfg.format, "Output format: plain, json or csv")
      ->transform(CLI::CheckedTransformer(
          std::map<std::string, Format>{{"plain", Format::plain}, {"json", Format::json},
                                        {"csv", Format::csv}},
          CLI::ignore_case));
  app.add_flag("--strict", cfg.strict, "Reject pairings of non-top-degree monomials (exit 2)");
  app.add_option("--seed", cfg.seed, "Base seed for verify-rep samples");
  app.add_option("--samples", cfg.samples, "Number of fiber samples for verify-rep");
  app.add_option("--tol", cfg.tol, "Tolerance on |mu(x) + 1| for verify-rep");

  std::string monomial_text, generator;
  int degree = -1;

  auto* pair = app.add_subcommand("pair", "Evaluate a monomial on the fundamental class");
  pair->add_option("monomial", monomial_text, "e.g. \"f^2 a\", \"b1 b2 b4 b5\", \"gamma\"")
      ->required();
  auto* tab = app.add_subcommand("table", "All admissible f^m a^n gamma^p pairings");
  auto* gr = app.add_subcommand("gram", "Pairing matrix between complementary degrees");
  gr->add_option("--degree,-d", degree, "Row degree")->required();
  auto* dual = app.add_subcommand("dual", "Dual partner of a generator");
  dual->add_option("--gen", generator, "f, a or b<k>")->required();
  auto* newstead = app.add_subcommand("newstead", "Check that a^g pairs to zero");
  auto* verify = app.add_subcommand("verify-rep", "Numerical checks on mu^-1(-1)");
  for (auto* sub : {pair, tab, gr, dual, newstead, verify}) sub->fallthrough();

  std::vector<std::string> reversed(args.rbegin(), args.rend());
  try {
    app.parse(reversed);
  } catch (const CLI::ParseError& e) {
    int code = app.exit(e, out, err);
    return code == 0 ? kOk : kUsage;
  }

  try {
    validate(cfg);
    if (*pair) return cmd_pair(cfg, monomial_text, out, err);
    if (*tab) return cmd_table(cfg, out);
    if (*gr) return cmd_gram(cfg, degree, out);
    if (*dual) return cmd_dual(cfg, generator, out);
    if (*newstead) return cmd_newstead(cfg, out);
    if (*verify) return cmd_verify_rep(cfg, out);
  } catch (const Error& e) {
    err << "error: " << e.what() << '\n';
    return kUsage;
  } catch (const std::invalid_argument& e) {
    err << "error: " << e.what() << '\n';
    return kUsage;
  }
  return kUsage;
}

}  // namespace mgdual::cli
