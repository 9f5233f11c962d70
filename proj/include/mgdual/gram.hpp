#pragma once

#include "mgdual/coh_class.hpp"
#include "mgdual/monomial.hpp"
#include "mgdual/pairing.hpp"

#include <cstddef>
#include <string>
#include <vector>

namespace mgdual {

/// All monomials f^i a^j b_S of degree d with coefficient one, in canonical
/// order (see canonical_less). Gamma symbols are not listed separately since
/// they are products of b's. Throws DegreeOutOfRange unless 0 <= d <= 6g-6.
std::vector<NormalizedMonomial> enumerate_monomials(int genus, int degree);

/// Pairing matrix between degree d and the complementary degree 6g-6-d:
/// entry (i, j) = <rows[i] * cols[j]>[M_g].
struct GramMatrix {
  int genus = 1;
  int degree = 0;
  std::vector<NormalizedMonomial> rows;
  std::vector<NormalizedMonomial> cols;
  std::vector<Rational> entries;  // row-major

  const Rational& at(std::size_t i, std::size_t j) const { return entries[i * cols.size() + j]; }
  Rational& at(std::size_t i, std::size_t j) { return entries[i * cols.size() + j]; }
};

/// Cells are evaluated on `threads` workers (0 = hardware concurrency);
/// the result does not depend on the thread count.
GramMatrix gram(int genus, int degree, SignConvention conv = SignConvention::consistent,
                unsigned threads = 0);

struct RankReport {
  std::size_t rank = 0;
  /// Basis of the left kernel, as combinations of the row monomials.
  std::vector<CohClass> radical;
};

RankReport rank_and_radical(const GramMatrix& gm);

/// Exact rank of a dense rational matrix by fraction-free (Bareiss)
/// elimination after clearing row denominators.
std::size_t exact_rank(const std::vector<Rational>& entries, std::size_t rows, std::size_t cols);

/// The functional <x * -> over enumerate_monomials(g, 6g-6-deg x).
struct Functional {
  std::vector<NormalizedMonomial> basis;
  std::vector<Rational> values;
};

Functional functional(int genus, const NormalizedMonomial& x,
                      SignConvention conv = SignConvention::consistent);

enum class GeneratorKind { f, a, b };

struct Generator {
  GeneratorKind kind = GeneratorKind::f;
  int index = 0;  // b-index when kind == b

  NormalizedMonomial monomial() const;
  std::string name() const;
  /// "f", "a" or "b<k>"; throws SyntaxError otherwise and IndexOutOfRange
  /// for k outside 1..2g.
  static Generator parse(const std::string& token, int genus);
};

struct DualPartner {
  Generator generator;
  CohClass partner;
  Functional functional;
};

/// Complementary-degree class y with <generator * y>[M_g] = 1, supported on
/// the first canonical monomial that pairs nontrivially with the generator.
/// Requires g >= 2 (GenusOutOfRange); throws NoDualFound when the functional
/// vanishes identically.
DualPartner dual_partner(int genus, const Generator& generator,
                         SignConvention conv = SignConvention::consistent);

struct NewsteadViolation {
  NormalizedMonomial partner;
  Rational value;
};

/// Checks that a^g pairs to zero with every complementary monomial.
struct NewsteadReport {
  int genus = 1;
  bool vacuous = false;  // deg a^g > 6g-6
  std::size_t checked = 0;
  std::vector<NewsteadViolation> violations;

  bool passed() const { return violations.empty(); }
};

NewsteadReport newstead_check(int genus, SignConvention conv = SignConvention::consistent);

}  // namespace mgdual
