#pragma once

#include "mgdual/monomial.hpp"
#include "mgdual/rational.hpp"

#include <vector>

namespace mgdual {

/// Global sign of the closed-form f^m a^n pairing. `consistent` uses
/// (-1)^g, which gives the one-point space M_1 the value +1; `literal`
/// uses (-1)^(g-1) as the formula is usually printed.
enum class SignConvention { consistent, literal };

/// f^m a^n gamma^p against [M_g]; m is the power of the degree-2 class f
/// and n the power of the degree-4 class a.
struct PairingQuery {
  int genus = 1;
  int m = 0;
  int n = 0;
  int p = 0;

  /// Degree balance 2m + 4n + 6p = 6g - 6.
  bool admissible() const { return m >= 0 && n >= 0 && p >= 0 && m + 2 * n + 3 * p == 3 * genus - 3; }
};

/// f^m a^n [M_g] for the n fixed by degree:
///   sign(g) * m!/(m-g+1)! * 2^(2g-2) * (2^(m-g+1) - 2) * B_(m-g+1),
/// which vanishes when m - g + 1 < 0. Throws GenusOutOfRange for g < 1.
Rational closed_form_pairing(int genus, int m, SignConvention conv = SignConvention::consistent);

/// f^m a^n gamma^p [M_g]. Each power of gamma trades one handle for a
/// factor 2g, so the value is 2^p g!/(g-p)! times the closed form on
/// M_(g-p). Zero when the query is not admissible.
Rational pair_gamma_power(const PairingQuery& q, SignConvention conv = SignConvention::consistent);

/// f^m a^n gamma_(i_1)...gamma_(i_p) [M_g] for distinct indices; the value
/// does not depend on which indices are chosen. Requires 0 <= p <= g.
Rational pair_gamma_subset(int genus, int m, int n, int p,
                           SignConvention conv = SignConvention::consistent);

/// Evaluates a normalized monomial on [M_g]. Nonzero only in top degree
/// and only when the b-indices split into pairs {i, i+g}.
Rational pair_monomial(const NormalizedMonomial& x, int genus,
                       SignConvention conv = SignConvention::consistent);

struct TableRow {
  int m = 0;
  int n = 0;
  int p = 0;
  Rational value;
};

/// All admissible (m, n, p) for the genus, ordered by (p, n, m).
std::vector<TableRow> table(int genus, SignConvention conv = SignConvention::consistent);

}  // namespace mgdual
