#pragma once

#include "mgdual/rational.hpp"

#include <string>
#include <string_view>
#include <vector>

namespace mgdual {

// Generators of H^*(M_g) and their degrees. b_1..b_{2g} are odd, so the
// order of b-factors matters until a monomial is normalized.
inline constexpr int kDegreeF = 2;
inline constexpr int kDegreeA = 4;
inline constexpr int kDegreeB = 3;
inline constexpr int kDegreeGamma = 6;

/// Real dimension of M_g, i.e. the degree of the fundamental class.
inline constexpr int top_degree(int genus) { return 6 * genus - 6; }

/// A product of generators as written: the b-word keeps its order.
struct Monomial {
  Rational coeff{1};
  unsigned f_exp = 0;
  unsigned a_exp = 0;
  std::vector<int> b_word;         // indices in 1..2g
  std::vector<int> gamma_indices;  // gamma_k = b_k b_{k+g}, k in 1..g
  unsigned gamma_full_exp = 0;     // power of gamma = 2 sum_k gamma_k

  int degree() const;
};

/// Sorted form. The b-indices and gamma-indices are strictly increasing and
/// the Koszul sign of sorting lives in coeff. A vanishing product is the
/// canonical zero (coeff 0, every other field empty).
struct NormalizedMonomial {
  Rational coeff{1};
  unsigned f_exp = 0;
  unsigned a_exp = 0;
  std::vector<int> b_set;
  std::vector<int> gamma_set;
  unsigned gamma_full_exp = 0;

  static NormalizedMonomial zero();
  static NormalizedMonomial unit() { return {}; }
  static NormalizedMonomial f_power(unsigned e, unsigned a = 0);
  static NormalizedMonomial b(int index);

  bool is_zero() const { return coeff.is_zero(); }
  int degree() const;
  /// Same monomial with coefficient one (zero stays zero).
  NormalizedMonomial shape() const;

  friend bool operator==(const NormalizedMonomial&, const NormalizedMonomial&) = default;
};

/// Canonical ordering of monomial shapes (coefficients ignored): by number
/// of b-factors, then b-indices lexicographically, then a-exponent
/// descending (f-exponent ascending), then gamma-symbols.
bool canonical_less(const NormalizedMonomial& x, const NormalizedMonomial& y);

/// Sorts the b-word, multiplying coeff by (-1)^inversions. Repeated
/// b-indices or gamma-indices give the zero monomial.
/// Throws GenusOutOfRange for genus < 1, IndexOutOfRange for a b-index
/// outside 1..2g or a gamma-index outside 1..g.
NormalizedMonomial normalize(const Monomial& m, int genus);

NormalizedMonomial multiply(const NormalizedMonomial& x, const NormalizedMonomial& y,
                            int genus);

/// Parses a product such as "f^2 a b1 b3 gamma2 gamma^2". Terms are
/// separated by whitespace or '*'; "b<k>", "gamma<k>" are indexed
/// generators, bare "gamma" is the summed class, and "1" is the unit.
/// Throws SyntaxError (with byte offset) and IndexOutOfRange.
Monomial parse_monomial(std::string_view text, int genus);

/// Text label of the shape, e.g. "f^2 a b1 b3"; "1" for the unit.
std::string label(const NormalizedMonomial& m);
/// Label with the coefficient in front, e.g. "-1/4 f", "-b1", "3".
std::string render(const NormalizedMonomial& m);
std::string render(const Monomial& m);

}  // namespace mgdual
