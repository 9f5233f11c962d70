#pragma once

#include "mgdual/monomial.hpp"

#include <map>
#include <string>

namespace mgdual {

/// Finite rational combination of normalized monomials. Zero coefficients
/// are never stored.
class CohClass {
 public:
  struct ShapeLess {
    bool operator()(const NormalizedMonomial& x, const NormalizedMonomial& y) const {
      return canonical_less(x, y);
    }
  };
  using Terms = std::map<NormalizedMonomial, Rational, ShapeLess>;

  CohClass() = default;
  explicit CohClass(const NormalizedMonomial& m) { add(m); }

  /// Adds m (its coefficient included).
  void add(const NormalizedMonomial& m);
  void add(const NormalizedMonomial& shape, const Rational& coeff);

  CohClass& operator+=(const CohClass& o);
  CohClass& operator*=(const Rational& s);
  friend CohClass operator+(CohClass a, const CohClass& b) { return a += b; }
  friend CohClass operator*(CohClass a, const Rational& s) { return a *= s; }

  bool is_zero() const { return terms_.empty(); }
  std::size_t size() const { return terms_.size(); }
  /// Keys are shapes (coefficient one), iterated in canonical order.
  const Terms& terms() const { return terms_; }
  Rational coefficient(const NormalizedMonomial& shape) const;

  /// e.g. "b3", "-1/4 f", "a^3 - 2 f^2 a^2"; "0" when empty.
  std::string str() const;

  friend bool operator==(const CohClass&, const CohClass&) = default;

 private:
  Terms terms_;
};

}  // namespace mgdual
