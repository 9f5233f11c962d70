#include "mgdual/coh_class.hpp"

namespace mgdual {

void CohClass::add(const NormalizedMonomial& m) {
  if (m.is_zero()) return;
  add(m.shape(), m.coeff);
}

void CohClass::add(const NormalizedMonomial& shape, const Rational& coeff) {
  if (coeff.is_zero() || shape.is_zero()) return;
  NormalizedMonomial key = shape.shape();
  Rational c = coeff * shape.coeff;
  auto [it, inserted] = terms_.try_emplace(key, c);
  if (!inserted) {
    it->second += c;
    if (it->second.is_zero()) terms_.erase(it);
  }
}

CohClass& CohClass::operator+=(const CohClass& o) {
  for (const auto& [shape, c] : o.terms_) add(shape, c);
  return *this;
}

CohClass& CohClass::operator*=(const Rational& s) {
  if (s.is_zero()) {
    terms_.clear();
    return *this;
  }
  for (auto& [shape, c] : terms_) c *= s;
  return *this;
}

Rational CohClass::coefficient(const NormalizedMonomial& shape) const {
  auto it = terms_.find(shape.shape());
  return it == terms_.end() ? Rational(0) : it->second;
}

std::string CohClass::str() const {
  if (terms_.empty()) return "0";
  std::string out;
  for (const auto& [shape, c] : terms_) {
    NormalizedMonomial term = shape;
    if (out.empty()) {
      term.coeff = c;
      out = render(term);
    } else {
      term.coeff = c.sign() < 0 ? -c : c;
      out += c.sign() < 0 ? " - " : " + ";
      out += render(term);
    }
  }
  return out;
}

}  // namespace mgdual
