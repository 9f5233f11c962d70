#include "mgdual/pairing.hpp"

#include "mgdual/combinatorics.hpp"
#include "mgdual/errors.hpp"

#include <algorithm>
#include <string>

namespace mgdual {

namespace {

void check_genus(int genus) {
  if (genus < 1) throw GenusOutOfRange("genus must be >= 1, got " + std::to_string(genus));
}

}  // namespace

Rational closed_form_pairing(int genus, int m, SignConvention conv) {
  check_genus(genus);
  if (m < 0) return Rational(0);
  const long j = static_cast<long>(m) - genus + 1;
  if (j < 0) return Rational(0);
  const bool negative = conv == SignConvention::consistent ? genus % 2 == 1 : genus % 2 == 0;
  Rational value = factorial_quotient(static_cast<unsigned>(m), j) *
                   Rational(pow2(static_cast<unsigned>(2 * genus - 2))) *
                   Rational(pow2(static_cast<unsigned>(j)) - 2) *
                   bernoulli(static_cast<unsigned>(j));
  return negative ? -value : value;
}

Rational pair_gamma_power(const PairingQuery& q, SignConvention conv) {
  check_genus(q.genus);
  if (!q.admissible()) return Rational(0);
  // admissibility forces p <= g - 1, so M_(g-p) is a genuine genus
  const auto p = static_cast<unsigned>(q.p);
  Rational handles(pow2(p) * falling_factorial(q.genus, p));
  return handles * closed_form_pairing(q.genus - q.p, q.m, conv);
}

Rational pair_gamma_subset(int genus, int m, int n, int p, SignConvention conv) {
  check_genus(genus);
  if (p < 0 || p > genus)
    throw IndexOutOfRange("gamma count " + std::to_string(p) + " outside 0.." +
                          std::to_string(genus));
  if (!PairingQuery{genus, m, n, p}.admissible()) return Rational(0);
  // Each gamma_i is dual to the image of M_(g-1) collapsing handle i.
  return closed_form_pairing(genus - p, m, conv);
}

Rational pair_monomial(const NormalizedMonomial& x, int genus, SignConvention conv) {
  check_genus(genus);
  if (x.is_zero() || x.degree() != top_degree(genus)) return Rational(0);

  // A sorted union of pairs {i, i+g} reads i_1..i_q, i_1+g..i_q+g.
  const auto& b = x.b_set;
  if (b.size() % 2 != 0) return Rational(0);
  const std::size_t q = b.size() / 2;
  for (std::size_t k = 0; k < q; ++k)
    if (b[k] > genus || b[k + q] != b[k] + genus) return Rational(0);

  std::vector<int> handles(b.begin(), b.begin() + static_cast<long>(q));
  handles.insert(handles.end(), x.gamma_set.begin(), x.gamma_set.end());
  std::sort(handles.begin(), handles.end());
  if (std::adjacent_find(handles.begin(), handles.end()) != handles.end())
    return Rational(0);

  // Regrouping into gamma-blocks b_i b_(i+g) costs q(q-1)/2 transpositions.
  Rational value = (q * (q - 1) / 2) % 2 ? -x.coeff : x.coeff;

  // gamma^k = 2^k sum over ordered k-tuples; only tuples of distinct free
  // handles survive.
  const unsigned k = x.gamma_full_exp;
  const long free_handles = genus - static_cast<long>(handles.size());
  BigInt tuples = falling_factorial(free_handles, k);
  if (tuples == 0) return Rational(0);
  value *= Rational(pow2(k) * tuples);

  const int p = static_cast<int>(handles.size() + k);
  return value * pair_gamma_subset(genus, static_cast<int>(x.f_exp),
                                   static_cast<int>(x.a_exp), p, conv);
}

std::vector<TableRow> table(int genus, SignConvention conv) {
  check_genus(genus);
  std::vector<TableRow> rows;
  const int budget = 3 * genus - 3;
  for (int p = 0; 3 * p <= budget; ++p)
    for (int n = 0; 3 * p + 2 * n <= budget; ++n) {
      int m = budget - 3 * p - 2 * n;
      rows.push_back({m, n, p, pair_gamma_power({genus, m, n, p}, conv)});
    }
  return rows;
}

}  // namespace mgdual
