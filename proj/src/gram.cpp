#include "mgdual/gram.hpp"

#include "mgdual/errors.hpp"

#include <algorithm>
#include <atomic>
#include <functional>
#include <thread>

namespace mgdual {

namespace {

void check_degree(int genus, int degree) {
  if (genus < 1) throw GenusOutOfRange("genus must be >= 1, got " + std::to_string(genus));
  if (degree < 0 || degree > top_degree(genus))
    throw DegreeOutOfRange("degree " + std::to_string(degree) + " outside 0.." +
                           std::to_string(top_degree(genus)));
}

// k-subsets of {1..n} in lexicographic order
void for_each_subset(int n, int k, const std::function<void(const std::vector<int>&)>& visit) {
  std::vector<int> subset(static_cast<std::size_t>(k));
  std::function<void(int, int)> rec = [&](int pos, int next) {
    if (pos == k) {
      visit(subset);
      return;
    }
    for (int v = next; v <= n - (k - pos) + 1; ++v) {
      subset[static_cast<std::size_t>(pos)] = v;
      rec(pos + 1, v + 1);
    }
  };
  rec(0, 1);
}

}  // namespace

std::vector<NormalizedMonomial> enumerate_monomials(int genus, int degree) {
  check_degree(genus, degree);
  std::vector<NormalizedMonomial> out;
  for (int k = 0; k <= 2 * genus && kDegreeB * k <= degree; ++k) {
    const int even = degree - kDegreeB * k;
    if (even % 2 != 0) continue;
    for_each_subset(2 * genus, k, [&](const std::vector<int>& subset) {
      for (int a = even / kDegreeA; a >= 0; --a) {
        NormalizedMonomial m;
        m.a_exp = static_cast<unsigned>(a);
        m.f_exp = static_cast<unsigned>((even - kDegreeA * a) / kDegreeF);
        m.b_set = subset;
        out.push_back(std::move(m));
      }
    });
  }
  return out;
}

GramMatrix gram(int genus, int degree, SignConvention conv, unsigned threads) {
  check_degree(genus, degree);
  GramMatrix gm;
  gm.genus = genus;
  gm.degree = degree;
  gm.rows = enumerate_monomials(genus, degree);
  gm.cols = enumerate_monomials(genus, top_degree(genus) - degree);
  gm.entries.resize(gm.rows.size() * gm.cols.size());

  auto fill_row = [&](std::size_t i) {
    for (std::size_t j = 0; j < gm.cols.size(); ++j)
      gm.at(i, j) = pair_monomial(multiply(gm.rows[i], gm.cols[j], genus), genus, conv);
  };

  if (threads == 0) threads = std::max(1u, std::thread::hardware_concurrency());
  threads = static_cast<unsigned>(std::min<std::size_t>(threads, gm.rows.size()));
  if (threads <= 1) {
    for (std::size_t i = 0; i < gm.rows.size(); ++i) fill_row(i);
    return gm;
  }
  std::atomic<std::size_t> next{0};
  {
    std::vector<std::jthread> workers;
    for (unsigned t = 0; t < threads; ++t)
      workers.emplace_back([&] {
        for (std::size_t i = next++; i < gm.rows.size(); i = next++) fill_row(i);
      });
  }
  return gm;
}

std::size_t exact_rank(const std::vector<Rational>& entries, std::size_t rows, std::size_t cols) {
  std::vector<std::vector<BigInt>> m(rows, std::vector<BigInt>(cols));
  for (std::size_t i = 0; i < rows; ++i) {
    BigInt scale = 1;
    for (std::size_t j = 0; j < cols; ++j) {
      BigInt den = entries[i * cols + j].denominator();
      mpz_lcm(scale.get_mpz_t(), scale.get_mpz_t(), den.get_mpz_t());
    }
    for (std::size_t j = 0; j < cols; ++j) {
      const Rational& e = entries[i * cols + j];
      m[i][j] = e.numerator() * (scale / e.denominator());
    }
  }

  BigInt prev = 1;
  std::size_t rank = 0;
  for (std::size_t c = 0; c < cols && rank < rows; ++c) {
    std::size_t pivot = rank;
    while (pivot < rows && m[pivot][c] == 0) ++pivot;
    if (pivot == rows) continue;
    std::swap(m[pivot], m[rank]);
    for (std::size_t i = rank + 1; i < rows; ++i) {
      for (std::size_t j = c + 1; j < cols; ++j) {
        BigInt v = m[rank][c] * m[i][j] - m[i][c] * m[rank][j];
        mpz_divexact(m[i][j].get_mpz_t(), v.get_mpz_t(), prev.get_mpz_t());
      }
      m[i][c] = 0;
    }
    prev = m[rank][c];
    ++rank;
  }
  return rank;
}

RankReport rank_and_radical(const GramMatrix& gm) {
  const std::size_t R = gm.rows.size(), C = gm.cols.size();
  RankReport report;
  report.rank = exact_rank(gm.entries, R, C);

  // Left kernel of G = null space of G^T, from the reduced row echelon form
  // of the C x R transpose.
  std::vector<std::vector<Rational>> t(C, std::vector<Rational>(R));
  for (std::size_t i = 0; i < R; ++i)
    for (std::size_t j = 0; j < C; ++j) t[j][i] = gm.at(i, j);

  std::vector<std::size_t> pivot_cols;
  std::size_t r = 0;
  for (std::size_t c = 0; c < R && r < C; ++c) {
    std::size_t p = r;
    while (p < C && t[p][c].is_zero()) ++p;
    if (p == C) continue;
    std::swap(t[p], t[r]);
    const Rational inv = Rational(1) / t[r][c];
    for (std::size_t j = c; j < R; ++j) t[r][j] *= inv;
    for (std::size_t i = 0; i < C; ++i) {
      if (i == r || t[i][c].is_zero()) continue;
      const Rational factor = t[i][c];
      for (std::size_t j = c; j < R; ++j) t[i][j] -= factor * t[r][j];
    }
    pivot_cols.push_back(c);
    ++r;
  }

  std::vector<bool> is_pivot(R, false);
  for (std::size_t c : pivot_cols) is_pivot[c] = true;
  for (std::size_t free = 0; free < R; ++free) {
    if (is_pivot[free]) continue;
    CohClass v;
    for (std::size_t k = 0; k < pivot_cols.size(); ++k)
      v.add(gm.rows[pivot_cols[k]], -t[k][free]);
    v.add(gm.rows[free], Rational(1));
    report.radical.push_back(std::move(v));
  }
  return report;
}

Functional functional(int genus, const NormalizedMonomial& x, SignConvention conv) {
  if (x.is_zero()) throw DegreeOutOfRange("functional of the zero monomial");
  Functional fn;
  fn.basis = enumerate_monomials(genus, top_degree(genus) - x.degree());
  fn.values.reserve(fn.basis.size());
  for (const auto& m : fn.basis) fn.values.push_back(pair_monomial(multiply(x, m, genus), genus, conv));
  return fn;
}

NormalizedMonomial Generator::monomial() const {
  switch (kind) {
    case GeneratorKind::f: return NormalizedMonomial::f_power(1);
    case GeneratorKind::a: return NormalizedMonomial::f_power(0, 1);
    case GeneratorKind::b: return NormalizedMonomial::b(index);
  }
  return NormalizedMonomial::zero();
}

std::string Generator::name() const {
  switch (kind) {
    case GeneratorKind::f: return "f";
    case GeneratorKind::a: return "a";
    case GeneratorKind::b: return "b" + std::to_string(index);
  }
  return "?";
}

Generator Generator::parse(const std::string& token, int genus) {
  if (token == "f") return {GeneratorKind::f, 0};
  if (token == "a") return {GeneratorKind::a, 0};
  Monomial m = parse_monomial(token, genus);
  if (m.b_word.size() != 1 || m.f_exp || m.a_exp || !m.gamma_indices.empty() ||
      m.gamma_full_exp)
    throw SyntaxError("generator must be one of f, a, b<k>", 0);
  return {GeneratorKind::b, m.b_word.front()};
}

DualPartner dual_partner(int genus, const Generator& generator, SignConvention conv) {
  if (genus < 2) throw GenusOutOfRange("dual partners need genus >= 2");
  NormalizedMonomial x = generator.monomial();
  normalize(Monomial{x.coeff, x.f_exp, x.a_exp, x.b_set, {}, 0}, genus);  // index check

  DualPartner out{generator, {}, functional(genus, x, conv)};
  const auto& values = out.functional.values;
  auto hit = std::find_if(values.begin(), values.end(), [](const Rational& v) { return !v.is_zero(); });
  if (hit == values.end())
    throw NoDualFound("every complementary monomial pairs to zero with " + generator.name());
  const auto j = static_cast<std::size_t>(hit - values.begin());
  out.partner.add(out.functional.basis[j], Rational(1) / *hit);
  return out;
}

NewsteadReport newstead_check(int genus, SignConvention conv) {
  if (genus < 1) throw GenusOutOfRange("genus must be >= 1, got " + std::to_string(genus));
  NewsteadReport report;
  report.genus = genus;
  NormalizedMonomial power = NormalizedMonomial::f_power(0, static_cast<unsigned>(genus));
  if (power.degree() > top_degree(genus)) {
    report.vacuous = true;
    return report;
  }
  for (const auto& z : enumerate_monomials(genus, top_degree(genus) - power.degree())) {
    Rational v = pair_monomial(multiply(power, z, genus), genus, conv);
    ++report.checked;
    if (!v.is_zero()) report.violations.push_back({z, v});
  }
  return report;
}

}  // namespace mgdual
