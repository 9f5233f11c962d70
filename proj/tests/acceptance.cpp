// Acceptance suite: one PASS/FAIL line per criterion, nonzero exit on any
// failure. All comparisons of pairings are exact.

#include "mgdual/combinatorics.hpp"
#include "mgdual/gram.hpp"
#include "mgdual/pairing.hpp"
#include "mgdual/rep_variety.hpp"

#include "oracles.hpp"

#include <algorithm>
#include <chrono>
#include <cstdio>
#include <functional>
#include <random>
#include <sstream>
#include <string>

using namespace mgdual;

namespace {

struct Outcome {
  bool ok = true;
  std::ostringstream detail;
  std::size_t checks = 0;

  void expect(bool cond, const std::string& what) {
    ++checks;
    if (!cond && ok) {
      ok = false;
      detail << what;
    }
  }
};

int failures = 0;

void criterion(const char* id, const char* title, double budget_seconds,
               const std::function<void(Outcome&)>& body) {
  Outcome out;
  const auto start = std::chrono::steady_clock::now();
  body(out);
  const double seconds =
      std::chrono::duration<double>(std::chrono::steady_clock::now() - start).count();
  if (seconds > budget_seconds && out.ok) {
    out.ok = false;
    out.detail << "took " << seconds << " s, budget " << budget_seconds << " s";
  }
  if (!out.ok) ++failures;
  std::printf("[%s] %s %s (%zu checks, %.3f s)%s%s\n", out.ok ? "PASS" : "FAIL", id, title,
              out.checks, seconds, out.ok ? "" : ": ", out.ok ? "" : out.detail.str().c_str());
}

template <typename F>
void for_admissible(int g, F&& visit) {
  for (int p = 0; 3 * p <= 3 * g - 3; ++p)
    for (int n = 0; 3 * p + 2 * n <= 3 * g - 3; ++n) visit(3 * g - 3 - 3 * p - 2 * n, n, p);
}

std::string triple(int g, int m, int n, int p) {
  std::ostringstream s;
  s << "g=" << g << " (m,n,p)=(" << m << "," << n << "," << p << ")";
  return s.str();
}

// f/a filler that lifts a b-word to top degree, if one exists
bool filler(int g, std::size_t letters, int& m, int& n) {
  const int rest = top_degree(g) - 3 * static_cast<int>(letters);
  if (rest < 0 || rest % 2) return false;
  n = rest / 4;
  m = (rest - 4 * n) / 2;
  return true;
}

void check_word(Outcome& out, int g, std::vector<int> word, int m, int n) {
  Monomial mono;
  mono.f_exp = static_cast<unsigned>(m);
  mono.a_exp = static_cast<unsigned>(n);
  mono.b_word = word;
  const Rational got = pair_monomial(normalize(mono, g), g);
  std::ostringstream what;
  what << "g=" << g << " word";
  for (int b : word) what << ' ' << b;
  if (!oracle::pair_form(word, g)) out.expect(got.is_zero(), what.str() + " should vanish");
  out.expect(got == oracle::pair_word(g, m, n, word), what.str() + " disagrees with sign oracle");
}

}  // namespace

int main() {
  criterion("AC1", "anchor values gamma[M_2]=4, gamma_j[M_2]=1, [M_1]=1", 0.5, [](Outcome& out) {
    out.expect(pair_gamma_power({2, 0, 0, 1}) == Rational(4), "gamma[M_2] != 4");
    out.expect(pair_gamma_subset(2, 0, 0, 1) == Rational(1), "gamma_j[M_2] != 1");
    out.expect(pair_gamma_power({1, 0, 0, 0}) == Rational(1), "[M_1] != 1");
  });

  criterion("AC2", "recursion equals closed form for 2 <= g <= 8", 1.0, [](Outcome& out) {
    for (int g = 2; g <= 8; ++g)
      for_admissible(g, [&](int m, int n, int p) {
        if (p < 1) return;
        out.expect(pair_gamma_power({g, m, n, p}) ==
                       Rational(2 * g) * pair_gamma_power({g - 1, m, n, p - 1}),
                   triple(g, m, n, p));
      });
  });

  criterion("AC3", "gamma^p brute-force expansion matches for g <= 5", 5.0, [](Outcome& out) {
    for (int g = 1; g <= 5; ++g)
      for_admissible(g, [&](int m, int n, int p) {
        const Rational full = pair_gamma_power({g, m, n, p});
        out.expect(oracle::expanded_gamma_power(g, m, n, p) == full, triple(g, m, n, p));
        const Rational ordered(pow2(static_cast<unsigned>(p)) * factorial(static_cast<unsigned>(p)) *
                               binomial(static_cast<unsigned>(g), p));
        out.expect(full == ordered * pair_gamma_subset(g, m, n, p),
                   "2^p p! C(g,p) normalization " + triple(g, m, n, p));
      });
  });

  criterion("AC4", "pair-vanishing and Koszul signs vs permutation oracle", 5.0, [](Outcome& out) {
    // every repetition-free word for g <= 3
    for (int g = 1; g <= 3; ++g) {
      const int letters = 2 * g;
      for (unsigned mask = 0; mask < (1u << letters); ++mask) {
        std::vector<int> word;
        for (int i = 0; i < letters; ++i)
          if (mask & (1u << i)) word.push_back(i + 1);
        int m = 0, n = 0;
        const bool top = filler(g, word.size(), m, n);
        do {
          if (top)
            check_word(out, g, word, m, n);
          else
            check_word(out, g, word, 0, 0);  // off-degree: must vanish
        } while (std::next_permutation(word.begin(), word.end()));
      }
    }
    // 10^4 random words, g <= 6, half of them built from whole pairs
    std::mt19937_64 rng(20200728);
    for (int trial = 0; trial < 10000; ++trial) {
      const int g = 1 + trial % 6;
      std::uniform_int_distribution<int> letter(1, 2 * g), handle(1, g), len(0, 2 * g);
      std::vector<int> word;
      if (trial % 2) {
        std::vector<int> handles(static_cast<std::size_t>(g));
        for (int i = 0; i < g; ++i) handles[static_cast<std::size_t>(i)] = i + 1;
        std::shuffle(handles.begin(), handles.end(), rng);
        handles.resize(static_cast<std::size_t>(std::uniform_int_distribution<int>(0, g)(rng)));
        for (int h : handles) {
          word.push_back(h);
          word.push_back(h + g);
        }
        if (trial % 6 == 1 && !word.empty()) word.back() = letter(rng);  // sometimes break a pair
      } else {
        for (int i = len(rng); i > 0; --i) word.push_back(letter(rng));
      }
      std::shuffle(word.begin(), word.end(), rng);
      int m = 0, n = 0;
      if (!filler(g, word.size(), m, n)) m = n = 0;
      check_word(out, g, word, m, n);
    }
  });

  criterion("AC5", "a^g pairs to zero for 3 <= g <= 8", 1.0, [](Outcome& out) {
    for (int g = 3; g <= 8; ++g) {
      NewsteadReport r = newstead_check(g);
      out.expect(!r.vacuous && r.checked > 0, "g=" + std::to_string(g) + " checked nothing");
      out.expect(r.passed(), "g=" + std::to_string(g) + " has violations");
    }
  });

  criterion("AC6", "Gram graded transpose, rank of gram(2,3), dual partners", 10.0, [](Outcome& out) {
    for (int g = 1; g <= 4; ++g)
      for (int d = 0; d <= top_degree(g); ++d) {
        GramMatrix x = gram(g, d), y = gram(g, top_degree(g) - d);
        out.expect(x.rows == y.cols && x.cols == y.rows, "basis mismatch");
        for (std::size_t i = 0; i < x.rows.size(); ++i)
          for (std::size_t j = 0; j < x.cols.size(); ++j) {
            const std::size_t st = x.rows[i].b_set.size() * x.cols[j].b_set.size();
            const Rational& back = y.at(j, i);
            out.expect(x.at(i, j) == (st % 2 ? -back : back),
                       "g=" + std::to_string(g) + " d=" + std::to_string(d) + " at " +
                           label(x.rows[i]) + " x " + label(x.cols[j]));
          }
      }
    out.expect(rank_and_radical(gram(2, 3)).rank == 4, "rank gram(2,3) != 4");
    for (int g = 2; g <= 4; ++g) {
      std::vector<Generator> gens = {{GeneratorKind::f, 0}, {GeneratorKind::a, 0}};
      for (int k = 1; k <= 2 * g; ++k) gens.push_back({GeneratorKind::b, k});
      for (const auto& gen : gens) {
        DualPartner d = dual_partner(g, gen);
        Rational total;
        for (const auto& [shape, c] : d.partner.terms())
          total += c * pair_monomial(multiply(gen.monomial(), shape, g), g);
        out.expect(total == Rational(1), "g=" + std::to_string(g) + " " + gen.name());
      }
    }
  });

  criterion("AC7", "sign regression: literal gives -1 on M_1, consistent gives +1", 0.5,
            [](Outcome& out) {
              out.expect(closed_form_pairing(1, 0, SignConvention::literal) == Rational(-1),
                         "literal mode");
              out.expect(closed_form_pairing(1, 0, SignConvention::consistent) == Rational(1),
                         "consistent mode");
              out.expect(pair_gamma_power({2, 0, 0, 1}, SignConvention::literal) != Rational(4),
                         "literal mode reproduces gamma[M_2] = 4");
            });

  criterion("AC8", "rep variety: regular value, free action, dimensions", 30.0, [](Outcome& out) {
    using namespace mgdual::rep;
    for (int g = 1; g <= 10; ++g)
      out.expect(mu_residual(base_point(g)) < 1e-14, "mu(base_point) g=" + std::to_string(g));
    const double steps[] = {1e-4, 1e-5, 1e-6};
    for (int g : {1, 2, 3, 5}) {
      std::vector<SU2Tuple> points{base_point(g)};
      for (std::uint64_t s = 0; s < 100; ++s) points.push_back(random_fiber_point(g, s));
      for (const auto& t : points) {
        out.expect(mu_residual(t) < 1e-12, "fiber residual g=" + std::to_string(g));
        for (double h : steps)
          out.expect(jacobian_rank(t, h) == 3, "jacobian rank g=" + std::to_string(g));
        out.expect(stabilizer_rank(t) == 3, "stabilizer rank g=" + std::to_string(g));
      }
      out.expect(dimension_report(g) == Dimensions{6 * g, 6 * g - 3, 6 * g - 6},
                 "dimensions g=" + std::to_string(g));
    }
  });

  std::printf("%s: %d criterion(s) failed\n", failures ? "FAILED" : "OK", failures);
  return failures ? 1 : 0;
}
