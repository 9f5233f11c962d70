#include "mgdual/errors.hpp"
#include "mgdual/gram.hpp"

#include <doctest.h>

#include <random>

using namespace mgdual;

namespace {

std::vector<std::string> labels(const std::vector<NormalizedMonomial>& ms) {
  std::vector<std::string> out;
  for (const auto& m : ms) out.push_back(label(m));
  return out;
}

GramMatrix from_rows(std::vector<std::vector<long>> rows) {
  GramMatrix gm;
  gm.rows.resize(rows.size());
  gm.cols.resize(rows.empty() ? 0 : rows[0].size());
  for (std::size_t i = 0; i < rows.size(); ++i) gm.rows[i] = NormalizedMonomial::b(static_cast<int>(i + 1));
  for (const auto& r : rows)
    for (long v : r) gm.entries.push_back(Rational(v));
  return gm;
}

}  // namespace

TEST_CASE("enumerate_monomials") {
  CHECK(labels(enumerate_monomials(2, 4)) == std::vector<std::string>{"a", "f^2"});
  CHECK(labels(enumerate_monomials(2, 3)) == std::vector<std::string>{"b1", "b2", "b3", "b4"});
  CHECK(enumerate_monomials(2, 1).empty());
  CHECK(labels(enumerate_monomials(2, 0)) == std::vector<std::string>{"1"});
  CHECK(labels(enumerate_monomials(2, 6)) ==
        std::vector<std::string>{"f a", "f^3", "b1 b2", "b1 b3", "b1 b4", "b2 b3", "b2 b4", "b3 b4"});
  CHECK_THROWS_AS(enumerate_monomials(2, 7), DegreeOutOfRange);
  CHECK_THROWS_AS(enumerate_monomials(2, -1), DegreeOutOfRange);

  for (int g = 1; g <= 4; ++g)
    for (int d = 0; d <= top_degree(g); ++d) {
      auto ms = enumerate_monomials(g, d);
      for (std::size_t i = 0; i < ms.size(); ++i) {
        CHECK(ms[i].degree() == d);
        if (i) CHECK(canonical_less(ms[i - 1], ms[i]));
      }
    }
}

TEST_CASE("gram(2, 3) is the symplectic b-pairing") {
  GramMatrix gm = gram(2, 3);
  REQUIRE(gm.rows.size() == 4);
  REQUIRE(gm.cols.size() == 4);
  for (std::size_t i = 0; i < 4; ++i)
    for (std::size_t j = 0; j < 4; ++j) {
      long expected = 0;
      if ((i == 0 && j == 2) || (i == 1 && j == 3)) expected = 1;
      if ((i == 2 && j == 0) || (i == 3 && j == 1)) expected = -1;
      CHECK(gm.at(i, j) == Rational(expected));
    }
  RankReport rr = rank_and_radical(gm);
  CHECK(rr.rank == 4);
  CHECK(rr.radical.empty());
}

TEST_CASE("gram(2, 0) and gram(1, 0)") {
  GramMatrix gm = gram(2, 0);
  REQUIRE(gm.rows.size() == 1);
  const std::vector<long> expected = {-4, 4, 0, 1, 0, 0, 1, 0};  // f a, f^3, b-pairs
  REQUIRE(gm.cols.size() == expected.size());
  for (std::size_t j = 0; j < expected.size(); ++j) CHECK(gm.at(0, j) == Rational(expected[j]));

  GramMatrix point = gram(1, 0);
  REQUIRE(point.entries.size() == 1);
  CHECK(point.entries[0] == Rational(1));
}

TEST_CASE("rank_and_radical") {
  GramMatrix zero = from_rows({{0, 0}, {0, 0}, {0, 0}});
  RankReport rz = rank_and_radical(zero);
  CHECK(rz.rank == 0);
  REQUIRE(rz.radical.size() == 3);
  for (std::size_t i = 0; i < 3; ++i) CHECK(rz.radical[i] == CohClass(zero.rows[i]));

  GramMatrix dependent = from_rows({{1, 2}, {2, 4}, {0, 1}});
  RankReport rd = rank_and_radical(dependent);
  CHECK(rd.rank == 2);
  REQUIRE(rd.radical.size() == 1);
  CHECK(rd.radical[0].coefficient(dependent.rows[0]) == Rational(-2));
  CHECK(rd.radical[0].coefficient(dependent.rows[1]) == Rational(1));

  // a^3 on M_3 pairs to zero with the only degree-0 monomial
  GramMatrix g3 = gram(3, 12);
  RankReport r3 = rank_and_radical(g3);
  bool found = false;
  for (const auto& v : r3.radical) found |= v == CohClass(NormalizedMonomial::f_power(0, 3));
  CHECK(found);
  CHECK(r3.rank == 1);
}

TEST_CASE("property: radical vectors annihilate the matrix and complete the rank") {
  std::mt19937_64 rng(5);
  std::uniform_int_distribution<long> small(-3, 3);
  std::uniform_int_distribution<int> dim(1, 7);
  for (int trial = 0; trial < 200; ++trial) {
    const std::size_t R = static_cast<std::size_t>(dim(rng)), C = static_cast<std::size_t>(dim(rng));
    const std::size_t inner = static_cast<std::size_t>(dim(rng)) % 4;
    // product of R x inner and inner x C integer matrices: rank <= inner
    std::vector<std::vector<long>> u(R, std::vector<long>(inner)), w(inner, std::vector<long>(C));
    for (auto& r : u) for (auto& v : r) v = small(rng);
    for (auto& r : w) for (auto& v : r) v = small(rng);
    std::vector<std::vector<long>> rows(R, std::vector<long>(C, 0));
    for (std::size_t i = 0; i < R; ++i)
      for (std::size_t j = 0; j < C; ++j)
        for (std::size_t k = 0; k < inner; ++k) rows[i][j] += u[i][k] * w[k][j];
    GramMatrix gm = from_rows(rows);
    RankReport rr = rank_and_radical(gm);
    CHECK(rr.rank <= inner);
    CHECK(rr.rank + rr.radical.size() == R);
    for (const auto& v : rr.radical)
      for (std::size_t j = 0; j < C; ++j) {
        Rational s;
        for (std::size_t i = 0; i < R; ++i) s += v.coefficient(gm.rows[i]) * gm.at(i, j);
        CHECK(s.is_zero());
      }
  }
}

TEST_CASE("graded transpose between complementary degrees") {
  for (int g = 1; g <= 3; ++g)
    for (int d = 0; d <= top_degree(g); ++d) {
      GramMatrix x = gram(g, d), y = gram(g, top_degree(g) - d);
      REQUIRE(x.rows.size() == y.cols.size());
      for (std::size_t i = 0; i < x.rows.size(); ++i)
        for (std::size_t j = 0; j < x.cols.size(); ++j) {
          const std::size_t s = x.rows[i].b_set.size(), t = x.cols[j].b_set.size();
          const Rational& back = y.at(j, i);
          CHECK(x.at(i, j) == ((s * t) % 2 ? -back : back));
        }
    }
}

TEST_CASE("gram output does not depend on the thread count") {
  GramMatrix one = gram(4, 9, SignConvention::consistent, 1);
  GramMatrix many = gram(4, 9, SignConvention::consistent, 8);
  CHECK(one.entries == many.entries);
  CHECK(one.rows == many.rows);
}

TEST_CASE("functional") {
  Functional f = functional(2, NormalizedMonomial::f_power(1));
  CHECK(labels(f.basis) == std::vector<std::string>{"a", "f^2"});
  CHECK(f.values == std::vector<Rational>{Rational(-4), Rational(4)});

  Functional b = functional(2, NormalizedMonomial::b(1));
  CHECK(b.values == std::vector<Rational>{0, 0, 1, 0});

  Functional unit = functional(2, NormalizedMonomial::unit());
  GramMatrix g0 = gram(2, 0);
  CHECK(unit.values == g0.entries);
}

TEST_CASE("dual partners") {
  DualPartner b1 = dual_partner(2, {GeneratorKind::b, 1});
  CHECK(b1.partner.str() == "b3");
  DualPartner a = dual_partner(2, {GeneratorKind::a, 0});
  CHECK(a.partner.str() == "-1/4 f");
  DualPartner f = dual_partner(2, {GeneratorKind::f, 0});
  CHECK(f.partner.str() == "-1/4 a");
  CHECK(dual_partner(2, {GeneratorKind::b, 3}).partner.str() == "-b1");

  for (int g = 2; g <= 4; ++g) {
    std::vector<Generator> gens = {{GeneratorKind::f, 0}, {GeneratorKind::a, 0}};
    for (int k = 1; k <= 2 * g; ++k) gens.push_back({GeneratorKind::b, k});
    for (const auto& gen : gens) {
      DualPartner d = dual_partner(g, gen);
      Rational total;
      for (const auto& [shape, c] : d.partner.terms())
        total += c * pair_monomial(multiply(gen.monomial(), shape, g), g);
      CHECK_MESSAGE(total == Rational(1), "g=" << g << " gen=" << gen.name());
    }
  }

  CHECK_THROWS_AS(dual_partner(1, {GeneratorKind::f, 0}), GenusOutOfRange);
  CHECK_THROWS_AS(dual_partner(2, {GeneratorKind::b, 9}), IndexOutOfRange);
}

TEST_CASE("Generator::parse") {
  CHECK(Generator::parse("f", 2).kind == GeneratorKind::f);
  CHECK(Generator::parse("a", 2).kind == GeneratorKind::a);
  Generator b = Generator::parse("b4", 2);
  CHECK(b.kind == GeneratorKind::b);
  CHECK(b.index == 4);
  CHECK_THROWS_AS(Generator::parse("b9", 2), IndexOutOfRange);
  CHECK_THROWS_AS(Generator::parse("f^2", 2), SyntaxError);
  CHECK_THROWS_AS(Generator::parse("q", 2), SyntaxError);
}

TEST_CASE("newstead_check") {
  NewsteadReport two = newstead_check(2);
  CHECK(two.vacuous);
  CHECK(two.passed());

  NewsteadReport three = newstead_check(3);
  CHECK_FALSE(three.vacuous);
  CHECK(three.checked == 1);
  CHECK(three.passed());

  NewsteadReport four = newstead_check(4);
  CHECK(four.checked == enumerate_monomials(4, 2).size());
  CHECK(four.passed());

  // a^(g-1) is not in the radical: the check is not trivially true
  NormalizedMonomial lower = NormalizedMonomial::f_power(0, 3);
  Functional fn = functional(4, lower);
  bool any = false;
  for (const auto& v : fn.values) any |= !v.is_zero();
  CHECK(any);
}

TEST_CASE("rows containing a^g lie in the radical for 3 <= g <= 8") {
  for (int g = 3; g <= 8; ++g)
    for (int d = 4 * g; d <= top_degree(g); ++d)
      for (const auto& row : enumerate_monomials(g, d)) {
        if (static_cast<int>(row.a_exp) < g) continue;
        for (const auto& v : functional(g, row).values) CHECK(v.is_zero());
      }
}
