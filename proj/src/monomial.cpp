#include "mgdual/monomial.hpp"

#include "mgdual/errors.hpp"

#include <algorithm>
#include <cctype>
#include <charconv>
#include <tuple>

namespace mgdual {

int Monomial::degree() const {
  return kDegreeF * static_cast<int>(f_exp) + kDegreeA * static_cast<int>(a_exp) +
         kDegreeB * static_cast<int>(b_word.size()) +
         kDegreeGamma * static_cast<int>(gamma_indices.size() + gamma_full_exp);
}

NormalizedMonomial NormalizedMonomial::zero() {
  NormalizedMonomial z;
  z.coeff = Rational(0);
  return z;
}

NormalizedMonomial NormalizedMonomial::f_power(unsigned e, unsigned a) {
  NormalizedMonomial m;
  m.f_exp = e;
  m.a_exp = a;
  return m;
}

NormalizedMonomial NormalizedMonomial::b(int index) {
  NormalizedMonomial m;
  m.b_set = {index};
  return m;
}

int NormalizedMonomial::degree() const {
  return kDegreeF * static_cast<int>(f_exp) + kDegreeA * static_cast<int>(a_exp) +
         kDegreeB * static_cast<int>(b_set.size()) +
         kDegreeGamma * static_cast<int>(gamma_set.size() + gamma_full_exp);
}

NormalizedMonomial NormalizedMonomial::shape() const {
  NormalizedMonomial s = *this;
  if (!s.is_zero()) s.coeff = Rational(1);
  return s;
}

bool canonical_less(const NormalizedMonomial& x, const NormalizedMonomial& y) {
  auto key = [](const NormalizedMonomial& m) {
    return std::tie(m.b_set, m.f_exp, m.gamma_set, m.gamma_full_exp);
  };
  if (x.b_set.size() != y.b_set.size()) return x.b_set.size() < y.b_set.size();
  if (x.b_set != y.b_set) return x.b_set < y.b_set;
  if (x.a_exp != y.a_exp) return x.a_exp > y.a_exp;
  return key(x) < key(y);
}

namespace {

void check_genus(int genus) {
  if (genus < 1) throw GenusOutOfRange("genus must be >= 1, got " + std::to_string(genus));
}

void check_b(int index, int genus) {
  if (index < 1 || index > 2 * genus)
    throw IndexOutOfRange("b-index " + std::to_string(index) + " outside 1.." +
                          std::to_string(2 * genus));
}

void check_gamma(int index, int genus) {
  if (index < 1 || index > genus)
    throw IndexOutOfRange("gamma-index " + std::to_string(index) + " outside 1.." +
                          std::to_string(genus));
}

}  // namespace

NormalizedMonomial normalize(const Monomial& m, int genus) {
  check_genus(genus);
  for (int b : m.b_word) check_b(b, genus);
  for (int k : m.gamma_indices) check_gamma(k, genus);

  if (m.coeff.is_zero()) return NormalizedMonomial::zero();

  std::vector<int> word = m.b_word;
  // insertion sort; every adjacent swap of two odd classes flips the sign
  std::size_t inversions = 0;
  for (std::size_t i = 1; i < word.size(); ++i) {
    for (std::size_t j = i; j > 0 && word[j - 1] > word[j]; --j) {
      std::swap(word[j - 1], word[j]);
      ++inversions;
    }
  }
  if (std::adjacent_find(word.begin(), word.end()) != word.end())
    return NormalizedMonomial::zero();

  std::vector<int> gammas = m.gamma_indices;
  std::sort(gammas.begin(), gammas.end());
  if (std::adjacent_find(gammas.begin(), gammas.end()) != gammas.end())
    return NormalizedMonomial::zero();

  NormalizedMonomial out;
  out.coeff = inversions % 2 ? -m.coeff : m.coeff;
  out.f_exp = m.f_exp;
  out.a_exp = m.a_exp;
  out.b_set = std::move(word);
  out.gamma_set = std::move(gammas);
  out.gamma_full_exp = m.gamma_full_exp;
  return out;
}

NormalizedMonomial multiply(const NormalizedMonomial& x, const NormalizedMonomial& y,
                            int genus) {
  if (x.is_zero() || y.is_zero()) {
    check_genus(genus);
    return NormalizedMonomial::zero();
  }
  Monomial product;
  product.coeff = x.coeff * y.coeff;
  product.f_exp = x.f_exp + y.f_exp;
  product.a_exp = x.a_exp + y.a_exp;
  product.b_word = x.b_set;
  product.b_word.insert(product.b_word.end(), y.b_set.begin(), y.b_set.end());
  product.gamma_indices = x.gamma_set;
  product.gamma_indices.insert(product.gamma_indices.end(), y.gamma_set.begin(),
                               y.gamma_set.end());
  product.gamma_full_exp = x.gamma_full_exp + y.gamma_full_exp;
  return normalize(product, genus);
}

namespace {

class MonomialParser {
 public:
  MonomialParser(std::string_view text, int genus) : text_(text), genus_(genus) {}

  Monomial parse() {
    Monomial m;
    skip_separators();
    if (at_end()) throw SyntaxError("empty monomial", pos_);
    while (!at_end()) {
      std::size_t before = pos_;
      term(m);
      if (!at_end() && !is_separator(text_[pos_]))
        throw SyntaxError("expected separator", pos_);
      skip_separators();
      if (pos_ == before) throw SyntaxError("unexpected character", pos_);
    }
    return m;
  }

 private:
  static bool is_separator(char c) {
    return c == '*' || std::isspace(static_cast<unsigned char>(c));
  }
  bool at_end() const { return pos_ >= text_.size(); }
  bool starts_with(std::string_view s) const { return text_.substr(pos_).starts_with(s); }
  bool digit_next() const {
    return !at_end() && std::isdigit(static_cast<unsigned char>(text_[pos_]));
  }

  void skip_separators() {
    while (!at_end() && is_separator(text_[pos_])) ++pos_;
  }

  unsigned uint() {
    std::size_t start = pos_;
    unsigned value = 0;
    auto [ptr, ec] = std::from_chars(text_.data() + pos_, text_.data() + text_.size(), value);
    if (ec == std::errc::result_out_of_range) throw SyntaxError("integer too large", start);
    if (ec != std::errc()) throw SyntaxError("expected unsigned integer", start);
    pos_ = static_cast<std::size_t>(ptr - text_.data());
    return value;
  }

  unsigned exponent() {
    if (at_end() || text_[pos_] != '^') return 1;
    ++pos_;
    return uint();
  }

  int index(const char* what) {
    std::size_t start = pos_;
    unsigned k = uint();
    if (k > 100000) throw SyntaxError(std::string(what) + " index too large", start);
    return static_cast<int>(k);
  }

  void term(Monomial& m) {
    std::size_t start = pos_;
    if (starts_with("gamma")) {
      pos_ += 5;
      if (digit_next()) {
        int k = index("gamma");
        check_gamma(k, genus_);
        m.gamma_indices.insert(m.gamma_indices.end(), exponent(), k);
      } else {
        m.gamma_full_exp += exponent();
      }
    } else if (starts_with("b")) {
      ++pos_;
      if (!digit_next()) throw SyntaxError("expected index after 'b'", pos_);
      int k = index("b");
      check_b(k, genus_);
      m.b_word.insert(m.b_word.end(), exponent(), k);
    } else if (starts_with("f")) {
      ++pos_;
      m.f_exp += exponent();
    } else if (starts_with("a")) {
      ++pos_;
      m.a_exp += exponent();
    } else if (starts_with("1")) {
      ++pos_;
      exponent();
    } else {
      throw SyntaxError("unknown generator", start);
    }
  }

  std::string_view text_;
  int genus_;
  std::size_t pos_ = 0;
};

void append_power(std::string& out, std::string_view base, unsigned e) {
  if (e == 0) return;
  if (!out.empty()) out += ' ';
  out += base;
  if (e > 1) out += "^" + std::to_string(e);
}

std::string with_coefficient(const Rational& coeff, const std::string& body) {
  if (body == "1") return coeff.str();
  if (coeff == Rational(1)) return body;
  if (coeff == Rational(-1)) return "-" + body;
  return coeff.str() + " " + body;
}

}  // namespace

Monomial parse_monomial(std::string_view text, int genus) {
  check_genus(genus);
  return MonomialParser(text, genus).parse();
}

std::string label(const NormalizedMonomial& m) {
  if (m.is_zero()) return "0";
  std::string out;
  append_power(out, "f", m.f_exp);
  append_power(out, "a", m.a_exp);
  for (int b : m.b_set) append_power(out, "b" + std::to_string(b), 1);
  for (int k : m.gamma_set) append_power(out, "gamma" + std::to_string(k), 1);
  append_power(out, "gamma", m.gamma_full_exp);
  return out.empty() ? "1" : out;
}

std::string render(const NormalizedMonomial& m) {
  if (m.is_zero()) return "0";
  return with_coefficient(m.coeff, label(m));
}

std::string render(const Monomial& m) {
  if (m.coeff.is_zero()) return "0";
  std::string out;
  append_power(out, "f", m.f_exp);
  append_power(out, "a", m.a_exp);
  for (int b : m.b_word) append_power(out, "b" + std::to_string(b), 1);
  for (int k : m.gamma_indices) append_power(out, "gamma" + std::to_string(k), 1);
  append_power(out, "gamma", m.gamma_full_exp);
  return with_coefficient(m.coeff, out.empty() ? "1" : out);
}

}  // namespace mgdual
