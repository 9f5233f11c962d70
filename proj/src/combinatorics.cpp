#include "mgdual/combinatorics.hpp"

#include <mutex>
#include <shared_mutex>
#include <vector>

namespace mgdual {

namespace {

struct BernoulliTable {
  std::shared_mutex mutex;
  std::vector<Rational> values{Rational(1)};
};

BernoulliTable& bernoulli_table() {
  static BernoulliTable table;
  return table;
}

}  // namespace

Rational bernoulli(unsigned k) {
  auto& table = bernoulli_table();
  {
    std::shared_lock lock(table.mutex);
    if (k < table.values.size()) return table.values[k];
  }
  std::unique_lock lock(table.mutex);
  auto& b = table.values;
  for (unsigned m = static_cast<unsigned>(b.size()); m <= k; ++m) {
    // B_m = -(1/(m+1)) sum_{j<m} C(m+1, j) B_j
    Rational sum;
    for (unsigned j = 0; j < m; ++j) sum += Rational(binomial(m + 1, j)) * b[j];
    b.push_back(-sum / Rational(m + 1));
  }
  return b[k];
}

BigInt factorial(unsigned n) {
  BigInt r;
  mpz_fac_ui(r.get_mpz_t(), n);
  return r;
}

Rational factorial_quotient(unsigned m, long j) {
  if (j < 0) return Rational(0);
  return Rational(factorial(m), factorial(static_cast<unsigned>(j)));
}

BigInt binomial(unsigned n, long k) {
  if (k < 0 || k > static_cast<long>(n)) return 0;
  BigInt r;
  mpz_bin_uiui(r.get_mpz_t(), n, static_cast<unsigned long>(k));
  return r;
}

BigInt falling_factorial(long n, unsigned k) {
  if (n < 0 || static_cast<long>(k) > n) return k == 0 ? BigInt(1) : BigInt(0);
  BigInt r = 1;
  for (unsigned i = 0; i < k; ++i) r *= static_cast<unsigned long>(n - i);
  return r;
}

BigInt pow2(unsigned k) {
  BigInt r;
  mpz_ui_pow_ui(r.get_mpz_t(), 2, k);
  return r;
}

}  // namespace mgdual
