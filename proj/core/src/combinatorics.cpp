#include "heunforms/combinatorics.hpp"

#include <map>
#include <mutex>
#include <stdexcept>
#include <utility>

namespace heunforms {

BigInt binomial(long n, long k) {
  if (n < 0) throw std::invalid_argument("binomial: n must be nonnegative");
  if (k < 0 || k > n) return BigInt(0);
  BigInt r;
  mpz_bin_uiui(r.get_mpz_t(), static_cast<unsigned long>(n), static_cast<unsigned long>(k));
  return r;
}

BigInt factorial(long n) {
  if (n < 0) throw std::invalid_argument("factorial: n must be nonnegative");
  BigInt r;
  mpz_fac_ui(r.get_mpz_t(), static_cast<unsigned long>(n));
  return r;
}

Rational pochhammer(const Rational& x, long k) {
  if (k < 0) throw std::invalid_argument("pochhammer: k must be nonnegative");
  Rational r(1);
  for (long i = 0; i < k; ++i) r *= x + Rational(i);
  return r;
}

CoeffTable::CoeffTable(Kind kind, long n) : kind_(kind), n_(n) {
  if (n < 0) throw std::invalid_argument("CoeffTable: n must be nonnegative");
  BigInt four_n;
  mpz_ui_pow_ui(four_n.get_mpz_t(), 4, static_cast<unsigned long>(n));
  values_.reserve(static_cast<std::size_t>(n) + 1);
  for (long j = 0; j <= n; ++j) {
    Rational a(binomial(2 * j, j) * binomial(2 * n - 2 * j, n - j), four_n);
    values_.push_back(kind == Kind::A ? a : a / Rational(binomial(n, j)));
  }
}

const Rational& CoeffTable::at(long j) const {
  if (j < 0 || j > n_) throw std::invalid_argument("CoeffTable: index out of range");
  return values_[static_cast<std::size_t>(j)];
}

std::shared_ptr<const CoeffTable> CoeffTable::get(Kind kind, long n) {
  static std::mutex mutex;
  static std::map<std::pair<int, long>, std::shared_ptr<const CoeffTable>> cache;
  const std::pair<int, long> key{kind == Kind::A ? 0 : 1, n};
  std::lock_guard<std::mutex> lock(mutex);
  auto it = cache.find(key);
  if (it != cache.end()) return it->second;
  auto table = std::shared_ptr<const CoeffTable>(new CoeffTable(kind, n));
  cache.emplace(key, table);
  return table;
}

Rational coeff_a(long n, long j) { return CoeffTable::get(CoeffTable::Kind::A, n)->at(j); }

Rational coeff_r(long n, long j) { return CoeffTable::get(CoeffTable::Kind::R, n)->at(j); }

}  // namespace heunforms
