#pragma once

#include <memory>
#include <vector>

#include "heunforms/rational.hpp"

namespace heunforms {

/// C(n,k). Out-of-range k (k < 0 or k > n) returns 0 so identity sums can run
/// over rectangular index ranges without case splits. Negative n is a usage
/// error.
BigInt binomial(long n, long k);

/// n!, n >= 0.
BigInt factorial(long n);

/// Rising factorial (x)_k = x(x+1)...(x+k-1), with (x)_0 = 1. Exact.
Rational pochhammer(const Rational& x, long k);

/// Row coefficient a_{nj} = 4^{-n} C(2j,j) C(2n-2j,n-j), 0 <= j <= n.
Rational coeff_a(long n, long j);

/// Row coefficient r_{nj} = C(n,j)^{-1} a_{nj}, 0 <= j <= n.
Rational coeff_r(long n, long j);

/// One memoized row of a_{nj} or r_{nj} values for a fixed n. Rows are built
/// once and shared; the cache is safe under concurrent lookup from sweep
/// workers and rows are immutable after construction.
class CoeffTable {
 public:
  enum class Kind { A, R };

  static std::shared_ptr<const CoeffTable> get(Kind kind, long n);

  Kind kind() const { return kind_; }
  long n() const { return n_; }
  const Rational& at(long j) const;
  const std::vector<Rational>& values() const { return values_; }

 private:
  CoeffTable(Kind kind, long n);

  Kind kind_;
  long n_;
  std::vector<Rational> values_;
};

}  // namespace heunforms
