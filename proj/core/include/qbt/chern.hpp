#pragma once

#include <string>
#include <vector>

#include <gmpxx.h>

namespace qbt {

/// Total Chern class as an integer series c_0 + c_1 t + ... + c_n t^n (truncated mod t^{n+1}).
class ChernPolynomial {
 public:
  ChernPolynomial() : ChernPolynomial(0) {}
  /// The trivial class 1.
  explicit ChernPolynomial(int n);
  ChernPolynomial(int n, std::vector<mpz_class> coeffs);

  /// c(O(d)) = 1 + d t.
  static ChernPolynomial line_bundle(int n, long long d);

  int n() const { return n_; }
  const std::vector<mpz_class>& coeffs() const { return c_; }
  const mpz_class& operator[](std::size_t k) const { return c_[k]; }

  ChernPolynomial inverse() const;
  /// Integer power; negative exponents use the series inverse.
  ChernPolynomial pow(long long k) const;
  friend ChernPolynomial operator*(const ChernPolynomial& a, const ChernPolynomial& b);
  friend bool operator==(const ChernPolynomial& a, const ChernPolynomial& b) = default;

  /// Chern class of E (x) O(d) for E of rank r with this class: c_k = sum_i C(r-i, k-i) d^{k-i} c_i.
  ChernPolynomial twisted(long long rank, long long d) const;

  std::vector<std::string> to_strings() const;
  std::string to_string() const;

 private:
  int n_;
  std::vector<mpz_class> c_;
};

}  // namespace qbt
