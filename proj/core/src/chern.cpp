#include "qbt/chern.hpp"

#include "qbt/field.hpp"

namespace qbt {

ChernPolynomial::ChernPolynomial(int n) : n_(n), c_(static_cast<std::size_t>(n + 1), 0) {
  if (n < 0) throw InputError("Chern polynomial needs n >= 0");
  c_[0] = 1;
}

ChernPolynomial::ChernPolynomial(int n, std::vector<mpz_class> coeffs) : n_(n), c_(std::move(coeffs)) {
  if (n < 0) throw InputError("Chern polynomial needs n >= 0");
  c_.resize(static_cast<std::size_t>(n + 1), 0);
  if (c_[0] != 1) throw InputError("Chern polynomial must start with 1");
}

ChernPolynomial ChernPolynomial::line_bundle(int n, long long d) {
  ChernPolynomial c(n);
  if (n >= 1) c.c_[1] = static_cast<long>(d);
  return c;
}

ChernPolynomial ChernPolynomial::inverse() const {
  std::vector<mpz_class> inv(c_.size(), 0);
  inv[0] = 1;
  for (std::size_t k = 1; k < c_.size(); ++k) {
    mpz_class s = 0;
    for (std::size_t i = 1; i <= k; ++i) s += c_[i] * inv[k - i];
    inv[k] = -s;
  }
  return ChernPolynomial(n_, inv);
}

ChernPolynomial ChernPolynomial::pow(long long k) const {
  ChernPolynomial base = k < 0 ? inverse() : *this;
  if (k < 0) k = -k;
  ChernPolynomial r(n_);
  while (k) {
    if (k & 1) r = r * base;
    base = base * base;
    k >>= 1;
  }
  return r;
}

ChernPolynomial operator*(const ChernPolynomial& a, const ChernPolynomial& b) {
  if (a.n_ != b.n_) throw InputError("Chern polynomials over different projective spaces");
  std::vector<mpz_class> c(a.c_.size(), 0);
  for (std::size_t i = 0; i < a.c_.size(); ++i)
    for (std::size_t j = 0; i + j < c.size(); ++j) c[i + j] += a.c_[i] * b.c_[j];
  return ChernPolynomial(a.n_, c);
}

ChernPolynomial ChernPolynomial::twisted(long long rank, long long d) const {
  std::vector<mpz_class> out(c_.size(), 0);
  for (std::size_t k = 0; k < c_.size(); ++k) {
    for (std::size_t i = 0; i <= k; ++i) {
      mpz_class binom = 0;
      long long top = rank - static_cast<long long>(i);
      long long bot = static_cast<long long>(k - i);
      if (top >= 0 && bot <= top) mpz_bin_uiui(binom.get_mpz_t(), static_cast<unsigned long>(top), static_cast<unsigned long>(bot));
      mpz_class dp;
      mpz_pow_ui(dp.get_mpz_t(), mpz_class(static_cast<long>(d)).get_mpz_t(), static_cast<unsigned long>(bot));
      out[k] += binom * dp * c_[i];
    }
  }
  return ChernPolynomial(n_, out);
}

std::vector<std::string> ChernPolynomial::to_strings() const {
  std::vector<std::string> s;
  for (const auto& c : c_) s.push_back(c.get_str());
  return s;
}

std::string ChernPolynomial::to_string() const {
  std::string s;
  for (std::size_t k = 0; k < c_.size(); ++k) {
    if (c_[k] == 0) continue;
    mpz_class a = abs(c_[k]);
    if (s.empty()) {
      if (c_[k] < 0) s += "-";
    } else {
      s += c_[k] < 0 ? " - " : " + ";
    }
    if (k == 0) {
      s += a.get_str();
    } else {
      if (a != 1) s += a.get_str();
      s += "t";
      if (k > 1) s += "^" + std::to_string(k);
    }
  }
  return s.empty() ? "0" : s;
}

}  // namespace qbt
