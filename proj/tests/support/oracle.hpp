#pragma once

// Small, deliberately naive reference routines used to check the library from the outside.

#include <cstdint>
#include <functional>
#include <stdexcept>
#include <utility>
#include <vector>

#include "qbt/matrix.hpp"

namespace oracle {

using Row = std::vector<std::uint64_t>;
using Table = std::vector<Row>;

inline std::uint64_t mulm(std::uint64_t a, std::uint64_t b, std::uint64_t p) {
  return static_cast<std::uint64_t>(static_cast<unsigned __int128>(a) * b % p);
}

inline std::uint64_t powm(std::uint64_t a, std::uint64_t e, std::uint64_t p) {
  std::uint64_t r = 1 % p;
  a %= p;
  while (e) {
    if (e & 1) r = mulm(r, a, p);
    a = mulm(a, a, p);
    e >>= 1;
  }
  return r;
}

inline std::uint64_t invm(std::uint64_t a, std::uint64_t p) { return powm(a, p - 2, p); }

inline std::uint64_t reduce(long long v, std::uint64_t p) {
  long long m = v % static_cast<long long>(p);
  return static_cast<std::uint64_t>(m < 0 ? m + static_cast<long long>(p) : m);
}

/// Schoolbook elimination mod p.
inline std::size_t rank_mod(Table a, std::uint64_t p) {
  std::size_t rank = 0;
  const std::size_t rows = a.size(), cols = rows ? a[0].size() : 0;
  for (std::size_t c = 0; c < cols && rank < rows; ++c) {
    std::size_t piv = rank;
    while (piv < rows && a[piv][c] == 0) ++piv;
    if (piv == rows) continue;
    std::swap(a[piv], a[rank]);
    const std::uint64_t inv = invm(a[rank][c], p);
    for (std::size_t r = 0; r < rows; ++r) {
      if (r == rank || a[r][c] == 0) continue;
      const std::uint64_t f = mulm(a[r][c], inv, p);
      for (std::size_t k = c; k < cols; ++k) a[r][k] = (a[r][k] + p - mulm(f, a[rank][k], p)) % p;
    }
    ++rank;
  }
  return rank;
}

/// Scalar (rational or residue) mapped into Z/p.
inline std::uint64_t to_mod(const qbt::Scalar& s, std::uint64_t p) {
  if (!s.is_rational()) return s.residue() % p;
  const mpq_class& q = s.rational();
  mpz_class num = q.get_num() % static_cast<unsigned long>(p), den = q.get_den() % static_cast<unsigned long>(p);
  if (num < 0) num += static_cast<unsigned long>(p);
  if (den == 0) throw std::domain_error("denominator vanishes mod p");
  return mulm(num.get_ui(), invm(den.get_ui(), p), p);
}

inline Table to_table(const qbt::Matrix& m, std::uint64_t p) {
  Table t(m.rows(), Row(m.cols()));
  for (std::size_t r = 0; r < m.rows(); ++r)
    for (std::size_t c = 0; c < m.cols(); ++c) t[r][c] = to_mod(m(r, c), p);
  return t;
}

inline long long binom(long long n, long long k) {
  if (k < 0 || n < 0 || k > n) return 0;
  long long r = 1;
  for (long long i = 1; i <= k; ++i) r = r * (n - k + i) / i;
  return r;
}

/// Generalized binomial C(k, i) for any integer k.
inline long long gbinom(long long k, long long i) {
  long long num = 1, den = 1;
  for (long long j = 0; j < i; ++j) {
    num *= k - j;
    den *= j + 1;
  }
  return num / den;
}

/// Coefficients of (1 + d t)^k mod t^{n+1}, k of either sign.
inline std::vector<long long> linear_power(int n, long long d, long long k) {
  std::vector<long long> c(static_cast<std::size_t>(n + 1));
  long long dp = 1;
  for (int i = 0; i <= n; ++i) {
    c[static_cast<std::size_t>(i)] = gbinom(k, i) * dp;
    dp *= d;
  }
  return c;
}

inline std::vector<long long> series_mul(const std::vector<long long>& a, const std::vector<long long>& b) {
  std::vector<long long> c(a.size(), 0);
  for (std::size_t i = 0; i < a.size(); ++i)
    for (std::size_t j = 0; i + j < a.size(); ++j) c[i + j] += a[i] * b[j];
  return c;
}

/// Sign of a permutation given as a sequence of distinct integers, by counting inversions.
inline int perm_sign(const std::vector<int>& s) {
  int inv = 0;
  for (std::size_t i = 0; i < s.size(); ++i)
    for (std::size_t j = i + 1; j < s.size(); ++j)
      if (s[i] > s[j]) ++inv;
  return inv % 2 ? -1 : 1;
}

/// All normalized points of P^n(F_q): first nonzero coordinate equal to 1.
inline void for_each_point(int n, std::uint64_t q, const std::function<void(const std::vector<std::uint64_t>&)>& fn) {
  for (int lead = 0; lead <= n; ++lead) {
    std::vector<std::uint64_t> pt(static_cast<std::size_t>(n + 1), 0);
    pt[static_cast<std::size_t>(lead)] = 1;
    const int free = n - lead;
    std::uint64_t total = 1;
    for (int i = 0; i < free; ++i) total *= q;
    for (std::uint64_t code = 0; code < total; ++code) {
      std::uint64_t x = code;
      for (int i = 0; i < free; ++i) {
        pt[static_cast<std::size_t>(lead + 1 + i)] = x % q;
        x /= q;
      }
      fn(pt);
    }
  }
}

}  // namespace oracle
