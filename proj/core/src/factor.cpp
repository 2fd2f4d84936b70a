#include "qbt/factor.hpp"

#include <algorithm>
#include <stdexcept>

#include "qbt/random.hpp"

namespace qbt {

namespace {

UPoly x_poly(const Field& f) { return UPoly::monomial(f.one(), 1); }

UPoly exact_div(const UPoly& a, const UPoly& b) { return divmod(a, b).first; }

UPoly pow(const UPoly& a, int k) {
  UPoly r = UPoly::constant(a.field().one());
  for (int i = 0; i < k; ++i) r = r * a;
  return r;
}

bool poly_less(const UPoly& a, const UPoly& b) {
  if (a.degree() != b.degree()) return a.degree() < b.degree();
  for (std::size_t i = a.coeffs().size(); i-- > 0;) {
    const Scalar& x = a.coeffs()[i];
    const Scalar& y = b.coeffs()[i];
    if (x == y) continue;
    if (x.is_rational()) return x.rational() < y.rational();
    return x.residue() < y.residue();
  }
  return false;
}

// Pairs (g, d): g is the product of all irreducible factors of degree d of the square-free monic f.
std::vector<std::pair<UPoly, int>> distinct_degree(UPoly f) {
  const Field& F = f.field();
  const mpz_class p(static_cast<unsigned long>(F.modulus()));
  std::vector<std::pair<UPoly, int>> out;
  UPoly x = x_poly(F);
  UPoly h = divmod(x, f).second;
  for (int d = 1; f.degree() >= 2 * d; ++d) {
    h = powmod(h, p, f);
    UPoly g = gcd(h - x, f);
    if (g.degree() > 0) {
      out.emplace_back(g, d);
      f = exact_div(f, g);
      h = divmod(h, f).second;
    }
  }
  if (f.degree() > 0) out.emplace_back(f, f.degree());
  return out;
}

void equal_degree(const UPoly& g, int d, Rng& rng, std::vector<UPoly>& out) {
  if (g.degree() == d) {
    out.push_back(g);
    return;
  }
  const Field& F = g.field();
  mpz_class pd;
  mpz_ui_pow_ui(pd.get_mpz_t(), static_cast<unsigned long>(F.modulus()), static_cast<unsigned long>(d));
  const mpz_class e = (pd - 1) / 2;
  for (;;) {
    std::vector<Scalar> c;
    for (int i = 0; i < g.degree(); ++i) c.push_back(rng.scalar(F));
    UPoly a(F, std::move(c));
    if (a.degree() < 1) continue;
    UPoly b = powmod(a, e, g) - UPoly::constant(F.one());
    UPoly s = gcd(b, g);
    if (s.degree() > 0 && s.degree() < g.degree()) {
      equal_degree(s, d, rng, out);
      equal_degree(exact_div(g, s), d, rng, out);
      return;
    }
  }
}

}  // namespace

std::vector<std::pair<UPoly, int>> squarefree_decomposition(const UPoly& f) {
  if (f.is_zero()) throw InputError("square-free decomposition of zero");
  std::vector<std::pair<UPoly, int>> out;
  UPoly m = f.monic();
  if (m.degree() < 1) return out;
  UPoly a = gcd(m, m.derivative());
  UPoly b = exact_div(m, a);
  UPoly c = exact_div(m.derivative(), a);
  UPoly d = c - b.derivative();
  for (int i = 1; b.degree() > 0; ++i) {
    UPoly s = gcd(b, d);
    b = exact_div(b, s);
    c = exact_div(d, s);
    d = c - b.derivative();
    if (s.degree() > 0) out.emplace_back(s, i);
  }
  return out;
}

std::vector<std::pair<UPoly, int>> factor_fp(const UPoly& f, std::uint64_t seed) {
  if (!f.field().is_prime_field()) throw InputError("factor_fp requires a prime field");
  Rng rng(seed);
  std::vector<std::pair<UPoly, int>> out;
  for (const auto& [s, mult] : squarefree_decomposition(f)) {
    for (const auto& [g, d] : distinct_degree(s)) {
      std::vector<UPoly> parts;
      equal_degree(g, d, rng, parts);
      for (auto& q : parts) out.emplace_back(std::move(q), mult);
    }
  }
  std::sort(out.begin(), out.end(), [](const auto& x, const auto& y) { return poly_less(x.first, y.first); });
  return out;
}

std::vector<Scalar> roots_fp(const UPoly& f, std::uint64_t seed) {
  if (!f.field().is_prime_field()) throw InputError("roots_fp requires a prime field");
  if (f.is_zero()) throw InputError("roots of the zero polynomial");
  const Field& F = f.field();
  std::vector<Scalar> roots;
  UPoly m = f.monic();
  if (m.degree() < 1) return roots;
  UPoly x = x_poly(F);
  UPoly xp = powmod(x, mpz_class(static_cast<unsigned long>(F.modulus())), m);
  UPoly g = gcd(xp - x, m);
  if (g.degree() < 1) return roots;
  Rng rng(seed);
  std::vector<UPoly> lin;
  equal_degree(g, 1, rng, lin);
  for (const auto& l : lin) roots.push_back(-l.coeff(0));
  std::sort(roots.begin(), roots.end(), [](const Scalar& a, const Scalar& b) { return a.residue() < b.residue(); });
  return roots;
}

namespace {

constexpr long kDivisorBudget = 1000000000000L;

std::optional<std::vector<mpz_class>> positive_divisors(mpz_class n) {
  if (n < 0) n = -n;
  if (n > kDivisorBudget) return std::nullopt;
  std::vector<mpz_class> small, large;
  for (mpz_class d = 1; d * d <= n; ++d) {
    if (n % d == 0) {
      small.push_back(d);
      if (d * d != n) large.push_back(n / d);
    }
  }
  small.insert(small.end(), large.rbegin(), large.rend());
  return small;
}

}  // namespace

std::optional<std::vector<mpq_class>> rational_roots(const UPoly& f) {
  if (!f.field().is_rational()) throw InputError("rational_roots requires the rationals");
  if (f.is_zero()) throw InputError("roots of the zero polynomial");
  mpz_class den = 1;
  for (const auto& c : f.coeffs()) mpz_lcm(den.get_mpz_t(), den.get_mpz_t(), c.rational().get_den_mpz_t());
  std::vector<mpz_class> z;
  for (const auto& c : f.coeffs()) z.push_back(c.rational().get_num() * (den / c.rational().get_den()));
  std::vector<mpq_class> roots;
  std::size_t shift = 0;
  while (shift < z.size() && z[shift] == 0) ++shift;
  if (shift > 0) roots.emplace_back(0);
  z.erase(z.begin(), z.begin() + static_cast<std::ptrdiff_t>(shift));
  if (z.size() >= 2) {
    auto ps = positive_divisors(z.front());
    auto qs = positive_divisors(z.back());
    if (!ps || !qs) return std::nullopt;
    std::vector<mpq_class> found;
    for (const auto& p : *ps) {
      for (const auto& q : *qs) {
        for (int sign : {1, -1}) {
          mpq_class r(sign * p, q);
          r.canonicalize();
          mpq_class acc = 0;
          for (std::size_t i = z.size(); i-- > 0;) acc = acc * r + z[i];
          if (acc == 0) found.push_back(r);
        }
      }
    }
    std::sort(found.begin(), found.end());
    found.erase(std::unique(found.begin(), found.end()), found.end());
    roots.insert(roots.end(), found.begin(), found.end());
  }
  std::sort(roots.begin(), roots.end());
  return roots;
}

std::optional<std::pair<UPoly, UPoly>> coprime_split(const UPoly& f, std::uint64_t seed) {
  if (f.degree() < 2) return std::nullopt;
  const Field& F = f.field();
  if (F.is_prime_field()) {
    auto fac = factor_fp(f, seed);
    if (fac.size() < 2) return std::nullopt;
    UPoly g = pow(fac[0].first, fac[0].second);
    UPoly h = UPoly::constant(F.one());
    for (std::size_t i = 1; i < fac.size(); ++i) h = h * pow(fac[i].first, fac[i].second);
    return std::make_pair(g, h);
  }
  auto sqf = squarefree_decomposition(f);
  if (sqf.size() >= 2) {
    UPoly g = pow(sqf[0].first, sqf[0].second);
    UPoly h = UPoly::constant(F.one());
    for (std::size_t i = 1; i < sqf.size(); ++i) h = h * pow(sqf[i].first, sqf[i].second);
    return std::make_pair(g, h);
  }
  const auto& [s, k] = sqf.front();
  if (s.degree() < 2 || s.degree() > 4) return std::nullopt;
  auto roots = rational_roots(s);
  if (!roots || roots->empty()) return std::nullopt;
  UPoly lin(F, {F.from_rational(-roots->front()), F.one()});
  return std::make_pair(pow(lin, k), pow(exact_div(s, lin), k));
}

}  // namespace qbt
