#include "qbt/upoly.hpp"

#include <stdexcept>

namespace qbt {

UPoly::UPoly(Field field, std::vector<Scalar> coeffs) : field_(field), c_(std::move(coeffs)) { trim(); }

UPoly UPoly::constant(const Scalar& c) { return UPoly(c.field(), {c}); }

UPoly UPoly::monomial(const Scalar& c, std::size_t k) {
  Field f = c.field();
  std::vector<Scalar> v(k + 1, f.zero());
  v[k] = c;
  return UPoly(f, std::move(v));
}

UPoly UPoly::from_ints(Field field, std::vector<long long> low_first) {
  std::vector<Scalar> v;
  for (auto x : low_first) v.push_back(field.from_int(x));
  return UPoly(field, std::move(v));
}

void UPoly::trim() {
  while (!c_.empty() && c_.back().is_zero()) c_.pop_back();
}

UPoly UPoly::monic() const {
  if (is_zero()) return *this;
  return scaled(lead().inverse());
}

UPoly UPoly::derivative() const {
  std::vector<Scalar> d;
  for (std::size_t i = 1; i < c_.size(); ++i) d.push_back(c_[i] * field_.from_int(static_cast<long long>(i)));
  return UPoly(field_, std::move(d));
}

UPoly UPoly::scaled(const Scalar& s) const {
  std::vector<Scalar> v = c_;
  for (auto& x : v) x *= s;
  return UPoly(field_, std::move(v));
}

Scalar UPoly::operator()(const Scalar& x) const {
  Scalar acc = field_.zero();
  for (std::size_t i = c_.size(); i-- > 0;) acc = acc * x + c_[i];
  return acc;
}

UPoly& UPoly::operator+=(const UPoly& o) {
  if (c_.size() < o.c_.size()) c_.resize(o.c_.size(), field_.zero());
  for (std::size_t i = 0; i < o.c_.size(); ++i) c_[i] += o.c_[i];
  trim();
  return *this;
}

UPoly& UPoly::operator-=(const UPoly& o) {
  if (c_.size() < o.c_.size()) c_.resize(o.c_.size(), field_.zero());
  for (std::size_t i = 0; i < o.c_.size(); ++i) c_[i] -= o.c_[i];
  trim();
  return *this;
}

UPoly operator*(const UPoly& a, const UPoly& b) {
  if (a.is_zero() || b.is_zero()) return UPoly(a.field_);
  std::vector<Scalar> v(a.c_.size() + b.c_.size() - 1, a.field_.zero());
  for (std::size_t i = 0; i < a.c_.size(); ++i) {
    if (a.c_[i].is_zero()) continue;
    for (std::size_t j = 0; j < b.c_.size(); ++j) v[i + j] += a.c_[i] * b.c_[j];
  }
  return UPoly(a.field_, std::move(v));
}

std::string UPoly::to_string(const std::string& var) const {
  if (is_zero()) return "0";
  std::string out;
  for (std::size_t i = c_.size(); i-- > 0;) {
    if (c_[i].is_zero()) continue;
    if (!out.empty()) out += " + ";
    std::string c = c_[i].to_string();
    if (i == 0) {
      out += c;
    } else {
      if (!c_[i].is_one()) out += "(" + c + ")*";
      out += var;
      if (i > 1) out += "^" + std::to_string(i);
    }
  }
  return out;
}

std::pair<UPoly, UPoly> divmod(const UPoly& a, const UPoly& b) {
  if (b.is_zero()) throw std::domain_error("polynomial division by zero");
  const Field& f = a.field();
  UPoly r = a;
  if (r.degree() < b.degree()) return {UPoly(f), r};
  std::vector<Scalar> q(static_cast<std::size_t>(r.degree() - b.degree() + 1), f.zero());
  Scalar inv = b.lead().inverse();
  std::vector<Scalar> rc = r.coeffs();
  const int db = b.degree();
  for (int k = static_cast<int>(rc.size()) - 1; k >= db; --k) {
    if (rc[k].is_zero()) continue;
    Scalar t = rc[k] * inv;
    q[k - db] = t;
    for (int j = 0; j <= db; ++j) rc[k - db + j] -= t * b.coeffs()[j];
  }
  return {UPoly(f, std::move(q)), UPoly(f, std::move(rc))};
}

UPoly gcd(UPoly a, UPoly b) {
  while (!b.is_zero()) {
    UPoly r = divmod(a, b).second;
    a = std::move(b);
    b = std::move(r);
  }
  return a.monic();
}

Bezout xgcd(const UPoly& a, const UPoly& b) {
  const Field& f = a.field();
  UPoly r0 = a, r1 = b;
  UPoly s0 = UPoly::constant(f.one()), s1(f);
  UPoly t0(f), t1 = UPoly::constant(f.one());
  while (!r1.is_zero()) {
    auto [q, r] = divmod(r0, r1);
    r0 = std::move(r1);
    r1 = std::move(r);
    UPoly s2 = s0 - q * s1;
    s0 = std::move(s1);
    s1 = std::move(s2);
    UPoly t2 = t0 - q * t1;
    t0 = std::move(t1);
    t1 = std::move(t2);
  }
  if (r0.is_zero()) return {r0, s0, t0};
  Scalar inv = r0.lead().inverse();
  return {r0.scaled(inv), s0.scaled(inv), t0.scaled(inv)};
}

UPoly powmod(const UPoly& base, const mpz_class& e, const UPoly& m) {
  const Field& f = base.field();
  UPoly result = divmod(UPoly::constant(f.one()), m).second;
  UPoly b = divmod(base, m).second;
  const std::size_t bits = e == 0 ? 0 : mpz_sizeinbase(e.get_mpz_t(), 2);
  for (std::size_t i = bits; i-- > 0;) {
    result = divmod(result * result, m).second;
    if (mpz_tstbit(e.get_mpz_t(), i)) result = divmod(result * b, m).second;
  }
  return result;
}

Matrix evaluate_at(const UPoly& p, const Matrix& a) {
  if (a.rows() != a.cols()) throw InputError("evaluate_at: matrix must be square");
  Matrix acc(a.field(), a.rows(), a.cols());
  const auto& c = p.coeffs();
  const Matrix id = Matrix::identity(a.field(), a.rows());
  for (std::size_t i = c.size(); i-- > 0;) acc = acc * a + id.scaled(c[i]);
  return acc;
}

UPoly minimal_polynomial(const Matrix& e) {
  if (e.rows() != e.cols()) throw InputError("minimal_polynomial: matrix must be square");
  const Field& f = e.field();
  const std::size_t n = e.rows();
  struct Row {
    Vector v;
    std::vector<Scalar> combo;  // coefficients over I, e, e^2, ...
    std::size_t pivot;
  };
  std::vector<Row> basis;
  Matrix power = Matrix::identity(f, n);
  for (std::size_t k = 0; k <= n; ++k) {
    Vector v = power.data();
    std::vector<Scalar> combo(k + 1, f.zero());
    combo[k] = f.one();
    for (const auto& b : basis) {
      if (v[b.pivot].is_zero()) continue;
      Scalar t = v[b.pivot];
      for (std::size_t i = 0; i < v.size(); ++i) {
        if (!b.v[i].is_zero()) v[i] -= t * b.v[i];
      }
      for (std::size_t i = 0; i < b.combo.size(); ++i) combo[i] -= t * b.combo[i];
    }
    std::size_t piv = 0;
    while (piv < v.size() && v[piv].is_zero()) ++piv;
    if (piv == v.size()) return UPoly(f, std::move(combo));
    Scalar inv = v[piv].inverse();
    for (auto& x : v) x *= inv;
    for (auto& x : combo) x *= inv;
    for (auto& b : basis) {
      if (b.v[piv].is_zero()) continue;
      Scalar t = b.v[piv];
      for (std::size_t i = 0; i < v.size(); ++i) {
        if (!v[i].is_zero()) b.v[i] -= t * v[i];
      }
      b.combo.resize(combo.size(), f.zero());
      for (std::size_t i = 0; i < combo.size(); ++i) b.combo[i] -= t * combo[i];
    }
    basis.push_back({std::move(v), std::move(combo), piv});
    power = power * e;
  }
  throw std::logic_error("minimal_polynomial: no dependence found");
}

}  // namespace qbt
