#include "qbt/poly.hpp"

#include <algorithm>
#include <cctype>
#include <numeric>

namespace qbt {

int monomial_degree(const Monomial& m) { return std::accumulate(m.begin(), m.end(), 0); }

bool MonomialOrder::operator()(const Monomial& a, const Monomial& b) const {
  int da = monomial_degree(a), db = monomial_degree(b);
  if (da != db) return da > db;
  return std::lexicographical_compare(b.begin(), b.end(), a.begin(), a.end());
}

namespace {

void fill_basis(int var, int nvars, int remaining, Monomial& cur, std::vector<Monomial>& out) {
  if (var == nvars - 1) {
    cur[var] = remaining;
    out.push_back(cur);
    return;
  }
  for (int k = remaining; k >= 0; --k) {
    cur[var] = k;
    fill_basis(var + 1, nvars, remaining - k, cur, out);
  }
  cur[var] = 0;
}

}  // namespace

std::vector<Monomial> monomial_basis(int n, int d) {
  if (n < 0) throw InputError("monomial_basis: n must be non-negative");
  std::vector<Monomial> out;
  if (d < 0) return out;
  Monomial cur(static_cast<std::size_t>(n + 1), 0);
  fill_basis(0, n + 1, d, cur, out);
  return out;
}

std::string monomial_to_string(const Monomial& m) {
  std::string s;
  for (std::size_t i = 0; i < m.size(); ++i) {
    if (m[i] == 0) continue;
    if (!s.empty()) s += "*";
    s += "x" + std::to_string(i);
    if (m[i] > 1) s += "^" + std::to_string(m[i]);
  }
  return s.empty() ? "1" : s;
}

long long binomial(long long n, long long k) {
  if (n < 0 || k < 0 || k > n) return 0;
  k = std::min(k, n - k);
  long long r = 1;
  for (long long i = 1; i <= k; ++i) r = r * (n - k + i) / i;
  return r;
}

HomogeneousPoly HomogeneousPoly::from_monomial(Field field, const Monomial& m, const Scalar& c) {
  HomogeneousPoly p(field, static_cast<int>(m.size()) - 1, monomial_degree(m));
  p.add_term(m, c);
  return p;
}

HomogeneousPoly HomogeneousPoly::variable(Field field, int n, int i) {
  Monomial m(static_cast<std::size_t>(n + 1), 0);
  m.at(static_cast<std::size_t>(i)) = 1;
  return from_monomial(field, m, field.one());
}

Scalar HomogeneousPoly::coeff(const Monomial& m) const {
  auto it = terms_.find(m);
  return it == terms_.end() ? field_.zero() : it->second;
}

void HomogeneousPoly::add_term(const Monomial& m, const Scalar& c) {
  if (static_cast<int>(m.size()) != n_ + 1) throw InputError("monomial has the wrong number of variables");
  if (monomial_degree(m) != degree_) throw InputError("monomial degree does not match polynomial degree");
  if (c.is_zero()) return;
  auto [it, inserted] = terms_.try_emplace(m, c);
  if (!inserted) {
    it->second += c;
    if (it->second.is_zero()) terms_.erase(it);
  }
}

HomogeneousPoly& HomogeneousPoly::operator+=(const HomogeneousPoly& o) {
  if (o.is_zero()) return *this;
  if (o.degree_ != degree_ || o.n_ != n_) throw InputError("adding polynomials of different degree or arity");
  for (const auto& [m, c] : o.terms_) add_term(m, c);
  return *this;
}

HomogeneousPoly& HomogeneousPoly::operator-=(const HomogeneousPoly& o) {
  if (o.is_zero()) return *this;
  if (o.degree_ != degree_ || o.n_ != n_) throw InputError("subtracting polynomials of different degree or arity");
  for (const auto& [m, c] : o.terms_) add_term(m, -c);
  return *this;
}

HomogeneousPoly operator*(const HomogeneousPoly& a, const HomogeneousPoly& b) {
  if (a.n_ != b.n_) throw InputError("multiplying polynomials of different arity");
  HomogeneousPoly p(a.field_, a.n_, a.degree_ + b.degree_);
  Monomial m(static_cast<std::size_t>(a.n_ + 1));
  for (const auto& [ma, ca] : a.terms_) {
    for (const auto& [mb, cb] : b.terms_) {
      for (std::size_t i = 0; i < m.size(); ++i) m[i] = ma[i] + mb[i];
      p.add_term(m, ca * cb);
    }
  }
  return p;
}

HomogeneousPoly HomogeneousPoly::scaled(const Scalar& s) const {
  HomogeneousPoly p(field_, n_, degree_);
  if (s.is_zero()) return p;
  for (const auto& [m, c] : terms_) p.terms_.emplace(m, c * s);
  return p;
}

bool operator==(const HomogeneousPoly& a, const HomogeneousPoly& b) {
  if (a.is_zero() && b.is_zero()) return true;
  return a.n_ == b.n_ && a.degree_ == b.degree_ && a.terms_ == b.terms_;
}

namespace {

// pw[i][k] = point[i]^k
std::vector<std::vector<Scalar>> power_table(const Vector& point, int max_degree, const Field& f) {
  std::vector<std::vector<Scalar>> pw(point.size());
  for (std::size_t i = 0; i < point.size(); ++i) {
    pw[i].push_back(f.one());
    for (int k = 1; k <= max_degree; ++k) pw[i].push_back(pw[i].back() * point[i]);
  }
  return pw;
}

Scalar eval_with(const HomogeneousPoly& p, const std::vector<std::vector<Scalar>>& pw) {
  Scalar acc = p.field().zero();
  for (const auto& [m, c] : p.terms()) {
    Scalar t = c;
    for (std::size_t i = 0; i < m.size(); ++i) {
      if (m[i]) t *= pw[i][static_cast<std::size_t>(m[i])];
    }
    acc += t;
  }
  return acc;
}

}  // namespace

Scalar HomogeneousPoly::evaluate(const Vector& point) const {
  if (static_cast<int>(point.size()) != n_ + 1) throw InputError("point has the wrong number of coordinates");
  return eval_with(*this, power_table(point, std::max(degree_, 0), field_));
}

Vector HomogeneousPoly::coefficients() const {
  Vector v;
  for (const auto& m : monomial_basis(n_, degree_)) v.push_back(coeff(m));
  return v;
}

HomogeneousPoly HomogeneousPoly::converted(const Field& target) const {
  HomogeneousPoly p(target, n_, degree_);
  for (const auto& [m, c] : terms_) {
    if (c.is_rational()) {
      p.add_term(m, target.from_rational(c.rational()));
    } else if (target == field_) {
      p.add_term(m, c);
    } else {
      throw InputError("cannot convert residues to a different field");
    }
  }
  return p;
}

std::string HomogeneousPoly::to_string() const {
  if (is_zero()) return "0";
  std::string s;
  for (const auto& [m, c] : terms_) {
    std::string coef;
    bool negative = false;
    if (c.is_rational()) {
      mpq_class q = c.rational();
      negative = sgn(q) < 0;
      if (negative) q = -q;
      coef = q.get_den() == 1 ? q.get_num().get_str() : q.get_str();
    } else {
      coef = std::to_string(c.residue());
    }
    if (s.empty()) {
      if (negative) s += "-";
    } else {
      s += negative ? " - " : " + ";
    }
    bool constant = monomial_degree(m) == 0;
    if (constant) {
      s += coef;
    } else {
      if (coef != "1") s += coef + "*";
      s += monomial_to_string(m);
    }
  }
  return s;
}

HomogeneousPoly HomogeneousPoly::parse(Field field, int n, int degree, std::string_view text) {
  std::string t;
  for (char ch : text) {
    if (!std::isspace(static_cast<unsigned char>(ch))) t += ch;
  }
  HomogeneousPoly p(field, n, degree);
  if (t.empty()) throw InputError("empty polynomial string");
  std::size_t i = 0;
  auto fail = [&](const std::string& why) -> InputError {
    return InputError("cannot parse polynomial '" + std::string(text) + "': " + why);
  };
  auto read_uint = [&]() {
    std::size_t start = i;
    while (i < t.size() && std::isdigit(static_cast<unsigned char>(t[i]))) ++i;
    if (start == i) throw fail("expected a number at offset " + std::to_string(start));
    return t.substr(start, i - start);
  };
  bool first = true;
  while (i < t.size()) {
    bool negative = false;
    if (t[i] == '+' || t[i] == '-') {
      negative = t[i] == '-';
      ++i;
    } else if (!first) {
      throw fail("expected '+' or '-' at offset " + std::to_string(i));
    }
    first = false;
    mpq_class coef = 1;
    Monomial m(static_cast<std::size_t>(n + 1), 0);
    bool factor_expected = true;
    while (factor_expected) {
      if (i >= t.size()) throw fail("unexpected end");
      if (t[i] == 'x') {
        ++i;
        int var = std::stoi(read_uint());
        if (var < 0 || var > n) throw fail("variable x" + std::to_string(var) + " out of range");
        int e = 1;
        if (i < t.size() && t[i] == '^') {
          ++i;
          e = std::stoi(read_uint());
        }
        m[static_cast<std::size_t>(var)] += e;
      } else {
        mpz_class num(read_uint());
        mpz_class den = 1;
        if (i < t.size() && t[i] == '/') {
          ++i;
          den = mpz_class(read_uint());
          if (den == 0) throw fail("zero denominator");
        }
        coef *= mpq_class(num, den);
        coef.canonicalize();
      }
      factor_expected = i < t.size() && t[i] == '*';
      if (factor_expected) ++i;
    }
    if (negative) coef = -coef;
    if (monomial_degree(m) != degree) {
      if (coef == 0) continue;
      throw fail("term of degree " + std::to_string(monomial_degree(m)) + ", expected " + std::to_string(degree));
    }
    p.add_term(m, field.from_rational(coef));
  }
  return p;
}

PolyMatrix::PolyMatrix(Field field, int n, std::vector<int> row_twists, std::vector<int> col_twists)
    : field_(field), n_(n), row_twists_(std::move(row_twists)), col_twists_(std::move(col_twists)) {
  if (n < 1) throw InputError("PolyMatrix: ambient dimension must be at least 1");
  e_.reserve(rows() * cols());
  for (std::size_t r = 0; r < rows(); ++r)
    for (std::size_t c = 0; c < cols(); ++c) e_.emplace_back(field_, n_, entry_degree(r, c));
}

void PolyMatrix::set(std::size_t r, std::size_t c, HomogeneousPoly p) {
  if (r >= rows() || c >= cols()) throw std::out_of_range("PolyMatrix::set out of range");
  if (p.is_zero()) {
    e_[r * cols() + c] = HomogeneousPoly(field_, n_, entry_degree(r, c));
    return;
  }
  if (p.degree() != entry_degree(r, c)) {
    throw InputError("entry (" + std::to_string(r) + "," + std::to_string(c) + ") has degree " + std::to_string(p.degree()) +
                     ", twists require " + std::to_string(entry_degree(r, c)));
  }
  if (p.n() != n_) throw InputError("entry has the wrong number of variables");
  e_[r * cols() + c] = std::move(p);
}

bool PolyMatrix::is_zero() const {
  return std::all_of(e_.begin(), e_.end(), [](const HomogeneousPoly& p) { return p.is_zero(); });
}

Matrix PolyMatrix::evaluate(const Vector& point) const {
  if (static_cast<int>(point.size()) != n_ + 1) throw InputError("point has the wrong number of coordinates");
  if (std::all_of(point.begin(), point.end(), [](const Scalar& s) { return s.is_zero(); })) {
    throw InputError("the zero vector is not a projective point");
  }
  int maxd = 0;
  for (const auto& p : e_) maxd = std::max(maxd, p.degree());
  auto pw = power_table(point, maxd, field_);
  Matrix m(field_, rows(), cols());
  for (std::size_t r = 0; r < rows(); ++r)
    for (std::size_t c = 0; c < cols(); ++c) m(r, c) = eval_with((*this)(r, c), pw);
  return m;
}

PolyMatrix PolyMatrix::converted(const Field& target) const {
  PolyMatrix out(target, n_, row_twists_, col_twists_);
  for (std::size_t i = 0; i < e_.size(); ++i) out.e_[i] = e_[i].converted(target);
  return out;
}

PolyMatrix operator*(const PolyMatrix& a, const PolyMatrix& b) {
  if (a.col_twists_ != b.row_twists_ || a.n_ != b.n_) throw InputError("PolyMatrix product: twists do not match");
  PolyMatrix out(a.field_, a.n_, a.row_twists_, b.col_twists_);
  for (std::size_t r = 0; r < a.rows(); ++r)
    for (std::size_t c = 0; c < b.cols(); ++c) {
      HomogeneousPoly acc(a.field_, a.n_, out.entry_degree(r, c));
      for (std::size_t k = 0; k < a.cols(); ++k) {
        if (a(r, k).is_zero() || b(k, c).is_zero()) continue;
        acc += a(r, k) * b(k, c);
      }
      out.set(r, c, std::move(acc));
    }
  return out;
}

bool operator==(const PolyMatrix& a, const PolyMatrix& b) {
  return a.field_ == b.field_ && a.n_ == b.n_ && a.row_twists_ == b.row_twists_ && a.col_twists_ == b.col_twists_ && a.e_ == b.e_;
}

PolyMatrix hcat(const PolyMatrix& a, const PolyMatrix& b) {
  if (a.row_twists() != b.row_twists() || a.n() != b.n()) throw InputError("hcat: row twists differ");
  std::vector<int> ct = a.col_twists();
  ct.insert(ct.end(), b.col_twists().begin(), b.col_twists().end());
  PolyMatrix out(a.field(), a.n(), a.row_twists(), ct);
  for (std::size_t r = 0; r < a.rows(); ++r) {
    for (std::size_t c = 0; c < a.cols(); ++c) out.set(r, c, a(r, c));
    for (std::size_t c = 0; c < b.cols(); ++c) out.set(r, a.cols() + c, b(r, c));
  }
  return out;
}

PolyMatrix vcat(const PolyMatrix& a, const PolyMatrix& b) {
  if (a.col_twists() != b.col_twists() || a.n() != b.n()) throw InputError("vcat: column twists differ");
  std::vector<int> rt = a.row_twists();
  rt.insert(rt.end(), b.row_twists().begin(), b.row_twists().end());
  PolyMatrix out(a.field(), a.n(), rt, a.col_twists());
  for (std::size_t c = 0; c < a.cols(); ++c) {
    for (std::size_t r = 0; r < a.rows(); ++r) out.set(r, c, a(r, c));
    for (std::size_t r = 0; r < b.rows(); ++r) out.set(a.rows() + r, c, b(r, c));
  }
  return out;
}

PolyMatrix block_diag(const PolyMatrix& a, const PolyMatrix& b) {
  if (a.n() != b.n()) throw InputError("block_diag: ambient dimensions differ");
  std::vector<int> rt = a.row_twists(), ct = a.col_twists();
  rt.insert(rt.end(), b.row_twists().begin(), b.row_twists().end());
  ct.insert(ct.end(), b.col_twists().begin(), b.col_twists().end());
  PolyMatrix out(a.field(), a.n(), rt, ct);
  for (std::size_t r = 0; r < a.rows(); ++r)
    for (std::size_t c = 0; c < a.cols(); ++c) out.set(r, c, a(r, c));
  for (std::size_t r = 0; r < b.rows(); ++r)
    for (std::size_t c = 0; c < b.cols(); ++c) out.set(a.rows() + r, a.cols() + c, b(r, c));
  return out;
}

PolyMatrix expand_map(const std::vector<Matrix>& coeffs, const std::vector<HomogeneousPoly>& basis, int source_twist) {
  if (coeffs.size() != basis.size()) throw InputError("expand_map: coefficient count does not match basis size");
  if (coeffs.empty()) throw InputError("expand_map: empty basis");
  const std::size_t rows = coeffs[0].rows(), cols = coeffs[0].cols();
  const int n = basis[0].n();
  const int d = basis[0].degree();
  const Field field = coeffs[0].field();
  for (std::size_t i = 0; i < coeffs.size(); ++i) {
    if (coeffs[i].rows() != rows || coeffs[i].cols() != cols) throw InputError("expand_map: coefficient matrices differ in shape");
    if (basis[i].degree() != d || basis[i].n() != n) throw InputError("expand_map: basis elements differ in degree");
  }
  PolyMatrix out(field, n, std::vector<int>(rows, source_twist + d), std::vector<int>(cols, source_twist));
  for (std::size_t r = 0; r < rows; ++r)
    for (std::size_t c = 0; c < cols; ++c) {
      HomogeneousPoly acc(field, n, d);
      for (std::size_t i = 0; i < coeffs.size(); ++i) {
        if (!coeffs[i](r, c).is_zero()) acc += basis[i].scaled(coeffs[i](r, c));
      }
      out.set(r, c, std::move(acc));
    }
  return out;
}

std::vector<HomogeneousPoly> monomial_polys(const Field& field, int n, int d) {
  std::vector<HomogeneousPoly> out;
  for (const auto& m : monomial_basis(n, d)) out.push_back(HomogeneousPoly::from_monomial(field, m, field.one()));
  return out;
}

}  // namespace qbt
