#include "qbt/field.hpp"

#include <charconv>
#include <limits>

namespace qbt {

std::uint64_t mul_mod(std::uint64_t a, std::uint64_t b, std::uint64_t p) {
  return static_cast<std::uint64_t>(static_cast<unsigned __int128>(a) * b % p);
}

std::uint64_t pow_mod(std::uint64_t a, std::uint64_t e, std::uint64_t p) {
  std::uint64_t r = 1 % p;
  a %= p;
  while (e) {
    if (e & 1) r = mul_mod(r, a, p);
    a = mul_mod(a, a, p);
    e >>= 1;
  }
  return r;
}

bool is_prime(std::uint64_t n) {
  if (n < 2) return false;
  for (std::uint64_t q : {2ULL, 3ULL, 5ULL, 7ULL, 11ULL, 13ULL, 17ULL, 19ULL, 23ULL, 29ULL, 31ULL, 37ULL}) {
    if (n % q == 0) return n == q;
  }
  std::uint64_t d = n - 1;
  int s = 0;
  while ((d & 1) == 0) {
    d >>= 1;
    ++s;
  }
  // Deterministic witness set for 64-bit inputs.
  for (std::uint64_t a : {2ULL, 3ULL, 5ULL, 7ULL, 11ULL, 13ULL, 17ULL, 19ULL, 23ULL, 29ULL, 31ULL, 37ULL}) {
    std::uint64_t x = pow_mod(a, d, n);
    if (x == 1 || x == n - 1) continue;
    bool composite = true;
    for (int r = 1; r < s; ++r) {
      x = mul_mod(x, x, n);
      if (x == n - 1) {
        composite = false;
        break;
      }
    }
    if (composite) return false;
  }
  return true;
}

namespace {

std::uint64_t parse_u64(std::string_view s, std::string_view what) {
  std::uint64_t v = 0;
  auto [ptr, ec] = std::from_chars(s.data(), s.data() + s.size(), v);
  if (ec != std::errc() || ptr != s.data() + s.size() || s.empty()) {
    throw InputError("invalid " + std::string(what) + ": '" + std::string(s) + "'");
  }
  return v;
}

std::string_view trim(std::string_view s) {
  while (!s.empty() && (s.front() == ' ' || s.front() == '\t')) s.remove_prefix(1);
  while (!s.empty() && (s.back() == ' ' || s.back() == '\t')) s.remove_suffix(1);
  return s;
}

mpz_class parse_mpz(std::string_view s) {
  s = trim(s);
  std::string text(s);
  if (!text.empty() && text.front() == '+') text.erase(0, 1);
  mpz_class z;
  if (text.empty() || z.set_str(text, 10) != 0) {
    throw InputError("invalid integer: '" + std::string(s) + "'");
  }
  return z;
}

}  // namespace

Field Field::prime(std::uint64_t p) {
  if (p <= 2 || p >= (1ULL << 62) || !is_prime(p)) {
    throw InputError("field modulus must be an odd prime below 2^62, got " + std::to_string(p));
  }
  return Field(p);
}

Field Field::parse(std::string_view text) {
  text = trim(text);
  if (text == "q" || text == "Q") return rationals();
  if (text.starts_with("fp:")) return prime(parse_u64(text.substr(3), "field modulus"));
  throw InputError("unknown field '" + std::string(text) + "' (expected q or fp:<p>)");
}

std::string Field::to_string() const {
  return is_rational() ? std::string("q") : "fp:" + std::to_string(modulus_);
}

Scalar Field::zero() const { return from_int(0); }
Scalar Field::one() const { return from_int(1); }

Scalar Field::from_int(long long value) const {
  if (is_rational()) return Scalar(mpq_class(static_cast<long>(value)));
  long long m = static_cast<long long>(value % static_cast<long long>(modulus_));
  if (m < 0) m += static_cast<long long>(modulus_);
  return Scalar(Residue{static_cast<std::uint64_t>(m), modulus_});
}

Scalar Field::from_integer(const mpz_class& value) const {
  if (is_rational()) return Scalar(mpq_class(value));
  const mpz_class p(static_cast<unsigned long>(modulus_));
  mpz_class m = value % p;
  if (m < 0) m += p;
  return Scalar(Residue{static_cast<std::uint64_t>(m.get_ui()), modulus_});
}

Scalar Field::from_rational(const mpq_class& value) const {
  if (is_rational()) return Scalar(value);
  Scalar den = from_integer(value.get_den());
  if (den.is_zero()) throw InputError("denominator vanishes modulo " + std::to_string(modulus_));
  return from_integer(value.get_num()) / den;
}

Scalar Field::parse_scalar(std::string_view text) const {
  text = trim(text);
  if (auto pos = text.find("mod"); pos != std::string_view::npos) {
    if (is_rational()) throw InputError("residue '" + std::string(text) + "' given for field q");
    std::uint64_t p = parse_u64(trim(text.substr(pos + 3)), "modulus");
    if (p != modulus_) throw InputError("residue modulus " + std::to_string(p) + " does not match field " + to_string());
    return from_integer(parse_mpz(text.substr(0, pos)));
  }
  if (auto slash = text.find('/'); slash != std::string_view::npos) {
    mpz_class num = parse_mpz(text.substr(0, slash));
    mpz_class den = parse_mpz(text.substr(slash + 1));
    if (den == 0) throw InputError("zero denominator in '" + std::string(text) + "'");
    mpq_class q(num, den);
    q.canonicalize();
    return from_rational(q);
  }
  return from_integer(parse_mpz(text));
}

Field Scalar::field() const {
  if (is_rational()) return Field::rationals();
  return Field(std::get<Residue>(v_).modulus);
}

bool Scalar::is_zero() const {
  if (auto* q = std::get_if<mpq_class>(&v_)) return sgn(*q) == 0;
  return std::get<Residue>(v_).value == 0;
}

bool Scalar::is_one() const {
  if (auto* q = std::get_if<mpq_class>(&v_)) return *q == 1;
  return std::get<Residue>(v_).value == 1;
}

namespace {

[[noreturn]] void mismatch() { throw std::logic_error("scalar arithmetic across different fields"); }

}  // namespace

Scalar Scalar::inverse() const {
  if (is_zero()) throw std::domain_error("inverse of zero");
  if (auto* q = std::get_if<mpq_class>(&v_)) return Scalar(mpq_class(1) / *q);
  const auto& r = std::get<Residue>(v_);
  return Scalar(Residue{pow_mod(r.value, r.modulus - 2, r.modulus), r.modulus});
}

Scalar Scalar::operator-() const {
  if (auto* q = std::get_if<mpq_class>(&v_)) return Scalar(mpq_class(-*q));
  const auto& r = std::get<Residue>(v_);
  return Scalar(Residue{r.value == 0 ? 0 : r.modulus - r.value, r.modulus});
}

Scalar& Scalar::operator+=(const Scalar& o) {
  if (auto* q = std::get_if<mpq_class>(&v_)) {
    auto* oq = std::get_if<mpq_class>(&o.v_);
    if (!oq) mismatch();
    *q += *oq;
    return *this;
  }
  auto& r = std::get<Residue>(v_);
  auto* orr = std::get_if<Residue>(&o.v_);
  if (!orr || orr->modulus != r.modulus) mismatch();
  r.value += orr->value;
  if (r.value >= r.modulus) r.value -= r.modulus;
  return *this;
}

Scalar& Scalar::operator-=(const Scalar& o) {
  if (auto* q = std::get_if<mpq_class>(&v_)) {
    auto* oq = std::get_if<mpq_class>(&o.v_);
    if (!oq) mismatch();
    *q -= *oq;
    return *this;
  }
  auto& r = std::get<Residue>(v_);
  auto* orr = std::get_if<Residue>(&o.v_);
  if (!orr || orr->modulus != r.modulus) mismatch();
  r.value = r.value >= orr->value ? r.value - orr->value : r.value + r.modulus - orr->value;
  return *this;
}

Scalar& Scalar::operator*=(const Scalar& o) {
  if (auto* q = std::get_if<mpq_class>(&v_)) {
    auto* oq = std::get_if<mpq_class>(&o.v_);
    if (!oq) mismatch();
    *q *= *oq;
    return *this;
  }
  auto& r = std::get<Residue>(v_);
  auto* orr = std::get_if<Residue>(&o.v_);
  if (!orr || orr->modulus != r.modulus) mismatch();
  r.value = mul_mod(r.value, orr->value, r.modulus);
  return *this;
}

bool operator==(const Scalar& a, const Scalar& b) {
  if (a.v_.index() != b.v_.index()) return false;
  if (auto* q = std::get_if<mpq_class>(&a.v_)) return *q == std::get<mpq_class>(b.v_);
  return std::get<Residue>(a.v_) == std::get<Residue>(b.v_);
}

std::string Scalar::to_string() const {
  if (auto* q = std::get_if<mpq_class>(&v_)) return q->get_num().get_str() + "/" + q->get_den().get_str();
  const auto& r = std::get<Residue>(v_);
  return std::to_string(r.value) + " mod " + std::to_string(r.modulus);
}

}  // namespace qbt
