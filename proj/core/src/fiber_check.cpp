#include "qbt/fiber_check.hpp"

#include <algorithm>
#include <chrono>
#include <map>

#include "qbt/factor.hpp"
#include "qbt/random.hpp"
#include "qbt/upoly.hpp"

namespace qbt {

std::string to_string(FiberMode m) { return m == FiberMode::Injective ? "injective" : "surjective"; }

std::string to_string(FiberVerdict v) {
  switch (v) {
    case FiberVerdict::PassProbabilistic:
      return "pass_probabilistic";
    case FiberVerdict::PassCertified:
      return "pass_certified";
    case FiberVerdict::Fail:
      return "fail";
    case FiberVerdict::FailCertified:
      return "fail_certified";
  }
  return "unknown";
}

std::string to_string(CertificationStatus s) {
  switch (s) {
    case CertificationStatus::NotAttempted:
      return "not_attempted";
    case CertificationStatus::Certified:
      return "certified";
    case CertificationStatus::Refuted:
      return "refuted";
    case CertificationStatus::Inconclusive:
      return "inconclusive";
  }
  return "unknown";
}

FiberMode parse_fiber_mode(const std::string& text) {
  if (text == "injective") return FiberMode::Injective;
  if (text == "surjective") return FiberMode::Surjective;
  throw InputError("mode must be injective or surjective, got '" + text + "'");
}

PolyMatrix sampling_matrix(const PolyMatrix& m) {
  if (m.field().is_rational()) return m.converted(Field::prime(kDefaultPrime));
  if (m.field().modulus() <= (1ULL << 30)) {
    throw InputError("fiber sampling needs a prime above 2^30, got " + std::to_string(m.field().modulus()));
  }
  return m;
}

bool full_rank_at(const PolyMatrix& m, FiberMode mode, const Vector& point) {
  std::size_t r = rank(m.evaluate(point));
  return mode == FiberMode::Injective ? r == m.cols() : r == m.rows();
}

namespace {

Vector random_point(Rng& rng, const Field& f, int n) {
  for (;;) {
    Vector v;
    for (int i = 0; i <= n; ++i) v.push_back(rng.scalar(f));
    auto it = std::find_if(v.begin(), v.end(), [](const Scalar& s) { return !s.is_zero(); });
    if (it == v.end()) continue;
    Scalar inv = it->inverse();
    for (auto& x : v) x *= inv;
    return v;
  }
}

Vector normalized(Vector v) {
  auto it = std::find_if(v.begin(), v.end(), [](const Scalar& s) { return !s.is_zero(); });
  if (it == v.end()) return v;
  Scalar inv = it->inverse();
  for (auto& x : v) x *= inv;
  return v;
}

// Newton interpolation through (i, ys[i]), i = 0..ys.size()-1.
UPoly interpolate(const std::vector<Scalar>& ys, const Field& f) {
  const std::size_t k = ys.size();
  std::vector<Scalar> c = ys;
  for (std::size_t j = 1; j < k; ++j)
    for (std::size_t i = k - 1; i >= j; --i) {
      c[i] = (c[i] - c[i - 1]) / f.from_int(static_cast<long long>(j));
      if (i == j) break;
    }
  UPoly result(f);
  UPoly basis = UPoly::constant(f.one());
  for (std::size_t i = 0; i < k; ++i) {
    result += basis.scaled(c[i]);
    basis = basis * UPoly(f, {f.from_int(-static_cast<long long>(i)), f.one()});
  }
  return result;
}

int line_degree_bound(const PolyMatrix& m, FiberMode mode) {
  int d = 0;
  if (mode == FiberMode::Injective) {
    for (std::size_t c = 0; c < m.cols(); ++c) {
      int best = 0;
      for (std::size_t r = 0; r < m.rows(); ++r) best = std::max(best, m.entry_degree(r, c));
      d += best;
    }
  } else {
    for (std::size_t r = 0; r < m.rows(); ++r) {
      int best = 0;
      for (std::size_t c = 0; c < m.cols(); ++c) best = std::max(best, m.entry_degree(r, c));
      d += best;
    }
  }
  return d;
}

// Restricts two random Cauchy-Binet combinations of the maximal minors to the line Q + sP and
// returns a re-validated point of the line where the rank drops, if any F_p-rational one exists.
std::optional<Vector> probe_line(const PolyMatrix& m, FiberMode mode, const Vector& p, Rng& rng) {
  const Field& f = m.field();
  const std::size_t k = std::min(m.rows(), m.cols());
  if (k == 0) return std::nullopt;
  Vector q = random_point(rng, f, m.n());
  if (q == p) return std::nullopt;
  const bool inj = mode == FiberMode::Injective;
  auto random_matrix = [&](std::size_t r, std::size_t c) {
    Matrix x(f, r, c);
    for (std::size_t i = 0; i < r; ++i)
      for (std::size_t j = 0; j < c; ++j) x(i, j) = rng.scalar(f);
    return x;
  };
  Matrix k1 = inj ? random_matrix(k, m.rows()) : random_matrix(m.cols(), k);
  Matrix k2 = inj ? random_matrix(k, m.rows()) : random_matrix(m.cols(), k);
  const int d = line_degree_bound(m, mode);
  std::vector<Scalar> y1, y2;
  for (int s = 0; s <= d; ++s) {
    Vector x = q;
    Scalar ss = f.from_int(s);
    for (std::size_t i = 0; i < x.size(); ++i) x[i] += ss * p[i];
    Matrix ev = m.evaluate(x);
    y1.push_back(determinant(inj ? k1 * ev : ev * k1));
    y2.push_back(determinant(inj ? k2 * ev : ev * k2));
  }
  UPoly g = gcd(interpolate(y1, f), interpolate(y2, f));
  std::vector<Vector> candidates;
  if (g.is_zero()) {
    candidates.push_back(q);
  } else if (g.degree() >= 1) {
    for (const auto& r : roots_fp(g, rng.next())) {
      Vector x = q;
      for (std::size_t i = 0; i < x.size(); ++i) x[i] += r * p[i];
      candidates.push_back(normalized(std::move(x)));
    }
  }
  for (const auto& x : candidates) {
    if (!full_rank_at(m, mode, x)) return x;
  }
  return std::nullopt;
}

double seconds_since(std::chrono::steady_clock::time_point t0) {
  return std::chrono::duration<double>(std::chrono::steady_clock::now() - t0).count();
}

}  // namespace

FiberReport probabilistic_full_rank(const PolyMatrix& m, FiberMode mode, std::size_t trials, std::uint64_t seed, bool line_probes) {
  if (trials < 1) throw InputError("at least one trial is required");
  const auto t0 = std::chrono::steady_clock::now();
  PolyMatrix s = sampling_matrix(m);
  const Field& f = s.field();
  FiberReport rep;
  rep.mode = mode;
  rep.prime = f.modulus();
  for (std::size_t t = 0; t < trials; ++t) {
    Rng rng(derive_seed(seed, t));
    Vector p = random_point(rng, f, s.n());
    ++rep.samples;
    std::optional<Vector> w;
    if (!full_rank_at(s, mode, p)) {
      w = p;
    } else if (line_probes) {
      w = probe_line(s, mode, p, rng);
    }
    if (w) {
      rep.verdict = FiberVerdict::Fail;
      rep.witness = std::move(w);
      rep.witness_trial = t;
      break;
    }
  }
  rep.elapsed_seconds = seconds_since(t0);
  return rep;
}

namespace {

HomogeneousPoly constant_one(const Field& f, int n) {
  return HomogeneousPoly::from_monomial(f, Monomial(static_cast<std::size_t>(n + 1), 0), f.one());
}

// Determinant of the square submatrix on `rows` x `cols` by Laplace expansion over column subsets.
HomogeneousPoly minor(const PolyMatrix& m, const std::vector<std::size_t>& rows, const std::vector<std::size_t>& cols) {
  const std::size_t k = rows.size();
  const Field& f = m.field();
  std::map<unsigned, HomogeneousPoly> level{{0u, constant_one(f, m.n())}};
  int row_sum = 0;
  for (std::size_t r = 0; r < k; ++r) {
    row_sum += m.row_twists()[rows[r]];
    std::map<unsigned, HomogeneousPoly> next;
    for (const auto& [mask, sub] : level) {
      for (std::size_t j = 0; j < k; ++j) {
        if (mask & (1u << j)) continue;
        const unsigned nm = mask | (1u << j);
        auto it = next.find(nm);
        if (it == next.end()) {
          int deg = row_sum;
          for (std::size_t c = 0; c < k; ++c) {
            if (nm & (1u << c)) deg -= m.col_twists()[cols[c]];
          }
          it = next.emplace(nm, HomogeneousPoly(f, m.n(), deg)).first;
        }
        const HomogeneousPoly& a = m(rows[r], cols[j]);
        if (a.is_zero() || sub.is_zero()) continue;
        // position of j among the columns of nm
        int pos = 0;
        for (std::size_t c = 0; c < j; ++c) pos += (nm >> c) & 1u;
        HomogeneousPoly term = a * sub;
        if ((static_cast<int>(r) + pos) % 2) {
          it->second -= term;
        } else {
          it->second += term;
        }
      }
    }
    level = std::move(next);
  }
  return level.at((k == 0) ? 0u : ((1u << k) - 1));
}

template <class F>
void for_each_subset(std::size_t n, std::size_t k, F&& fn) {
  std::vector<std::size_t> idx(k);
  for (std::size_t i = 0; i < k; ++i) idx[i] = i;
  if (k > n) return;
  for (;;) {
    fn(idx);
    std::size_t i = k;
    while (i > 0 && idx[i - 1] == n - k + i - 1) --i;
    if (i == 0) return;
    ++idx[i - 1];
    for (std::size_t j = i; j < k; ++j) idx[j] = idx[j - 1] + 1;
  }
}

}  // namespace

std::vector<HomogeneousPoly> minors_ideal(const PolyMatrix& m, std::size_t size) {
  if (size != std::min(m.rows(), m.cols())) throw InputError("minors_ideal: size must be min(rows, cols)");
  if (size > 24) throw InputError("minors_ideal: matrix too large");
  std::vector<HomogeneousPoly> out;
  if (size == 0) {
    out.push_back(constant_one(m.field(), m.n()));
    return out;
  }
  std::vector<std::size_t> all_rows(m.rows()), all_cols(m.cols());
  for (std::size_t i = 0; i < m.rows(); ++i) all_rows[i] = i;
  for (std::size_t i = 0; i < m.cols(); ++i) all_cols[i] = i;
  if (m.rows() >= m.cols()) {
    for_each_subset(m.rows(), size, [&](const std::vector<std::size_t>& rs) { out.push_back(minor(m, rs, all_cols)); });
  } else {
    for_each_subset(m.cols(), size, [&](const std::vector<std::size_t>& cs) { out.push_back(minor(m, all_rows, cs)); });
  }
  return out;
}

std::size_t maximal_minor_count(const PolyMatrix& m) {
  const auto big = std::max(m.rows(), m.cols()), small = std::min(m.rows(), m.cols());
  long long c = binomial(static_cast<long long>(big), static_cast<long long>(small));
  return static_cast<std::size_t>(c);
}

int max_minor_degree(const PolyMatrix& m) {
  std::vector<int> rt = m.row_twists(), ct = m.col_twists();
  int d = 0;
  if (m.rows() >= m.cols()) {
    std::sort(rt.rbegin(), rt.rend());
    for (std::size_t i = 0; i < m.cols(); ++i) d += rt[i] - ct[i];
  } else {
    std::sort(ct.begin(), ct.end());
    for (std::size_t i = 0; i < m.rows(); ++i) d += rt[i] - ct[i];
  }
  return d;
}

FiberReport global_full_rank(const PolyMatrix& m, FiberMode mode, const FiberOptions& opts) {
  const auto t0 = std::chrono::steady_clock::now();
  FiberReport rep = probabilistic_full_rank(m, mode, opts.trials, opts.seed, opts.line_probes);
  if (!rep.passed()) {
    rep.note = "rank drops at the witness point";
  } else if (!opts.certify) {
    rep.note = "certification not requested";
  } else if (m.n() > opts.max_n || max_minor_degree(m) > opts.max_minor_degree || maximal_minor_count(m) > opts.max_minors) {
    rep.note = "outside the certification budget";
  } else {
    LocusResult lr = certified_empty_projective_locus(minors_ideal(m, std::min(m.rows(), m.cols())), opts.groebner);
    if (lr == LocusResult::Empty) {
      rep.verdict = FiberVerdict::PassCertified;
      rep.certification = CertificationStatus::Certified;
      rep.note = "maximal minors have no common projective zero";
    } else if (lr == LocusResult::NonEmpty) {
      rep.verdict = FiberVerdict::FailCertified;
      rep.certification = CertificationStatus::Refuted;
      rep.note = "maximal minors share a projective zero not found by sampling";
    } else {
      rep.certification = CertificationStatus::Inconclusive;
      rep.note = "Groebner step limit reached";
    }
  }
  rep.elapsed_seconds = seconds_since(t0);
  return rep;
}

FiberReport global_injective(const PolyMatrix& m, const FiberOptions& opts) { return global_full_rank(m, FiberMode::Injective, opts); }

FiberReport global_surjective(const PolyMatrix& m, const FiberOptions& opts) { return global_full_rank(m, FiberMode::Surjective, opts); }

}  // namespace qbt
