#include "qbt/monad.hpp"

#include <map>

#include "qbt/random.hpp"

namespace qbt {

std::string to_string(Realization r) {
  switch (r) {
    case Realization::Abstract: return "abstract";
    case Realization::LineBundle: return "linebundle";
    case Realization::HM: return "hm";
  }
  return "?";
}

bool BundleTriple::block_mode() const {
  switch (realization) {
    case Realization::LineBundle: return eC - eA <= ambient;
    case Realization::HM: return true;
    case Realization::Abstract: return false;
  }
  return false;
}

BundleTriple line_bundle_triple(int n, int eA, int eB, int eC) {
  if (n < 1) throw InputError("line-bundle triples need n >= 1");
  if (!(eA < eB && eB < eC)) throw InputError("line-bundle triple needs eA < eB < eC");
  BundleTriple t;
  t.A = {1, ChernPolynomial::line_bundle(n, eA)};
  t.B = {1, ChernPolynomial::line_bundle(n, eB)};
  t.C = {1, ChernPolynomial::line_bundle(n, eC)};
  t.m = binomial(n + eB - eA, n);
  t.n = binomial(n + eC - eB, n);
  t.r = binomial(n + eC - eA, n);
  t.realization = Realization::LineBundle;
  t.ambient = n;
  t.eA = eA;
  t.eB = eB;
  t.eC = eC;
  return t;
}

void validate_triple(const BundleTriple& t) {
  if (t.m < 1 || t.n < 1) throw InputError("triple needs m, n >= 1");
  if (t.r < 0) throw InputError("triple needs r >= 0");
  if (t.A.rank < 0 || t.B.rank < 0 || t.C.rank < 0) throw InputError("bundle ranks must be non-negative");
  const int n = t.A.chern.n();
  if (t.B.chern.n() != n || t.C.chern.n() != n) throw InputError("Chern polynomials of A, B, C live on different P^n");
}

CompositionTable::CompositionTable(Field field, std::size_t m, std::size_t n, std::size_t r)
    : field_(field), m_(m), n_(n), r_(r), data_(m * n * r, field.zero()) {}

CompositionTable line_bundle_table(int n, int eA, int eB, int eC, const Field& field) {
  if (!(eA < eB && eB < eC)) throw InputError("line_bundle_table needs eA < eB < eC");
  const auto gamma = monomial_basis(n, eB - eA);
  const auto sigma = monomial_basis(n, eC - eB);
  const auto tau = monomial_basis(n, eC - eA);
  std::map<Monomial, std::size_t> tau_index;
  for (std::size_t k = 0; k < tau.size(); ++k) tau_index.emplace(tau[k], k);
  CompositionTable t(field, gamma.size(), sigma.size(), tau.size());
  for (std::size_t j = 0; j < sigma.size(); ++j) {
    for (std::size_t i = 0; i < gamma.size(); ++i) {
      Monomial prod(static_cast<std::size_t>(n + 1));
      for (std::size_t v = 0; v < prod.size(); ++v) prod[v] = sigma[j][v] + gamma[i][v];
      t.at(j, i, tau_index.at(prod)) = field.one();
    }
  }
  return t;
}

void validate_monad(const MonadData& d) {
  validate_triple(d.triple);
  const auto& t = d.table;
  if (static_cast<long long>(t.m()) != d.triple.m || static_cast<long long>(t.n()) != d.triple.n ||
      static_cast<long long>(t.r()) != d.triple.r) {
    throw InputError("composition table dimensions do not match (m, n, r) of the triple");
  }
  if (d.a < 0 || d.b < 0 || d.c < 0) throw InputError("monad multiplicities must be non-negative");
  if (d.A.size() != t.m()) throw InputError("expected " + std::to_string(t.m()) + " matrices A_i");
  if (d.B.size() != t.n()) throw InputError("expected " + std::to_string(t.n()) + " matrices B_j");
  const auto a = static_cast<std::size_t>(d.a), b = static_cast<std::size_t>(d.b), c = static_cast<std::size_t>(d.c);
  for (std::size_t i = 0; i < d.A.size(); ++i) {
    if (d.A[i].rows() != b || d.A[i].cols() != a) throw InputError("A_" + std::to_string(i) + " must be b x a");
    if (!(d.A[i].field() == t.field())) throw InputError("A_" + std::to_string(i) + " is over a different field");
  }
  for (std::size_t j = 0; j < d.B.size(); ++j) {
    if (d.B[j].rows() != c || d.B[j].cols() != b) throw InputError("B_" + std::to_string(j) + " must be c x b");
    if (!(d.B[j].field() == t.field())) throw InputError("B_" + std::to_string(j) + " is over a different field");
  }
}

Representation rep_of_monad(const MonadData& d) {
  validate_monad(d);
  std::vector<Matrix> maps = d.A;
  maps.insert(maps.end(), d.B.begin(), d.B.end());
  return Representation(three_vertex(static_cast<int>(d.triple.m), static_cast<int>(d.triple.n)), {d.a, d.b, d.c}, std::move(maps),
                        d.field());
}

MonadData monad_from_rep(const BundleTriple& triple, const CompositionTable& table, const Representation& rep) {
  if (!(rep.quiver() == three_vertex(static_cast<int>(triple.m), static_cast<int>(triple.n)))) {
    throw InputError("representation must live on K_{m,n} with the triple's m and n");
  }
  MonadData d;
  d.triple = triple;
  d.table = table;
  d.a = rep.dims()[0];
  d.b = rep.dims()[1];
  d.c = rep.dims()[2];
  const auto m = static_cast<std::size_t>(triple.m);
  d.A.assign(rep.maps().begin(), rep.maps().begin() + static_cast<std::ptrdiff_t>(m));
  d.B.assign(rep.maps().begin() + static_cast<std::ptrdiff_t>(m), rep.maps().end());
  validate_monad(d);
  return d;
}

MonadData direct_sum(const MonadData& d1, const MonadData& d2) {
  if (!(d1.triple == d2.triple) || !(d1.table == d2.table)) throw InputError("direct_sum: monads use different triples");
  MonadData d = d1;
  d.a += d2.a;
  d.b += d2.b;
  d.c += d2.c;
  for (std::size_t i = 0; i < d.A.size(); ++i) d.A[i] = block_diag(d1.A[i], d2.A[i]);
  for (std::size_t j = 0; j < d.B.size(); ++j) d.B[j] = block_diag(d1.B[j], d2.B[j]);
  return d;
}

RelationCheck check_relations(const MonadData& d) {
  validate_monad(d);
  const auto& t = d.table;
  const auto a = static_cast<std::size_t>(d.a), c = static_cast<std::size_t>(d.c);
  std::vector<Matrix> sums(t.r(), Matrix(d.field(), c, a));
  if (a > 0 && c > 0) {
    for (std::size_t j = 0; j < t.n(); ++j) {
      if (d.B[j].is_zero()) continue;
      for (std::size_t i = 0; i < t.m(); ++i) {
        if (d.A[i].is_zero()) continue;
        std::optional<Matrix> prod;
        for (std::size_t k = 0; k < t.r(); ++k) {
          const Scalar& coeff = t.at(j, i, k);
          if (coeff.is_zero()) continue;
          if (!prod) prod = d.B[j] * d.A[i];
          sums[k] += prod->scaled(coeff);
        }
      }
    }
  }
  RelationCheck out;
  for (std::size_t k = 0; k < t.r(); ++k) {
    for (std::size_t row = 0; row < c; ++row) {
      for (std::size_t col = 0; col < a; ++col) {
        if (!sums[k](row, col).is_zero()) out.violations.push_back({k, row, col, sums[k](row, col)});
      }
    }
  }
  out.ok = out.violations.empty();
  return out;
}

MonadData complete_monad(const BundleTriple& triple, const CompositionTable& table, long long a, long long b, long long c,
                         std::vector<Matrix> A, std::uint64_t seed) {
  const Field& f = table.field();
  const auto ua = static_cast<std::size_t>(a), ub = static_cast<std::size_t>(b), uc = static_cast<std::size_t>(c);
  const std::size_t n = table.n();
  // Rows of B decouple: unknowns (j, s) for one row, equations (k, col).
  Matrix sys(f, table.r() * ua, n * ub);
  for (std::size_t j = 0; j < n; ++j)
    for (std::size_t i = 0; i < table.m(); ++i)
      for (std::size_t k = 0; k < table.r(); ++k) {
        const Scalar& coeff = table.at(j, i, k);
        if (coeff.is_zero()) continue;
        for (std::size_t s = 0; s < ub; ++s)
          for (std::size_t col = 0; col < ua; ++col) sys(k * ua + col, j * ub + s) += coeff * A[i](s, col);
      }
  const auto null = nullspace_basis(sys);
  Rng rng(seed);
  MonadData d;
  d.triple = triple;
  d.table = table;
  d.a = a;
  d.b = b;
  d.c = c;
  d.A = std::move(A);
  d.B.assign(n, Matrix(f, uc, ub));
  for (std::size_t row = 0; row < uc; ++row) {
    Vector x(n * ub, f.zero());
    for (const auto& v : null) {
      Scalar s = rng.scalar(f);
      for (std::size_t q = 0; q < x.size(); ++q) x[q] += s * v[q];
    }
    for (std::size_t j = 0; j < n; ++j)
      for (std::size_t s = 0; s < ub; ++s) d.B[j](row, s) = x[j * ub + s];
  }
  validate_monad(d);
  return d;
}

MonadCohomologyInfo cohomology_invariants(const BundleTriple& t, long long a, long long b, long long c) {
  validate_triple(t);
  MonadCohomologyInfo info;
  info.rank = b * t.B.rank - a * t.A.rank - c * t.C.rank;
  if (info.rank < 0) throw InputError("negative rank " + std::to_string(info.rank) + ": not monad data");
  info.chern = t.B.chern.pow(b) * t.A.chern.pow(-a) * t.C.chern.pow(-c);
  const int n = info.chern.n();
  if (info.rank < n) {
    for (int k = static_cast<int>(info.rank) + 1; k <= n; ++k) {
      if (info.chern[static_cast<std::size_t>(k)] != 0) info.chern_consistent = false;
    }
  }
  return info;
}

MonadCohomologyInfo cohomology_invariants(const MonadData& d) { return cohomology_invariants(d.triple, d.a, d.b, d.c); }

CriteriaReport monad_decomposability(long long a, long long b, long long c, long long m, long long n) {
  CriteriaReport r;
  r.q = a * a + b * b + c * c - m * a * b - n * b * c;
  r.simple_possible = r.q <= 1;
  r.forced_decomposable = r.q > 1;
  r.exceptional_possible = r.q == 1;
  if (r.forced_decomposable) r.notes.push_back("q > 1: every representation of K_{m,n} with these dims decomposes, hence so does the cohomology");
  return r;
}

std::string to_string(SummandKind k) {
  switch (k) {
    case SummandKind::Full: return "monad";
    case SummandKind::KernelType: return "kernel";
    case SummandKind::CokernelType: return "cokernel";
    case SummandKind::FreeFactor: return "free";
    case SummandKind::Degenerate: return "degenerate";
  }
  return "?";
}

SummandKind classify_summand(long long a, long long b, long long c) {
  if (b == 0) return SummandKind::Degenerate;
  if (a == 0 && c == 0) return SummandKind::FreeFactor;
  if (a == 0) return SummandKind::KernelType;
  if (c == 0) return SummandKind::CokernelType;
  return SummandKind::Full;
}

MonadDecomposition decompose_monad(const MonadData& d, std::uint64_t seed, int max_trials) {
  MonadDecomposition out;
  out.rep_report = decompose(rep_of_monad(d), max_trials, seed);
  for (std::size_t l = 0; l < out.rep_report.summands.size(); ++l) {
    MonadSummand s;
    s.data = monad_from_rep(d.triple, d.table, out.rep_report.summands[l]);
    s.kind = classify_summand(s.data.a, s.data.b, s.data.c);
    s.certificate = out.rep_report.summand_certificates[l];
    s.relations_ok = check_relations(s.data).ok;
    const auto& t = d.triple;
    s.rank = s.data.b * t.B.rank - s.data.a * t.A.rank - s.data.c * t.C.rank;
    out.summands.push_back(std::move(s));
  }
  return out;
}

std::string to_string(MonadVerdict v) {
  switch (v) {
    case MonadVerdict::Decomposable: return "cohomology decomposable";
    case MonadVerdict::Indecomposable: return "cohomology indecomposable";
    case MonadVerdict::IndecomposableHeuristic: return "cohomology indecomposable (heuristic)";
    case MonadVerdict::Unknown: return "unknown (heuristic)";
  }
  return "?";
}

VerdictReport cohomology_decomposability_verdict(const MonadData& d, const MonadDecomposition& dec) {
  VerdictReport v;
  v.block_mode = d.triple.block_mode();
  for (const auto& s : dec.summands) v.summand_ranks.push_back(s.rank);
  const std::size_t parts = dec.summands.size();
  if (parts >= 2) {
    v.verdict = MonadVerdict::Decomposable;
    v.explanation = "the representation splits into " + std::to_string(parts) + " summands; each is a monad whose cohomology is a summand";
    return v;
  }
  const bool schur = parts == 1 && dec.summands[0].certificate == Certificate::CertifiedSchur;
  if (!v.block_mode) {
    v.verdict = MonadVerdict::Unknown;
    v.explanation = "outside block mode only the forward implication holds; an indecomposable representation says nothing about the cohomology";
  } else if (schur) {
    v.verdict = MonadVerdict::Indecomposable;
    v.explanation = "block mode: the representation is Schur, hence indecomposable, hence so is the cohomology";
  } else if (parts == 1) {
    v.verdict = MonadVerdict::IndecomposableHeuristic;
    v.explanation = "block mode: no split found after the trial budget; indecomposability is heuristic";
  } else {
    v.verdict = MonadVerdict::Unknown;
    v.explanation = "zero monad";
  }
  return v;
}

namespace {

Matrix require_inverse(const Matrix& m, const char* name) {
  if (m.rows() != m.cols()) throw InputError(std::string(name) + " must be square");
  auto inv = inverse(m);
  if (!inv) throw InputError(std::string(name) + " is singular");
  return *inv;
}

std::vector<Matrix> recombine(const std::vector<Matrix>& xs, const Matrix& coeffs) {
  std::vector<Matrix> out;
  for (std::size_t i = 0; i < xs.size(); ++i) {
    Matrix acc(xs[i].field(), xs[i].rows(), xs[i].cols());
    for (std::size_t l = 0; l < xs.size(); ++l) {
      if (!coeffs(i, l).is_zero()) acc += xs[l].scaled(coeffs(i, l));
    }
    out.push_back(std::move(acc));
  }
  return out;
}

}  // namespace

MonadData change_hom_bases(const MonadData& d, const Matrix& P, const Matrix& S, const Matrix& T) {
  validate_monad(d);
  const auto& t = d.table;
  if (P.rows() != t.m() || S.rows() != t.n() || T.rows() != t.r()) throw InputError("basis changes must be m x m, n x n, r x r");
  const Matrix Pinv = require_inverse(P, "P"), Sinv = require_inverse(S, "S"), Tinv = require_inverse(T, "T");
  MonadData out = d;
  out.A = recombine(d.A, Pinv);
  out.B = recombine(d.B, Sinv);
  const std::size_t m = t.m(), n = t.n(), r = t.r();
  const Field& f = t.field();
  // c'[j][i][k] = sum S[j0][j] P[i0][i] c[j0][i0][k0] Tinv[k][k0], applied one index at a time
  CompositionTable s1(f, m, n, r), s2(f, m, n, r), s3(f, m, n, r);
  for (std::size_t j = 0; j < n; ++j)
    for (std::size_t i = 0; i < m; ++i)
      for (std::size_t i0 = 0; i0 < m; ++i0) {
        if (P(i0, i).is_zero()) continue;
        for (std::size_t k = 0; k < r; ++k) s1.at(j, i, k) += P(i0, i) * t.at(j, i0, k);
      }
  for (std::size_t j = 0; j < n; ++j)
    for (std::size_t j0 = 0; j0 < n; ++j0) {
      if (S(j0, j).is_zero()) continue;
      for (std::size_t i = 0; i < m; ++i)
        for (std::size_t k = 0; k < r; ++k) s2.at(j, i, k) += S(j0, j) * s1.at(j0, i, k);
    }
  for (std::size_t j = 0; j < n; ++j)
    for (std::size_t i = 0; i < m; ++i)
      for (std::size_t k = 0; k < r; ++k)
        for (std::size_t k0 = 0; k0 < r; ++k0) s3.at(j, i, k) += Tinv(k, k0) * s2.at(j, i, k0);
  out.table = std::move(s3);
  return out;
}

namespace {

void require_line_bundle(const MonadData& d) {
  if (d.triple.realization != Realization::LineBundle) throw InputError("operation needs a line-bundle realization");
  validate_monad(d);
  if (!(d.table == line_bundle_table(d.triple.ambient, d.triple.eA, d.triple.eB, d.triple.eC, d.field()))) {
    throw InputError("line-bundle monad must use the monomial composition table");
  }
}

}  // namespace

PolyMatrix monad_alpha(const MonadData& d) {
  require_line_bundle(d);
  const auto& t = d.triple;
  if (d.a == 0) return PolyMatrix(d.field(), t.ambient, std::vector<int>(static_cast<std::size_t>(d.b), t.eB), {});
  return expand_map(d.A, monomial_polys(d.field(), t.ambient, t.eB - t.eA), t.eA);
}

PolyMatrix monad_beta(const MonadData& d) {
  require_line_bundle(d);
  const auto& t = d.triple;
  if (d.b == 0) return PolyMatrix(d.field(), t.ambient, std::vector<int>(static_cast<std::size_t>(d.c), t.eC), {});
  return expand_map(d.B, monomial_polys(d.field(), t.ambient, t.eC - t.eB), t.eB);
}

bool MonadFiberReport::passed() const {
  return injectivity && surjectivity && injectivity->passed() && surjectivity->passed();
}

MonadFiberReport monad_fibers(const MonadData& d, const FiberOptions& opts) {
  MonadFiberReport out;
  if (d.triple.realization == Realization::Abstract) {
    out.note = "abstract triple: no fiber model, injectivity and surjectivity are not checked";
    return out;
  }
  if (d.triple.realization == Realization::HM) {
    out.note = "HM realization: fiber conditions are checked in the exterior fiber model";
    return out;
  }
  out.injectivity = global_injective(monad_alpha(d), opts);
  FiberOptions o2 = opts;
  o2.seed = derive_seed(opts.seed, 1);
  out.surjectivity = global_surjective(monad_beta(d), o2);
  return out;
}

long long monad_morphism_dim(const MonadData& d1, const MonadData& d2) {
  require_line_bundle(d1);
  require_line_bundle(d2);
  if (!(d1.triple == d2.triple)) throw InputError("monad_morphism_dim: monads use different triples");
  const Field& f = d1.field();
  const PolyMatrix al1 = monad_alpha(d1), al2 = monad_alpha(d2), be1 = monad_beta(d1), be2 = monad_beta(d2);
  const auto a1 = static_cast<std::size_t>(d1.a), b1 = static_cast<std::size_t>(d1.b), c1 = static_cast<std::size_t>(d1.c);
  const auto a2 = static_cast<std::size_t>(d2.a), b2 = static_cast<std::size_t>(d2.b), c2 = static_cast<std::size_t>(d2.c);
  const auto m = static_cast<std::size_t>(d1.triple.m), n = static_cast<std::size_t>(d1.triple.n);
  // unknowns: f (a2 x a1), g (b2 x b1), h (c2 x c1)
  const std::size_t nf = a2 * a1, ng = b2 * b1, nh = c2 * c1;
  auto fi = [&](std::size_t t, std::size_t c) { return t * a1 + c; };
  auto gi = [&](std::size_t r, std::size_t s) { return nf + r * b1 + s; };
  auto hi = [&](std::size_t r, std::size_t s) { return nf + ng + r * c1 + s; };
  const std::size_t eq1 = b2 * a1 * m, eq2 = c2 * b1 * n;
  Matrix sys(f, eq1 + eq2, nf + ng + nh);
  // g alpha1 - alpha2 f = 0, entry (r, c), monomial mu
  for (std::size_t s = 0; s < b1; ++s)
    for (std::size_t c = 0; c < a1; ++c) {
      const Vector co = al1(s, c).coefficients();
      for (std::size_t r = 0; r < b2; ++r)
        for (std::size_t mu = 0; mu < m; ++mu) sys((r * a1 + c) * m + mu, gi(r, s)) += co[mu];
    }
  for (std::size_t r = 0; r < b2; ++r)
    for (std::size_t t = 0; t < a2; ++t) {
      const Vector co = al2(r, t).coefficients();
      for (std::size_t c = 0; c < a1; ++c)
        for (std::size_t mu = 0; mu < m; ++mu) sys((r * a1 + c) * m + mu, fi(t, c)) -= co[mu];
    }
  // h beta1 - beta2 g = 0, entry (r, s), monomial nu
  for (std::size_t u = 0; u < c1; ++u)
    for (std::size_t s = 0; s < b1; ++s) {
      const Vector co = be1(u, s).coefficients();
      for (std::size_t r = 0; r < c2; ++r)
        for (std::size_t nu = 0; nu < n; ++nu) sys(eq1 + (r * b1 + s) * n + nu, hi(r, u)) += co[nu];
    }
  for (std::size_t r = 0; r < c2; ++r)
    for (std::size_t t = 0; t < b2; ++t) {
      const Vector co = be2(r, t).coefficients();
      for (std::size_t s = 0; s < b1; ++s)
        for (std::size_t nu = 0; nu < n; ++nu) sys(eq1 + (r * b1 + s) * n + nu, gi(t, s)) -= co[nu];
    }
  return static_cast<long long>(nf + ng + nh) - static_cast<long long>(rank(sys));
}

}  // namespace qbt
