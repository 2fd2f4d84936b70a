#include "qbt/cokernel.hpp"

#include <algorithm>
#include <sstream>

namespace qbt {

LineBundlePair parse_pair(const std::string& text) {
  std::stringstream ss(text);
  std::string item;
  std::vector<int> v;
  while (std::getline(ss, item, ',')) {
    try {
      std::size_t used = 0;
      v.push_back(std::stoi(item, &used));
      if (used != item.size()) throw std::invalid_argument(item);
    } catch (const std::exception&) {
      throw InputError("bad number '" + item + "' in pair '" + text + "'");
    }
  }
  if (v.size() != 3) throw InputError("pair must be n,e,f, got '" + text + "'");
  return {v[0], v[1], v[2]};
}

ValidityReport validate_pair(int n, int e, int f) {
  if (n < 2) throw InputError("line-bundle pairs need n >= 2");
  ValidityReport r;
  const int d = f - e;
  r.w = d >= 0 ? binomial(n + d, n) : 0;
  if (f <= e) r.failures.push_back("Hom(F,E) = H^0(O(e-f)) is nonzero: need f > e");
  if (d < 0) r.failures.push_back("E^v (x) F = O(f-e) is not globally generated: need f >= e");
  if (r.w < 3) r.failures.push_back("w = dim Hom(E,F) = " + std::to_string(r.w) + " < 3");
  r.valid = r.failures.empty();
  return r;
}

namespace {

void require_valid(const LineBundlePair& p) {
  ValidityReport v = validate_pair(p);
  if (!v.valid) {
    std::string msg = "invalid pair (" + std::to_string(p.n) + "," + std::to_string(p.e) + "," + std::to_string(p.f) + "):";
    for (const auto& s : v.failures) msg += " " + s + ";";
    throw InputError(msg);
  }
}

bool is_kronecker(const Quiver& q, std::size_t w) {
  if (q.vertex_count() != 2 || q.arrow_count() != w) return false;
  return std::all_of(q.arrows().begin(), q.arrows().end(), [](const Arrow& a) { return a.tail == 0 && a.head == 1; });
}

}  // namespace

CokernelPresentation cokernel_from_rep(const Representation& rep, const LineBundlePair& pair, const FiberOptions& fiber,
                                       bool enforce_rank_bound) {
  require_valid(pair);
  const long long w = validate_pair(pair).w;
  if (!is_kronecker(rep.quiver(), static_cast<std::size_t>(w))) {
    throw InputError("representation must live on the Kronecker quiver with w = " + std::to_string(w) + " arrows");
  }
  CokernelPresentation p;
  p.pair = pair;
  p.a = rep.dims()[0];
  p.b = rep.dims()[1];
  p.rank = p.b - p.a;
  if (enforce_rank_bound && p.rank < pair.n) {
    throw InputError("rank b - a = " + std::to_string(p.rank) + " is below n = " + std::to_string(pair.n));
  }
  p.rep = rep;
  p.alpha = expand_map(rep.maps(), monomial_polys(rep.field(), pair.n, pair.f - pair.e), pair.e);
  p.chern = chern_cokernel(pair, p.a, p.b);
  p.injectivity = global_injective(p.alpha, fiber);
  return p;
}

ChernPolynomial chern_cokernel(const LineBundlePair& pair, long long a, long long b) {
  return ChernPolynomial::line_bundle(pair.n, pair.f).pow(b) * ChernPolynomial::line_bundle(pair.n, pair.e).pow(-a);
}

CriteriaReport cokernel_criteria(const LineBundlePair& pair, long long a, long long b) {
  require_valid(pair);
  const long long w = validate_pair(pair).w;
  CriteriaReport r;
  r.q = a * a + b * b - w * a * b;
  r.simple_possible = r.q <= 1;
  r.forced_decomposable = r.q > 1;
  r.exceptional_possible = r.q == 1;
  const int d = pair.f - pair.e;
  const bool steiner = d >= 1 && d <= pair.n;
  r.exceptional_generic = r.q == 1 && steiner;
  if (r.forced_decomposable) r.notes.push_back("q > 1: every representation of this dimension vector decomposes, hence so does the cokernel");
  if (r.simple_possible) r.notes.push_back("q <= 1: simplicity is possible but not implied");
  if (r.exceptional_possible && !r.exceptional_generic) {
    r.notes.push_back("q = 1 is necessary for exceptionality, not sufficient; (O(e), O(f)) is not strongly exceptional here, so exceptionality is not guaranteed");
  }
  if (r.exceptional_generic) r.notes.push_back("Steiner case with q = 1: the generic cokernel is exceptional");
  return r;
}

CokernelDecomposition decompose_cokernel(const CokernelPresentation& p, std::uint64_t seed, int max_trials, const FiberOptions& fiber) {
  CokernelDecomposition out;
  out.rep_report = decompose(p.rep, max_trials, seed);
  for (const auto& s : out.rep_report.summands) {
    out.summands.push_back(cokernel_from_rep(s, p.pair, fiber, false));
    out.free_factor.push_back(s.dims()[0] == 0);
  }
  const auto& cert = out.rep_report.certificate;
  if (out.summands.size() >= 2) {
    out.notes.push_back("representation splits; the cokernel splits accordingly");
  } else if (cert == Certificate::CertifiedSchur) {
    out.notes.push_back("representation is Schur, so the cokernel is simple and indecomposable");
  } else if (cert == Certificate::HeuristicIndecomposable) {
    out.notes.push_back("no split found; bundle-side indecomposability is certified only in the Schur case");
  }
  return out;
}

long long global_hom_cokernel(const CokernelPresentation& p1, const CokernelPresentation& p2) {
  if (!(p1.pair == p2.pair)) throw InputError("global_hom_cokernel: presentations use different pairs");
  if (!(p1.alpha.field() == p2.alpha.field())) throw InputError("global_hom_cokernel: presentations use different fields");
  const Field& f = p1.alpha.field();
  const auto a1 = static_cast<std::size_t>(p1.a), b1 = static_cast<std::size_t>(p1.b);
  const auto a2 = static_cast<std::size_t>(p2.a), b2 = static_cast<std::size_t>(p2.b);
  const auto w = static_cast<std::size_t>(validate_pair(p1.pair).w);
  // coefficient vectors of the entries
  std::vector<Vector> c1(b1 * a1), c2(b2 * a2);
  for (std::size_t s = 0; s < b1; ++s)
    for (std::size_t c = 0; c < a1; ++c) c1[s * a1 + c] = p1.alpha(s, c).coefficients();
  for (std::size_t r = 0; r < b2; ++r)
    for (std::size_t t = 0; t < a2; ++t) c2[r * a2 + t] = p2.alpha(r, t).coefficients();
  // unknowns: G (b2 x b1) then H (a2 x a1); equations: entries of G alpha1 - alpha2 H, per monomial
  const std::size_t ng = b2 * b1, nh = a2 * a1;
  Matrix sys(f, b2 * a1 * w, ng + nh);
  Matrix hsys(f, b2 * a1 * w, nh);
  auto row = [&](std::size_t r, std::size_t c, std::size_t mu) { return (r * a1 + c) * w + mu; };
  for (std::size_t r = 0; r < b2; ++r)
    for (std::size_t s = 0; s < b1; ++s)
      for (std::size_t c = 0; c < a1; ++c)
        for (std::size_t mu = 0; mu < w; ++mu) sys(row(r, c, mu), r * b1 + s) += c1[s * a1 + c][mu];
  for (std::size_t t = 0; t < a2; ++t)
    for (std::size_t c = 0; c < a1; ++c)
      for (std::size_t r = 0; r < b2; ++r)
        for (std::size_t mu = 0; mu < w; ++mu) {
          const Scalar& x = c2[r * a2 + t][mu];
          if (x.is_zero()) continue;
          sys(row(r, c, mu), ng + t * a1 + c) -= x;
          hsys(row(r, c, mu), t * a1 + c) -= x;
        }
  const long long nullity = static_cast<long long>(ng + nh) - static_cast<long long>(rank(sys));
  const long long h_nullity = static_cast<long long>(nh) - static_cast<long long>(rank(hsys));
  return nullity - h_nullity;
}

long long line_bundle_cohomology(int n, int i, long long k) {
  if (i == 0) return k >= 0 ? binomial(n + k, n) : 0;
  if (i == n) return k <= -n - 1 ? binomial(-k - 1, n) : 0;
  return 0;
}

ExtTable ext_table_cokernel(const LineBundlePair& pair, long long a, long long b) {
  require_valid(pair);
  const int n = pair.n;
  const long long d = pair.f - pair.e;
  const long long w = validate_pair(pair).w;
  // h^i(C(-f)) from 0 -> O(-d)^a -> O^b -> C(-f) -> 0
  std::vector<long long> hf(static_cast<std::size_t>(n + 1), 0);
  hf[0] = b * line_bundle_cohomology(n, 0, 0) - a * line_bundle_cohomology(n, 0, -d);
  hf[static_cast<std::size_t>(n - 1)] += a * line_bundle_cohomology(n, n, -d);
  // h^0(C(-e)) from 0 -> O^a -> O(d)^b -> C(-e) -> 0; higher cohomology vanishes
  const long long he0 = b * w - a;
  const long long x1 = b * hf[0], x2 = a * he0, x3 = b * hf[1];

  ExtTable t;
  t.hom_minus_ext1 = x1 - x2 - x3;
  const long long hom_lo = std::max({x1 - x2, b > a ? 1LL : 0LL, 0LL});
  const long long hom_hi = x1;
  t.ext.push_back({0, hom_lo, hom_hi});
  t.ext.push_back({1, hom_lo - t.hom_minus_ext1, hom_hi - t.hom_minus_ext1});
  for (int i = 2; i <= n; ++i) {
    const long long v = b * hf[static_cast<std::size_t>(i)];
    t.ext.push_back({i, v, v});
  }
  t.notes.push_back("Ext^i for i >= 2 is flanked by vanishing groups and exact");
  if (hom_lo != hom_hi) {
    t.notes.push_back("Hom and Ext^1 depend on the rank of H^0(F^b,C) -> H^0(E^a,C); only hom - ext1 = " +
                      std::to_string(t.hom_minus_ext1) + " is pinned");
  }
  return t;
}

ExtTable pin_with_hom(ExtTable t, long long hom) {
  if (hom < t.ext[0].lo || hom > t.ext[0].hi) {
    throw InputError("dim Hom = " + std::to_string(hom) + " lies outside the chased interval [" + std::to_string(t.ext[0].lo) + ", " +
                     std::to_string(t.ext[0].hi) + "]");
  }
  t.ext[0].lo = t.ext[0].hi = hom;
  t.ext[1].lo = t.ext[1].hi = hom - t.hom_minus_ext1;
  t.notes.push_back("Hom pinned by the section-level computation");
  return t;
}

}  // namespace qbt
