#include "qbt/syzygy.hpp"

namespace qbt {

std::vector<int> syzygy_arrow_counts(int n, const std::vector<int>& degrees) {
  std::vector<int> ws;
  for (int d : degrees) ws.push_back(static_cast<int>(binomial(n + d, d)));
  return ws;
}

namespace {

void check_degrees(int n, const std::vector<int>& degrees) {
  if (n < 1) throw InputError("syzygy bundles need n >= 1");
  if (degrees.empty()) throw InputError("at least one degree is required");
  for (std::size_t j = 0; j < degrees.size(); ++j) {
    if (degrees[j] <= 0) throw InputError("degrees must be positive");
    if (j > 0 && degrees[j] >= degrees[j - 1]) throw InputError("degrees must be strictly decreasing");
  }
}

}  // namespace

ChernPolynomial chern_syzygy(int n, const std::vector<int>& degrees, const std::vector<long long>& as) {
  if (degrees.size() != as.size()) throw InputError("one multiplicity per degree required");
  ChernPolynomial c(n);
  for (std::size_t j = 0; j < degrees.size(); ++j) c = c * ChernPolynomial::line_bundle(n, -degrees[j]).pow(as[j]);
  return c;
}

SyzygyPresentation syzygy_from_rep(const Representation& rep, int n, const std::vector<int>& degrees, const FiberOptions& fiber,
                                   bool enforce_rank_bound) {
  check_degrees(n, degrees);
  const std::vector<int> ws = syzygy_arrow_counts(n, degrees);
  if (!(rep.quiver() == star_quiver(ws))) {
    std::string msg = "representation must live on the star quiver with arrow counts";
    for (int w : ws) msg += " " + std::to_string(w);
    throw InputError(msg);
  }
  SyzygyPresentation p;
  p.n = n;
  p.degrees = degrees;
  p.c = rep.dims()[0];
  long long total = 0;
  for (std::size_t j = 0; j < degrees.size(); ++j) {
    p.as.push_back(rep.dims()[j + 1]);
    total += rep.dims()[j + 1];
  }
  p.rank = total - p.c;
  if (enforce_rank_bound && p.rank < 1) throw InputError("rank sum(a_j) - c = " + std::to_string(p.rank) + " is below 1");
  p.rep = rep;
  std::size_t arrow = 0;
  PolyMatrix alpha(rep.field(), n, std::vector<int>(static_cast<std::size_t>(p.c), 0), {});
  for (std::size_t j = 0; j < degrees.size(); ++j) {
    std::vector<Matrix> block(rep.maps().begin() + static_cast<std::ptrdiff_t>(arrow),
                              rep.maps().begin() + static_cast<std::ptrdiff_t>(arrow + ws[j]));
    arrow += static_cast<std::size_t>(ws[j]);
    alpha = hcat(alpha, expand_map(block, monomial_polys(rep.field(), n, degrees[j]), -degrees[j]));
  }
  p.alpha = std::move(alpha);
  p.chern = chern_syzygy(n, degrees, p.as);
  p.surjectivity = global_surjective(p.alpha, fiber);
  return p;
}

CriteriaReport syzygy_decomposability(int n, const std::vector<int>& degrees, const std::vector<long long>& as, long long c) {
  check_degrees(n, degrees);
  if (degrees.size() != as.size()) throw InputError("one multiplicity per degree required");
  DimensionVector v{c};
  v.insert(v.end(), as.begin(), as.end());
  CriteriaReport r;
  r.q = tits_form(star_quiver(syzygy_arrow_counts(n, degrees)), v);
  r.simple_possible = r.q <= 1;
  r.forced_decomposable = r.q > 1;
  r.exceptional_possible = r.q == 1;
  if (r.forced_decomposable) r.notes.push_back("q > 1: every representation of this dimension vector decomposes, hence so does the syzygy bundle");
  return r;
}

SyzygyDecomposition decompose_syzygy(const SyzygyPresentation& p, std::uint64_t seed, int max_trials, const FiberOptions& fiber) {
  SyzygyDecomposition out;
  out.rep_report = decompose(p.rep, max_trials, seed);
  for (const auto& s : out.rep_report.summands) {
    out.summands.push_back(syzygy_from_rep(s, p.n, p.degrees, fiber, false));
    out.free_factor.push_back(s.dims()[0] == 0);
  }
  return out;
}

}  // namespace qbt
