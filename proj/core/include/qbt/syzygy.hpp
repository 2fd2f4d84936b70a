#pragma once

#include <cstdint>
#include <vector>

#include "qbt/chern.hpp"
#include "qbt/cokernel.hpp"
#include "qbt/decompose.hpp"
#include "qbt/fiber_check.hpp"

namespace qbt {

/// Kernel of (+)_j O(-d_j)^{a_j} -> O^c on P^n.
struct SyzygyPresentation {
  int n = 2;
  std::vector<int> degrees;       ///< d_1 > d_2 > ... > 0
  std::vector<long long> as;      ///< a_j
  long long c = 0;
  PolyMatrix alpha;               ///< c x sum(a_j); block j has entries of degree d_j
  Representation rep;            ///< over star_quiver(w_j), dims (c, a_1, a_2, ...)
  long long rank = 0;             ///< sum(a_j) - c
  ChernPolynomial chern;          ///< prod (1 - d_j t)^{a_j}
  FiberReport surjectivity;

  bool is_bundle() const { return surjectivity.passed(); }
};

/// Arrow counts w_j = C(n + d_j, d_j).
std::vector<int> syzygy_arrow_counts(int n, const std::vector<int>& degrees);

SyzygyPresentation syzygy_from_rep(const Representation& rep, int n, const std::vector<int>& degrees, const FiberOptions& fiber = {},
                                   bool enforce_rank_bound = true);

ChernPolynomial chern_syzygy(int n, const std::vector<int>& degrees, const std::vector<long long>& as);

/// q over the vertex-indexed form of the star quiver at dims (c, a_1, a_2, ...).
CriteriaReport syzygy_decomposability(int n, const std::vector<int>& degrees, const std::vector<long long>& as, long long c);

struct SyzygyDecomposition {
  DecompositionReport rep_report;
  std::vector<SyzygyPresentation> summands;
  std::vector<bool> free_factor;  ///< summand with c = 0
};

SyzygyDecomposition decompose_syzygy(const SyzygyPresentation& p, std::uint64_t seed = 0, int max_trials = kDefaultMaxTrials,
                                     const FiberOptions& fiber = {});

}  // namespace qbt
