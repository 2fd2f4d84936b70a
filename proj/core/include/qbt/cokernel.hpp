#pragma once

#include <cstdint>
#include <optional>
#include <string>
#include <vector>

#include "qbt/chern.hpp"
#include "qbt/decompose.hpp"
#include "qbt/fiber_check.hpp"
#include "qbt/poly.hpp"
#include "qbt/representation.hpp"

namespace qbt {

/// E = O(e), F = O(f) on P^n.
struct LineBundlePair {
  int n = 2;
  int e = 0;
  int f = 1;
  friend bool operator==(const LineBundlePair&, const LineBundlePair&) = default;
};

/// Parses "n,e,f".
LineBundlePair parse_pair(const std::string& text);

struct ValidityReport {
  bool valid = false;
  long long w = 0;  ///< dim Hom(E, F) = C(n + f - e, n)
  std::vector<std::string> failures;
};

ValidityReport validate_pair(int n, int e, int f);
inline ValidityReport validate_pair(const LineBundlePair& p) { return validate_pair(p.n, p.e, p.f); }

struct CokernelPresentation {
  LineBundlePair pair;
  long long a = 0, b = 0;
  PolyMatrix alpha;          ///< b x a, entries of degree f - e
  Representation rep;        ///< over K_w, dims (a, b)
  long long rank = 0;        ///< b - a
  ChernPolynomial chern;
  FiberReport injectivity;

  /// The cokernel is a bundle: alpha is fiberwise injective.
  bool is_bundle() const { return injectivity.passed(); }
};

/// alpha = sum_i A_i * sigma_i over the graded-lex monomial basis of degree f - e, then a global
/// injectivity check. With enforce_rank_bound the rank b - a must be at least n.
CokernelPresentation cokernel_from_rep(const Representation& rep, const LineBundlePair& pair, const FiberOptions& fiber = {},
                                       bool enforce_rank_bound = true);

/// (1 + f t)^b (1 + e t)^{-a} mod t^{n+1}.
ChernPolynomial chern_cokernel(const LineBundlePair& pair, long long a, long long b);

struct CriteriaReport {
  long long q = 0;
  bool simple_possible = false;
  bool forced_decomposable = false;
  bool exceptional_possible = false;
  bool exceptional_generic = false;
  std::vector<std::string> notes;
};

CriteriaReport cokernel_criteria(const LineBundlePair& pair, long long a, long long b);

struct CokernelDecomposition {
  DecompositionReport rep_report;
  std::vector<CokernelPresentation> summands;
  std::vector<bool> free_factor;  ///< summand with a = 0, i.e. F^{b_i}
  std::vector<std::string> notes;
};

CokernelDecomposition decompose_cokernel(const CokernelPresentation& p, std::uint64_t seed = 0, int max_trials = kDefaultMaxTrials,
                                         const FiberOptions& fiber = {});

/// dim Hom(C1, C2) from polynomial linear algebra: pairs (G, H) of scalar matrices with
/// G alpha1 = alpha2 H, modulo those with G = 0.
long long global_hom_cokernel(const CokernelPresentation& p1, const CokernelPresentation& p2);

struct ExtDimInterval {
  int degree = 0;
  long long lo = 0, hi = 0;
  bool exact() const { return lo == hi; }
};

struct ExtTable {
  std::vector<ExtDimInterval> ext;  ///< Ext^0 .. Ext^n
  long long hom_minus_ext1 = 0;     ///< dim Hom - dim Ext^1, always exact
  std::vector<std::string> notes;
};

/// Dimension chase through Hom(-, C) applied to 0 -> E^a -> F^b -> C -> 0, with closed-form
/// line-bundle cohomology on P^n.
ExtTable ext_table_cokernel(const LineBundlePair& pair, long long a, long long b);
inline ExtTable ext_table_cokernel(const CokernelPresentation& p) { return ext_table_cokernel(p.pair, p.a, p.b); }

/// Pins Ext^0 and Ext^1 from an exact dim Hom(C, C).
ExtTable pin_with_hom(ExtTable t, long long hom);

/// h^i(P^n, O(k)).
long long line_bundle_cohomology(int n, int i, long long k);

}  // namespace qbt
