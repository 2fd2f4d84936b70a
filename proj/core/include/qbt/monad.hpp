#pragma once

#include <cstdint>
#include <optional>
#include <string>
#include <vector>

#include "qbt/chern.hpp"
#include "qbt/cokernel.hpp"
#include "qbt/decompose.hpp"
#include "qbt/fiber_check.hpp"

namespace qbt {

struct BundleDescriptor {
  long long rank = 1;
  ChernPolynomial chern;
  friend bool operator==(const BundleDescriptor&, const BundleDescriptor&) = default;
};

enum class Realization { Abstract, LineBundle, HM };

std::string to_string(Realization r);

/// Shape of a monad A^a -> B^b -> C^c; A, B, C are assumed simple.
struct BundleTriple {
  BundleDescriptor A, B, C;
  long long m = 1;  ///< dim Hom(A,B)
  long long n = 1;  ///< dim Hom(B,C)
  long long r = 1;  ///< dim Hom(A,C)
  Realization realization = Realization::Abstract;
  int ambient = 0;  ///< n of P^n for concrete realizations
  int eA = 0, eB = 0, eC = 0;
  int p = 0;
  bool simplicity_assumed = true;

  /// Line bundles O(eA), O(eB), O(eC) with eC - eA <= n sit inside one block collection; HM is always in block mode.
  bool block_mode() const;
  friend bool operator==(const BundleTriple&, const BundleTriple&) = default;
};

BundleTriple line_bundle_triple(int n, int eA, int eB, int eC);
void validate_triple(const BundleTriple& t);

/// sigma_j o gamma_i = sum_k c[j][i][k] tau_k.
class CompositionTable {
 public:
  CompositionTable() = default;
  CompositionTable(Field field, std::size_t m, std::size_t n, std::size_t r);

  const Field& field() const { return field_; }
  std::size_t m() const { return m_; }
  std::size_t n() const { return n_; }
  std::size_t r() const { return r_; }
  Scalar& at(std::size_t j, std::size_t i, std::size_t k) { return data_[(j * m_ + i) * r_ + k]; }
  const Scalar& at(std::size_t j, std::size_t i, std::size_t k) const { return data_[(j * m_ + i) * r_ + k]; }

  friend bool operator==(const CompositionTable&, const CompositionTable&) = default;

 private:
  Field field_;
  std::size_t m_ = 0, n_ = 0, r_ = 0;
  std::vector<Scalar> data_;
};

/// Monomial multiplication H^0(O(eB-eA)) x H^0(O(eC-eB)) -> H^0(O(eC-eA)) in graded-lex bases.
CompositionTable line_bundle_table(int n, int eA, int eB, int eC, const Field& field = Field::rationals());

struct MonadData {
  BundleTriple triple;
  CompositionTable table;
  long long a = 0, b = 0, c = 0;
  std::vector<Matrix> A;  ///< m matrices, b x a
  std::vector<Matrix> B;  ///< n matrices, c x b

  const Field& field() const { return table.field(); }
};

/// Shape checks against triple and table; throws InputError.
void validate_monad(const MonadData& d);

/// Representation of K_{m,n} with dims (a, b, c): A_i on arrows 0..m-1, B_j on arrows m..m+n-1.
Representation rep_of_monad(const MonadData& d);
/// Inverse of rep_of_monad for a representation of K_{m,n}.
MonadData monad_from_rep(const BundleTriple& triple, const CompositionTable& table, const Representation& rep);

MonadData direct_sum(const MonadData& d1, const MonadData& d2);

struct RelationViolation {
  std::size_t k = 0, row = 0, col = 0;
  Scalar value;
};

struct RelationCheck {
  bool ok = true;
  std::vector<RelationViolation> violations;
};

/// For every k: sum_{j,i} c[j][i][k] B_j A_i = 0 as a c x a matrix.
RelationCheck check_relations(const MonadData& d);

/// Random B solving the relations for the given A (possibly zero when the solution space is trivial).
MonadData complete_monad(const BundleTriple& triple, const CompositionTable& table, long long a, long long b, long long c,
                         std::vector<Matrix> A, std::uint64_t seed);

struct MonadCohomologyInfo {
  long long rank = 0;
  ChernPolynomial chern;
  /// Chern coefficients above the rank vanish (checked only when rank < n).
  bool chern_consistent = true;
};

MonadCohomologyInfo cohomology_invariants(const BundleTriple& t, long long a, long long b, long long c);
MonadCohomologyInfo cohomology_invariants(const MonadData& d);

/// q = a^2 + b^2 + c^2 - m ab - n bc.
CriteriaReport monad_decomposability(long long a, long long b, long long c, long long m, long long n);

enum class SummandKind { Full, KernelType, CokernelType, FreeFactor, Degenerate };

std::string to_string(SummandKind k);
SummandKind classify_summand(long long a, long long b, long long c);

struct MonadSummand {
  MonadData data;
  SummandKind kind = SummandKind::Full;
  Certificate certificate = Certificate::HeuristicIndecomposable;
  bool relations_ok = true;
  long long rank = 0;
};

struct MonadDecomposition {
  DecompositionReport rep_report;
  std::vector<MonadSummand> summands;
};

MonadDecomposition decompose_monad(const MonadData& d, std::uint64_t seed = 0, int max_trials = kDefaultMaxTrials);

enum class MonadVerdict { Decomposable, Indecomposable, IndecomposableHeuristic, Unknown };

std::string to_string(MonadVerdict v);

struct VerdictReport {
  MonadVerdict verdict = MonadVerdict::Unknown;
  bool block_mode = false;
  std::vector<long long> summand_ranks;
  std::string explanation;
};

VerdictReport cohomology_decomposability_verdict(const MonadData& d, const MonadDecomposition& dec);

/// New hom-space bases gamma' = gamma P, sigma' = sigma S, tau' = tau T (columns hold the new basis
/// vectors in old coordinates); coefficients and table are transformed consistently.
MonadData change_hom_bases(const MonadData& d, const Matrix& P, const Matrix& S, const Matrix& T);

/// Polynomial matrices of alpha (b x a) and beta (c x b) for a line-bundle realization.
PolyMatrix monad_alpha(const MonadData& d);
PolyMatrix monad_beta(const MonadData& d);

struct MonadFiberReport {
  std::optional<FiberReport> injectivity;
  std::optional<FiberReport> surjectivity;
  std::string note;
  bool passed() const;
};

/// Fiberwise injectivity of alpha and surjectivity of beta; only line-bundle realizations are evaluated here.
MonadFiberReport monad_fibers(const MonadData& d, const FiberOptions& opts = {});

/// Dimension of the space of monad morphisms (f, g, h) with g alpha1 = alpha2 f and h beta1 = beta2 g,
/// solved on polynomial coefficients; line-bundle realizations only.
long long monad_morphism_dim(const MonadData& d1, const MonadData& d2);

}  // namespace qbt
