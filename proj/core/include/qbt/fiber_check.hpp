#pragma once

#include <cstdint>
#include <optional>
#include <string>
#include <vector>

#include "qbt/groebner.hpp"
#include "qbt/poly.hpp"

namespace qbt {

enum class FiberMode { Injective, Surjective };

enum class FiberVerdict {
  PassProbabilistic,
  PassCertified,
  Fail,           ///< rank drops at the reported witness point
  FailCertified,  ///< sampling found nothing but the minors have a common projective zero
};

enum class CertificationStatus { NotAttempted, Certified, Refuted, Inconclusive };

std::string to_string(FiberMode m);
std::string to_string(FiberVerdict v);
std::string to_string(CertificationStatus s);
FiberMode parse_fiber_mode(const std::string& text);

struct FiberReport {
  FiberMode mode = FiberMode::Injective;
  FiberVerdict verdict = FiberVerdict::PassProbabilistic;
  std::size_t samples = 0;       ///< random points evaluated
  std::uint64_t prime = 0;       ///< sampling field
  std::optional<Vector> witness; ///< normalized point over F_prime where the rank drops
  std::optional<std::size_t> witness_trial;
  CertificationStatus certification = CertificationStatus::NotAttempted;
  std::string note;
  double elapsed_seconds = 0;

  bool passed() const { return verdict == FiberVerdict::PassProbabilistic || verdict == FiberVerdict::PassCertified; }
};

struct FiberOptions {
  std::size_t trials = 200;
  std::uint64_t seed = 0;
  bool certify = true;
  /// Per trial, also search the random line through the sampled point for degeneracy points.
  bool line_probes = true;
  int max_n = 3;
  int max_minor_degree = 12;
  std::size_t max_minors = 200;
  GroebnerOptions groebner;
};

/// The matrix used for sampling: reduced mod the default prime when over Q. Rejects F_p with p <= 2^30.
PolyMatrix sampling_matrix(const PolyMatrix& m);

/// True when evaluate(m, point) has full rank in the given mode (rank = cols or rank = rows).
bool full_rank_at(const PolyMatrix& m, FiberMode mode, const Vector& point);

FiberReport probabilistic_full_rank(const PolyMatrix& m, FiberMode mode, std::size_t trials, std::uint64_t seed, bool line_probes = true);

/// All maximal minors; size must be min(rows, cols). Minors are listed by row subsets (injective
/// shape, rows >= cols) or column subsets, in lexicographic order.
std::vector<HomogeneousPoly> minors_ideal(const PolyMatrix& m, std::size_t size);

/// Number of maximal minors and the largest minor degree, without computing them.
std::size_t maximal_minor_count(const PolyMatrix& m);
int max_minor_degree(const PolyMatrix& m);

FiberReport global_injective(const PolyMatrix& m, const FiberOptions& opts = {});
FiberReport global_surjective(const PolyMatrix& m, const FiberOptions& opts = {});
FiberReport global_full_rank(const PolyMatrix& m, FiberMode mode, const FiberOptions& opts = {});

}  // namespace qbt
