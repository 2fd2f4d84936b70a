#pragma once

#include <cstdint>
#include <string>
#include <vector>

#include "qbt/representation.hpp"

namespace qbt {

enum class Certificate { CertifiedSchur, CertifiedSplit, HeuristicIndecomposable };

std::string to_string(Certificate c);

struct DecompositionReport {
  std::vector<Representation> summands;
  /// Per summand: CertifiedSchur or HeuristicIndecomposable.
  std::vector<Certificate> summand_certificates;
  /// Per vertex, columns are the summand bases in summand order; T_h^{-1} A_a T_t is block diagonal.
  std::vector<Matrix> change_of_basis;
  Certificate certificate = Certificate::CertifiedSplit;
  /// Random trials spent on the summands that stayed unsplit (reported with HeuristicIndecomposable).
  int trials = 0;
};

inline constexpr int kDefaultMaxTrials = 24;

/// Endomorphism-idempotent splitting. Each echelon basis element of End(R) is tried first, then
/// up to max_trials random endomorphisms; a coprime factorization f*g of the minimal polynomial of
/// e yields the idempotent u(e)f(e) from u*f + v*g = 1.
DecompositionReport decompose(const Representation& r, int max_trials = kDefaultMaxTrials, std::uint64_t seed = 0);

/// Checks the report against r: conjugated maps are block diagonal and equal the summand maps,
/// summand dimension vectors add up to dims(r).
bool verify_decomposition(const Representation& r, const DecompositionReport& report);

}  // namespace qbt
