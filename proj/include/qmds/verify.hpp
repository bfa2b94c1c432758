#pragma once

#include <cstddef>
#include <vector>

#include "qmds/code.hpp"
#include "qmds/entropy.hpp"
#include "qmds/report.hpp"
#include "qmds/sim.hpp"

namespace qmds {

inline constexpr double kOracleTolerance = 1e-9;
inline constexpr double kFidelityTolerance = 1e-12;

/// Entropy profile measured on the dense encoded state.  `profile` holds
/// the numeric entropies rounded to integers so the integer check suites can
/// run on it; `numeric[mask]` keeps the raw values.
struct StatevecProfile {
  EntropyProfile profile;
  std::vector<double> numeric;
  /// Unit norm, integrality within 1e-9, flat reduced spectra.
  Report report;
};

StatevecProfile statevec_profile(const QuantumMdsCode& code);

struct OracleComparison {
  Report report;
  double max_delta = 0.0;
  std::size_t subsystems = 0;
};

/// |numeric - lemma| < 1e-9 on every subsystem.
OracleComparison compare_oracles(const EntropyProfile& lemma, const StatevecProfile& statevec);

struct DecodeOutcome {
  std::vector<std::size_t> erased;  // 1-based
  double fidelity = 0.0;
  bool passed() const noexcept { return fidelity >= 1.0 - kFidelityTolerance; }
};

/// Decodes `encoded` from the complement of `erased` (which must have d-1
/// indices) and compares with the expected post-decoding state.
DecodeOutcome run_decode(const QuantumMdsCode& code, const StateVector& encoded,
                         const std::vector<std::size_t>& erased);

/// All C(n, d-1) erasure patterns, in lexicographic order.
std::vector<DecodeOutcome> run_all_decodes(const QuantumMdsCode& code);

}  // namespace qmds
