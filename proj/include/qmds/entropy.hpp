#pragma once

#include <cstddef>
#include <cstdint>
#include <span>
#include <vector>

#include "qmds/code.hpp"
#include "qmds/report.hpp"
#include "qmds/subsystem.hpp"

namespace qmds {

/// Entropy, in q-ary units, of an arbitrary set of registers of the joint
/// state (0..k-1 are the R qudits, k+i-1 is Qi).  For a uniform
/// superposition over the row space of a full-row-rank generator G, the
/// entropy of a column bipartition equals dim(<G_sub> ∩ <G_rest>).
std::size_t register_entropy(const QuantumMdsCode& code, std::span<const std::size_t> registers);

/// Same, for a subsystem with R treated as a block.
std::size_t subsystem_entropy(const QuantumMdsCode& code, const SubsystemSpec& sub);

/// min(size, 2(k+d-1) - size); sizes above k+n are rejected.
std::size_t theorem1_expected(std::size_t sub_size, std::size_t k, std::size_t d);

struct ProfileEntry {
  SubsystemSpec subsystem;
  std::size_t size = 0;
  std::size_t entropy = 0;
  std::size_t expected = 0;
  bool match = false;
};

/// A subsystem holding a proper, nonempty part of R.  No closed form is
/// asserted for these, so there is no expected value.
struct ExtendedEntry {
  std::vector<std::size_t> r_qudits;  // 1-based, "R1".."Rk"
  std::vector<std::size_t> q_indices;  // 1-based
  std::size_t size = 0;
  std::size_t entropy = 0;

  std::vector<std::string> names() const;
};

/// Entropies of all 2^(n+1) subsystems with R atomic.  entries[mask] holds
/// the subsystem whose SubsystemSpec::mask() is `mask`.
struct EntropyProfile {
  CodeParams params;
  std::vector<std::int64_t> alphas;
  std::vector<ProfileEntry> entries;
  std::vector<ExtendedEntry> extended;

  std::size_t entropy(std::uint64_t mask) const { return entries.at(mask).entropy; }
  std::size_t entropy(const SubsystemSpec& s) const { return entropy(s.mask()); }
  std::uint64_t r_mask() const noexcept { return 1U; }
  std::uint64_t full_mask() const noexcept { return (std::uint64_t{1} << (params.n + 1)) - 1; }
  bool all_match() const noexcept;
};

/// Runs the subspace-intersection oracle over every subsystem.  With
/// `extended_r`, also evaluates subsystems splitting R (k >= 2 only).
EntropyProfile full_profile(const QuantumMdsCode& code, bool extended_r = false);

/// Recovery from n-(d-1) coded qudits (I(R;Q_I) = 2H(R) = 2k) and no
/// leakage to any d-1 coded qudits (I(R;Q_I) = 0).
Report check_decoding_condition(const EntropyProfile& profile);

/// Subadditivity, Araki-Lieb, strong subadditivity and weak monotonicity
/// over every assignment of the atomic parts {R, Q1..Qn} to A, B, C or
/// none (4^(n+1) assignments).
Report check_entropy_inequalities(const EntropyProfile& profile);

/// Product-state identities among coded qudits: disjoint K1, K2 with
/// |K1| <= k and |K2| <= d-1 are independent, and any K with |K| <= k is a
/// product of single qudits.
Report product_state_checks(const EntropyProfile& profile);

/// Closed-form entropy match, complement symmetry, H(R) = k, H(Qi) = 1,
/// and (for k = 1) the AME property.
Report check_profile_properties(const EntropyProfile& profile);

}  // namespace qmds
