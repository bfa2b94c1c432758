#pragma once

#include <cstddef>
#include <cstdint>
#include <string>
#include <vector>

namespace qmds {

/// A subset of the joint system R Q1 ... Qn.  R is atomic (all k reference
/// qudits or none).  Coded-qudit indices are 1-based, as in "Q1".."Qn".
class SubsystemSpec {
 public:
  SubsystemSpec() = default;
  /// Sorts and validates the indices; duplicates and 0 are rejected.
  SubsystemSpec(bool include_r, std::vector<std::size_t> q_indices);

  /// Bit 0 = R, bit i = Qi.  This is the canonical ordering key.
  static SubsystemSpec from_mask(std::uint64_t mask);
  /// Parses names like {"R", "Q1", "Q3"}.
  static SubsystemSpec from_names(const std::vector<std::string>& names);

  bool include_r() const noexcept { return include_r_; }
  const std::vector<std::size_t>& q_indices() const noexcept { return q_; }

  /// Qudit count, with R counting as k qudits.
  std::size_t size(std::size_t k) const noexcept { return (include_r_ ? k : 0) + q_.size(); }
  bool empty() const noexcept { return !include_r_ && q_.empty(); }
  std::uint64_t mask() const noexcept;
  SubsystemSpec complement(std::size_t n) const;
  /// Register positions in the joint state: R qudits 0..k-1, Qi at k+i-1.
  std::vector<std::size_t> registers(std::size_t k) const;
  std::vector<std::string> names() const;
  /// Throws std::out_of_range when an index exceeds n.
  void check_within(std::size_t n) const;

  friend bool operator==(const SubsystemSpec&, const SubsystemSpec&) = default;

 private:
  bool include_r_ = false;
  std::vector<std::size_t> q_;
};

std::string to_string(const SubsystemSpec& s);

/// All r-element subsets of {1..n} in lexicographic order.
std::vector<std::vector<std::size_t>> combinations(std::size_t n, std::size_t r);

}  // namespace qmds
