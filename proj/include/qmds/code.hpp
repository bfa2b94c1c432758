#pragma once

#include <cstddef>
#include <cstdint>
#include <optional>
#include <stdexcept>
#include <vector>

#include "qmds/gf.hpp"
#include "qmds/linalg.hpp"
#include "qmds/report.hpp"

namespace qmds {

/// Parameter or descriptor rejected by the code constructor.  The message
/// names the violated constraint.
class InvalidCode : public std::invalid_argument {
 public:
  using std::invalid_argument::invalid_argument;
};

/// [[n,k,d]]_q.  Only MDS parameters (n = k + 2(d-1)) are accepted.
struct CodeParams {
  std::size_t n = 0;
  std::size_t k = 0;
  std::size_t d = 0;
  std::uint32_t q = 0;

  /// Rows of the Vandermonde block, k + d - 1.
  std::size_t message_dim() const noexcept { return k + d - 1; }
  /// Registers of the joint state R Q1..Qn.
  std::size_t num_registers() const noexcept { return k + n; }

  /// Throws InvalidCode.
  void validate() const;

  friend bool operator==(const CodeParams&, const CodeParams&) = default;
};

/// Smallest admissible field size for (n, k, d): the first prime >= n.
std::uint32_t default_field_size(std::size_t n);

/// The Vandermonde quantum Reed-Solomon code.
///
/// Row r of AB (0-based from the top) holds alpha_i^(k+d-2-r), so the last
/// row is all ones.  A is the top k rows and B the bottom d-1.  The joint
/// pure state of R Q1..Qn is the uniform superposition over the row space of
/// the generator G = [E_k | AB], where E_k holds the first k unit columns.
class QuantumMdsCode {
 public:
  /// Default alphas are 0, 1, ..., n-1.  Throws InvalidCode.
  static QuantumMdsCode construct(const CodeParams& params,
                                  std::optional<std::vector<std::int64_t>> alphas = std::nullopt);

  /// Builds the matrices without checking that the alphas are distinct.
  /// Only used to exercise validate() on broken codes; the shape invariants
  /// (alpha count, range, MDS parameters) are still enforced.
  static QuantumMdsCode unchecked(const CodeParams& params, std::vector<std::int64_t> alphas);

  const CodeParams& params() const noexcept { return params_; }
  const Field& field() const noexcept { return field_; }
  const std::vector<FieldElement>& alphas() const noexcept { return alphas_; }
  const MatrixGF& ab() const noexcept { return ab_; }
  MatrixGF a() const { return ab_.row_block(0, params_.k); }
  MatrixGF b() const { return ab_.row_block(params_.k, params_.d - 1); }
  const MatrixGF& generator() const noexcept { return generator_; }

 private:
  QuantumMdsCode(const CodeParams& params, std::vector<FieldElement> alphas);

  CodeParams params_;
  Field field_;
  std::vector<FieldElement> alphas_;
  MatrixGF ab_;
  MatrixGF generator_;
};

/// Column blocks of AB split by an erasure pattern.
struct ErasureBlocks {
  std::vector<std::size_t> surviving;  // 1-based, ascending
  std::vector<std::size_t> erased;     // 1-based, ascending
  MatrixGF surviving_block;            // (A_I; B_I), square
  MatrixGF erased_block;               // (A_Ic; B_Ic)
};

/// Requires |surviving| = n - (d-1).  Verifies that (A_I; B_I) and B_Ic are
/// invertible, throwing SingularMatrix otherwise.
ErasureBlocks erasure_submatrices(const QuantumMdsCode& code, std::vector<std::size_t> surviving);

/// Checks every structural invariant of the code; failures are recorded in
/// the report rather than thrown.
Report validate(const QuantumMdsCode& code);

}  // namespace qmds
