#pragma once

#include <complex>
#include <cstddef>
#include <cstdint>
#include <span>
#include <stdexcept>
#include <vector>

#include "qmds/code.hpp"
#include "qmds/linalg.hpp"
#include "qmds/subsystem.hpp"

namespace qmds {

using Amplitude = std::complex<double>;

/// Largest dense state the simulator will allocate (~256 MB).
inline constexpr std::size_t kMaxAmplitudes = std::size_t{1} << 24;

class MemoryGuardExceeded : public std::length_error {
 public:
  using std::length_error::length_error;
};

class EigenNotConverged : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

/// Dense pure state of `num_registers` qudits of dimension q.  Basis
/// indices are big-endian in register order (register 0 is most
/// significant).
class StateVector {
 public:
  StateVector(std::size_t num_registers, std::uint32_t q);

  std::size_t num_registers() const noexcept { return registers_; }
  std::uint32_t local_dim() const noexcept { return q_; }
  std::size_t size() const noexcept { return amps_.size(); }

  Amplitude operator[](std::size_t i) const { return amps_[i]; }
  Amplitude& operator[](std::size_t i) { return amps_[i]; }
  std::span<const Amplitude> amplitudes() const noexcept { return amps_; }

  std::size_t index_of(std::span<const std::uint32_t> digits) const;
  std::vector<std::uint32_t> digits_of(std::size_t index) const;
  double norm() const;

 private:
  std::size_t registers_;
  std::uint32_t q_;
  std::vector<Amplitude> amps_;
};

class DensityMatrix {
 public:
  explicit DensityMatrix(std::size_t dim) : dim_(dim), entries_(dim * dim) {}

  std::size_t dim() const noexcept { return dim_; }
  Amplitude operator()(std::size_t i, std::size_t j) const { return entries_[i * dim_ + j]; }
  Amplitude& operator()(std::size_t i, std::size_t j) { return entries_[i * dim_ + j]; }

  Amplitude trace() const;
  /// Largest |rho_ij - conj(rho_ji)|.
  double hermiticity_error() const;

 private:
  std::size_t dim_;
  std::vector<Amplitude> entries_;
};

/// Uniform superposition over x·G for all x in GF(q)^(k+d-1), registers
/// ordered R then Q1..Qn.  Throws MemoryGuardExceeded past kMaxAmplitudes.
StateVector encode_state(const QuantumMdsCode& code);

/// Reduced state on `keep` (register positions).  Empty and full keep sets
/// are rejected.
DensityMatrix partial_trace(const StateVector& psi, std::span<const std::size_t> keep);
DensityMatrix partial_trace(const StateVector& psi, const SubsystemSpec& keep, std::size_t k);

/// Eigenvalues of a Hermitian matrix by cyclic complex Jacobi sweeps,
/// sorted in descending order.  Values within 1e-10 of 0 or 1 are clamped.
std::vector<double> hermitian_eigenvalues(const DensityMatrix& rho);

/// Spectrum of the smaller side of the bipartition (registers, rest).
std::vector<double> reduced_spectrum(const StateVector& psi, std::span<const std::size_t> registers);

/// Von Neumann entropy in q-ary units.
double von_neumann_entropy(const StateVector& psi, std::span<const std::size_t> registers);
double von_neumann_entropy(const StateVector& psi, const SubsystemSpec& sub, std::size_t k);

/// True when the spectrum is exactly q^h copies of q^-h plus zeros, each
/// within `tol`.
bool spectrum_is_flat(std::span<const double> eigenvalues, std::uint32_t q, std::size_t h,
                      double tol);

/// Basis permutation |y> -> |y·M> on the listed registers (y read in list
/// order).  M must be square, invertible and match the register count.
StateVector apply_linear_map(const StateVector& psi, std::span<const std::size_t> registers,
                             const MatrixGF& m);

/// Two-step erasure decoder acting on the surviving coded qudits only:
/// y -> y·(A_I;B_I)^-1 recovers (a, b), then (a, b) -> (a, (a, b)·(A_Ic;B_Ic)).
StateVector decode(const StateVector& psi, const QuantumMdsCode& code,
                   const std::vector<std::size_t>& surviving);

/// The state decode() should produce: R maximally entangled with the first
/// k surviving qudits, the last d-1 surviving qudits maximally entangled
/// with the erased ones (in ascending order).
StateVector decode_target(const QuantumMdsCode& code, const std::vector<std::size_t>& surviving);

/// |<psi|phi>|^2
double fidelity(const StateVector& psi, const StateVector& phi);

}  // namespace qmds
