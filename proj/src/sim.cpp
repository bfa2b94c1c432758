#include "qmds/sim.hpp"

#include <algorithm>
#include <cmath>
#include <functional>
#include <string>

namespace qmds {

namespace {

constexpr double kHermitianTol = 1e-12;
constexpr double kOffDiagonalTol = 1e-12;
constexpr double kClampTol = 1e-10;
constexpr int kMaxSweeps = 500;

std::size_t checked_dimension(std::size_t registers, std::uint32_t q) {
  std::size_t dim = 1;
  for (std::size_t i = 0; i < registers; ++i) {
    if (dim > kMaxAmplitudes / q)
      throw MemoryGuardExceeded("state of " + std::to_string(registers) + " qudits of dimension " +
                                std::to_string(q) + " exceeds " + std::to_string(kMaxAmplitudes) +
                                " amplitudes; use the subspace-intersection (lemma) oracle instead");
    dim *= q;
  }
  return dim;
}

/// Stride of each register in the big-endian index.
std::vector<std::size_t> strides(std::size_t registers, std::uint32_t q) {
  std::vector<std::size_t> s(registers);
  std::size_t stride = 1;
  for (std::size_t r = registers; r-- > 0;) {
    s[r] = stride;
    stride *= q;
  }
  return s;
}

/// Index offsets of all digit assignments to `regs` (first register most
/// significant among them).
std::vector<std::size_t> offsets(const std::vector<std::size_t>& regs,
                                 const std::vector<std::size_t>& stride, std::uint32_t q) {
  std::vector<std::size_t> out{0};
  for (std::size_t r : regs) {
    std::vector<std::size_t> next;
    next.reserve(out.size() * q);
    for (std::size_t base : out)
      for (std::uint32_t v = 0; v < q; ++v) next.push_back(base + v * stride[r]);
    out = std::move(next);
  }
  return out;
}

std::vector<std::size_t> complement_of(std::span<const std::size_t> regs, std::size_t total) {
  std::vector<bool> in(total, false);
  for (std::size_t r : regs) {
    if (r >= total) throw std::out_of_range("register " + std::to_string(r) + " out of range");
    if (in[r]) throw std::invalid_argument("register " + std::to_string(r) + " listed twice");
    in[r] = true;
  }
  std::vector<std::size_t> rest;
  for (std::size_t r = 0; r < total; ++r)
    if (!in[r]) rest.push_back(r);
  return rest;
}

std::vector<std::size_t> coded_registers(const QuantumMdsCode& code,
                                         const std::vector<std::size_t>& one_based) {
  std::vector<std::size_t> regs;
  for (std::size_t i : one_based) regs.push_back(code.params().k + i - 1);
  return regs;
}

}  // namespace

StateVector::StateVector(std::size_t num_registers, std::uint32_t q)
    : registers_(num_registers), q_(q) {
  if (q < 2) throw std::invalid_argument("local dimension must be >= 2");
  amps_.assign(checked_dimension(num_registers, q), Amplitude{0.0, 0.0});
}

std::size_t StateVector::index_of(std::span<const std::uint32_t> digits) const {
  if (digits.size() != registers_) throw std::invalid_argument("digit count does not match registers");
  std::size_t idx = 0;
  for (std::uint32_t d : digits) {
    if (d >= q_) throw std::out_of_range("digit out of range");
    idx = idx * q_ + d;
  }
  return idx;
}

std::vector<std::uint32_t> StateVector::digits_of(std::size_t index) const {
  std::vector<std::uint32_t> digits(registers_);
  for (std::size_t r = registers_; r-- > 0;) {
    digits[r] = static_cast<std::uint32_t>(index % q_);
    index /= q_;
  }
  return digits;
}

double StateVector::norm() const {
  double sum = 0.0;
  for (const auto& a : amps_) sum += std::norm(a);
  return std::sqrt(sum);
}

Amplitude DensityMatrix::trace() const {
  Amplitude t{0.0, 0.0};
  for (std::size_t i = 0; i < dim_; ++i) t += (*this)(i, i);
  return t;
}

double DensityMatrix::hermiticity_error() const {
  double worst = 0.0;
  for (std::size_t i = 0; i < dim_; ++i)
    for (std::size_t j = i; j < dim_; ++j)
      worst = std::max(worst, std::abs((*this)(i, j) - std::conj((*this)(j, i))));
  return worst;
}

StateVector encode_state(const QuantumMdsCode& code) {
  const auto& p = code.params();
  StateVector psi(p.num_registers(), p.q);
  const std::size_t m = p.message_dim();
  const double amp = std::pow(static_cast<double>(p.q), -0.5 * static_cast<double>(m));

  std::vector<std::uint32_t> x(m, 0);
  while (true) {
    const auto y = mat_vec(std::span<const std::uint32_t>(x), code.generator());
    psi[psi.index_of(y)] += amp;
    // Odometer increment over GF(q)^m.
    std::size_t pos = 0;
    while (pos < m && ++x[pos] == p.q) x[pos++] = 0;
    if (pos == m) break;
  }
  return psi;
}

DensityMatrix partial_trace(const StateVector& psi, std::span<const std::size_t> keep) {
  const std::size_t total = psi.num_registers();
  const auto env = complement_of(keep, total);
  if (keep.empty()) throw std::invalid_argument("partial_trace: keep set is empty");
  if (env.empty()) throw std::invalid_argument("partial_trace: keep set is the whole system");

  const auto stride = strides(total, psi.local_dim());
  const auto keep_off = offsets(std::vector<std::size_t>(keep.begin(), keep.end()), stride, psi.local_dim());
  const auto env_off = offsets(env, stride, psi.local_dim());

  const std::size_t dk = keep_off.size();
  DensityMatrix rho(dk);
  std::vector<Amplitude> column(dk);
  std::vector<std::size_t> support;
  for (std::size_t e : env_off) {
    support.clear();
    for (std::size_t i = 0; i < dk; ++i) {
      column[i] = psi[keep_off[i] + e];
      if (column[i] != Amplitude{0.0, 0.0}) support.push_back(i);
    }
    for (std::size_t a = 0; a < support.size(); ++a)
      for (std::size_t b = a; b < support.size(); ++b) {
        const std::size_t i = support[a], j = support[b];
        rho(i, j) += column[i] * std::conj(column[j]);
      }
  }
  for (std::size_t i = 0; i < dk; ++i) {
    rho(i, i) = Amplitude{rho(i, i).real(), 0.0};
    for (std::size_t j = i + 1; j < dk; ++j) rho(j, i) = std::conj(rho(i, j));
  }
  return rho;
}

DensityMatrix partial_trace(const StateVector& psi, const SubsystemSpec& keep, std::size_t k) {
  const auto regs = keep.registers(k);
  return partial_trace(psi, regs);
}

std::vector<double> hermitian_eigenvalues(const DensityMatrix& rho) {
  if (rho.hermiticity_error() > kHermitianTol)
    throw std::invalid_argument("hermitian_eigenvalues: input is not Hermitian");
  const std::size_t n = rho.dim();
  DensityMatrix a = rho;

  const auto off_norm = [&] {
    double s = 0.0;
    for (std::size_t i = 0; i < n; ++i)
      for (std::size_t j = 0; j < n; ++j)
        if (i != j) s += std::norm(a(i, j));
    return std::sqrt(s);
  };

  int sweep = 0;
  for (; off_norm() >= kOffDiagonalTol; ++sweep) {
    if (sweep == kMaxSweeps)
      throw EigenNotConverged("Jacobi eigensolver did not converge in " + std::to_string(kMaxSweeps) +
                              " sweeps");
    for (std::size_t p = 0; p + 1 < n; ++p)
      for (std::size_t q = p + 1; q < n; ++q) {
        const double g = std::abs(a(p, q));
        if (g == 0.0) continue;
        // Phase e^{i phi} of a_pq; rotating column q by e^{-i phi} makes the
        // 2x2 block real symmetric, then a real Jacobi rotation zeroes it.
        const Amplitude phase = a(p, q) / g;
        const double app = a(p, p).real(), aqq = a(q, q).real();
        const double theta = (aqq - app) / (2.0 * g);
        const double t = (theta >= 0 ? 1.0 : -1.0) / (std::abs(theta) + std::sqrt(theta * theta + 1.0));
        const double c = 1.0 / std::sqrt(t * t + 1.0);
        const double s = t * c;
        const Amplitude sp = s * std::conj(phase);  // s e^{-i phi}
        const Amplitude cp = c * std::conj(phase);  // c e^{-i phi}

        // A <- A V with V = [[c, s], [-s e^{-i phi}, c e^{-i phi}]] on (p, q).
        for (std::size_t k = 0; k < n; ++k) {
          const Amplitude akp = a(k, p), akq = a(k, q);
          a(k, p) = c * akp - sp * akq;
          a(k, q) = s * akp + cp * akq;
        }
        // A <- V^H A.
        for (std::size_t k = 0; k < n; ++k) {
          const Amplitude apk = a(p, k), aqk = a(q, k);
          a(p, k) = c * apk - std::conj(sp) * aqk;
          a(q, k) = s * apk + std::conj(cp) * aqk;
        }
        a(p, p) = Amplitude{app - t * g, 0.0};
        a(q, q) = Amplitude{aqq + t * g, 0.0};
        a(p, q) = a(q, p) = Amplitude{0.0, 0.0};
      }
  }

  std::vector<double> eig(n);
  for (std::size_t i = 0; i < n; ++i) {
    double v = a(i, i).real();
    if (std::abs(v) < kClampTol) v = 0.0;
    if (std::abs(v - 1.0) < kClampTol) v = 1.0;
    eig[i] = v;
  }
  std::sort(eig.begin(), eig.end(), std::greater<>());
  return eig;
}

std::vector<double> reduced_spectrum(const StateVector& psi, std::span<const std::size_t> registers) {
  const auto rest = complement_of(registers, psi.num_registers());
  if (registers.empty() || rest.empty()) return {1.0};
  if (rest.size() < registers.size()) return hermitian_eigenvalues(partial_trace(psi, rest));
  return hermitian_eigenvalues(partial_trace(psi, registers));
}

double von_neumann_entropy(const StateVector& psi, std::span<const std::size_t> registers) {
  const double log_q = std::log(static_cast<double>(psi.local_dim()));
  double h = 0.0;
  for (double lambda : reduced_spectrum(psi, registers))
    if (lambda > 0.0) h -= lambda * std::log(lambda) / log_q;
  return h == 0.0 ? 0.0 : h;
}

double von_neumann_entropy(const StateVector& psi, const SubsystemSpec& sub, std::size_t k) {
  const auto regs = sub.registers(k);
  return von_neumann_entropy(psi, regs);
}

bool spectrum_is_flat(std::span<const double> eigenvalues, std::uint32_t q, std::size_t h, double tol) {
  const double level = std::pow(static_cast<double>(q), -static_cast<double>(h));
  std::size_t nonzero = 1;
  for (std::size_t i = 0; i < h; ++i) nonzero *= q;
  if (nonzero > eigenvalues.size()) return false;
  std::vector<double> sorted(eigenvalues.begin(), eigenvalues.end());
  std::sort(sorted.begin(), sorted.end(), std::greater<>());
  for (std::size_t i = 0; i < sorted.size(); ++i) {
    const double want = i < nonzero ? level : 0.0;
    if (std::abs(sorted[i] - want) > tol) return false;
  }
  return true;
}

StateVector apply_linear_map(const StateVector& psi, std::span<const std::size_t> registers,
                             const MatrixGF& m) {
  if (m.rows() != m.cols() || m.rows() != registers.size())
    throw DimensionMismatch("apply_linear_map: need a square map of size " +
                            std::to_string(registers.size()));
  if (m.field().modulus() != psi.local_dim())
    throw FieldMismatch(m.field().modulus(), psi.local_dim());
  if (rank(m) != m.rows()) throw SingularMatrix(m.rows(), rank(m));
  complement_of(registers, psi.num_registers());

  StateVector out(psi.num_registers(), psi.local_dim());
  std::vector<std::uint32_t> y(registers.size());
  for (std::size_t idx = 0; idx < psi.size(); ++idx) {
    if (psi[idx] == Amplitude{0.0, 0.0}) continue;
    auto digits = psi.digits_of(idx);
    for (std::size_t j = 0; j < registers.size(); ++j) y[j] = digits[registers[j]];
    const auto mapped = mat_vec(std::span<const std::uint32_t>(y), m);
    for (std::size_t j = 0; j < registers.size(); ++j) digits[registers[j]] = mapped[j];
    out[out.index_of(digits)] = psi[idx];
  }
  return out;
}

StateVector decode(const StateVector& psi, const QuantumMdsCode& code,
                   const std::vector<std::size_t>& surviving) {
  const auto& p = code.params();
  const ErasureBlocks blocks = erasure_submatrices(code, surviving);
  const auto regs = coded_registers(code, blocks.surviving);

  StateVector stage = apply_linear_map(psi, regs, invert(blocks.surviving_block));

  // (a, b) -> (a, a·A_Ic + b·B_Ic) as one block matrix [[I_k, A_Ic], [0, B_Ic]].
  const std::size_t m = p.message_dim();
  MatrixGF relabel(code.field(), m, m);
  for (std::size_t i = 0; i < p.k; ++i) relabel.set(i, i, 1);
  for (std::size_t r = 0; r < m; ++r)
    for (std::size_t c = 0; c < p.d - 1; ++c)
      relabel.set(r, p.k + c, static_cast<std::int64_t>(blocks.erased_block(r, c)));
  return apply_linear_map(stage, regs, relabel);
}

StateVector decode_target(const QuantumMdsCode& code, const std::vector<std::size_t>& surviving) {
  const auto& p = code.params();
  const ErasureBlocks blocks = erasure_submatrices(code, surviving);
  const auto kept = coded_registers(code, blocks.surviving);
  const auto lost = coded_registers(code, blocks.erased);

  StateVector target(p.num_registers(), p.q);
  const std::size_t m = p.message_dim();
  const double amp = std::pow(static_cast<double>(p.q), -0.5 * static_cast<double>(m));
  std::vector<std::uint32_t> ab(m, 0), digits(p.num_registers(), 0);
  while (true) {
    for (std::size_t i = 0; i < p.k; ++i) {
      digits[i] = ab[i];
      digits[kept[i]] = ab[i];
    }
    for (std::size_t j = 0; j + 1 < p.d; ++j) {
      digits[kept[p.k + j]] = ab[p.k + j];
      digits[lost[j]] = ab[p.k + j];
    }
    target[target.index_of(digits)] = amp;
    std::size_t pos = 0;
    while (pos < m && ++ab[pos] == p.q) ab[pos++] = 0;
    if (pos == m) break;
  }
  return target;
}

double fidelity(const StateVector& psi, const StateVector& phi) {
  if (psi.num_registers() != phi.num_registers() || psi.local_dim() != phi.local_dim())
    throw std::invalid_argument("fidelity: state shapes differ");
  Amplitude overlap{0.0, 0.0};
  for (std::size_t i = 0; i < psi.size(); ++i) overlap += std::conj(psi[i]) * phi[i];
  return std::norm(overlap);
}

}  // namespace qmds
