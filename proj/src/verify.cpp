#include "qmds/verify.hpp"

#include <algorithm>
#include <cmath>
#include <sstream>
#include <stdexcept>
#include <string>
#include <unordered_map>

namespace qmds {

namespace {

std::string sci(double v) {
  std::ostringstream os;
  os.precision(3);
  os << std::scientific << v;
  return os.str();
}

}  // namespace

StatevecProfile statevec_profile(const QuantumMdsCode& code) {
  const auto& p = code.params();
  const StateVector psi = encode_state(code);
  const double log_q = std::log(static_cast<double>(p.q));

  StatevecProfile out;
  out.profile.params = p;
  for (const auto& a : code.alphas()) out.profile.alphas.push_back(a.value());

  auto& norm = out.report.add("encoded state has unit norm");
  norm.expect(std::abs(psi.norm() - 1.0) < kFidelityTolerance, [&] { return "norm " + sci(psi.norm()); });
  auto& integral = out.report.add("statevec entropies integral within 1e-9");
  auto& flat = out.report.add("reduced spectra flat (q^H values of q^-H) within 1e-9");

  const std::uint64_t count = std::uint64_t{1} << (p.n + 1);
  const std::uint64_t full = count - 1;
  out.numeric.assign(count, 0.0);
  // A subsystem and its complement share a spectrum; solve each pair once.
  std::unordered_map<std::uint64_t, std::vector<double>> spectra;
  for (std::uint64_t mask = 0; mask < count; ++mask) {
    const std::uint64_t key = std::min(mask, full & ~mask);
    auto it = spectra.find(key);
    if (it == spectra.end()) {
      const auto regs = SubsystemSpec::from_mask(key).registers(p.k);
      it = spectra.emplace(key, reduced_spectrum(psi, regs)).first;
    }
    double h = 0.0;
    for (double lambda : it->second)
      if (lambda > 0.0) h -= lambda * std::log(lambda) / log_q;
    h = h == 0.0 ? 0.0 : h;
    out.numeric[mask] = h;

    ProfileEntry e;
    e.subsystem = SubsystemSpec::from_mask(mask);
    e.size = e.subsystem.size(p.k);
    e.entropy = static_cast<std::size_t>(std::llround(std::max(h, 0.0)));
    e.expected = theorem1_expected(e.size, p.k, p.d);
    e.match = std::abs(h - static_cast<double>(e.expected)) < kOracleTolerance;

    const auto name = to_string(e.subsystem);
    integral.expect(std::abs(h - static_cast<double>(e.entropy)) < kOracleTolerance,
                    [&] { return name + ": " + std::to_string(h); });
    flat.expect(spectrum_is_flat(it->second, p.q, e.entropy, kOracleTolerance), name);
    out.profile.entries.push_back(std::move(e));
  }
  return out;
}

OracleComparison compare_oracles(const EntropyProfile& lemma, const StatevecProfile& statevec) {
  if (lemma.entries.size() != statevec.numeric.size())
    throw std::invalid_argument("compare_oracles: profiles cover different systems");
  OracleComparison out;
  auto& agree = out.report.add("statevec entropy = lemma entropy within 1e-9");
  for (std::size_t mask = 0; mask < lemma.entries.size(); ++mask) {
    const double delta = std::abs(statevec.numeric[mask] - static_cast<double>(lemma.entries[mask].entropy));
    out.max_delta = std::max(out.max_delta, delta);
    ++out.subsystems;
    agree.expect(delta < kOracleTolerance,
                 [&] { return to_string(lemma.entries[mask].subsystem) + ": delta " + sci(delta); });
  }
  return out;
}

DecodeOutcome run_decode(const QuantumMdsCode& code, const StateVector& encoded,
                         const std::vector<std::size_t>& erased) {
  const auto& p = code.params();
  if (erased.size() != p.d - 1)
    throw std::invalid_argument("erasure pattern must have exactly d-1 = " + std::to_string(p.d - 1) +
                                " indices (got " + std::to_string(erased.size()) + ")");
  const SubsystemSpec lost(false, erased);
  lost.check_within(p.n);

  DecodeOutcome outcome;
  outcome.erased = lost.q_indices();
  const auto surviving = lost.complement(p.n).q_indices();
  outcome.fidelity = fidelity(decode(encoded, code, surviving), decode_target(code, surviving));
  return outcome;
}

std::vector<DecodeOutcome> run_all_decodes(const QuantumMdsCode& code) {
  const StateVector encoded = encode_state(code);
  std::vector<DecodeOutcome> out;
  for (const auto& erased : combinations(code.params().n, code.params().d - 1))
    out.push_back(run_decode(code, encoded, erased));
  return out;
}

}  // namespace qmds
