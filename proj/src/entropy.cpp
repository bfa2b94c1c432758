#include "qmds/entropy.hpp"

#include <algorithm>
#include <bit>
#include <cstdlib>
#include <stdexcept>
#include <string>

namespace qmds {

namespace {

constexpr std::size_t kMaxProfileLength = 20;

std::size_t mask_size(std::uint64_t mask, std::size_t k) {
  return ((mask & 1U) ? k : 0) + static_cast<std::size_t>(std::popcount(mask >> 1));
}

std::string mask_name(std::uint64_t mask) { return to_string(SubsystemSpec::from_mask(mask)); }

long long signed_entropy(const EntropyProfile& p, std::uint64_t mask) {
  return static_cast<long long>(p.entropy(mask));
}

}  // namespace

std::size_t register_entropy(const QuantumMdsCode& code, std::span<const std::size_t> registers) {
  const std::size_t total = code.params().num_registers();
  std::vector<bool> in(total, false);
  for (std::size_t r : registers) {
    if (r >= total)
      throw std::out_of_range("register " + std::to_string(r) + " outside 0.." + std::to_string(total - 1));
    if (in[r]) throw std::invalid_argument("register " + std::to_string(r) + " listed twice");
    in[r] = true;
  }
  std::vector<std::size_t> inside, outside;
  for (std::size_t r = 0; r < total; ++r) (in[r] ? inside : outside).push_back(r);
  const MatrixGF& g = code.generator();
  return intersection_dim(g.columns(inside), g.columns(outside));
}

std::size_t subsystem_entropy(const QuantumMdsCode& code, const SubsystemSpec& sub) {
  sub.check_within(code.params().n);
  const auto regs = sub.registers(code.params().k);
  return register_entropy(code, regs);
}

std::size_t theorem1_expected(std::size_t sub_size, std::size_t k, std::size_t d) {
  const std::size_t total = 2 * (k + d - 1);
  if (sub_size > total)
    throw std::out_of_range("subsystem size " + std::to_string(sub_size) + " exceeds k+n = " +
                            std::to_string(total));
  return std::min(sub_size, total - sub_size);
}

std::vector<std::string> ExtendedEntry::names() const {
  std::vector<std::string> out;
  for (std::size_t r : r_qudits) out.push_back("R" + std::to_string(r));
  for (std::size_t q : q_indices) out.push_back("Q" + std::to_string(q));
  return out;
}

bool EntropyProfile::all_match() const noexcept {
  return std::all_of(entries.begin(), entries.end(), [](const ProfileEntry& e) { return e.match; });
}

EntropyProfile full_profile(const QuantumMdsCode& code, bool extended_r) {
  const auto& p = code.params();
  if (p.n > kMaxProfileLength)
    throw std::invalid_argument("profile enumeration limited to n <= " + std::to_string(kMaxProfileLength));

  EntropyProfile profile;
  profile.params = p;
  for (const auto& a : code.alphas()) profile.alphas.push_back(a.value());

  const std::uint64_t count = std::uint64_t{1} << (p.n + 1);
  profile.entries.reserve(count);
  for (std::uint64_t mask = 0; mask < count; ++mask) {
    ProfileEntry e;
    e.subsystem = SubsystemSpec::from_mask(mask);
    e.size = e.subsystem.size(p.k);
    e.entropy = subsystem_entropy(code, e.subsystem);
    e.expected = theorem1_expected(e.size, p.k, p.d);
    e.match = e.entropy == e.expected;
    profile.entries.push_back(std::move(e));
  }

  if (extended_r && p.k >= 2) {
    const std::uint64_t r_count = std::uint64_t{1} << p.k;
    const std::uint64_t q_count = std::uint64_t{1} << p.n;
    for (std::uint64_t rm = 1; rm + 1 < r_count; ++rm)
      for (std::uint64_t qm = 0; qm < q_count; ++qm) {
        ExtendedEntry e;
        std::vector<std::size_t> regs;
        for (std::size_t i = 0; i < p.k; ++i)
          if (rm >> i & 1U) {
            e.r_qudits.push_back(i + 1);
            regs.push_back(i);
          }
        for (std::size_t i = 0; i < p.n; ++i)
          if (qm >> i & 1U) {
            e.q_indices.push_back(i + 1);
            regs.push_back(p.k + i);
          }
        e.size = regs.size();
        e.entropy = register_entropy(code, regs);
        profile.extended.push_back(std::move(e));
      }
  }
  return profile;
}

Report check_decoding_condition(const EntropyProfile& profile) {
  const auto& p = profile.params;
  const long long h_r = signed_entropy(profile, profile.r_mask());
  Report report;

  auto& recover = report.add("decoding condition I(R;Q_I) = 2H(R) = 2k, |I| = n-(d-1)");
  for (const auto& subset : combinations(p.n, p.n - (p.d - 1))) {
    const std::uint64_t qm = SubsystemSpec(false, subset).mask();
    const long long info = h_r + signed_entropy(profile, qm) - signed_entropy(profile, qm | 1U);
    recover.expect(info == 2 * h_r && info == 2 * static_cast<long long>(p.k),
                   "I(R;" + mask_name(qm) + ") = " + std::to_string(info));
  }

  auto& leak = report.add("no leakage I(R;Q_I) = 0, |I| = d-1");
  for (const auto& subset : combinations(p.n, p.d - 1)) {
    const std::uint64_t qm = SubsystemSpec(false, subset).mask();
    const long long info = h_r + signed_entropy(profile, qm) - signed_entropy(profile, qm | 1U);
    leak.expect(info == 0, "I(R;" + mask_name(qm) + ") = " + std::to_string(info));
  }
  return report;
}

Report check_entropy_inequalities(const EntropyProfile& profile) {
  const std::size_t parts = profile.params.n + 1;
  Report report;
  auto& sa = report.add("subadditivity");
  auto& al = report.add("Araki-Lieb");
  auto& ssa = report.add("strong subadditivity");
  auto& wm = report.add("weak monotonicity");

  std::uint64_t total = 1;
  for (std::size_t i = 0; i < parts; ++i) total *= 4;

  for (std::uint64_t code = 0; code < total; ++code) {
    std::uint64_t a = 0, b = 0, c = 0, digits = code;
    for (std::size_t i = 0; i < parts; ++i, digits /= 4) {
      switch (digits % 4) {
        case 1: a |= std::uint64_t{1} << i; break;
        case 2: b |= std::uint64_t{1} << i; break;
        case 3: c |= std::uint64_t{1} << i; break;
        default: break;
      }
    }
    const auto h = [&](std::uint64_t m) { return signed_entropy(profile, m); };
    const auto label = [&] {
      return "A=" + mask_name(a) + " B=" + mask_name(b) + " C=" + mask_name(c);
    };
    sa.expect(h(a | b) <= h(a) + h(b), label);
    al.expect(std::llabs(h(a) - h(b)) <= h(a | b), label);
    ssa.expect(h(a | b) + h(b | c) >= h(a | b | c) + h(b), label);
    wm.expect(h(a | b) + h(b | c) >= h(a) + h(c), label);
  }
  return report;
}

Report product_state_checks(const EntropyProfile& profile) {
  const auto& p = profile.params;
  const std::uint64_t q_all = (std::uint64_t{1} << p.n) - 1;
  const auto h = [&](std::uint64_t q_bits) { return profile.entropy(q_bits << 1); };
  Report report;

  auto& pair = report.add("product state |K1| <= k, |K2| <= d-1");
  for (std::uint64_t k1 = 0; k1 <= q_all; ++k1) {
    if (static_cast<std::size_t>(std::popcount(k1)) > p.k) continue;
    const std::uint64_t rest = q_all & ~k1;
    // Enumerate submasks of the complement.
    for (std::uint64_t k2 = rest;; k2 = (k2 - 1) & rest) {
      if (static_cast<std::size_t>(std::popcount(k2)) <= p.d - 1)
        pair.expect(h(k1 | k2) == h(k1) + h(k2),
                    "K1=" + mask_name(k1 << 1) + " K2=" + mask_name(k2 << 1));
      if (k2 == 0) break;
    }
  }

  auto& single = report.add("product of single qudits |K| <= k");
  for (std::uint64_t km = 0; km <= q_all; ++km) {
    if (static_cast<std::size_t>(std::popcount(km)) > p.k) continue;
    std::size_t sum = 0;
    for (std::size_t i = 0; i < p.n; ++i)
      if (km >> i & 1U) sum += h(std::uint64_t{1} << i);
    single.expect(h(km) == sum, "K=" + mask_name(km << 1));
  }
  return report;
}

Report check_profile_properties(const EntropyProfile& profile) {
  const auto& p = profile.params;
  Report report;

  auto& thm = report.add("entropy = min(|S|, 2(k+d-1) - |S|)");
  for (const auto& e : profile.entries)
    thm.expect(e.match, to_string(e.subsystem) + ": " + std::to_string(e.entropy) + " vs " +
                            std::to_string(e.expected));

  auto& sym = report.add("complement symmetry");
  const std::uint64_t full = profile.full_mask();
  for (std::uint64_t m = 0; m <= full; ++m)
    sym.expect(profile.entropy(m) == profile.entropy(full & ~m), mask_name(m));

  auto& marg = report.add("H(R) = k, H(Qi) = 1");
  marg.expect(profile.entropy(profile.r_mask()) == p.k, "H(R) = " + std::to_string(profile.entropy(1)));
  for (std::size_t i = 1; i <= p.n; ++i)
    marg.expect(profile.entropy(std::uint64_t{1} << i) == 1, "H(Q" + std::to_string(i) + ")");

  if (p.k == 1) {
    auto& ame = report.add("AME: entropy = size for size <= (n+1)/2");
    for (std::uint64_t m = 0; m <= full; ++m) {
      const std::size_t size = mask_size(m, p.k);
      if (2 * size <= p.n + 1)
        ame.expect(profile.entropy(m) == size, mask_name(m) + " size " + std::to_string(size));
    }
  }
  return report;
}

}  // namespace qmds
