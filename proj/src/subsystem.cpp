#include "qmds/subsystem.hpp"

#include <algorithm>
#include <stdexcept>

namespace qmds {

SubsystemSpec::SubsystemSpec(bool include_r, std::vector<std::size_t> q_indices)
    : include_r_(include_r), q_(std::move(q_indices)) {
  std::sort(q_.begin(), q_.end());
  if (std::adjacent_find(q_.begin(), q_.end()) != q_.end())
    throw std::invalid_argument("duplicate coded-qudit index in subsystem");
  if (!q_.empty() && q_.front() == 0)
    throw std::out_of_range("coded-qudit indices are 1-based");
}

SubsystemSpec SubsystemSpec::from_mask(std::uint64_t mask) {
  std::vector<std::size_t> q;
  for (std::size_t i = 1; i < 64; ++i)
    if (mask >> i & 1U) q.push_back(i);
  return SubsystemSpec((mask & 1U) != 0, std::move(q));
}

SubsystemSpec SubsystemSpec::from_names(const std::vector<std::string>& names) {
  bool r = false;
  std::vector<std::size_t> q;
  for (const auto& name : names) {
    if (name == "R") {
      if (r) throw std::invalid_argument("R listed twice");
      r = true;
    } else if (name.size() > 1 && name[0] == 'Q' &&
               std::all_of(name.begin() + 1, name.end(), [](char c) { return c >= '0' && c <= '9'; })) {
      q.push_back(std::stoul(name.substr(1)));
    } else {
      throw std::invalid_argument("bad subsystem name '" + name + "'");
    }
  }
  return SubsystemSpec(r, std::move(q));
}

std::uint64_t SubsystemSpec::mask() const noexcept {
  std::uint64_t m = include_r_ ? 1U : 0U;
  for (std::size_t i : q_) m |= std::uint64_t{1} << i;
  return m;
}

SubsystemSpec SubsystemSpec::complement(std::size_t n) const {
  check_within(n);
  std::vector<std::size_t> rest;
  for (std::size_t i = 1; i <= n; ++i)
    if (!std::binary_search(q_.begin(), q_.end(), i)) rest.push_back(i);
  return SubsystemSpec(!include_r_, std::move(rest));
}

std::vector<std::size_t> SubsystemSpec::registers(std::size_t k) const {
  std::vector<std::size_t> regs;
  if (include_r_)
    for (std::size_t i = 0; i < k; ++i) regs.push_back(i);
  for (std::size_t i : q_) regs.push_back(k + i - 1);
  return regs;
}

std::vector<std::string> SubsystemSpec::names() const {
  std::vector<std::string> out;
  if (include_r_) out.emplace_back("R");
  for (std::size_t i : q_) out.push_back("Q" + std::to_string(i));
  return out;
}

void SubsystemSpec::check_within(std::size_t n) const {
  if (!q_.empty() && q_.back() > n)
    throw std::out_of_range("coded-qudit index Q" + std::to_string(q_.back()) + " exceeds n = " +
                            std::to_string(n));
}

std::string to_string(const SubsystemSpec& s) {
  std::string out = "{";
  bool first = true;
  for (const auto& n : s.names()) {
    out += (first ? "" : ",") + n;
    first = false;
  }
  return out + "}";
}

std::vector<std::vector<std::size_t>> combinations(std::size_t n, std::size_t r) {
  std::vector<std::vector<std::size_t>> out;
  if (r > n) return out;
  std::vector<std::size_t> cur(r);
  for (std::size_t i = 0; i < r; ++i) cur[i] = i + 1;
  while (true) {
    out.push_back(cur);
    std::size_t i = r;
    while (i > 0 && cur[i - 1] == n - r + i) --i;
    if (i == 0) break;
    ++cur[i - 1];
    for (std::size_t j = i; j < r; ++j) cur[j] = cur[j - 1] + 1;
  }
  return out;
}

}  // namespace qmds
