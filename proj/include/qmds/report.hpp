#pragma once

#include <cstddef>
#include <deque>
#include <string>
#include <type_traits>
#include <utility>
#include <vector>

namespace qmds {

/// Outcome of one family of checks (e.g. "strong subadditivity").  Only the
/// first few failing instances are kept verbatim.
struct CheckResult {
  static constexpr std::size_t kMaxExamples = 8;

  std::string name;
  std::size_t instances = 0;
  std::size_t violations = 0;
  std::vector<std::string> examples;

  bool passed() const noexcept { return violations == 0; }

  /// `what` is a string or a callable producing one; callables are only
  /// invoked on failure.
  template <class Describe>
  void expect(bool ok, Describe&& what) {
    ++instances;
    if (ok) return;
    ++violations;
    if (examples.size() >= kMaxExamples) return;
    if constexpr (std::is_invocable_v<Describe>)
      examples.emplace_back(what());
    else
      examples.emplace_back(std::forward<Describe>(what));
  }
};

struct Report {
  std::deque<CheckResult> checks;  // add() hands out references

  bool passed() const noexcept {
    for (const auto& c : checks)
      if (!c.passed()) return false;
    return true;
  }

  CheckResult& add(std::string name) {
    CheckResult c;
    c.name = std::move(name);
    checks.push_back(std::move(c));
    return checks.back();
  }

  const CheckResult* find(const std::string& name) const {
    for (const auto& c : checks)
      if (c.name == name) return &c;
    return nullptr;
  }

  void append(const Report& other) {
    checks.insert(checks.end(), other.checks.begin(), other.checks.end());
  }
};

}  // namespace qmds
