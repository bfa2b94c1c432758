#include <doctest.h>

#include <map>

#include "qmds/entropy.hpp"

using qmds::CodeParams;
using qmds::QuantumMdsCode;
using qmds::SubsystemSpec;

namespace {

const QuantumMdsCode& code312() {
  static const auto c = QuantumMdsCode::construct({3, 1, 2, 3});
  return c;
}

std::vector<CodeParams> codes_up_to_8_registers() {
  std::vector<CodeParams> out;
  for (std::size_t d = 2; d <= 4; ++d)
    for (std::size_t k = 1; 2 * k + 2 * (d - 1) <= 8; ++k) {
      const std::size_t n = k + 2 * (d - 1);
      for (std::uint32_t q : {3U, 5U, 7U})
        if (q >= n) out.push_back({n, k, d, q});
    }
  return out;
}

}  // namespace

TEST_CASE("subsystem: spec basics") {
  SubsystemSpec s(true, {3, 1});
  CHECK(s.q_indices() == std::vector<std::size_t>{1, 3});
  CHECK(s.size(2) == 4);
  CHECK(s.mask() == 0b1011);
  CHECK(SubsystemSpec::from_mask(0b1011) == s);
  CHECK(s.registers(2) == std::vector<std::size_t>{0, 1, 2, 4});
  CHECK(s.names() == std::vector<std::string>{"R", "Q1", "Q3"});
  CHECK(s.complement(3) == SubsystemSpec(false, {2}));
  CHECK(SubsystemSpec::from_names({"Q3", "R", "Q1"}) == s);
  CHECK_THROWS(SubsystemSpec(false, {1, 1}));
  CHECK_THROWS(SubsystemSpec(false, {0}));
  CHECK_THROWS(SubsystemSpec::from_names({"X"}));
  CHECK_THROWS(s.complement(2));
  CHECK(qmds::combinations(4, 2).size() == 6);
  CHECK(qmds::combinations(3, 0).size() == 1);
  CHECK(qmds::combinations(2, 3).empty());
}

TEST_CASE("entropy: subsystem_entropy examples on [[3,1,2]]_3") {
  const auto& c = code312();
  CHECK(subsystem_entropy(c, SubsystemSpec(false, {1})) == 1);
  CHECK(subsystem_entropy(c, SubsystemSpec()) == 0);
  CHECK(subsystem_entropy(c, SubsystemSpec(true, {1})) == 2);
  CHECK(subsystem_entropy(c, SubsystemSpec(true, {1, 2, 3})) == 0);
  CHECK_THROWS_AS(subsystem_entropy(c, SubsystemSpec(false, {4})), std::out_of_range);
  const std::vector<std::size_t> dup{0, 0};
  CHECK_THROWS_AS(register_entropy(c, dup), std::invalid_argument);
}

TEST_CASE("entropy: theorem1_expected") {
  CHECK(qmds::theorem1_expected(2, 1, 2) == 2);
  CHECK(qmds::theorem1_expected(0, 3, 4) == 0);
  for (std::size_t k = 1; k <= 4; ++k)
    for (std::size_t d = 2; d <= 4; ++d) {
      CHECK(qmds::theorem1_expected(k + d - 1, k, d) == k + d - 1);
      CHECK(qmds::theorem1_expected(2 * (k + d - 1), k, d) == 0);
    }
  CHECK_THROWS_AS(qmds::theorem1_expected(5, 1, 2), std::out_of_range);
}

TEST_CASE("entropy: full_profile on the reference codes") {
  const auto p312 = full_profile(code312());
  CHECK(p312.entries.size() == 16);
  CHECK(p312.all_match());
  std::map<std::size_t, std::size_t> by_size;
  for (const auto& e : p312.entries) {
    CHECK(by_size.try_emplace(e.size, e.entropy).first->second == e.entropy);
  }
  CHECK(by_size == std::map<std::size_t, std::size_t>{{0, 0}, {1, 1}, {2, 2}, {3, 1}, {4, 0}});

  const auto p422 = full_profile(QuantumMdsCode::construct({4, 2, 2, 5}));
  CHECK(p422.entries.size() == 32);
  CHECK(p422.all_match());
  for (const auto& e : p422.entries) CHECK(e.entropy == std::min(e.size, 6 - e.size));

  const auto p513 = full_profile(QuantumMdsCode::construct({5, 1, 3, 5}));
  CHECK(p513.entries.size() == 64);
  CHECK(p513.all_match());
  for (const auto& e : p513.entries) CHECK(e.entropy == std::min(e.size, 6 - e.size));

  for (std::uint64_t m = 0; m < 64; ++m) CHECK(p513.entries[m].subsystem.mask() == m);
}

TEST_CASE("entropy: extended-R entries carry values but no expectation") {
  const auto code = QuantumMdsCode::construct({4, 2, 2, 5});
  const auto p = full_profile(code, true);
  // Proper nonempty subsets of two R qudits: 2, times 2^4 Q subsets.
  CHECK(p.extended.size() == 32);
  for (const auto& e : p.extended) {
    CHECK(e.r_qudits.size() == 1);
    CHECK(e.entropy <= 3);
  }
  CHECK(p.extended.front().names() == std::vector<std::string>{"R1"});
  CHECK(full_profile(code312(), true).extended.empty());
}

TEST_CASE("entropy: decoding condition and no leakage") {
  const auto p312 = full_profile(code312());
  // I(R;Q1Q2) = 1 + 2 - 1 = 2 = 2k; I(R;Q3) = 1 + 1 - 2 = 0.
  CHECK(p312.entropy(SubsystemSpec(true, {}))
        + p312.entropy(SubsystemSpec(false, {1, 2})) - p312.entropy(SubsystemSpec(true, {1, 2})) == 2);
  CHECK(p312.entropy(SubsystemSpec(true, {})) + p312.entropy(SubsystemSpec(false, {3}))
        - p312.entropy(SubsystemSpec(true, {3})) == 0);
  const auto r312 = check_decoding_condition(p312);
  CHECK(r312.passed());
  CHECK(r312.checks[0].instances == 3);
  CHECK(r312.checks[1].instances == 3);

  const auto p513 = full_profile(QuantumMdsCode::construct({5, 1, 3, 5}));
  CHECK(p513.entropy(1) + p513.entropy(SubsystemSpec(false, {1, 2})) - p513.entropy(SubsystemSpec(true, {1, 2})) == 0);
  CHECK(check_decoding_condition(p513).passed());
}

TEST_CASE("entropy: inequality suite") {
  const auto p312 = full_profile(code312());
  const auto rep = check_entropy_inequalities(p312);
  CHECK(rep.passed());
  REQUIRE(rep.checks.size() == 4);
  for (const auto& c : rep.checks) CHECK(c.instances == 256);

  CHECK(check_entropy_inequalities(full_profile(QuantumMdsCode::construct({4, 2, 2, 5}))).passed());
}

TEST_CASE("entropy: product-state identities") {
  const auto p312 = full_profile(code312());
  CHECK(p312.entropy(SubsystemSpec(false, {1, 2})) == 2);
  CHECK(product_state_checks(p312).passed());

  const auto p422 = full_profile(QuantumMdsCode::construct({4, 2, 2, 5}));
  CHECK(p422.entropy(SubsystemSpec(false, {1, 2, 3}))
        == p422.entropy(SubsystemSpec(false, {1, 2})) + p422.entropy(SubsystemSpec(false, {3})));
  CHECK(p422.entropy(SubsystemSpec(false, {1, 2, 3})) == 3);
  CHECK(product_state_checks(p422).passed());
}

TEST_CASE("entropy: suites flag a corrupted profile") {
  auto p = full_profile(code312());
  p.entries[SubsystemSpec(false, {1}).mask()].entropy = 0;
  CHECK_FALSE(check_profile_properties(p).passed());
  CHECK_FALSE(product_state_checks(p).passed());
  CHECK_FALSE(check_entropy_inequalities(p).passed());

  auto q = full_profile(code312());
  q.entries[SubsystemSpec(true, {1, 2}).mask()].entropy = 2;
  CHECK_FALSE(check_decoding_condition(q).passed());
}

TEST_CASE("entropy: closed form, symmetry, marginals and AME for all codes with k+n <= 8") {
  const auto codes = codes_up_to_8_registers();
  CHECK(codes.size() >= 6);
  for (const auto& params : codes) {
    CAPTURE(params.n);
    CAPTURE(params.k);
    CAPTURE(params.q);
    const auto profile = full_profile(QuantumMdsCode::construct(params));
    const auto props = check_profile_properties(profile);
    for (const auto& c : props.checks) {
      CAPTURE(c.name);
      CHECK(c.passed());
    }
    CHECK((props.find("AME: entropy = size for size <= (n+1)/2") != nullptr) == (params.k == 1));
    CHECK(check_decoding_condition(profile).passed());
    CHECK(product_state_checks(profile).passed());
  }
}
