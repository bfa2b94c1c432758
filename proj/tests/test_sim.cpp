#include <doctest.h>

#include <cmath>
#include <random>

#include "qmds/entropy.hpp"
#include "qmds/sim.hpp"
#include "qmds/verify.hpp"

using qmds::Amplitude;
using qmds::DensityMatrix;
using qmds::QuantumMdsCode;
using qmds::StateVector;
using qmds::SubsystemSpec;

namespace {

const QuantumMdsCode& code312() {
  static const auto c = QuantumMdsCode::construct({3, 1, 2, 3});
  return c;
}

std::size_t nonzeros(const StateVector& s) {
  std::size_t count = 0;
  for (const auto& a : s.amplitudes()) count += a != Amplitude{0.0, 0.0};
  return count;
}

DensityMatrix from_rows(const std::vector<std::vector<Amplitude>>& rows) {
  DensityMatrix m(rows.size());
  for (std::size_t i = 0; i < rows.size(); ++i)
    for (std::size_t j = 0; j < rows.size(); ++j) m(i, j) = rows[i][j];
  return m;
}

}  // namespace

TEST_CASE("sim: encode_state [[3,1,2]]_3 matches hand enumeration") {
  const auto psi = encode_state(code312());
  CHECK(psi.size() == 81);
  CHECK(nonzeros(psi) == 9);
  CHECK(psi.norm() == doctest::Approx(1.0).epsilon(1e-12));
  // (a, b)·[[0,1,2],[1,1,1]] = (b, a+b, 2a+b); register order R, Q1, Q2, Q3.
  for (std::uint32_t a = 0; a < 3; ++a)
    for (std::uint32_t b = 0; b < 3; ++b) {
      const std::vector<std::uint32_t> digits{a, b, (a + b) % 3, (2 * a + b) % 3};
      CHECK(std::abs(psi[psi.index_of(digits)] - Amplitude{1.0 / 3.0, 0.0}) < 1e-15);
    }
}

TEST_CASE("sim: encode_state [[4,2,2]]_5") {
  const auto psi = encode_state(QuantumMdsCode::construct({4, 2, 2, 5}));
  CHECK(psi.size() == 15625);
  CHECK(nonzeros(psi) == 125);
  const double amp = std::pow(5.0, -1.5);
  for (const auto& a : psi.amplitudes())
    if (a != Amplitude{0.0, 0.0}) CHECK(std::abs(a - amp) < 1e-15);
  CHECK(std::abs(psi.norm() - 1.0) < 1e-12);
}

TEST_CASE("sim: memory guard") {
  CHECK_THROWS_AS(encode_state(QuantumMdsCode::construct({11, 1, 6, 11})), qmds::MemoryGuardExceeded);
  CHECK_THROWS_AS(StateVector(25, 2), qmds::MemoryGuardExceeded);
  CHECK_NOTHROW(StateVector(24, 2));
}

TEST_CASE("sim: index and digit round trip") {
  StateVector s(3, 5);
  for (std::size_t i = 0; i < s.size(); i += 7) CHECK(s.index_of(s.digits_of(i)) == i);
  const std::vector<std::uint32_t> digits{1, 0, 2};
  CHECK(s.index_of(digits) == 27);  // big-endian: 1*25 + 0*5 + 2
}

TEST_CASE("sim: partial_trace") {
  const auto psi = encode_state(code312());
  const auto rho = partial_trace(psi, SubsystemSpec(false, {1}), 1);
  REQUIRE(rho.dim() == 3);
  for (std::size_t i = 0; i < 3; ++i)
    for (std::size_t j = 0; j < 3; ++j)
      CHECK(std::abs(rho(i, j) - Amplitude{i == j ? 1.0 / 3.0 : 0.0, 0.0}) < 1e-14);

  const std::vector<std::size_t> none{};
  const std::vector<std::size_t> all{0, 1, 2, 3};
  CHECK_THROWS_AS(partial_trace(psi, none), std::invalid_argument);
  CHECK_THROWS_AS(partial_trace(psi, all), std::invalid_argument);

  StateVector product(2, 2);
  product[0] = 1.0;  // |0>|0>
  const std::vector<std::size_t> first{0};
  const auto proj = partial_trace(product, first);
  CHECK(proj(0, 0) == Amplitude{1.0, 0.0});
  CHECK(proj(1, 1) == Amplitude{0.0, 0.0});
  CHECK(proj(0, 1) == Amplitude{0.0, 0.0});
}

TEST_CASE("sim: hermitian_eigenvalues examples") {
  DensityMatrix mixed(3);
  for (std::size_t i = 0; i < 3; ++i) mixed(i, i) = 1.0 / 3.0;
  for (double v : hermitian_eigenvalues(mixed)) CHECK(v == doctest::Approx(1.0 / 3.0).epsilon(1e-14));

  DensityMatrix proj(4);
  const double h = 0.5;
  for (std::size_t i = 0; i < 4; ++i)
    for (std::size_t j = 0; j < 4; ++j) proj(i, j) = h * h;  // |+><+| for uniform |psi>
  const auto ev = hermitian_eigenvalues(proj);
  CHECK(ev[0] == 1.0);
  for (std::size_t i = 1; i < 4; ++i) CHECK(ev[i] == 0.0);

  // [[2, i], [-i, 2]] has eigenvalues 3 and 1.
  const Amplitude I{0.0, 1.0};
  const auto two = hermitian_eigenvalues(from_rows({{2.0, I}, {-I, 2.0}}));
  CHECK(two[0] == doctest::Approx(3.0).epsilon(1e-14));
  CHECK(two[1] == doctest::Approx(1.0).epsilon(1e-14));

  CHECK_THROWS_AS(hermitian_eigenvalues(from_rows({{1.0, 1.0}, {0.0, 1.0}})), std::invalid_argument);

  const auto psi = encode_state(code312());
  const auto rho12 = partial_trace(psi, SubsystemSpec(false, {1, 2}), 1);
  const auto nine = hermitian_eigenvalues(rho12);
  REQUIRE(nine.size() == 9);
  for (double v : nine) CHECK(std::abs(v - 1.0 / 9.0) < 1e-12);
}

TEST_CASE("sim: Jacobi eigenvalues satisfy trace and power-sum identities on random Hermitian matrices") {
  std::mt19937 rng(99);
  std::normal_distribution<double> g(0.0, 1.0);
  for (std::size_t n : {1U, 2U, 3U, 5U, 8U, 13U}) {
    DensityMatrix a(n);
    for (std::size_t i = 0; i < n; ++i) {
      a(i, i) = g(rng);
      for (std::size_t j = i + 1; j < n; ++j) {
        a(i, j) = Amplitude{g(rng), g(rng)};
        a(j, i) = std::conj(a(i, j));
      }
    }
    const auto ev = hermitian_eigenvalues(a);
    // tr(A^p) for p = 1, 2, 3 by direct products.
    double t1 = 0.0, t2 = 0.0, t3 = 0.0;
    for (std::size_t i = 0; i < n; ++i) {
      t1 += a(i, i).real();
      for (std::size_t j = 0; j < n; ++j) {
        t2 += (a(i, j) * a(j, i)).real();
        for (std::size_t k = 0; k < n; ++k) t3 += (a(i, j) * a(j, k) * a(k, i)).real();
      }
    }
    double s1 = 0.0, s2 = 0.0, s3 = 0.0;
    for (double v : ev) {
      s1 += v;
      s2 += v * v;
      s3 += v * v * v;
    }
    CAPTURE(n);
    CHECK(s1 == doctest::Approx(t1).epsilon(1e-10));
    CHECK(s2 == doctest::Approx(t2).epsilon(1e-10));
    CHECK(s3 == doctest::Approx(t3).epsilon(1e-10));
    CHECK(std::is_sorted(ev.rbegin(), ev.rend()));
  }
}

TEST_CASE("sim: von_neumann_entropy examples") {
  const auto psi = encode_state(code312());
  CHECK(std::abs(von_neumann_entropy(psi, SubsystemSpec(true, {1}), 1) - 2.0) < 1e-9);
  CHECK(von_neumann_entropy(psi, SubsystemSpec(true, {1, 2, 3}), 1) == 0.0);
  CHECK(von_neumann_entropy(psi, SubsystemSpec(), 1) == 0.0);

  const auto psi422 = encode_state(QuantumMdsCode::construct({4, 2, 2, 5}));
  CHECK(std::abs(von_neumann_entropy(psi422, SubsystemSpec(false, {1, 2, 3}), 2) - 3.0) < 1e-9);
}

TEST_CASE("sim: both sides of a bipartition have the same spectrum") {
  const auto psi = encode_state(QuantumMdsCode::construct({4, 2, 2, 5}));
  const std::vector<std::size_t> left{0, 2, 3};
  const std::vector<std::size_t> right{1, 4, 5};
  const auto a = hermitian_eigenvalues(partial_trace(psi, left));
  const auto b = hermitian_eigenvalues(partial_trace(psi, right));
  REQUIRE(a.size() == b.size());
  for (std::size_t i = 0; i < a.size(); ++i) CHECK(std::abs(a[i] - b[i]) < 1e-12);
}

TEST_CASE("sim: split-R entropies agree with the subspace oracle") {
  const auto code = QuantumMdsCode::construct({4, 2, 2, 5});
  const auto psi = encode_state(code);
  const auto profile = full_profile(code, true);
  for (const auto& e : profile.extended) {
    std::vector<std::size_t> regs;
    for (std::size_t r : e.r_qudits) regs.push_back(r - 1);
    for (std::size_t i : e.q_indices) regs.push_back(code.params().k + i - 1);
    CHECK(std::abs(von_neumann_entropy(psi, regs) - static_cast<double>(e.entropy)) < 1e-9);
  }
}

TEST_CASE("sim: spectrum_is_flat") {
  const std::vector<double> flat{0.25, 0.25, 0.25, 0.25, 0.0};
  CHECK(qmds::spectrum_is_flat(flat, 2, 2, 1e-9));
  CHECK_FALSE(qmds::spectrum_is_flat(flat, 2, 1, 1e-9));
  const std::vector<double> skew{0.5, 0.25, 0.25};
  CHECK_FALSE(qmds::spectrum_is_flat(skew, 2, 2, 1e-9));
  const std::vector<double> pure{1.0};
  CHECK(qmds::spectrum_is_flat(pure, 3, 0, 1e-9));
}

TEST_CASE("sim: decode recovers the source on [[3,1,2]]_3") {
  const auto& code = code312();
  const auto psi = encode_state(code);
  const auto out = decode(psi, code, {1, 2});
  const auto target = decode_target(code, {1, 2});
  CHECK(std::abs(target.norm() - 1.0) < 1e-12);
  CHECK(std::abs(out.norm() - 1.0) < 1e-12);
  CHECK(qmds::fidelity(out, target) >= 1.0 - 1e-12);

  // Target: sum_{a,b'} 1/3 |a>_R |a>_Q1 |b'>_Q2 |b'>_Q3.
  CHECK(nonzeros(target) == 9);
  for (std::uint32_t a = 0; a < 3; ++a)
    for (std::uint32_t b = 0; b < 3; ++b) {
      const std::vector<std::uint32_t> digits{a, a, b, b};
      CHECK(std::abs(target[target.index_of(digits)] - Amplitude{1.0 / 3.0, 0.0}) < 1e-15);
    }

  CHECK_THROWS_AS(decode(psi, code, {1}), std::invalid_argument);
  CHECK_THROWS_AS(decode_target(code, {1, 2, 3}), std::invalid_argument);
}

TEST_CASE("sim: a basis relabelling followed by its inverse is the identity") {
  const auto& code = code312();
  const auto psi = encode_state(code);
  const auto blocks = erasure_submatrices(code, {1, 3});
  const std::vector<std::size_t> regs{1, 3};
  const auto there = apply_linear_map(psi, regs, invert(blocks.surviving_block));
  const auto back = apply_linear_map(there, regs, blocks.surviving_block);
  for (std::size_t i = 0; i < psi.size(); ++i) CHECK(back[i] == psi[i]);
  CHECK(qmds::fidelity(there, psi) < 1.0);
  CHECK(decode(decode(psi, code, {1, 2}), code, {1, 2}).norm() == doctest::Approx(1.0));

  const qmds::MatrixGF singular(code.field(), {{1, 1}, {1, 1}});
  CHECK_THROWS_AS(apply_linear_map(psi, regs, singular), qmds::SingularMatrix);
}

TEST_CASE("sim: every erasure pattern decodes with unit fidelity") {
  for (const qmds::CodeParams& p : {qmds::CodeParams{3, 1, 2, 3}, qmds::CodeParams{4, 2, 2, 5},
                                    qmds::CodeParams{5, 1, 3, 5}}) {
    const auto code = QuantumMdsCode::construct(p);
    const auto outcomes = qmds::run_all_decodes(code);
    CHECK(outcomes.size() == qmds::combinations(p.n, p.d - 1).size());
    for (const auto& o : outcomes) CHECK(o.passed());
  }
  const auto c513 = QuantumMdsCode::construct({5, 1, 3, 5});
  const auto psi = encode_state(c513);
  CHECK(qmds::fidelity(decode(psi, c513, {1, 3, 5}), decode_target(c513, {1, 3, 5})) >= 1.0 - 1e-12);
}

TEST_CASE("sim: fidelity") {
  const auto psi = encode_state(code312());
  CHECK(qmds::fidelity(psi, psi) == doctest::Approx(1.0).epsilon(1e-14));
  StateVector e0(2, 3), e1(2, 3);
  e0[0] = 1.0;
  e1[1] = 1.0;
  CHECK(qmds::fidelity(e0, e1) == 0.0);
  CHECK_THROWS_AS(qmds::fidelity(e0, psi), std::invalid_argument);
}

TEST_CASE("sim: statevec profile agrees with the subspace oracle") {
  for (const qmds::CodeParams& p : {qmds::CodeParams{3, 1, 2, 3}, qmds::CodeParams{4, 2, 2, 5}}) {
    const auto code = QuantumMdsCode::construct(p);
    const auto sv = qmds::statevec_profile(code);
    CHECK(sv.report.passed());
    const auto cmp = qmds::compare_oracles(full_profile(code), sv);
    CHECK(cmp.report.passed());
    CHECK(cmp.max_delta < 1e-9);
    CHECK(cmp.subsystems == (std::size_t{1} << (p.n + 1)));
  }
}
