#include <cmath>
#include <complex>
#include <random>
#include <set>
#include <vector>

#include <doctest.h>

#include "gmclone/gisin_massar.hpp"
#include "gmclone/symmetric.hpp"
#include "oracles.hpp"

using namespace gmclone;
using C = std::complex<double>;

namespace {

StateVector from_terms(int n, std::initializer_list<std::pair<const char*, C>> terms) {
  StateVector s(n);
  for (const auto& [bits, amp] : terms) s[static_cast<Eigen::Index>(BitString::parse(bits).value())] = amp;
  return s;
}

double max_diff(const StateVector& a, const StateVector& b) {
  return (a.amplitudes() - b.amplitudes()).cwiseAbs().maxCoeff();
}

double binom(int n, int k) { return detail::binomial<double>(n, k); }

const double r2 = std::sqrt(2.0);
const double r3 = std::sqrt(3.0);
const double r6 = std::sqrt(6.0);

}  // namespace

TEST_CASE("gamma values and completeness") {
  CHECK(gamma(1, 0) == doctest::Approx(1.0).epsilon(1e-15));
  CHECK(std::abs(gamma(2, 0) - std::sqrt(2.0 / 3.0)) < 1e-15);
  CHECK(std::abs(gamma(2, 1) - std::sqrt(1.0 / 3.0)) < 1e-15);
  CHECK(std::abs(gamma(2, 0) - 0.816497) < 1e-6);
  CHECK(std::abs(gamma(2, 1) - 0.577350) < 1e-6);
  for (int m = 1; m <= 20; ++m) {
    double sum = 0;
    for (int j = 0; j < m; ++j) sum += gamma(m, j) * gamma(m, j);
    CHECK(std::abs(sum - 1.0) <= 1e-14);
  }
  CHECK_THROWS_AS(gamma(2, 2), DomainError);
  CHECK_THROWS_AS(gamma(2, -1), DomainError);
  CHECK_THROWS_AS(gamma(0, 0), DomainError);
}

TEST_CASE("symmetrize examples") {
  const auto s01 = symmetrize(StateVector::basis(BitString::parse("01")));
  CHECK(max_diff(s01, from_terms(2, {{"01", 1 / r2}, {"10", 1 / r2}})) < 1e-15);

  const auto s000 = symmetrize(StateVector::basis(BitString::parse("000")));
  CHECK(max_diff(s000, StateVector::basis(BitString::parse("000"))) < 1e-15);

  const auto s001 = symmetrize(StateVector::basis(BitString::parse("001")));
  CHECK(max_diff(s001, from_terms(3, {{"001", 1 / r3}, {"010", 1 / r3}, {"100", 1 / r3}})) < 1e-15);

  // the same expansions from literal enumeration of all 3! permutations
  const auto lit = oracle::symmetrize_unnormalized(StateVector::basis(BitString::parse("001")).amplitudes(), 3);
  CHECK((lit / lit.norm() - s001.amplitudes()).norm() < 1e-15);
}

TEST_CASE("symmetrize rejects states without a symmetric part") {
  const auto singlet = from_terms(2, {{"01", 1 / r2}, {"10", -1 / r2}});
  CHECK_THROWS_AS(symmetrize(singlet), ZeroProjectionError);
  StateVector big(10);
  big[1] = 1 / r2;
  big[2] = -1 / r2;
  CHECK_THROWS_AS(symmetrize(big), ZeroProjectionError);
}

TEST_CASE("permutation and weight-class projections agree with brute force for n <= 8") {
  std::mt19937_64 rng(11);
  for (int n = 1; n <= 8; ++n) {
    const StateVector s(n, oracle::random_state(n, rng));
    const auto brute = oracle::symmetrize_unnormalized(s.amplitudes(), n);
    const auto by_perm = project_symmetric_by_permutations(s);
    const auto by_weight = project_symmetric_by_weight(s);
    CHECK((by_perm.amplitudes() - brute).norm() < 1e-13);
    CHECK((by_weight.amplitudes() - brute).norm() < 1e-13);
  }
}

TEST_CASE("symmetrized output is invariant under every transposition") {
  std::mt19937_64 rng(12);
  for (int n : {3, 9, 10}) {
    const auto s = symmetrize(StateVector(n, oracle::random_state(n, rng)));
    for (int a = 0; a < n; ++a) {
      for (int b = a + 1; b < n; ++b) {
        std::vector<int> perm(static_cast<std::size_t>(n));
        std::iota(perm.begin(), perm.end(), 0);
        std::swap(perm[static_cast<std::size_t>(a)], perm[static_cast<std::size_t>(b)]);
        CHECK(max_diff(permute_qubits(s, std::span<const int>(perm)), s) < 1e-14);
      }
    }
    CHECK(std::abs(s.norm() - 1.0) < 1e-14);
  }
}

TEST_CASE("symmetric_ket examples") {
  const Qubit zero = Qubit::basis(0);
  CHECK(max_diff(symmetric_ket(2, 1, zero), from_terms(2, {{"01", -1 / r2}, {"10", -1 / r2}})) < 1e-15);
  CHECK(max_diff(symmetric_ket(3, 0, zero), from_terms(3, {{"000", 1}})) < 1e-15);
  CHECK(max_diff(symmetric_ket(2, 2, zero), from_terms(2, {{"11", 1}})) < 1e-15);
  CHECK(symmetric_ket(0, 0, zero).num_qubits() == 0);
  CHECK_THROWS_AS(symmetric_ket(2, 3, zero), DomainError);

  // phi = |0>: C(n, j) bitstrings with j ones, each 1/sqrt(C(n, j)) in modulus
  for (int n = 1; n <= 10; ++n) {
    for (int j = 0; j <= n; ++j) {
      const auto s = symmetric_ket(n, j, zero);
      for (Eigen::Index i = 0; i < s.dimension(); ++i) {
        const bool in = std::popcount(static_cast<std::uint64_t>(i)) == j;
        const double expected = in ? 1.0 / std::sqrt(binom(n, j)) : 0.0;
        if (std::abs(std::abs(s[i]) - expected) > 1e-14) FAIL("n=" << n << " j=" << j << " i=" << i);
      }
    }
  }
}

TEST_CASE("build_gm small cases") {
  const Qubit q = Qubit::bloch(0.9, 2.1);
  const auto m1 = build_gm(1, q);
  CHECK(m1.num_qubits() == 1);
  CHECK(std::abs(m1[0] - q.alpha()) < 1e-15);
  CHECK(std::abs(m1[1] - q.beta()) < 1e-15);

  // perp|0> = -|1> puts a minus sign on the j = 1 sector
  const auto m2_0 = build_gm_basis(2, 0);
  CHECK(max_diff(m2_0, from_terms(3, {{"001", std::sqrt(2.0 / 3.0)}, {"010", -1 / r6}, {"100", -1 / r6}})) < 1e-15);

  // for |1> the sign comes from the anticlone complement perp|0> = -|1>
  const auto m2_1 = build_gm_basis(2, 1);
  CHECK(max_diff(m2_1, from_terms(3, {{"110", std::sqrt(2.0 / 3.0)}, {"101", -1 / r6}, {"011", -1 / r6}})) < 1e-15);

  CHECK(max_diff(build_gm_basis(1, 0), from_terms(1, {{"0", 1}})) < 1e-15);
}

TEST_CASE("build_gm_basis supports are separated by popcount") {
  for (int m = 1; m <= 10; ++m) {
    const auto s0 = build_gm_basis(m, 0).support(1e-13);
    const auto s1 = build_gm_basis(m, 1).support(1e-13);
    CHECK(s0.size() == static_cast<std::size_t>(binom(2 * m - 1, m - 1)));
    CHECK(s1.size() == static_cast<std::size_t>(binom(2 * m - 1, m)));
    for (const auto& b : s0) CHECK(b.popcount() == m - 1);
    for (const auto& b : s1) CHECK(b.popcount() == m);
  }
  const auto s0 = build_gm_basis(2, 0).support(1e-13);
  CHECK(s0 == std::vector<BitString>{BitString::parse("001"), BitString::parse("010"), BitString::parse("100")});
  const auto s1 = build_gm_basis(2, 1).support(1e-13);
  CHECK(s1 == std::vector<BitString>{BitString::parse("011"), BitString::parse("101"), BitString::parse("110")});
}

TEST_CASE("basis outputs carry gamma_j spread evenly over each sector") {
  for (int m = 1; m <= 10; ++m) {
    for (int b = 0; b <= 1; ++b) {
      const auto s = build_gm_basis(m, b);
      std::set<long long> recovered;
      for (Eigen::Index i = 0; i < s.dimension(); ++i) {
        if (std::abs(s[i]) <= 1e-13) continue;
        const BitString bits(static_cast<std::size_t>(2 * m - 1), static_cast<std::uint64_t>(i));
        const int clone_ones = bits.popcount(0, static_cast<std::size_t>(m));
        const int j = b == 0 ? clone_ones : m - clone_ones;
        const double g = std::abs(s[i]) * std::sqrt(binom(m, j) * binom(m - 1, j));
        if (std::abs(g - gamma(m, j)) > 1e-12) FAIL("m=" << m << " bits=" << bits.to_string());
        recovered.insert(std::llround(g * 1e9));
      }
      CHECK(recovered.size() == static_cast<std::size_t>(m));
    }
  }
}

TEST_CASE("per-ket magnitudes of the j = 1 and j = M-1 sectors coincide") {
  // gamma_j^2 / (C(M,j) C(M-1,j)) equals 2 / (M^2 (M+1)) at both ends, so the
  // raw amplitude moduli take fewer than M distinct values once M >= 3.
  for (int m = 3; m <= 8; ++m) {
    const auto s = build_gm_basis(m, 0);
    std::set<long long> magnitudes;
    for (Eigen::Index i = 0; i < s.dimension(); ++i) {
      if (std::abs(s[i]) > 1e-13) magnitudes.insert(std::llround(std::abs(s[i]) * 1e12));
    }
    CHECK(magnitudes.size() < static_cast<std::size_t>(m));
  }
}

TEST_CASE("build_gm is symmetric within the clone and anticlone blocks") {
  std::mt19937_64 rng(13);
  for (int m = 1; m <= 6; ++m) {
    for (int t = 0; t < 10; ++t) {
      const auto s = build_gm(m, Qubit::equatorial(oracle::random_angle(rng)));
      CHECK(std::abs(s.norm() - 1.0) < 1e-12);
      const int n = 2 * m - 1;
      auto check_swap = [&](int a, int b) {
        std::vector<int> perm(static_cast<std::size_t>(n));
        std::iota(perm.begin(), perm.end(), 0);
        std::swap(perm[static_cast<std::size_t>(a)], perm[static_cast<std::size_t>(b)]);
        CHECK(max_diff(permute_qubits(s, std::span<const int>(perm)), s) <= 1e-12);
      };
      for (int a = 0; a < m; ++a)
        for (int b = a + 1; b < m; ++b) check_swap(a, b);
      for (int a = m; a < n; ++a)
        for (int b = a + 1; b < n; ++b) check_swap(a, b);
    }
  }
}

TEST_CASE("expand_gm_decomposed examples") {
  const double h = 1 / r2;
  const auto e1 = expand_gm_decomposed(1, make_qubit(h, h));
  CHECK(max_diff(e1, from_terms(1, {{"0", h}, {"1", h}})) < 1e-15);

  const auto e2 = expand_gm_decomposed(2, Qubit::basis(0));
  CHECK(overlap_modulus(e2, from_terms(3, {{"001", std::sqrt(2.0 / 3.0)}, {"010", -1 / r6}, {"100", -1 / r6}})) ==
        doctest::Approx(1.0).epsilon(1e-14));

  const auto eq = make_qubit(h, h);
  CHECK(std::abs(overlap_modulus(expand_gm_decomposed(2, eq), build_gm(2, eq)) - 1.0) <= 1e-10);
}

TEST_CASE("expand_gm_decomposed matches build_gm") {
  std::mt19937_64 rng(14);
  std::normal_distribution<double> g;
  for (int m = 1; m <= 6; ++m) {
    for (int t = 0; t < 10; ++t) {
      const Qubit eq = Qubit::equatorial(oracle::random_angle(rng));
      CHECK(std::abs(overlap_modulus(build_gm(m, eq), expand_gm_decomposed(m, eq)) - 1.0) <= 1e-10);
      const Qubit q = make_qubit(C(g(rng), g(rng)), C(g(rng), g(rng)));
      const auto a = build_gm(m, q);
      const auto b = expand_gm_decomposed(m, q);
      CHECK(std::abs(overlap_modulus(a, b) - 1.0) <= 1e-10);
      CHECK(std::abs(b.norm() - 1.0) <= 1e-10);
    }
  }
}

TEST_CASE("weight-class symmetrization path for registers above the permutation limit") {
  // M = 9 and 10 push the clone block onto the weight-class projector
  const Qubit q = Qubit::equatorial(0.4);
  for (int m : {9, 10}) {
    const auto s = build_gm(m, q);
    CHECK(std::abs(s.norm() - 1.0) < 1e-10);
    CHECK(std::abs(overlap_modulus(s, expand_gm_decomposed(m, q)) - 1.0) < 1e-10);
  }
}

TEST_CASE("long double instantiation") {
  using Q = BasicQubit<long double>;
  const auto s = build_gm(3, Q::equatorial(0.3L));
  CHECK(std::abs(s.norm() - 1.0L) < 1e-17L);
  long double sum = 0;
  for (int j = 0; j < 5; ++j) sum += gamma<long double>(5, j) * gamma<long double>(5, j);
  CHECK(std::abs(sum - 1.0L) < 1e-17L);
}
