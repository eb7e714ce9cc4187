#include <cmath>
#include <complex>
#include <random>

#include <doctest.h>

#include "gmclone/bitstring.hpp"
#include "gmclone/qubit.hpp"
#include "oracles.hpp"

using namespace gmclone;
using C = std::complex<double>;

namespace {

bool close(C a, C b, double tol = 1e-15) { return std::abs(a - b) <= tol; }

}  // namespace

TEST_CASE("make_qubit normalizes and guards the zero pair") {
  const Qubit zero = make_qubit(1.0, 0.0);
  CHECK(zero.alpha() == C(1));
  CHECK(zero.beta() == C(0));

  const double h = 1.0 / std::sqrt(2.0);
  const Qubit eq = make_qubit(h, h);
  CHECK(close(eq.alpha(), h));
  CHECK(close(eq.beta(), h));

  const Qubit scaled = make_qubit(2.0, 0.0);
  CHECK(close(scaled.alpha(), 1.0));
  CHECK(close(scaled.beta(), 0.0));

  CHECK_THROWS_AS(make_qubit(0.0, 0.0), InvalidStateError);
  CHECK_THROWS_AS(make_qubit(C(NAN, 0), 1.0), InvalidStateError);
}

TEST_CASE("perp") {
  const Qubit p0 = perp(Qubit::basis(0));
  CHECK(close(p0.alpha(), 0.0));
  CHECK(close(p0.beta(), -1.0));

  const double h = 1.0 / std::sqrt(2.0);
  const Qubit pe = perp(make_qubit(h, h));
  CHECK(close(pe.alpha(), h));
  CHECK(close(pe.beta(), -h));

  const double theta = M_PI / 3;
  const double phi = M_PI / 4;
  const Qubit pb = perp(Qubit::bloch(theta, phi));
  CHECK(close(pb.alpha(), std::polar(std::sin(theta / 2), -phi)));
  CHECK(close(pb.beta(), -std::cos(theta / 2)));
}

TEST_CASE("anticlone") {
  const Qubit a0 = anticlone(Qubit::basis(0));
  CHECK(close(a0.alpha(), 0.0));
  CHECK(close(a0.beta(), 1.0));
  const Qubit a1 = anticlone(Qubit::basis(1));
  CHECK(close(a1.alpha(), 1.0));
  CHECK(close(a1.beta(), 0.0));

  const double h = 1.0 / std::sqrt(2.0);
  const Qubit a = anticlone(make_qubit(C(h), C(0, h)));
  CHECK(close(a.alpha(), C(0, -h)));
  CHECK(close(a.beta(), C(h)));
  // Bloch form e^{-i phi} sin(theta/2)|0> + cos(theta/2)|1> at theta = phi = pi/2
  CHECK(close(a.alpha(), std::polar(std::sin(M_PI / 4), -M_PI / 2)));
  CHECK(close(a.beta(), std::cos(M_PI / 4)));
}

TEST_CASE("single-qubit invariants over random inputs") {
  std::mt19937_64 rng(7);
  std::normal_distribution<double> g;
  for (int t = 0; t < 100; ++t) {
    const Qubit q = make_qubit(C(g(rng), g(rng)), C(g(rng), g(rng)));
    CHECK(std::abs(q.norm() - 1.0) <= 1e-14);
    CHECK(std::abs(overlap(q, perp(q))) <= 1e-14);
    CHECK(std::abs(std::abs(overlap(q, perp(perp(q)))) - 1.0) <= 1e-12);
    CHECK(std::abs(anticlone(q).norm() - 1.0) <= 1e-14);
  }
}

TEST_CASE("bit_index is big-endian") {
  CHECK(bit_index(BitString::parse("001")) == 1);
  CHECK(bit_index(BitString::parse("100")) == 4);
  CHECK(bit_index(BitString::parse("110")) == 6);
  CHECK_THROWS_AS(bit_index(BitString{}), DomainError);
  CHECK_THROWS_AS(BitString::parse("012"), DomainError);
  CHECK_THROWS_AS(BitString(2, 4), DomainError);
}

TEST_CASE("bit_index and index_bits roundtrip for every string up to length 15") {
  for (std::size_t n = 1; n <= 15; ++n) {
    for (std::uint64_t idx = 0; idx < (std::uint64_t{1} << n); ++idx) {
      const BitString b = index_bits(n, idx);
      if (bit_index(b) != idx || BitString::parse(b.to_string()) != b) {
        FAIL("roundtrip failed at n=" << n << " idx=" << idx);
      }
    }
  }
}

TEST_CASE("bitstring ordering is lexicographic") {
  CHECK(BitString::parse("0111") < BitString::parse("1000"));
  CHECK(BitString::parse("01") < BitString::parse("010"));
  CHECK(BitString::parse("011") > BitString::parse("01"));
  CHECK(BitString::parse("10") > BitString::parse("0111"));
  const BitString b = BitString::parse("10110");
  CHECK(b[0] == 1);
  CHECK(b[1] == 0);
  CHECK(b.popcount() == 3);
  CHECK(b.popcount(0, 2) == 1);
  CHECK(b.popcount(2, 3) == 2);
}
