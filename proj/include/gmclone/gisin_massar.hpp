#ifndef GMCLONE_GISIN_MASSAR_HPP
#define GMCLONE_GISIN_MASSAR_HPP

#include <bit>
#include <cmath>
#include <complex>
#include <cstdint>
#include <string>
#include <vector>

#include "gmclone/errors.hpp"
#include "gmclone/qubit.hpp"
#include "gmclone/state_vector.hpp"
#include "gmclone/symmetric.hpp"

namespace gmclone {

/// gamma_j = sqrt(2(M-j) / (M(M+1))), the weight of the sector with j
/// orthogonal clones.
template <typename Real = double>
Real gamma(int clones, int j) {
  if (clones < 1) throw DomainError("clone count must be >= 1");
  if (j < 0 || j >= clones) {
    throw DomainError("gamma index j=" + std::to_string(j) + " outside [0, " +
                      std::to_string(clones - 1) + "]");
  }
  return std::sqrt(Real(2) * Real(clones - j) / (Real(clones) * Real(clones + 1)));
}

/// 1 -> M universal cloner setup. The register holds 2M-1 qubits: clones at
/// positions [0, M), anticlones at [M, 2M-1).
template <typename Real>
struct BasicGMParameters {
  int clones = 1;
  BasicQubit<Real> input;

  int num_qubits() const noexcept { return 2 * clones - 1; }
};

using GMParameters = BasicGMParameters<double>;

/// sum_j gamma_j |(M-j) psi, j psi_perp>_S (x) |(M-j-1) psi_a, j psi_a_perp>_S
template <typename Real>
BasicStateVector<Real> build_gm(const BasicGMParameters<Real>& params) {
  const int m = params.clones;
  if (m < 1) throw DomainError("clone count must be >= 1");
  if (params.num_qubits() > max_dense_qubits) {
    throw ResourceLimitError("Gisin-Massar register of " + std::to_string(params.num_qubits()) +
                             " qubits exceeds the dense-state limit");
  }
  const BasicQubit<Real> anti = anticlone(params.input);
  BasicStateVector<Real> out(params.num_qubits());
  for (int j = 0; j < m; ++j) {
    const auto clones = symmetric_ket(m, j, params.input);
    const auto anticlones = symmetric_ket(m - 1, j, anti);
    out.amplitudes() += gamma<Real>(m, j) * kron(clones, anticlones).amplitudes();
  }
  return out;
}

template <typename Real>
BasicStateVector<Real> build_gm(int clones, const BasicQubit<Real>& input) {
  return build_gm(BasicGMParameters<Real>{clones, input});
}

/// Output for a computational-basis input |bit>.
template <typename Real = double>
BasicStateVector<Real> build_gm_basis(int clones, int bit) {
  return build_gm(clones, BasicQubit<Real>::basis(bit));
}

namespace detail {

template <typename Real>
Real binomial(int n, int k) {
  if (k < 0 || k > n) return Real(0);
  Real r = 1;
  for (int i = 1; i <= k; ++i) r = r * Real(n - k + i) / Real(i);
  return r;
}

template <typename Real>
std::complex<Real> ipow(std::complex<Real> base, int exponent) {
  std::complex<Real> r(1);
  for (int i = 0; i < exponent; ++i) r *= base;
  return r;
}

// Amplitude of |(n-j) phi, j phi_perp>_S on any basis ket of Hamming weight w,
// for w = 0..n. Obtained by expanding every factor in {|0>, |1>} and counting
// how many of the w ones come from phi_perp factors.
template <typename Real>
std::vector<std::complex<Real>> symmetric_weight_amplitudes(int n, int j,
                                                            const BasicQubit<Real>& phi) {
  const BasicQubit<Real> phi_perp = perp(phi);
  std::vector<std::complex<Real>> amps(static_cast<std::size_t>(n) + 1);
  Real norm2 = 0;
  for (int w = 0; w <= n; ++w) {
    std::complex<Real> a(0);
    for (int t = 0; t <= j; ++t) {
      const int from_phi_ones = w - t;
      const int from_phi_zeros = n - j - from_phi_ones;
      if (from_phi_ones < 0 || from_phi_zeros < 0 || t > w) continue;
      a += binomial<Real>(w, t) * binomial<Real>(n - w, j - t) *
           ipow(phi[0], from_phi_zeros) * ipow(phi[1], from_phi_ones) *
           ipow(phi_perp[0], j - t) * ipow(phi_perp[1], t);
    }
    amps[static_cast<std::size_t>(w)] = a;
    norm2 += binomial<Real>(n, w) * std::norm(a);
  }
  const Real scale = Real(1) / std::sqrt(norm2);
  for (auto& a : amps) a *= scale;
  return amps;
}

}  // namespace detail

/// The same output written directly in the computational basis: the
/// amplitude of |x, y> (clone bits x, anticlone bits y) is
/// sum_j gamma_j a_j(|x|) b_j(|y|), where a_j, b_j depend only on Hamming
/// weights. Built without tensor products or permutation sums, so it serves
/// as an independent check on build_gm.
template <typename Real>
BasicStateVector<Real> expand_gm_decomposed(int clones, const BasicQubit<Real>& input) {
  const int m = clones;
  if (m < 1) throw DomainError("clone count must be >= 1");
  const int n = 2 * m - 1;
  if (n > max_dense_qubits) throw ResourceLimitError("register exceeds the dense-state limit");
  const BasicQubit<Real> anti = anticlone(input);

  std::vector<std::vector<std::complex<Real>>> clone_amps;
  std::vector<std::vector<std::complex<Real>>> anti_amps;
  for (int j = 0; j < m; ++j) {
    clone_amps.push_back(detail::symmetric_weight_amplitudes(m, j, input));
    anti_amps.push_back(detail::symmetric_weight_amplitudes(m - 1, j, anti));
  }

  BasicStateVector<Real> out(n);
  const std::uint64_t anti_mask = (std::uint64_t{1} << (m - 1)) - 1;
  for (Eigen::Index i = 0; i < out.dimension(); ++i) {
    const auto bits = static_cast<std::uint64_t>(i);
    const auto wx = static_cast<std::size_t>(std::popcount(bits >> (m - 1)));
    const auto wy = static_cast<std::size_t>(std::popcount(bits & anti_mask));
    std::complex<Real> a(0);
    for (int j = 0; j < m; ++j) {
      const auto ju = static_cast<std::size_t>(j);
      a += gamma<Real>(m, j) * clone_amps[ju][wx] * anti_amps[ju][wy];
    }
    out[i] = a;
  }
  return out;
}

}  // namespace gmclone

#endif  // GMCLONE_GISIN_MASSAR_HPP
