#ifndef GMCLONE_SYMMETRIC_HPP
#define GMCLONE_SYMMETRIC_HPP

#include <bit>
#include <cstdint>
#include <vector>

#include "gmclone/errors.hpp"
#include "gmclone/qubit.hpp"
#include "gmclone/state_vector.hpp"

namespace gmclone {

/// Registers up to this size are symmetrized by summing over permutations;
/// larger ones by projecting onto the Hamming-weight (Dicke) basis.
inline constexpr int max_permutation_symmetrize_qubits = 8;

/// Norm below which a projected state counts as having no symmetric part.
inline constexpr double zero_projection_threshold = 1e-13;

namespace detail {

template <typename Real>
void swap_qubits_inplace(typename BasicStateVector<Real>::Amplitudes& v, int n, int a, int b) {
  const std::uint64_t ma = std::uint64_t{1} << (n - 1 - a);
  const std::uint64_t mb = std::uint64_t{1} << (n - 1 - b);
  for (std::uint64_t i = 0; i < static_cast<std::uint64_t>(v.size()); ++i) {
    // visit each (a=1, b=0) index once and exchange it with its (a=0, b=1) partner
    if ((i & ma) && !(i & mb)) {
      std::swap(v(static_cast<Eigen::Index>(i)), v(static_cast<Eigen::Index>((i ^ ma) | mb)));
    }
  }
}

}  // namespace detail

/// (1/n!) sum_{pi in S_n} P_pi |state>, unnormalized.
///
/// The sum runs over every permutation, grouped by cosets of S_{m-1} in S_m:
/// sum_{S_m} = (e + sum_{k<m} (k m)) sum_{S_{m-1}}, applied for m = 2..n.
/// Cost is O(n^2 2^n) instead of O(n! 2^n).
template <typename Real>
BasicStateVector<Real> project_symmetric_by_permutations(const BasicStateVector<Real>& state) {
  using Amplitudes = typename BasicStateVector<Real>::Amplitudes;
  const int n = state.num_qubits();
  Amplitudes v = state.amplitudes();
  for (int m = 2; m <= n; ++m) {
    Amplitudes acc = v;
    for (int k = 0; k < m - 1; ++k) {
      Amplitudes swapped = v;
      detail::swap_qubits_inplace<Real>(swapped, n, k, m - 1);
      acc += swapped;
    }
    v = acc / Real(m);
  }
  return BasicStateVector<Real>(n, std::move(v));
}

/// Projection onto span{|D_w>}: every amplitude is replaced by the mean over
/// its Hamming-weight class. Unnormalized.
template <typename Real>
BasicStateVector<Real> project_symmetric_by_weight(const BasicStateVector<Real>& state) {
  using Scalar = std::complex<Real>;
  const int n = state.num_qubits();
  std::vector<Scalar> sums(static_cast<std::size_t>(n) + 1, Scalar(0));
  std::vector<Real> counts(static_cast<std::size_t>(n) + 1, Real(0));
  for (Eigen::Index i = 0; i < state.dimension(); ++i) {
    const auto w = static_cast<std::size_t>(std::popcount(static_cast<std::uint64_t>(i)));
    sums[w] += state[i];
    counts[w] += Real(1);
  }
  BasicStateVector<Real> out(n);
  for (Eigen::Index i = 0; i < state.dimension(); ++i) {
    const auto w = static_cast<std::size_t>(std::popcount(static_cast<std::uint64_t>(i)));
    out[i] = sums[w] / counts[w];
  }
  return out;
}

/// Normalized projection onto the completely symmetric subspace.
template <typename Real>
BasicStateVector<Real> symmetrize(const BasicStateVector<Real>& state) {
  auto projected = state.num_qubits() <= max_permutation_symmetrize_qubits
                       ? project_symmetric_by_permutations(state)
                       : project_symmetric_by_weight(state);
  const Real norm = projected.norm();
  if (!(norm >= Real(zero_projection_threshold))) {
    throw ZeroProjectionError("state has no symmetric component (projected norm " +
                              std::to_string(static_cast<double>(norm)) + ")");
  }
  projected.amplitudes() /= norm;
  return projected;
}

/// |(n-j) phi, j phi_perp>_S. n = 0 yields the scalar state 1.
template <typename Real>
BasicStateVector<Real> symmetric_ket(int n, int j, const BasicQubit<Real>& phi) {
  if (n < 0 || j < 0 || j > n) {
    throw DomainError("symmetric_ket requires 0 <= j <= n, got n=" + std::to_string(n) +
                      ", j=" + std::to_string(j));
  }
  std::vector<BasicQubit<Real>> factors(static_cast<std::size_t>(n - j), phi);
  factors.insert(factors.end(), static_cast<std::size_t>(j), perp(phi));
  return symmetrize(BasicStateVector<Real>::product(factors));
}

}  // namespace gmclone

#endif  // GMCLONE_SYMMETRIC_HPP
