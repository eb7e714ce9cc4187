#ifndef GMCLONE_ANALYSIS_HPP
#define GMCLONE_ANALYSIS_HPP

#include <algorithm>
#include <cmath>
#include <complex>
#include <cstdint>
#include <iosfwd>
#include <string>
#include <vector>

#include <Eigen/Core>
#include <Eigen/Eigenvalues>

#include "gmclone/errors.hpp"
#include "gmclone/gisin_massar.hpp"
#include "gmclone/mps.hpp"
#include "gmclone/qubit.hpp"
#include "gmclone/state_vector.hpp"

namespace gmclone {

template <typename Real>
class BasicDensityMatrix {
 public:
  using Scalar = std::complex<Real>;
  using Matrix = Eigen::Matrix<Scalar, Eigen::Dynamic, Eigen::Dynamic>;

  explicit BasicDensityMatrix(Matrix entries) : entries_(std::move(entries)) {
    if (entries_.rows() != entries_.cols()) throw DomainError("density matrix must be square");
  }

  Eigen::Index dim() const noexcept { return entries_.rows(); }
  const Matrix& entries() const noexcept { return entries_; }
  Scalar operator()(Eigen::Index r, Eigen::Index c) const { return entries_(r, c); }

  Scalar trace() const { return entries_.trace(); }

  Real hermiticity_error() const { return (entries_ - entries_.adjoint()).cwiseAbs().maxCoeff(); }

  Real min_eigenvalue() const {
    const Matrix h = (entries_ + entries_.adjoint()) / Real(2);
    Eigen::SelfAdjointEigenSolver<Matrix> es(h, Eigen::EigenvaluesOnly);
    return es.eigenvalues().minCoeff();
  }

  /// <psi| rho |psi>
  Real expectation(const typename BasicStateVector<Real>::Amplitudes& psi) const {
    return std::real(psi.dot(entries_ * psi));
  }

 private:
  Matrix entries_;
};

using DensityMatrix = BasicDensityMatrix<double>;

/// Partial trace onto `keep` (0-based qubit positions). Kept qubits are
/// ordered by ascending position in the result.
template <typename Real>
BasicDensityMatrix<Real> reduced_density(const BasicStateVector<Real>& state,
                                         std::vector<int> keep) {
  using Matrix = typename BasicDensityMatrix<Real>::Matrix;
  const int n = state.num_qubits();
  if (keep.empty()) throw DomainError("reduced_density needs at least one kept qubit");
  std::sort(keep.begin(), keep.end());
  if (std::adjacent_find(keep.begin(), keep.end()) != keep.end()) {
    throw DomainError("duplicate qubit position in keep set");
  }
  if (keep.front() < 0 || keep.back() >= n) throw DomainError("qubit position out of range");

  std::vector<int> traced;
  for (int q = 0, k = 0; q < n; ++q) {
    if (k < static_cast<int>(keep.size()) && keep[static_cast<std::size_t>(k)] == q) {
      ++k;
    } else {
      traced.push_back(q);
    }
  }

  // psi(kept, traced) so that rho = psi psi^dagger
  const Eigen::Index kept_dim = Eigen::Index{1} << keep.size();
  const Eigen::Index traced_dim = Eigen::Index{1} << traced.size();
  Matrix psi(kept_dim, traced_dim);
  for (Eigen::Index i = 0; i < state.dimension(); ++i) {
    const auto bits = static_cast<std::uint64_t>(i);
    Eigen::Index row = 0;
    Eigen::Index col = 0;
    for (int q : keep) row = (row << 1) | static_cast<Eigen::Index>((bits >> (n - 1 - q)) & 1U);
    for (int q : traced) col = (col << 1) | static_cast<Eigen::Index>((bits >> (n - 1 - q)) & 1U);
    psi(row, col) = state[i];
  }
  return BasicDensityMatrix<Real>(psi * psi.adjoint());
}

namespace detail {

template <typename Real>
std::vector<Real> single_site_fidelities(const BasicStateVector<Real>& state, int first, int count,
                                         const BasicQubit<Real>& target) {
  std::vector<Real> out;
  out.reserve(static_cast<std::size_t>(count));
  const auto psi = target.vector();
  for (int k = first; k < first + count; ++k) {
    out.push_back(reduced_density(state, {k}).expectation(psi));
  }
  return out;
}

inline void check_gm_register(int num_qubits, int clones) {
  if (clones < 1) throw DomainError("clone count must be >= 1");
  if (num_qubits != 2 * clones - 1) {
    throw DomainError("state has " + std::to_string(num_qubits) + " qubits, expected 2M-1 = " +
                      std::to_string(2 * clones - 1));
  }
}

}  // namespace detail

/// F_k = <psi_in| rho_k |psi_in> for each clone position k.
template <typename Real>
std::vector<Real> clone_fidelity(const BasicStateVector<Real>& state, int clones,
                                 const BasicQubit<Real>& input) {
  detail::check_gm_register(state.num_qubits(), clones);
  return detail::single_site_fidelities(state, 0, clones, input);
}

/// Same figure of merit for the M-1 anticlone positions, against anticlone(input).
template <typename Real>
std::vector<Real> anticlone_fidelity(const BasicStateVector<Real>& state, int clones,
                                     const BasicQubit<Real>& input) {
  detail::check_gm_register(state.num_qubits(), clones);
  return detail::single_site_fidelities(state, clones, clones - 1, anticlone(input));
}

/// min_theta || e^{i theta} |GM(alpha 0 + beta 1)> - (alpha |GM(0)> + beta |GM(1)>) ||
template <typename Real>
Real nonlinearity_gap(int clones, std::complex<Real> alpha, std::complex<Real> beta) {
  const Real norm = std::sqrt(std::norm(alpha) + std::norm(beta));
  if (!(std::abs(norm - Real(1)) <= Real(1e-12))) {
    throw DomainError("(alpha, beta) must be normalized");
  }
  const auto direct = build_gm(clones, BasicQubit<Real>::from_amplitudes(alpha, beta));
  const typename BasicStateVector<Real>::Amplitudes superposed =
      alpha * build_gm_basis<Real>(clones, 0).amplitudes() +
      beta * build_gm_basis<Real>(clones, 1).amplitudes();
  const std::complex<Real> ov = direct.amplitudes().dot(superposed);
  const std::complex<Real> phase =
      std::abs(ov) > Real(0) ? ov / std::abs(ov) : std::complex<Real>(1);
  return (phase * direct.amplitudes() - superposed).norm();
}

/// Largest M the scaling study covers (2M-1 = 15 qubits).
inline constexpr int max_sweep_clones = 8;

struct ScalingRow {
  int clones = 0;
  int num_qubits = 0;
  int bond_dim = 0;
  std::vector<int> cut_ranks;  // full bond tuple (D_1, ..., D_{n+1})
  double tol = 0;
};

/// Compiles the cloner output for (|0> + |1>)/sqrt(2) at every M in range.
inline std::vector<ScalingRow> scaling_sweep(int min_clones, int max_clones, double tol) {
  if (min_clones < 1 || min_clones > max_clones) {
    throw DomainError("sweep range must satisfy 1 <= M_min <= M_max");
  }
  if (max_clones > max_sweep_clones) {
    throw ResourceLimitError("sweep limited to M <= " + std::to_string(max_sweep_clones));
  }
  const Qubit input = Qubit::equatorial(0.0);
  std::vector<ScalingRow> rows;
  for (int m = min_clones; m <= max_clones; ++m) {
    const auto compiled = mps_from_state(build_gm(m, input), tol);
    ScalingRow row;
    row.clones = m;
    row.num_qubits = 2 * m - 1;
    row.cut_ranks = compiled.mps.bond_dims();
    row.bond_dim = *std::max_element(row.cut_ranks.begin(), row.cut_ranks.end());
    row.tol = tol;
    rows.push_back(std::move(row));
  }
  return rows;
}

/// Header "M,num_qubits,bond_dim,cut_ranks,tol"; cut_ranks joined by ';'.
void write_scaling_csv(std::ostream& out, const std::vector<ScalingRow>& rows);

}  // namespace gmclone

#endif  // GMCLONE_ANALYSIS_HPP
