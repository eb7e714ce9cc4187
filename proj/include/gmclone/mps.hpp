#ifndef GMCLONE_MPS_HPP
#define GMCLONE_MPS_HPP

#include <algorithm>
#include <array>
#include <cmath>
#include <complex>
#include <string>
#include <vector>

#include <Eigen/Core>
#include <Eigen/SVD>

#include "gmclone/errors.hpp"
#include "gmclone/state_vector.hpp"

namespace gmclone {

inline constexpr double default_truncation_tol = 1e-12;

/// sum_{i_1..i_n} (l . A_1^{i_1} ... A_n^{i_n} . r) |i_1 ... i_n>
///
/// Site k holds A_k^0 and A_k^1, each D_k x D_{k+1}. The left boundary l is a
/// row vector of length D_1, the right boundary r a column of length D_{n+1}.
template <typename Real>
struct BasicMatrixProductState {
  using Scalar = std::complex<Real>;
  using Matrix = Eigen::Matrix<Scalar, Eigen::Dynamic, Eigen::Dynamic>;
  using RowVector = Eigen::Matrix<Scalar, 1, Eigen::Dynamic>;
  using ColVector = Eigen::Matrix<Scalar, Eigen::Dynamic, 1>;

  struct Site {
    std::array<Matrix, 2> a;

    Eigen::Index rows() const { return a[0].rows(); }
    Eigen::Index cols() const { return a[0].cols(); }
  };

  std::vector<Site> sites;
  RowVector left_boundary;
  ColVector right_boundary;

  int num_sites() const noexcept { return static_cast<int>(sites.size()); }

  /// (D_1, ..., D_{n+1})
  std::vector<int> bond_dims() const {
    std::vector<int> dims;
    dims.reserve(sites.size() + 1);
    for (const auto& s : sites) dims.push_back(static_cast<int>(s.rows()));
    if (!sites.empty()) dims.push_back(static_cast<int>(sites.back().cols()));
    return dims;
  }

  void validate() const {
    if (sites.empty()) throw MalformedMpsError("MPS has no sites");
    for (std::size_t k = 0; k < sites.size(); ++k) {
      const auto& s = sites[k];
      if (s.a[0].rows() != s.a[1].rows() || s.a[0].cols() != s.a[1].cols()) {
        throw MalformedMpsError("site " + std::to_string(k) + ": A^0 and A^1 shapes differ");
      }
      if (s.rows() == 0 || s.cols() == 0) {
        throw MalformedMpsError("site " + std::to_string(k) + " has an empty bond");
      }
      if (k + 1 < sites.size() && s.cols() != sites[k + 1].rows()) {
        throw MalformedMpsError("bond mismatch between sites " + std::to_string(k) + " and " +
                                std::to_string(k + 1));
      }
    }
    if (left_boundary.size() != sites.front().rows()) {
      throw MalformedMpsError("left boundary length does not match D_1");
    }
    if (right_boundary.size() != sites.back().cols()) {
      throw MalformedMpsError("right boundary length does not match D_{n+1}");
    }
  }
};

using MatrixProductState = BasicMatrixProductState<double>;

/// Singular values at each internal cut k | k+1, in sweep order.
template <typename Real>
struct BasicBondSpectrum {
  struct Cut {
    std::vector<Real> singular_values;  // descending, untruncated
    int retained_rank = 0;
  };

  std::vector<Cut> cuts;
  Real tolerance = Real(default_truncation_tol);

  /// sqrt of the summed squares of every discarded singular value.
  Real discarded_weight() const {
    Real sum = 0;
    for (const auto& c : cuts) {
      for (std::size_t i = static_cast<std::size_t>(c.retained_rank); i < c.singular_values.size();
           ++i) {
        sum += c.singular_values[i] * c.singular_values[i];
      }
    }
    return std::sqrt(sum);
  }
};

using BondSpectrum = BasicBondSpectrum<double>;

template <typename Real>
struct BasicCompiledState {
  BasicMatrixProductState<Real> mps;
  BasicBondSpectrum<Real> spectrum;
};

using CompiledState = BasicCompiledState<double>;

/// Left-to-right successive SVD. At each cut the remainder C is reshaped to
/// (D_k * 2) x rest, factored C = V S W^dagger, the site becomes A_k = V S and
/// W^dagger is carried forward. Singular values <= tol * sigma_max are dropped.
template <typename Real>
BasicCompiledState<Real> mps_from_state(const BasicStateVector<Real>& state,
                                        Real tol = Real(default_truncation_tol)) {
  using Mps = BasicMatrixProductState<Real>;
  using Matrix = typename Mps::Matrix;
  const int n = state.num_qubits();
  if (n < 1) throw DomainError("cannot compile a 0-qubit state");
  if (!(tol >= Real(0)) || !(tol < Real(1))) {
    throw DomainError("truncation tolerance must lie in [0, 1)");
  }

  BasicCompiledState<Real> out;
  out.spectrum.tolerance = tol;
  out.mps.left_boundary = Mps::RowVector::Ones(1);
  out.mps.right_boundary = Mps::ColVector::Ones(1);

  // remainder(a, rest): a = left bond index, rest = remaining qubits, big-endian
  Matrix remainder = state.amplitudes().transpose();
  for (int k = 0; k < n - 1; ++k) {
    const Eigen::Index bond = remainder.rows();
    const Eigen::Index rest = remainder.cols() / 2;
    Matrix c(bond * 2, rest);
    for (Eigen::Index a = 0; a < bond; ++a) {
      for (int i = 0; i < 2; ++i) c.row(a * 2 + i) = remainder.block(a, i * rest, 1, rest);
    }

    // Jacobi rather than BDCSVD: the latter reports spurious singular values on
    // the highly degenerate remainders met past the middle of large registers.
    Eigen::JacobiSVD<Matrix> svd(c, Eigen::ComputeThinU | Eigen::ComputeThinV);
    const auto& sigma = svd.singularValues();
    typename BasicBondSpectrum<Real>::Cut cut;
    cut.singular_values.assign(sigma.data(), sigma.data() + sigma.size());
    const Real sigma_max = sigma.size() > 0 ? sigma(0) : Real(0);
    if (!(sigma_max > Real(0))) {
      throw DegenerateStateError("all singular values vanish at cut " + std::to_string(k + 1));
    }
    Eigen::Index keep = 0;
    while (keep < sigma.size() && sigma(keep) > tol * sigma_max) ++keep;
    cut.retained_rank = static_cast<int>(keep);
    out.spectrum.cuts.push_back(std::move(cut));

    const Matrix site = svd.matrixU().leftCols(keep) * sigma.head(keep).asDiagonal();
    typename Mps::Site s;
    for (int i = 0; i < 2; ++i) {
      s.a[static_cast<std::size_t>(i)].resize(bond, keep);
      for (Eigen::Index a = 0; a < bond; ++a) {
        s.a[static_cast<std::size_t>(i)].row(a) = site.row(a * 2 + i);
      }
    }
    out.mps.sites.push_back(std::move(s));
    remainder = svd.matrixV().leftCols(keep).adjoint();
  }

  typename Mps::Site last;
  for (int i = 0; i < 2; ++i) last.a[static_cast<std::size_t>(i)] = remainder.col(i);
  out.mps.sites.push_back(std::move(last));
  return out;
}

/// Contracts the chain with a single left-to-right sweep.
template <typename Real>
BasicStateVector<Real> mps_to_state(const BasicMatrixProductState<Real>& mps) {
  using Matrix = typename BasicMatrixProductState<Real>::Matrix;
  mps.validate();
  const int n = mps.num_sites();
  if (n > max_dense_qubits) throw ResourceLimitError("MPS too long to contract densely");

  // prefix(p, b): partial amplitude for prefix bits p with open bond index b
  Matrix prefix = mps.left_boundary;
  for (const auto& site : mps.sites) {
    Matrix next(prefix.rows() * 2, site.cols());
    for (Eigen::Index p = 0; p < prefix.rows(); ++p) {
      for (int i = 0; i < 2; ++i) {
        next.row(p * 2 + i).noalias() = prefix.row(p) * site.a[static_cast<std::size_t>(i)];
      }
    }
    prefix = std::move(next);
  }
  return BasicStateVector<Real>(n, prefix * mps.right_boundary);
}

/// D = max_k D_k over every bond, boundary bonds included.
template <typename Real>
int bond_dimension(const BasicMatrixProductState<Real>& mps) {
  mps.validate();
  const auto dims = mps.bond_dims();
  return *std::max_element(dims.begin(), dims.end());
}

/// Direct sum alpha |mps0> + beta |mps1>: block-diagonal site tensors and
/// concatenated boundaries, so every bond dimension is D0_k + D1_k.
template <typename Real>
BasicMatrixProductState<Real> combine_basis_mps(const BasicMatrixProductState<Real>& mps0,
                                                const BasicMatrixProductState<Real>& mps1,
                                                std::complex<Real> alpha,
                                                std::complex<Real> beta) {
  using Mps = BasicMatrixProductState<Real>;
  mps0.validate();
  mps1.validate();
  if (mps0.num_sites() != mps1.num_sites()) {
    throw DomainError("cannot combine MPSs of " + std::to_string(mps0.num_sites()) + " and " +
                      std::to_string(mps1.num_sites()) + " sites");
  }
  Mps out;
  for (std::size_t k = 0; k < mps0.sites.size(); ++k) {
    const auto& s0 = mps0.sites[k];
    const auto& s1 = mps1.sites[k];
    typename Mps::Site s;
    for (std::size_t i = 0; i < 2; ++i) {
      s.a[i] = Mps::Matrix::Zero(s0.rows() + s1.rows(), s0.cols() + s1.cols());
      s.a[i].topLeftCorner(s0.rows(), s0.cols()) = s0.a[i];
      s.a[i].bottomRightCorner(s1.rows(), s1.cols()) = s1.a[i];
    }
    out.sites.push_back(std::move(s));
  }
  out.left_boundary.resize(mps0.left_boundary.size() + mps1.left_boundary.size());
  out.left_boundary << alpha * mps0.left_boundary, beta * mps1.left_boundary;
  out.right_boundary.resize(mps0.right_boundary.size() + mps1.right_boundary.size());
  out.right_boundary << mps0.right_boundary, mps1.right_boundary;
  return out;
}

}  // namespace gmclone

#endif  // GMCLONE_MPS_HPP
