// Test-only reference computations. Nothing here calls the library routines it
// is used to check: permutations are enumerated literally, partial traces are
// summed entry by entry, ranks come from Gram-matrix eigenvalues.
#ifndef GMCLONE_TESTS_ORACLES_HPP
#define GMCLONE_TESTS_ORACLES_HPP

#include <algorithm>
#include <cmath>
#include <complex>
#include <cstdint>
#include <numeric>
#include <random>
#include <vector>

#include <Eigen/Dense>

namespace oracle {

using Complex = std::complex<double>;
using Vector = Eigen::VectorXcd;

inline std::uint64_t bit_of(std::uint64_t index, int n, int pos) {
  return (index >> (n - 1 - pos)) & 1U;
}

// (1/n!) sum over every permutation, each applied explicitly.
inline Vector symmetrize_unnormalized(const Vector& v, int n) {
  std::vector<int> perm(static_cast<std::size_t>(n));
  std::iota(perm.begin(), perm.end(), 0);
  Vector acc = Vector::Zero(v.size());
  double count = 0;
  do {
    for (std::uint64_t i = 0; i < static_cast<std::uint64_t>(v.size()); ++i) {
      std::uint64_t j = 0;
      for (int k = 0; k < n; ++k) j |= bit_of(i, n, k) << (n - 1 - perm[static_cast<std::size_t>(k)]);
      acc(static_cast<Eigen::Index>(j)) += v(static_cast<Eigen::Index>(i));
    }
    count += 1;
  } while (std::next_permutation(perm.begin(), perm.end()));
  return acc / count;
}

// rho_{ab} = sum over traced bits t of psi(a, t) conj(psi(b, t)) for a single kept qubit.
inline Eigen::Matrix2cd single_qubit_rdm(const Vector& psi, int n, int keep) {
  Eigen::Matrix2cd rho = Eigen::Matrix2cd::Zero();
  for (std::uint64_t i = 0; i < static_cast<std::uint64_t>(psi.size()); ++i) {
    for (std::uint64_t j = 0; j < static_cast<std::uint64_t>(psi.size()); ++j) {
      bool same_rest = true;
      for (int q = 0; q < n && same_rest; ++q) {
        if (q != keep && bit_of(i, n, q) != bit_of(j, n, q)) same_rest = false;
      }
      if (!same_rest) continue;
      rho(static_cast<Eigen::Index>(bit_of(i, n, keep)), static_cast<Eigen::Index>(bit_of(j, n, keep))) +=
          psi(static_cast<Eigen::Index>(i)) * std::conj(psi(static_cast<Eigen::Index>(j)));
    }
  }
  return rho;
}

// Rank of the reshaped coefficient matrix at cut `left` (qubits [0, left) vs
// the rest), counting Gram eigenvalues above rel * lambda_max.
inline int schmidt_rank(const Vector& psi, int n, int left, double rel = 1e-10) {
  const Eigen::Index rows = Eigen::Index{1} << left;
  const Eigen::Index cols = Eigen::Index{1} << (n - left);
  Eigen::MatrixXcd c(rows, cols);
  for (Eigen::Index r = 0; r < rows; ++r) {
    for (Eigen::Index s = 0; s < cols; ++s) c(r, s) = psi(r * cols + s);
  }
  const Eigen::MatrixXcd gram = rows <= cols ? Eigen::MatrixXcd(c * c.adjoint())
                                             : Eigen::MatrixXcd(c.adjoint() * c);
  Eigen::SelfAdjointEigenSolver<Eigen::MatrixXcd> es(gram, Eigen::EigenvaluesOnly);
  const auto& ev = es.eigenvalues();
  const double top = ev.maxCoeff();
  return static_cast<int>((ev.array() > rel * top).count());
}

inline double optimal_universal_fidelity(int clones) {
  return (2.0 * clones + 1.0) / (3.0 * clones);
}

inline Vector random_state(int n, std::mt19937_64& rng) {
  std::normal_distribution<double> g;
  Vector v(Eigen::Index{1} << n);
  for (Eigen::Index i = 0; i < v.size(); ++i) v(i) = Complex(g(rng), g(rng));
  return v / v.norm();
}

inline double random_angle(std::mt19937_64& rng) {
  return std::uniform_real_distribution<double>(0.0, 2.0 * M_PI)(rng);
}

}  // namespace oracle

#endif  // GMCLONE_TESTS_ORACLES_HPP
