#ifndef GMCLONE_STATE_VECTOR_HPP
#define GMCLONE_STATE_VECTOR_HPP

#include <complex>
#include <cstdint>
#include <span>
#include <string>
#include <vector>

#include <Eigen/Core>

#include "gmclone/bitstring.hpp"
#include "gmclone/errors.hpp"
#include "gmclone/qubit.hpp"

namespace gmclone {

/// Largest register a dense state vector may hold (2^30 amplitudes).
inline constexpr int max_dense_qubits = 30;

/// Dense amplitude vector over n qubits, indexed big-endian (qubit 1 is the
/// most significant bit). The 0-qubit state is the scalar 1.
template <typename Real>
class BasicStateVector {
 public:
  using Scalar = std::complex<Real>;
  using Amplitudes = Eigen::Matrix<Scalar, Eigen::Dynamic, 1>;

  BasicStateVector() : num_qubits_(0), amplitudes_(Amplitudes::Ones(1)) {}

  /// All-zero amplitudes.
  explicit BasicStateVector(int num_qubits) : num_qubits_(checked_size(num_qubits)) {
    amplitudes_ = Amplitudes::Zero(Eigen::Index{1} << num_qubits);
  }

  BasicStateVector(int num_qubits, Amplitudes amplitudes)
      : num_qubits_(checked_size(num_qubits)), amplitudes_(std::move(amplitudes)) {
    if (amplitudes_.size() != (Eigen::Index{1} << num_qubits)) {
      throw DomainError("amplitude count " + std::to_string(amplitudes_.size()) +
                        " does not match 2^" + std::to_string(num_qubits));
    }
  }

  static BasicStateVector basis(const BitString& bits) {
    BasicStateVector s(static_cast<int>(bits.size()));
    s.amplitudes_(static_cast<Eigen::Index>(bits.value())) = Scalar(1);
    return s;
  }

  /// q_1 (x) q_2 (x) ... (x) q_n
  static BasicStateVector product(std::span<const BasicQubit<Real>> factors) {
    BasicStateVector s;
    for (const auto& q : factors) s = kron(s, q);
    return s;
  }

  int num_qubits() const noexcept { return num_qubits_; }
  Eigen::Index dimension() const noexcept { return amplitudes_.size(); }

  const Amplitudes& amplitudes() const noexcept { return amplitudes_; }
  Amplitudes& amplitudes() noexcept { return amplitudes_; }

  Scalar operator[](Eigen::Index index) const { return amplitudes_(index); }
  Scalar& operator[](Eigen::Index index) { return amplitudes_(index); }

  Scalar amplitude(const BitString& bits) const {
    if (static_cast<int>(bits.size()) != num_qubits_) {
      throw DomainError("bitstring length does not match register size");
    }
    return amplitudes_(static_cast<Eigen::Index>(bits.value()));
  }

  Real norm() const { return amplitudes_.norm(); }

  BasicStateVector normalized() const {
    const Real n = norm();
    if (!(n > Real(0))) throw InvalidStateError("cannot normalize a zero state");
    return BasicStateVector(num_qubits_, amplitudes_ / n);
  }

  /// Basis labels with |amplitude| > threshold, ascending.
  std::vector<BitString> support(Real threshold) const {
    std::vector<BitString> out;
    for (Eigen::Index i = 0; i < amplitudes_.size(); ++i) {
      if (std::abs(amplitudes_(i)) > threshold) {
        out.emplace_back(static_cast<std::size_t>(num_qubits_), static_cast<std::uint64_t>(i));
      }
    }
    return out;
  }

  friend BasicStateVector kron(const BasicStateVector& a, const BasicStateVector& b) {
    Amplitudes out(a.dimension() * b.dimension());
    for (Eigen::Index i = 0; i < a.dimension(); ++i) {
      out.segment(i * b.dimension(), b.dimension()) = a.amplitudes_(i) * b.amplitudes_;
    }
    return BasicStateVector(a.num_qubits_ + b.num_qubits_, std::move(out));
  }

  friend BasicStateVector kron(const BasicStateVector& a, const BasicQubit<Real>& q) {
    Amplitudes out(2 * a.dimension());
    for (Eigen::Index i = 0; i < a.dimension(); ++i) {
      out(2 * i) = a.amplitudes_(i) * q.alpha();
      out(2 * i + 1) = a.amplitudes_(i) * q.beta();
    }
    return BasicStateVector(a.num_qubits_ + 1, std::move(out));
  }

 private:
  static int checked_size(int num_qubits) {
    if (num_qubits < 0) throw DomainError("negative qubit count");
    if (num_qubits > max_dense_qubits) {
      throw ResourceLimitError("dense state of " + std::to_string(num_qubits) +
                               " qubits exceeds the " + std::to_string(max_dense_qubits) +
                               "-qubit limit");
    }
    return num_qubits;
  }

  int num_qubits_;
  Amplitudes amplitudes_;
};

using StateVector = BasicStateVector<double>;

/// <a|b>
template <typename Real>
std::complex<Real> overlap(const BasicStateVector<Real>& a, const BasicStateVector<Real>& b) {
  if (a.num_qubits() != b.num_qubits()) throw DomainError("overlap of mismatched registers");
  return a.amplitudes().dot(b.amplitudes());
}

/// |<a|b>| / (|a| |b|); equals 1 iff the states agree up to global phase.
template <typename Real>
Real overlap_modulus(const BasicStateVector<Real>& a, const BasicStateVector<Real>& b) {
  return std::abs(overlap(a, b)) / (a.norm() * b.norm());
}

/// Relabels qubits: qubit k of the input lands at position perm[k] of the output.
template <typename Real>
BasicStateVector<Real> permute_qubits(const BasicStateVector<Real>& state,
                                      std::span<const int> perm) {
  const int n = state.num_qubits();
  if (static_cast<int>(perm.size()) != n) throw DomainError("permutation size mismatch");
  std::vector<bool> seen(static_cast<std::size_t>(n), false);
  for (int p : perm) {
    if (p < 0 || p >= n || seen[static_cast<std::size_t>(p)]) {
      throw DomainError("not a permutation");
    }
    seen[static_cast<std::size_t>(p)] = true;
  }
  BasicStateVector<Real> out(n);
  for (Eigen::Index i = 0; i < state.dimension(); ++i) {
    std::uint64_t j = 0;
    for (int k = 0; k < n; ++k) {
      const std::uint64_t bit = (static_cast<std::uint64_t>(i) >> (n - 1 - k)) & 1U;
      j |= bit << (n - 1 - perm[static_cast<std::size_t>(k)]);
    }
    out[static_cast<Eigen::Index>(j)] = state[i];
  }
  return out;
}

}  // namespace gmclone

#endif  // GMCLONE_STATE_VECTOR_HPP
