#ifndef GMCLONE_QUBIT_HPP
#define GMCLONE_QUBIT_HPP

#include <cmath>
#include <complex>

#include <Eigen/Core>

#include "gmclone/errors.hpp"

namespace gmclone {

/// Normalized single-qubit pure state alpha|0> + beta|1>.
template <typename Real>
class BasicQubit {
 public:
  using Scalar = std::complex<Real>;
  using Vector = Eigen::Matrix<Scalar, 2, 1>;

  BasicQubit() : alpha_(1), beta_(0) {}

  /// Normalizes (alpha, beta). Throws InvalidStateError on a zero or non-finite pair.
  static BasicQubit from_amplitudes(Scalar alpha, Scalar beta) {
    const Real norm2 = std::norm(alpha) + std::norm(beta);
    if (!std::isfinite(norm2) || !(norm2 > Real(0))) {
      throw InvalidStateError("qubit amplitudes must have nonzero finite norm");
    }
    const Real scale = Real(1) / std::sqrt(norm2);
    return BasicQubit(alpha * scale, beta * scale);
  }

  static BasicQubit basis(int bit) {
    if (bit != 0 && bit != 1) throw DomainError("basis bit must be 0 or 1");
    return bit == 0 ? BasicQubit(Scalar(1), Scalar(0)) : BasicQubit(Scalar(0), Scalar(1));
  }

  /// cos(theta/2)|0> + e^{i phi} sin(theta/2)|1>
  static BasicQubit bloch(Real theta, Real phi) {
    return BasicQubit(Scalar(std::cos(theta / 2)), std::polar(std::sin(theta / 2), phi));
  }

  /// (|0> + e^{i phi}|1>) / sqrt(2)
  static BasicQubit equatorial(Real phi) {
    const Real h = std::sqrt(Real(0.5));
    return BasicQubit(Scalar(h), std::polar(h, phi));
  }

  Scalar alpha() const noexcept { return alpha_; }
  Scalar beta() const noexcept { return beta_; }
  Scalar operator[](int bit) const noexcept { return bit == 0 ? alpha_ : beta_; }

  Vector vector() const { return Vector(alpha_, beta_); }

  Real norm() const { return std::sqrt(std::norm(alpha_) + std::norm(beta_)); }

  template <typename R>
  friend BasicQubit<R> perp(const BasicQubit<R>& q);
  template <typename R>
  friend BasicQubit<R> anticlone(const BasicQubit<R>& q);

 private:
  BasicQubit(Scalar alpha, Scalar beta) : alpha_(alpha), beta_(beta) {}

  Scalar alpha_;
  Scalar beta_;
};

using Qubit = BasicQubit<double>;

template <typename Real>
BasicQubit<Real> make_qubit(std::complex<Real> alpha, std::complex<Real> beta) {
  return BasicQubit<Real>::from_amplitudes(alpha, beta);
}

inline Qubit make_qubit(std::complex<double> alpha, std::complex<double> beta) {
  return Qubit::from_amplitudes(alpha, beta);
}

/// Orthogonal complement beta*|0> - alpha*|1>.
template <typename Real>
BasicQubit<Real> perp(const BasicQubit<Real>& q) {
  return BasicQubit<Real>(std::conj(q.beta_), -std::conj(q.alpha_));
}

/// Anticlone beta*|0> + alpha|1>.
template <typename Real>
BasicQubit<Real> anticlone(const BasicQubit<Real>& q) {
  return BasicQubit<Real>(std::conj(q.beta_), q.alpha_);
}

/// <a|b>
template <typename Real>
std::complex<Real> overlap(const BasicQubit<Real>& a, const BasicQubit<Real>& b) {
  return std::conj(a.alpha()) * b.alpha() + std::conj(a.beta()) * b.beta();
}

}  // namespace gmclone

#endif  // GMCLONE_QUBIT_HPP
