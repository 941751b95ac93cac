#pragma once

#include <complex>
#include <cstdint>
#include <functional>
#include <limits>
#include <random>
#include <string>

#include <Eigen/Dense>

#include "orbit/errors.hpp"

namespace orbit {

using Complex = std::complex<double>;
using ComplexMatrix = Eigen::MatrixXcd;
using ComplexVector = Eigen::VectorXcd;

inline constexpr Complex kI{0.0, 1.0};

/// Throws NumericRangeError if any entry is NaN or infinite.
void require_finite(const ComplexMatrix& a, const char* what);

/// Throws DimensionError unless `a` is square.
void require_square(const ComplexMatrix& a, const char* what);

/// Matrix exponential by scaling and squaring with the [13/13] Pade approximant.
ComplexMatrix mat_exp(const ComplexMatrix& a);

/// Frobenius norm, which is the Hilbert-Schmidt norm in finite dimension.
double hs_norm(const ComplexMatrix& a);

/// Largest singular value.
double op_norm(const ComplexMatrix& a);

/// Ratio of extreme singular values; +inf for a singular matrix.
double condition_number(const ComplexMatrix& a);

/// Smallest eigenvalue of the Hermitian part (A + A*)/2.
double min_hermitian_eigenvalue(const ComplexMatrix& a);

/// Positive-definiteness gate.
///
/// `a` must be Hermitian up to ||A - A*||_F <= tol * ||A||_F, otherwise a
/// DomainError is raised. Returns true iff the smallest eigenvalue of the
/// Hermitian part exceeds `tol`.
bool is_positive_definite(const ComplexMatrix& a, double tol);

/// Same gate with the default threshold 1e-10 * ||A||_op (Hermiticity checked at 1e-10 relative).
bool is_positive_definite(const ComplexMatrix& a);

/// Real function applied to the spectrum of a Hermitian matrix, with the
/// closed interval on which it may be evaluated.
struct SpectralFunction {
    std::string name;
    std::function<double(double)> f;
    double lower = -std::numeric_limits<double>::infinity();
    double upper = std::numeric_limits<double>::infinity();
};

namespace spectral {

SpectralFunction identity();
SpectralFunction exp();
SpectralFunction sqrt();

/// x -> artanh(sqrt(x)) / sqrt(x), continued analytically through x = 0
/// (atan(sqrt(-x))/sqrt(-x) for the round-off negatives of a PSD input).
/// Admissible for x <= 1 - 1e-8.
SpectralFunction artanh_sqrt_over_sqrt();

inline constexpr double kArtanhMargin = 1e-8;

} // namespace spectral

/// U f(Lambda) U* from the unitary eigendecomposition of the Hermitian part of `a`.
/// Raises SpectrumDomainError when an eigenvalue lies outside [f.lower, f.upper];
/// eigenvalues are never clamped.
ComplexMatrix herm_funcalc(const ComplexMatrix& a, const SpectralFunction& f);

/// Seedable generator shared by every sampler in the library.
class Rng {
public:
    explicit Rng(std::uint64_t seed) : engine_(seed) {}

    double normal() { return normal_(engine_); }
    double uniform() { return uniform_(engine_); }
    Complex complex_normal() { return {normal(), normal()}; }

    /// rows x cols matrix of i.i.d. complex Gaussian entries (real and imaginary parts N(0,1)).
    ComplexMatrix gaussian(Eigen::Index rows, Eigen::Index cols);

private:
    std::mt19937_64 engine_;
    std::normal_distribution<double> normal_{0.0, 1.0};
    std::uniform_real_distribution<double> uniform_{0.0, 1.0};
};

/// Haar-ish random unitary from the QR factorization of a Gaussian matrix.
ComplexMatrix random_unitary(Rng& rng, Eigen::Index n);

} // namespace orbit
