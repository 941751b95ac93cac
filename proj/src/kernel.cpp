#include "orbit/kernel.hpp"

#include <algorithm>
#include <array>
#include <cmath>

namespace orbit {

void require_finite(const ComplexMatrix& a, const char* what)
{
    if (!a.allFinite()) {
        throw NumericRangeError(std::string(what) + ": non-finite entry");
    }
}

void require_square(const ComplexMatrix& a, const char* what)
{
    if (a.rows() != a.cols()) {
        throw DimensionError(std::string(what) + ": expected a square matrix, got " +
                             std::to_string(a.rows()) + "x" + std::to_string(a.cols()));
    }
}

namespace {

double one_norm(const ComplexMatrix& a)
{
    if (a.size() == 0) return 0.0;
    return a.cwiseAbs().colwise().sum().maxCoeff();
}

// Higham (2005) coefficients of the [13/13] Pade approximant of exp.
constexpr std::array<double, 14> kPade13 = {
    64764752532480000.0, 32382376266240000.0, 7771770303897600.0,
    1187353796428800.0,  129060195264000.0,   10559470521600.0,
    670442572800.0,      33522128640.0,       1323241920.0,
    40840800.0,          960960.0,            16380.0,
    182.0,               1.0};

constexpr double kTheta13 = 5.371920351148152;

} // namespace

ComplexMatrix mat_exp(const ComplexMatrix& a)
{
    require_square(a, "mat_exp");
    require_finite(a, "mat_exp");
    const Eigen::Index n = a.rows();
    const ComplexMatrix id = ComplexMatrix::Identity(n, n);
    if (n == 0 || a.isZero(0.0)) return id;

    const double norm = one_norm(a);
    int squarings = 0;
    if (norm > kTheta13) {
        squarings = std::max(0, static_cast<int>(std::ceil(std::log2(norm / kTheta13))));
    }
    const ComplexMatrix x = a / std::ldexp(1.0, squarings);

    const auto& b = kPade13;
    const ComplexMatrix x2 = x * x;
    const ComplexMatrix x4 = x2 * x2;
    const ComplexMatrix x6 = x4 * x2;

    const ComplexMatrix u_inner = b[13] * x6 + b[11] * x4 + b[9] * x2;
    const ComplexMatrix u = x * (x6 * u_inner + b[7] * x6 + b[5] * x4 + b[3] * x2 + b[1] * id);
    const ComplexMatrix v_inner = b[12] * x6 + b[10] * x4 + b[8] * x2;
    const ComplexMatrix v = x6 * v_inner + b[6] * x6 + b[4] * x4 + b[2] * x2 + b[0] * id;

    ComplexMatrix result = (v - u).partialPivLu().solve(v + u);
    for (int k = 0; k < squarings; ++k) {
        result = result * result;
    }
    if (!result.allFinite()) {
        throw NumericRangeError("mat_exp: result overflows double precision");
    }
    return result;
}

double hs_norm(const ComplexMatrix& a)
{
    return a.norm();
}

double op_norm(const ComplexMatrix& a)
{
    if (a.size() == 0) return 0.0;
    Eigen::JacobiSVD<ComplexMatrix> svd(a);
    return svd.singularValues()(0);
}

double condition_number(const ComplexMatrix& a)
{
    require_square(a, "condition_number");
    if (a.size() == 0) return 1.0;
    Eigen::JacobiSVD<ComplexMatrix> svd(a);
    const auto& s = svd.singularValues();
    const double smallest = s(s.size() - 1);
    if (smallest == 0.0) return std::numeric_limits<double>::infinity();
    return s(0) / smallest;
}

double min_hermitian_eigenvalue(const ComplexMatrix& a)
{
    require_square(a, "min_hermitian_eigenvalue");
    const ComplexMatrix herm = 0.5 * (a + a.adjoint());
    Eigen::SelfAdjointEigenSolver<ComplexMatrix> eig(herm, Eigen::EigenvaluesOnly);
    return eig.eigenvalues()(0);
}

namespace {

bool positive_definite_gate(const ComplexMatrix& a, double herm_rel_tol, double threshold)
{
    require_square(a, "is_positive_definite");
    require_finite(a, "is_positive_definite");
    const double asym = (a - a.adjoint()).norm();
    if (asym > herm_rel_tol * a.norm()) {
        throw DomainError("is_positive_definite: matrix is not Hermitian (||A - A*||_F = " +
                          std::to_string(asym) + ")");
    }
    if (a.size() == 0) return true;
    return min_hermitian_eigenvalue(a) > threshold;
}

} // namespace

bool is_positive_definite(const ComplexMatrix& a, double tol)
{
    return positive_definite_gate(a, tol, tol);
}

bool is_positive_definite(const ComplexMatrix& a)
{
    return positive_definite_gate(a, 1e-10, 1e-10 * op_norm(a));
}

namespace spectral {

SpectralFunction identity()
{
    return {"identity", [](double x) { return x; }};
}

SpectralFunction exp()
{
    return {"exp", [](double x) { return std::exp(x); }};
}

SpectralFunction sqrt()
{
    return {"sqrt", [](double x) { return std::sqrt(x); }, 0.0};
}

SpectralFunction artanh_sqrt_over_sqrt()
{
    auto f = [](double x) {
        if (std::abs(x) < 1e-6) {
            // 1 + x/3 + x^2/5 + x^3/7, truncation error below 1e-24
            return 1.0 + x * (1.0 / 3.0 + x * (1.0 / 5.0 + x / 7.0));
        }
        if (x > 0.0) {
            const double r = std::sqrt(x);
            return std::atanh(r) / r;
        }
        const double r = std::sqrt(-x);
        return std::atan(r) / r;
    };
    // Negative eigenvalues beyond round-off mean the input was not PSD.
    return {"artanh(sqrt(x))/sqrt(x)", f, -1e-10, 1.0 - kArtanhMargin};
}

} // namespace spectral

ComplexMatrix herm_funcalc(const ComplexMatrix& a, const SpectralFunction& f)
{
    require_square(a, "herm_funcalc");
    require_finite(a, "herm_funcalc");
    const ComplexMatrix herm = 0.5 * (a + a.adjoint());
    Eigen::SelfAdjointEigenSolver<ComplexMatrix> eig(herm);
    if (eig.info() != Eigen::Success) {
        throw ConsistencyError("herm_funcalc: eigendecomposition failed");
    }
    const Eigen::VectorXd& lambda = eig.eigenvalues();
    Eigen::VectorXcd values(lambda.size());
    for (Eigen::Index k = 0; k < lambda.size(); ++k) {
        const double x = lambda(k);
        if (x < f.lower || x > f.upper) {
            throw SpectrumDomainError("herm_funcalc: eigenvalue " + std::to_string(x) +
                                      " outside the domain of " + f.name);
        }
        values(k) = f.f(x);
    }
    const ComplexMatrix& u = eig.eigenvectors();
    return u * values.asDiagonal() * u.adjoint();
}

ComplexMatrix Rng::gaussian(Eigen::Index rows, Eigen::Index cols)
{
    ComplexMatrix m(rows, cols);
    // Fill in row-major order so the stream-to-entry mapping is independent of storage order.
    for (Eigen::Index r = 0; r < rows; ++r) {
        for (Eigen::Index c = 0; c < cols; ++c) {
            m(r, c) = complex_normal();
        }
    }
    return m;
}

ComplexMatrix random_unitary(Rng& rng, Eigen::Index n)
{
    const ComplexMatrix g = rng.gaussian(n, n);
    Eigen::HouseholderQR<ComplexMatrix> qr(g);
    ComplexMatrix q = qr.householderQ() * ComplexMatrix::Identity(n, n);
    const ComplexMatrix r = qr.matrixQR().triangularView<Eigen::Upper>();
    // Phase fix so the distribution does not depend on the QR sign convention.
    for (Eigen::Index k = 0; k < n; ++k) {
        const Complex d = r(k, k);
        if (std::abs(d) > 0.0) q.col(k) *= d / std::abs(d);
    }
    return q;
}

} // namespace orbit
