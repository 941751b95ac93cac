#include "orbit/siegel.hpp"

#include <cmath>

namespace orbit {

DiscMembership siegel_contains(const ComplexMatrix& z, double tol)
{
    require_square(z, "siegel_contains");
    require_finite(z, "siegel_contains");
    const Eigen::Index n = z.rows();
    const ComplexMatrix id = ComplexMatrix::Identity(n, n);
    DiscMembership r;
    r.symmetry_residual = (z - z.transpose()).norm();
    r.symmetric = r.symmetry_residual <= tol;
    r.min_eigenvalue = min_hermitian_eigenvalue(id - z * z.conjugate());
    r.dual_min_eigenvalue = min_hermitian_eigenvalue(id - z.adjoint() * z);
    r.inside = r.symmetric && r.min_eigenvalue > tol && r.dual_min_eigenvalue > tol;
    return r;
}

namespace {

Eigen::PartialPivLU<ComplexMatrix> denominator(const SymplecticElement& a, const ComplexMatrix& z)
{
    if (a.g.rows() != z.rows() || z.rows() != z.cols()) {
        throw DimensionError("mobius_act: element and point have different sizes");
    }
    const ComplexMatrix w = a.h.conjugate() * z + a.g.conjugate();
    const double cond = condition_number(w);
    if (!(cond <= kSingularConditionBound)) {
        throw ConsistencyError("mobius_act: bar h Z + bar g is numerically singular (cond = " +
                               std::to_string(cond) + ")");
    }
    return ComplexMatrix(w.transpose()).partialPivLu();
}

// X W^{-1} = ((W^T)^{-1} X^T)^T, given the LU factors of W^T.
ComplexMatrix right_solve(const Eigen::PartialPivLU<ComplexMatrix>& w_transpose, const ComplexMatrix& x)
{
    return w_transpose.solve(x.transpose()).transpose();
}

void require_symmetric(const ComplexMatrix& v, const char* what)
{
    const double scale = std::max(1.0, v.norm());
    if ((v - v.transpose()).norm() > 1e-9 * scale) {
        throw DomainError(std::string(what) + ": tangent vector is not symmetric");
    }
}

} // namespace

SiegelPoint mobius_act(const SymplecticElement& a, const SiegelPoint& z)
{
    const auto w = denominator(a, z.z);
    return {right_solve(w, a.g * z.z + a.h)};
}

SiegelTangent mobius_tangent(const SymplecticElement& a, const SiegelPoint& z, const SiegelTangent& u)
{
    const auto w = denominator(a, z.z);
    const ComplexMatrix u_winv = right_solve(w, u.v);
    const ComplexMatrix image = right_solve(w, a.g * z.z + a.h);
    return {a.g * u_winv - image * a.h.conjugate() * u_winv};
}

ComplexMatrix transitive_generator(const SiegelPoint& z)
{
    require_square(z.z, "transitive_element");
    const double norm = op_norm(z.z);
    if (norm > 1.0 - spectral::kArtanhMargin) {
        throw SpectrumDomainError("transitive_element: ||Z||_op = " + std::to_string(norm) +
                                  " too close to the boundary");
    }
    const ComplexMatrix b = z.z * herm_funcalc(z.z.adjoint() * z.z, spectral::artanh_sqrt_over_sqrt());
    if ((b - b.transpose()).norm() > 1e-8 * std::max(1.0, b.norm())) {
        throw ConsistencyError("transitive_element: B_Z is not symmetric; is Z symmetric?");
    }
    return b;
}

SymplecticElement transitive_element(const SiegelPoint& z)
{
    const ComplexMatrix b = transitive_generator(z);
    // Remove round-off asymmetry so the generator passes the sp membership gate exactly.
    const ComplexMatrix b_sym = 0.5 * (b + b.transpose());
    return exp_to_group({ComplexMatrix::Zero(b.rows(), b.cols()), b_sym});
}

Complex siegel_metric(const SiegelPoint& z, const SiegelTangent& u, const SiegelTangent& v)
{
    const DiscMembership m = siegel_contains(z.z);
    if (!m.inside) {
        throw DomainError("siegel_metric: Z is outside the Siegel disc");
    }
    if (u.v.rows() != z.z.rows() || v.v.rows() != z.z.rows() || u.v.cols() != z.z.cols() ||
        v.v.cols() != z.z.cols()) {
        throw DimensionError("siegel_metric: tangent size mismatch");
    }
    // Tr(V* U) = Tr(bar V U) holds only for symmetric V.
    require_symmetric(u.v, "siegel_metric");
    require_symmetric(v.v, "siegel_metric");
    const Eigen::Index n = z.z.rows();
    const ComplexMatrix id = ComplexMatrix::Identity(n, n);
    const auto lu = (id - z.z * z.z.conjugate()).partialPivLu();
    const ComplexMatrix gu = lu.solve(u.v);
    const ComplexMatrix gv = lu.solve(v.v);
    return (gv.conjugate() * gu).trace();
}

double siegel_kahler(const SiegelPoint& z, const SiegelTangent& u, const SiegelTangent& v)
{
    return siegel_metric(z, u, v).imag();
}

namespace {

ComplexMatrix random_symmetric(Rng& rng, Eigen::Index n)
{
    const ComplexMatrix s = rng.gaussian(n, n);
    return 0.5 * (s + s.transpose());
}

} // namespace

SiegelPoint random_disc_point(Rng& rng, Polarization pol, double radius)
{
    const ComplexMatrix s = random_symmetric(rng, pol.n);
    return {radius * s / (op_norm(s) + 1.0)};
}

SiegelPoint random_disc_point_on_sphere(Rng& rng, Polarization pol, double radius)
{
    const ComplexMatrix s = random_symmetric(rng, pol.n);
    return {radius * s / op_norm(s)};
}

SiegelTangent random_tangent(Rng& rng, Polarization pol, double scale)
{
    return {scale * random_symmetric(rng, pol.n)};
}

} // namespace orbit
