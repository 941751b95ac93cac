#pragma once

#include "orbit/symplectic.hpp"

namespace orbit {

/// Point Z : H- -> H+ of the Siegel disc: Z^T = Z and I - Z bar Z positive definite.
struct SiegelPoint {
    ComplexMatrix z;

    static SiegelPoint origin(Polarization pol) { return {ComplexMatrix::Zero(pol.n, pol.n)}; }
    Polarization pol() const { return Polarization(z.rows()); }
};

/// Tangent vector: a symmetric n x n matrix.
struct SiegelTangent {
    ComplexMatrix v;
};

inline constexpr double kDiscTol = 1e-10;

struct DiscMembership {
    bool inside = false;
    bool symmetric = false;
    double symmetry_residual = 0.0;  ///< ||Z - Z^T||_F
    double min_eigenvalue = 0.0;     ///< smallest eigenvalue of I - Z bar Z
    double dual_min_eigenvalue = 0.0;  ///< smallest eigenvalue of I - Z* Z
};

/// Checks symmetry (absolute Frobenius, `tol`) and both positivity forms at threshold `tol`.
DiscMembership siegel_contains(const ComplexMatrix& z, double tol = kDiscTol);

/// rho_a(Z) = (gZ + h)(bar h Z + bar g)^{-1}.
/// ConsistencyError when bar h Z + bar g has condition number above 1e12.
SiegelPoint mobius_act(const SymplecticElement& a, const SiegelPoint& z);

/// Derivative of mobius_act at Z in direction U:
///   g U W^{-1} - (gZ + h) W^{-1} bar h U W^{-1},  W = bar h Z + bar g.
SiegelTangent mobius_tangent(const SymplecticElement& a, const SiegelPoint& z, const SiegelTangent& u);

/// g_Z = exp([[0, B_Z], [bar B_Z, 0]]) with B_Z = Z artanh|Z| / |Z|, so that rho_{g_Z}(0) = Z.
/// SpectrumDomainError when ||Z||_op > 1 - 1e-8.
SymplecticElement transitive_element(const SiegelPoint& z);

/// B_Z = Z f(Z* Z), f(x) = artanh(sqrt x)/sqrt x.
ComplexMatrix transitive_generator(const SiegelPoint& z);

/// Invariant Hermitian metric Tr(conj(G V) G U), G = (I - Z bar Z)^{-1}.
/// DomainError when Z is outside the disc or a tangent is not symmetric.
Complex siegel_metric(const SiegelPoint& z, const SiegelTangent& u, const SiegelTangent& v);

/// Kahler form Im h_D(Z)(U, V).
double siegel_kahler(const SiegelPoint& z, const SiegelTangent& u, const SiegelTangent& v);

/// Z = radius * S / (||S||_op + 1) with S complex symmetric Gaussian, so ||Z||_op < radius.
SiegelPoint random_disc_point(Rng& rng, Polarization pol, double radius = 0.9);

/// Z = radius * S / ||S||_op exactly on the sphere of operator norm `radius`.
SiegelPoint random_disc_point_on_sphere(Rng& rng, Polarization pol, double radius);

SiegelTangent random_tangent(Rng& rng, Polarization pol, double scale = 1.0);

} // namespace orbit
