#pragma once

#include <cstdint>

#include "orbit/polarized.hpp"

namespace orbit {

/// Default membership tolerance (absolute Frobenius on the constraint residuals).
inline constexpr double kMembershipTol = 1e-9;

/// Element [[g, h], [bar h, bar g]] of Sp(V, Omega). Only (g, h) are stored;
/// the conjugate blocks are always derived.
struct SymplecticElement {
    ComplexMatrix g;
    ComplexMatrix h;

    static SymplecticElement identity(Polarization pol);

    Polarization pol() const { return Polarization(g.rows()); }
    BlockOperator full() const;
    /// Re-extracts (g, h) from a real-form operator; the lower blocks are discarded.
    static SymplecticElement from_operator(const BlockOperator& a);

    SymplecticElement operator*(const SymplecticElement& other) const;
};

/// Element [[A1, A2], [bar A2, bar A1]] of sp(V, Omega) with A1* = -A1, A2^T = A2.
struct SpAlgebraElement {
    ComplexMatrix a1;
    ComplexMatrix a2;

    static SpAlgebraElement zero(Polarization pol);

    Polarization pol() const { return Polarization(a1.rows()); }
    BlockOperator full() const;
    SpAlgebraElement operator-() const { return {-a1, -a2}; }
    SpAlgebraElement operator*(double s) const { return {s * a1, s * a2}; }
    SpAlgebraElement operator+(const SpAlgebraElement& o) const { return {a1 + o.a1, a2 + o.a2}; }
};

struct MembershipResult {
    bool member = false;
    double residual_first = 0.0;   ///< ||g*g - h^T bar h - I||_F  or  ||A1 + A1*||_F
    double residual_second = 0.0;  ///< ||g*h - h^T bar g||_F       or  ||A2 - A2^T||_F
    double residual_full = 0.0;    ///< ||a*Ja - J||_F              or  ||A*J + JA||_F
    double max_residual() const;
};

/// Omega(u, v) = <u, bar(J v)>, with the Hermitian product linear in the first slot.
Complex omega_eval(const ComplexVector& u, const ComplexVector& v);

/// bar u for a vector of H: entrywise conjugation with the halves swapped.
ComplexVector conj_vector(const ComplexVector& u);

MembershipResult is_symplectic(const SymplecticElement& a, double tol = kMembershipTol);

/// (g*, -h^T); DomainError when `a` fails membership at `tol`.
SymplecticElement symplectic_inverse(const SymplecticElement& a, double tol = kMembershipTol);

MembershipResult is_sp_algebra(const SpAlgebraElement& a, double tol = kMembershipTol);

/// A1 = (G - G*)/2, A2 = (H + H^T)/2 with G, H complex Gaussian times `scale`.
SpAlgebraElement random_sp_algebra(Polarization pol, double scale, std::uint64_t seed);
SpAlgebraElement random_sp_algebra(Rng& rng, Polarization pol, double scale);

/// exp of the full operator, repackaged as (g, h). DomainError if `a` is not in sp.
SymplecticElement exp_to_group(const SpAlgebraElement& a);

/// exp_to_group(random_sp_algebra(...)); scale defaults to 0.5 / sqrt(n) so that
/// ||A|| stays O(1) as n grows.
SymplecticElement random_symplectic(Rng& rng, Polarization pol, double scale = -1.0);

/// Block-diagonal element (u, 0) with u unitary: the isotropy group of 0 in the disc.
SymplecticElement random_isotropy(Rng& rng, Polarization pol);

} // namespace orbit
