#pragma once

#include <optional>

#include "orbit/siegel.hpp"

namespace orbit {

/// (A, lambda) in gl_res (+) C, the Schwinger central extension.
struct ExtendedAlgebraElement {
    BlockOperator op;
    Complex lambda{0.0, 0.0};
};

/// (mu, gamma) in (gl_res)_* (+) C.
struct ExtendedPredual {
    PredualElement mu;
    Complex gamma{0.0, 0.0};

    double distance(const ExtendedPredual& other) const;
};

/// Group element of the extension. At finite truncation the extension is
/// trivial, so an element is a pair (a, phase) with componentwise product;
/// every action below depends only on `a`.
class ExtendedGroupElement {
public:
    ExtendedGroupElement(BlockOperator a, Complex phase = 1.0);
    explicit ExtendedGroupElement(const SymplecticElement& a, Complex phase = 1.0);

    const BlockOperator& a() const { return a_; }
    Complex phase() const { return phase_; }

    ExtendedGroupElement operator*(const ExtendedGroupElement& other) const;
    ExtendedGroupElement inverse() const;

private:
    BlockOperator a_;
    Complex phase_;
};

/// s(A, B) = Tr(A [d, B]). The block form 2i Tr(A-+ B+- - A+- B-+) is evaluated as
/// well; ConsistencyError if the two disagree beyond 1e-10 (relative to |A||B|).
Complex schwinger(const BlockOperator& a, const BlockOperator& b);

/// [(A, lambda), (B, nu)] = ([A, B], s(A, B)).
ExtendedAlgebraElement extended_bracket(const ExtendedAlgebraElement& x, const ExtendedAlgebraElement& y);

/// sigma(a) = a d a^{-1} - d; DomainError for singular a.
PredualElement sigma_cocycle(const BlockOperator& a);
/// Same, using the explicit symplectic inverse.
PredualElement sigma_cocycle(const SymplecticElement& a);

/// Ad_G(B, nu) = (a B a^{-1}, nu - Tr(sigma(a^{-1}) B)).
ExtendedAlgebraElement extended_adjoint(const ExtendedGroupElement& g, const ExtendedAlgebraElement& x);

/// Ad*_G(mu, gamma) = (a^{-1} mu a - gamma sigma(a^{-1}), gamma).
///
/// This is a right action: Ad*_{G1 G2} = Ad*_{G2} o Ad*_{G1}.
ExtendedPredual coadjoint(const ExtendedGroupElement& g, const ExtendedPredual& m);

/// ad*_{(A, lambda)}(mu, gamma) = ([mu, A] - gamma [d, A], 0).
ExtendedPredual ad_star(const ExtendedAlgebraElement& x, const ExtendedPredual& m);

/// Affine action a . mu = a mu a^{-1} - gamma sigma(a) (a left action).
PredualElement affine_action(const BlockOperator& a, const PredualElement& mu, Complex gamma);

/// Point (-gamma sigma(a), gamma) of the orbit through (0, gamma).
/// Constant on the cosets a U(H+). DomainError when gamma == 0.
ExtendedPredual orbit_point(const SymplecticElement& a, double gamma);

/// Inverse of Z -> orbit_point(transitive_element(Z), gamma): recovers the disc point
/// from the -i eigenspace of a d a^{-1} = d - mu / gamma.
SiegelPoint orbit_to_siegel(const ExtendedPredual& m);

/// KKS form at (0, gamma): -gamma s(A, B). Real for sp inputs; the real part is returned.
double kks_form(const SpAlgebraElement& a, const SpAlgebraElement& b, double gamma);

/// Pull-back of the KKS form to U(H+)\Sp_res at the identity coset:
/// -2i gamma Tr(bar A2 B2 - bar B2 A2).
double pullback_form(const SpAlgebraElement& a, const SpAlgebraElement& b, double gamma);

/// Proportionality between the pulled-back KKS form and the disc Kahler form at 0.
inline double symplecto_constant(double gamma) { return -4.0 * gamma; }

struct SymplectoResult {
    double omega_d = 0.0;     ///< omega_D(0)(A2, B2)
    double omega_hat = 0.0;   ///< pulled-back KKS form
    double kks = 0.0;         ///< KKS form at (0, gamma)
    std::optional<double> ratio;  ///< omega_hat / omega_d, empty for a degenerate pair
    double residual = 0.0;    ///< |omega_hat - c omega_d|, c = -4 gamma
    bool conclusive() const { return ratio.has_value(); }
    bool passes() const;
};

inline constexpr double kDegeneratePairTol = 1e-12;

SymplectoResult symplecto_check(const SpAlgebraElement& a, const SpAlgebraElement& b, double gamma);

} // namespace orbit
