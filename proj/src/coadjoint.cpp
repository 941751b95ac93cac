#include "orbit/coadjoint.hpp"

#include <cmath>

namespace orbit {

double ExtendedPredual::distance(const ExtendedPredual& other) const
{
    const double dm = mu.op.distance(other.mu.op);
    const double dg = std::abs(gamma - other.gamma);
    return std::sqrt(dm * dm + dg * dg);
}

ExtendedGroupElement::ExtendedGroupElement(BlockOperator a, Complex phase)
    : a_(std::move(a)), phase_(phase)
{
    if (phase_ == Complex(0.0, 0.0)) {
        throw DomainError("ExtendedGroupElement: central phase must be nonzero");
    }
}

ExtendedGroupElement::ExtendedGroupElement(const SymplecticElement& a, Complex phase)
    : ExtendedGroupElement(a.full(), phase)
{
}

ExtendedGroupElement ExtendedGroupElement::operator*(const ExtendedGroupElement& other) const
{
    return {a_ * other.a_, phase_ * other.phase_};
}

ExtendedGroupElement ExtendedGroupElement::inverse() const
{
    return {a_.inverse(), 1.0 / phase_};
}

namespace {

Complex trace_product(const BlockOperator& x, const BlockOperator& y)
{
    return (x.pp() * y.pp() + x.pm() * y.mp()).trace() + (x.mp() * y.pm() + x.mm() * y.mm()).trace();
}

BlockOperator commutator(const BlockOperator& x, const BlockOperator& y)
{
    return x * y - y * x;
}

void require_same_n(const BlockOperator& x, const BlockOperator& y, const char* what)
{
    if (x.n() != y.n()) throw DimensionError(std::string(what) + ": polarization mismatch");
}

void require_nonzero_gamma(double gamma, const char* what)
{
    if (gamma == 0.0 || !std::isfinite(gamma)) {
        throw DomainError(std::string(what) + ": gamma must be a finite nonzero real");
    }
}

} // namespace

Complex schwinger(const BlockOperator& a, const BlockOperator& b)
{
    require_same_n(a, b, "schwinger");
    const Complex via_trace = trace_product(a, commutator_with_d(b));
    const Complex via_blocks = 2.0 * kI * (a.mp() * b.pm() - a.pm() * b.mp()).trace();
    const double scale = std::max(1.0, a.frobenius() * b.frobenius());
    if (std::abs(via_trace - via_blocks) > 1e-10 * scale) {
        throw ConsistencyError("schwinger: trace and block evaluations disagree");
    }
    return via_trace;
}

ExtendedAlgebraElement extended_bracket(const ExtendedAlgebraElement& x, const ExtendedAlgebraElement& y)
{
    require_same_n(x.op, y.op, "extended_bracket");
    return {commutator(x.op, y.op), schwinger(x.op, y.op)};
}

PredualElement sigma_cocycle(const BlockOperator& a)
{
    const BlockOperator d = d_operator(a.pol());
    return PredualElement(a * d * a.inverse() - d);
}

PredualElement sigma_cocycle(const SymplecticElement& a)
{
    const BlockOperator d = d_operator(a.pol());
    return PredualElement(a.full() * d * symplectic_inverse(a).full() - d);
}

ExtendedAlgebraElement extended_adjoint(const ExtendedGroupElement& g, const ExtendedAlgebraElement& x)
{
    require_same_n(g.a(), x.op, "extended_adjoint");
    const BlockOperator a_inv = g.a().inverse();
    const PredualElement s = sigma_cocycle(a_inv);
    return {g.a() * x.op * a_inv, x.lambda - trace_product(s.op, x.op)};
}

ExtendedPredual coadjoint(const ExtendedGroupElement& g, const ExtendedPredual& m)
{
    require_same_n(g.a(), m.mu.op, "coadjoint");
    const BlockOperator a_inv = g.a().inverse();
    const PredualElement s = sigma_cocycle(a_inv);
    return {PredualElement(a_inv * m.mu.op * g.a() - m.gamma * s.op), m.gamma};
}

ExtendedPredual ad_star(const ExtendedAlgebraElement& x, const ExtendedPredual& m)
{
    require_same_n(x.op, m.mu.op, "ad_star");
    return {PredualElement(commutator(m.mu.op, x.op) - m.gamma * commutator_with_d(x.op)), 0.0};
}

PredualElement affine_action(const BlockOperator& a, const PredualElement& mu, Complex gamma)
{
    require_same_n(a, mu.op, "affine_action");
    const BlockOperator a_inv = a.inverse();
    const BlockOperator d = d_operator(a.pol());
    const BlockOperator sigma = a * d * a_inv - d;
    return PredualElement(a * mu.op * a_inv - gamma * sigma);
}

ExtendedPredual orbit_point(const SymplecticElement& a, double gamma)
{
    require_nonzero_gamma(gamma, "orbit_point");
    return {PredualElement(-gamma * sigma_cocycle(a).op), gamma};
}

SiegelPoint orbit_to_siegel(const ExtendedPredual& m)
{
    if (m.gamma == Complex(0.0, 0.0)) {
        throw DomainError("orbit_to_siegel: gamma must be nonzero");
    }
    const Polarization pol = m.mu.op.pol();
    const BlockOperator d = d_operator(pol);
    // P = a d a^{-1}; Q = (I + iP)/2 projects onto its -i eigenspace, spanned by [h; bar g].
    const BlockOperator p = d - m.mu.op * (1.0 / m.gamma);
    const BlockOperator q = (BlockOperator::identity(pol) + kI * p) * 0.5;
    if (!(condition_number(q.mm()) < kSingularConditionBound)) {
        throw DomainError("orbit_to_siegel: point is not on the orbit through (0, gamma)");
    }
    // Z = Q+- (Q--)^{-1}
    return {ComplexMatrix(q.mm().transpose()).partialPivLu().solve(q.pm().transpose()).transpose()};
}

double kks_form(const SpAlgebraElement& a, const SpAlgebraElement& b, double gamma)
{
    require_nonzero_gamma(gamma, "kks_form");
    return (-gamma * schwinger(a.full(), b.full())).real();
}

double pullback_form(const SpAlgebraElement& a, const SpAlgebraElement& b, double gamma)
{
    if (a.a2.rows() != b.a2.rows()) throw DimensionError("pullback_form: size mismatch");
    const Complex tr = (a.a2.conjugate() * b.a2 - b.a2.conjugate() * a.a2).trace();
    return (-2.0 * kI * gamma * tr).real();
}

bool SymplectoResult::passes() const
{
    return residual <= 1e-9 * std::max(1.0, std::abs(omega_hat));
}

SymplectoResult symplecto_check(const SpAlgebraElement& a, const SpAlgebraElement& b, double gamma)
{
    SymplectoResult r;
    const SiegelPoint origin = SiegelPoint::origin(a.pol());
    r.omega_d = siegel_kahler(origin, {a.a2}, {b.a2});
    r.omega_hat = pullback_form(a, b, gamma);
    r.kks = kks_form(a, b, gamma);
    r.residual = std::abs(r.omega_hat - symplecto_constant(gamma) * r.omega_d);
    if (std::abs(r.omega_d) > kDegeneratePairTol) {
        r.ratio = r.omega_hat / r.omega_d;
    }
    return r;
}

} // namespace orbit
