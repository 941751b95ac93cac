#include "orbit/symplectic.hpp"

#include <algorithm>
#include <cmath>

namespace orbit {

SymplecticElement SymplecticElement::identity(Polarization pol)
{
    return {ComplexMatrix::Identity(pol.n, pol.n), ComplexMatrix::Zero(pol.n, pol.n)};
}

BlockOperator SymplecticElement::full() const
{
    return {g, h, h.conjugate(), g.conjugate()};
}

SymplecticElement SymplecticElement::from_operator(const BlockOperator& a)
{
    return {a.pp(), a.pm()};
}

SymplecticElement SymplecticElement::operator*(const SymplecticElement& o) const
{
    if (g.rows() != o.g.rows()) throw DimensionError("SymplecticElement::operator*: size mismatch");
    return {g * o.g + h * o.h.conjugate(), g * o.h + h * o.g.conjugate()};
}

SpAlgebraElement SpAlgebraElement::zero(Polarization pol)
{
    return {ComplexMatrix::Zero(pol.n, pol.n), ComplexMatrix::Zero(pol.n, pol.n)};
}

BlockOperator SpAlgebraElement::full() const
{
    return {a1, a2, a2.conjugate(), a1.conjugate()};
}

double MembershipResult::max_residual() const
{
    return std::max({residual_first, residual_second, residual_full});
}

ComplexVector conj_vector(const ComplexVector& u)
{
    if (u.size() % 2 != 0) throw DimensionError("conj_vector: odd length");
    const Eigen::Index n = u.size() / 2;
    ComplexVector out(u.size());
    out.head(n) = u.tail(n).conjugate();
    out.tail(n) = u.head(n).conjugate();
    return out;
}

Complex omega_eval(const ComplexVector& u, const ComplexVector& v)
{
    if (u.size() != v.size() || u.size() == 0 || u.size() % 2 != 0) {
        throw DimensionError("omega_eval: vectors must share an even length 2n");
    }
    const Eigen::Index n = u.size() / 2;
    ComplexVector jv(v.size());
    jv.head(n) = kI * v.head(n);
    jv.tail(n) = -kI * v.tail(n);
    // <u, w> = sum u_k conj(w_k); Eigen's dot conjugates its first argument.
    return conj_vector(jv).dot(u);
}

namespace {

void require_equal_blocks(const ComplexMatrix& x, const ComplexMatrix& y, const char* what)
{
    if (x.rows() != x.cols() || y.rows() != y.cols() || x.rows() != y.rows() || x.rows() < 1) {
        throw DimensionError(std::string(what) + ": blocks must be square of equal size");
    }
}

} // namespace

MembershipResult is_symplectic(const SymplecticElement& a, double tol)
{
    require_equal_blocks(a.g, a.h, "is_symplectic");
    const Eigen::Index n = a.g.rows();
    const ComplexMatrix id = ComplexMatrix::Identity(n, n);
    MembershipResult r;
    r.residual_first = (a.g.adjoint() * a.g - a.h.transpose() * a.h.conjugate() - id).norm();
    r.residual_second = (a.g.adjoint() * a.h - a.h.transpose() * a.g.conjugate()).norm();
    const BlockOperator full = a.full();
    const BlockOperator j = d_operator(a.pol());
    r.residual_full = (full.adjoint() * j * full - j).frobenius();
    r.member = r.residual_first <= tol && r.residual_second <= tol;
    return r;
}

SymplecticElement symplectic_inverse(const SymplecticElement& a, double tol)
{
    const MembershipResult m = is_symplectic(a, tol);
    if (!m.member) {
        throw DomainError("symplectic_inverse: element is not symplectic (residual " +
                          std::to_string(m.max_residual()) + ")");
    }
    return {a.g.adjoint(), -a.h.transpose()};
}

MembershipResult is_sp_algebra(const SpAlgebraElement& a, double tol)
{
    require_equal_blocks(a.a1, a.a2, "is_sp_algebra");
    MembershipResult r;
    r.residual_first = (a.a1 + a.a1.adjoint()).norm();
    r.residual_second = (a.a2 - a.a2.transpose()).norm();
    const BlockOperator full = a.full();
    const BlockOperator j = d_operator(a.pol());
    r.residual_full = (full.adjoint() * j + j * full).frobenius();
    r.member = r.residual_first <= tol && r.residual_second <= tol && r.residual_full <= tol;
    return r;
}

SpAlgebraElement random_sp_algebra(Rng& rng, Polarization pol, double scale)
{
    if (!(scale >= 0.0)) throw DomainError("random_sp_algebra: scale must be nonnegative");
    const ComplexMatrix g = scale * rng.gaussian(pol.n, pol.n);
    const ComplexMatrix h = scale * rng.gaussian(pol.n, pol.n);
    return {0.5 * (g - g.adjoint()), 0.5 * (h + h.transpose())};
}

SpAlgebraElement random_sp_algebra(Polarization pol, double scale, std::uint64_t seed)
{
    Rng rng(seed);
    return random_sp_algebra(rng, pol, scale);
}

SymplecticElement exp_to_group(const SpAlgebraElement& a)
{
    const MembershipResult m = is_sp_algebra(a);
    if (!m.member) {
        throw DomainError("exp_to_group: input is not in sp (residual " +
                          std::to_string(m.max_residual()) + ")");
    }
    const ComplexMatrix e = mat_exp(a.full().full());
    const Eigen::Index n = a.a1.rows();
    return {e.topLeftCorner(n, n), e.topRightCorner(n, n)};
}

SymplecticElement random_symplectic(Rng& rng, Polarization pol, double scale)
{
    if (scale < 0.0) scale = 0.5 / std::sqrt(static_cast<double>(pol.n));
    return exp_to_group(random_sp_algebra(rng, pol, scale));
}

SymplecticElement random_isotropy(Rng& rng, Polarization pol)
{
    return {random_unitary(rng, pol.n), ComplexMatrix::Zero(pol.n, pol.n)};
}

} // namespace orbit
