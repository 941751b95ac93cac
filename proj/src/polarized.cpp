#include "orbit/polarized.hpp"

namespace orbit {

Polarization::Polarization(Eigen::Index dim) : n(dim)
{
    if (dim < 1) {
        throw DimensionError("Polarization: n must be at least 1, got " + std::to_string(dim));
    }
}

BlockOperator::BlockOperator(ComplexMatrix pp, ComplexMatrix pm, ComplexMatrix mp, ComplexMatrix mm)
    : pp_(std::move(pp)), pm_(std::move(pm)), mp_(std::move(mp)), mm_(std::move(mm))
{
    const Eigen::Index n = pp_.rows();
    auto ok = [n](const ComplexMatrix& m) { return m.rows() == n && m.cols() == n; };
    if (n < 1 || !ok(pp_) || !ok(pm_) || !ok(mp_) || !ok(mm_)) {
        throw DimensionError("BlockOperator: all four blocks must be n x n with n >= 1");
    }
}

BlockOperator BlockOperator::zero(Polarization pol)
{
    const ComplexMatrix z = ComplexMatrix::Zero(pol.n, pol.n);
    return {z, z, z, z};
}

BlockOperator BlockOperator::identity(Polarization pol)
{
    const ComplexMatrix z = ComplexMatrix::Zero(pol.n, pol.n);
    const ComplexMatrix id = ComplexMatrix::Identity(pol.n, pol.n);
    return {id, z, z, id};
}

BlockOperator BlockOperator::from_full(Polarization pol, const ComplexMatrix& full)
{
    if (full.rows() != pol.total() || full.cols() != pol.total()) {
        throw DimensionError("BlockOperator::from_full: expected a 2n x 2n matrix");
    }
    const Eigen::Index n = pol.n;
    return {full.topLeftCorner(n, n), full.topRightCorner(n, n), full.bottomLeftCorner(n, n),
            full.bottomRightCorner(n, n)};
}

BlockOperator BlockOperator::diagonal(const ComplexMatrix& pp, const ComplexMatrix& mm)
{
    const ComplexMatrix z = ComplexMatrix::Zero(pp.rows(), pp.cols());
    return {pp, z, z, mm};
}

BlockOperator BlockOperator::off_diagonal(const ComplexMatrix& pm, const ComplexMatrix& mp)
{
    const ComplexMatrix z = ComplexMatrix::Zero(pm.rows(), pm.cols());
    return {z, pm, mp, z};
}

ComplexMatrix BlockOperator::full() const
{
    const Eigen::Index n = this->n();
    ComplexMatrix m(2 * n, 2 * n);
    m << pp_, pm_, mp_, mm_;
    return m;
}

BlockOperator BlockOperator::adjoint() const
{
    return {pp_.adjoint(), mp_.adjoint(), pm_.adjoint(), mm_.adjoint()};
}

double BlockOperator::condition() const
{
    return condition_number(full());
}

BlockOperator BlockOperator::inverse() const
{
    const ComplexMatrix f = full();
    const double cond = condition_number(f);
    if (!(cond < kSingularConditionBound)) {
        throw DomainError("BlockOperator::inverse: operator is numerically singular (cond = " +
                          std::to_string(cond) + ")");
    }
    return from_full(pol(), f.partialPivLu().inverse());
}

void BlockOperator::require_same_pol(const BlockOperator& other, const char* what) const
{
    if (n() != other.n()) {
        throw DimensionError(std::string(what) + ": polarization mismatch (" + std::to_string(n()) +
                             " vs " + std::to_string(other.n()) + ")");
    }
}

BlockOperator BlockOperator::operator+(const BlockOperator& o) const
{
    require_same_pol(o, "BlockOperator::operator+");
    return {pp_ + o.pp_, pm_ + o.pm_, mp_ + o.mp_, mm_ + o.mm_};
}

BlockOperator BlockOperator::operator-(const BlockOperator& o) const
{
    require_same_pol(o, "BlockOperator::operator-");
    return {pp_ - o.pp_, pm_ - o.pm_, mp_ - o.mp_, mm_ - o.mm_};
}

BlockOperator BlockOperator::operator-() const
{
    return {-pp_, -pm_, -mp_, -mm_};
}

BlockOperator BlockOperator::operator*(const BlockOperator& o) const
{
    require_same_pol(o, "BlockOperator::operator*");
    return {pp_ * o.pp_ + pm_ * o.mp_, pp_ * o.pm_ + pm_ * o.mm_,
            mp_ * o.pp_ + mm_ * o.mp_, mp_ * o.pm_ + mm_ * o.mm_};
}

BlockOperator BlockOperator::operator*(Complex s) const
{
    return {s * pp_, s * pm_, s * mp_, s * mm_};
}

double BlockOperator::frobenius() const
{
    return std::sqrt(pp_.squaredNorm() + pm_.squaredNorm() + mp_.squaredNorm() + mm_.squaredNorm());
}

double BlockOperator::distance(const BlockOperator& other) const
{
    return (*this - other).frobenius();
}

BlockOperator conj_op(const BlockOperator& a)
{
    return {a.mm().conjugate(), a.mp().conjugate(), a.pm().conjugate(), a.pp().conjugate()};
}

ComplexMatrix transpose_op(const ComplexMatrix& h)
{
    return h.transpose();
}

BlockOperator d_operator(Polarization pol)
{
    const ComplexMatrix id = ComplexMatrix::Identity(pol.n, pol.n);
    return BlockOperator::diagonal(kI * id, -kI * id);
}

BlockOperator commutator_with_d(const BlockOperator& a)
{
    return BlockOperator::off_diagonal(2.0 * kI * a.pm(), -2.0 * kI * a.mp());
}

double restricted_norm(const BlockOperator& a)
{
    return op_norm(a.full()) + commutator_with_d(a).frobenius();
}

Complex restricted_trace(const PredualElement& mu)
{
    return mu.op.pp().trace() + mu.op.mm().trace();
}

Complex pairing(const PredualElement& mu, Complex gamma, const BlockOperator& b, Complex central)
{
    if (mu.op.n() != b.n()) {
        throw DimensionError("pairing: polarization mismatch");
    }
    // Only the diagonal blocks of mu * B enter the restricted trace.
    const Complex tr = (mu.op.pp() * b.pp() + mu.op.pm() * b.mp()).trace() +
                       (mu.op.mp() * b.pm() + mu.op.mm() * b.mm()).trace();
    return tr + gamma * central;
}

BlockOperator matrix_unit(Polarization pol, Eigen::Index row, Eigen::Index col)
{
    if (row < 0 || col < 0 || row >= pol.total() || col >= pol.total()) {
        throw DimensionError("matrix_unit: index out of range");
    }
    ComplexMatrix f = ComplexMatrix::Zero(pol.total(), pol.total());
    f(row, col) = 1.0;
    return BlockOperator::from_full(pol, f);
}

BlockOperator random_block_operator(Rng& rng, Polarization pol, double scale)
{
    return BlockOperator::from_full(pol, scale * rng.gaussian(pol.total(), pol.total()));
}

} // namespace orbit
