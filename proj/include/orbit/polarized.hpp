#pragma once

#include "orbit/kernel.hpp"

namespace orbit {

/// H = H+ (+) H- with dim H+ = dim H- = n.
///
/// Basis convention: {f_1..f_n} is an orthonormal basis of H+, and the real
/// structure maps f_k to the k-th basis vector of H-. In these coordinates
/// "bar" is entrywise conjugation with the two halves swapped, and
/// h^T := (bar h)^* is the plain matrix transpose.
struct Polarization {
    Eigen::Index n = 1;

    explicit Polarization(Eigen::Index dim);
    Eigen::Index total() const { return 2 * n; }
    bool operator==(const Polarization&) const = default;
};

/// Operator on H stored as its four n x n blocks
///   [ pp  pm ]     pp : H+ -> H+,  pm : H- -> H+
///   [ mp  mm ]     mp : H+ -> H-,  mm : H- -> H-
class BlockOperator {
public:
    BlockOperator(ComplexMatrix pp, ComplexMatrix pm, ComplexMatrix mp, ComplexMatrix mm);

    static BlockOperator zero(Polarization pol);
    static BlockOperator identity(Polarization pol);
    static BlockOperator from_full(Polarization pol, const ComplexMatrix& full);
    static BlockOperator diagonal(const ComplexMatrix& pp, const ComplexMatrix& mm);
    static BlockOperator off_diagonal(const ComplexMatrix& pm, const ComplexMatrix& mp);

    Polarization pol() const { return Polarization(pp_.rows()); }
    Eigen::Index n() const { return pp_.rows(); }

    const ComplexMatrix& pp() const { return pp_; }
    const ComplexMatrix& pm() const { return pm_; }
    const ComplexMatrix& mp() const { return mp_; }
    const ComplexMatrix& mm() const { return mm_; }

    ComplexMatrix full() const;
    BlockOperator adjoint() const;

    /// Inverse via LU of the full operator; DomainError when cond > 1e12.
    BlockOperator inverse() const;
    double condition() const;

    BlockOperator operator+(const BlockOperator& other) const;
    BlockOperator operator-(const BlockOperator& other) const;
    BlockOperator operator-() const;
    BlockOperator operator*(const BlockOperator& other) const;
    BlockOperator operator*(Complex s) const;
    friend BlockOperator operator*(Complex s, const BlockOperator& a) { return a * s; }

    /// ||A - B||_F over the full operator.
    double distance(const BlockOperator& other) const;
    double frobenius() const;

private:
    void require_same_pol(const BlockOperator& other, const char* what) const;

    ComplexMatrix pp_;
    ComplexMatrix pm_;
    ComplexMatrix mp_;
    ComplexMatrix mm_;
};

inline constexpr double kSingularConditionBound = 1e12;

/// Element of the predual (gl_res)_*. Structurally a block operator; the
/// separate type keeps predual arguments from being passed where Lie-algebra
/// elements are expected. At finite truncation every block is trace class.
struct PredualElement {
    BlockOperator op;

    explicit PredualElement(BlockOperator value) : op(std::move(value)) {}
    static PredualElement zero(Polarization pol) { return PredualElement(BlockOperator::zero(pol)); }
};

/// bar a: entrywise conjugation with the +/- roles exchanged.
BlockOperator conj_op(const BlockOperator& a);

/// h^T = (bar h)^*; in the chosen basis the plain transpose.
ComplexMatrix transpose_op(const ComplexMatrix& h);

/// d = i (p+ - p-) = diag(i I, -i I), which is J in the eigenbasis.
BlockOperator d_operator(Polarization pol);

/// [d, A] = dA - Ad: zero diagonal blocks, 2i A+- and -2i A-+ off the diagonal.
BlockOperator commutator_with_d(const BlockOperator& a);

/// ||A|| + ||[d, A]||_2 (diagnostic).
double restricted_norm(const BlockOperator& a);

/// Tr(mu++) + Tr(mu--).
Complex restricted_trace(const PredualElement& mu);

/// <(mu, gamma), (B, b)> = Tr_res(mu B) + gamma b.
Complex pairing(const PredualElement& mu, Complex gamma, const BlockOperator& b, Complex central);

/// Matrix unit E_{rc} of the full 2n x 2n operator, as a block operator.
BlockOperator matrix_unit(Polarization pol, Eigen::Index row, Eigen::Index col);

/// Random operator with i.i.d. complex Gaussian entries times `scale`.
BlockOperator random_block_operator(Rng& rng, Polarization pol, double scale = 1.0);

} // namespace orbit
