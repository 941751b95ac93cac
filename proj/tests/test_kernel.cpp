#include <doctest.h>

#include <cmath>

#include "oracles.hpp"
#include "orbit/kernel.hpp"

using namespace orbit;

namespace {

ComplexMatrix hermitian(Rng& rng, Eigen::Index n)
{
    const ComplexMatrix g = rng.gaussian(n, n);
    return 0.5 * (g + g.adjoint());
}

} // namespace

TEST_CASE("mat_exp closed forms")
{
    CHECK(mat_exp(ComplexMatrix::Zero(2, 2)).isApprox(ComplexMatrix::Identity(2, 2), 0.0));

    const double t = 0.7;
    ComplexMatrix a(2, 2);
    a << 0.0, t, t, 0.0;
    ComplexMatrix expected(2, 2);
    expected << std::cosh(t), std::sinh(t), std::sinh(t), std::cosh(t);
    CHECK((mat_exp(a) - expected).norm() < 1e-12);

    ComplexMatrix d = ComplexMatrix::Zero(2, 2);
    d(0, 0) = std::log(2.0);
    d(1, 1) = -std::log(2.0);
    const ComplexMatrix e = mat_exp(d);
    CHECK(std::abs(e(0, 0) - 2.0) < 1e-12);
    CHECK(std::abs(e(1, 1) - 0.5) < 1e-12);
    CHECK(std::abs(e(0, 1)) == 0.0);
}

TEST_CASE("mat_exp agrees with the Taylor oracle")
{
    Rng rng(11);
    for (int trial = 0; trial < 20; ++trial) {
        const Eigen::Index n = 1 + trial % 6;
        const double scale = 0.1 + 0.5 * trial;
        const ComplexMatrix a = scale * rng.gaussian(n, n) / std::sqrt(static_cast<double>(n));
        const ComplexMatrix ref = oracle::exp_taylor(a);
        CHECK((mat_exp(a) - ref).norm() <= 1e-12 * ref.norm());
    }
}

TEST_CASE("mat_exp errors")
{
    CHECK_THROWS_AS(mat_exp(ComplexMatrix::Zero(2, 3)), DimensionError);
    ComplexMatrix big = ComplexMatrix::Identity(2, 2) * 1e6;
    CHECK_THROWS_AS(mat_exp(big), NumericRangeError);
    ComplexMatrix nan = ComplexMatrix::Zero(2, 2);
    nan(0, 1) = std::nan("");
    CHECK_THROWS_AS(mat_exp(nan), NumericRangeError);
}

TEST_CASE("exp(A) exp(-A) = I")
{
    Rng rng(3);
    for (int trial = 0; trial < 50; ++trial) {
        const Eigen::Index n = 1 + trial % 8;
        ComplexMatrix a = rng.gaussian(n, n);
        a *= (2.0 * rng.uniform()) / op_norm(a);
        const ComplexMatrix id = ComplexMatrix::Identity(n, n);
        CHECK((mat_exp(a) * mat_exp(-a) - id).norm() <= 1e-10);
    }
}

TEST_CASE("is_positive_definite")
{
    CHECK(is_positive_definite(ComplexMatrix::Identity(3, 3)));
    ComplexMatrix indefinite(2, 2);
    indefinite << 1.0, 2.0, 2.0, 1.0;
    CHECK_FALSE(is_positive_definite(indefinite));
    CHECK(is_positive_definite(0.5 * ComplexMatrix::Identity(2, 2)));
    CHECK_FALSE(is_positive_definite(ComplexMatrix::Zero(2, 2)));

    ComplexMatrix skew(2, 2);
    skew << 1.0, 1.0, 0.0, 1.0;
    CHECK_THROWS_AS(is_positive_definite(skew, 1e-10), DomainError);
    CHECK_THROWS_AS(is_positive_definite(ComplexMatrix::Zero(2, 3)), DimensionError);
}

TEST_CASE("positive definiteness survives congruence")
{
    Rng rng(5);
    for (int trial = 0; trial < 30; ++trial) {
        const Eigen::Index n = 1 + trial % 5;
        const ComplexMatrix g = rng.gaussian(n, n);
        const ComplexMatrix a = g * g.adjoint() + 0.1 * ComplexMatrix::Identity(n, n);
        const ComplexMatrix b = ComplexMatrix::Identity(n, n) + 0.2 * rng.gaussian(n, n) / std::sqrt(double(n));
        REQUIRE(is_positive_definite(a));
        const ComplexMatrix c = b.adjoint() * a * b;
        CHECK(is_positive_definite(0.5 * (c + c.adjoint())));
    }
}

TEST_CASE("herm_funcalc examples")
{
    ComplexMatrix d = ComplexMatrix::Zero(2, 2);
    d(0, 0) = 0.25;
    d(1, 1) = 0.04;
    CHECK((herm_funcalc(d, spectral::identity()) - d).norm() < 1e-15);

    ComplexMatrix q(1, 1);
    q(0, 0) = 0.25;
    const ComplexMatrix r = herm_funcalc(q, spectral::artanh_sqrt_over_sqrt());
    CHECK(std::abs(r(0, 0) - std::atanh(0.5) / 0.5) < 1e-14);
    CHECK(std::abs(r(0, 0) - 1.0986122886681098) < 1e-12);

    ComplexMatrix s = ComplexMatrix::Zero(2, 2);
    s(0, 0) = 2.0;
    s(1, 1) = 8.0;
    const ComplexMatrix root = herm_funcalc(s, spectral::sqrt());
    CHECK(std::abs(root(0, 0) - std::sqrt(2.0)) < 1e-14);
    CHECK(std::abs(root(1, 1) - 2.0 * std::sqrt(2.0)) < 1e-14);
}

TEST_CASE("herm_funcalc near zero and outside the domain")
{
    ComplexMatrix tiny(1, 1);
    tiny(0, 0) = 1e-9;
    CHECK(std::abs(herm_funcalc(tiny, spectral::artanh_sqrt_over_sqrt())(0, 0) - (1.0 + 1e-9 / 3.0)) < 1e-15);
    tiny(0, 0) = -1e-13;
    CHECK(std::abs(herm_funcalc(tiny, spectral::artanh_sqrt_over_sqrt())(0, 0) - 1.0) < 1e-12);

    ComplexMatrix edge(1, 1);
    edge(0, 0) = 1.0 - 1e-9;
    CHECK_THROWS_AS(herm_funcalc(edge, spectral::artanh_sqrt_over_sqrt()), SpectrumDomainError);
    ComplexMatrix neg(1, 1);
    neg(0, 0) = -1.0;
    CHECK_THROWS_AS(herm_funcalc(neg, spectral::sqrt()), SpectrumDomainError);
}

TEST_CASE("herm_funcalc polynomial and exponential agree with direct evaluation")
{
    Rng rng(17);
    for (int trial = 0; trial < 30; ++trial) {
        const Eigen::Index n = 1 + trial % 7;
        const ComplexMatrix a = hermitian(rng, n);
        const SpectralFunction cubic{"cubic", [](double x) { return x * x * x - 2.0 * x + 0.5; }};
        const ComplexMatrix direct = a * a * a - 2.0 * a + 0.5 * ComplexMatrix::Identity(n, n);
        CHECK((herm_funcalc(a, cubic) - direct).norm() <= 1e-10 * std::max(1.0, direct.norm()));
        CHECK((herm_funcalc(a, spectral::exp()) - mat_exp(a)).norm() <= 1e-9);
    }
}

TEST_CASE("norms")
{
    CHECK(hs_norm(ComplexMatrix::Zero(3, 3)) == 0.0);
    CHECK(std::abs(hs_norm(ComplexMatrix::Identity(3, 3)) - std::sqrt(3.0)) < 1e-15);
    ComplexMatrix row(1, 2);
    row << 3.0, 4.0;
    CHECK(std::abs(hs_norm(row) - 5.0) < 1e-15);

    CHECK(std::abs(op_norm(ComplexMatrix::Identity(4, 4)) - 1.0) < 1e-12);
    ComplexMatrix d = ComplexMatrix::Zero(2, 2);
    d(0, 0) = 2.0;
    d(1, 1) = -3.0;
    CHECK(std::abs(op_norm(d) - 3.0) < 1e-12);
    ComplexMatrix shift = ComplexMatrix::Zero(2, 2);
    shift(0, 1) = 1.0;
    CHECK(std::abs(op_norm(shift) - 1.0) < 1e-12);
}

TEST_CASE("hs_norm is unitarily invariant")
{
    Rng rng(23);
    for (int trial = 0; trial < 30; ++trial) {
        const Eigen::Index n = 1 + trial % 6;
        const ComplexMatrix a = rng.gaussian(n, n);
        const ComplexMatrix u = random_unitary(rng, n);
        const ComplexMatrix v = random_unitary(rng, n);
        CHECK(std::abs(hs_norm(u * a * v) - hs_norm(a)) <= 1e-10 * std::max(1.0, hs_norm(a)));
    }
}

TEST_CASE("Rng is reproducible")
{
    Rng a(99);
    Rng b(99);
    CHECK(a.gaussian(3, 3) == b.gaussian(3, 3));
}
