#include <algorithm>
#include <cmath>

#include "orbit/cli.hpp"

namespace orbit::cli {

namespace {

constexpr double kTaint = 1e-3;

ComplexMatrix taint(ComplexMatrix m, bool corrupt)
{
    if (corrupt) m(0, 0) += Complex(kTaint, kTaint);
    return m;
}

BlockOperator taint(const BlockOperator& a, bool corrupt)
{
    return {taint(a.pp(), corrupt), a.pm(), a.mp(), a.mm()};
}

SymplecticElement taint(SymplecticElement a, bool corrupt)
{
    a.g = taint(a.g, corrupt);
    return a;
}

double rel(double residual, double scale)
{
    return residual / std::max(1.0, scale);
}

// Invertible operator with controlled conditioning: exp of a scaled Gaussian.
BlockOperator random_invertible(Rng& rng, Polarization pol)
{
    const double scale = 0.3 / std::sqrt(static_cast<double>(pol.total()));
    return BlockOperator::from_full(pol, mat_exp(scale * rng.gaussian(pol.total(), pol.total())));
}

ComplexVector random_vector(Rng& rng, Polarization pol)
{
    return rng.gaussian(pol.total(), 1).col(0);
}

SymplecticElement random_group(Rng& rng, Polarization pol)
{
    return random_symplectic(rng, pol);
}

SpAlgebraElement random_algebra(Rng& rng, Polarization pol)
{
    return random_sp_algebra(rng, pol, 1.0 / std::sqrt(static_cast<double>(pol.n)));
}

Complex trace_commutator_free(const BlockOperator& x, const BlockOperator& y)
{
    return restricted_trace(PredualElement(x * y));
}

// ---------------------------------------------------------------- polarized

double conj_multiplicative(Trial& t)
{
    const BlockOperator a = random_block_operator(t.rng, t.pol);
    const BlockOperator b = random_block_operator(t.rng, t.pol);
    const BlockOperator lhs = conj_op(taint(a, t.corrupt) * b);
    const BlockOperator rhs = conj_op(a) * conj_op(b);
    return rel(lhs.distance(rhs), a.frobenius() * b.frobenius());
}

double conj_involution(Trial& t)
{
    const BlockOperator a = random_block_operator(t.rng, t.pol);
    return rel(conj_op(conj_op(taint(a, t.corrupt))).distance(a), a.frobenius());
}

double transpose_reverses(Trial& t)
{
    const ComplexMatrix h = t.rng.gaussian(t.pol.n, t.pol.n);
    const ComplexMatrix k = t.rng.gaussian(t.pol.n, t.pol.n);
    const ComplexMatrix lhs = transpose_op(taint(h, t.corrupt) * k);
    const ComplexMatrix rhs = transpose_op(k) * transpose_op(h);
    return rel((lhs - rhs).norm(), h.norm() * k.norm());
}

double trres_cyclic(Trial& t)
{
    const BlockOperator mu = random_block_operator(t.rng, t.pol);
    const BlockOperator a = random_block_operator(t.rng, t.pol);
    const Complex lhs = trace_commutator_free(taint(mu, t.corrupt), a);
    const Complex rhs = trace_commutator_free(a, mu);
    return rel(std::abs(lhs - rhs), mu.frobenius() * a.frobenius());
}

double trres_conjugation(Trial& t)
{
    const BlockOperator mu = random_block_operator(t.rng, t.pol);
    const BlockOperator g = random_invertible(t.rng, t.pol);
    const Complex lhs = restricted_trace(PredualElement(g * taint(mu, t.corrupt) * g.inverse()));
    const Complex rhs = restricted_trace(PredualElement(mu));
    return rel(std::abs(lhs - rhs), mu.frobenius());
}

double pairing_nondegenerate(Trial& t)
{
    BlockOperator mu = random_block_operator(t.rng, t.pol);
    if (t.corrupt) mu = BlockOperator::zero(t.pol);
    double best = 0.0;
    for (Eigen::Index r = 0; r < t.pol.total(); ++r) {
        for (Eigen::Index c = 0; c < t.pol.total(); ++c) {
            best = std::max(best, std::abs(pairing(PredualElement(mu), 0.0, matrix_unit(t.pol, r, c), 0.0)));
        }
    }
    return best > 0.0 ? 0.0 : 1.0;
}

// --------------------------------------------------------------- symplectic

double closure_product(Trial& t)
{
    const SymplecticElement a = taint(random_group(t.rng, t.pol), t.corrupt);
    const SymplecticElement b = random_group(t.rng, t.pol);
    return is_symplectic(SymplecticElement::from_operator(a.full() * b.full())).max_residual();
}

double closure_inverse(Trial& t)
{
    const SymplecticElement a = random_group(t.rng, t.pol);
    SymplecticElement inv = symplectic_inverse(a);
    inv = taint(inv, t.corrupt);
    const double membership = is_symplectic(inv).max_residual();
    const double product = (a.full() * inv.full()).distance(BlockOperator::identity(t.pol));
    return std::max(membership, product);
}

double omega_invariance(Trial& t)
{
    const SymplecticElement a = taint(random_group(t.rng, t.pol), t.corrupt);
    const ComplexVector u = random_vector(t.rng, t.pol);
    const ComplexVector v = random_vector(t.rng, t.pol);
    const ComplexMatrix full = a.full().full();
    const Complex lhs = omega_eval(full * u, full * v);
    return rel(std::abs(lhs - omega_eval(u, v)), u.norm() * v.norm());
}

double derived_identities(Trial& t)
{
    const SymplecticElement a = taint(random_group(t.rng, t.pol), t.corrupt);
    const ComplexMatrix id = ComplexMatrix::Identity(t.pol.n, t.pol.n);
    const double first = (a.g * a.g.adjoint() - a.h * a.h.adjoint() - id).norm();
    const double second = (a.g * a.h.transpose() - a.h * a.g.transpose()).norm();
    return std::max(first, second);
}

double g_block_invertible(Trial& t)
{
    // g*g = I + h^T bar h >= I forces every singular value of g to be at least 1.
    SymplecticElement a = random_group(t.rng, t.pol);
    if (t.corrupt) a.g *= 0.5;
    Eigen::JacobiSVD<ComplexMatrix> svd(a.g);
    const double smallest = svd.singularValues()(t.pol.n - 1);
    return std::max(0.0, 1.0 - smallest);
}

double exp_inverse(Trial& t)
{
    const SpAlgebraElement x = random_algebra(t.rng, t.pol);
    const SymplecticElement forward = taint(exp_to_group(x), t.corrupt);
    const SymplecticElement backward = exp_to_group(-x);
    return (forward.full() * backward.full()).distance(BlockOperator::identity(t.pol));
}

double random_algebra_membership(Trial& t)
{
    SpAlgebraElement x = random_algebra(t.rng, t.pol);
    x.a2 = taint(x.a2, t.corrupt);
    if (t.corrupt) x.a2(0, std::min<Eigen::Index>(1, t.pol.n - 1)) += 0.5;
    return is_sp_algebra(x).max_residual();
}

// ------------------------------------------------------------------- siegel

double action_law(Trial& t)
{
    const SymplecticElement a = random_group(t.rng, t.pol);
    const SymplecticElement b = random_group(t.rng, t.pol);
    const SiegelPoint z = random_disc_point(t.rng, t.pol);
    const SiegelPoint lhs = mobius_act(taint(a * b, t.corrupt), z);
    const SiegelPoint rhs = mobius_act(a, mobius_act(b, z));
    return (lhs.z - rhs.z).norm();
}

double isotropy_origin(Trial& t)
{
    SymplecticElement u = random_isotropy(t.rng, t.pol);
    u.h = taint(u.h, t.corrupt);
    return mobius_act(u, SiegelPoint::origin(t.pol)).z.norm();
}

double transitivity(Trial& t)
{
    const SiegelPoint z = random_disc_point(t.rng, t.pol);
    const SymplecticElement g = taint(transitive_element(z), t.corrupt);
    return (mobius_act(g, SiegelPoint::origin(t.pol)).z - z.z).norm();
}

double cauchy_schwarz_scale(const SiegelPoint& z, const SiegelTangent& u, const SiegelTangent& v)
{
    return std::sqrt(siegel_metric(z, u, u).real() * siegel_metric(z, v, v).real());
}

double metric_invariance(Trial& t)
{
    const SymplecticElement a = random_group(t.rng, t.pol);
    const SiegelPoint z = random_disc_point(t.rng, t.pol);
    const SiegelTangent u = random_tangent(t.rng, t.pol);
    const SiegelTangent v = random_tangent(t.rng, t.pol);
    const SymplecticElement moved = taint(a, t.corrupt);
    const Complex lhs = siegel_metric(mobius_act(a, z), mobius_tangent(moved, z, u), mobius_tangent(a, z, v));
    const Complex rhs = siegel_metric(z, u, v);
    return std::abs(lhs - rhs) / cauchy_schwarz_scale(z, u, v);
}

double kahler_invariance(Trial& t)
{
    const SymplecticElement a = random_group(t.rng, t.pol);
    const SiegelPoint z = random_disc_point(t.rng, t.pol);
    const SiegelTangent u = random_tangent(t.rng, t.pol);
    const SiegelTangent v = random_tangent(t.rng, t.pol);
    const SymplecticElement moved = taint(a, t.corrupt);
    const double lhs = siegel_kahler(mobius_act(a, z), mobius_tangent(moved, z, u), mobius_tangent(a, z, v));
    const double rhs = siegel_kahler(z, u, v);
    return std::abs(lhs - rhs) / cauchy_schwarz_scale(z, u, v);
}

double metric_positivity(Trial& t)
{
    const SiegelPoint z = random_disc_point(t.rng, t.pol);
    SiegelTangent u = random_tangent(t.rng, t.pol);
    if (t.corrupt) u.v.setZero();
    const Complex h = siegel_metric(z, u, u);
    if (!(h.real() > 0.0) || u.v.norm() < 1e-6) return 1.0;
    return std::abs(h.imag()) / h.real();
}

double zz_transpose_identity(Trial& t)
{
    const SiegelPoint z = random_disc_point(t.rng, t.pol);
    const ComplexMatrix zz = taint(z.z, t.corrupt);
    const ComplexMatrix id = ComplexMatrix::Identity(t.pol.n, t.pol.n);
    return ((id - zz * zz.conjugate()).transpose() - (id - z.z.adjoint() * z.z)).norm();
}

double tangent_finite_difference(Trial& t)
{
    constexpr double step = 1e-5;
    const SymplecticElement a = random_group(t.rng, t.pol);
    const SiegelPoint z = random_disc_point(t.rng, t.pol);
    const SiegelTangent u = random_tangent(t.rng, t.pol);
    const SiegelTangent analytic = mobius_tangent(taint(a, t.corrupt), z, u);
    const ComplexMatrix fd = (mobius_act(a, {z.z + step * u.v}).z - mobius_act(a, {z.z - step * u.v}).z) /
                             (2.0 * step);
    return rel((analytic.v - fd).norm(), analytic.v.norm());
}

double tangent_at_origin(Trial& t)
{
    const SymplecticElement a = random_group(t.rng, t.pol);
    const SiegelTangent u = random_tangent(t.rng, t.pol);
    const SiegelTangent pushed = mobius_tangent(taint(a, t.corrupt), SiegelPoint::origin(t.pol), u);
    const ComplexMatrix expected = a.g.adjoint().inverse() * u.v * a.g.conjugate().inverse();
    return rel((pushed.v - expected).norm(), expected.norm());
}

double transitive_in_group(Trial& t)
{
    const SiegelPoint z = random_disc_point(t.rng, t.pol);
    return is_symplectic(taint(transitive_element(z), t.corrupt)).max_residual();
}

// ---------------------------------------------------------------- coadjoint

BlockOperator random_gl(Rng& rng, Polarization pol)
{
    return random_block_operator(rng, pol, 1.0 / std::sqrt(static_cast<double>(pol.total())));
}

double schwinger_cocycle(Trial& t)
{
    const BlockOperator a = random_gl(t.rng, t.pol);
    const BlockOperator b = random_gl(t.rng, t.pol);
    const BlockOperator c = random_gl(t.rng, t.pol);
    const auto br = [](const BlockOperator& x, const BlockOperator& y) { return x * y - y * x; };
    // Corruption reaches only the first term of the cyclic sum.
    const BlockOperator c_first = t.corrupt ? BlockOperator(c.pp(), taint(c.pm(), true), c.mp(), c.mm()) : c;
    const Complex sum = schwinger(br(a, b), c_first) + schwinger(br(b, c), a) + schwinger(br(c, a), b);
    return std::abs(sum);
}

double schwinger_antisymmetry(Trial& t)
{
    const BlockOperator a = random_gl(t.rng, t.pol);
    const BlockOperator b = random_gl(t.rng, t.pol);
    BlockOperator b_tainted = b;
    if (t.corrupt) b_tainted = BlockOperator(b.pp(), taint(b.pm(), true), b.mp(), b.mm());
    return std::abs(schwinger(a, b_tainted) + schwinger(b, a));
}

double extended_jacobi(Trial& t)
{
    const ExtendedAlgebraElement x{random_gl(t.rng, t.pol), t.rng.complex_normal()};
    const ExtendedAlgebraElement y{random_gl(t.rng, t.pol), t.rng.complex_normal()};
    const ExtendedAlgebraElement z{random_gl(t.rng, t.pol), t.rng.complex_normal()};
    ExtendedAlgebraElement x_first = x;
    if (t.corrupt) x_first.op = BlockOperator(x.op.pp(), taint(x.op.pm(), true), x.op.mp(), x.op.mm());
    const auto j1 = extended_bracket(x_first, extended_bracket(y, z));
    const auto j2 = extended_bracket(y, extended_bracket(z, x));
    const auto j3 = extended_bracket(z, extended_bracket(x, y));
    const BlockOperator op = j1.op + j2.op + j3.op;
    const Complex central = j1.lambda + j2.lambda + j3.lambda;
    return std::hypot(op.frobenius(), std::abs(central));
}

double sigma_group_cocycle(Trial& t)
{
    const BlockOperator a = random_invertible(t.rng, t.pol);
    const BlockOperator b = random_invertible(t.rng, t.pol);
    const BlockOperator lhs = sigma_cocycle(taint(a, t.corrupt) * b).op;
    const BlockOperator rhs = a * sigma_cocycle(b).op * a.inverse() + sigma_cocycle(a).op;
    return rel(lhs.distance(rhs), rhs.frobenius());
}

double coadjoint_composition(Trial& t)
{
    const ExtendedGroupElement g1(random_group(t.rng, t.pol), t.rng.complex_normal());
    const ExtendedGroupElement g2(random_group(t.rng, t.pol), t.rng.complex_normal());
    const ExtendedPredual m{PredualElement(random_gl(t.rng, t.pol)), t.gamma};
    const ExtendedGroupElement product(taint(g1.a(), t.corrupt) * g2.a(), g1.phase() * g2.phase());
    // Right action: Ad*_{G1 G2} = Ad*_{G2} o Ad*_{G1}.
    const ExtendedPredual lhs = coadjoint(product, m);
    const ExtendedPredual rhs = coadjoint(g2, coadjoint(g1, m));
    return rel(lhs.distance(rhs), rhs.mu.op.frobenius());
}

double duality(Trial& t)
{
    const ExtendedGroupElement g(random_invertible(t.rng, t.pol), t.rng.complex_normal());
    const ExtendedPredual m{PredualElement(random_gl(t.rng, t.pol)), t.rng.complex_normal()};
    const ExtendedAlgebraElement x{random_gl(t.rng, t.pol), t.rng.complex_normal()};
    const ExtendedPredual moved = coadjoint(g, m);
    const ExtendedAlgebraElement adx = extended_adjoint(g, x);
    const PredualElement lhs_mu(taint(moved.mu.op, t.corrupt));
    const Complex lhs = pairing(lhs_mu, moved.gamma, x.op, x.lambda);
    const Complex rhs = pairing(m.mu, m.gamma, adx.op, adx.lambda);
    return rel(std::abs(lhs - rhs), std::abs(rhs));
}

double adstar_derivative(Trial& t)
{
    constexpr double step = 1e-5;
    const SpAlgebraElement a = random_algebra(t.rng, t.pol);
    const ExtendedPredual m{PredualElement(random_gl(t.rng, t.pol)), t.gamma};
    const ExtendedAlgebraElement x{taint(a.full(), t.corrupt), t.rng.complex_normal()};
    const ExtendedPredual analytic = ad_star(x, m);
    const ExtendedPredual plus = coadjoint(ExtendedGroupElement(exp_to_group(a * step)), m);
    const ExtendedPredual minus = coadjoint(ExtendedGroupElement(exp_to_group(a * -step)), m);
    const BlockOperator fd = (plus.mu.op - minus.mu.op) * (1.0 / (2.0 * step));
    const double central = std::abs((plus.gamma - minus.gamma) / (2.0 * step) - analytic.gamma);
    return rel(std::hypot(fd.distance(analytic.mu.op), central), analytic.mu.op.frobenius());
}

double kks_reality(Trial& t)
{
    const SpAlgebraElement a = random_algebra(t.rng, t.pol);
    SpAlgebraElement b = random_algebra(t.rng, t.pol);
    BlockOperator bf = b.full();
    if (t.corrupt) bf = BlockOperator(bf.pp(), bf.pm(), taint(bf.mp(), true), bf.mm());
    const Complex value = -t.gamma * schwinger(a.full(), bf);
    return rel(std::abs(value.imag()), std::abs(value));
}

double orbit_isotropy_fixes(Trial& t)
{
    SymplecticElement u = random_isotropy(t.rng, t.pol);
    u.h = taint(u.h, t.corrupt);
    const ExtendedPredual base{PredualElement::zero(t.pol), t.gamma};
    return coadjoint(ExtendedGroupElement(u.full()), base).distance(base);
}

double orbit_nonisotropy_moves(Trial& t)
{
    SymplecticElement a = random_group(t.rng, t.pol);
    if (t.corrupt) a = random_isotropy(t.rng, t.pol);
    const ExtendedPredual base{PredualElement::zero(t.pol), t.gamma};
    const double moved = coadjoint(ExtendedGroupElement(a), base).distance(base);
    return std::max(0.0, 1e-6 - moved);
}

double orbit_consistency(Trial& t)
{
    const SymplecticElement a = random_group(t.rng, t.pol);
    const SymplecticElement g = random_group(t.rng, t.pol);
    const ExtendedPredual start = orbit_point(a, t.gamma);
    ExtendedPredual moved = coadjoint(ExtendedGroupElement(g), start);
    moved.mu = PredualElement(taint(moved.mu.op, t.corrupt));
    // Re-solve sigma: recover the disc point, rebuild a representative, compare.
    const SymplecticElement b = transitive_element(orbit_to_siegel(moved));
    return rel(orbit_point(b, t.gamma).distance(moved), moved.mu.op.frobenius());
}

double orbit_coset(Trial& t)
{
    const SymplecticElement a = random_group(t.rng, t.pol);
    const SymplecticElement u = taint(random_isotropy(t.rng, t.pol), t.corrupt);
    return orbit_point(a * u, t.gamma).distance(orbit_point(a, t.gamma));
}

double lambda_independence(Trial& t)
{
    const ExtendedGroupElement g(random_group(t.rng, t.pol));
    const BlockOperator op = random_gl(t.rng, t.pol);
    const ExtendedPredual m{PredualElement(random_gl(t.rng, t.pol)), t.gamma};
    const ExtendedAlgebraElement x1{op, t.rng.complex_normal()};
    ExtendedAlgebraElement x2{op, t.rng.complex_normal()};
    if (t.corrupt) x2.op = taint(op, true);
    const auto ad1 = extended_adjoint(g, x1);
    const auto ad2 = extended_adjoint(g, x2);
    const double adjoint_gap = std::hypot(ad1.op.distance(ad2.op),
                                          std::abs((ad1.lambda - x1.lambda) - (ad2.lambda - x2.lambda)));
    const double adstar_gap = ad_star(x1, m).distance(ad_star(x2, m));
    return std::max(adjoint_gap, adstar_gap);
}

double pullback_equals_kks(Trial& t)
{
    const SpAlgebraElement a = random_algebra(t.rng, t.pol);
    const SpAlgebraElement b = random_algebra(t.rng, t.pol);
    const double kks = kks_form(a, b, t.gamma);
    SpAlgebraElement b_pull = b;
    if (t.corrupt) b_pull.a2 += ComplexMatrix::Identity(t.pol.n, t.pol.n) * Complex(0.0, 0.5);
    return rel(std::abs(pullback_form(a, b_pull, t.gamma) - kks), std::abs(kks));
}

double symplecto_theorem(Trial& t)
{
    const SpAlgebraElement a = random_algebra(t.rng, t.pol);
    const SpAlgebraElement b = random_algebra(t.rng, t.pol);
    SymplectoResult r = symplecto_check(a, b, t.gamma);
    if (t.corrupt) {
        SpAlgebraElement b2 = b;
        b2.a2 += ComplexMatrix::Identity(t.pol.n, t.pol.n) * Complex(0.0, 0.5);
        r.omega_hat = pullback_form(a, b2, t.gamma);
        r.residual = std::abs(r.omega_hat - symplecto_constant(t.gamma) * r.omega_d);
    }
    return rel(r.residual, std::abs(r.omega_hat));
}

std::vector<CheckSpec> build_registry()
{
    std::vector<CheckSpec> r;
    auto add = [&r](const char* suite, const char* name, double tol, double (*fn)(Trial&)) {
        r.push_back({suite, std::string(suite) + "." + name, tol, fn});
    };
    add("polarized", "conj_multiplicative", 1e-12, conj_multiplicative);
    add("polarized", "conj_involution", 1e-12, conj_involution);
    add("polarized", "transpose_reverses_products", 1e-12, transpose_reverses);
    add("polarized", "trres_cyclic", 1e-10, trres_cyclic);
    add("polarized", "trres_conjugation_invariant", 1e-8, trres_conjugation);
    add("polarized", "pairing_nondegenerate", 0.5, pairing_nondegenerate);

    add("symplectic", "closure_product", 1e-9, closure_product);
    add("symplectic", "closure_inverse", 1e-9, closure_inverse);
    add("symplectic", "omega_invariance", 1e-9, omega_invariance);
    add("symplectic", "derived_identities", 1e-9, derived_identities);
    add("symplectic", "g_block_invertible", 1e-9, g_block_invertible);
    add("symplectic", "exp_inverse", 1e-9, exp_inverse);
    add("symplectic", "random_algebra_membership", 1e-12, random_algebra_membership);

    add("siegel", "action_law", 1e-8, action_law);
    add("siegel", "isotropy_fixes_origin", 1e-12, isotropy_origin);
    add("siegel", "transitivity", 1e-8, transitivity);
    add("siegel", "metric_invariance", 1e-7, metric_invariance);
    add("siegel", "kahler_invariance", 1e-7, kahler_invariance);
    add("siegel", "metric_positivity", 1e-12, metric_positivity);
    add("siegel", "zz_transpose_identity", 1e-12, zz_transpose_identity);
    add("siegel", "tangent_finite_difference", 1e-6, tangent_finite_difference);
    add("siegel", "tangent_at_origin", 1e-10, tangent_at_origin);
    add("siegel", "transitive_element_in_group", 1e-9, transitive_in_group);

    add("coadjoint", "schwinger_cocycle", 1e-9, schwinger_cocycle);
    add("coadjoint", "schwinger_antisymmetry", 1e-10, schwinger_antisymmetry);
    add("coadjoint", "extended_jacobi", 1e-9, extended_jacobi);
    add("coadjoint", "sigma_cocycle_law", 1e-9, sigma_group_cocycle);
    add("coadjoint", "coadjoint_composition", 1e-8, coadjoint_composition);
    add("coadjoint", "duality", 1e-9, duality);
    add("coadjoint", "adstar_derivative", 1e-6, adstar_derivative);
    add("coadjoint", "kks_reality", 1e-12, kks_reality);
    add("coadjoint", "orbit_isotropy_fixes", 1e-10, orbit_isotropy_fixes);
    add("coadjoint", "orbit_nonisotropy_moves", 0.0, orbit_nonisotropy_moves);
    add("coadjoint", "orbit_consistency", 1e-8, orbit_consistency);
    add("coadjoint", "orbit_coset_invariance", 1e-9, orbit_coset);
    add("coadjoint", "lambda_independence", 1e-12, lambda_independence);
    add("coadjoint", "pullback_equals_kks", 1e-10, pullback_equals_kks);
    add("coadjoint", "symplecto_theorem", 1e-9, symplecto_theorem);
    return r;
}

} // namespace

const std::vector<CheckSpec>& check_registry()
{
    static const std::vector<CheckSpec> registry = build_registry();
    return registry;
}

const std::vector<std::string>& suite_names()
{
    static const std::vector<std::string> names = {"polarized", "symplectic", "siegel", "coadjoint", "all"};
    return names;
}

Report run_checks(const RunConfig& config, const std::string& suite, const std::optional<std::string>& inject)
{
    config.validate();
    if (std::find(suite_names().begin(), suite_names().end(), suite) == suite_names().end()) {
        throw DomainError("unknown suite \"" + suite + "\"");
    }
    if (inject) {
        const auto& reg = check_registry();
        const bool known = std::any_of(reg.begin(), reg.end(), [&](const CheckSpec& c) { return c.name == *inject; });
        if (!known) throw DomainError("--inject-violation: unknown check \"" + *inject + "\"");
    }

    Report report;
    report.suite = suite;
    report.config = config;
    const Polarization pol(config.n);
    for (const CheckSpec& spec : check_registry()) {
        if (suite != "all" && spec.suite != suite) continue;
        CheckRecord rec;
        rec.name = spec.name;
        rec.trials = config.trials;
        rec.tolerance = config.tolerance(spec.name, spec.tolerance);
        const bool corrupt = inject && *inject == spec.name;
        for (std::size_t k = 0; k < config.trials; ++k) {
            Rng rng(config.seed + k);
            Trial trial{rng, pol, config.gamma, corrupt};
            double residual;
            try {
                residual = spec.residual(trial);
            } catch (const Error&) {
                // A library precondition tripped by the trial input counts as a failed check.
                residual = std::numeric_limits<double>::infinity();
            }
            if (std::isnan(residual)) residual = std::numeric_limits<double>::infinity();
            rec.max_residual = std::max(rec.max_residual, residual);
        }
        rec.pass = rec.max_residual <= rec.tolerance;
        report.checks.push_back(rec);
    }
    return report;
}

} // namespace orbit::cli
