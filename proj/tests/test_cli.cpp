#include <doctest.h>

#include <cmath>
#include <cstdio>
#include <filesystem>
#include <fstream>
#include <sstream>
#include <vector>

#include "orbit/cli.hpp"

using namespace orbit;

namespace {

struct CliResult {
    int code;
    std::string out;
    std::string err;
};

CliResult invoke(std::vector<std::string> args)
{
    args.insert(args.begin(), "orbit");
    std::vector<char*> argv;
    for (std::string& a : args) argv.push_back(a.data());
    std::ostringstream out;
    std::ostringstream err;
    const int code = cli::run(static_cast<int>(argv.size()), argv.data(), out, err);
    return {code, out.str(), err.str()};
}

std::string temp_file(const std::string& name, const std::string& content)
{
    const auto path = std::filesystem::temp_directory_path() / ("orbit_cli_test_" + name);
    std::ofstream(path) << content;
    return path.string();
}

io::Json forms_for(const std::string& a, const std::string& b, const std::string& gamma)
{
    const CliResult r = invoke({"forms", a, b, "--gamma", gamma});
    REQUIRE(r.code == 0);
    return io::parse(r.out);
}

} // namespace

TEST_CASE("gen is deterministic and emits members")
{
    for (const char* kind : {"sp-algebra", "symplectic", "siegel-point"}) {
        const CliResult first = invoke({"gen", "--kind", kind, "--seed", "7"});
        const CliResult second = invoke({"gen", "--kind", kind, "--seed", "7"});
        REQUIRE(first.code == 0);
        CHECK(first.out == second.out);
        // parse -> re-serialize is byte-identical
        CHECK(cli::dump(io::parse(first.out)) == first.out);
    }

    const io::Json sym = io::parse(invoke({"gen", "--kind", "symplectic", "--n", "3"}).out);
    CHECK(is_symplectic(io::symplectic_from_json(sym)).member);
    const io::Json alg = io::parse(invoke({"gen", "--kind", "sp-algebra", "--n", "3"}).out);
    CHECK(is_sp_algebra(io::algebra_from_json(alg)).member);
    const io::Json pt = io::parse(invoke({"gen", "--kind", "siegel-point", "--n", "1"}).out);
    CHECK(siegel_contains(io::siegel_from_json(pt).z).inside);

    CHECK(invoke({"gen", "--kind", "octonion"}).code == cli::kExitUsage);
    CHECK(invoke({"gen", "--kind", "symplectic", "--n", "0"}).code == cli::kExitUsage);
}

TEST_CASE("gen honours ORBIT_SEED when --seed is absent")
{
    ::setenv("ORBIT_SEED", "1234", 1);
    const CliResult env = invoke({"gen", "--kind", "siegel-point"});
    ::unsetenv("ORBIT_SEED");
    const CliResult flag = invoke({"gen", "--kind", "siegel-point", "--seed", "1234"});
    const CliResult deflt = invoke({"gen", "--kind", "siegel-point"});
    CHECK(env.out == flag.out);
    CHECK(env.out != deflt.out);
}

TEST_CASE("check suites")
{
    const CliResult all = invoke({"check", "--suite", "all", "--trials", "5"});
    CHECK(all.code == 0);
    const io::Json report = io::parse(all.out);
    CHECK(report["pass"] == true);
    CHECK(report["checks"].size() == cli::check_registry().size());

    for (const char* suite : {"polarized", "symplectic", "siegel", "coadjoint"}) {
        CHECK(invoke({"check", "--suite", suite, "--trials", "3", "--n", "2"}).code == 0);
    }
    CHECK(invoke({"check", "--suite", "nonsense"}).code == cli::kExitUsage);

    const CliResult a = invoke({"check", "--trials", "1", "--seed", "5"});
    const CliResult b = invoke({"check", "--trials", "1", "--seed", "5"});
    CHECK(a.out == b.out);
}

TEST_CASE("injected violations fail the named check")
{
    const CliResult r = invoke({"check", "--trials", "2", "--inject-violation", "siegel.action_law"});
    CHECK(r.code == cli::kExitCheckFailed);
    CHECK(r.err.find("FAIL siegel.action_law") != std::string::npos);
    const io::Json report = io::parse(r.out);
    int failed = 0;
    for (const auto& c : report["checks"]) failed += c["pass"] == false;
    CHECK(failed == 1);

    const CliResult bare = invoke({"check", "--trials", "2", "--inject-violation"});
    CHECK(bare.code == cli::kExitCheckFailed);
    CHECK(bare.err.find("FAIL symplectic.closure_product") != std::string::npos);

    CHECK(invoke({"check", "--inject-violation", "no.such_check"}).code == cli::kExitUsage);
}

TEST_CASE("every registered check detects its injected violation")
{
    cli::RunConfig config;
    config.trials = 2;
    for (const cli::CheckSpec& spec : cli::check_registry()) {
        const cli::Report report = cli::run_checks(config, spec.suite, spec.name);
        for (const cli::CheckRecord& rec : report.checks) {
            CAPTURE(rec.name);
            CHECK(rec.pass == (rec.name != spec.name));
        }
    }
}

TEST_CASE("tolerance overrides reach the report")
{
    const CliResult r = invoke({"check", "--suite", "siegel", "--trials", "2", "--tol.siegel.tangent_finite_difference",
                                "1e-30"});
    CHECK(r.code == cli::kExitCheckFailed);
    const io::Json report = io::parse(r.out);
    CHECK(report["config"]["tol_overrides"]["siegel.tangent_finite_difference"] == 1e-30);
}

TEST_CASE("orbit command")
{
    const std::string identity = temp_file(
        "identity.json", cli::dump(io::to_json(SymplecticElement::identity(Polarization(2)))));
    const CliResult base = invoke({"orbit", identity, "--gamma", "2.5"});
    REQUIRE(base.code == 0);
    const ExtendedPredual p = io::predual_from_json(io::parse(base.out));
    CHECK(p.mu.op.frobenius() == 0.0);
    CHECK(p.gamma == Complex(2.5, 0.0));

    const double t = 0.4;
    SymplecticElement hyp{ComplexMatrix::Constant(1, 1, std::cosh(t)), ComplexMatrix::Constant(1, 1, std::sinh(t))};
    const std::string hyp_file = temp_file("hyp.json", cli::dump(io::to_json(hyp)));
    const ExtendedPredual q = io::predual_from_json(io::parse(invoke({"orbit", hyp_file, "--gamma", "2"}).out));
    const double c2 = std::cosh(2 * t);
    const double s2 = std::sinh(2 * t);
    CHECK(std::abs(q.mu.op.pp()(0, 0) - (-2.0) * kI * (c2 - 1.0)) < 1e-12);
    CHECK(std::abs(q.mu.op.pm()(0, 0) - (-2.0) * (-kI) * s2) < 1e-12);

    Rng rng(3);
    const std::string iso = temp_file("iso.json", cli::dump(io::to_json(random_isotropy(rng, Polarization(3)))));
    const ExtendedPredual r = io::predual_from_json(io::parse(invoke({"orbit", iso}).out));
    CHECK(r.mu.op.frobenius() < 1e-14);

    CHECK(invoke({"orbit", identity, "--gamma", "0"}).code == cli::kExitUsage);
    const std::string bad = temp_file(
        "bad.json", cli::dump(io::to_json(SymplecticElement{ComplexMatrix::Identity(2, 2), ComplexMatrix::Identity(2, 2)})));
    CHECK(invoke({"orbit", bad}).code == cli::kExitUsage);
    CHECK(invoke({"orbit", temp_file("garbage.json", "{")}).code == cli::kExitUsage);
}

TEST_CASE("forms command")
{
    const SpAlgebraElement a{ComplexMatrix::Zero(1, 1), ComplexMatrix::Constant(1, 1, 1.0)};
    const SpAlgebraElement b{ComplexMatrix::Zero(1, 1), ComplexMatrix::Constant(1, 1, kI)};
    const std::string fa = temp_file("A.json", cli::dump(io::to_json(a)));
    const std::string fb = temp_file("B.json", cli::dump(io::to_json(b)));

    const io::Json r = forms_for(fa, fb, "1");
    CHECK(std::abs(r["omega_D"].get<double>() + 1.0) < 1e-12);
    CHECK(std::abs(r["omega_hat"].get<double>() - 4.0) < 1e-12);
    CHECK(std::abs(r["kks"].get<double>() - 4.0) < 1e-12);
    CHECK(std::abs(r["ratio"].get<double>() + 4.0) < 1e-12);
    CHECK(r["residual"].get<double>() < 1e-12);
    CHECK(r["degenerate"] == false);

    const io::Json same = forms_for(fa, fa, "1");
    CHECK(same["degenerate"] == true);
    CHECK(same["ratio"].is_null());

    const io::Json doubled = forms_for(fa, fb, "2");
    CHECK(doubled["omega_hat"].get<double>() == 2.0 * r["omega_hat"].get<double>());
    CHECK(doubled["kks"].get<double>() == 2.0 * r["kks"].get<double>());
    CHECK(doubled["omega_D"].get<double>() == r["omega_D"].get<double>());

    const SpAlgebraElement not_sp{ComplexMatrix::Identity(1, 1), ComplexMatrix::Zero(1, 1)};
    CHECK(invoke({"forms", temp_file("notsp.json", cli::dump(io::to_json(not_sp))), fb}).code == cli::kExitUsage);
}

TEST_CASE("output file and usage errors")
{
    const auto path = std::filesystem::temp_directory_path() / "orbit_cli_test_out.json";
    std::filesystem::remove(path);
    CHECK(invoke({"gen", "--kind", "symplectic", "--out", path.string()}).code == 0);
    CHECK(std::filesystem::exists(path));
    CHECK(invoke({}).code == cli::kExitUsage);
    CHECK(invoke({"frobnicate"}).code == cli::kExitUsage);
}

TEST_CASE("the executable agrees with the in-process entry point")
{
    const std::string cmd = std::string(ORBIT_EXE) + " gen --kind symplectic --seed 3 --n 2";
    FILE* pipe = ::popen(cmd.c_str(), "r");
    REQUIRE(pipe != nullptr);
    std::string text;
    char buf[4096];
    while (std::fgets(buf, sizeof buf, pipe)) text += buf;
    CHECK(::pclose(pipe) == 0);
    CHECK(text == invoke({"gen", "--kind", "symplectic", "--seed", "3", "--n", "2"}).out);
}
