#include <cmath>
#include <fstream>
#include <iostream>

#include <CLI11.hpp>

#include "orbit/cli.hpp"

namespace orbit::cli {

void RunConfig::validate() const
{
    if (n < 1) throw DomainError("n must be at least 1");
    if (trials < 1) throw DomainError("trials must be at least 1");
    if (!std::isfinite(gamma)) throw DomainError("gamma must be finite");
}

double RunConfig::tolerance(const std::string& name, double fallback) const
{
    const auto it = tol_overrides.find(name);
    return it == tol_overrides.end() ? fallback : it->second;
}

bool Report::pass() const
{
    return std::all_of(checks.begin(), checks.end(), [](const CheckRecord& c) { return c.pass; });
}

io::Json Report::to_json() const
{
    io::Json records = io::Json::array();
    for (const CheckRecord& c : checks) {
        // JSON has no infinity; a check that threw is reported with a null residual.
        io::Json residual = std::isfinite(c.max_residual) ? io::Json(c.max_residual) : io::Json(nullptr);
        records.push_back({{"name", c.name},
                           {"trials", c.trials},
                           {"max_residual", residual},
                           {"tolerance", c.tolerance},
                           {"pass", c.pass}});
    }
    io::Json tol = io::Json::object();
    for (const auto& [name, value] : config.tol_overrides) tol[name] = value;
    return {{"suite", suite},
            {"version", version},
            {"pass", pass()},
            {"config", {{"n", config.n}, {"gamma", config.gamma}, {"seed", config.seed},
                        {"trials", config.trials}, {"tol_overrides", tol}}},
            {"checks", std::move(records)}};
}

std::string dump(const io::Json& j)
{
    return j.dump(2) + "\n";
}

GenKind parse_gen_kind(const std::string& text)
{
    if (text == "sp-algebra") return GenKind::SpAlgebra;
    if (text == "symplectic") return GenKind::Symplectic;
    if (text == "siegel-point") return GenKind::SiegelPoint;
    throw DomainError("unknown kind \"" + text + "\" (expected sp-algebra, symplectic or siegel-point)");
}

io::Json cmd_gen(const RunConfig& config, GenKind kind)
{
    config.validate();
    const Polarization pol(config.n);
    Rng rng(config.seed);
    switch (kind) {
    case GenKind::SpAlgebra:
        return io::to_json(random_sp_algebra(rng, pol, 1.0 / std::sqrt(static_cast<double>(pol.n))));
    case GenKind::Symplectic:
        return io::to_json(random_symplectic(rng, pol));
    case GenKind::SiegelPoint:
        return io::to_json(random_disc_point(rng, pol));
    }
    throw DomainError("cmd_gen: unreachable kind");
}

io::Json cmd_orbit(const RunConfig& config, const io::Json& element)
{
    const SymplecticElement a = io::symplectic_from_json(element);
    const MembershipResult m = is_symplectic(a, config.tolerance("membership", kMembershipTol));
    if (!m.member) {
        throw DomainError("element is not symplectic (residual " + std::to_string(m.max_residual()) + ")");
    }
    return io::to_json(orbit_point(a, config.gamma));
}

io::Json cmd_forms(const RunConfig& config, const io::Json& a_doc, const io::Json& b_doc)
{
    const SpAlgebraElement a = io::algebra_from_json(a_doc);
    const SpAlgebraElement b = io::algebra_from_json(b_doc);
    const double tol = config.tolerance("membership", kMembershipTol);
    for (const SpAlgebraElement* x : {&a, &b}) {
        const MembershipResult m = is_sp_algebra(*x, tol);
        if (!m.member) {
            throw DomainError("input is not in sp (residual " + std::to_string(m.max_residual()) + ")");
        }
    }
    if (a.a1.rows() != b.a1.rows()) throw DimensionError("A and B have different sizes");
    const SymplectoResult r = symplecto_check(a, b, config.gamma);
    return {{"gamma", config.gamma},
            {"omega_D", r.omega_d},
            {"omega_hat", r.omega_hat},
            {"kks", r.kks},
            {"ratio", r.ratio ? io::Json(*r.ratio) : io::Json(nullptr)},
            {"residual", r.residual},
            {"degenerate", !r.conclusive()},
            {"pass", r.passes()}};
}

namespace {

void emit(const io::Json& doc, const RunConfig& config, std::ostream& out)
{
    const std::string text = dump(doc);
    if (config.output_path.empty()) {
        out << text;
        return;
    }
    std::ofstream file(config.output_path);
    if (!file) throw std::runtime_error("cannot write " + config.output_path);
    file << text;
}

void add_common(CLI::App& cmd, RunConfig& config, std::map<std::string, double>& tols,
                const std::vector<std::string>& tol_names)
{
    cmd.add_option("--n", config.n, "truncation: dim H+ = dim H- = n")->check(CLI::PositiveNumber);
    cmd.add_option("--gamma", config.gamma, "central coordinate gamma (nonzero for orbit commands)");
    cmd.add_option("--seed", config.seed, "PRNG seed")->envname("ORBIT_SEED");
    cmd.add_option("--trials", config.trials, "randomized trials per check")->check(CLI::PositiveNumber);
    cmd.add_option("--out", config.output_path, "write JSON here instead of stdout");
    for (const std::string& name : tol_names) {
        cmd.add_option("--tol." + name, tols[name], "tolerance override for " + name);
    }
}

} // namespace

int run(int argc, char** argv, std::ostream& out, std::ostream& err)
{
    CLI::App app{"Restricted symplectic group, Siegel disc and coadjoint orbit numerics"};
    app.require_subcommand(1);
    app.set_version_flag("--version", kVersion);

    std::vector<std::string> tol_names{"membership"};
    for (const CheckSpec& c : check_registry()) tol_names.push_back(c.name);

    RunConfig config;
    std::map<std::string, double> tols;

    std::string kind;
    auto* gen = app.add_subcommand("gen", "generate a random element as JSON");
    gen->add_option("--kind", kind, "sp-algebra | symplectic | siegel-point")->required();
    add_common(*gen, config, tols, tol_names);

    std::string suite = "all";
    std::string inject;
    auto* check = app.add_subcommand("check", "run the invariant suites and write a JSON report");
    check->add_option("--suite", suite, "polarized | symplectic | siegel | coadjoint | all")
        ->check(CLI::IsMember(suite_names()));
    auto* inject_opt = check->add_option("--inject-violation", inject,
                                         "corrupt the inputs of the named check (default symplectic.closure_product)")
                           ->expected(0, 1)
                           ->default_str("symplectic.closure_product");
    add_common(*check, config, tols, tol_names);

    std::string element_file;
    auto* orbit_cmd = app.add_subcommand("orbit", "orbit point (-gamma sigma(a), gamma) of a symplectic element");
    orbit_cmd->add_option("element", element_file, "JSON file {n, g, h}")->required();
    add_common(*orbit_cmd, config, tols, tol_names);

    std::string a_file;
    std::string b_file;
    auto* forms = app.add_subcommand("forms", "Kahler, KKS and pulled-back forms on a pair of sp elements");
    forms->add_option("A", a_file, "JSON file {n, a1, a2}")->required();
    forms->add_option("B", b_file, "JSON file {n, a1, a2}")->required();
    add_common(*forms, config, tols, tol_names);

    try {
        app.parse(argc, argv);
    } catch (const CLI::Success& e) {
        return app.exit(e, out, err);
    } catch (const CLI::ParseError& e) {
        app.exit(e, out, err);
        return kExitUsage;
    }

    for (const auto& [name, value] : tols) {
        for (CLI::App* sub : app.get_subcommands()) {
            if (sub->count("--tol." + name) > 0) config.tol_overrides[name] = value;
        }
    }

    try {
        if (gen->parsed()) {
            emit(cmd_gen(config, parse_gen_kind(kind)), config, out);
            return kExitOk;
        }
        if (check->parsed()) {
            std::optional<std::string> injected;
            if (inject_opt->count() > 0) {
                injected = inject.empty() ? std::string("symplectic.closure_product") : inject;
            }
            const Report report = run_checks(config, suite, injected);
            emit(report.to_json(), config, out);
            for (const CheckRecord& c : report.checks) {
                if (!c.pass) {
                    err << "FAIL " << c.name << " max_residual=" << c.max_residual << " tolerance=" << c.tolerance
                        << "\n";
                }
            }
            return report.pass() ? kExitOk : kExitCheckFailed;
        }
        if (orbit_cmd->parsed()) {
            config.validate();
            emit(cmd_orbit(config, io::read_file(element_file)), config, out);
            return kExitOk;
        }
        if (forms->parsed()) {
            config.validate();
            emit(cmd_forms(config, io::read_file(a_file), io::read_file(b_file)), config, out);
            return kExitOk;
        }
    } catch (const Error& e) {
        err << "error: " << e.what() << "\n";
        return kExitUsage;
    } catch (const std::runtime_error& e) {
        err << "error: " << e.what() << "\n";
        return kExitUsage;
    }
    return kExitUsage;
}

} // namespace orbit::cli
