#pragma once

#include <cstdint>
#include <functional>
#include <iosfwd>
#include <map>
#include <optional>
#include <string>
#include <vector>

#include "orbit/json_io.hpp"

namespace orbit::cli {

inline constexpr const char* kVersion = "0.1.0";

enum ExitCode : int { kExitOk = 0, kExitCheckFailed = 1, kExitUsage = 2 };

struct RunConfig {
    Eigen::Index n = 4;
    double gamma = 1.0;
    std::uint64_t seed = 42;
    std::size_t trials = 100;
    std::map<std::string, double> tol_overrides;
    std::string output_path;  ///< empty: standard output

    /// Throws DomainError on n < 1, trials < 1, or non-finite gamma.
    void validate() const;
    double tolerance(const std::string& name, double fallback) const;
};

struct CheckRecord {
    std::string name;
    std::size_t trials = 0;
    double max_residual = 0.0;
    double tolerance = 0.0;
    bool pass = false;
};

struct Report {
    std::string suite;
    std::vector<CheckRecord> checks;
    RunConfig config;
    std::string version = kVersion;

    bool pass() const;
    io::Json to_json() const;
};

/// Input for one randomized trial of a property check.
struct Trial {
    Rng& rng;
    Polarization pol;
    double gamma;
    bool corrupt;  ///< perturb one input so the property must fail
};

struct CheckSpec {
    std::string suite;
    std::string name;  ///< "<suite>.<property>"
    double tolerance;
    std::function<double(Trial&)> residual;
};

/// Every registered property check, in report order.
const std::vector<CheckSpec>& check_registry();

const std::vector<std::string>& suite_names();

/// Runs `config.trials` trials of every check in `suite` ("all" for every suite).
/// Trial k of each check is seeded with config.seed + k. A check named in
/// `inject` receives corrupted inputs.
Report run_checks(const RunConfig& config, const std::string& suite,
                  const std::optional<std::string>& inject = std::nullopt);

enum class GenKind { SpAlgebra, Symplectic, SiegelPoint };

GenKind parse_gen_kind(const std::string& text);
io::Json cmd_gen(const RunConfig& config, GenKind kind);
io::Json cmd_orbit(const RunConfig& config, const io::Json& element);
io::Json cmd_forms(const RunConfig& config, const io::Json& a, const io::Json& b);

/// Serialization used for every command output.
std::string dump(const io::Json& j);

/// Entry point of the `orbit` executable. Returns the process exit code.
int run(int argc, char** argv, std::ostream& out, std::ostream& err);

} // namespace orbit::cli
