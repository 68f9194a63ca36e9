#pragma once

#include <fstream>
#include <iostream>
#include <optional>
#include <ostream>
#include <sstream>
#include <stdexcept>
#include <string>
#include <vector>

#include <CLI11.hpp>

#include "hhcalc/cohomology.hpp"
#include "hhcalc/parse.hpp"
#include "hhcalc/report.hpp"

namespace hhcalc::cli {

enum class Command { Dims, VerifyComplex, OracleCheck, KernelBasisCheck, AlgebraInfo, ResolutionDump };
enum class Format { Table, Json, Csv };

inline constexpr int kExitOk = 0;
inline constexpr int kExitMismatch = 1;
inline constexpr int kExitConfig = 2;

/// Raised for any configuration problem; maps to exit code 2.
class ConfigError : public std::runtime_error {
public:
    using std::runtime_error::runtime_error;
};

struct RunConfig {
    Command command = Command::Dims;
    int T = 0;
    std::string field = "rational";
    std::optional<std::uint32_t> p;
    std::string q = "2,1,1,1";
    int max_n = 12;
    Format format = Format::Table;
    std::optional<std::string> out;
    unsigned jobs = 1;
};

inline const std::vector<std::pair<std::string, Command>>& command_names() {
    static const std::vector<std::pair<std::string, Command>> names = {
        {"dims", Command::Dims},
        {"verify-complex", Command::VerifyComplex},
        {"oracle-check", Command::OracleCheck},
        {"kernel-basis-check", Command::KernelBasisCheck},
        {"algebra-info", Command::AlgebraInfo},
        {"resolution-dump", Command::ResolutionDump},
    };
    return names;
}

/// Parses the command line. Returns nullopt after printing help; throws
/// ConfigError on anything malformed. Semantic checks that need the field
/// (q parsing, the root-of-unity guard) happen in run().
inline std::optional<RunConfig> parse_config(int argc, const char* const* argv, std::ostream& help_out = std::cout) {
    RunConfig cfg;
    CLI::App app{"Hochschild cohomology of the algebras A_T(q0,q1,q2,q3)", "hhcalc"};
    app.require_subcommand(1, 1);
    app.fallthrough();
    std::vector<CLI::App*> subs;
    subs.push_back(app.add_subcommand("dims", "compute HH^n dimensions and compare with the closed forms"));
    subs.push_back(app.add_subcommand("verify-complex", "check d^n d^(n+1) = 0, minimality, and linearity at T=0"));
    subs.push_back(app.add_subcommand("oracle-check", "like dims, failing on any mismatch"));
    subs.push_back(app.add_subcommand("kernel-basis-check", "check the explicit kernel bases of delta^n"));
    subs.push_back(app.add_subcommand("algebra-info", "dimension, hom-space dimensions and center of A"));
    subs.push_back(app.add_subcommand("resolution-dump", "emit the differential tables as JSON"));

    std::string format = "table";
    std::string out;
    unsigned p = 0;
    app.add_option("--T", cfg.T, "socle parameter T >= 0")->check(CLI::NonNegativeNumber);
    app.add_option("--field", cfg.field, "rational | ratfunc")->check(CLI::IsMember({"rational", "ratfunc"}));
    auto* popt = app.add_option("--p", p, "characteristic of F_p(t) (ratfunc only)");
    app.add_option("--q", cfg.q, "q0,q1,q2,q3");
    app.add_option("--max-n", cfg.max_n, "largest degree")->check(CLI::NonNegativeNumber);
    app.add_option("--format", format, "table | json | csv")->check(CLI::IsMember({"table", "json", "csv"}));
    auto* oopt = app.add_option("--out", out, "output file (default: standard output)");
    app.add_option("--jobs", cfg.jobs, "worker threads for per-degree work")->check(CLI::PositiveNumber);

    std::vector<std::string> args;
    for (int k = argc - 1; k > 0; --k) args.emplace_back(argv[k]);
    try {
        app.parse(args);
    } catch (const CLI::CallForHelp&) {
        help_out << app.help();
        return std::nullopt;
    } catch (const CLI::ParseError& e) {
        std::string msg = e.what();
        if (msg.empty()) msg = e.get_name();
        throw ConfigError(msg);
    }

    for (std::size_t k = 0; k < subs.size(); ++k)
        if (subs[k]->parsed()) cfg.command = command_names()[k].second;
    cfg.format = format == "json" ? Format::Json : format == "csv" ? Format::Csv : Format::Table;
    if (!oopt->empty()) cfg.out = out;

    if (cfg.field == "ratfunc") {
        if (popt->empty()) throw ConfigError("--field ratfunc requires --p");
        if (!is_prime(p)) throw ConfigError("--p must be prime, got " + std::to_string(p));
        cfg.p = p;
    } else if (!popt->empty()) {
        throw ConfigError("--p only applies to --field ratfunc");
    }
    if (cfg.format == Format::Csv && cfg.command != Command::Dims && cfg.command != Command::OracleCheck)
        throw ConfigError("--format csv is only available for dims and oracle-check");
    if (cfg.command == Command::VerifyComplex && cfg.max_n < 1) throw ConfigError("verify-complex needs --max-n >= 1");
    return cfg;
}

namespace detail {

template <ExactField K>
FieldSpec<K> make_spec(const K& field, const RunConfig& cfg) {
    try {
        FieldSpec<K> spec(field, parse_q(field, cfg.q));
        spec.validate();
        return spec;
    } catch (const std::invalid_argument& e) {
        throw ConfigError(e.what());
    } catch (const std::domain_error& e) {
        throw ConfigError(e.what());
    }
}

template <ExactField K>
int run_dims(const RunConfig& cfg, const Cohomology<K>& co, std::ostream& os) {
    const CohomologyReport rep = co.hh_dimensions(cfg.max_n, cfg.jobs);
    switch (cfg.format) {
        case Format::Json: os << to_json(rep).dump(2) << '\n'; break;
        case Format::Csv: write_csv(os, rep); break;
        case Format::Table: write_table(os, rep); break;
    }
    if (cfg.command == Command::OracleCheck && cfg.format == Format::Table)
        for (const auto& d : rep.degrees)
            if (!d.match)
                os << "mismatch at n=" << d.n << ": hh " << d.hh << " vs " << d.hh_oracle << ", ker " << d.ker_dim
                   << " vs " << d.ker_oracle << ", hom " << d.hom_dim << " vs " << d.hom_oracle << '\n';
    return rep.all_match ? kExitOk : kExitMismatch;
}

template <ExactField K>
int run_verify(const RunConfig& cfg, const Cohomology<K>& co, std::ostream& os) {
    const Resolution<K>& res = co.resolution();
    const ComplexReport rep = res.verify_complex(cfg.max_n);
    const bool minimal = res.minimality_check(cfg.max_n);
    std::optional<bool> linear;
    if (co.algebra().T() == 0) linear = res.linearity_check(cfg.max_n);
    const bool ok = rep.ok() && minimal && linear.value_or(true);

    if (cfg.format == Format::Json) {
        ordered_json j;
        j["params"] = to_json(echo_params(co.algebra()));
        j["max_n"] = cfg.max_n;
        j["rows_checked"] = rep.rows_checked;
        j["complex"] = rep.ok();
        j["failures"] = ordered_json::array();
        for (const auto& f : rep.failures)
            j["failures"].push_back(
                {{"n", f.n}, {"i", f.source.i.value()}, {"j", f.source.j}, {"residual", f.residual}});
        j["minimal"] = minimal;
        j["linear"] = linear ? ordered_json(*linear) : ordered_json(nullptr);
        j["ok"] = ok;
        os << j.dump(2) << '\n';
    } else {
        os << describe(echo_params(co.algebra())) << '\n';
        os << "d^n d^(n+1) = 0 for n < " << cfg.max_n << ": " << (rep.ok() ? "yes" : "NO") << " (" << rep.rows_checked
           << " generators)\n";
        for (const auto& f : rep.failures) {
            os << "  nonzero at n=" << f.n << " source (" << f.source.i.value() << "," << f.source.j << "):\n";
            for (const auto& r : f.residual) os << "    " << r << '\n';
        }
        os << "minimal: " << (minimal ? "yes" : "NO") << '\n';
        if (linear) os << "linear (T=0): " << (*linear ? "yes" : "NO") << '\n';
    }
    return ok ? kExitOk : kExitMismatch;
}

template <ExactField K>
int run_kernel_basis(const RunConfig& cfg, const Cohomology<K>& co, std::ostream& os) {
    bool ok = true;
    ordered_json rows = ordered_json::array();
    if (cfg.format == Format::Table) {
        os << describe(echo_params(co.algebra())) << '\n';
        os << std::setw(6) << "n" << std::setw(8) << "count" << std::setw(12) << "kernel_dim" << std::setw(11)
           << "in_kernel" << std::setw(13) << "independent" << std::setw(10) << "complete" << '\n';
    }
    for (int n = 0; n <= cfg.max_n; ++n) {
        const KernelBasisCheck c = co.kernel_basis_check(n);
        ok = ok && c.ok();
        if (cfg.format == Format::Json) {
            rows.push_back({{"n", n},
                            {"count", c.count},
                            {"kernel_dim", c.kernel_dim},
                            {"in_kernel", c.in_kernel},
                            {"independent", c.independent},
                            {"complete", c.complete},
                            {"offending", c.offending}});
        } else {
            auto yn = [](bool b) { return b ? "yes" : "NO"; };
            os << std::setw(6) << n << std::setw(8) << c.count << std::setw(12) << c.kernel_dim << std::setw(11)
               << yn(c.in_kernel) << std::setw(13) << yn(c.independent) << std::setw(10) << yn(c.complete) << '\n';
            for (const auto& v : c.offending) os << "    not in kernel: " << v << '\n';
        }
    }
    if (cfg.format == Format::Json) {
        ordered_json j;
        j["params"] = to_json(echo_params(co.algebra()));
        j["degrees"] = std::move(rows);
        j["ok"] = ok;
        os << j.dump(2) << '\n';
    }
    return ok ? kExitOk : kExitMismatch;
}

template <ExactField K>
int run_algebra_info(const RunConfig& cfg, const Cohomology<K>& co, std::ostream& os) {
    const Algebra<K>& alg = co.algebra();
    const std::size_t dim = alg.dim();
    const std::size_t center = alg.center_dimension();
    std::vector<std::vector<std::size_t>> pair_dims(4, std::vector<std::size_t>(4));
    for (int i = 0; i < 4; ++i)
        for (int j = 0; j < 4; ++j) pair_dims[i][j] = alg.hom_space_basis(i, j).size();
    if (cfg.format == Format::Json) {
        ordered_json j;
        j["params"] = to_json(echo_params(alg));
        j["dim"] = dim;
        j["socle_length"] = alg.socle_length();
        j["hom_space_dims"] = pair_dims;
        j["center_dim"] = center;
        os << j.dump(2) << '\n';
    } else {
        os << describe(echo_params(alg)) << '\n';
        os << "dim A = " << dim << '\n';
        os << "socle length = " << alg.socle_length() << '\n';
        os << "dim e_i A e_j (rows i, columns j):\n";
        for (int i = 0; i < 4; ++i) {
            os << "  ";
            for (int j = 0; j < 4; ++j) os << std::setw(4) << pair_dims[i][j];
            os << '\n';
        }
        os << "dim Z(A) = " << center << '\n';
    }
    return kExitOk;
}

template <ExactField K>
int run_dump(const RunConfig& cfg, const Cohomology<K>& co, std::ostream& os) {
    ordered_json j;
    j["params"] = to_json(echo_params(co.algebra()));
    j["rows"] = ordered_json::array();
    for (int n = 1; n <= cfg.max_n; ++n)
        for (auto& r : to_json(co.resolution().differential(n))) j["rows"].push_back(std::move(r));
    os << j.dump(2) << '\n';
    return kExitOk;
}

template <ExactField K>
int run_with(const RunConfig& cfg, const K& field, std::ostream& os) {
    const Cohomology<K> co(Algebra<K>(cfg.T, make_spec(field, cfg)));
    switch (cfg.command) {
        case Command::Dims:
        case Command::OracleCheck: return run_dims(cfg, co, os);
        case Command::VerifyComplex: return run_verify(cfg, co, os);
        case Command::KernelBasisCheck: return run_kernel_basis(cfg, co, os);
        case Command::AlgebraInfo: return run_algebra_info(cfg, co, os);
        case Command::ResolutionDump: return run_dump(cfg, co, os);
    }
    return kExitOk;
}

}  // namespace detail

/// Executes a validated configuration. Throws ConfigError before any
/// computation starts when q or the output path is unusable.
inline int run(const RunConfig& cfg, std::ostream& os) {
    std::ofstream file;
    std::ostream* target = &os;
    auto open = [&] {
        if (!cfg.out) return;
        file.open(*cfg.out);
        if (!file) throw ConfigError("cannot open output file " + *cfg.out);
        target = &file;
    };
    if (cfg.field == "ratfunc") {
        const RatFuncField field(*cfg.p);
        detail::make_spec(field, cfg);
        open();
        return detail::run_with(cfg, field, *target);
    }
    const RationalField field;
    detail::make_spec(field, cfg);
    open();
    return detail::run_with(cfg, field, *target);
}

/// Entry point shared by the executable and the tests.
inline int main(int argc, const char* const* argv, std::ostream& os = std::cout, std::ostream& err = std::cerr) {
    try {
        const auto cfg = parse_config(argc, argv, os);
        if (!cfg) return kExitOk;
        return run(*cfg, os);
    } catch (const ConfigError& e) {
        err << "hhcalc: " << e.what() << '\n';
        return kExitConfig;
    }
}

}  // namespace hhcalc::cli
