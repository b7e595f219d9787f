#ifndef SUBPOW_CLI_HPP
#define SUBPOW_CLI_HPP

// Command dispatch for the `subpow` tool. Exit codes: 0 success,
// 1 verification mismatch, 2 usage or input error.

#include <algorithm>
#include <array>
#include <cstdint>
#include <fstream>
#include <functional>
#include <iostream>
#include <optional>
#include <ostream>
#include <sstream>
#include <string>

#include <CLI11.hpp>

#include "cycle_structure.hpp"
#include "digraph.hpp"
#include "error.hpp"
#include "format.hpp"
#include "oracle.hpp"
#include "subset_power.hpp"

namespace subpow::cli {

enum exit_code : int {
    exit_success = 0,
    exit_mismatch = 1,
    exit_usage = 2,
};

struct RunConfig {
    std::string command;
    std::uint64_t l = 0;
    std::uint64_t d = 0;
    std::uint64_t k = 0;
    std::uint64_t l_max = 0;
    std::optional<std::uint64_t> d_max;
    std::string format;
    std::uint64_t budget = oracle::default_budget;
    std::string input;
    std::string out;
};

using SpectrumFn = std::function<CycleSpectrum(std::uint64_t, std::uint64_t)>;

struct VerifyReport {
    std::uint64_t instances = 0;
    std::uint64_t failures = 0;
    /// First (l, d, k) at which the two spectra disagree.
    std::optional<std::array<std::uint64_t, 3>> first_mismatch;
};

/// Compares `formula` against the exhaustive oracle for every
/// 1 <= d <= min(l, d_max), 1 <= l <= l_max, printing one line per instance.
/// Throws budget_exceeded if an instance is too large for the oracle.
inline VerifyReport verify_range(std::uint64_t l_max, std::optional<std::uint64_t> d_max, std::uint64_t budget,
                                 const SpectrumFn& formula, std::ostream& out) {
    VerifyReport report;
    for (std::uint64_t l = 1; l <= l_max; ++l) {
        const auto d_hi = d_max ? std::min(l, *d_max) : l;
        for (std::uint64_t d = 1; d <= d_hi; ++d) {
            const auto expected = oracle::brute_force_spectrum(l, d, budget);
            const auto actual = formula(l, d);
            ++report.instances;
            if (actual == expected) {
                out << "l=" << l << " d=" << d << " PASS\n";
                continue;
            }
            ++report.failures;
            std::uint64_t bad_k = 0;
            for (std::uint64_t k = 1; k <= l; ++k) {
                const auto a = actual.counts.count(k) ? actual.counts.at(k) : Natural(0);
                const auto e = expected.counts.count(k) ? expected.counts.at(k) : Natural(0);
                if (a != e) {
                    bad_k = k;
                    out << "l=" << l << " d=" << d << " FAIL at k=" << k << ": formula " << a << ", brute force " << e
                        << '\n';
                    break;
                }
            }
            if (!report.first_mismatch) report.first_mismatch = {l, d, bad_k};
        }
    }
    return report;
}

namespace detail {

inline int fail(std::ostream& err, const std::string& message) {
    err << "error: " << message << '\n';
    return exit_usage;
}

// Runs `body` against stdout or the --out file.
template <typename Body>
int with_output(const RunConfig& config, std::ostream& out, std::ostream& err, Body&& body) {
    if (config.out.empty()) return body(out);
    std::ofstream file(config.out, std::ios::binary);
    if (!file) return fail(err, "cannot open '" + config.out + "' for writing");
    const int status = body(file);
    file.flush();
    if (!file) return fail(err, "failed writing '" + config.out + "'");
    return status;
}

inline std::string instance_diagnostic(std::uint64_t l, std::uint64_t d) {
    if (l == 0) return "--l must be at least 1";
    if (d == 0) return "--d must be at least 1";
    return "subset size d = " + std::to_string(d) + " exceeds cycle length l = " + std::to_string(l) +
           "; C_l^(d) needs 1 <= d <= l";
}

inline bool valid_instance(std::uint64_t l, std::uint64_t d) { return l >= 1 && d >= 1 && d <= l; }

inline int write_power(const RunConfig& config, const SubsetPowerGraph& power, std::ostream& out,
                       std::ostream& err) {
    const auto record = record_of(power);
    return with_output(config, out, err, [&](std::ostream& os) {
        if (config.format == "json") {
            write_json(os, record);
        } else {
            write_dot(os, record);
        }
        return int{exit_success};
    });
}

inline bool within_budget(std::uint64_t n, std::uint64_t d, std::uint64_t budget) {
    return binomial_u64_saturating(n, d) <= budget;
}

} // namespace detail

inline int cmd_spectrum(const RunConfig& config, std::ostream& out, std::ostream& err) {
    if (!detail::valid_instance(config.l, config.d)) return detail::fail(err, detail::instance_diagnostic(config.l, config.d));
    const auto s = spectrum(config.l, config.d);
    return detail::with_output(config, out, err, [&](std::ostream& os) {
        if (config.format == "json") {
            write_json(os, s);
        } else if (config.format == "csv") {
            write_csv(os, s);
        } else {
            write_table(os, s);
        }
        return int{exit_success};
    });
}

inline int cmd_count(const RunConfig& config, std::ostream& out, std::ostream& err) {
    if (!detail::valid_instance(config.l, config.d)) return detail::fail(err, detail::instance_diagnostic(config.l, config.d));
    if (config.k == 0 || config.k > config.l) {
        return detail::fail(err, "cycle length k = " + std::to_string(config.k) + " must satisfy 1 <= k <= l");
    }
    if (config.l % config.k != 0) {
        err << "note: k = " << config.k << " does not divide l = " << config.l << ", so there are no k-cycles\n";
    } else if (!satisfies_divisibility(config.l, config.d, config.k)) {
        err << "note: l = " << config.l << " does not divide d*k, so there are no k-cycles\n";
    } else if (!exists_cycle(config.l, config.d, config.k)) {
        err << "note: for d = l the only vertex is the full set, which is a loop, so only k = 1 occurs\n";
    }
    const auto n = count_cycles(config.l, config.d, config.k);
    return detail::with_output(config, out, err, [&](std::ostream& os) {
        os << n << '\n';
        return int{exit_success};
    });
}

inline int cmd_verify(const RunConfig& config, std::ostream& out, std::ostream& err) {
    if (config.l_max == 0) return detail::fail(err, "--l-max must be at least 1");
    return detail::with_output(config, out, err, [&](std::ostream& os) {
        VerifyReport report;
        try {
            report = verify_range(config.l_max, config.d_max, config.budget,
                                  [](std::uint64_t l, std::uint64_t d) { return spectrum(l, d); }, os);
        } catch (const budget_exceeded& e) {
            return detail::fail(err, e.what());
        }
        if (report.failures == 0) {
            os << "all " << report.instances << " instances PASS\n";
            return int{exit_success};
        }
        const auto& [l, d, k] = *report.first_mismatch;
        os << report.failures << " of " << report.instances << " instances FAIL; first mismatch at (l, d, k) = (" << l
           << ", " << d << ", " << k << ")\n";
        return int{exit_mismatch};
    });
}

inline int cmd_build(const RunConfig& config, std::ostream& out, std::ostream& err) {
    if (!detail::valid_instance(config.l, config.d)) return detail::fail(err, detail::instance_diagnostic(config.l, config.d));
    if (!detail::within_budget(config.l, config.d, config.budget)) {
        return detail::fail(err, "C(" + std::to_string(config.l) + ", " + std::to_string(config.d) +
                                     ") subsets exceed the budget of " + std::to_string(config.budget));
    }
    return detail::write_power(config, build_subset_power(make_cycle(config.l), config.d), out, err);
}

inline int cmd_power(const RunConfig& config, std::ostream& out, std::ostream& err) {
    std::ifstream in(config.input);
    if (!in) return detail::fail(err, "cannot read '" + config.input + "'");
    Digraph g;
    try {
        g = read_edge_list(in);
    } catch (const parse_error& e) {
        return detail::fail(err, config.input + ": " + e.what());
    }
    if (config.d == 0 || config.d > g.vertex_count()) {
        return detail::fail(err, "--d must satisfy 1 <= d <= " + std::to_string(g.vertex_count()) +
                                     " (the input's vertex count)");
    }
    if (!detail::within_budget(g.vertex_count(), config.d, config.budget)) {
        return detail::fail(err, "C(" + std::to_string(g.vertex_count()) + ", " + std::to_string(config.d) +
                                     ") subsets exceed the budget of " + std::to_string(config.budget));
    }
    return detail::write_power(config, build_subset_power(g, config.d, BuildStrategy::matching), out, err);
}

inline int run(int argc, const char* const* argv, std::ostream& out = std::cout, std::ostream& err = std::cerr) {
    CLI::App app{"Cycle structure of subset powers of directed cycles", "subpow"};
    app.require_subcommand(1);
    RunConfig config;

    auto* spectrum_cmd = app.add_subcommand("spectrum", "Cycle-length counts of C_l^(d)");
    spectrum_cmd->add_option("--l", config.l, "cycle length")->required();
    spectrum_cmd->add_option("--d", config.d, "subset size")->required();
    spectrum_cmd->add_option("--format", config.format, "table, json or csv")
        ->check(CLI::IsMember({"table", "json", "csv"}))
        ->default_val("table");
    spectrum_cmd->add_option("--out", config.out, "output path (default stdout)");

    auto* count_cmd = app.add_subcommand("count", "Number of k-cycles in C_l^(d)");
    count_cmd->add_option("--l", config.l, "cycle length")->required();
    count_cmd->add_option("--d", config.d, "subset size")->required();
    count_cmd->add_option("--k", config.k, "cycle length to count")->required();
    count_cmd->add_option("--out", config.out, "output path (default stdout)");

    auto* verify_cmd = app.add_subcommand("verify", "Compare the closed form with brute-force orbit enumeration");
    verify_cmd->add_option("--l-max", config.l_max, "largest l to check")->required();
    verify_cmd->add_option("--d-max", config.d_max, "largest d to check (default l)");
    verify_cmd->add_option("--budget", config.budget, "maximum subsets per brute-force instance")
        ->check(CLI::PositiveNumber);
    verify_cmd->add_option("--out", config.out, "output path (default stdout)");

    auto* build_cmd = app.add_subcommand("build", "Write the subset power graph C_l^(d)");
    build_cmd->add_option("--l", config.l, "cycle length")->required();
    build_cmd->add_option("--d", config.d, "subset size")->required();

    auto* power_cmd = app.add_subcommand("power", "Write the subset power of an edge-list digraph");
    power_cmd->add_option("--input", config.input, "edge-list file")->required();
    power_cmd->add_option("--d", config.d, "subset size")->required();

    for (auto* cmd : {build_cmd, power_cmd}) {
        cmd->add_option("--format", config.format, "dot or json")
            ->check(CLI::IsMember({"dot", "json"}))
            ->default_val("dot");
        cmd->add_option("--budget", config.budget, "maximum number of subset vertices")->check(CLI::PositiveNumber);
        cmd->add_option("--out", config.out, "output path (default stdout)");
    }

    try {
        app.parse(argc, argv);
    } catch (const CLI::CallForHelp&) {
        out << app.help();
        return exit_success;
    } catch (const CLI::CallForAllHelp&) {
        out << app.help("", CLI::AppFormatMode::All);
        return exit_success;
    } catch (const CLI::ParseError& e) {
        err << "error: " << e.what() << '\n';
        return exit_usage;
    }

    config.command = app.get_subcommands().front()->get_name();
    try {
        if (config.command == "spectrum") return cmd_spectrum(config, out, err);
        if (config.command == "count") return cmd_count(config, out, err);
        if (config.command == "verify") return cmd_verify(config, out, err);
        if (config.command == "build") return cmd_build(config, out, err);
        return cmd_power(config, out, err);
    } catch (const invalid_argument& e) {
        return detail::fail(err, e.what());
    }
}

} // namespace subpow::cli

#endif // SUBPOW_CLI_HPP
