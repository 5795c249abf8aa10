#include <iostream>
#include <string>

#include <CLI11.hpp>

#include "zetalab/cli.hpp"

namespace {

void add_common(CLI::App* cmd, zetalab::JobConfig& config, std::string& format) {
    cmd->add_option("--digits", config.precision, "target decimal digits")
        ->check(CLI::Range(10, 10000));
    cmd->add_option("--format", format, "output format: json, csv or text");
    cmd->add_option("--output", config.output_path, "write the report to a file");
}

void add_param(CLI::App* cmd, zetalab::JobConfig& config, const std::string& key,
               const std::string& help) {
    auto* opt = cmd->add_option_function<std::string>(
        "--" + key, [&config, key](const std::string& v) { config.params[key] = v; }, help);
    opt->expected(1);
}

} // namespace

int main(int argc, char** argv) {
    CLI::App app{"arbitrary-precision verification of odd zeta value identities, Lambert sum "
                 "transformation laws, and period polynomial root location"};
    app.require_subcommand(1);

    zetalab::JobConfig config;
    std::string format = "text";

    auto* c_zeta = app.add_subcommand("zeta", "evaluate zeta at an integer argument");
    add_common(c_zeta, config, format);
    add_param(c_zeta, config, "s", "integer argument (odd s >= 3 uses the fast route)");
    add_param(c_zeta, config, "method", "ramanujan (default) or oracle");

    auto* c_verify = app.add_subcommand("verify", "two-sided check of a registry identity");
    add_common(c_verify, config, format);
    add_param(c_verify, config, "id", "identity name (see `list`)");
    add_param(c_verify, config, "n", "integer parameter or range a..b");
    add_param(c_verify, config, "m", "integer parameter or range a..b");
    add_param(c_verify, config, "alpha", "positive real, e.g. pi/4 or 3/2");
    add_param(c_verify, config, "beta", "positive real; defaults to pi^2/alpha");
    add_param(c_verify, config, "w", "positive real");
    add_param(c_verify, config, "x", "positive real");
    add_param(c_verify, config, "y", "positive real");
    add_param(c_verify, config, "z", "complex re,im with Im > 0");
    add_param(c_verify, config, "r1", "rational shift");
    add_param(c_verify, config, "r2", "rational shift");
    add_param(c_verify, config, "V", "matrix a,b,c,d with det 1, c > 0");

    auto* c_roots = app.add_subcommand("roots", "root certificates for a polynomial family");
    add_common(c_roots, config, format);
    add_param(c_roots, config, "family", "ramanujan, full_period, pm or pm_odd");
    add_param(c_roots, config, "m", "index or range a..b");

    auto* c_conj = app.add_subcommand("conjecture",
                                      "unimodularity scan of character period polynomials");
    add_common(c_conj, config, format);
    add_param(c_conj, config, "kmax", "largest weight k (default 8)");
    add_param(c_conj, config, "k", "single weight or range");
    add_param(c_conj, config, "max-modulus", "largest character modulus (default 12)");
    add_param(c_conj, config, "chi-file", "JSON character file {\"modulus\":L,\"values\":[..]}");
    add_param(c_conj, config, "psi-file", "JSON character file");
    add_param(c_conj, config, "modulus-M", "scale M (default: modulus of psi)");

    auto* c_list = app.add_subcommand("list", "enumerate the identity registry");
    add_common(c_list, config, format);

    try {
        app.parse(argc, argv);
    } catch (const CLI::ParseError& e) {
        int code = app.exit(e);
        return code == 0 ? 0 : 2;
    }

    if (c_zeta->parsed()) config.command = zetalab::JobConfig::Command::zeta;
    if (c_verify->parsed()) config.command = zetalab::JobConfig::Command::verify;
    if (c_roots->parsed()) config.command = zetalab::JobConfig::Command::roots;
    if (c_conj->parsed()) config.command = zetalab::JobConfig::Command::conjecture;
    if (c_list->parsed()) config.command = zetalab::JobConfig::Command::list;

    if (format == "json") config.format = zetalab::JobConfig::Format::json;
    else if (format == "csv") config.format = zetalab::JobConfig::Format::csv;
    else if (format == "text") config.format = zetalab::JobConfig::Format::text;
    else {
        std::cerr << "error: unknown format \"" << format << "\"\n";
        return 2;
    }

    return zetalab::run(config, std::cout);
}
