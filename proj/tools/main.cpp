#include <fstream>
#include <iostream>
#include <string>
#include <vector>

#include <CLI11.hpp>

#include "odospec/cli.hpp"

using odospec::cli::RunConfig;

namespace {

void emit(const odospec::cli::json& j, const RunConfig& cfg, const std::string& out_path) {
    const std::string rendered = odospec::cli::render(j, cfg.format);
    if (out_path.empty()) {
        std::cout << rendered;
    } else {
        std::ofstream os(out_path, std::ios::binary);
        if (!os) throw odospec::ParseError("cannot open output file '" + out_path + "'");
        os << rendered;
    }
}

} // namespace

int main(int argc, char** argv) {
    CLI::App app{"spectral data of commuting ordinary differential operators"};
    app.require_subcommand(1);

    RunConfig cfg;
    std::string t0_str = "0";
    std::string out_path;
    app.add_option("--order", cfg.order, "series truncation order N (default 48)");
    app.add_option("--t0", t0_str, "base point, RE[,IM] with exact rational parts");
    app.add_option("--tol-curve", cfg.tol.curve_residual, "on-curve residual tolerance");
    app.add_option("--tol-cluster", cfg.tol.cluster_radius, "root clustering radius");
    app.add_option("--format", cfg.format, "output format: json|text")
        ->check(CLI::IsMember({"json", "text"}));
    app.add_option("--out", out_path, "write output to a file instead of stdout");
    app.add_flag("--timing", cfg.timing, "include wall time in the JSON output");

    std::string p_src, q_src, b1_str, z0_str, c_str, kind_str, root_str;
    std::vector<int> orders;

    CLI::App* curve = app.add_subcommand("curve", "Burchnall-Chaundy curve of a commuting pair");
    curve->add_option("P", p_src, "operator expression")->required();
    curve->add_option("Q", q_src, "operator expression")->required();

    CLI::App* verify = app.add_subcommand("verify", "check f(P,Q) = 0 exactly");
    verify->add_option("P", p_src, "operator expression")->required();
    verify->add_option("Q", q_src, "operator expression")->required();

    CLI::App* divisor = app.add_subcommand("divisor", "spectral divisor support");
    divisor->add_option("P", p_src, "operator expression")->required();
    divisor->add_option("Q", q_src, "operator expression")->required();

    CLI::App* inv = app.add_subcommand("inverse-g0", "genus-zero inverse problem and round trip");
    inv->add_option("--kind", kind_str, "smooth|node|cusp")->required();
    inv->add_option("--b1", b1_str, "curve parameter b1, RE[,IM]")->required();
    inv->add_option("--z0-inv", z0_str, "pole location z0^{-1}, RE[,IM]");
    inv->add_option("--c", c_str, "exact square root of -b1 (node kind)");

    CLI::App* semi = app.add_subcommand("semigroup", "numerical semigroup of orders");
    semi->add_option("orders", orders, "positive generators")->required();

    CLI::App* norm = app.add_subcommand("normalize", "standard form of an operator");
    norm->add_option("P", p_src, "operator expression")->required();
    norm->add_option("--root", root_str, "exact m-th root of the leading constant");

    CLI11_PARSE(app, argc, argv);

    try {
        cfg.t0 = odospec::cli::parse_scalar(t0_str);
        odospec::cli::json out;
        if (*curve) out = odospec::cli::cmd_curve(p_src, q_src, cfg);
        else if (*verify) out = odospec::cli::cmd_verify(p_src, q_src, cfg);
        else if (*divisor) out = odospec::cli::cmd_divisor(p_src, q_src, cfg);
        else if (*inv) out = odospec::cli::cmd_inverse_g0(b1_str, z0_str, kind_str, c_str, cfg);
        else if (*semi) out = odospec::cli::cmd_semigroup(orders, cfg);
        else if (*norm) out = odospec::cli::cmd_normalize(p_src, root_str, cfg);
        emit(out, cfg, out_path);
        return 0;
    } catch (const std::exception& e) {
        std::cerr << "error: " << e.what() << "\n";
        return odospec::cli::exit_code_for(e);
    }
}
