// Copyright 2026 The bwc Authors
// SPDX-License-Identifier: Apache-2.0

#include <fstream>
#include <iostream>
#include <sstream>
#include <string>

#include <CLI11.hpp>

#include "bwc/config.hpp"
#include "bwc/errors.hpp"
#include "bwc/render.hpp"

namespace {

struct FlagValues {
    std::string config_file;
    std::string preset;
    std::string e, n, lambda, u, ch, chp, H, gamma, s, t;
    std::string max_rank, c1_bound, c2_bound, chi_num_bound, chi_denom;
    std::string out_format;
    bool twisted = false;
};

void overlay(bwc::RawConfig& raw, const std::string& key, const std::string& value) {
    if (value.empty()) return;
    raw[key] = bwc::ConfigValue{value, 0, 0};
}

bwc::JobSpec build_job(const FlagValues& f) {
    bwc::RawConfig raw;
    if (!f.config_file.empty()) {
        std::ifstream in(f.config_file);
        if (!in)
            throw bwc::ValidationError("cannot open config file '" + f.config_file + "'");
        std::ostringstream buf;
        buf << in.rdbuf();
        raw = bwc::parse_config_text(buf.str());
    }
    overlay(raw, "surface.preset", f.preset);
    overlay(raw, "surface.e", f.e);
    overlay(raw, "character.n", f.n);
    overlay(raw, "character.ch", f.ch);
    overlay(raw, "character.chp", f.chp);
    overlay(raw, "frame.lambda", f.lambda);
    overlay(raw, "frame.u", f.u);
    overlay(raw, "frame.H", f.H);
    overlay(raw, "frame.gamma", f.gamma);
    overlay(raw, "frame.s", f.s);
    overlay(raw, "frame.t", f.t);
    overlay(raw, "search.max_rank", f.max_rank);
    overlay(raw, "search.c1_bound", f.c1_bound);
    overlay(raw, "search.c2_bound", f.c2_bound);
    overlay(raw, "search.chi_num_bound", f.chi_num_bound);
    overlay(raw, "search.chi_denom", f.chi_denom);
    overlay(raw, "output.format", f.out_format);
    if (f.twisted) overlay(raw, "output.twisted", "true");
    return bwc::resolve_job(raw);
}

void add_common_flags(CLI::App* cmd, FlagValues& f) {
    cmd->add_option("--config", f.config_file, "job configuration file");
    cmd->add_option("--preset", f.preset, "surface preset: p2, hirzebruch, elliptic, k3");
    cmd->add_option("-e", f.e, "fibered surface parameter e");
    cmd->add_option("-n", f.n, "number of points for Hilbert scheme jobs");
    cmd->add_option("--ch", f.ch, "character 'ch0, ch1 coords, ch2'");
    cmd->add_option("--chp", f.chp, "destabilizer character");
    cmd->add_option("--lambda", f.lambda, "toy frame lambda (exact rational p/q)");
    cmd->add_option("--u", f.u, "frame twist u (exact rational p/q)");
    cmd->add_option("--H", f.H, "frame ample class coordinates");
    cmd->add_option("--gamma", f.gamma, "frame orthogonal class coordinates");
    cmd->add_option("--s", f.s, "stability point s");
    cmd->add_option("--t", f.t, "stability point t > 0");
    cmd->add_option("--max-rank", f.max_rank, "destabilizer rank bound");
    cmd->add_option("--c1-bound", f.c1_bound, "first Picard coordinate bound");
    cmd->add_option("--c2-bound", f.c2_bound, "second Picard coordinate bound");
    cmd->add_option("--chi-num-bound", f.chi_num_bound, "ch2' numerator bound");
    cmd->add_option("--chi-denom", f.chi_denom, "ch2' denominator scale");
    cmd->add_option("--out", f.out_format, "output format: text, csv, json, svg");
    cmd->add_flag("--twisted", f.twisted, "twisted K3 wall model");
}

} // namespace

int main(int argc, char** argv) {
    CLI::App app{"exact wall-and-chamber computations for Bridgeland stability on surfaces"};
    app.require_subcommand(1);

    const std::vector<std::string> commands = {
        "walls", "decompose", "nefcone", "chamber", "dual-check", "k3-walls", "plot"};
    const std::vector<std::string> descriptions = {
        "enumerate potential walls with their divisor classes",
        "decompose the nef class at a stability point",
        "nef cone of the Hilbert scheme of points on a fibered surface",
        "classify a stability point against the enumerated walls",
        "verify the derived-dual mirror of one wall",
        "enumerate twisted walls on a K3 lattice",
        "draw the wall diagram in both models as SVG"};

    std::vector<FlagValues> flags(commands.size());
    for (size_t i = 0; i < commands.size(); ++i) {
        CLI::App* cmd = app.add_subcommand(commands[i], descriptions[i]);
        add_common_flags(cmd, flags[i]);
    }

    try {
        app.parse(argc, argv);
    } catch (const CLI::ParseError& e) {
        int code = app.exit(e);
        return code == 0 ? 0 : 2;
    }

    try {
        for (size_t i = 0; i < commands.size(); ++i) {
            if (app.got_subcommand(commands[i])) {
                bwc::JobSpec job = build_job(flags[i]);
                std::cout << bwc::run_job(commands[i], job);
                return 0;
            }
        }
        return 2;
    } catch (const bwc::Error& e) {
        std::cerr << "error[" << e.code() << "] " << e.message() << "\n";
        const std::string& c = e.code();
        bool user_input = c == "ParseError" || c == "ValidationError" ||
                          c == "InvalidInput" || c == "OutOfRange";
        return user_input ? 2 : 3;
    } catch (const std::exception& e) {
        std::cerr << "error: " << e.what() << "\n";
        return 3;
    }
}
