#include "aiisac/commands.hpp"
#include "aiisac/config.hpp"
#include "aiisac/errors.hpp"
#include "aiisac/verify.hpp"

#include <CLI11.hpp>

#include <fstream>
#include <iostream>
#include <string>

namespace {

constexpr int kExitOk = 0;
constexpr int kExitCheckFailed = 1;
constexpr int kExitUsage = 2;

struct CommonOptions {
    std::string config;
    std::string out;
    std::optional<std::uint64_t> seed;
    std::optional<int> quadrature_order;
    std::optional<std::string> preset;
};

void add_common(CLI::App* cmd, CommonOptions& opts)
{
    cmd->add_option("--config", opts.config, "Configuration file (INI style); defaults when omitted");
    cmd->add_option("--out", opts.out, "Output file; standard output when omitted");
    cmd->add_option("--seed", opts.seed, "Random seed");
    cmd->add_option("--quadrature-order", opts.quadrature_order, "Gauss-Laguerre order (1-128)");
    cmd->add_option("--preset", opts.preset, "Parameter preset")
        ->check(CLI::IsMember({"tableI-dbm", "tableI-normalized"}));
}

void emit(const std::string& text, const std::string& path)
{
    if (path.empty()) {
        std::cout << text;
        return;
    }
    std::ofstream file(path, std::ios::binary);
    if (!file) {
        throw aiisac::ConfigError("cannot open output file '" + path + "'");
    }
    file << text;
}

}  // namespace

int main(int argc, char** argv)
{
    CLI::App app{"Learning-constrained ISAC performance calculator"};
    app.require_subcommand(1);
    CommonOptions opts;
    auto* sweep = app.add_subcommand("gaussian-sweep", "Rate and distortion versus AI capacity for AWGN, Rayleigh, Rician");
    auto* front = app.add_subcommand("frontier", "Rate-distortion frontiers and the separated baseline");
    auto* mimo = app.add_subcommand("mimo-surface", "MIMO rate over AI capacity and SNR");
    auto* alloc = app.add_subcommand("allocate", "Power-split optimization trace");
    auto* verify = app.add_subcommand("verify", "Run the property checks and print a report");
    for (auto* cmd : {sweep, front, mimo, alloc, verify}) {
        add_common(cmd, opts);
    }

    try {
        app.parse(argc, argv);
    } catch (const CLI::CallForHelp& e) {
        return app.exit(e);
    } catch (const CLI::ParseError& e) {
        app.exit(e);
        return kExitUsage;
    }

    try {
        aiisac::ConfigOverrides overrides;
        overrides.seed = opts.seed;
        overrides.quadrature_order = opts.quadrature_order;
        if (opts.preset) {
            overrides.preset = aiisac::parse_preset(*opts.preset);
        }
        const aiisac::RunConfig cfg = aiisac::load_config(opts.config, overrides);

        if (sweep->parsed()) {
            emit(aiisac::gaussian_sweep_csv(cfg), opts.out);
        } else if (front->parsed()) {
            emit(aiisac::frontier_csv(cfg), opts.out);
        } else if (mimo->parsed()) {
            emit(aiisac::mimo_surface_csv(cfg), opts.out);
        } else if (alloc->parsed()) {
            emit(aiisac::allocate_csv(cfg).csv, opts.out);
        } else {
            const auto report = aiisac::run_verify(cfg);
            emit(report.text(), opts.out);
            return report.all_passed() ? kExitOk : kExitCheckFailed;
        }
    } catch (const aiisac::ConfigError& e) {
        std::cerr << "error: " << e.what() << '\n';
        return kExitUsage;
    } catch (const std::invalid_argument& e) {
        std::cerr << "error: " << e.what() << '\n';
        return kExitUsage;
    } catch (const std::exception& e) {
        std::cerr << "error: " << e.what() << '\n';
        return kExitCheckFailed;
    }
    return kExitOk;
}
