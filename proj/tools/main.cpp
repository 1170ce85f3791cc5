// Experiment driver: builds exact line/plane arrangements, measures zones,
// and checks the counting inequalities behind the quadratic zone bound.
//
// Exit codes: 0 all assertions passed, 1 assertion failure, 2 usage or
// input error.

#include <CLI11.hpp>

#include <iostream>
#include <sstream>
#include <string>

#include "zonelab/harness.hpp"

namespace {

struct CliOptions {
    zonelab::ExperimentConfig config;
    std::string planes_file;
    std::string s_plane;
    std::string out_path;
    int max_n_override = 0;
};

void add_common_options(CLI::App* cmd, CliOptions& opts, bool planes_visible) {
    cmd->add_option("--n-min", opts.config.n_min, "Smallest instance size");
    cmd->add_option("--n-max", opts.config.n_max, "Largest instance size");
    cmd->add_option("--trials", opts.config.trials_per_n,
                    "Random trials per instance size");
    cmd->add_option("--seed", opts.config.seed, "64-bit experiment seed");
    cmd->add_option("--coeff-bound", opts.config.coefficient_bound,
                    "Numerators and denominators are drawn from [-bound, bound]");
    cmd->add_option("--out", opts.out_path, "Write the per-trial CSV here");
    cmd->add_option("--max-n-override", opts.max_n_override,
                    "Raise the default n ceiling of 15");
    if (planes_visible) {
        cmd->add_option("--planes-file", opts.planes_file,
                        "Fixture input file; overrides random generation");
        cmd->add_option("--s-plane", opts.s_plane,
                        "Query coefficients, e.g. \"1 1 1 -1/2\"");
    }
}

std::vector<zonelab::Rational> parse_coefficients(const std::string& text) {
    std::istringstream stream(text);
    std::vector<zonelab::Rational> coeffs;
    std::string token;
    while (stream >> token) {
        coeffs.push_back(zonelab::Rational::parse(token));
    }
    return coeffs;
}

int run_mode(CliOptions& opts, zonelab::ExperimentMode mode) {
    opts.config.mode = mode;
    if (opts.max_n_override > 0) opts.config.max_n = opts.max_n_override;
    if (!opts.planes_file.empty()) opts.config.planes_file = opts.planes_file;
    if (!opts.s_plane.empty()) {
        opts.config.s_coefficients = parse_coefficients(opts.s_plane);
    }
    zonelab::ExperimentResult result = zonelab::run_experiment(opts.config);
    if (!opts.out_path.empty()) {
        zonelab::emit_csv(result.csv, opts.out_path);
    }
    std::cout << result.summary;
    return 0;
}

} // namespace

int main(int argc, char** argv) {
    CLI::App app{"Exact arrangement construction and zone-size experiments"};
    app.require_subcommand(1);

    CliOptions opts;
    struct ModeCommand {
        const char* name;
        const char* help;
        zonelab::ExperimentMode mode;
        bool planes_fixture;
    };
    const ModeCommand commands[] = {
        {"euler-checks", "Verify 2E=3V and Euler's formula on every cell",
         zonelab::ExperimentMode::EulerChecks, true},
        {"zone2d", "Zone sizes of random 2D line arrangements",
         zonelab::ExperimentMode::Zone2d, true},
        {"zone3d", "Zone sizes of random 3D plane arrangements",
         zonelab::ExperimentMode::Zone3d, true},
        {"theorem1", "Per-plane pair-count inequality with case accounting",
         zonelab::ExperimentMode::Theorem1, true},
        {"recurrence", "Summed inequality and exact pair-count identity",
         zonelab::ExperimentMode::Recurrence, true},
        {"sweep", "Zone growth sweep with constant fitting",
         zonelab::ExperimentMode::Sweep, false},
    };
    for (const ModeCommand& mc : commands) {
        CLI::App* cmd = app.add_subcommand(mc.name, mc.help);
        add_common_options(cmd, opts, mc.planes_fixture);
        cmd->callback([&opts, mode = mc.mode]() {
            int rc = run_mode(opts, mode);
            if (rc != 0) std::exit(rc);
        });
    }

    CLI::App* dump = app.add_subcommand(
        "dump", "Build one arrangement from a planes file and print it");
    std::string dump_file;
    dump->add_option("--planes-file", dump_file, "Input planes file")
        ->required();
    dump->callback([&dump_file]() {
        std::vector<zonelab::Plane> planes =
            zonelab::parse_planes_file(dump_file);
        zonelab::Rational a = zonelab::compute_box_half_width(planes);
        zonelab::Arrangement3 arr = zonelab::build_arrangement_3d(planes, a);
        zonelab::dump_arrangement(arr, std::cout);
    });

    try {
        app.parse(argc, argv);
    } catch (const CLI::ParseError& e) {
        int rc = app.exit(e);
        return rc == 0 ? 0 : 2;
    } catch (const zonelab::Error& e) {
        std::cerr << "error: " << e.what() << "\n";
        return e.code() == zonelab::ErrorCode::AssertionFailure ? 1 : 2;
    }
    return 0;
}
