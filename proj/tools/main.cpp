#include "cli/commands.hpp"

#include "exocalc/errors.hpp"

#include "CLI11.hpp"

#include <filesystem>
#include <fstream>
#include <iostream>

namespace {

enum Exit { kOk = 0, kFailure = 1, kConfig = 2, kDegenerate = 3, kInstability = 4 };

int write_artifacts(const std::filesystem::path& dir, const exocalc::cli::Artifacts& files)
{
    std::error_code ec;
    std::filesystem::create_directories(dir, ec);
    if (ec) {
        std::cerr << "exocalc: cannot create output directory " << dir << ": " << ec.message() << "\n";
        return kFailure;
    }
    for (const auto& a : files) {
        std::ofstream out(dir / a.filename, std::ios::binary);
        out << a.content;
        if (!out) {
            std::cerr << "exocalc: failed writing " << (dir / a.filename) << "\n";
            return kFailure;
        }
    }
    return kOk;
}

} // namespace

int main(int argc, char** argv)
{
    using namespace exocalc;

    CLI::App app{"Topologically deformed flat-space calculus: evaluations, sweeps and identity checks"};
    app.require_subcommand(1);

    std::string config_path, out_dir = ".";
    std::vector<std::string> sets;
    std::uint64_t seed = 0;
    bool svg = false;
    auto* seed_opt = app.add_option("--seed", seed, "RNG seed (overrides the config)");
    app.add_option("--config", config_path, "JSON parameter file")->check(CLI::ExistingFile);
    app.add_option("--set", sets, "Override one parameter, key=value (dotted keys, repeatable)")->take_all();
    app.add_option("--out", out_dir, "Output directory");
    app.add_flag("--svg", svg, "Also write an SVG chart where available");

    const std::vector<std::pair<std::string, std::string>> commands{
        {"metric", "Deformed metric components, degeneracy witness and validity ratio at points"},
        {"lightcone", "Deformed light-cone velocities and the interval residual"},
        {"spectrum", "Constrained complex spectrum over a sweep"},
        {"simulate", "1+1D leapfrog run with snapshot and amplitude CSVs"},
        {"forms-check", "Random verification of the exterior-calculus identities"},
        {"cartan", "Spinor/point roundtrip, nullity and det-preservation residuals"},
        {"generate-fixtures", ""}};
    for (const auto& [name, help] : commands) {
        auto* sub = app.add_subcommand(name, help);
        sub->fallthrough();
        if (help.empty())
            sub->group("");
    }

    try {
        app.parse(argc, argv);
    } catch (const CLI::CallForHelp& e) {
        return app.exit(e);
    } catch (const CLI::CallForAllHelp& e) {
        return app.exit(e);
    } catch (const CLI::ParseError& e) {
        app.exit(e);
        return kConfig;
    }

    const std::string name = app.get_subcommands().front()->get_name();
    try {
        cli::Config cfg(cli::default_config(name));
        if (!config_path.empty())
            cfg.merge_file(config_path);
        for (const auto& s : sets)
            cfg.apply_set(s);
        if (*seed_opt)
            cfg.apply_set("seed=" + std::to_string(seed));

        std::vector<std::string> warnings;
        const auto files = cli::run_subcommand(name, cfg, svg, warnings);
        for (const auto& w : warnings)
            std::cerr << "exocalc: warning: " << w << "\n";
        return write_artifacts(out_dir, files);
    } catch (const ConfigError& e) {
        std::cerr << "exocalc: config error: " << e.what() << "\n";
        return kConfig;
    } catch (const DegenerateError& e) {
        std::cerr << "exocalc: degenerate parameters: " << e.what() << "\n";
        return kDegenerate;
    } catch (const InstabilityError& e) {
        std::cerr << "exocalc: numerical instability: " << e.what() << "\n";
        return kInstability;
    } catch (const cli::FixtureMismatch& e) {
        std::cerr << "exocalc: " << e.what();
        return kFailure;
    } catch (const std::exception& e) {
        std::cerr << "exocalc: " << e.what() << "\n";
        return kFailure;
    }
}
