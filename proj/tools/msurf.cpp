// msurf: command-line front end.
#include "msurf/cli/commands.hpp"
#include "msurf/errors.hpp"
#include "msurf/exactalg/parse.hpp"

#include <CLI11.hpp>

#include <filesystem>
#include <fstream>
#include <iostream>

using namespace msurf;
using namespace msurf::cli;

namespace {

struct Common {
    std::string format = "human";
    std::string out;
    std::uint64_t seed = kDefaultSeed;
    bool timing = false;
};

int emit(const std::string& text, const std::string& out) {
    if (out.empty()) {
        std::cout << text;
        return 0;
    }
    std::ofstream f(out, std::ios::binary);
    if (!f) {
        std::cerr << "msurf: cannot write " << out << "\n";
        return 2;
    }
    f << text;
    return 0;
}

int deliver(const Report& r, const Common& c) {
    const std::string text = c.format == "structured" ? render_structured(r) : render_human(r);
    if (emit(text, c.out) != 0) return 2;
    return static_cast<int>(r.status);
}

template <class F>
int run_file_command(const std::string& command, const std::string& path, const Common& c, JobOptions opt, F&& fn) {
    opt.seed = c.seed;
    opt.timing = c.timing;
    opt.input_label = std::filesystem::path(path).filename().string();
    InputSpec spec;
    try {
        spec = read_input(path, &opt.input_bytes);
    } catch (const InputError& e) {
        std::cerr << path << ":" << e.line() << ":" << e.column() << ": error: " << e.message() << "\n";
        return 2;
    }
    Report report;
    try {
        report = fn(spec, opt);
    } catch (const Rejection& e) {
        const std::string msg = e.what();
        report = rejection_report(command, e.invariant(), msg.substr(msg.find(": ") + 2), opt);
    } catch (const std::exception& e) {
        report = rejection_report(command, "error", e.what(), opt);
    }
    return deliver(report, c);
}

void add_common(CLI::App* app, Common& c) {
    app->add_option("--format", c.format, "human or structured")->check(CLI::IsMember({"human", "structured"}));
    app->add_option("--out", c.out, "write the report here instead of stdout");
    app->add_option("--seed", c.seed, "seed for sampled checks");
    app->add_flag("--timing", c.timing, "include wall-clock time in the report");
}

}  // namespace

int main(int argc, char** argv) {
    CLI::App app{"Exact toolkit for monoidal and submonoidal surfaces"};
    app.require_subcommand(1);
    app.set_version_flag("--version", std::string(kToolVersion));

    Common c;
    std::string path;
    std::string mode = "symbolic";
    bool corrupt = false;
    int degree = 0;
    int n = 0, m = 0;

    auto* analyze = app.add_subcommand("analyze", "discriminants, fibers, Eckardt and pinch loci of a surface");
    analyze->add_option("file", path, "surface description")->required();
    add_common(analyze, c);

    auto* inv = app.add_subcommand("involutions", "the two Cremona involutions of a surface and their checks");
    inv->add_option("file", path, "surface description")->required();
    inv->add_option("--mode", mode, "symbolic or sampled")->check(CLI::IsMember({"symbolic", "sampled"}));
    inv->add_flag("--corrupt", corrupt, "perturb Theta (tests the failure path)");
    add_common(inv, c);

    auto* lat = app.add_subcommand("lattice", "Picard lattice classes, special sections, duality");
    lat->add_option("--degree,-d", degree, "surface degree, 3..12")->required();
    add_common(lat, c);

    auto* hyp = app.add_subcommand("hypersurface", "fiber matrix, satellite and involutions of a hypersurface");
    hyp->add_option("file", path, "hypersurface description")->required();
    hyp->add_flag("--corrupt", corrupt, "perturb Theta (tests the failure path)");
    add_common(hyp, c);

    auto* sample = app.add_subcommand("sample", "write a seeded random description file");
    sample->add_option("--degree,-d", degree, "degree")->required();
    sample->add_option("--n", n, "hypersurface dimension (omit for a surface)");
    sample->add_option("--m", m, "codimension of Gamma (with --n)");
    sample->add_option("--seed", c.seed, "seed");
    sample->add_option("--out", c.out, "output path");

    try {
        app.parse(argc, argv);
    } catch (const CLI::ParseError& e) {
        const int code = app.exit(e);
        return code == 0 ? 0 : 2;
    }

    JobOptions opt;
    opt.mode = mode;
    opt.corrupt = corrupt;
    if (*analyze) return run_file_command("analyze", path, c, opt, cmd_analyze);
    if (*inv) return run_file_command("involutions", path, c, opt, cmd_involutions);
    if (*hyp) return run_file_command("hypersurface", path, c, opt, cmd_hypersurface);
    if (*lat) {
        opt.seed = c.seed;
        opt.timing = c.timing;
        return deliver(cmd_lattice(degree, opt), c);
    }
    if (*sample) {
        try {
            const std::string text =
                n > 0 ? sample_hypersurface_file(n, m, degree, c.seed) : sample_surface_file(degree, c.seed);
            return emit(text, c.out);
        } catch (const std::exception& e) {
            std::cerr << "msurf: " << e.what() << "\n";
            return 2;
        }
    }
    return 2;
}
