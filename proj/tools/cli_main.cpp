#include <filesystem>
#include <fstream>
#include <iostream>
#include <optional>
#include <string>

#include <CLI11.hpp>

#include "cstar/compactness.hpp"
#include "cstar/config.hpp"
#include "cstar/dynamics.hpp"
#include "cstar/errors.hpp"
#include "cstar/recurrence.hpp"
#include "cstar/semigroup.hpp"

namespace fs = std::filesystem;

namespace {

struct CommonArgs {
    std::string config_path;
    std::string out_dir = ".";
    bool serial = false;
    std::optional<double> tol;
};

void add_common(CLI::App* sub, CommonArgs& args) {
    sub->add_option("--config", args.config_path, "experiment file (JSON)")->required();
    sub->add_option("--out", args.out_dir, "output directory for CSV reports");
    sub->add_flag("--serial", args.serial,
                  "single-threaded evaluation (the default; accepted for scripting)");
    sub->add_option("--tol", args.tol, "tolerance override for verification");
}

void write_report(const fs::path& path, const std::string& content) {
    std::ofstream out(path, std::ios::binary);
    if (!out) throw cstar::structural_error("cannot write " + path.string());
    out << content;
    out.close();
    std::cout << "wrote " << path.string() << "\n";
}

int run_verify(const CommonArgs& args) {
    auto ex = cstar::config::load_experiment(args.config_path, "verify", args.tol);
    const auto& params = *ex.verify;
    auto report = cstar::verify_system(ex.system, params.samples, params.tol, params.seed);
    write_report(fs::path(args.out_dir) / "verify.csv", report.to_csv());
    if (!report.passed()) {
        std::cerr << "verification failed: at least one axiom exceeds tol " << params.tol << "\n";
        return 1;
    }
    return 0;
}

int run_compactness(const CommonArgs& args) {
    auto ex = cstar::config::load_experiment(args.config_path, "compactness", args.tol);
    const auto& params = *ex.compactness;
    auto report = cstar::compactness_certificate(ex.system, *ex.element, params.epsilons,
                                                 params.window_sizes, params.metric);
    write_report(fs::path(args.out_dir) / "compactness.csv", report.to_csv());
    if (!report.all_stabilized()) {
        std::cerr << "compactness not certified: some net size still grows with the window\n";
        return 1;
    }
    return 0;
}

int run_recurrence(const CommonArgs& args) {
    auto ex = cstar::config::load_experiment(args.config_path, "recurrence", args.tol);
    const auto& params = *ex.recurrence;
    cstar::FolnerWindow window = cstar::folner_window(ex.system.semigroup(), params.window);
    cstar::RecurrenceQuery query{*ex.element, params.exponents, params.epsilon, window};
    auto scan = cstar::recurrence_set(ex.system, query);
    write_report(fs::path(args.out_dir) / "recurrence.csv", scan.to_csv());
    auto cover = cstar::syndeticity(ex.system.semigroup(), scan.members, window, params.max_r);
    write_report(fs::path(args.out_dir) / "syndeticity.csv", cover.to_csv());
    if (!cover.found) {
        // an outcome, not a failure: reported in the CSV, exit stays 0
        std::cerr << "note: no witness set of size <= " << params.max_r
                  << " covers the scanned range\n";
    }
    return 0;
}

int run_average(const CommonArgs& args) {
    auto ex = cstar::config::load_experiment(args.config_path, "average", args.tol);
    const auto& params = *ex.average;
    cstar::AverageTrace trace;
    if (params.method == cstar::config::AverageMethod::Szemeredi) {
        trace = cstar::szemeredi_average(ex.system, *ex.element, params.exponents,
                                         params.window_sizes);
    } else {
        if (params.window_sizes.empty()) {
            throw cstar::argument_error("average: no window sizes");
        }
        const int k = static_cast<int>(params.exponents.size()) - 1;
        for (std::int64_t n : params.window_sizes) {
            cstar::AverageTrace::Row row{n, cstar::furstenberg_average(ex.system, params.chi, k, n),
                                         0.0};
            trace.rows.push_back(row);
        }
        double inf = trace.rows.back().average;
        for (auto it = trace.rows.rbegin(); it != trace.rows.rend(); ++it) {
            inf = std::min(inf, it->average);
            it->running_infimum = inf;
        }
    }
    write_report(fs::path(args.out_dir) / "averages.csv", trace.to_csv());
    return 0;
}

}  // namespace

int main(int argc, char** argv) {
    CLI::App app{"finite-dimensional operator dynamics: axiom checks, orbit nets, "
                 "recurrence scans, multiple-correlation averages"};
    app.require_subcommand(1);

    CommonArgs args;
    CLI::App* verify = app.add_subcommand("verify", "check the action axioms on random samples");
    CLI::App* compactness =
        app.add_subcommand("compactness", "net sizes of an orbit across growing windows");
    CLI::App* recurrence =
        app.add_subcommand("recurrence", "near-return set of an element and its witness cover");
    CLI::App* average =
        app.add_subcommand("average", "windowed averages of multiple correlations");
    for (CLI::App* sub : {verify, compactness, recurrence, average}) add_common(sub, args);

    try {
        app.parse(argc, argv);
    } catch (const CLI::ParseError& e) {
        int code = app.exit(e);
        return code == 0 ? 0 : 2;
    }

    try {
        if (!args.out_dir.empty()) fs::create_directories(args.out_dir);
        if (app.got_subcommand(verify)) return run_verify(args);
        if (app.got_subcommand(compactness)) return run_compactness(args);
        if (app.got_subcommand(recurrence)) return run_recurrence(args);
        return run_average(args);
    } catch (const cstar::config::config_error& e) {
        std::cerr << "config error: " << e.what() << "\n";
        return 2;
    } catch (const cstar::argument_error& e) {
        std::cerr << "argument error: " << e.what() << "\n";
        return 2;
    } catch (const cstar::structural_error& e) {
        std::cerr << "structural error: " << e.what() << "\n";
        return 2;
    } catch (const cstar::capacity_error& e) {
        std::cerr << "capacity error: " << e.what() << "\n";
        return 2;
    } catch (const cstar::invariant_violation& e) {
        std::cerr << "invariant violation: " << e.what() << "\n";
        return 1;
    } catch (const std::exception& e) {
        std::cerr << "error: " << e.what() << "\n";
        return 1;
    }
}
