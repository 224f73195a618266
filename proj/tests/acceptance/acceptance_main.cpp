// Acceptance gate: one line per criterion, exit code = number of failures.
// argv[1] must point at the command line tool.

#include <sys/wait.h>

#include <chrono>
#include <cmath>
#include <complex>
#include <cstdlib>
#include <filesystem>
#include <fstream>
#include <functional>
#include <iostream>
#include <random>
#include <set>
#include <sstream>
#include <string>
#include <vector>

#include "cstar/compactness.hpp"
#include "cstar/config.hpp"
#include "cstar/dynamics.hpp"
#include "cstar/recurrence.hpp"
#include "cstar/sampling.hpp"
#include "cstar/semigroup.hpp"

using namespace cstar;
namespace fs = std::filesystem;

namespace {

const double kPi = std::acos(-1.0);

struct Check {
    bool ok = true;
    std::string why;

    void require(bool condition, const std::string& message) {
        if (!condition && ok) {
            ok = false;
            why = message;
        }
    }
};

std::vector<int> cycle(int n) {
    std::vector<int> p(n);
    for (int i = 0; i < n; ++i) p[i] = (i + 1) % n;
    return p;
}

std::vector<double> uniform(int n) { return std::vector<double>(n, 1.0 / n); }

AlgebraElement chi(const std::vector<int>& dims, const std::vector<int>& points) {
    AlgebraElement f = AlgebraElement::zeros(dims);
    for (int x : points) f.block(static_cast<std::size_t>(x))(0, 0) = 1.0;
    return f;
}

// ---- criterion 1 -----------------------------------------------------------

void commutation_and_phases(Check& c) {
    for (auto [p, q] : {std::pair<int, int>{1, 2}, {1, 3}, {2, 5}, {3, 7}}) {
        auto sys = build_rotation_system(p, q, MeasureSemigroup::naturals());
        const AlgebraElement& u = sys.element("U");
        const AlgebraElement& v = sys.element("V");
        Complex phase = std::polar(1.0, 2.0 * kPi * p / q);
        double comm = op_norm(u * v - phase * (v * u));
        c.require(comm <= 1e-12, "commutation residue " + std::to_string(comm));

        for (std::int64_t n = 1; n <= 50; ++n) {
            AlgebraElement moved = sys.apply(Element(n), v);
            std::int64_t r = ((n * p) % q + q) % q;
            Complex expected_phase = std::polar(1.0, -2.0 * kPi * static_cast<double>(r) / q);
            double worst = 0.0;
            for (int i = 0; i < q; ++i) {
                for (int j = 0; j < q; ++j) {
                    worst = std::max(worst, std::abs(moved.block(0)(i, j) -
                                                     expected_phase * v.block(0)(i, j)));
                }
            }
            c.require(worst <= 1e-12, "phase residue " + std::to_string(worst));
        }
    }
}

// ---- criterion 2 -----------------------------------------------------------

void axiom_suite(Check& c) {
    std::vector<DynamicalSystem> systems;
    systems.push_back(build_rotation_system(1, 5, MeasureSemigroup::naturals()));
    systems.push_back(build_rotation_system(2, 7, MeasureSemigroup::integers()));
    systems.push_back(build_classical_system(6, cycle(6), uniform(6),
                                             MeasureSemigroup::naturals()));
    systems.push_back(build_classical_system(4, cycle(4), uniform(4),
                                             MeasureSemigroup::cyclic_group(4)));
    systems.push_back(build_classical_system(4, {1, 0, 3, 2}, {0.3, 0.3, 0.2, 0.2},
                                             MeasureSemigroup::integers()));
    Complex w3 = std::polar(1.0, 2.0 * kPi / 3.0);
    Matrix g1 = Matrix::Zero(3, 3);
    Matrix g2 = Matrix::Zero(3, 3);
    for (int k = 0; k < 3; ++k) {
        g1(k, k) = std::pow(w3, k);
        g2(k, k) = std::pow(w3, 2 * k);
    }
    systems.push_back(build_lattice_system({g1, g2}));

    for (std::size_t i = 0; i < systems.size(); ++i) {
        VerificationReport report = verify_system(systems[i], 200, 1e-9);
        c.require(report.passed(), "system " + std::to_string(i) + " failed an axiom");
        c.require(report.homomorphism <= 1e-9, "composition law violation");
        c.require(report.omega_isometry <= 1e-9, "state isometry violation");
        c.require(report.norm_contraction <= 1e-9, "norm contraction violation");
    }
}

// ---- criterion 3 -----------------------------------------------------------

void classical_oracle(Check& c) {
    auto sys = build_classical_system(4, cycle(4), uniform(4), MeasureSemigroup::naturals());
    AlgebraElement f = chi(sys.dims(), {0, 1});

    AverageTrace pair = szemeredi_average(sys, f, {0, 1}, {4});
    c.require(std::abs(pair.rows[0].average - 0.25) <= 1e-12, "pair average off");
    double direct_pair = furstenberg_average(sys, {0, 1}, 1, 4);
    c.require(std::abs(direct_pair - 0.25) <= 1e-12, "pair set-path average off");

    AverageTrace triple = szemeredi_average(sys, f, {0, 1, 2}, {4});
    c.require(std::abs(triple.rows[0].average - 0.125) <= 1e-12, "triple average off");
    double direct_triple = furstenberg_average(sys, {0, 1}, 2, 4);
    c.require(std::abs(direct_triple - 0.125) <= 1e-12, "triple set-path average off");
}

// ---- criterion 4 -----------------------------------------------------------

void positive_tail_infimum(Check& c) {
    for (int q : {3, 5}) {
        // independent closed form: all factors are diagonal with entries
        // 1/2 + cos(2 pi (k - n)/q)/2, so the correlation is an explicit
        // cosine sum, periodic in n with period q
        std::vector<double> period(static_cast<std::size_t>(q));
        for (int s = 0; s < q; ++s) {
            double sum = 0.0;
            for (int k = 0; k < q; ++k) {
                double f0 = 0.5 + 0.5 * std::cos(2.0 * kPi * k / q);
                double f1 = 0.5 + 0.5 * std::cos(2.0 * kPi * (k - s) / q);
                double f2 = 0.5 + 0.5 * std::cos(2.0 * kPi * (k - 2 * s) / q);
                sum += f0 * f1 * f2;
            }
            period[static_cast<std::size_t>(s)] = sum / q;
        }
        std::vector<double> oracle;
        double running = 0.0;
        for (int n = 1; n <= 500; ++n) {
            running += period[static_cast<std::size_t>(n % q)];
            if (n >= q) oracle.push_back(running / n);
        }
        double a_star = oracle[0];
        for (double v : oracle) a_star = std::min(a_star, v);
        c.require(a_star > 0.0, "oracle infimum not positive");

        auto sys = build_rotation_system(1, q, MeasureSemigroup::naturals());
        AlgebraElement a = 0.5 * sys.element("I") +
                           0.25 * (sys.element("V") + sys.element("V").adjoint());
        std::vector<std::int64_t> windows;
        for (std::int64_t n = q; n <= 500; ++n) windows.push_back(n);
        AverageTrace trace = szemeredi_average(sys, a, {0, 1, 2}, windows);
        c.require(trace.rows.size() == oracle.size(), "row count mismatch");
        for (std::size_t i = 0; i < trace.rows.size(); ++i) {
            c.require(std::abs(trace.rows[i].average - oracle[i]) <= 1e-12,
                      "average deviates from the closed form");
            c.require(trace.rows[i].running_infimum >= a_star - 1e-9,
                      "tail infimum dropped below the oracle floor");
        }
    }
}

// ---- criterion 5 -----------------------------------------------------------

void product_bound_trials(Check& c) {
    std::mt19937_64 rng(0xfeedULL);
    std::uniform_real_distribution<double> pick(0.05, 0.95);
    int performed = 0;
    while (performed < 500) {
        int q = 1 + static_cast<int>(rng() % 8);
        int k = 1 + static_cast<int>(rng() % 3);
        TraceState omega = TraceState::normalized_trace({q});
        AlgebraElement b = random_positive_contraction({q}, rng);
        double power_trace = trace_eval(omega, b.pow(k + 1)).real();
        if (power_trace <= 0.0) continue;
        double eps = pick(rng) * power_trace / (k + 1);
        double delta = std::min(eps / 4.0, 0.1);
        std::vector<AlgebraElement> factors;
        for (int j = 0; j <= k; ++j) {
            AlgebraElement p = random_hermitian({q}, rng);
            double np = op_norm(p);
            if (np > 0.0) p *= Complex(delta / np, 0.0);
            AlgebraElement cj = b + p;
            double ncj = op_norm(cj);
            if (ncj > 1.0) cj *= Complex(1.0 / ncj, 0.0);
            factors.push_back(cj);
        }
        ProductBoundCheck check = product_lower_bound(omega, b, k, eps, factors);
        c.require(check.bound > 0.0, "bound not positive");
        c.require(check.holds, "trial " + std::to_string(performed) + " broke the bound");
        ++performed;
    }
    c.require(performed == 500, "did not complete 500 trials");
}

// ---- criterion 6 -----------------------------------------------------------

void recurrence_gap_structure(Check& c) {
    auto sys = build_rotation_system(1, 4, MeasureSemigroup::naturals());
    FolnerWindow window = folner_window(sys.semigroup(), 1000);
    RecurrenceScan scan =
        recurrence_set(sys, RecurrenceQuery{sys.element("V"), {0, 1}, 0.5, window});

    std::vector<std::int64_t> expected;
    for (std::int64_t n = 4; n <= 1000; n += 4) expected.push_back(n);
    std::vector<std::int64_t> got;
    for (const auto& e : scan.members) got.push_back(e.scalar());
    c.require(got == expected, "the scan is not exactly the multiples of 4");

    SyndeticityReport cover = syndeticity(sys.semigroup(), scan.members, window, 10);
    c.require(cover.found, "no witness cover found");
    c.require(cover.max_gap.has_value() && *cover.max_gap == 4, "max gap is not 4");
    c.require(cover.witnesses.size() == 4, "witness count is not 4");
    for (std::size_t j = 0; j < cover.witnesses.size(); ++j) {
        c.require(cover.witnesses[j].scalar() == static_cast<std::int64_t>(j) + 1,
                  "witnesses are not 1..4");
    }
}

// ---- criterion 7 -----------------------------------------------------------

void pigeonhole_bound(Check& c) {
    auto nat = MeasureSemigroup::naturals();
    std::vector<Element> block;
    for (std::int64_t b = 1; b <= 10; ++b) block.emplace_back(b);
    std::vector<Element> evens;
    for (std::int64_t v = 2; v <= 12; v += 2) evens.emplace_back(v);
    std::vector<Element> witnesses = {Element(1), Element(2)};
    PigeonholeResult res = pigeonhole_check(nat, block, evens, witnesses);
    c.require(res.ratio >= 0.5, "frozen example ratio below 1/2");

    std::mt19937_64 rng(0xabcdULL);
    for (int trial = 0; trial < 100; ++trial) {
        std::int64_t n = 4 + static_cast<std::int64_t>(rng() % 27);
        auto group = MeasureSemigroup::cyclic_group(n);

        std::vector<Element> sub;
        for (std::int64_t x = 0; x < n; ++x) {
            if (rng() % 2 == 0) sub.emplace_back(x);
        }
        if (sub.empty()) sub.emplace_back(static_cast<std::int64_t>(rng() % n));

        std::size_t r = 1 + rng() % 4;
        std::set<std::int64_t> distinct;
        while (distinct.size() < r) distinct.insert(static_cast<std::int64_t>(rng() % n));
        std::vector<Element> ws;
        for (std::int64_t w : distinct) ws.emplace_back(w);

        // seed the target set so every group element reaches it through some
        // witness: relative denseness by construction
        std::set<std::int64_t> target;
        for (std::int64_t g = 0; g < n; ++g) {
            std::int64_t w = ws[rng() % ws.size()].scalar();
            target.insert((g + w) % n);
        }
        std::vector<Element> set;
        for (std::int64_t e : target) set.emplace_back(e);

        PigeonholeResult out = pigeonhole_check(group, sub, set, ws);
        double floor_ratio = 1.0 / static_cast<double>(ws.size());
        c.require(out.ratio >= floor_ratio - 1e-12,
                  "trial " + std::to_string(trial) + " ratio below 1/r");
    }
}

// ---- criterion 8 -----------------------------------------------------------

void window_ratio_arithmetic(Check& c) {
    auto nat = MeasureSemigroup::naturals();
    for (std::int64_t n = 1; n <= 200; ++n) {
        FolnerWindow w = folner_window(nat, n);
        for (std::int64_t g = 1; g <= 2 * n; ++g) {
            double expected =
                static_cast<double>(std::min(2 * g, 2 * n)) / static_cast<double>(n);
            if (folner_ratio(nat, w, Element(g)) != expected) {
                c.require(false, "formula mismatch at N=" + std::to_string(n) +
                                     " g=" + std::to_string(g));
                return;
            }
        }
    }

    std::mt19937_64 rng(0x2718ULL);
    std::vector<MeasureSemigroup> kinds = {
        MeasureSemigroup::naturals(), MeasureSemigroup::integers(),
        MeasureSemigroup::integer_lattice(2), MeasureSemigroup::cyclic_group(12)};
    for (int trial = 0; trial < 1000; ++trial) {
        const auto& s = kinds[trial % kinds.size()];
        std::int64_t n = 1 + static_cast<std::int64_t>(rng() % 12);
        FolnerWindow base = folner_window(s, n);
        Element g = random_semigroup_element(s, rng, 6);
        Element h = random_semigroup_element(s, rng, 6);
        FolnerWindow moved = translate_window(s, base, g);
        if (folner_ratio(s, moved, h) != folner_ratio(s, base, h)) {
            c.require(false, "translation changed a ratio at trial " + std::to_string(trial));
            return;
        }
    }
}

// ---- criterion 9 -----------------------------------------------------------

void net_stabilization(Check& c) {
    std::vector<std::int64_t> windows = {10, 50, 100, 200};
    for (int q : {3, 5, 8}) {
        auto sys = build_rotation_system(1, q, MeasureSemigroup::naturals());
        CertificateReport rv =
            compactness_certificate(sys, sys.element("V"), {0.1}, windows);
        c.require(rv.all_stabilized(), "clock orbit did not stabilize");
        for (const auto& row : rv.rows) {
            c.require(row.net_size == static_cast<std::size_t>(q),
                      "clock net size is not q=" + std::to_string(q));
        }
        CertificateReport ru =
            compactness_certificate(sys, sys.element("U"), {0.1}, windows);
        c.require(ru.all_stabilized(), "shift orbit did not stabilize");
        for (const auto& row : ru.rows) c.require(row.net_size == 1, "shift net size is not 1");
    }

    // product-net estimate on the joint orbit, in the operator norm
    auto sys = build_rotation_system(1, 5, MeasureSemigroup::naturals());
    const AlgebraElement& u = sys.element("U");
    const AlgebraElement& v = sys.element("V");
    AlgebraElement uv = u * v;
    FolnerWindow w = folner_window(sys.semigroup(), 50);
    const double eps = 0.1;
    PointCloud orbit_u = orbit_sample(sys, u, w, CloudMetric::OperatorNorm);
    PointCloud orbit_v = orbit_sample(sys, v, w, CloudMetric::OperatorNorm);
    EpsilonNet net_u = greedy_eps_net(orbit_u, eps);
    EpsilonNet net_v = greedy_eps_net(orbit_v, eps);
    EpsilonNet product = combine_nets(net_u, net_v, op_norm(u), op_norm(v));
    c.require(product.centers.size() == net_u.centers.size() * net_v.centers.size(),
              "product net size is not the center product");
    for (const auto& g : w.elements) {
        AlgebraElement moved_u = sys.apply(g, u);
        AlgebraElement moved_v = sys.apply(g, v);
        const AlgebraElement* ag = nullptr;
        const AlgebraElement* bg = nullptr;
        double best_a = 1e300;
        double best_b = 1e300;
        for (const auto& cu : net_u.centers) {
            double d = op_norm(moved_u - cu);
            if (d < best_a) {
                best_a = d;
                ag = &cu;
            }
        }
        for (const auto& cv : net_v.centers) {
            double d = op_norm(moved_v - cv);
            if (d < best_b) {
                best_b = d;
                bg = &cv;
            }
        }
        c.require(best_a < eps && best_b < eps, "net does not cover an orbit point");
        double lhs = op_norm(sys.apply(g, uv) - (*ag) * (*bg));
        double rhs = eps * (op_norm(moved_u) + op_norm(*bg));
        c.require(lhs <= rhs + 1e-12, "product estimate violated");
    }
}

// ---- criterion 10 ----------------------------------------------------------

std::string slurp(const fs::path& path) {
    std::ifstream in(path, std::ios::binary);
    std::ostringstream out;
    out << in.rdbuf();
    return out.str();
}

int run_cli(const std::string& cli, const std::string& args) {
    std::string cmd = cli + " " + args + " >/dev/null 2>&1";
    int status = std::system(cmd.c_str());
    if (status == -1) return -1;
    if (WIFEXITED(status)) return WEXITSTATUS(status);
    return -2;
}

void write_file(const fs::path& path, const std::string& body) {
    std::ofstream out(path, std::ios::binary);
    out << body;
}

void cli_reproducibility(Check& c, const std::string& cli) {
    fs::path dir = fs::temp_directory_path() / "cstar_acceptance";
    fs::remove_all(dir);
    fs::create_directories(dir);

    write_file(dir / "verify_rot.json", R"({
        "system": {"type": "rotation", "p": 1, "q": 5},
        "verify": {"samples": 200}
    })");
    write_file(dir / "compact.json", R"({
        "system": {"type": "rotation", "p": 1, "q": 5},
        "element": {"name": "V"},
        "compactness": {"epsilons": [0.1], "window_sizes": [10, 50, 100, 200]}
    })");
    write_file(dir / "recur.json", R"({
        "system": {"type": "rotation", "p": 1, "q": 3},
        "element": {"name": "V"},
        "recurrence": {"exponents": [0, 1], "epsilon": 0.5, "window": 30, "max_r": 10}
    })");
    write_file(dir / "avg_furst.json", R"({
        "system": {"type": "classical", "n": 4, "permutation": [1, 2, 3, 0],
                   "weights": [0.25, 0.25, 0.25, 0.25]},
        "element": {"chi": [0, 1]},
        "average": {"method": "furstenberg", "exponents": [0, 1, 2],
                    "window_sizes": [1, 2, 3, 4]}
    })");
    write_file(dir / "avg_id.json", R"({
        "system": {"type": "rotation", "p": 1, "q": 3},
        "element": {"name": "I"},
        "average": {"method": "szemeredi", "exponents": [0, 1], "window_sizes": [5, 10]}
    })");
    write_file(dir / "bad_weights.json", R"({
        "system": {"type": "classical", "n": 3, "permutation": [1, 2, 0],
                   "weights": [0.5, 0.25, 0.25]},
        "verify": {"samples": 10}
    })");
    write_file(dir / "broken_action.json", R"({
        "system": {"type": "rotation", "p": 1, "q": 5, "scale": 2.0},
        "verify": {"samples": 40}
    })");
    write_file(dir / "empty_windows.json", R"({
        "system": {"type": "rotation", "p": 1, "q": 5},
        "element": {"name": "V"},
        "compactness": {"epsilons": [0.1], "window_sizes": []}
    })");

    struct Run {
        std::string command;
        std::string config;
        std::vector<std::string> outputs;
    };
    std::vector<Run> runs = {
        {"verify", "verify_rot.json", {"verify.csv"}},
        {"compactness", "compact.json", {"compactness.csv"}},
        {"recurrence", "recur.json", {"recurrence.csv", "syndeticity.csv"}},
        {"average", "avg_furst.json", {"averages.csv"}},
    };
    for (const auto& run : runs) {
        fs::path out1 = dir / (run.command + "_1");
        fs::path out2 = dir / (run.command + "_2");
        std::string base = run.command + " --config " + (dir / run.config).string() +
                           " --serial --out ";
        int code1 = run_cli(cli, base + out1.string());
        int code2 = run_cli(cli, base + out2.string());
        c.require(code1 == 0, run.command + " first run exited " + std::to_string(code1));
        c.require(code2 == 0, run.command + " second run exited " + std::to_string(code2));
        for (const auto& name : run.outputs) {
            std::string a = slurp(out1 / name);
            std::string b = slurp(out2 / name);
            c.require(!a.empty(), name + " is empty");
            c.require(a == b, name + " differs between reruns");
        }
    }

    // CSV bytes must equal the library's own serialization
    {
        auto ex = config::load_experiment((dir / "verify_rot.json").string(), "verify",
                                          std::nullopt);
        VerificationReport report =
            verify_system(ex.system, ex.verify->samples, ex.verify->tol, ex.verify->seed);
        c.require(slurp(dir / "verify_1" / "verify.csv") == report.to_csv(),
                  "verify.csv differs from the library serialization");
    }
    {
        auto ex = config::load_experiment((dir / "compact.json").string(), "compactness",
                                          std::nullopt);
        CertificateReport report =
            compactness_certificate(ex.system, *ex.element, ex.compactness->epsilons,
                                    ex.compactness->window_sizes, ex.compactness->metric);
        c.require(slurp(dir / "compactness_1" / "compactness.csv") == report.to_csv(),
                  "compactness.csv differs from the library serialization");
        for (const auto& row : report.rows) c.require(row.net_size == 5, "net size is not 5");
    }
    {
        auto ex = config::load_experiment((dir / "recur.json").string(), "recurrence",
                                          std::nullopt);
        FolnerWindow window = folner_window(ex.system.semigroup(), ex.recurrence->window);
        RecurrenceScan scan = recurrence_set(
            ex.system,
            RecurrenceQuery{*ex.element, ex.recurrence->exponents, ex.recurrence->epsilon,
                            window});
        c.require(slurp(dir / "recurrence_1" / "recurrence.csv") == scan.to_csv(),
                  "recurrence.csv differs from the library serialization");
        for (const auto& row : scan.rows) {
            c.require(row.member == (row.g.scalar() % 3 == 0),
                      "membership is not exactly the multiples of 3");
        }
    }

    // spot values
    std::string avg = slurp(dir / "average_1" / "averages.csv");
    c.require(avg.find("\n4,0.125,0.125\n") != std::string::npos,
              "set-path average table lacks the 0.125 row");

    fs::path out_id = dir / "avg_id";
    c.require(run_cli(cli, "average --config " + (dir / "avg_id.json").string() +
                               " --serial --out " + out_id.string()) == 0,
              "identity average run failed");
    std::string id_csv = slurp(out_id / "averages.csv");
    c.require(id_csv.find("\n5,1,1\n") != std::string::npos &&
                  id_csv.find("\n10,1,1\n") != std::string::npos,
              "identity element averages are not 1");

    // exit-code contract
    c.require(run_cli(cli, "verify --config " + (dir / "bad_weights.json").string() +
                               " --out " + (dir / "e1").string()) == 2,
              "rejected construction should exit 2");
    c.require(run_cli(cli, "verify --config " + (dir / "broken_action.json").string() +
                               " --out " + (dir / "e2").string()) == 1,
              "failed axiom should exit 1");
    c.require(run_cli(cli, "compactness --config " + (dir / "empty_windows.json").string() +
                               " --out " + (dir / "e3").string()) == 2,
              "empty window list should exit 2");
    c.require(run_cli(cli, "verify --config " + (dir / "broken_action.json").string() +
                               " --tol 1e9 --out " + (dir / "e4").string()) == 0,
              "tolerance flag did not reach the verifier");
}

}  // namespace

int main(int argc, char** argv) {
    if (argc < 2) {
        std::cerr << "usage: " << argv[0] << " <path-to-cli>\n";
        return 64;
    }
    const std::string cli = argv[1];

    struct Criterion {
        std::string name;
        double limit_seconds;
        std::function<void(Check&)> run;
    };
    std::vector<Criterion> criteria = {
        {"rotation commutation and clock phases", 1.0, commutation_and_phases},
        {"axiom suite on built-in systems", 5.0, axiom_suite},
        {"classical average oracle agreement", 1.0, classical_oracle},
        {"positive tail infimum of windowed averages", 10.0, positive_tail_infimum},
        {"near-orbit product bound trials", 30.0, product_bound_trials},
        {"recurrence set gap structure", 2.0, recurrence_gap_structure},
        {"translate pigeonhole bound", 2.0, pigeonhole_bound},
        {"window ratio arithmetic", 5.0, window_ratio_arithmetic},
        {"orbit net stabilization and product cover", 5.0, net_stabilization},
        {"cli reproducibility and exit codes", 5.0,
         [&cli](Check& c) { cli_reproducibility(c, cli); }},
    };

    int failures = 0;
    for (const auto& criterion : criteria) {
        Check check;
        auto start = std::chrono::steady_clock::now();
        try {
            criterion.run(check);
        } catch (const std::exception& e) {
            check.require(false, std::string("exception: ") + e.what());
        }
        double seconds =
            std::chrono::duration<double>(std::chrono::steady_clock::now() - start).count();
        if (seconds > criterion.limit_seconds) {
            check.require(false, "runtime " + std::to_string(seconds) + " s over the " +
                                     std::to_string(criterion.limit_seconds) + " s limit");
        }
        std::ostringstream line;
        if (check.ok) {
            line << "[PASS] " << criterion.name;
        } else {
            line << "[FAIL] " << criterion.name << " (" << check.why << ")";
            ++failures;
        }
        std::printf("%s (%.2f s)\n", line.str().c_str(), seconds);
        std::fflush(stdout);
    }
    return failures;
}
