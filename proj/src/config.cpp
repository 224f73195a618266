#include "cstar/config.hpp"

#include <cmath>
#include <fstream>
#include <set>

#include <json.hpp>

namespace cstar::config {

namespace {

using nlohmann::json;

void expect_keys(const json& obj, const std::set<std::string>& allowed, const std::string& where) {
    if (!obj.is_object()) throw config_error(where + " must be an object");
    for (const auto& item : obj.items()) {
        if (allowed.count(item.key()) == 0) {
            throw config_error("unknown key \"" + item.key() + "\" in " + where);
        }
    }
}

const json& require(const json& obj, const std::string& key, const std::string& where) {
    auto it = obj.find(key);
    if (it == obj.end()) throw config_error(where + " is missing required key \"" + key + "\"");
    return *it;
}

std::int64_t as_int(const json& v, const std::string& where) {
    if (!v.is_number_integer()) throw config_error(where + " must be an integer");
    return v.get<std::int64_t>();
}

double as_double(const json& v, const std::string& where) {
    if (!v.is_number()) throw config_error(where + " must be a number");
    return v.get<double>();
}

std::vector<std::int64_t> as_int_list(const json& v, const std::string& where) {
    if (!v.is_array()) throw config_error(where + " must be an array of integers");
    std::vector<std::int64_t> out;
    out.reserve(v.size());
    for (const auto& item : v) out.push_back(as_int(item, where));
    return out;
}

MeasureSemigroup parse_semigroup(const json& v, const std::string& where) {
    if (!v.is_string()) throw config_error(where + " must be \"naturals\" or \"integers\"");
    const std::string name = v.get<std::string>();
    if (name == "naturals") return MeasureSemigroup::naturals();
    if (name == "integers") return MeasureSemigroup::integers();
    throw config_error(where + " must be \"naturals\" or \"integers\"");
}

// Flat row-major list of [re, im] pairs; the length fixes the square dimension.
Matrix parse_matrix_literal(const json& v, const std::string& where) {
    if (!v.is_array() || v.empty()) throw config_error(where + " must be a nonempty array");
    const auto entries = v.size();
    std::size_t dim = 1;
    while (dim * dim < entries) ++dim;
    if (dim * dim != entries) {
        throw config_error(where + " must hold a square count of [re, im] pairs");
    }
    Matrix m(static_cast<Eigen::Index>(dim), static_cast<Eigen::Index>(dim));
    for (std::size_t i = 0; i < entries; ++i) {
        const auto& pair = v[i];
        if (!pair.is_array() || pair.size() != 2) {
            throw config_error(where + " entries must be [re, im] pairs");
        }
        m(static_cast<Eigen::Index>(i / dim), static_cast<Eigen::Index>(i % dim)) =
            Complex(as_double(pair[0], where), as_double(pair[1], where));
    }
    return m;
}

DynamicalSystem parse_system(const json& v) {
    expect_keys(v, {"type", "p", "q", "semigroup", "scale", "n", "permutation", "weights",
                    "generators"},
                "system");
    const std::string type = require(v, "type", "system").get<std::string>();
    if (type == "rotation") {
        expect_keys(v, {"type", "p", "q", "semigroup", "scale"}, "rotation system");
        const std::int64_t p = as_int(require(v, "p", "system"), "system.p");
        const std::int64_t q = as_int(require(v, "q", "system"), "system.q");
        MeasureSemigroup s = v.contains("semigroup")
                                 ? parse_semigroup(v["semigroup"], "system.semigroup")
                                 : MeasureSemigroup::naturals();
        double scale = v.contains("scale") ? as_double(v["scale"], "system.scale") : 1.0;
        return build_rotation_system(p, q, s, scale);
    }
    if (type == "classical") {
        expect_keys(v, {"type", "n", "permutation", "weights", "semigroup"}, "classical system");
        const std::int64_t n = as_int(require(v, "n", "system"), "system.n");
        auto perm64 = as_int_list(require(v, "permutation", "system"), "system.permutation");
        std::vector<int> perm(perm64.begin(), perm64.end());
        const auto& wjson = require(v, "weights", "system");
        if (!wjson.is_array()) throw config_error("system.weights must be an array");
        std::vector<double> weights;
        weights.reserve(wjson.size());
        for (const auto& item : wjson) weights.push_back(as_double(item, "system.weights"));
        MeasureSemigroup s = v.contains("semigroup")
                                 ? parse_semigroup(v["semigroup"], "system.semigroup")
                                 : MeasureSemigroup::naturals();
        return build_classical_system(static_cast<int>(n), perm, weights, s);
    }
    if (type == "lattice") {
        expect_keys(v, {"type", "generators"}, "lattice system");
        const auto& gens = require(v, "generators", "system");
        if (!gens.is_array() || gens.empty()) {
            throw config_error("system.generators must be a nonempty array");
        }
        std::vector<Matrix> matrices;
        matrices.reserve(gens.size());
        for (std::size_t i = 0; i < gens.size(); ++i) {
            matrices.push_back(parse_matrix_literal(gens[i], "system.generators[" +
                                                                 std::to_string(i) + "]"));
        }
        return build_lattice_system(matrices);
    }
    throw config_error("system.type must be \"rotation\", \"classical\", or \"lattice\"");
}

AlgebraElement parse_element(const json& v, const DynamicalSystem& sys, std::vector<int>* chi_out) {
    expect_keys(v, {"name", "chi", "blocks"}, "element");
    const int specified = static_cast<int>(v.contains("name")) +
                          static_cast<int>(v.contains("chi")) +
                          static_cast<int>(v.contains("blocks"));
    if (specified != 1) {
        throw config_error("element needs exactly one of \"name\", \"chi\", \"blocks\"");
    }
    if (v.contains("name")) {
        const std::string name = v["name"].get<std::string>();
        if (!sys.has_element(name)) throw config_error("element name \"" + name + "\" is unknown");
        return sys.element(name);
    }
    if (v.contains("chi")) {
        if (!sys.is_classical()) {
            throw config_error("element.chi requires a classical system");
        }
        auto points64 = as_int_list(v["chi"], "element.chi");
        if (points64.empty()) throw config_error("element.chi must be nonempty");
        AlgebraElement chi = AlgebraElement::zeros(sys.dims());
        std::vector<int> points;
        for (std::int64_t x : points64) {
            if (x < 0 || x >= static_cast<std::int64_t>(sys.dims().size())) {
                throw config_error("element.chi point out of range");
            }
            chi.block(static_cast<std::size_t>(x))(0, 0) = Complex(1.0, 0.0);
            points.push_back(static_cast<int>(x));
        }
        if (chi_out != nullptr) *chi_out = points;
        return chi;
    }
    const auto& blocks_json = v["blocks"];
    if (!blocks_json.is_array() || blocks_json.size() != sys.dims().size()) {
        throw config_error("element.blocks must list one block per algebra block");
    }
    std::vector<Matrix> blocks;
    blocks.reserve(blocks_json.size());
    for (std::size_t i = 0; i < blocks_json.size(); ++i) {
        Matrix m = parse_matrix_literal(blocks_json[i], "element.blocks[" + std::to_string(i) + "]");
        if (m.rows() != sys.dims()[i]) {
            throw config_error("element.blocks[" + std::to_string(i) +
                               "] does not match the algebra block dimension");
        }
        blocks.push_back(std::move(m));
    }
    return AlgebraElement(std::move(blocks));
}

VerifyParams parse_verify(const json& v, std::optional<double> tol_override) {
    expect_keys(v, {"samples", "seed", "tol"}, "verify");
    VerifyParams params;
    if (v.contains("samples")) {
        params.samples = static_cast<int>(as_int(v["samples"], "verify.samples"));
        if (params.samples < 1) throw config_error("verify.samples must be >= 1");
    }
    if (v.contains("seed")) {
        params.seed = static_cast<std::uint64_t>(as_int(v["seed"], "verify.seed"));
    }
    if (v.contains("tol")) params.tol = as_double(v["tol"], "verify.tol");
    if (tol_override.has_value()) params.tol = *tol_override;
    if (!(params.tol > 0.0)) throw config_error("verify.tol must be positive");
    return params;
}

CompactnessParams parse_compactness(const json& v) {
    expect_keys(v, {"epsilons", "window_sizes", "metric"}, "compactness");
    CompactnessParams params;
    const auto& eps_json = require(v, "epsilons", "compactness");
    if (!eps_json.is_array() || eps_json.empty()) {
        throw config_error("compactness.epsilons must be a nonempty array");
    }
    for (const auto& item : eps_json) {
        params.epsilons.push_back(as_double(item, "compactness.epsilons"));
    }
    params.window_sizes = as_int_list(require(v, "window_sizes", "compactness"),
                                      "compactness.window_sizes");
    if (params.window_sizes.empty()) {
        throw config_error("compactness.window_sizes must be a nonempty array");
    }
    if (v.contains("metric")) {
        const std::string metric = v["metric"].get<std::string>();
        if (metric == "gns") {
            params.metric = CloudMetric::GnsSeminorm;
        } else if (metric == "norm") {
            params.metric = CloudMetric::OperatorNorm;
        } else {
            throw config_error("compactness.metric must be \"gns\" or \"norm\"");
        }
    }
    return params;
}

RecurrenceParams parse_recurrence(const json& v) {
    expect_keys(v, {"exponents", "epsilon", "window", "max_r"}, "recurrence");
    RecurrenceParams params;
    params.exponents = as_int_list(require(v, "exponents", "recurrence"), "recurrence.exponents");
    params.epsilon = as_double(require(v, "epsilon", "recurrence"), "recurrence.epsilon");
    params.window = as_int(require(v, "window", "recurrence"), "recurrence.window");
    if (v.contains("max_r")) {
        std::int64_t max_r = as_int(v["max_r"], "recurrence.max_r");
        if (max_r < 1) throw config_error("recurrence.max_r must be >= 1");
        params.max_r = static_cast<std::size_t>(max_r);
    }
    return params;
}

AverageParams parse_average(const json& v) {
    expect_keys(v, {"method", "exponents", "window_sizes"}, "average");
    AverageParams params;
    params.exponents = as_int_list(require(v, "exponents", "average"), "average.exponents");
    params.window_sizes = as_int_list(require(v, "window_sizes", "average"),
                                      "average.window_sizes");
    if (v.contains("method")) {
        const std::string method = v["method"].get<std::string>();
        if (method == "szemeredi") {
            params.method = AverageMethod::Szemeredi;
        } else if (method == "furstenberg") {
            params.method = AverageMethod::Furstenberg;
        } else {
            throw config_error("average.method must be \"szemeredi\" or \"furstenberg\"");
        }
    }
    return params;
}

}  // namespace

Experiment load_experiment(const std::string& path, const std::string& command,
                           std::optional<double> tol_override) {
    std::ifstream in(path);
    if (!in) throw config_error("cannot open config file: " + path);
    json root;
    try {
        root = json::parse(in);
    } catch (const json::parse_error& e) {
        throw config_error(std::string("config is not valid JSON: ") + e.what());
    }
    expect_keys(root, {"system", "element", "verify", "compactness", "recurrence", "average"},
                "config");

    DynamicalSystem system = parse_system(require(root, "system", "config"));
    std::optional<AlgebraElement> element;
    std::vector<int> chi;
    if (root.contains("element")) {
        element = parse_element(root["element"], system, &chi);
    }

    Experiment experiment{std::move(system), std::move(element), std::nullopt, std::nullopt,
                          std::nullopt, std::nullopt};

    auto need_element = [&](const char* cmd) {
        if (!experiment.element.has_value()) {
            throw config_error(std::string("command \"") + cmd + "\" needs an element section");
        }
    };

    if (command == "verify") {
        experiment.verify = root.contains("verify") ? parse_verify(root["verify"], tol_override)
                                                    : parse_verify(json::object(), tol_override);
    } else if (command == "compactness") {
        need_element("compactness");
        experiment.compactness = parse_compactness(require(root, "compactness", "config"));
    } else if (command == "recurrence") {
        need_element("recurrence");
        experiment.recurrence = parse_recurrence(require(root, "recurrence", "config"));
    } else if (command == "average") {
        need_element("average");
        AverageParams params = parse_average(require(root, "average", "config"));
        if (params.method == AverageMethod::Furstenberg) {
            if (!experiment.system.is_classical()) {
                throw config_error("average.method furstenberg requires a classical system");
            }
            if (chi.empty()) {
                throw config_error("average.method furstenberg requires a chi element");
            }
            for (std::size_t j = 0; j < params.exponents.size(); ++j) {
                if (params.exponents[j] != static_cast<std::int64_t>(j)) {
                    throw config_error(
                        "average.method furstenberg requires exponents 0,1,...,k");
                }
            }
            params.chi = chi;
        }
        experiment.average = std::move(params);
    } else {
        throw config_error("unknown command: " + command);
    }
    return experiment;
}

}  // namespace cstar::config
