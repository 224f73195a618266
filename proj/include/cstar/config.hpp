#pragma once

#include <cstdint>
#include <optional>
#include <string>
#include <vector>

#include "cstar/compactness.hpp"
#include "cstar/dynamics.hpp"
#include "cstar/errors.hpp"

namespace cstar::config {

// Schema or value problem in an experiment file; maps to CLI exit code 2.
struct config_error : std::runtime_error {
    explicit config_error(const std::string& what) : std::runtime_error(what) {}
};

struct VerifyParams {
    int samples = 200;
    std::uint64_t seed = 0x5eedULL;
    double tol = kDefaultTol;
};

struct CompactnessParams {
    std::vector<double> epsilons;
    std::vector<std::int64_t> window_sizes;
    CloudMetric metric = CloudMetric::GnsSeminorm;
};

struct RecurrenceParams {
    std::vector<std::int64_t> exponents;
    double epsilon = 0.0;
    std::int64_t window = 0;
    std::size_t max_r = 10;
};

enum class AverageMethod { Szemeredi, Furstenberg };

struct AverageParams {
    AverageMethod method = AverageMethod::Szemeredi;
    std::vector<std::int64_t> exponents;
    std::vector<std::int64_t> window_sizes;
    std::vector<int> chi;  // the subset, when the element is a characteristic function
};

// One experiment file, parsed and schema-checked (unknown keys rejected),
// with the system already constructed. Only the section named by `command`
// is required and returned.
struct Experiment {
    DynamicalSystem system;
    std::optional<AlgebraElement> element;
    std::optional<VerifyParams> verify;
    std::optional<CompactnessParams> compactness;
    std::optional<RecurrenceParams> recurrence;
    std::optional<AverageParams> average;
};

Experiment load_experiment(const std::string& path, const std::string& command,
                           std::optional<double> tol_override);

}  // namespace cstar::config
