#pragma once

#include <cstdint>
#include <optional>
#include <string>
#include <vector>

#include "cstar/algebra.hpp"
#include "cstar/dynamics.hpp"
#include "cstar/semigroup.hpp"

namespace cstar {

// Scan request: which element, which return-time exponents m_0..m_k, which
// closeness threshold, over which window. Exponent 0 always contributes a
// zero deviation (identity-map convention).
struct RecurrenceQuery {
    AlgebraElement a;
    std::vector<std::int64_t> exponents;
    double epsilon = 0.0;
    FolnerWindow window;
};

// Per-element deviations plus the resulting set
// E = {g in window : max_j ||tau_{g^{m_j}}(a) - a||_omega < eps}.
struct RecurrenceScan {
    struct Row {
        Element g;
        double max_deviation;
        bool member;
    };
    std::vector<Row> rows;
    std::vector<Element> members;

    std::string to_csv() const;
};

RecurrenceScan recurrence_set(const DynamicalSystem& sys, const RecurrenceQuery& query);

// Relative denseness certificate: witnesses g_1..g_r such that every
// applicable g in the verified range meets E.{g g_1, ..., g g_r}. Over the
// naturals the witnesses are {1..max_gap} with max_gap the largest gap of E
// in the scanned range; elsewhere a greedy cover search runs up to max_r.
// Failure to certify within max_r is an outcome, not an error.
struct SyndeticityReport {
    std::vector<Element> witnesses;
    std::size_t r = 0;
    FolnerWindow verified_range;
    std::optional<std::int64_t> max_gap;
    bool found = false;

    std::string to_csv() const;
};

SyndeticityReport syndeticity(const MeasureSemigroup& s, const std::vector<Element>& set,
                              const FolnerWindow& scan, std::size_t max_r);

// Picks j with mu((B g_j) ∩ E) >= mu(B) / r and returns the achieved ratio
// together with the explicit decomposition B_j = {b in B : b g_j in E}.
// If the B_j fail to cover B the witnesses do not certify E over this block
// (usually a window-truncation artifact) and an invariant_violation is thrown.
struct PigeonholeResult {
    std::size_t witness_index = 0;
    double ratio = 0.0;
    std::vector<std::vector<Element>> decomposition;
};

PigeonholeResult pigeonhole_check(const MeasureSemigroup& s, const std::vector<Element>& block,
                                  const std::vector<Element>& set,
                                  const std::vector<Element>& witnesses);

// Lower bound for near-orbit products: for positive contraction b with
// omega(b) > 0, eps < omega(b^{k+1})/(k+1), and contractions c_j with
// ||c_j - b||_omega < eps, the product satisfies
// |omega(c_0...c_k)| > a := omega(b^{k+1}) - (k+1) eps > 0.
// Each precondition failure is reported individually as an argument_error;
// `holds` false on valid inputs is an invariant violation for the caller to
// surface.
struct ProductBoundCheck {
    double bound = 0.0;          // a
    double product_abs = 0.0;    // |omega(c_0...c_k)|
    double power_trace = 0.0;    // omega(b^{k+1})
    bool holds = false;
};

ProductBoundCheck product_lower_bound(const TraceState& omega, const AlgebraElement& b, int k,
                                      double eps, const std::vector<AlgebraElement>& c,
                                      double tol = kDefaultTol);

// Suggested eps for scans derived from the product bound: half the largest
// admissible threshold omega(b^{k+1})/(k+1).
double default_recurrence_epsilon(const TraceState& omega, const AlgebraElement& b, int k);

// omega(tau_{g^{m_0}}(a) ... tau_{g^{m_k}}(a)), factors in exponent order.
Complex correlation(const DynamicalSystem& sys, const AlgebraElement& a,
                    const std::vector<std::int64_t>& exponents, const Element& g);

// Per-window averages of |correlation| with running tail infima. When an
// explicit recurrence set is supplied, the translated-window construction is
// reported as well: for each window the witness translate of largest overlap
// density with the set.
struct AverageTrace {
    struct Row {
        std::int64_t window_n;
        double average;
        double running_infimum;
    };
    std::vector<Row> rows;

    struct TranslatedTrace {
        std::vector<Element> witnesses;
        std::vector<Element> chosen_translates;  // one per window
        std::vector<double> densities;           // mu((L g_j) ∩ E) / mu(L)
        std::vector<double> density_infima;      // running tail infima
        double witness_bound = 0.0;              // 1 / r
    };
    std::optional<TranslatedTrace> translated;

    std::string to_csv() const;
};

AverageTrace szemeredi_average(const DynamicalSystem& sys, const AlgebraElement& a,
                               const std::vector<std::int64_t>& exponents,
                               const std::vector<std::int64_t>& window_sizes);

AverageTrace szemeredi_average(const DynamicalSystem& sys, const AlgebraElement& a,
                               const std::vector<std::int64_t>& exponents,
                               const std::vector<std::int64_t>& window_sizes,
                               const std::vector<Element>& recurrence_members,
                               const FolnerWindow& scan, std::size_t max_r);

// Classical Furstenberg average over {1..n_max}:
// (1/N) sum_n nu(V ∩ T^{-n}V ∩ ... ∩ T^{-kn}V), computed purely from the
// permutation and the point weights as an independent oracle path.
double furstenberg_average(const DynamicalSystem& sys, const std::vector<int>& subset, int k,
                           std::int64_t n_max);

}  // namespace cstar
