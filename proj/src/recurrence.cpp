#include "cstar/recurrence.hpp"

#include <algorithm>
#include <cmath>
#include <map>
#include <set>
#include <sstream>

#include "cstar/csv.hpp"

namespace cstar {

namespace {

void validate_exponents(const std::vector<std::int64_t>& exponents) {
    if (exponents.empty()) throw argument_error("at least one exponent is required");
    for (std::int64_t m : exponents) {
        if (m < 0) throw argument_error("exponents must be >= 0");
    }
}

std::string join_elements(const std::vector<Element>& elems) {
    std::string out;
    for (std::size_t i = 0; i < elems.size(); ++i) {
        if (i > 0) out += ';';
        out += elems[i].str();
    }
    return out;
}

}  // namespace

std::string RecurrenceScan::to_csv() const {
    std::ostringstream out;
    out << "g,max_deviation,member\n";
    for (const auto& row : rows) {
        out << row.g.str() << ',' << csv::float17(row.max_deviation) << ','
            << csv::boolean(row.member) << '\n';
    }
    return out.str();
}

RecurrenceScan recurrence_set(const DynamicalSystem& sys, const RecurrenceQuery& query) {
    validate_exponents(query.exponents);
    if (!(query.epsilon > 0.0)) throw argument_error("recurrence_set: epsilon must be positive");
    if (query.window.elements.empty()) throw argument_error("recurrence_set: empty window");

    RecurrenceScan scan;
    scan.rows.reserve(query.window.elements.size());
    for (const auto& g : query.window.elements) {
        double worst = 0.0;
        for (std::int64_t m : query.exponents) {
            if (m == 0) continue;  // identity map, zero deviation
            double dev = gns_seminorm(sys.state(), sys.apply_power(g, m, query.a) - query.a);
            worst = std::max(worst, dev);
        }
        const bool member = worst < query.epsilon;
        scan.rows.push_back({g, worst, member});
        if (member) scan.members.push_back(g);
    }
    return scan;
}

std::string SyndeticityReport::to_csv() const {
    std::ostringstream out;
    out << "witnesses,max_gap\n";
    out << join_elements(witnesses) << ',';
    if (max_gap.has_value()) out << *max_gap;
    out << '\n';
    return out.str();
}

namespace {

SyndeticityReport syndeticity_on_naturals(const std::vector<Element>& set,
                                          const FolnerWindow& scan, std::size_t max_r) {
    SyndeticityReport report;
    report.verified_range = scan;
    std::int64_t lo = scan.elements.front().scalar();
    std::int64_t hi = lo;
    for (const auto& e : scan.elements) {
        lo = std::min(lo, e.scalar());
        hi = std::max(hi, e.scalar());
    }
    std::vector<std::int64_t> values;
    values.reserve(set.size());
    for (const auto& e : set) values.push_back(e.scalar());
    std::sort(values.begin(), values.end());

    std::int64_t max_gap = 0;
    if (values.empty()) {
        max_gap = hi - lo + 1;
    } else {
        std::int64_t prev = lo - 1;
        for (std::int64_t v : values) {
            max_gap = std::max(max_gap, v - prev);
            prev = v;
        }
        // a window ending at the range edge must still meet the set
        max_gap = std::max(max_gap, hi - values.back() + 1);
    }
    report.max_gap = max_gap;
    report.found = max_gap >= 1 && static_cast<std::size_t>(max_gap) <= max_r;
    if (report.found) {
        for (std::int64_t j = 1; j <= max_gap; ++j) report.witnesses.emplace_back(j);
        report.r = report.witnesses.size();
    }
    return report;
}

}  // namespace

SyndeticityReport syndeticity(const MeasureSemigroup& s, const std::vector<Element>& set,
                              const FolnerWindow& scan, std::size_t max_r) {
    if (scan.elements.empty()) throw argument_error("syndeticity: empty scan window");
    if (max_r < 1) throw argument_error("syndeticity: max_r must be >= 1");
    std::set<Element> scanned(scan.elements.begin(), scan.elements.end());
    for (const auto& e : set) {
        if (scanned.count(e) == 0) {
            throw argument_error("syndeticity: set member outside the scanned region");
        }
    }
    if (s.kind() == SemigroupKind::Naturals) {
        return syndeticity_on_naturals(set, scan, max_r);
    }

    // group kinds: greedy cover by witness translates
    SyndeticityReport report;
    report.verified_range = scan;
    std::set<Element> members(set.begin(), set.end());

    // candidate witnesses w with u.w in the set for some scanned u
    std::set<Element> candidates;
    for (const auto& e : set) {
        for (const auto& u : scan.elements) {
            Element w = e;
            for (int i = 0; i < e.dim(); ++i) w[i] = e[i] - u[i];
            if (s.kind() == SemigroupKind::CyclicGroup) {
                w[0] = ((w[0] % s.modulus()) + s.modulus()) % s.modulus();
            }
            if (s.contains(w)) candidates.insert(w);
        }
    }

    std::vector<Element> uncovered;
    for (const auto& u : scan.elements) uncovered.push_back(u);
    std::vector<Element> chosen;

    auto covers = [&](const Element& u, const Element& w) {
        return members.count(s.compose(u, w)) > 0;
    };
    auto escapes = [&](const Element& u, const Element& w) {
        return scanned.count(s.compose(u, w)) == 0;
    };

    while (!uncovered.empty() && chosen.size() < max_r) {
        const Element* best = nullptr;
        std::size_t best_count = 0;
        for (const auto& w : candidates) {
            std::size_t count = 0;
            for (const auto& u : uncovered) {
                if (covers(u, w)) ++count;
            }
            if (count > best_count) {
                best_count = count;
                best = &w;
            }
        }
        if (best == nullptr || best_count == 0) break;
        Element w = *best;
        chosen.push_back(w);
        std::vector<Element> remaining;
        for (const auto& u : uncovered) {
            // covered now, or exempt because some chosen translate leaves the
            // scanned region (nothing is verifiable about such u)
            bool done = covers(u, w) || escapes(u, w);
            if (!done) {
                for (const auto& c : chosen) {
                    if (escapes(u, c)) {
                        done = true;
                        break;
                    }
                }
            }
            if (!done) remaining.push_back(u);
        }
        uncovered = std::move(remaining);
    }

    // final verification against the chosen witnesses
    bool ok = !chosen.empty();
    if (ok) {
        for (const auto& u : scan.elements) {
            bool applicable = true;
            bool met = false;
            for (const auto& w : chosen) {
                Element t = s.compose(u, w);
                if (scanned.count(t) == 0) {
                    applicable = false;
                    break;
                }
                if (members.count(t) > 0) met = true;
            }
            if (applicable && !met) {
                ok = false;
                break;
            }
        }
    }
    report.found = ok;
    if (ok) {
        report.witnesses = std::move(chosen);
        report.r = report.witnesses.size();
    }
    return report;
}

PigeonholeResult pigeonhole_check(const MeasureSemigroup& s, const std::vector<Element>& block,
                                  const std::vector<Element>& set,
                                  const std::vector<Element>& witnesses) {
    if (block.empty()) throw argument_error("pigeonhole_check: empty block");
    if (witnesses.empty()) throw argument_error("pigeonhole_check: no witnesses");
    std::set<Element> members(set.begin(), set.end());

    PigeonholeResult result;
    result.decomposition.assign(witnesses.size(), {});
    std::vector<bool> covered(block.size(), false);
    for (std::size_t j = 0; j < witnesses.size(); ++j) {
        for (std::size_t i = 0; i < block.size(); ++i) {
            if (members.count(s.compose(block[i], witnesses[j])) > 0) {
                result.decomposition[j].push_back(block[i]);
                covered[i] = true;
            }
        }
    }
    for (std::size_t i = 0; i < block.size(); ++i) {
        if (!covered[i]) {
            throw invariant_violation(
                "pigeonhole_check: witnesses do not cover the block (element " + block[i].str() +
                " misses the set; likely a truncated scan)");
        }
    }
    std::size_t best = 0;
    for (std::size_t j = 1; j < witnesses.size(); ++j) {
        if (result.decomposition[j].size() > result.decomposition[best].size()) best = j;
    }
    const double bound = static_cast<double>(block.size()) / static_cast<double>(witnesses.size());
    if (static_cast<double>(result.decomposition[best].size()) < bound) {
        throw invariant_violation("pigeonhole_check: no witness reaches mu(B)/r");
    }
    result.witness_index = best;
    result.ratio = static_cast<double>(result.decomposition[best].size()) /
                   static_cast<double>(block.size());
    return result;
}

ProductBoundCheck product_lower_bound(const TraceState& omega, const AlgebraElement& b, int k,
                                      double eps, const std::vector<AlgebraElement>& c,
                                      double tol) {
    if (k < 0) throw argument_error("product_lower_bound: k must be >= 0");
    if (!is_positive(b, tol)) throw argument_error("product_lower_bound: b is not positive");
    if (op_norm(b) > 1.0 + tol) throw argument_error("product_lower_bound: b is not a contraction");
    Complex state_b = trace_eval(omega, b);
    if (!(state_b.real() > 0.0)) {
        throw argument_error("product_lower_bound: omega(b) must be positive");
    }
    if (c.size() != static_cast<std::size_t>(k) + 1) {
        throw argument_error("product_lower_bound: need exactly k+1 factors");
    }

    ProductBoundCheck check;
    check.power_trace = trace_eval(omega, b.pow(k + 1)).real();
    if (!(eps > 0.0) || !(eps < check.power_trace / static_cast<double>(k + 1))) {
        throw argument_error(
            "product_lower_bound: eps must lie in (0, omega(b^{k+1})/(k+1))");
    }
    for (std::size_t j = 0; j < c.size(); ++j) {
        if (op_norm(c[j]) > 1.0 + tol) {
            throw argument_error("product_lower_bound: factor " + std::to_string(j) +
                                 " is not a contraction");
        }
        if (!(gns_seminorm(omega, c[j] - b) < eps)) {
            throw argument_error("product_lower_bound: factor " + std::to_string(j) +
                                 " is not eps-close to b");
        }
    }
    check.bound = check.power_trace - static_cast<double>(k + 1) * eps;

    AlgebraElement product = c.front();
    for (std::size_t j = 1; j < c.size(); ++j) product = product * c[j];
    check.product_abs = std::abs(trace_eval(omega, product));
    check.holds = check.product_abs > check.bound;
    return check;
}

double default_recurrence_epsilon(const TraceState& omega, const AlgebraElement& b, int k) {
    if (k < 0) throw argument_error("default_recurrence_epsilon: k must be >= 0");
    double power_trace = trace_eval(omega, b.pow(k + 1)).real();
    if (!(power_trace > 0.0)) {
        throw argument_error("default_recurrence_epsilon: omega(b^{k+1}) must be positive");
    }
    return power_trace / (2.0 * static_cast<double>(k + 1));
}

Complex correlation(const DynamicalSystem& sys, const AlgebraElement& a,
                    const std::vector<std::int64_t>& exponents, const Element& g) {
    validate_exponents(exponents);
    AlgebraElement product = sys.apply_power(g, exponents.front(), a);
    for (std::size_t j = 1; j < exponents.size(); ++j) {
        product = product * sys.apply_power(g, exponents[j], a);
    }
    return trace_eval(sys.state(), product);
}

std::string AverageTrace::to_csv() const {
    std::ostringstream out;
    out << "N,average,running_infimum\n";
    for (const auto& row : rows) {
        out << row.window_n << ',' << csv::float17(row.average) << ','
            << csv::float17(row.running_infimum) << '\n';
    }
    return out.str();
}

namespace {

AverageTrace average_core(const DynamicalSystem& sys, const AlgebraElement& a,
                          const std::vector<std::int64_t>& exponents,
                          const std::vector<std::int64_t>& window_sizes) {
    validate_exponents(exponents);
    if (window_sizes.empty()) throw argument_error("szemeredi_average: no window sizes");
    for (std::int64_t n : window_sizes) {
        if (n < 1) throw argument_error("szemeredi_average: window sizes must be >= 1");
    }
    AverageTrace trace;
    std::map<Element, double> memo;
    for (std::int64_t n : window_sizes) {
        FolnerWindow window = folner_window(sys.semigroup(), n);
        double sum = 0.0;
        for (const auto& g : window.elements) {
            auto it = memo.find(g);
            if (it == memo.end()) {
                it = memo.emplace(g, std::abs(correlation(sys, a, exponents, g))).first;
            }
            sum += it->second;
        }
        trace.rows.push_back({n, sum / static_cast<double>(window.measure()), 0.0});
    }
    double inf = trace.rows.back().average;
    for (std::size_t i = trace.rows.size(); i-- > 0;) {
        inf = std::min(inf, trace.rows[i].average);
        trace.rows[i].running_infimum = inf;
    }
    return trace;
}

}  // namespace

AverageTrace szemeredi_average(const DynamicalSystem& sys, const AlgebraElement& a,
                               const std::vector<std::int64_t>& exponents,
                               const std::vector<std::int64_t>& window_sizes) {
    return average_core(sys, a, exponents, window_sizes);
}

AverageTrace szemeredi_average(const DynamicalSystem& sys, const AlgebraElement& a,
                               const std::vector<std::int64_t>& exponents,
                               const std::vector<std::int64_t>& window_sizes,
                               const std::vector<Element>& recurrence_members,
                               const FolnerWindow& scan, std::size_t max_r) {
    AverageTrace trace = average_core(sys, a, exponents, window_sizes);
    SyndeticityReport synd = syndeticity(sys.semigroup(), recurrence_members, scan, max_r);
    if (!synd.found) return trace;

    AverageTrace::TranslatedTrace tt;
    tt.witnesses = synd.witnesses;
    tt.witness_bound = 1.0 / static_cast<double>(synd.r);
    std::set<Element> members(recurrence_members.begin(), recurrence_members.end());
    for (std::int64_t n : window_sizes) {
        FolnerWindow window = folner_window(sys.semigroup(), n);
        std::size_t best_j = 0;
        std::int64_t best_count = -1;
        for (std::size_t j = 0; j < synd.witnesses.size(); ++j) {
            std::int64_t count = 0;
            for (const auto& u : window.elements) {
                if (members.count(sys.semigroup().compose(u, synd.witnesses[j])) > 0) ++count;
            }
            if (count > best_count) {
                best_count = count;
                best_j = j;
            }
        }
        tt.chosen_translates.push_back(synd.witnesses[best_j]);
        tt.densities.push_back(static_cast<double>(best_count) /
                               static_cast<double>(window.measure()));
    }
    tt.density_infima = tt.densities;
    for (std::size_t i = tt.density_infima.size() - 1; i-- > 0;) {
        tt.density_infima[i] = std::min(tt.density_infima[i], tt.density_infima[i + 1]);
    }
    trace.translated = std::move(tt);
    return trace;
}

double furstenberg_average(const DynamicalSystem& sys, const std::vector<int>& subset, int k,
                           std::int64_t n_max) {
    if (!sys.is_classical()) {
        throw argument_error("furstenberg_average: system must be classical");
    }
    if (k < 0) throw argument_error("furstenberg_average: k must be >= 0");
    if (n_max < 1) throw argument_error("furstenberg_average: n_max must be >= 1");
    const auto& perm = sys.permutation();
    const auto& weights = sys.point_weights();
    const int n_points = static_cast<int>(perm.size());
    if (subset.empty()) throw argument_error("furstenberg_average: empty subset");
    std::vector<bool> in_subset(static_cast<std::size_t>(n_points), false);
    for (int x : subset) {
        if (x < 0 || x >= n_points) {
            throw argument_error("furstenberg_average: subset point out of range");
        }
        in_subset[static_cast<std::size_t>(x)] = true;
    }

    // iterate T^n incrementally; inner loop walks (T^n)^j
    std::vector<int> tn(perm.size());
    for (std::size_t i = 0; i < perm.size(); ++i) tn[i] = static_cast<int>(i);
    double total = 0.0;
    for (std::int64_t n = 1; n <= n_max; ++n) {
        for (std::size_t i = 0; i < perm.size(); ++i) tn[i] = perm[static_cast<std::size_t>(tn[i])];
        double mass = 0.0;
        for (int x = 0; x < n_points; ++x) {
            if (!in_subset[static_cast<std::size_t>(x)]) continue;
            int y = x;
            bool all_in = true;
            for (int j = 1; j <= k; ++j) {
                y = tn[static_cast<std::size_t>(y)];
                if (!in_subset[static_cast<std::size_t>(y)]) {
                    all_in = false;
                    break;
                }
            }
            if (all_in) mass += weights[static_cast<std::size_t>(x)];
        }
        total += mass;
    }
    return total / static_cast<double>(n_max);
}

}  // namespace cstar
