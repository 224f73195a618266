#include "cstar/compactness.hpp"

#include <algorithm>
#include <bit>
#include <cmath>
#include <sstream>

#include "cstar/csv.hpp"

namespace cstar {

namespace {

constexpr std::size_t kMaxExactPoints = 25;
constexpr double kDuplicateTol = 1e-9;

// Max-cardinality independent set over <= 25 vertices, branch and bound.
std::size_t max_independent_set(const std::vector<std::uint32_t>& adjacency,
                                std::uint32_t candidates, std::size_t chosen,
                                std::uint32_t chosen_mask, std::size_t& best,
                                std::uint32_t& best_mask) {
    if (candidates == 0) {
        if (chosen > best) {
            best = chosen;
            best_mask = chosen_mask;
        }
        return chosen;
    }
    if (chosen + static_cast<std::size_t>(std::popcount(candidates)) <= best) return chosen;
    const int v = std::countr_zero(candidates);
    const std::uint32_t bit = 1u << v;
    // take v
    max_independent_set(adjacency, candidates & ~bit & ~adjacency[static_cast<std::size_t>(v)],
                        chosen + 1, chosen_mask | bit, best, best_mask);
    // skip v
    max_independent_set(adjacency, candidates & ~bit, chosen, chosen_mask, best, best_mask);
    return best;
}

}  // namespace

double PointCloud::distance(const AlgebraElement& a, const AlgebraElement& b) const {
    switch (metric) {
        case CloudMetric::GnsSeminorm:
            return gns_seminorm(state, a - b);
        case CloudMetric::OperatorNorm:
            return op_norm(a - b);
    }
    throw argument_error("unknown cloud metric");
}

PointCloud orbit_sample(const DynamicalSystem& sys, const AlgebraElement& a,
                        const FolnerWindow& window, CloudMetric metric) {
    if (window.elements.empty()) throw argument_error("orbit_sample: empty window");
    PointCloud cloud{{}, sys.state(), metric};
    cloud.points.reserve(window.elements.size());
    for (const auto& g : window.elements) {
        cloud.points.push_back(sys.apply(g, a));
    }
    return cloud;
}

EpsilonNet greedy_eps_net(const PointCloud& cloud, double eps) {
    if (!(eps > 0.0)) throw argument_error("greedy_eps_net: eps must be positive");
    EpsilonNet net;
    net.radius = eps;
    for (std::size_t i = 0; i < cloud.points.size(); ++i) {
        bool covered = false;
        for (const auto& c : net.centers) {
            if (cloud.distance(cloud.points[i], c) < eps) {
                covered = true;
                break;
            }
        }
        if (!covered) {
            net.centers.push_back(cloud.points[i]);
            net.center_indices.push_back(i);
        }
    }
    net.covering_certified = true;
    return net;
}

std::vector<AlgebraElement> max_separated(const PointCloud& cloud, double eps,
                                          SeparationMode mode) {
    if (!(eps > 0.0)) throw argument_error("max_separated: eps must be positive");
    if (mode == SeparationMode::Greedy) {
        return greedy_eps_net(cloud, eps).centers;
    }
    // distinct-point quotient
    std::vector<AlgebraElement> distinct;
    for (const auto& p : cloud.points) {
        bool dup = false;
        for (const auto& d : distinct) {
            if (cloud.distance(p, d) <= kDuplicateTol) {
                dup = true;
                break;
            }
        }
        if (!dup) distinct.push_back(p);
    }
    if (distinct.size() > kMaxExactPoints) {
        throw capacity_error("max_separated: exact mode is limited to 25 distinct points");
    }
    const std::size_t m = distinct.size();
    std::vector<std::uint32_t> adjacency(m, 0);
    for (std::size_t i = 0; i < m; ++i) {
        for (std::size_t j = i + 1; j < m; ++j) {
            if (cloud.distance(distinct[i], distinct[j]) < eps) {
                adjacency[i] |= 1u << j;
                adjacency[j] |= 1u << i;
            }
        }
    }
    std::size_t best = 0;
    std::uint32_t best_mask = 0;
    const std::uint32_t all = m == 32 ? ~0u : ((1u << m) - 1u);
    max_independent_set(adjacency, all, 0, 0, best, best_mask);
    std::vector<AlgebraElement> out;
    out.reserve(best);
    for (std::size_t i = 0; i < m; ++i) {
        if (best_mask & (1u << i)) out.push_back(distinct[i]);
    }
    return out;
}

bool CertificateReport::all_stabilized() const {
    for (const auto& [eps, ok] : stabilized) {
        if (!ok) return false;
    }
    return true;
}

std::string CertificateReport::to_csv() const {
    std::ostringstream out;
    out << "epsilon,window_N,net_size,stabilized\n";
    for (const auto& row : rows) {
        out << csv::float17(row.epsilon) << ',' << row.window_n << ',' << row.net_size << ','
            << csv::boolean(stabilized.at(row.epsilon)) << '\n';
    }
    return out.str();
}

CertificateReport compactness_certificate(const DynamicalSystem& sys, const AlgebraElement& a,
                                          const std::vector<double>& epsilons,
                                          const std::vector<std::int64_t>& window_sizes,
                                          CloudMetric metric) {
    if (epsilons.empty()) throw argument_error("compactness_certificate: no epsilons");
    for (double eps : epsilons) {
        if (!(eps > 0.0)) throw argument_error("compactness_certificate: eps must be positive");
    }
    if (window_sizes.empty()) throw argument_error("compactness_certificate: no window sizes");
    for (std::size_t i = 1; i < window_sizes.size(); ++i) {
        if (window_sizes[i] <= window_sizes[i - 1]) {
            throw argument_error("compactness_certificate: window sizes must be increasing");
        }
    }

    CertificateReport report;
    std::vector<PointCloud> clouds;
    clouds.reserve(window_sizes.size());
    for (std::int64_t n : window_sizes) {
        clouds.push_back(orbit_sample(sys, a, folner_window(sys.semigroup(), n), metric));
    }
    for (double eps : epsilons) {
        std::vector<std::size_t> sizes;
        sizes.reserve(window_sizes.size());
        for (std::size_t w = 0; w < window_sizes.size(); ++w) {
            std::size_t size = greedy_eps_net(clouds[w], eps).centers.size();
            sizes.push_back(size);
            report.rows.push_back({eps, window_sizes[w], size});
        }
        const std::size_t half = (sizes.size() + 1) / 2;
        bool stable = true;
        for (std::size_t i = sizes.size() - half; i < sizes.size(); ++i) {
            stable = stable && sizes[i] == sizes[sizes.size() - 1];
        }
        report.stabilized[eps] = stable;
    }
    return report;
}

EpsilonNet combine_nets(const EpsilonNet& net_a, const EpsilonNet& net_b, double norm_a,
                        double norm_b) {
    if (net_a.radius != net_b.radius) {
        throw argument_error("combine_nets: the two nets must share one radius");
    }
    if (norm_a < 0.0 || norm_b < 0.0) throw argument_error("combine_nets: norms must be >= 0");
    const double eps = net_a.radius;
    EpsilonNet out;
    out.radius = eps * (norm_a + norm_b + eps);
    out.covering_certified = net_a.covering_certified && net_b.covering_certified;
    out.centers.reserve(net_a.centers.size() * net_b.centers.size());
    for (const auto& ca : net_a.centers) {
        for (const auto& cb : net_b.centers) {
            out.centers.push_back(ca * cb);
        }
    }
    return out;
}

}  // namespace cstar
