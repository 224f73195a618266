#pragma once

#include <cstdint>
#include <map>
#include <string>
#include <vector>

#include "cstar/algebra.hpp"
#include "cstar/dynamics.hpp"
#include "cstar/semigroup.hpp"

namespace cstar {

enum class CloudMetric { GnsSeminorm, OperatorNorm };

// Finite multiset of algebra elements with a fixed metric. Duplicates are
// retained; orbit order follows window order.
struct PointCloud {
    std::vector<AlgebraElement> points;
    TraceState state;
    CloudMetric metric = CloudMetric::GnsSeminorm;

    double distance(const AlgebraElement& a, const AlgebraElement& b) const;
};

struct EpsilonNet {
    std::vector<AlgebraElement> centers;
    std::vector<std::size_t> center_indices;  // into the source cloud, when applicable
    double radius = 0.0;
    bool covering_certified = false;
};

// {tau_g(a) : g in window}, in window order.
PointCloud orbit_sample(const DynamicalSystem& sys, const AlgebraElement& a,
                        const FolnerWindow& window, CloudMetric metric = CloudMetric::GnsSeminorm);

// Deterministic first-fit scan: a point becomes a center iff it is at
// distance >= eps from every earlier center. The result covers the cloud
// with radius eps by construction.
EpsilonNet greedy_eps_net(const PointCloud& cloud, double eps);

enum class SeparationMode { Greedy, Exact };

// eps-separated subset: greedy reuses the net scan; exact maximizes the
// cardinality over the distinct-point quotient (duplicates merged at 1e-9)
// and refuses more than 25 distinct points.
std::vector<AlgebraElement> max_separated(const PointCloud& cloud, double eps,
                                          SeparationMode mode);

// Net sizes for each (eps, window) pair. "Stabilized" for an eps means the
// size is constant over the last half of the window list; that constancy is
// the finite-sample compactness certificate.
struct CertificateReport {
    struct Row {
        double epsilon;
        std::int64_t window_n;
        std::size_t net_size;
    };
    std::vector<Row> rows;
    std::map<double, bool> stabilized;

    bool all_stabilized() const;
    std::string to_csv() const;
};

CertificateReport compactness_certificate(const DynamicalSystem& sys, const AlgebraElement& a,
                                          const std::vector<double>& epsilons,
                                          const std::vector<std::int64_t>& window_sizes,
                                          CloudMetric metric = CloudMetric::GnsSeminorm);

// Product net: all pairwise center products. For eps-nets of two orbits in
// operator norm, the products cover the product orbit within
// eps * (norm_a + norm_b + eps).
EpsilonNet combine_nets(const EpsilonNet& net_a, const EpsilonNet& net_b, double norm_a,
                        double norm_b);

}  // namespace cstar
