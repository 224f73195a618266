#include "cstar/sampling.hpp"

#include <cmath>

namespace cstar {

AlgebraElement random_element(const std::vector<int>& dims, std::mt19937_64& rng) {
    std::normal_distribution<double> gauss(0.0, 1.0);
    std::vector<Matrix> blocks;
    blocks.reserve(dims.size());
    for (int d : dims) {
        Matrix m(d, d);
        for (int r = 0; r < d; ++r) {
            for (int c = 0; c < d; ++c) {
                m(r, c) = Complex(gauss(rng), gauss(rng));
            }
        }
        blocks.push_back(std::move(m));
    }
    return AlgebraElement(std::move(blocks));
}

AlgebraElement random_hermitian(const std::vector<int>& dims, std::mt19937_64& rng) {
    AlgebraElement g = random_element(dims, rng);
    AlgebraElement out = g + g.adjoint();
    return 0.5 * out;
}

AlgebraElement random_unitary(const std::vector<int>& dims, std::mt19937_64& rng) {
    AlgebraElement g = random_element(dims, rng);
    std::vector<Matrix> blocks;
    blocks.reserve(g.block_count());
    for (const auto& b : g.blocks()) {
        Eigen::HouseholderQR<Matrix> qr(b);
        Matrix q = qr.householderQ();
        blocks.push_back(std::move(q));
    }
    return AlgebraElement(std::move(blocks));
}

AlgebraElement random_positive_contraction(const std::vector<int>& dims, std::mt19937_64& rng) {
    for (int attempt = 0; attempt < 64; ++attempt) {
        AlgebraElement h = random_hermitian(dims, rng);
        double norm = op_norm(h);
        if (norm < 1e-12) continue;
        AlgebraElement b = 0.5 * ((1.0 / norm) * h + AlgebraElement::identity(dims));
        // reject near-zero draws so the state sees genuine mass
        if (trace_eval(TraceState::normalized_trace(dims), b).real() > 1e-3) return b;
    }
    throw invariant_violation("random_positive_contraction: sampler failed to produce mass");
}

Element random_semigroup_element(const MeasureSemigroup& s, std::mt19937_64& rng,
                                 std::int64_t range) {
    if (range < 1) throw argument_error("random_semigroup_element: range must be >= 1");
    switch (s.kind()) {
        case SemigroupKind::Naturals: {
            std::uniform_int_distribution<std::int64_t> dist(1, range);
            return Element(dist(rng));
        }
        case SemigroupKind::Integers: {
            std::uniform_int_distribution<std::int64_t> dist(-range, range);
            return Element(dist(rng));
        }
        case SemigroupKind::IntegerLattice: {
            std::uniform_int_distribution<std::int64_t> dist(-range, range);
            std::vector<std::int64_t> coords(static_cast<std::size_t>(s.dim()));
            for (auto& c : coords) c = dist(rng);
            return Element(coords);
        }
        case SemigroupKind::CyclicGroup: {
            std::uniform_int_distribution<std::int64_t> dist(0, s.modulus() - 1);
            return Element(dist(rng));
        }
    }
    throw argument_error("random_semigroup_element: unknown semigroup kind");
}

}  // namespace cstar
