#include "cstar/dynamics.hpp"

#include <algorithm>
#include <cmath>
#include <numbers>
#include <sstream>

#include "cstar/csv.hpp"
#include "cstar/sampling.hpp"

namespace cstar {

namespace {

std::int64_t mod_nonneg(std::int64_t v, std::int64_t n) {
    std::int64_t r = v % n;
    return r < 0 ? r + n : r;
}

// q-th roots of unity; phases are reduced modulo q before the table lookup
// so no large trigonometric arguments ever occur.
std::vector<Complex> root_table(std::int64_t q) {
    std::vector<Complex> roots(static_cast<std::size_t>(q));
    for (std::int64_t j = 0; j < q; ++j) {
        double angle = 2.0 * std::numbers::pi * static_cast<double>(j) / static_cast<double>(q);
        roots[static_cast<std::size_t>(j)] = std::polar(1.0, angle);
    }
    return roots;
}

std::vector<int> perm_compose(const std::vector<int>& f, const std::vector<int>& g) {
    // (f o g)(x) = f(g(x))
    std::vector<int> out(f.size());
    for (std::size_t x = 0; x < f.size(); ++x) {
        out[x] = f[static_cast<std::size_t>(g[x])];
    }
    return out;
}

std::vector<int> perm_identity(std::size_t n) {
    std::vector<int> out(n);
    for (std::size_t i = 0; i < n; ++i) out[i] = static_cast<int>(i);
    return out;
}

std::vector<int> perm_pow(const std::vector<int>& perm, const std::vector<int>& inverse,
                          std::int64_t m) {
    const std::vector<int>& base = m >= 0 ? perm : inverse;
    std::uint64_t e = static_cast<std::uint64_t>(m >= 0 ? m : -m);
    std::vector<int> result = perm_identity(perm.size());
    std::vector<int> b = base;
    while (e > 0) {
        if (e & 1ULL) result = perm_compose(result, b);
        e >>= 1ULL;
        if (e > 0) b = perm_compose(b, b);
    }
    return result;
}

Matrix matrix_pow(const Matrix& m, const Matrix& m_inverse, std::int64_t e) {
    const Matrix& base = e >= 0 ? m : m_inverse;
    std::uint64_t n = static_cast<std::uint64_t>(e >= 0 ? e : -e);
    Matrix result = Matrix::Identity(m.rows(), m.cols());
    Matrix b = base;
    while (n > 0) {
        if (n & 1ULL) result = result * b;
        n >>= 1ULL;
        if (n > 0) b = b * b;
    }
    return result;
}

}  // namespace

void DynamicalSystem::require_shape(const AlgebraElement& a) const {
    if (a.dims() != dims_) {
        throw structural_error("element does not live in this system's algebra");
    }
}

AlgebraElement DynamicalSystem::apply(const Element& g, const AlgebraElement& a) const {
    if (!semigroup_.contains(g)) {
        throw argument_error("apply: element outside the acting semigroup");
    }
    require_shape(a);
    switch (action_) {
        case ActionKind::RotationConjugation: {
            const std::int64_t n = g.scalar();
            const std::int64_t r = mod_nonneg(n, q_);
            const auto& in = a.block(0);
            Matrix out(q_, q_);
            for (std::int64_t i = 0; i < q_; ++i) {
                for (std::int64_t j = 0; j < q_; ++j) {
                    out(i, j) = in(mod_nonneg(i - r, q_), mod_nonneg(j - r, q_));
                }
            }
            if (scale_ != 1.0) out *= std::pow(scale_, static_cast<double>(n));
            return AlgebraElement(std::move(out));
        }
        case ActionKind::ClassicalComposition: {
            std::vector<int> tm = perm_pow(perm_, perm_inverse_, g.scalar());
            std::vector<Matrix> blocks(perm_.size());
            for (std::size_t x = 0; x < perm_.size(); ++x) {
                blocks[x] = a.block(static_cast<std::size_t>(tm[x]));
            }
            return AlgebraElement(std::move(blocks));
        }
        case ActionKind::LatticeConjugation: {
            const int d = semigroup_.dim();
            Matrix w = Matrix::Identity(dims_[0], dims_[0]);
            Matrix w_inv = Matrix::Identity(dims_[0], dims_[0]);
            for (int i = 0; i < d; ++i) {
                const auto idx = static_cast<std::size_t>(i);
                w = w * matrix_pow(generators_[idx], generator_inverses_[idx], g[i]);
            }
            for (int i = d - 1; i >= 0; --i) {
                const auto idx = static_cast<std::size_t>(i);
                w_inv = w_inv * matrix_pow(generators_[idx], generator_inverses_[idx], -g[i]);
            }
            // w_inv assembled in reverse order is the exact algebraic inverse
            return AlgebraElement(Matrix(w_inv * a.block(0) * w));
        }
    }
    throw argument_error("apply: unknown action kind");
}

AlgebraElement DynamicalSystem::apply_power(const Element& g, std::int64_t m,
                                            const AlgebraElement& a) const {
    if (m < 0) throw argument_error("apply_power: exponent must be >= 0");
    if (m == 0) {
        if (!semigroup_.contains(g)) {
            throw argument_error("apply_power: element outside the acting semigroup");
        }
        require_shape(a);
        return a;
    }
    return apply(semigroup_.power(g, m), a);
}

bool DynamicalSystem::has_element(const std::string& name) const {
    return named_.count(name) > 0;
}

const AlgebraElement& DynamicalSystem::element(const std::string& name) const {
    auto it = named_.find(name);
    if (it == named_.end()) throw argument_error("unknown named element: " + name);
    return it->second;
}

std::vector<std::string> DynamicalSystem::element_names() const {
    std::vector<std::string> out;
    out.reserve(named_.size());
    for (const auto& [name, value] : named_) out.push_back(name);
    return out;
}

const std::vector<int>& DynamicalSystem::permutation() const {
    if (!is_classical()) throw argument_error("permutation() is defined for classical systems only");
    return perm_;
}

const std::vector<double>& DynamicalSystem::point_weights() const {
    if (!is_classical()) throw argument_error("point_weights() is defined for classical systems only");
    return weights_;
}

DynamicalSystem build_rotation_system(std::int64_t p, std::int64_t q,
                                      const MeasureSemigroup& semigroup, double scale) {
    if (q < 1) throw argument_error("rotation system needs q >= 1");
    if (semigroup.kind() != SemigroupKind::Naturals && semigroup.kind() != SemigroupKind::Integers) {
        throw argument_error("rotation systems act over the naturals or the integers");
    }
    if (!(scale > 0.0)) throw argument_error("rotation scale must be positive");

    std::vector<int> dims{static_cast<int>(q)};
    DynamicalSystem sys(dims, TraceState::normalized_trace(dims), semigroup,
                        DynamicalSystem::ActionKind::RotationConjugation);
    sys.q_ = q;
    sys.p_ = p;
    sys.scale_ = scale;

    const auto roots = root_table(q);
    Matrix u = Matrix::Zero(q, q);
    for (std::int64_t k = 0; k < q; ++k) {
        u(mod_nonneg(k - 1, q), k) = Complex(1.0, 0.0);
    }
    Matrix v = Matrix::Zero(q, q);
    for (std::int64_t k = 0; k < q; ++k) {
        v(k, k) = roots[static_cast<std::size_t>(mod_nonneg(k * p, q))];
    }

    AlgebraElement eu{Matrix(u)};
    AlgebraElement ev{Matrix(v)};
    const Complex phase = roots[static_cast<std::size_t>(mod_nonneg(p, q))];
    if (op_norm(eu * ev - phase * (ev * eu)) > 1e-12) {
        throw invariant_violation("rotation realization lost the commutation phase");
    }
    sys.named_.emplace("I", AlgebraElement::identity(dims));
    sys.named_.emplace("U", std::move(eu));
    sys.named_.emplace("V", std::move(ev));
    return sys;
}

DynamicalSystem build_classical_system(int n, const std::vector<int>& permutation,
                                       const std::vector<double>& weights,
                                       const MeasureSemigroup& semigroup) {
    if (n < 1) throw argument_error("classical system needs n >= 1 points");
    if (permutation.size() != static_cast<std::size_t>(n)) {
        throw argument_error("permutation must list all n points");
    }
    std::vector<int> seen(static_cast<std::size_t>(n), 0);
    for (int v : permutation) {
        if (v < 0 || v >= n || seen[static_cast<std::size_t>(v)]++) {
            throw argument_error("permutation is not a bijection of {0..n-1}");
        }
    }
    if (weights.size() != static_cast<std::size_t>(n)) {
        throw argument_error("weights must list all n points");
    }
    double total = 0.0;
    for (double w : weights) {
        if (w < 0.0) throw argument_error("weights must be nonnegative");
        total += w;
    }
    if (std::abs(total - 1.0) > 1e-9) throw argument_error("weights must sum to 1");
    for (int x = 0; x < n; ++x) {
        if (std::abs(weights[static_cast<std::size_t>(x)] -
                     weights[static_cast<std::size_t>(permutation[static_cast<std::size_t>(x)])]) >
            1e-9) {
            throw argument_error("weights are not invariant under the permutation");
        }
    }

    std::vector<int> inverse(static_cast<std::size_t>(n));
    for (int x = 0; x < n; ++x) {
        inverse[static_cast<std::size_t>(permutation[static_cast<std::size_t>(x)])] = x;
    }

    switch (semigroup.kind()) {
        case SemigroupKind::Naturals:
        case SemigroupKind::Integers:
            break;
        case SemigroupKind::CyclicGroup: {
            std::vector<int> tc = perm_pow(permutation, inverse, semigroup.modulus());
            if (tc != perm_identity(static_cast<std::size_t>(n))) {
                throw argument_error("cyclic semigroup order does not annihilate the permutation");
            }
            break;
        }
        default:
            throw argument_error("classical systems act over scalar semigroups");
    }

    std::vector<int> dims(static_cast<std::size_t>(n), 1);
    DynamicalSystem sys(dims, TraceState(dims, weights), semigroup,
                        DynamicalSystem::ActionKind::ClassicalComposition);
    sys.perm_ = permutation;
    sys.perm_inverse_ = std::move(inverse);
    sys.weights_ = weights;

    sys.named_.emplace("I", AlgebraElement::identity(dims));
    for (int x = 0; x < n; ++x) {
        AlgebraElement chi = AlgebraElement::zeros(dims);
        chi.block(static_cast<std::size_t>(x))(0, 0) = Complex(1.0, 0.0);
        sys.named_.emplace("chi_" + std::to_string(x), std::move(chi));
    }
    return sys;
}

DynamicalSystem build_lattice_system(const std::vector<Matrix>& generators) {
    if (generators.empty() || generators.size() > Element::kMaxLatticeDim) {
        throw argument_error("lattice system needs between 1 and 4 generators");
    }
    const auto d = static_cast<int>(generators.size());
    const auto q = generators.front().rows();
    if (q < 1) throw argument_error("lattice generators must be nonempty");
    std::vector<Matrix> inverses;
    inverses.reserve(generators.size());
    for (const auto& g : generators) {
        if (g.rows() != q || g.cols() != q) {
            throw structural_error("lattice generators must be square of equal dimension");
        }
        Eigen::FullPivLU<Matrix> lu(g);
        if (!lu.isInvertible()) throw argument_error("lattice generator is not invertible");
        inverses.push_back(lu.inverse());
    }

    std::vector<int> dims{static_cast<int>(q)};
    DynamicalSystem sys(dims, TraceState::normalized_trace(dims),
                        MeasureSemigroup::integer_lattice(d),
                        DynamicalSystem::ActionKind::LatticeConjugation);
    sys.generators_ = generators;
    sys.generator_inverses_ = std::move(inverses);

    sys.named_.emplace("I", AlgebraElement::identity(dims));
    for (int i = 0; i < d; ++i) {
        sys.named_.emplace("U" + std::to_string(i + 1),
                           AlgebraElement(Matrix(generators[static_cast<std::size_t>(i)])));
    }
    return sys;
}

bool VerificationReport::passed() const {
    return homomorphism <= tol && omega_isometry <= tol && norm_contraction <= tol &&
           star_preservation <= tol && traciality <= tol;
}

std::string VerificationReport::to_csv() const {
    std::ostringstream out;
    out << "axiom,max_violation,pass\n";
    auto row = [&](const char* axiom, double value) {
        out << axiom << ',' << csv::float17(value) << ',' << csv::boolean(value <= tol) << '\n';
    };
    row("homomorphism", homomorphism);
    row("omega_isometry", omega_isometry);
    row("norm_contraction", norm_contraction);
    row("star_preservation", star_preservation);
    row("traciality", traciality);
    return out.str();
}

VerificationReport verify_system(const DynamicalSystem& sys, int sample_count, double tol,
                                 std::uint64_t seed) {
    if (sample_count < 1) throw argument_error("verify_system: sample_count must be >= 1");
    std::mt19937_64 rng(seed);
    const auto& dims = sys.dims();
    const auto& omega = sys.state();
    const auto& s = sys.semigroup();

    VerificationReport report;
    report.tol = tol;
    report.samples = sample_count;
    for (int i = 0; i < sample_count; ++i) {
        AlgebraElement a = random_element(dims, rng);
        AlgebraElement b = random_element(dims, rng);
        Element g = random_semigroup_element(s, rng, 10);
        Element h = random_semigroup_element(s, rng, 10);

        AlgebraElement tg_th = sys.apply(g, sys.apply(h, a));
        AlgebraElement tgh = sys.apply(s.compose(g, h), a);
        report.homomorphism = std::max(report.homomorphism, op_norm(tg_th - tgh));

        AlgebraElement tg = sys.apply(g, a);
        report.omega_isometry = std::max(
            report.omega_isometry, std::abs(gns_seminorm(omega, tg) - gns_seminorm(omega, a)));
        report.norm_contraction =
            std::max(report.norm_contraction, op_norm(tg) - op_norm(a));
        report.star_preservation = std::max(
            report.star_preservation, op_norm(sys.apply(g, a.adjoint()) - tg.adjoint()));
        report.traciality = std::max(
            report.traciality, std::abs(trace_eval(omega, a * b) - trace_eval(omega, b * a)));
    }
    report.norm_contraction = std::max(0.0, report.norm_contraction);
    return report;
}

}  // namespace cstar
