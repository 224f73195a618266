#pragma once

#include <Eigen/Dense>

#include <complex>
#include <cstddef>
#include <vector>

#include "cstar/errors.hpp"

namespace cstar {

using Complex = std::complex<double>;
using Matrix = Eigen::MatrixXcd;

// Default tolerance for numerical checks; every check that uses it also
// accepts an explicit tolerance.
inline constexpr double kDefaultTol = 1e-9;

// Element of a finite-dimensional C*-algebra, realized as a direct sum of
// full complex matrix blocks. Block order is part of the identity; arithmetic
// is blockwise and requires matching shapes.
class AlgebraElement {
public:
    AlgebraElement() = default;
    explicit AlgebraElement(std::vector<Matrix> blocks);
    explicit AlgebraElement(Matrix block);

    static AlgebraElement identity(const std::vector<int>& dims);
    static AlgebraElement zeros(const std::vector<int>& dims);

    const std::vector<Matrix>& blocks() const { return blocks_; }
    const Matrix& block(std::size_t i) const { return blocks_[i]; }
    Matrix& block(std::size_t i) { return blocks_[i]; }
    std::size_t block_count() const { return blocks_.size(); }
    std::vector<int> dims() const;
    bool shape_matches(const AlgebraElement& other) const;

    AlgebraElement adjoint() const;

    // Non-negative integer power; pow(0) is the identity of the same shape.
    AlgebraElement pow(int exponent) const;

    AlgebraElement& operator+=(const AlgebraElement& rhs);
    AlgebraElement& operator-=(const AlgebraElement& rhs);
    AlgebraElement& operator*=(const Complex& s);

private:
    std::vector<Matrix> blocks_;
};

AlgebraElement operator+(AlgebraElement lhs, const AlgebraElement& rhs);
AlgebraElement operator-(AlgebraElement lhs, const AlgebraElement& rhs);
AlgebraElement operator*(const AlgebraElement& lhs, const AlgebraElement& rhs);
AlgebraElement operator*(const Complex& s, AlgebraElement rhs);
AlgebraElement operator*(double s, AlgebraElement rhs);

// Positive tracial functional: one nonnegative weight per block, applied to
// the unnormalized block trace. Normalized so the identity evaluates to 1.
class TraceState {
public:
    TraceState(std::vector<int> dims, std::vector<double> weights);

    // tr(.) / (total dimension): the unique tracial state on a full matrix
    // block, uniform across blocks.
    static TraceState normalized_trace(const std::vector<int>& dims);

    const std::vector<int>& dims() const { return dims_; }
    const std::vector<double>& weights() const { return weights_; }

private:
    std::vector<int> dims_;
    std::vector<double> weights_;
};

// Operator norm: largest singular value across blocks, computed from the
// Hermitian eigendecomposition of a*a.
double op_norm(const AlgebraElement& a);

// True iff a is Hermitian within tol and the smallest eigenvalue of its
// Hermitian part is >= -tol.
bool is_positive(const AlgebraElement& a, double tol = kDefaultTol);

// omega(a): weighted sum of unnormalized block traces. Linear in a.
Complex trace_eval(const TraceState& omega, const AlgebraElement& a);

// GNS seminorm sqrt(max(0, Re omega(a* a))). A genuine norm when all weights
// are strictly positive.
double gns_seminorm(const TraceState& omega, const AlgebraElement& a);

// Checks |omega(abc)| <= op_norm(a) * gns_seminorm(omega, b) * op_norm(c) + tol,
// the tracial mixed bound used throughout the product estimates.
bool verify_trace_inequality(const TraceState& omega, const AlgebraElement& a,
                             const AlgebraElement& b, const AlgebraElement& c,
                             double tol = kDefaultTol);

}  // namespace cstar
