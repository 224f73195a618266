#include "cstar/algebra.hpp"

#include <algorithm>
#include <cmath>
#include <numeric>
#include <string>

namespace cstar {

namespace {

void require_same_shape(const AlgebraElement& a, const AlgebraElement& b, const char* op) {
    if (!a.shape_matches(b)) {
        throw structural_error(std::string(op) + ": block shapes do not match");
    }
}

}  // namespace

AlgebraElement::AlgebraElement(std::vector<Matrix> blocks) : blocks_(std::move(blocks)) {
    if (blocks_.empty()) {
        throw structural_error("algebra element needs at least one block");
    }
    for (const auto& b : blocks_) {
        if (b.rows() != b.cols() || b.rows() == 0) {
            throw structural_error("algebra element blocks must be square and nonempty");
        }
    }
}

AlgebraElement::AlgebraElement(Matrix block) : AlgebraElement(std::vector<Matrix>{std::move(block)}) {}

AlgebraElement AlgebraElement::identity(const std::vector<int>& dims) {
    std::vector<Matrix> blocks;
    blocks.reserve(dims.size());
    for (int d : dims) {
        if (d < 1) throw structural_error("block dimension must be >= 1");
        blocks.push_back(Matrix::Identity(d, d));
    }
    return AlgebraElement(std::move(blocks));
}

AlgebraElement AlgebraElement::zeros(const std::vector<int>& dims) {
    std::vector<Matrix> blocks;
    blocks.reserve(dims.size());
    for (int d : dims) {
        if (d < 1) throw structural_error("block dimension must be >= 1");
        blocks.push_back(Matrix::Zero(d, d));
    }
    return AlgebraElement(std::move(blocks));
}

std::vector<int> AlgebraElement::dims() const {
    std::vector<int> out;
    out.reserve(blocks_.size());
    for (const auto& b : blocks_) out.push_back(static_cast<int>(b.rows()));
    return out;
}

bool AlgebraElement::shape_matches(const AlgebraElement& other) const {
    if (blocks_.size() != other.blocks_.size()) return false;
    for (std::size_t i = 0; i < blocks_.size(); ++i) {
        if (blocks_[i].rows() != other.blocks_[i].rows()) return false;
    }
    return true;
}

AlgebraElement AlgebraElement::adjoint() const {
    AlgebraElement out(*this);
    for (auto& b : out.blocks_) b = b.adjoint().eval();
    return out;
}

AlgebraElement AlgebraElement::pow(int exponent) const {
    if (exponent < 0) throw argument_error("pow: exponent must be >= 0");
    AlgebraElement result = identity(dims());
    AlgebraElement base(*this);
    int e = exponent;
    while (e > 0) {
        if (e & 1) result = result * base;
        e >>= 1;
        if (e > 0) base = base * base;
    }
    return result;
}

AlgebraElement& AlgebraElement::operator+=(const AlgebraElement& rhs) {
    require_same_shape(*this, rhs, "operator+");
    for (std::size_t i = 0; i < blocks_.size(); ++i) blocks_[i] += rhs.blocks_[i];
    return *this;
}

AlgebraElement& AlgebraElement::operator-=(const AlgebraElement& rhs) {
    require_same_shape(*this, rhs, "operator-");
    for (std::size_t i = 0; i < blocks_.size(); ++i) blocks_[i] -= rhs.blocks_[i];
    return *this;
}

AlgebraElement& AlgebraElement::operator*=(const Complex& s) {
    for (auto& b : blocks_) b *= s;
    return *this;
}

AlgebraElement operator+(AlgebraElement lhs, const AlgebraElement& rhs) { return lhs += rhs; }
AlgebraElement operator-(AlgebraElement lhs, const AlgebraElement& rhs) { return lhs -= rhs; }

AlgebraElement operator*(const AlgebraElement& lhs, const AlgebraElement& rhs) {
    require_same_shape(lhs, rhs, "operator*");
    std::vector<Matrix> blocks;
    blocks.reserve(lhs.block_count());
    for (std::size_t i = 0; i < lhs.block_count(); ++i) {
        blocks.push_back(lhs.block(i) * rhs.block(i));
    }
    return AlgebraElement(std::move(blocks));
}

AlgebraElement operator*(const Complex& s, AlgebraElement rhs) { return rhs *= s; }
AlgebraElement operator*(double s, AlgebraElement rhs) { return rhs *= Complex(s, 0.0); }

TraceState::TraceState(std::vector<int> dims, std::vector<double> weights)
    : dims_(std::move(dims)), weights_(std::move(weights)) {
    if (dims_.empty() || dims_.size() != weights_.size()) {
        throw argument_error("trace state needs one weight per block");
    }
    double total = 0.0;
    for (std::size_t i = 0; i < dims_.size(); ++i) {
        if (dims_[i] < 1) throw argument_error("trace state block dimension must be >= 1");
        if (weights_[i] < 0.0) throw argument_error("trace state weights must be nonnegative");
        total += weights_[i] * dims_[i];
    }
    if (std::abs(total - 1.0) > 1e-9) {
        throw argument_error("trace state is not normalized: omega(identity) != 1");
    }
}

TraceState TraceState::normalized_trace(const std::vector<int>& dims) {
    std::int64_t total = 0;
    for (int d : dims) {
        if (d < 1) throw argument_error("block dimension must be >= 1");
        total += d;
    }
    if (total == 0) throw argument_error("normalized trace needs at least one block");
    return TraceState(dims, std::vector<double>(dims.size(), 1.0 / static_cast<double>(total)));
}

double op_norm(const AlgebraElement& a) {
    double best = 0.0;
    for (const auto& b : a.blocks()) {
        Matrix gram = b.adjoint() * b;
        Eigen::SelfAdjointEigenSolver<Matrix> solver(gram, Eigen::EigenvaluesOnly);
        double top = solver.eigenvalues().maxCoeff();
        best = std::max(best, std::sqrt(std::max(0.0, top)));
    }
    return best;
}

bool is_positive(const AlgebraElement& a, double tol) {
    if (op_norm(a - a.adjoint()) > tol) return false;
    for (const auto& b : a.blocks()) {
        Matrix herm = 0.5 * (b + b.adjoint());
        Eigen::SelfAdjointEigenSolver<Matrix> solver(herm, Eigen::EigenvaluesOnly);
        if (solver.eigenvalues().minCoeff() < -tol) return false;
    }
    return true;
}

Complex trace_eval(const TraceState& omega, const AlgebraElement& a) {
    if (a.block_count() != omega.dims().size()) {
        throw structural_error("trace_eval: element does not match the trace state's block layout");
    }
    Complex out(0.0, 0.0);
    for (std::size_t i = 0; i < a.block_count(); ++i) {
        if (a.block(i).rows() != omega.dims()[i]) {
            throw structural_error("trace_eval: block dimension mismatch");
        }
        out += omega.weights()[i] * a.block(i).trace();
    }
    return out;
}

double gns_seminorm(const TraceState& omega, const AlgebraElement& a) {
    Complex val = trace_eval(omega, a.adjoint() * a);
    return std::sqrt(std::max(0.0, val.real()));
}

bool verify_trace_inequality(const TraceState& omega, const AlgebraElement& a,
                             const AlgebraElement& b, const AlgebraElement& c, double tol) {
    double lhs = std::abs(trace_eval(omega, a * b * c));
    double rhs = op_norm(a) * gns_seminorm(omega, b) * op_norm(c);
    return lhs <= rhs + tol;
}

}  // namespace cstar
