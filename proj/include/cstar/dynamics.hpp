#pragma once

#include <cstdint>
#include <map>
#include <string>
#include <vector>

#include "cstar/algebra.hpp"
#include "cstar/semigroup.hpp"

namespace cstar {

// A finite-dimensional system (algebra, state, semigroup action). The action
// is stored as a rule, never as a dense matrix of the map itself:
//  - rotation: tau_n(A) = (U*)^n A U^n on M_q, realized as an exact index
//    shift of matrix entries;
//  - classical: tau_m(f) = f o T^m on the diagonal algebra (n 1x1 blocks);
//  - lattice: conjugation by a product of per-axis generator matrices.
class DynamicalSystem {
public:
    enum class ActionKind { RotationConjugation, ClassicalComposition, LatticeConjugation };

    const std::vector<int>& dims() const { return dims_; }
    const TraceState& state() const { return state_; }
    const MeasureSemigroup& semigroup() const { return semigroup_; }
    ActionKind action_kind() const { return action_; }

    // tau_g(a). Throws argument_error for g outside the acting semigroup and
    // structural_error for shape mismatches.
    AlgebraElement apply(const Element& g, const AlgebraElement& a) const;

    // tau_{g^m}(a) for m >= 0; m = 0 means the identity map by convention
    // (the naturals have no identity element).
    AlgebraElement apply_power(const Element& g, std::int64_t m, const AlgebraElement& a) const;

    bool has_element(const std::string& name) const;
    const AlgebraElement& element(const std::string& name) const;
    std::vector<std::string> element_names() const;

    bool is_classical() const { return action_ == ActionKind::ClassicalComposition; }

    // Classical systems only.
    const std::vector<int>& permutation() const;
    const std::vector<double>& point_weights() const;

    friend DynamicalSystem build_rotation_system(std::int64_t p, std::int64_t q,
                                                 const MeasureSemigroup& semigroup, double scale);
    friend DynamicalSystem build_classical_system(int n, const std::vector<int>& permutation,
                                                  const std::vector<double>& weights,
                                                  const MeasureSemigroup& semigroup);
    friend DynamicalSystem build_lattice_system(const std::vector<Matrix>& generators);

private:
    DynamicalSystem(std::vector<int> dims, TraceState state, MeasureSemigroup semigroup,
                    ActionKind action)
        : dims_(std::move(dims)), state_(std::move(state)), semigroup_(semigroup),
          action_(action) {}

    void require_shape(const AlgebraElement& a) const;

    std::vector<int> dims_;
    TraceState state_;
    MeasureSemigroup semigroup_;
    ActionKind action_;

    // rotation rule
    std::int64_t q_ = 0;
    std::int64_t p_ = 0;
    double scale_ = 1.0;  // fault-injection knob; 1.0 for the genuine system

    // classical rule
    std::vector<int> perm_;
    std::vector<int> perm_inverse_;
    std::vector<double> weights_;

    // lattice rule
    std::vector<Matrix> generators_;
    std::vector<Matrix> generator_inverses_;

    std::map<std::string, AlgebraElement> named_;
};

// Rotation algebra realization on M_q at angle theta = p/q: U the cyclic
// shift with U e_k = e_{(k-1) mod q}, V = diag(e^{2 pi i k theta}), so that
// UV = e^{2 pi i theta} VU and tau_n(V) = e^{-2 pi i n theta} V hold to
// rounding. omega is the normalized matrix trace (the unique tracial state).
// The semigroup must be the naturals or the integers. scale != 1 multiplies
// tau_n by scale^n, deliberately breaking omega-isometry for verifier tests.
DynamicalSystem build_rotation_system(std::int64_t p, std::int64_t q,
                                      const MeasureSemigroup& semigroup, double scale = 1.0);

// Classical system: n atoms with probability weights, evolved by a
// permutation T via tau_m(f) = f o T^m. Weights must be T-invariant or the
// state would not be preserved; violations are rejected. Characteristic
// functions of the atoms are registered as "chi_0".."chi_{n-1}".
// The semigroup may be the naturals, the integers, or a cyclic group whose
// order annihilates T.
DynamicalSystem build_classical_system(int n, const std::vector<int>& permutation,
                                       const std::vector<double>& weights,
                                       const MeasureSemigroup& semigroup);

// Z^d action by conjugation with one invertible generator matrix per axis,
// tau_g(A) = W^{-1} A W with W = G_1^{g_1} ... G_d^{g_d}. Only structure is
// validated here (square, equal dims, invertible, d <= 4); whether the
// generators commute and preserve the state is checked by verify_system,
// not assumed.
DynamicalSystem build_lattice_system(const std::vector<Matrix>& generators);

// Worst observed violation of each axiom over randomized samples.
struct VerificationReport {
    double homomorphism = 0.0;
    double omega_isometry = 0.0;
    double norm_contraction = 0.0;
    double star_preservation = 0.0;
    double traciality = 0.0;
    double tol = kDefaultTol;
    int samples = 0;

    bool passed() const;
    std::string to_csv() const;
};

// Samples random elements and semigroup points and measures the worst
// violation of: tau_g tau_h = tau_{gh}, GNS isometry, operator-norm
// contraction, *-preservation, and traciality of the state.
VerificationReport verify_system(const DynamicalSystem& sys, int sample_count,
                                 double tol = kDefaultTol, std::uint64_t seed = 0x5eedULL);

}  // namespace cstar
