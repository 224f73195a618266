#pragma once

#include <array>
#include <cstdint>
#include <functional>
#include <string>
#include <vector>

#include "cstar/errors.hpp"

namespace cstar {

// Element of a built-in discrete semigroup. Scalar kinds (naturals, integers,
// cyclic) use one coordinate; integer lattices use up to kMaxLatticeDim.
// Comparison is lexicographic, which translations by a fixed element preserve
// for the non-cyclic kinds.
class Element {
public:
    static constexpr int kMaxLatticeDim = 4;

    Element() = default;
    explicit Element(std::int64_t v) : dim_(1) { c_[0] = v; }
    Element(std::initializer_list<std::int64_t> coords);
    explicit Element(const std::vector<std::int64_t>& coords);

    int dim() const { return dim_; }
    std::int64_t operator[](int i) const { return c_[static_cast<std::size_t>(i)]; }
    std::int64_t& operator[](int i) { return c_[static_cast<std::size_t>(i)]; }

    // Single coordinate of a scalar element.
    std::int64_t scalar() const;

    bool operator==(const Element& o) const;
    bool operator<(const Element& o) const;

    // "5" for scalars, "1;-2" for lattice points.
    std::string str() const;

private:
    std::array<std::int64_t, kMaxLatticeDim> c_{};
    int dim_ = 1;
};

enum class SemigroupKind { Naturals, Integers, IntegerLattice, CyclicGroup };

// One of the built-in discrete semigroups with counting measure:
// naturals {1,2,...} under addition, integers, integer lattices Z^d (d <= 4),
// and cyclic groups Z_n. All are abelian and cancellative.
class MeasureSemigroup {
public:
    static MeasureSemigroup naturals();
    static MeasureSemigroup integers();
    static MeasureSemigroup integer_lattice(int d);
    static MeasureSemigroup cyclic_group(std::int64_t n);

    SemigroupKind kind() const { return kind_; }
    int dim() const { return dim_; }

    // Cyclic order; only meaningful for CyclicGroup.
    std::int64_t modulus() const { return modulus_; }

    bool contains(const Element& g) const;
    Element compose(const Element& a, const Element& b) const;

    // m-fold product g.g...g, m >= 1. The m = 0 case is a convention of the
    // dynamics layer (identity map), never an identity element here.
    Element power(const Element& g, std::int64_t m) const;

    bool operator==(const MeasureSemigroup& o) const;

private:
    MeasureSemigroup(SemigroupKind kind, int dim, std::int64_t modulus)
        : kind_(kind), dim_(dim), modulus_(modulus) {}

    SemigroupKind kind_;
    int dim_;
    std::int64_t modulus_;
};

// Finite ordered window in a semigroup, tagged with its index in the
// canonical window sequence. Measure is the counting measure.
struct FolnerWindow {
    std::vector<Element> elements;
    std::int64_t index = 0;

    std::int64_t measure() const { return static_cast<std::int64_t>(elements.size()); }
};

// Canonical window of index N: {1..N} for naturals, {-N..N} for integers,
// the box {-N..N}^d for lattices, the whole group for cyclic groups.
// Lattice windows are enumerated in lexicographic order. Throws
// argument_error for N < 1 and capacity_error past 5e7 elements.
FolnerWindow folner_window(const MeasureSemigroup& s, std::int64_t n);

// mu(L delta gL) / mu(L) for the left translate gL, computed by exact set
// counting. Always in [0, 2].
double folner_ratio(const MeasureSemigroup& s, const FolnerWindow& window, const Element& g);

// Right translate Lg, preserving element order and cardinality.
FolnerWindow translate_window(const MeasureSemigroup& s, const FolnerWindow& window,
                              const Element& g);

// Running infima of mu(L_a ∩ V) / mu(L_a) over the tail of the supplied
// window list: entry a is inf over b >= a. Monotone nondecreasing; the final
// entry is the last window's plain ratio.
std::vector<double> lower_density(const MeasureSemigroup& s,
                                  const std::vector<FolnerWindow>& windows,
                                  const std::function<bool(const Element&)>& member);

}  // namespace cstar
