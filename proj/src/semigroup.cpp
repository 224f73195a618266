#include "cstar/semigroup.hpp"

#include <algorithm>
#include <set>

namespace cstar {

namespace {

constexpr std::int64_t kMaxWindowElements = 50'000'000;

std::int64_t mod_nonneg(std::int64_t v, std::int64_t n) {
    std::int64_t r = v % n;
    return r < 0 ? r + n : r;
}

}  // namespace

Element::Element(std::initializer_list<std::int64_t> coords) {
    if (coords.size() < 1 || coords.size() > kMaxLatticeDim) {
        throw argument_error("element needs between 1 and 4 coordinates");
    }
    dim_ = static_cast<int>(coords.size());
    std::size_t i = 0;
    for (std::int64_t v : coords) c_[i++] = v;
}

Element::Element(const std::vector<std::int64_t>& coords) {
    if (coords.size() < 1 || coords.size() > kMaxLatticeDim) {
        throw argument_error("element needs between 1 and 4 coordinates");
    }
    dim_ = static_cast<int>(coords.size());
    for (std::size_t i = 0; i < coords.size(); ++i) c_[i] = coords[i];
}

std::int64_t Element::scalar() const {
    if (dim_ != 1) throw argument_error("scalar() called on a lattice element");
    return c_[0];
}

bool Element::operator==(const Element& o) const {
    if (dim_ != o.dim_) return false;
    for (int i = 0; i < dim_; ++i) {
        if (c_[static_cast<std::size_t>(i)] != o.c_[static_cast<std::size_t>(i)]) return false;
    }
    return true;
}

bool Element::operator<(const Element& o) const {
    if (dim_ != o.dim_) return dim_ < o.dim_;
    for (int i = 0; i < dim_; ++i) {
        auto a = c_[static_cast<std::size_t>(i)];
        auto b = o.c_[static_cast<std::size_t>(i)];
        if (a != b) return a < b;
    }
    return false;
}

std::string Element::str() const {
    std::string out;
    for (int i = 0; i < dim_; ++i) {
        if (i > 0) out += ';';
        out += std::to_string(c_[static_cast<std::size_t>(i)]);
    }
    return out;
}

MeasureSemigroup MeasureSemigroup::naturals() {
    return MeasureSemigroup(SemigroupKind::Naturals, 1, 0);
}

MeasureSemigroup MeasureSemigroup::integers() {
    return MeasureSemigroup(SemigroupKind::Integers, 1, 0);
}

MeasureSemigroup MeasureSemigroup::integer_lattice(int d) {
    if (d < 1 || d > Element::kMaxLatticeDim) {
        throw argument_error("integer lattice dimension must be between 1 and 4");
    }
    return MeasureSemigroup(SemigroupKind::IntegerLattice, d, 0);
}

MeasureSemigroup MeasureSemigroup::cyclic_group(std::int64_t n) {
    if (n < 1) throw argument_error("cyclic group order must be >= 1");
    return MeasureSemigroup(SemigroupKind::CyclicGroup, 1, n);
}

bool MeasureSemigroup::contains(const Element& g) const {
    if (g.dim() != dim_) return false;
    switch (kind_) {
        case SemigroupKind::Naturals:
            return g[0] >= 1;
        case SemigroupKind::Integers:
        case SemigroupKind::IntegerLattice:
            return true;
        case SemigroupKind::CyclicGroup:
            return g[0] >= 0 && g[0] < modulus_;
    }
    return false;
}

Element MeasureSemigroup::compose(const Element& a, const Element& b) const {
    if (!contains(a) || !contains(b)) {
        throw argument_error("compose: element outside the semigroup");
    }
    Element out = a;
    for (int i = 0; i < dim_; ++i) out[i] = a[i] + b[i];
    if (kind_ == SemigroupKind::CyclicGroup) out[0] = mod_nonneg(out[0], modulus_);
    return out;
}

Element MeasureSemigroup::power(const Element& g, std::int64_t m) const {
    if (m < 1) throw argument_error("power: exponent must be >= 1");
    if (!contains(g)) throw argument_error("power: element outside the semigroup");
    Element out = g;
    for (int i = 0; i < dim_; ++i) out[i] = g[i] * m;
    if (kind_ == SemigroupKind::CyclicGroup) out[0] = mod_nonneg(out[0], modulus_);
    return out;
}

bool MeasureSemigroup::operator==(const MeasureSemigroup& o) const {
    return kind_ == o.kind_ && dim_ == o.dim_ && modulus_ == o.modulus_;
}

FolnerWindow folner_window(const MeasureSemigroup& s, std::int64_t n) {
    if (n < 1) throw argument_error("window index must be >= 1");
    FolnerWindow w;
    w.index = n;
    switch (s.kind()) {
        case SemigroupKind::Naturals:
            w.elements.reserve(static_cast<std::size_t>(n));
            for (std::int64_t v = 1; v <= n; ++v) w.elements.emplace_back(v);
            break;
        case SemigroupKind::Integers:
            w.elements.reserve(static_cast<std::size_t>(2 * n + 1));
            for (std::int64_t v = -n; v <= n; ++v) w.elements.emplace_back(v);
            break;
        case SemigroupKind::IntegerLattice: {
            const int d = s.dim();
            const std::int64_t side = 2 * n + 1;
            std::int64_t total = 1;
            for (int i = 0; i < d; ++i) {
                total *= side;
                if (total > kMaxWindowElements) {
                    throw capacity_error("lattice window would exceed the element cap");
                }
            }
            w.elements.reserve(static_cast<std::size_t>(total));
            // odometer over the box, lexicographic
            std::vector<std::int64_t> coords(static_cast<std::size_t>(d), -n);
            while (true) {
                w.elements.push_back(Element(coords));
                int axis = d - 1;
                while (axis >= 0) {
                    if (++coords[static_cast<std::size_t>(axis)] <= n) break;
                    coords[static_cast<std::size_t>(axis)] = -n;
                    --axis;
                }
                if (axis < 0) break;
            }
            break;
        }
        case SemigroupKind::CyclicGroup:
            w.elements.reserve(static_cast<std::size_t>(s.modulus()));
            for (std::int64_t v = 0; v < s.modulus(); ++v) w.elements.emplace_back(v);
            break;
    }
    return w;
}

double folner_ratio(const MeasureSemigroup& s, const FolnerWindow& window, const Element& g) {
    if (window.elements.empty()) throw argument_error("folner_ratio: empty window");
    if (!s.contains(g)) throw argument_error("folner_ratio: element outside the semigroup");
    const auto& elems = window.elements;
    const std::int64_t m = window.measure();
    std::int64_t inter = 0;
    if (s.kind() == SemigroupKind::CyclicGroup) {
        std::set<Element> in(elems.begin(), elems.end());
        // |L ∩ gL| = #{x in L : g.x in L} since left translation is injective
        for (const auto& x : elems) {
            if (in.count(s.compose(g, x)) > 0) ++inter;
        }
    } else {
        // translation preserves lexicographic order, so walk two sorted views
        std::vector<Element> sorted;
        const std::vector<Element>* view = &elems;
        if (!std::is_sorted(elems.begin(), elems.end())) {
            sorted = elems;
            std::sort(sorted.begin(), sorted.end());
            view = &sorted;
        }
        const auto& v = *view;
        std::size_t i = 0, j = 0;
        while (i < v.size() && j < v.size()) {
            Element t = s.compose(g, v[j]);
            if (v[i] == t) {
                ++inter;
                ++i;
                ++j;
            } else if (v[i] < t) {
                ++i;
            } else {
                ++j;
            }
        }
    }
    return 2.0 * static_cast<double>(m - inter) / static_cast<double>(m);
}

FolnerWindow translate_window(const MeasureSemigroup& s, const FolnerWindow& window,
                              const Element& g) {
    if (!s.contains(g)) throw argument_error("translate_window: element outside the semigroup");
    FolnerWindow out;
    out.index = window.index;
    out.elements.reserve(window.elements.size());
    for (const auto& x : window.elements) out.elements.push_back(s.compose(x, g));
    return out;
}

std::vector<double> lower_density(const MeasureSemigroup& s,
                                  const std::vector<FolnerWindow>& windows,
                                  const std::function<bool(const Element&)>& member) {
    (void)s;
    if (windows.empty()) throw argument_error("lower_density: no windows supplied");
    std::vector<double> ratios;
    ratios.reserve(windows.size());
    for (const auto& w : windows) {
        if (w.elements.empty()) throw argument_error("lower_density: empty window");
        std::int64_t count = 0;
        for (const auto& x : w.elements) {
            if (member(x)) ++count;
        }
        ratios.push_back(static_cast<double>(count) / static_cast<double>(w.measure()));
    }
    // suffix infima
    for (std::size_t i = ratios.size() - 1; i-- > 0;) {
        ratios[i] = std::min(ratios[i], ratios[i + 1]);
    }
    return ratios;
}

}  // namespace cstar
