#pragma once

#include <optional>
#include <utility>
#include <vector>

#include "clutterkit/clutter.hpp"
#include "clutterkit/errors.hpp"
#include "clutterkit/linalg.hpp"
#include "clutterkit/lp.hpp"
#include "clutterkit/polytope.hpp"

namespace clutterkit {

inline RMatrix incidence_vectors(const std::vector<Mask>& sets, int dim) {
    RMatrix m;
    m.reserve(sets.size());
    for (Mask s : sets) m.push_back(detail::mask_to_rvec(s, dim));
    return m;
}

// fpn(C) = bn(C) as exact rationals.
inline bool integral_blocking(const Clutter& c) { return fpn(c) == blocking_number(c); }

// C = tilde(C) together with the integral blocking condition.
inline bool is_tilde_invariant(const Clutter& c, const Caps& caps = default_caps()) {
    return integral_blocking(c) && tilde(c, caps) == c;
}

// C satisfies integral blocking and tilde(C) is tilde-invariant.
inline bool is_weak_tilde_invariant(const Clutter& c, const Caps& caps = default_caps()) {
    if (!integral_blocking(c)) return false;
    Clutter t = tilde(c, caps);
    if (t.degenerate()) return false;
    return is_tilde_invariant(t, caps);
}

struct TildeFullResult {
    bool value = false;
    bool mtc = false;
    bool ibc = false;
    std::optional<Mask> unsupported_edge;  // tilde edge outside every maximum packing's support
};

// Minimum-transversal-covered, integral blocking, and every tilde edge in the
// support of some maximum fractional packing.
inline TildeFullResult tilde_full(const Clutter& c, const Caps& caps = default_caps()) {
    TildeFullResult r;
    r.mtc = is_minimum_transversal_covered(c, caps);
    r.ibc = integral_blocking(c);
    if (!r.mtc || !r.ibc) return r;
    Clutter t = tilde(c, caps);
    for (Mask h : t.edges())
        if (!edge_in_some_max_packing(c, h)) {
            r.unsupported_edge = h;
            return r;
        }
    r.value = true;
    return r;
}

struct DimensionConditionResult {
    bool value = false;
    int dim_tilde = -1;
    int dim_minb = -1;
};

// affdim(tilde(C)) + affdim(minb(tilde(C))) = |E| - 1.
inline DimensionConditionResult dimension_condition(const Clutter& c, const Caps& caps = default_caps()) {
    Clutter t = tilde(c, caps);
    if (t.edges().empty()) throw EmptyInputError("dimension_condition: tilde clutter is empty");
    DimensionConditionResult r;
    r.dim_tilde = affine_dimension(incidence_vectors(t.edges(), c.ground_size()));
    r.dim_minb = affine_dimension(incidence_vectors(min_transversals(t, caps), c.ground_size()));
    r.value = r.dim_tilde + r.dim_minb == c.ground_size() - 1;
    return r;
}

struct SeparabilityResult {
    bool separable = false;
    std::optional<std::pair<Mask, Mask>> partition;
};

// Exhaustive search for a nontrivial partition {E1,E2} with bn(C[E1]) + bn(C[E2]) = bn(C).
// A side whose restriction has no edges counts as bn = +∞ and never certifies separability.
inline SeparabilityResult is_separable(const Clutter& c, const Caps& caps = default_caps()) {
    detail::check_nondegenerate(c);
    int n = c.ground_size();
    if (n < 2) throw InvalidArgumentError("separability needs at least two elements");
    if (n > caps.separability_max_elements)
        throw CapExceededError("separability sweep refused above " +
                               std::to_string(caps.separability_max_elements) + " elements");
    int bn = blocking_number(c);
    Mask ground = c.ground_mask();
    auto side_bn = [&](Mask side) -> long long {
        std::vector<Mask> inside;
        for (Mask e : c.edges())
            if (is_subset(e, side)) inside.push_back(e);
        if (inside.empty()) return detail::kInfiniteBn;
        return detail::min_hitting_set_size(inside);
    };
    // fix the lowest element into E1 so each partition appears once
    for (Mask e1 = 1; e1 < ground; e1 += 2) {
        Mask e2 = ground & ~e1;
        if (e2 == 0) continue;
        if (side_bn(e1) + side_bn(e2) == bn)
            return {true, std::make_pair(e1, e2)};
    }
    return {};
}

struct HyperedgeSeparabilityResult {
    bool separable = false;
    std::optional<Mask> witness;                        // H with bn(C\H) = bn(C) - 1
    std::vector<std::pair<Mask, int>> deletion_bn;      // bn(C\H) per tilde edge H
};

// Defined only for minimum-transversal-covered clutters with integral blocking.
inline HyperedgeSeparabilityResult is_hyperedge_separable(const Clutter& c, const Caps& caps = default_caps()) {
    if (!is_minimum_transversal_covered(c, caps) || !integral_blocking(c))
        throw NotApplicableError("hyperedge-separability presupposes minimum-transversal cover and integral blocking");
    HyperedgeSeparabilityResult r;
    int bn = blocking_number(c);
    for (Mask h : tilde(c, caps).edges()) {
        std::vector<Mask> survivors;
        for (Mask e : c.edges())
            if (!(e & h)) survivors.push_back(e);
        int deleted_bn = survivors.empty() ? 0 : detail::min_hitting_set_size(survivors);
        r.deletion_bn.emplace_back(h, deleted_bn);
        if (deleted_bn == bn - 1 && !r.separable) {
            r.separable = true;
            r.witness = h;
        }
    }
    return r;
}

// Transversals of tilde(C) meeting h at least twice, spilling at most bn-2 outside h,
// and meeting every other tilde edge exactly once.
inline std::vector<Mask> facet_transversals(const Clutter& c, Mask h, const Caps& caps = default_caps()) {
    Clutter t = tilde(c, caps);
    if (!is_tilde_invariant(c, caps)) throw InvalidArgumentError("facet_transversals requires a tilde-invariant clutter");
    if (!t.contains_edge(h)) throw InvalidArgumentError("facet_transversals: edge not in the tilde clutter");
    int bn = blocking_number(c);
    std::vector<Mask> out;
    for (Mask b : blocker(t, caps).edges()) {
        if (set_size(b & h) <= 1) continue;
        if (set_size(b & ~h) > bn - 2) continue;
        bool others_once = true;
        for (Mask h2 : t.edges()) {
            if (h2 == h) continue;
            if (set_size(b & h2) != 1) {
                others_once = false;
                break;
            }
        }
        if (others_once) out.push_back(b);
    }
    return out;
}

struct SimplexCharacterization {
    bool lhs = false;  // I(C) integral simplex and hyperedge-nonseparable
    bool rhs = false;  // dimension condition and every edge has a facet transversal
    bool ic_integral = false;
    bool ic_simplex = false;
    bool hyperedge_nonseparable = false;
    bool dim_condition = false;
    bool every_edge_has_facet_transversal = false;
    std::optional<Mask> edge_without_facet_transversal;
};

inline SimplexCharacterization simplex_characterization(const Clutter& c, const Caps& caps = default_caps()) {
    if (!is_minimum_transversal_covered(c, caps) || !is_tilde_invariant(c, caps))
        throw InvalidArgumentError(
            "simplex characterization requires a minimum-transversal-covered tilde-invariant clutter");
    SimplexCharacterization r;
    VertexSet vs = vertices(build_IC(c, caps), caps);
    r.ic_integral = is_integral_vertex_set(vs).integral;
    r.ic_simplex = is_simplex(vs);
    r.hyperedge_nonseparable = !is_hyperedge_separable(c, caps).separable;
    auto dim = dimension_condition(c, caps);
    r.dim_condition = dim.value;
    r.every_edge_has_facet_transversal = true;
    for (Mask h : c.edges())
        if (facet_transversals(c, h, caps).empty()) {
            r.every_edge_has_facet_transversal = false;
            r.edge_without_facet_transversal = h;
            break;
        }
    r.lhs = r.ic_integral && r.ic_simplex && r.hyperedge_nonseparable;
    r.rhs = r.dim_condition && r.every_edge_has_facet_transversal;
    return r;
}

// Structured pass/fail-with-witness results for the full Step-1 pipeline.
struct PrecoreReport {
    bool mtc = false;
    bool ibc = false;
    Rational fpn_value;
    int bn = 0;
    bool tilde_fixed = false;
    bool ic_polytope = false;
    bool ic_integral = false;
    std::optional<RVec> ic_fractional_vertex;
    bool nonseparable = false;
    std::optional<std::pair<Mask, Mask>> separating_partition;
    bool tilde_full_holds = false;
    std::optional<Mask> tilde_full_unsupported;
    std::optional<bool> dimension_condition_holds;  // unset: tilde clutter empty
    int dim_tilde = -1;
    int dim_minb = -1;
    std::optional<bool> hyperedge_nonseparable;     // unset: presuppositions fail
    std::optional<Mask> separating_hyperedge;
    bool unique_max_packing = false;
    bool step1_conditions = false;  // ibc ∧ I(C) integral polytope ∧ nonseparable
    bool precore = false;           // step1_conditions ∧ C = tilde(C)
};

inline PrecoreReport is_precore(const Clutter& c, const Caps& caps = default_caps()) {
    detail::check_nondegenerate(c);
    PrecoreReport r;
    Clutter blk = blocker(c, caps);
    auto minb = min_transversals_of(blk.edges());
    r.bn = set_size(minb.front());
    r.fpn_value = fpn(c);
    r.ibc = r.fpn_value == r.bn;
    {
        Mask covered = 0;
        for (Mask b : minb) covered |= b;
        r.mtc = covered == c.ground_mask();
    }
    Clutter t = Clutter::from_masks(c.ground(), tilde_edges(c.edges(), minb));
    r.tilde_fixed = t == c;
    try {
        VertexSet vs = vertices(build_IC(c, blk.edges()), caps);
        r.ic_polytope = !vs.points.empty();
        auto integral = is_integral_vertex_set(vs);
        r.ic_integral = r.ic_polytope && integral.integral;
        r.ic_fractional_vertex = integral.fractional_vertex;
    } catch (const UnboundedPolyhedronError&) {
        r.ic_polytope = false;
        r.ic_integral = false;  // an unbounded I(C) is not an integral polytope
    }
    if (c.ground_size() >= 2) {
        auto sep = is_separable(c, caps);
        r.nonseparable = !sep.separable;
        r.separating_partition = sep.partition;
    } else {
        r.nonseparable = true;  // no nontrivial partition exists
    }
    auto tf = tilde_full(c, caps);
    r.tilde_full_holds = tf.value;
    r.tilde_full_unsupported = tf.unsupported_edge;
    if (!t.edges().empty()) {
        auto dim = dimension_condition(c, caps);
        r.dimension_condition_holds = dim.value;
        r.dim_tilde = dim.dim_tilde;
        r.dim_minb = dim.dim_minb;
    }
    if (r.mtc && r.ibc) {
        auto hs = is_hyperedge_separable(c, caps);
        r.hyperedge_nonseparable = !hs.separable;
        r.separating_hyperedge = hs.witness;
    }
    r.unique_max_packing = is_unique_max_packing(c);
    r.step1_conditions = r.ibc && r.ic_integral && r.nonseparable;
    r.precore = r.step1_conditions && r.tilde_fixed;
    return r;
}

}  // namespace clutterkit
