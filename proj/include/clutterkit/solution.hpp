#pragma once

#include <algorithm>
#include <chrono>
#include <map>
#include <optional>
#include <string>
#include <thread>
#include <utility>
#include <vector>

#include "clutterkit/clutter.hpp"
#include "clutterkit/conditions.hpp"
#include "clutterkit/errors.hpp"
#include "clutterkit/generators.hpp"
#include "clutterkit/linalg.hpp"
#include "clutterkit/polytope.hpp"

namespace clutterkit {

namespace detail {

inline void check_same_ground(const Clutter& c, const Clutter& d) {
    if (c.ground() != d.ground())
        throw InvalidArgumentError("the two clutters must share the same ground set");
}

}  // namespace detail

// Condition IM: equal affine hulls of the minimum-transversal incidence vectors.
inline bool condition_IM(const Clutter& c, const Clutter& d, const Caps& caps = default_caps()) {
    detail::check_same_ground(c, d);
    return affine_hulls_equal(incidence_vectors(min_transversals(c, caps), c.ground_size()),
                              incidence_vectors(min_transversals(d, caps), d.ground_size()));
}

struct IFResult {
    bool value = false;
    // facet of I(C) (as vertex ids) that no member of b(D) defines
    std::optional<std::vector<int>> unmatched_facet;
    // member of b(D) missing a hyperedge of C
    std::optional<std::pair<Mask, Mask>> nonintersecting;
};

namespace detail {

inline IFResult if_against_facets(const HPolyhedron& p, const VertexSet& vs, const std::vector<Facet>& fs,
                                  const std::vector<Mask>& c_edges, const std::vector<Mask>& bd, int dim) {
    IFResult r;
    for (Mask b : bd)
        for (Mask h : c_edges)
            if (!(b & h)) {
                r.nonintersecting = std::make_pair(b, h);
                return r;
            }
    for (const Facet& f : fs) {
        bool transversal_defined = false;
        for (int row : f.constraint_ids)
            if (p.inequalities[static_cast<std::size_t>(row)].tag == RowTag::Transversal) {
                transversal_defined = true;
                break;
            }
        if (!transversal_defined) continue;
        bool matched = false;
        for (Mask b : bd) {
            RVec coef = mask_to_rvec(b, dim);
            std::vector<int> tight;
            bool valid = true;
            for (std::size_t v = 0; v < vs.points.size(); ++v) {
                Rational inner = dot(coef, vs.points[v]);
                if (inner < 1) {
                    valid = false;  // not a valid inequality over I(C); cannot define a face
                    break;
                }
                if (inner == 1) tight.push_back(static_cast<int>(v));
            }
            if (valid && tight == f.vertex_ids) {
                matched = true;
                break;
            }
        }
        if (!matched) {
            r.unmatched_facet = f.vertex_ids;
            return r;
        }
    }
    r.value = true;
    return r;
}

}  // namespace detail

// Condition IF: every transversal-defined facet of I(C) is defined by some member
// of b(D) (facet identity by vertex-incidence), and every member of b(D) intersects
// every hyperedge of C. Facets of I(C) defined only by nonnegativity rows impose
// no requirement.
inline IFResult condition_IF(const Clutter& c, const Clutter& d, const Caps& caps = default_caps()) {
    detail::check_same_ground(c, d);
    HPolyhedron p = build_IC(c, caps);
    VertexSet vs = vertices(p, caps);
    return detail::if_against_facets(p, vs, facets(p, vs), c.edges(), blocker(d, caps).edges(),
                                     c.ground_size());
}

struct HResult {
    bool value = false;
    bool contains = false;        // C ⊆ D
    std::optional<Mask> witness;  // missing C-edge, or D-edge meeting every minb(C) at most once
};

// Condition H: C ⊆ D, and every extra hyperedge meets some minimum transversal
// of C at least twice.
inline HResult condition_H(const Clutter& c, const Clutter& d, const Caps& caps = default_caps()) {
    detail::check_same_ground(c, d);
    HResult r;
    for (Mask h : c.edges())
        if (!d.contains_edge(h)) {
            r.witness = h;
            return r;
        }
    r.contains = true;
    auto minb = min_transversals(c, caps);
    for (Mask h : d.edges()) {
        if (c.contains_edge(h)) continue;
        bool doubled = false;
        for (Mask b : minb)
            if (set_size(h & b) >= 2) {
                doubled = true;
                break;
            }
        if (!doubled) {
            r.witness = h;
            return r;
        }
    }
    r.value = true;
    return r;
}

struct BResult {
    bool value = false;
    std::optional<MinorWitness> witness;
};

// Condition B: bn(C/A\B) <= pn(D/A\B) for every disjoint (A,B) with A∪B nonempty.
inline BResult condition_B(const Clutter& c, const Clutter& d, const Caps& caps = default_caps(),
                           MinorCache* cache_c = nullptr, MinorCache* cache_d = nullptr) {
    detail::check_same_ground(c, d);
    if (c.ground_size() > caps.minor_sweep_max_elements)
        throw CapExceededError("condition B sweep refused above " +
                               std::to_string(caps.minor_sweep_max_elements) + " elements");
    MinorCache local_c(c), local_d(d);
    MinorCache& mc = cache_c ? *cache_c : local_c;
    MinorCache& md = cache_d ? *cache_d : local_d;
    BResult r;
    r.value = true;
    detail::for_each_minor_pair(c.ground_mask(), [&](Mask a, Mask b) {
        if (mc.numbers(a, b).bn > md.numbers(a, b).pn) {
            r.value = false;
            r.witness = MinorWitness{a, b};
            return false;
        }
        return true;
    });
    return r;
}

struct SolutionReport {
    std::optional<bool> c_precore;  // unset when the precore check is skipped
    bool tilde_matches = false;
    bool ideal = false;
    std::optional<RVec> ideal_witness;
    bool mnp = false;
    std::optional<MinorWitness> mnp_witness;
    bool im = false;
    bool if_holds = false;
    IFResult if_detail;
    bool h = false;
    HResult h_detail;
    bool b = false;
    BResult b_detail;
};

// Full Step-2 certification of a candidate solution clutter D over C.
inline SolutionReport check_solution(const Clutter& c, const Clutter& d, const Caps& caps = default_caps(),
                                     bool evaluate_precore = true) {
    detail::check_same_ground(c, d);
    detail::check_nondegenerate(c);
    detail::check_nondegenerate(d);
    SolutionReport r;
    if (evaluate_precore) r.c_precore = is_precore(c, caps).precore;
    r.tilde_matches = tilde(d, caps) == c;
    auto ideal = is_ideal(d, caps);
    r.ideal = ideal.ideal;
    r.ideal_witness = ideal.fractional_vertex;
    MinorCache cache_c(c), cache_d(d);
    auto mnp = is_minimally_non_packing(d, caps, &cache_d);
    r.mnp = mnp.value;
    r.mnp_witness = mnp.witness;
    r.im = condition_IM(c, d, caps);
    r.if_detail = condition_IF(c, d, caps);
    r.if_holds = r.if_detail.value;
    r.h_detail = condition_H(c, d, caps);
    r.h = r.h_detail.value;
    r.b_detail = condition_B(c, d, caps, &cache_c, &cache_d);
    r.b = r.b_detail.value;
    return r;
}

struct SearchLimits {
    int max_extra_edges = 4;
    long long node_cap = 100000;
    double time_cap_secs = 0;  // 0: no time cap
    bool require_mnp = true;
    int max_edge_size = 0;     // 0: the |E| - bn + 1 pool bound
    int jobs = 1;
};

struct SearchOutcome {
    enum class Status { Found, Exhausted, LimitReached };
    Status status = Status::Exhausted;
    std::optional<Clutter> found;
    long long nodes_explored = 0;
    long long pool_size = 0;
    std::map<std::string, long long> prune_stats;
};

inline const char* to_string(SearchOutcome::Status s) {
    switch (s) {
        case SearchOutcome::Status::Found: return "found";
        case SearchOutcome::Status::Exhausted: return "exhausted";
        default: return "limit-reached";
    }
}

namespace detail {

struct SearchContext {
    const Clutter& c;
    const Caps& caps;
    const SearchLimits& limits;
    std::vector<Mask> pool;  // candidate extra edges, canonical order
    std::vector<Mask> minb_c;
    int bn = 0;
    int minb_dim = 0;
    HPolyhedron ic;
    VertexSet ic_vertices;
    std::vector<Facet> ic_facets;
    std::chrono::steady_clock::time_point deadline{};
    bool has_deadline = false;

    SearchContext(const Clutter& c_, const Caps& caps_, const SearchLimits& l)
        : c(c_), caps(caps_), limits(l) {}
};

struct SubtreeResult {
    long long nodes = 0;
    bool hit_limit = false;
    std::optional<Clutter> found;
    std::map<std::string, long long> prune_stats;

    void bump(const char* reason) { ++prune_stats[reason]; }
};

// Candidate pool per Condition H: incomparable with C, 2 <= |H| <= bound, and some
// minimum transversal of C meets H twice.
inline std::vector<Mask> build_candidate_pool(const SearchContext& ctx) {
    const Clutter& c = ctx.c;
    int n = c.ground_size();
    int upper = ctx.limits.max_edge_size > 0 ? ctx.limits.max_edge_size : n - ctx.bn + 1;
    upper = std::min(upper, n - ctx.bn + 1);
    std::vector<Mask> pool;
    Mask ground = c.ground_mask();
    for (Mask h = 1; h <= ground; ++h) {
        if (!is_subset(h, ground)) continue;
        int s = set_size(h);
        if (s < 2 || s > upper) continue;
        bool comparable = false;
        for (Mask e : c.edges())
            if (is_subset(e, h) || is_subset(h, e)) {
                comparable = true;
                break;
            }
        if (comparable) continue;
        bool doubled = false;
        for (Mask b : ctx.minb_c)
            if (set_size(h & b) >= 2) {
                doubled = true;
                break;
            }
        if (!doubled) continue;
        pool.push_back(h);
    }
    std::sort(pool.begin(), pool.end(), set_less);
    return pool;
}

// Full gate evaluation of D = C ∪ extras. minb_d is exactly the set of minimum
// transversals of D: bn stays pinned at bn(C), so minb(D) is the surviving subset
// of minb(C). Gate order is cost-ordered: tilde, IM, IF, B, ideal, MNP.
inline bool leaf_passes(const SearchContext& ctx, MinorCache& cache_c, const std::vector<Mask>& extras,
                        const std::vector<Mask>& minb_d, SubtreeResult& res) {
    const Clutter& c = ctx.c;
    for (Mask h : extras) {
        bool doubled = false;
        for (Mask b : minb_d)
            if (set_size(h & b) >= 2) {
                doubled = true;
                break;
            }
        if (!doubled) {
            res.bump("tilde_mismatch");
            return false;
        }
    }
    if (affine_dimension(incidence_vectors(minb_d, c.ground_size())) != ctx.minb_dim) {
        res.bump("im");
        return false;
    }
    std::vector<Mask> d_edges = c.edges();
    d_edges.insert(d_edges.end(), extras.begin(), extras.end());
    Clutter d = Clutter::from_masks(c.ground(), std::move(d_edges));
    std::vector<Mask> bd = blocker_edges(d.edges(), ctx.caps.blocker_antichain_cap);
    if (!if_against_facets(ctx.ic, ctx.ic_vertices, ctx.ic_facets, c.edges(), bd, c.ground_size()).value) {
        res.bump("if");
        return false;
    }
    MinorCache cache_d(d);
    bool b_ok = true;
    for_each_minor_pair(c.ground_mask(), [&](Mask a, Mask b) {
        if (cache_c.numbers(a, b).bn > cache_d.numbers(a, b).pn) {
            b_ok = false;
            return false;
        }
        return true;
    });
    if (!b_ok) {
        res.bump("b");
        return false;
    }
    if (!is_ideal(d, ctx.caps).ideal) {
        res.bump("ideal");
        return false;
    }
    if (ctx.limits.require_mnp && !is_minimally_non_packing(d, ctx.caps, &cache_d).value) {
        res.bump("mnp");
        return false;
    }
    // the gated path must agree with the full certification
    SolutionReport rep = check_solution(c, d, ctx.caps, false);
    bool pass = rep.tilde_matches && rep.ideal && rep.im && rep.if_holds && rep.h && rep.b &&
                (!ctx.limits.require_mnp || rep.mnp);
    if (!pass) throw Error("internal: gated search accepted a candidate the full check rejects");
    res.found = d;
    return true;
}

// DFS over extras from pool[start..). Prunes are sound: any accepted descendant
// would have to violate the same gate.
inline bool search_subtree(const SearchContext& ctx, MinorCache& cache_c, std::vector<Mask>& extras,
                           const std::vector<Mask>& minb_d, std::size_t start, long long budget,
                           SubtreeResult& res) {
    if (res.nodes >= budget) {
        res.hit_limit = true;
        return false;
    }
    if (ctx.has_deadline && std::chrono::steady_clock::now() > ctx.deadline) {
        res.hit_limit = true;
        return false;
    }
    ++res.nodes;
    if (leaf_passes(ctx, cache_c, extras, minb_d, res)) return true;
    if (static_cast<int>(extras.size()) >= ctx.limits.max_extra_edges) return false;
    for (std::size_t i = start; i < ctx.pool.size(); ++i) {
        Mask h = ctx.pool[i];
        bool antichain_ok = true;
        for (Mask s : extras)
            if (is_subset(s, h) || is_subset(h, s)) {
                antichain_ok = false;
                break;
            }
        if (!antichain_ok) {
            res.bump("antichain");
            continue;
        }
        std::vector<Mask> next_minb;
        for (Mask b : minb_d)
            if (b & h) next_minb.push_back(b);
        if (next_minb.empty()) {
            res.bump("bn_changed");
            continue;
        }
        if (affine_dimension(incidence_vectors(next_minb, ctx.c.ground_size())) < ctx.minb_dim) {
            res.bump("im_dim");
            continue;
        }
        bool dead_edge = false;
        for (Mask s : extras) {
            bool doubled = false;
            for (Mask b : next_minb)
                if (set_size(s & b) >= 2) {
                    doubled = true;
                    break;
                }
            if (!doubled) {
                dead_edge = true;
                break;
            }
        }
        if (!dead_edge) {
            bool doubled = false;
            for (Mask b : next_minb)
                if (set_size(h & b) >= 2) {
                    doubled = true;
                    break;
                }
            if (!doubled) dead_edge = true;
        }
        if (dead_edge) {
            res.bump("tilde_dead_edge");
            continue;
        }
        extras.push_back(h);
        bool found = search_subtree(ctx, cache_c, extras, next_minb, i + 1, budget, res);
        extras.pop_back();
        if (found) return true;
        if (res.hit_limit) return false;
    }
    return false;
}

}  // namespace detail

// Bounded depth-first search for a clutter D ⊇ C passing the solution gates.
// Deterministic for fixed (input, limits, jobs); with jobs > 1 the top-level
// branches are partitioned and each runs to its own budget, merged in canonical order.
inline SearchOutcome search_solutions(const Clutter& c, const SearchLimits& limits,
                                      const Caps& caps = default_caps()) {
    detail::check_nondegenerate(c);
    detail::SearchContext ctx(c, caps, limits);
    Clutter blk = blocker(c, caps);
    ctx.minb_c = min_transversals_of(blk.edges());
    ctx.bn = set_size(ctx.minb_c.front());
    ctx.minb_dim = affine_dimension(incidence_vectors(ctx.minb_c, c.ground_size()));
    if (!(Clutter::from_masks(c.ground(), tilde_edges(c.edges(), ctx.minb_c)) == c))
        throw InvalidArgumentError("search requires a tilde-fixed (precore) clutter");
    ctx.ic = build_IC(c, blk.edges());
    ctx.ic_vertices = vertices(ctx.ic, caps);
    ctx.ic_facets = facets(ctx.ic, ctx.ic_vertices);
    ctx.pool = detail::build_candidate_pool(ctx);
    if (limits.time_cap_secs > 0) {
        ctx.has_deadline = true;
        ctx.deadline = std::chrono::steady_clock::now() +
                       std::chrono::milliseconds(static_cast<long long>(limits.time_cap_secs * 1000));
    }

    SearchOutcome out;
    out.pool_size = static_cast<long long>(ctx.pool.size());
    if (limits.node_cap <= 0) {
        out.status = SearchOutcome::Status::LimitReached;
        return out;
    }

    // root node (D = C) first
    detail::SubtreeResult root;
    {
        MinorCache root_cache(c);
        ++root.nodes;
        std::vector<Mask> no_extras;
        if (detail::leaf_passes(ctx, root_cache, no_extras, ctx.minb_c, root)) {
            out.status = SearchOutcome::Status::Found;
            out.found = root.found;
        }
    }
    out.nodes_explored = root.nodes;
    for (auto& [k, v] : root.prune_stats) out.prune_stats[k] += v;
    if (out.status == SearchOutcome::Status::Found) return out;
    if (limits.max_extra_edges <= 0 || ctx.pool.empty()) {
        out.status = SearchOutcome::Status::Exhausted;
        return out;
    }
    if (limits.node_cap <= root.nodes) {
        out.status = SearchOutcome::Status::LimitReached;
        return out;
    }

    long long remaining = limits.node_cap - root.nodes;
    int jobs = std::max(1, limits.jobs);
    std::size_t tops = ctx.pool.size();
    std::vector<detail::SubtreeResult> results(tops);

    auto run_top = [&](std::size_t i, long long budget, MinorCache& cache_c) {
        detail::SubtreeResult& res = results[i];
        Mask h = ctx.pool[i];
        std::vector<Mask> minb_d;
        for (Mask b : ctx.minb_c)
            if (b & h) minb_d.push_back(b);
        if (minb_d.empty()) {
            ++res.nodes;
            res.bump("bn_changed");
            return;
        }
        if (affine_dimension(incidence_vectors(minb_d, c.ground_size())) < ctx.minb_dim) {
            ++res.nodes;
            res.bump("im_dim");
            return;
        }
        bool doubled = false;
        for (Mask b : minb_d)
            if (set_size(h & b) >= 2) {
                doubled = true;
                break;
            }
        if (!doubled) {
            ++res.nodes;
            res.bump("tilde_dead_edge");
            return;
        }
        std::vector<Mask> extras{h};
        detail::search_subtree(ctx, cache_c, extras, minb_d, i + 1, budget, res);
    };

    if (jobs == 1) {
        MinorCache cache_c(c);
        long long used = 0;
        bool out_of_budget = false;
        for (std::size_t i = 0; i < tops; ++i) {
            long long budget = remaining - used;
            if (budget <= 0) {
                out_of_budget = true;
                break;
            }
            run_top(i, budget, cache_c);
            used += results[i].nodes;
            if (results[i].found) break;
        }
        if (out_of_budget) root.hit_limit = true;
    } else {
        long long per = std::max<long long>(1, remaining / static_cast<long long>(jobs));
        std::vector<std::thread> workers;
        for (int w = 0; w < jobs; ++w)
            workers.emplace_back([&, w]() {
                MinorCache cache_c(c);
                for (std::size_t i = static_cast<std::size_t>(w); i < tops; i += static_cast<std::size_t>(jobs))
                    run_top(i, per, cache_c);
            });
        for (auto& t : workers) t.join();
    }

    bool limit = root.hit_limit;
    for (std::size_t i = 0; i < tops; ++i) {
        out.nodes_explored += results[i].nodes;
        for (auto& [k, v] : results[i].prune_stats) out.prune_stats[k] += v;
        limit = limit || results[i].hit_limit;
        if (results[i].found && !out.found) {
            out.status = SearchOutcome::Status::Found;
            out.found = results[i].found;  // lowest top-level index wins
        }
    }
    if (!out.found) out.status = limit ? SearchOutcome::Status::LimitReached : SearchOutcome::Status::Exhausted;
    return out;
}

// Mechanized finite case analysis: an affine plane of blocking number at least 3
// admits no ideal minimally non-packing solution clutter.
struct ObstructionReport {
    struct Candidate {
        Mask part1 = 0;
        Mask part2 = 0;
        bool killed = false;
        std::string kill_reason;
    };
    struct TripleAnalysis {
        Mask edge_a = 0, edge_b = 0, edge_c = 0;
        int x = -1, y = -1, z = -1;         // pairwise intersection elements
        Mask union_mask = 0;
        bool union_proper = false;          // X ≠ E
        int restriction_edge_count = 0;     // |C[X]|, must be 3
        int restriction_bn = 0;             // must be 2
        int star_components = 0;            // must be 3
        bool stars_cover_union = false;
        bool xyz_meets_every_minb_once = false;
        std::vector<Candidate> candidates;  // candidate 2-packings, all must be killed
        bool verified = false;
    };
    int bn = 0;
    std::vector<TripleAnalysis> triples;
    bool obstruction_verified = false;
};

namespace detail {

inline ObstructionReport::TripleAnalysis analyze_triple(const Clutter& c, const std::vector<Mask>& minb,
                                                        Mask a, Mask b, Mask c2) {
    ObstructionReport::TripleAnalysis t;
    t.edge_a = a;
    t.edge_b = b;
    t.edge_c = c2;
    Mask zset = a & b, xset = b & c2, yset = c2 & a;
    if (set_size(zset) != 1 || set_size(xset) != 1 || set_size(yset) != 1)
        throw AxiomViolationError("triple of hyperedges without singleton pairwise intersections");
    t.z = lowest_element(zset);
    t.x = lowest_element(xset);
    t.y = lowest_element(yset);
    Mask xyz = zset | xset | yset;
    if (set_size(xyz) != 3) throw AxiomViolationError("pairwise intersection elements are not distinct");

    t.union_mask = a | b | c2;
    t.union_proper = t.union_mask != c.ground_mask();

    std::vector<Mask> restriction;
    for (Mask e : c.edges())
        if (is_subset(e, t.union_mask)) restriction.push_back(e);
    t.restriction_edge_count = static_cast<int>(restriction.size());
    t.restriction_bn = restriction.empty() ? 0 : min_hitting_set_size(restriction);

    // forced size-2 transversals of any admissible D[X]:
    // {x}×(A−{y,z}), {y}×(B−{z,x}), {z}×(C−{x,y})
    std::vector<std::pair<int, int>> pair_edges;
    auto add_star = [&](int center, Mask edge) {
        for_each_element(edge & ~xyz, [&](int leaf) { pair_edges.emplace_back(center, leaf); });
    };
    add_star(t.x, a);
    add_star(t.y, b);
    add_star(t.z, c2);

    std::map<int, int> comp;
    int comp_count = 0;
    Mask covered = 0;
    for (auto [u, v] : pair_edges) {
        covered |= element_bit(u) | element_bit(v);
        bool uk = comp.count(u) > 0, vk = comp.count(v) > 0;
        if (!uk && !vk) {
            comp[u] = comp[v] = comp_count++;
        } else if (uk && !vk) {
            comp[v] = comp[u];
        } else if (!uk && vk) {
            comp[u] = comp[v];
        } else if (comp[u] != comp[v]) {
            int from = comp[v], to = comp[u];
            for (auto& [vert, cid] : comp)
                if (cid == from) cid = to;
            --comp_count;
        }
    }
    t.star_components = comp_count;
    t.stars_cover_union = covered == t.union_mask;

    t.xyz_meets_every_minb_once = true;
    for (Mask mb : minb)
        if (set_size(mb & xyz) != 1) t.xyz_meets_every_minb_once = false;

    std::vector<int> comp_ids;
    for (auto& [vert, cid] : comp)
        if (std::find(comp_ids.begin(), comp_ids.end(), cid) == comp_ids.end()) comp_ids.push_back(cid);
    std::sort(comp_ids.begin(), comp_ids.end());
    std::vector<Mask> comp_center(comp_ids.size(), 0), comp_leaves(comp_ids.size(), 0);
    for (std::size_t ci = 0; ci < comp_ids.size(); ++ci) {
        std::map<int, int> degree;
        int edges_in_comp = 0;
        for (auto [u, v] : pair_edges)
            if (comp[u] == comp_ids[ci]) {
                ++degree[u];
                ++degree[v];
                ++edges_in_comp;
            }
        int center = -1;
        for (auto [vert, deg] : degree)
            if (deg == edges_in_comp) center = vert;
        if (center < 0) throw AxiomViolationError("pair-graph component is not a star");
        comp_center[ci] = element_bit(center);
        for (auto [vert, deg] : degree)
            if (vert != center) comp_leaves[ci] |= element_bit(vert);
    }

    // bipartitions splitting every pair-graph edge: per component the center goes to
    // one side and its leaves to the other; component 0 is pinned to dedupe
    for (unsigned choice = 0; choice < (1u << comp_ids.size()); ++choice) {
        if (choice & 1u) continue;
        ObstructionReport::Candidate cand;
        for (std::size_t ci = 0; ci < comp_ids.size(); ++ci) {
            if ((choice >> ci) & 1u) {
                cand.part2 |= comp_center[ci];
                cand.part1 |= comp_leaves[ci];
            } else {
                cand.part1 |= comp_center[ci];
                cand.part2 |= comp_leaves[ci];
            }
        }
        auto kill = [&](Mask part) -> std::string {
            if (part == a || part == b || part == c2)
                return "part equals a hyperedge that is itself a transversal";
            if (is_subset(part, xyz))
                return "part lies inside the triple-intersection set, excluded by condition H";
            return "";
        };
        std::string reason = kill(cand.part1);
        if (reason.empty()) reason = kill(cand.part2);
        cand.killed = !reason.empty();
        cand.kill_reason = reason;
        t.candidates.push_back(std::move(cand));
    }

    bool all_killed = !t.candidates.empty();
    for (const auto& cand : t.candidates) all_killed = all_killed && cand.killed;
    t.verified = t.union_proper && t.restriction_edge_count == 3 && t.restriction_bn == 2 &&
                 t.star_components == 3 && t.stars_cover_union && t.xyz_meets_every_minb_once && all_killed;
    return t;
}

}  // namespace detail

inline ObstructionReport affine_obstruction(const Clutter& c, bool sweep_all_triples = false,
                                            const Caps& caps = default_caps()) {
    auto axioms = verify_affine_axioms(c);
    if (!axioms.ok) throw AxiomViolationError("not a combinatorial affine plane: " + axioms.violation);
    ObstructionReport r;
    r.bn = blocking_number(c);
    if (r.bn < 3)
        throw NotApplicableError("the obstruction argument needs blocking number at least 3, got " +
                                 std::to_string(r.bn));
    auto minb = min_transversals(c, caps);
    const auto& es = c.edges();
    bool done = false;
    for (std::size_t i = 0; i < es.size() && !done; ++i)
        for (std::size_t j = i + 1; j < es.size() && !done; ++j)
            for (std::size_t k = j + 1; k < es.size() && !done; ++k) {
                if ((es[i] & es[j] & es[k]) != 0) continue;
                r.triples.push_back(detail::analyze_triple(c, minb, es[i], es[j], es[k]));
                done = !sweep_all_triples;
            }
    if (r.triples.empty()) throw AxiomViolationError("no hyperedge triple with empty common intersection");
    r.obstruction_verified = true;
    for (const auto& t : r.triples) r.obstruction_verified = r.obstruction_verified && t.verified;
    return r;
}

}  // namespace clutterkit
