#pragma once

#include <algorithm>
#include <array>
#include <optional>
#include <string>
#include <utility>
#include <vector>

#include "clutterkit/clutter.hpp"
#include "clutterkit/errors.hpp"

namespace clutterkit {

inline Clutter q6() {
    return make_clutter({"1", "2", "3", "4", "5", "6"},
                        {{"1", "3", "5"}, {"1", "4", "6"}, {"2", "3", "6"}, {"2", "4", "5"}});
}

struct AxiomCheck {
    bool ok = true;
    std::string violation;
};

namespace detail {

inline std::vector<std::vector<int>> cooccurrence_counts(const Clutter& c) {
    std::size_t n = static_cast<std::size_t>(c.ground_size());
    std::vector<std::vector<int>> co(n, std::vector<int>(n, 0));
    for (Mask e : c.edges())
        for_each_element(e, [&](int i) {
            for_each_element(e, [&](int j) { co[static_cast<std::size_t>(i)][static_cast<std::size_t>(j)]++; });
        });
    return co;
}

inline bool is_prime(int q) {
    if (q < 2) return false;
    for (int d = 2; d * d <= q; ++d)
        if (q % d == 0) return false;
    return true;
}

}  // namespace detail

// Projective axioms, with hyperedges in the role of points:
// (1) any two elements lie in exactly one common hyperedge,
// (2) any two hyperedges intersect in exactly one element,
// (3) four elements exist of which no hyperedge contains more than two.
inline AxiomCheck verify_projective_axioms(const Clutter& c) {
    auto co = detail::cooccurrence_counts(c);
    int n = c.ground_size();
    for (int i = 0; i < n; ++i)
        for (int j = i + 1; j < n; ++j)
            if (co[static_cast<std::size_t>(i)][static_cast<std::size_t>(j)] != 1)
                return {false, "axiom (1): elements " + c.ground()[static_cast<std::size_t>(i)] + "," +
                                   c.ground()[static_cast<std::size_t>(j)] + " lie in " +
                                   std::to_string(co[static_cast<std::size_t>(i)][static_cast<std::size_t>(j)]) +
                                   " common hyperedges"};
    const auto& es = c.edges();
    for (std::size_t i = 0; i < es.size(); ++i)
        for (std::size_t j = i + 1; j < es.size(); ++j)
            if (set_size(es[i] & es[j]) != 1)
                return {false, "axiom (2): hyperedges " + c.set_to_string(es[i]) + "," + c.set_to_string(es[j]) +
                                   " intersect in " + std::to_string(set_size(es[i] & es[j])) + " elements"};
    for (int a = 0; a < n; ++a)
        for (int b = a + 1; b < n; ++b)
            for (int d = b + 1; d < n; ++d)
                for (int e = d + 1; e < n; ++e) {
                    Mask quad = element_bit(a) | element_bit(b) | element_bit(d) | element_bit(e);
                    bool ok = true;
                    for (Mask h : es)
                        if (set_size(h & quad) > 2) {
                            ok = false;
                            break;
                        }
                    if (ok) return {};
                }
    return {false, "axiom (3): no four elements in general position"};
}

// Affine axioms:
// (1) any two hyperedges intersect in exactly one element,
// (2) for a and H with a ∉ H there is a unique b ∈ H sharing no hyperedge with a,
// (3) three hyperedges exist with empty common intersection.
inline AxiomCheck verify_affine_axioms(const Clutter& c) {
    const auto& es = c.edges();
    for (std::size_t i = 0; i < es.size(); ++i)
        for (std::size_t j = i + 1; j < es.size(); ++j)
            if (set_size(es[i] & es[j]) != 1)
                return {false, "axiom (1): hyperedges " + c.set_to_string(es[i]) + "," + c.set_to_string(es[j]) +
                                   " intersect in " + std::to_string(set_size(es[i] & es[j])) + " elements"};
    auto co = detail::cooccurrence_counts(c);
    for (int a = 0; a < c.ground_size(); ++a)
        for (Mask h : es) {
            if (has_element(h, a)) continue;
            int lonely = 0;
            for_each_element(h, [&](int b) {
                if (co[static_cast<std::size_t>(a)][static_cast<std::size_t>(b)] == 0) ++lonely;
            });
            if (lonely != 1)
                return {false, "axiom (2): element " + c.ground()[static_cast<std::size_t>(a)] +
                                   " has " + std::to_string(lonely) + " non-collinear partners in " +
                                   c.set_to_string(h)};
        }
    for (std::size_t i = 0; i < es.size(); ++i)
        for (std::size_t j = i + 1; j < es.size(); ++j)
            for (std::size_t k = j + 1; k < es.size(); ++k)
                if ((es[i] & es[j] & es[k]) == 0) return {};
    return {false, "axiom (3): every three hyperedges share an element"};
}

// PG(2,q) over the prime field, with the paper-facing convention that the clutter's
// elements are the lines and each hyperedge is the pencil of lines through a point.
inline Clutter projective_plane(int q) {
    if (!detail::is_prime(q)) throw NotPrimeError("projective_plane requires a prime order, got " + std::to_string(q));
    if (q > 7) throw CapExceededError("projective_plane order capped at 7");
    std::vector<std::array<int, 3>> reps;
    for (int a = 0; a < q; ++a)
        for (int b = 0; b < q; ++b)
            for (int c = 0; c < q; ++c) {
                if (a == 0 && b == 0 && c == 0) continue;
                int lead = a != 0 ? a : (b != 0 ? b : c);
                if (lead != 1) continue;
                reps.push_back({a, b, c});
            }
    std::vector<std::string> line_labels;
    line_labels.reserve(reps.size());
    for (const auto& r : reps)
        line_labels.push_back(std::to_string(r[0]) + std::to_string(r[1]) + std::to_string(r[2]));
    std::vector<Mask> edges;
    edges.reserve(reps.size());
    for (const auto& point : reps) {
        Mask pencil = 0;
        for (std::size_t l = 0; l < reps.size(); ++l) {
            int inner = point[0] * reps[l][0] + point[1] * reps[l][1] + point[2] * reps[l][2];
            if (inner % q == 0) pencil |= element_bit(static_cast<int>(l));
        }
        edges.push_back(pencil);
    }
    return Clutter::from_masks(std::move(line_labels), std::move(edges));
}

// Delete one element (a line) from a combinatorial projective plane.
inline Clutter affine_plane_from(const Clutter& pp, int element_id) {
    if (element_id < 0 || element_id >= pp.ground_size())
        throw InvalidArgumentError("affine_plane_from: element id out of range");
    auto axioms = verify_projective_axioms(pp);
    if (!axioms.ok) throw AxiomViolationError("input is not a combinatorial projective plane: " + axioms.violation);
    Clutter ap = delete_elements(pp, element_bit(element_id));
    auto affine = verify_affine_axioms(ap);
    if (!affine.ok) throw AxiomViolationError("derived clutter fails affine axioms: " + affine.violation);
    return ap;
}

inline Clutter affine_plane(int q) { return affine_plane_from(projective_plane(q), 0); }

struct Graph {
    std::vector<std::string> vertices;
    std::vector<std::pair<int, int>> edges;  // index pairs, first < second

    int vertex_id(std::string_view label) const {
        for (std::size_t i = 0; i < vertices.size(); ++i)
            if (vertices[i] == label) return static_cast<int>(i);
        throw UnknownLabelError("unknown vertex: " + std::string(label));
    }
};

inline Graph make_graph(std::vector<std::string> vertex_labels,
                        const std::vector<std::pair<std::string, std::string>>& edge_labels) {
    Graph g;
    g.vertices = std::move(vertex_labels);
    for (std::size_t i = 0; i < g.vertices.size(); ++i)
        for (std::size_t j = i + 1; j < g.vertices.size(); ++j)
            if (g.vertices[i] == g.vertices[j]) throw InvalidArgumentError("duplicate vertex label: " + g.vertices[i]);
    for (const auto& [ua, vb] : edge_labels) {
        int u = g.vertex_id(ua), v = g.vertex_id(vb);
        if (u == v) throw DegenerateGraphError("loop at vertex " + ua);
        auto e = std::minmax(u, v);
        if (std::find(g.edges.begin(), g.edges.end(), std::make_pair(e.first, e.second)) != g.edges.end())
            throw DegenerateGraphError("multi-edge " + ua + "-" + vb);
        g.edges.emplace_back(e.first, e.second);
    }
    return g;
}

// Ground set = E(G); one hyperedge per vertex, its incident edge set, minimalized.
inline Clutter vertex_cut_clutter(const Graph& g) {
    if (g.vertices.empty() || g.edges.empty()) throw DegenerateGraphError("vertex cut clutter of an empty graph");
    std::vector<std::string> ground;
    ground.reserve(g.edges.size());
    for (const auto& [u, v] : g.edges)
        ground.push_back(g.vertices[static_cast<std::size_t>(u)] + "-" + g.vertices[static_cast<std::size_t>(v)]);
    std::vector<Mask> stars(g.vertices.size(), 0);
    for (std::size_t e = 0; e < g.edges.size(); ++e) {
        stars[static_cast<std::size_t>(g.edges[e].first)] |= element_bit(static_cast<int>(e));
        stars[static_cast<std::size_t>(g.edges[e].second)] |= element_bit(static_cast<int>(e));
    }
    for (std::size_t v = 0; v < stars.size(); ++v)
        if (stars[v] == 0)
            throw DegenerateGraphError("isolated vertex " + g.vertices[v]);
    return Clutter::from_masks(std::move(ground), minimalize(std::move(stars)));
}

namespace detail {

inline bool graph_connected_without(const Graph& g, Mask removed) {
    int n = static_cast<int>(g.vertices.size());
    int start = -1;
    for (int v = 0; v < n; ++v)
        if (!has_element(removed, v)) {
            start = v;
            break;
        }
    if (start < 0) return true;
    Mask seen = element_bit(start);
    std::vector<int> stack{start};
    while (!stack.empty()) {
        int v = stack.back();
        stack.pop_back();
        for (const auto& [a, b] : g.edges) {
            int w = a == v ? b : (b == v ? a : -1);
            if (w < 0 || has_element(removed, w) || has_element(seen, w)) continue;
            seen |= element_bit(w);
            stack.push_back(w);
        }
    }
    int alive = 0;
    for (int v = 0; v < n; ++v)
        if (!has_element(removed, v)) ++alive;
    return set_size(seen) == alive;
}

inline bool has_perfect_matching(const std::vector<Mask>& adj, Mask alive) {
    if (alive == 0) return true;
    int v = lowest_element(alive);
    Mask rest = alive & ~element_bit(v);
    Mask partners = adj[static_cast<std::size_t>(v)] & rest;
    bool ok = false;
    for_each_element(partners, [&](int w) {
        if (!ok && has_perfect_matching(adj, rest & ~element_bit(w))) ok = true;
    });
    return ok;
}

}  // namespace detail

// 3-connected and G-{u,v} has a perfect matching for every vertex pair; brute force.
inline bool is_brick(const Graph& g, const Caps& caps = default_caps()) {
    int n = static_cast<int>(g.vertices.size());
    if (n > caps.brick_max_vertices)
        throw CapExceededError("brick check refused above " + std::to_string(caps.brick_max_vertices) + " vertices");
    if (n < 4 || n % 2 != 0) return false;
    if (!detail::graph_connected_without(g, 0)) return false;
    for (int u = 0; u < n; ++u)
        if (!detail::graph_connected_without(g, element_bit(u))) return false;
    for (int u = 0; u < n; ++u)
        for (int v = u + 1; v < n; ++v)
            if (!detail::graph_connected_without(g, element_bit(u) | element_bit(v))) return false;
    std::vector<Mask> adj(static_cast<std::size_t>(n), 0);
    for (const auto& [a, b] : g.edges) {
        adj[static_cast<std::size_t>(a)] |= element_bit(b);
        adj[static_cast<std::size_t>(b)] |= element_bit(a);
    }
    Mask all = (n == 64) ? ~Mask{0} : (Mask{1} << n) - 1;
    for (int u = 0; u < n; ++u)
        for (int v = u + 1; v < n; ++v)
            if (!detail::has_perfect_matching(adj, all & ~(element_bit(u) | element_bit(v)))) return false;
    return true;
}

}  // namespace clutterkit
