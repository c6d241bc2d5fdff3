#pragma once

#include <algorithm>
#include <map>
#include <optional>
#include <utility>
#include <vector>

#include "clutterkit/clutter.hpp"
#include "clutterkit/errors.hpp"
#include "clutterkit/linalg.hpp"
#include "clutterkit/rational.hpp"

namespace clutterkit {

enum class RowTag { MinTransversal, Transversal, NonNeg, Box };

// Coefficient vectors are 0/1 over the ground set. Box rows read <coef,x> <= rhs,
// every other inequality reads <coef,x> >= rhs.
struct HRow {
    Mask coeff;
    Rational rhs;
    RowTag tag;
};

struct HPolyhedron {
    std::vector<std::pair<Mask, Rational>> equalities;  // <coef,x> = rhs
    std::vector<HRow> inequalities;
    int ambient_dim = 0;
};

// Enumerated vertices with, per point, the indices of its tight constraints
// (equalities first, then inequalities, in HPolyhedron order).
struct VertexSet {
    RMatrix points;
    std::vector<std::vector<int>> incidence;
};

namespace detail {

struct BitVec {
    std::vector<std::uint64_t> words;
    explicit BitVec(std::size_t bits = 0) : words((bits + 63) / 64, 0) {}
    void set(std::size_t i) { words[i / 64] |= (std::uint64_t{1} << (i % 64)); }
    bool test(std::size_t i) const { return (words[i / 64] >> (i % 64)) & 1; }
    static BitVec intersect(const BitVec& a, const BitVec& b) {
        BitVec r;
        r.words.resize(a.words.size());
        for (std::size_t i = 0; i < a.words.size(); ++i) r.words[i] = a.words[i] & b.words[i];
        return r;
    }
    bool contains(const BitVec& other) const {  // other ⊆ this
        for (std::size_t i = 0; i < words.size(); ++i)
            if (other.words[i] & ~words[i]) return false;
        return true;
    }
};

inline RVec normalize_ray(RVec v) {
    BigInt l = 1;
    for (const auto& x : v) l = lcm(l, denominator(x));
    std::vector<BigInt> ints(v.size());
    BigInt g = 0;
    for (std::size_t i = 0; i < v.size(); ++i) {
        ints[i] = numerator(v[i]) * (l / denominator(v[i]));
        g = gcd(g, ints[i]);
    }
    if (g == 0) g = 1;
    for (std::size_t i = 0; i < v.size(); ++i) v[i] = Rational(ints[i] / g);
    return v;
}

struct DDRay {
    RVec v;
    BitVec tight;  // over constraint rows processed so far
};

// Extreme rays of {z : rows[i]·z >= 0}. Double description with explicit
// lineality handling and the combinatorial adjacency test. Returns the ray
// list and the remaining lineality basis (nonempty means the cone is not pointed).
struct DDResult {
    std::vector<DDRay> rays;
    RMatrix lineality;
};

inline DDResult extreme_rays(const RMatrix& rows, std::size_t dim, std::size_t ray_cap) {
    DDResult st;
    st.lineality.assign(dim, RVec(dim, Rational(0)));
    for (std::size_t i = 0; i < dim; ++i) st.lineality[i][i] = 1;

    for (std::size_t idx = 0; idx < rows.size(); ++idx) {
        const RVec& a = rows[idx];
        std::size_t pivot = st.lineality.size();
        for (std::size_t i = 0; i < st.lineality.size(); ++i)
            if (dot(a, st.lineality[i]) != 0) {
                pivot = i;
                break;
            }
        if (pivot != st.lineality.size()) {
            RVec w = st.lineality[pivot];
            Rational dw = dot(a, w);
            if (dw < 0) {
                for (auto& x : w) x = -x;
                dw = -dw;
            }
            RMatrix new_lin;
            for (std::size_t i = 0; i < st.lineality.size(); ++i) {
                if (i == pivot) continue;
                RVec v = st.lineality[i];
                Rational dv = dot(a, v);
                if (dv != 0)
                    for (std::size_t j = 0; j < dim; ++j) v[j] -= dv / dw * w[j];
                new_lin.push_back(std::move(v));
            }
            st.lineality = std::move(new_lin);
            for (auto& r : st.rays) {
                Rational dr = dot(a, r.v);
                if (dr != 0) {
                    for (std::size_t j = 0; j < dim; ++j) r.v[j] -= dr / dw * w[j];
                    r.v = normalize_ray(std::move(r.v));
                }
                r.tight.set(idx);  // projected rays satisfy the new row with equality
            }
            DDRay wr{normalize_ray(std::move(w)), BitVec(rows.size())};
            for (std::size_t j = 0; j < idx; ++j) wr.tight.set(j);  // lineality was orthogonal to all previous rows
            st.rays.push_back(std::move(wr));
            continue;
        }

        std::vector<Rational> val(st.rays.size());
        for (std::size_t i = 0; i < st.rays.size(); ++i) val[i] = dot(a, st.rays[i].v);
        std::vector<std::size_t> pos, neg;
        for (std::size_t i = 0; i < st.rays.size(); ++i) {
            if (val[i] > 0) pos.push_back(i);
            if (val[i] < 0) neg.push_back(i);
        }
        std::vector<DDRay> next;
        for (std::size_t i = 0; i < st.rays.size(); ++i) {
            if (val[i] < 0) continue;
            DDRay r = st.rays[i];
            if (val[i] == 0) r.tight.set(idx);
            next.push_back(std::move(r));
        }
        for (std::size_t p : pos)
            for (std::size_t q : neg) {
                BitVec common = BitVec::intersect(st.rays[p].tight, st.rays[q].tight);
                bool adjacent = true;
                for (std::size_t r = 0; r < st.rays.size() && adjacent; ++r) {
                    if (r == p || r == q) continue;
                    if (st.rays[r].tight.contains(common)) adjacent = false;
                }
                if (!adjacent) continue;
                RVec v(dim);
                for (std::size_t j = 0; j < dim; ++j)
                    v[j] = val[p] * st.rays[q].v[j] - val[q] * st.rays[p].v[j];
                DDRay nr{normalize_ray(std::move(v)), common};
                nr.tight.set(idx);
                next.push_back(std::move(nr));
            }
        if (next.size() > ray_cap)
            throw CapExceededError("double description exceeded ray cap of " + std::to_string(ray_cap));
        st.rays = std::move(next);
    }
    return st;
}

inline RVec mask_to_rvec(Mask m, int dim) {
    RVec v(static_cast<std::size_t>(dim), Rational(0));
    for_each_element(m, [&](int id) { v[static_cast<std::size_t>(id)] = 1; });
    return v;
}

}  // namespace detail

// All vertices, exact and canonically ordered, each with a full-rank tightness
// certificate. Throws UnboundedPolyhedronError when the polyhedron has vertices
// but is unbounded, or contains a line.
inline VertexSet vertices(const HPolyhedron& p, const Caps& caps = default_caps()) {
    int n = p.ambient_dim;
    if (n > caps.polytope_max_elements)
        throw CapExceededError("vertex enumeration refused above " +
                               std::to_string(caps.polytope_max_elements) + " dimensions");

    RVec x0(static_cast<std::size_t>(n), Rational(0));
    RMatrix basis;  // nullspace of the equality system
    if (p.equalities.empty()) {
        basis.assign(static_cast<std::size_t>(n), RVec(static_cast<std::size_t>(n), Rational(0)));
        for (int i = 0; i < n; ++i) basis[static_cast<std::size_t>(i)][static_cast<std::size_t>(i)] = 1;
    } else {
        RMatrix a;
        RVec b;
        for (const auto& [coeff, rhs] : p.equalities) {
            a.push_back(detail::mask_to_rvec(coeff, n));
            b.push_back(rhs);
        }
        auto solved = solve_affine(a, b);
        if (!solved) return {};  // inconsistent equalities: empty polyhedron
        x0 = std::move(solved->particular);
        basis = std::move(solved->nullspace);
    }
    std::size_t k = basis.size();

    // homogenized rows over (t, s)
    RMatrix rows;
    {
        RVec srow(k + 1, Rational(0));
        srow[k] = 1;
        rows.push_back(std::move(srow));
    }
    for (const auto& row : p.inequalities) {
        RVec coef = detail::mask_to_rvec(row.coeff, n);
        RVec r(k + 1, Rational(0));
        for (std::size_t j = 0; j < k; ++j) r[j] = dot(coef, basis[j]);
        r[k] = dot(coef, x0) - row.rhs;
        if (row.tag == RowTag::Box)
            for (auto& x : r) x = -x;
        rows.push_back(std::move(r));
    }

    auto dd = detail::extreme_rays(rows, k + 1, caps.dd_ray_cap);
    if (!dd.lineality.empty()) throw UnboundedPolyhedronError("polyhedron contains a line");

    RMatrix points;
    bool recession = false;
    for (const auto& ray : dd.rays) {
        const Rational& s = ray.v[k];
        if (s == 0) {
            recession = true;
            continue;
        }
        RVec x = x0;
        for (std::size_t j = 0; j < k; ++j) {
            Rational t = ray.v[j] / s;
            if (t != 0)
                for (int e = 0; e < n; ++e) x[static_cast<std::size_t>(e)] += t * basis[j][static_cast<std::size_t>(e)];
        }
        points.push_back(std::move(x));
    }
    if (points.empty()) return {};  // empty polyhedron (recession rays alone certify nothing)
    if (recession) throw UnboundedPolyhedronError("polyhedron is unbounded");

    std::sort(points.begin(), points.end());
    points.erase(std::unique(points.begin(), points.end()), points.end());

    VertexSet out;
    out.points = std::move(points);
    for (const auto& x : out.points) {
        std::vector<int> tight;
        RMatrix tight_rows;
        int id = 0;
        for (const auto& [coeff, rhs] : p.equalities) {
            if (dot(detail::mask_to_rvec(coeff, n), x) != rhs)
                throw Error("internal: enumerated vertex violates an equality");
            tight.push_back(id);
            tight_rows.push_back(detail::mask_to_rvec(coeff, n));
            ++id;
        }
        for (const auto& row : p.inequalities) {
            Rational v = dot(detail::mask_to_rvec(row.coeff, n), x);
            bool ok = row.tag == RowTag::Box ? v <= row.rhs : v >= row.rhs;
            if (!ok) throw Error("internal: enumerated vertex violates an inequality");
            if (v == row.rhs) {
                tight.push_back(id);
                tight_rows.push_back(detail::mask_to_rvec(row.coeff, n));
            }
            ++id;
        }
        if (matrix_rank(tight_rows) != n)
            throw Error("internal: vertex certificate rank-deficient");
        out.incidence.push_back(std::move(tight));
    }
    return out;
}

// I(C): minimum transversals as equalities, remaining transversals and x >= 0 as inequalities.
inline HPolyhedron build_IC(const Clutter& c, const std::vector<Mask>& blocker_edges) {
    HPolyhedron p;
    p.ambient_dim = c.ground_size();
    auto minb = min_transversals_of(blocker_edges);
    for (Mask b : minb) p.equalities.emplace_back(b, Rational(1));
    for (Mask b : blocker_edges)
        if (std::find(minb.begin(), minb.end(), b) == minb.end())
            p.inequalities.push_back(HRow{b, Rational(1), RowTag::Transversal});
    for (int e = 0; e < c.ground_size(); ++e)
        p.inequalities.push_back(HRow{element_bit(e), Rational(0), RowTag::NonNeg});
    return p;
}

inline HPolyhedron build_IC(const Clutter& c, const Caps& caps = default_caps()) {
    detail::check_nondegenerate(c);
    return build_IC(c, blocker(c, caps).edges());
}

struct IntegralityResult {
    bool integral = true;
    std::optional<RVec> fractional_vertex;
};

inline IntegralityResult is_integral_vertex_set(const VertexSet& vs) {
    for (const auto& x : vs.points)
        for (const auto& coord : x)
            if (!is_integer(coord)) return {false, x};
    return {};
}

inline IntegralityResult is_integral_polytope(const HPolyhedron& p, const Caps& caps = default_caps()) {
    return is_integral_vertex_set(vertices(p, caps));
}

inline int polytope_dimension(const VertexSet& vs) {
    return vs.points.empty() ? -1 : affine_dimension(vs.points);
}

inline bool is_simplex(const VertexSet& vs) {
    return !vs.points.empty() && static_cast<int>(vs.points.size()) == polytope_dimension(vs) + 1;
}

inline bool is_simplex(const HPolyhedron& p, const Caps& caps = default_caps()) {
    return is_simplex(vertices(p, caps));
}

// A facet as its vertex set, annotated with all inequality rows whose tight set is
// exactly that facet (defining rows are not unique below full dimension).
struct Facet {
    std::vector<int> vertex_ids;
    std::vector<int> constraint_ids;  // HPolyhedron inequality indices (offset by #equalities in incidence)
};

inline std::vector<Facet> facets(const HPolyhedron& p, const VertexSet& vs) {
    std::vector<Facet> out;
    if (vs.points.empty()) return out;
    int dim = polytope_dimension(vs);
    if (dim <= 0) return out;  // a point has no facets
    std::size_t eq_count = p.equalities.size();
    std::map<std::vector<int>, std::vector<int>> groups;
    for (std::size_t i = 0; i < p.inequalities.size(); ++i) {
        int cid = static_cast<int>(eq_count + i);
        std::vector<int> tight_vertices;
        for (std::size_t v = 0; v < vs.points.size(); ++v) {
            const auto& inc = vs.incidence[v];
            if (std::find(inc.begin(), inc.end(), cid) != inc.end())
                tight_vertices.push_back(static_cast<int>(v));
        }
        if (tight_vertices.empty() || tight_vertices.size() == vs.points.size()) continue;
        RMatrix pts;
        for (int v : tight_vertices) pts.push_back(vs.points[static_cast<std::size_t>(v)]);
        if (affine_dimension(pts) != dim - 1) continue;
        groups[tight_vertices].push_back(static_cast<int>(i));
    }
    for (auto& [verts, rows] : groups) out.push_back(Facet{verts, rows});
    return out;
}

struct IdealnessResult {
    bool ideal = true;
    std::optional<RVec> fractional_vertex;
};

// Idealness of the blocking polyhedron {x >= 0 : M(C)x >= 1}: box with x <= 1
// (vertices of the blocking polyhedron are 0/1-capped since coefficients are 0/1),
// enumerate, then keep exactly the points whose tight original rows have full rank.
inline IdealnessResult is_ideal(const Clutter& c, const Caps& caps = default_caps()) {
    detail::check_nondegenerate(c);
    int n = c.ground_size();
    if (n > caps.polytope_max_elements)
        throw CapExceededError("idealness check refused above " +
                               std::to_string(caps.polytope_max_elements) + " elements");
    HPolyhedron p;
    p.ambient_dim = n;
    for (Mask e : c.edges()) p.inequalities.push_back(HRow{e, Rational(1), RowTag::Transversal});
    for (int e = 0; e < n; ++e) p.inequalities.push_back(HRow{element_bit(e), Rational(0), RowTag::NonNeg});
    for (int e = 0; e < n; ++e) p.inequalities.push_back(HRow{element_bit(e), Rational(1), RowTag::Box});
    VertexSet vs = vertices(p, caps);

    IdealnessResult out;
    for (std::size_t v = 0; v < vs.points.size(); ++v) {
        RMatrix original_tight;
        for (int cid : vs.incidence[v]) {
            const HRow& row = p.inequalities[static_cast<std::size_t>(cid)];
            if (row.tag == RowTag::Box) continue;
            original_tight.push_back(detail::mask_to_rvec(row.coeff, n));
        }
        if (original_tight.empty() || matrix_rank(original_tight) != n) continue;
        for (const auto& coord : vs.points[v])
            if (!is_integer(coord)) {
                out.ideal = false;
                if (!out.fractional_vertex) out.fractional_vertex = vs.points[v];
                break;
            }
    }
    return out;
}

}  // namespace clutterkit
