#pragma once

#include <algorithm>
#include <bit>
#include <cstdint>
#include <map>
#include <optional>
#include <string>
#include <string_view>
#include <unordered_map>
#include <utility>
#include <vector>

#include "clutterkit/errors.hpp"

namespace clutterkit {

// A subset of the ground set as a fixed-width bitmask; element ids are bit positions.
using Mask = std::uint64_t;

constexpr int kMaxGroundSize = 63;

inline int set_size(Mask m) { return std::popcount(m); }
inline Mask element_bit(int id) { return Mask{1} << id; }
inline bool has_element(Mask m, int id) { return (m >> id) & 1; }
inline int lowest_element(Mask m) { return std::countr_zero(m); }
inline bool is_subset(Mask a, Mask b) { return (a & ~b) == 0; }

template <typename F>
inline void for_each_element(Mask m, F&& f) {
    while (m) {
        f(std::countr_zero(m));
        m &= m - 1;
    }
}

// Canonical set order: by cardinality, then lexicographic on the sorted element
// sequences. For equal cardinality the first differing element decides, which is
// the lowest bit of a^b.
inline bool set_less(Mask a, Mask b) {
    int sa = set_size(a), sb = set_size(b);
    if (sa != sb) return sa < sb;
    if (a == b) return false;
    Mask diff = a ^ b;
    return (a & (diff & (~diff + 1))) != 0;
}

struct Element {
    int id;
    std::string label;
};

// Ground set plus an antichain of hyperedges, kept in canonical order.
// The two degenerate families ({} and {∅}) are representable so that minor
// operations stay closed; analysis operations reject them.
class Clutter {
public:
    Clutter() = default;

    static Clutter from_masks(std::vector<std::string> ground, std::vector<Mask> edges) {
        Clutter c;
        c.ground_ = std::move(ground);
        if (c.ground_.size() > static_cast<std::size_t>(kMaxGroundSize))
            throw CapExceededError("ground set larger than " + std::to_string(kMaxGroundSize));
        for (std::size_t i = 0; i < c.ground_.size(); ++i) {
            if (c.ground_[i].empty()) throw InvalidArgumentError("empty element label");
            if (!c.index_.emplace(c.ground_[i], static_cast<int>(i)).second)
                throw InvalidArgumentError("duplicate element label: " + c.ground_[i]);
        }
        Mask g = c.ground_mask();
        for (Mask e : edges)
            if (!is_subset(e, g)) throw UnknownLabelError("edge uses elements outside the ground set");
        std::sort(edges.begin(), edges.end(), set_less);
        for (std::size_t i = 0; i + 1 < edges.size(); ++i)
            if (edges[i] == edges[i + 1])
                throw DuplicateEdgeError("duplicate edge " + c.set_to_string(edges[i]));
        for (std::size_t i = 0; i < edges.size(); ++i)
            for (std::size_t j = 0; j < edges.size(); ++j)
                if (i != j && is_subset(edges[i], edges[j]))
                    throw NotAntichainError("edge " + c.set_to_string(edges[i]) +
                                            " is contained in edge " + c.set_to_string(edges[j]));
        c.edges_ = std::move(edges);
        return c;
    }

    static Clutter from_labels(std::vector<std::string> ground,
                               const std::vector<std::vector<std::string>>& families) {
        Clutter skeleton = from_masks(ground, {});
        std::vector<Mask> edges;
        edges.reserve(families.size());
        for (const auto& fam : families) edges.push_back(skeleton.mask_of(fam));
        return from_masks(skeleton.ground_, std::move(edges));
    }

    const std::vector<std::string>& ground() const { return ground_; }
    int ground_size() const { return static_cast<int>(ground_.size()); }
    const std::vector<Mask>& edges() const { return edges_; }
    int edge_count() const { return static_cast<int>(edges_.size()); }
    Mask ground_mask() const {
        return ground_.empty() ? 0 : (ground_.size() == 64 ? ~Mask{0} : (Mask{1} << ground_.size()) - 1);
    }

    bool degenerate() const { return edges_.empty() || (edges_.size() == 1 && edges_[0] == 0); }
    bool has_empty_edge() const { return !edges_.empty() && edges_[0] == 0; }
    bool contains_edge(Mask e) const { return std::binary_search(edges_.begin(), edges_.end(), e, set_less); }

    Element element(int id) const { return Element{id, ground_[static_cast<std::size_t>(id)]}; }

    int element_id(std::string_view label) const {
        auto it = index_.find(std::string(label));
        if (it == index_.end()) throw UnknownLabelError("unknown element label: " + std::string(label));
        return it->second;
    }

    Mask mask_of(const std::vector<std::string>& labels) const {
        Mask m = 0;
        for (const auto& l : labels) m |= element_bit(element_id(l));
        return m;
    }

    std::vector<std::string> labels_of(Mask m) const {
        std::vector<std::string> out;
        for_each_element(m, [&](int id) { out.push_back(ground_[static_cast<std::size_t>(id)]); });
        return out;
    }

    std::string set_to_string(Mask m) const {
        std::string s = "{";
        bool first = true;
        for_each_element(m, [&](int id) {
            if (!first) s += ",";
            s += ground_[static_cast<std::size_t>(id)];
            first = false;
        });
        return s + "}";
    }

    friend bool operator==(const Clutter& a, const Clutter& b) {
        return a.ground_ == b.ground_ && a.edges_ == b.edges_;
    }

private:
    std::vector<std::string> ground_;
    std::vector<Mask> edges_;
    std::unordered_map<std::string, int> index_;
};

// Resource guards; every cap errors out, nothing is silently truncated.
struct Caps {
    std::size_t blocker_antichain_cap = 100000;
    int minor_sweep_max_elements = 14;   // minimally-non-packing / condition B sweeps
    int separability_max_elements = 20;
    int polytope_max_elements = 16;
    std::size_t dd_ray_cap = 200000;
    int brick_max_vertices = 12;
};

inline const Caps& default_caps() {
    static const Caps caps{};
    return caps;
}

inline Clutter make_clutter(std::vector<std::string> ground,
                            const std::vector<std::vector<std::string>>& families) {
    return Clutter::from_labels(std::move(ground), families);
}

// Inclusion-minimal members, deduplicated.
inline std::vector<Mask> minimalize(std::vector<Mask> families) {
    std::sort(families.begin(), families.end(), set_less);
    families.erase(std::unique(families.begin(), families.end()), families.end());
    std::vector<Mask> out;
    for (Mask f : families) {
        bool dominated = false;
        for (Mask kept : out)
            if (is_subset(kept, f)) {  // kept != f after dedupe
                dominated = true;
                break;
            }
        if (!dominated) out.push_back(f);
    }
    return out;
}

namespace detail {

inline void check_nondegenerate(const Clutter& c) {
    if (c.edges().empty()) throw DegenerateClutterError("clutter has no hyperedges");
    if (c.has_empty_edge()) throw DegenerateClutterError("clutter contains the empty hyperedge");
}

// Berge's sequential blocker: intersect-and-minimalize edge by edge.
// blocker({}) = {∅} and blocker({∅}) = {} fall out of the recursion base.
inline std::vector<Mask> blocker_edges(const std::vector<Mask>& edges, std::size_t antichain_cap) {
    std::vector<Mask> transversals{0};
    for (Mask h : edges) {
        std::vector<Mask> next;
        next.reserve(transversals.size());
        std::vector<Mask> missed;
        for (Mask t : transversals) {
            if (t & h)
                next.push_back(t);
            else
                missed.push_back(t);
        }
        for (Mask t : missed)
            for_each_element(h, [&](int id) { next.push_back(t | element_bit(id)); });
        next = minimalize(std::move(next));
        if (next.size() > antichain_cap)
            throw CapExceededError("blocker antichain exceeded cap of " + std::to_string(antichain_cap));
        transversals = std::move(next);
    }
    return transversals;  // already canonical via minimalize
}

// Exact minimum hitting set size by branch and bound; edges must all be nonempty.
inline void min_hitting_set_go(const std::vector<Mask>& edges, std::size_t next, Mask chosen, int count,
                               int& best) {
    if (count >= best) return;
    // first edge not yet hit; branching on the smallest unhit edge keeps the tree narrow
    Mask branch = 0;
    int branch_size = 65;
    for (std::size_t i = next; i < edges.size(); ++i) {
        if (edges[i] & chosen) continue;
        int s = set_size(edges[i]);
        if (s < branch_size) {
            branch = edges[i];
            branch_size = s;
        }
    }
    if (branch == 0) {
        best = count;
        return;
    }
    for_each_element(branch, [&](int id) { min_hitting_set_go(edges, next, chosen | element_bit(id), count + 1, best); });
}

inline int min_hitting_set_size(const std::vector<Mask>& edges) {
    if (edges.empty()) return 0;
    int best = static_cast<int>(edges.size());  // one hitter per edge always works
    // quick greedy upper bound is already |edges|; branch from scratch
    min_hitting_set_go(edges, 0, 0, 0, best);
    return best;
}

// Maximum number of pairwise disjoint edges, branch and bound in canonical order.
inline void max_disjoint_go(const std::vector<Mask>& edges, std::size_t i, Mask used, int count, int& best) {
    if (count + static_cast<int>(edges.size() - i) <= best) return;
    if (i == edges.size()) {
        best = std::max(best, count);
        return;
    }
    if (!(edges[i] & used)) max_disjoint_go(edges, i + 1, used | edges[i], count + 1, best);
    max_disjoint_go(edges, i + 1, used, count, best);
}

inline int max_disjoint_edges(const std::vector<Mask>& edges) {
    int best = 0;
    max_disjoint_go(edges, 0, 0, 0, best);
    return best;
}

// Edges of C/contract_m\delete_m on the same bit universe (no relabeling).
// Deletion first and contraction first agree for disjoint masks.
inline std::vector<Mask> minor_edges(const std::vector<Mask>& edges, Mask contract_m, Mask delete_m) {
    std::vector<Mask> out;
    out.reserve(edges.size());
    for (Mask e : edges)
        if (!(e & delete_m)) out.push_back(e & ~contract_m);
    return minimalize(std::move(out));
}

constexpr int kInfiniteBn = INT32_MAX;

struct MinorNumbers {
    int bn;
    int pn;
    bool trivial;
    bool packs() const { return trivial || bn == pn; }
};

// Trivial minors pack by convention: {} has bn = pn = 0; {∅} is assigned the
// infinite sentinel on both sides (no transversal exists).
inline MinorNumbers minor_numbers(const std::vector<Mask>& minor) {
    if (minor.empty()) return {0, 0, true};
    if (minor.size() == 1 && minor[0] == 0) return {kInfiniteBn, kInfiniteBn, true};
    return {min_hitting_set_size(minor), max_disjoint_edges(minor), false};
}

}  // namespace detail

// All transversals: the inclusion-minimal sets meeting every edge.
inline Clutter blocker(const Clutter& c, const Caps& caps = default_caps()) {
    return Clutter::from_masks(c.ground(), detail::blocker_edges(c.edges(), caps.blocker_antichain_cap));
}

inline std::vector<Mask> min_transversals_of(const std::vector<Mask>& blocker_edges) {
    if (blocker_edges.empty()) return {};
    int bn = set_size(blocker_edges.front());  // canonical order puts smallest first
    std::vector<Mask> out;
    for (Mask b : blocker_edges) {
        if (set_size(b) != bn) break;
        out.push_back(b);
    }
    return out;
}

inline std::vector<Mask> min_transversals(const Clutter& c, const Caps& caps = default_caps()) {
    detail::check_nondegenerate(c);
    return min_transversals_of(blocker(c, caps).edges());
}

inline int blocking_number(const Clutter& c) {
    detail::check_nondegenerate(c);
    return detail::min_hitting_set_size(c.edges());
}

inline int packing_number(const Clutter& c) {
    detail::check_nondegenerate(c);
    return detail::max_disjoint_edges(c.edges());
}

inline bool packs(const Clutter& c) { return packing_number(c) == blocking_number(c); }

namespace detail {

inline Clutter shrink_ground(const Clutter& c, Mask keep, const std::vector<Mask>& new_edges) {
    std::vector<std::string> ground;
    std::vector<int> new_id(static_cast<std::size_t>(c.ground_size()), -1);
    for (int id = 0; id < c.ground_size(); ++id)
        if (has_element(keep, id)) {
            new_id[static_cast<std::size_t>(id)] = static_cast<int>(ground.size());
            ground.push_back(c.ground()[static_cast<std::size_t>(id)]);
        }
    std::vector<Mask> remapped;
    remapped.reserve(new_edges.size());
    for (Mask e : new_edges) {
        Mask m = 0;
        for_each_element(e, [&](int id) { m |= element_bit(new_id[static_cast<std::size_t>(id)]); });
        remapped.push_back(m);
    }
    return Clutter::from_masks(std::move(ground), std::move(remapped));
}

}  // namespace detail

// C/A: minimal sets of {X−A}; may produce a degenerate clutter.
inline Clutter contract(const Clutter& c, Mask a) {
    if (!is_subset(a, c.ground_mask())) throw InvalidArgumentError("contract: A not within the ground set");
    std::vector<Mask> out;
    out.reserve(c.edges().size());
    for (Mask e : c.edges()) out.push_back(e & ~a);
    return detail::shrink_ground(c, c.ground_mask() & ~a, minimalize(std::move(out)));
}

// C\A: edges disjoint from A; may produce the empty clutter.
inline Clutter delete_elements(const Clutter& c, Mask a) {
    if (!is_subset(a, c.ground_mask())) throw InvalidArgumentError("delete: A not within the ground set");
    std::vector<Mask> out;
    for (Mask e : c.edges())
        if (!(e & a)) out.push_back(e);
    return detail::shrink_ground(c, c.ground_mask() & ~a, out);
}

// C[A] = C \ A^c
inline Clutter restrict_to(const Clutter& c, Mask a) {
    if (!is_subset(a, c.ground_mask())) throw InvalidArgumentError("restrict: A not within the ground set");
    return delete_elements(c, c.ground_mask() & ~a);
}

inline std::vector<Mask> tilde_edges(const std::vector<Mask>& edges, const std::vector<Mask>& minb) {
    std::vector<Mask> out;
    for (Mask h : edges) {
        bool keep = true;
        for (Mask b : minb)
            if (set_size(h & b) != 1) {
                keep = false;
                break;
            }
        if (keep) out.push_back(h);
    }
    return out;
}

// Subclutter of edges meeting every minimum transversal in exactly one element.
inline Clutter tilde(const Clutter& c, const Caps& caps = default_caps()) {
    detail::check_nondegenerate(c);
    return Clutter::from_masks(c.ground(), tilde_edges(c.edges(), min_transversals(c, caps)));
}

inline bool is_minimum_transversal_covered(const Clutter& c, const Caps& caps = default_caps()) {
    Mask covered = 0;
    for (Mask b : min_transversals(c, caps)) covered |= b;
    return covered == c.ground_mask();
}

// Disjoint (contract, delete) pair naming a minor.
struct MinorWitness {
    Mask contracted;
    Mask deleted;
};

// Caches bn/pn of minors of one fixed clutter, keyed by the (A,B) masks.
// Condition B and the minimally-non-packing sweep revisit identical minors.
class MinorCache {
public:
    explicit MinorCache(const Clutter& c) : edges_(c.edges()) {}

    const detail::MinorNumbers& numbers(Mask contract_m, Mask delete_m) {
        std::uint64_t key = (contract_m << 32) | delete_m;  // sweeps are capped well below 32 elements
        auto it = cache_.find(key);
        if (it != cache_.end()) return it->second;
        auto minor = detail::minor_edges(edges_, contract_m, delete_m);
        return cache_.emplace(key, detail::minor_numbers(minor)).first->second;
    }

private:
    std::vector<Mask> edges_;
    std::unordered_map<std::uint64_t, detail::MinorNumbers> cache_;
};

namespace detail {

// Enumerate disjoint (A,B) != (∅,∅) ordered by |A∪B|, then union mask, then A.
// f returns false to stop the sweep early.
template <typename F>
inline void for_each_minor_pair(Mask ground, F&& f) {
    int n = set_size(ground);
    std::vector<std::vector<Mask>> by_size(static_cast<std::size_t>(n) + 1);
    for (Mask u = 1; u <= ground; ++u) {
        if (!is_subset(u, ground)) continue;
        by_size[static_cast<std::size_t>(set_size(u))].push_back(u);
    }
    for (int k = 1; k <= n; ++k)
        for (Mask u : by_size[static_cast<std::size_t>(k)]) {
            // all A ⊆ u in ascending mask order, B = u − A
            Mask a = 0;
            while (true) {
                if (!f(a, u & ~a)) return;
                if (a == u) break;
                a = (a - u) & u;  // next submask of u in ascending order
            }
        }
}

}  // namespace detail

struct MnpResult {
    bool value = false;
    bool self_packs = false;
    std::optional<MinorWitness> witness;  // failing minor, or (∅,∅) when C itself packs
};

// C does not pack but every proper minor packs. Trivial minors pack by convention.
inline MnpResult is_minimally_non_packing(const Clutter& c, const Caps& caps = default_caps(),
                                          MinorCache* cache = nullptr) {
    detail::check_nondegenerate(c);
    if (c.ground_size() > caps.minor_sweep_max_elements)
        throw CapExceededError("minor sweep refused above " + std::to_string(caps.minor_sweep_max_elements) +
                               " elements");
    MnpResult res;
    if (packs(c)) {
        res.self_packs = true;
        res.witness = MinorWitness{0, 0};
        return res;
    }
    MinorCache local(c);
    MinorCache& mc = cache ? *cache : local;
    res.value = true;
    detail::for_each_minor_pair(c.ground_mask(), [&](Mask a, Mask b) {
        if (!mc.numbers(a, b).packs()) {
            res.value = false;
            res.witness = MinorWitness{a, b};
            return false;
        }
        return true;
    });
    return res;
}

// C and every minor pack.
inline MnpResult has_packing_property(const Clutter& c, const Caps& caps = default_caps(),
                                      MinorCache* cache = nullptr) {
    detail::check_nondegenerate(c);
    if (c.ground_size() > caps.minor_sweep_max_elements)
        throw CapExceededError("minor sweep refused above " + std::to_string(caps.minor_sweep_max_elements) +
                               " elements");
    MnpResult res;
    if (!packs(c)) {
        res.witness = MinorWitness{0, 0};
        return res;
    }
    MinorCache local(c);
    MinorCache& mc = cache ? *cache : local;
    res.value = true;
    detail::for_each_minor_pair(c.ground_mask(), [&](Mask a, Mask b) {
        if (!mc.numbers(a, b).packs()) {
            res.value = false;
            res.witness = MinorWitness{a, b};
            return false;
        }
        return true;
    });
    return res;
}

// Isomorphism test: invariant refinement (degree and pairwise co-occurrence
// profiles) followed by exhaustive backtracking over label maps.
namespace detail {

struct IsoProfile {
    std::vector<std::vector<int>> edge_sizes_at;    // per element: sorted sizes of incident edges
    std::vector<std::vector<int>> cooccurrence;     // per element pair: #edges containing both
};

inline IsoProfile iso_profile(const Clutter& c) {
    int n = c.ground_size();
    IsoProfile p;
    p.edge_sizes_at.assign(static_cast<std::size_t>(n), {});
    p.cooccurrence.assign(static_cast<std::size_t>(n), std::vector<int>(static_cast<std::size_t>(n), 0));
    for (Mask e : c.edges()) {
        int s = set_size(e);
        for_each_element(e, [&](int i) {
            p.edge_sizes_at[static_cast<std::size_t>(i)].push_back(s);
            for_each_element(e, [&](int j) { p.cooccurrence[static_cast<std::size_t>(i)][static_cast<std::size_t>(j)]++; });
        });
    }
    for (auto& v : p.edge_sizes_at) std::sort(v.begin(), v.end());
    return p;
}

inline bool iso_extend(const Clutter& a, const Clutter& b, const IsoProfile& pa, const IsoProfile& pb,
                       std::vector<int>& map_ab, std::vector<bool>& used, int next) {
    int n = a.ground_size();
    if (next == n) {
        std::vector<Mask> mapped;
        mapped.reserve(a.edges().size());
        for (Mask e : a.edges()) {
            Mask m = 0;
            for_each_element(e, [&](int i) { m |= element_bit(map_ab[static_cast<std::size_t>(i)]); });
            mapped.push_back(m);
        }
        std::sort(mapped.begin(), mapped.end(), set_less);
        return mapped == b.edges();
    }
    for (int cand = 0; cand < n; ++cand) {
        if (used[static_cast<std::size_t>(cand)]) continue;
        if (pa.edge_sizes_at[static_cast<std::size_t>(next)] != pb.edge_sizes_at[static_cast<std::size_t>(cand)]) continue;
        bool ok = true;
        for (int prev = 0; prev < next && ok; ++prev)
            ok = pa.cooccurrence[static_cast<std::size_t>(next)][static_cast<std::size_t>(prev)] ==
                 pb.cooccurrence[static_cast<std::size_t>(cand)][static_cast<std::size_t>(map_ab[static_cast<std::size_t>(prev)])];
        if (!ok) continue;
        map_ab[static_cast<std::size_t>(next)] = cand;
        used[static_cast<std::size_t>(cand)] = true;
        if (iso_extend(a, b, pa, pb, map_ab, used, next + 1)) return true;
        used[static_cast<std::size_t>(cand)] = false;
    }
    return false;
}

}  // namespace detail

inline bool are_isomorphic(const Clutter& a, const Clutter& b) {
    if (a.ground_size() != b.ground_size() || a.edge_count() != b.edge_count()) return false;
    std::vector<int> sa, sb;
    for (Mask e : a.edges()) sa.push_back(set_size(e));
    for (Mask e : b.edges()) sb.push_back(set_size(e));
    if (sa != sb) return false;  // canonical order makes size multisets comparable directly
    auto pa = detail::iso_profile(a);
    auto pb = detail::iso_profile(b);
    {
        auto ma = pa.edge_sizes_at, mb = pb.edge_sizes_at;
        std::sort(ma.begin(), ma.end());
        std::sort(mb.begin(), mb.end());
        if (ma != mb) return false;
    }
    std::vector<int> map_ab(static_cast<std::size_t>(a.ground_size()), -1);
    std::vector<bool> used(static_cast<std::size_t>(a.ground_size()), false);
    return detail::iso_extend(a, b, pa, pb, map_ab, used, 0);
}

}  // namespace clutterkit
