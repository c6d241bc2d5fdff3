#pragma once

#include <string>
#include <vector>

#include "clutterkit/conditions.hpp"
#include "clutterkit/io.hpp"
#include "clutterkit/lp.hpp"
#include "clutterkit/solution.hpp"

namespace clutterkit {

inline Json rational_json(const Rational& r) { return rational_to_string(r); }

inline Json rvec_json(const RVec& v) {
    Json out = Json::array();
    for (const auto& x : v) out.push_back(rational_to_string(x));
    return out;
}

inline Json mask_json(const Clutter& c, Mask m) { return c.labels_of(m); }

inline Json mask_list_json(const Clutter& c, const std::vector<Mask>& ms) {
    Json out = Json::array();
    for (Mask m : ms) out.push_back(c.labels_of(m));
    return out;
}

inline Json packing_json(const Clutter& c, const FractionalPacking& fp) {
    Json weights = Json::object();
    for (std::size_t i = 0; i < c.edges().size(); ++i) {
        std::string key;
        for (const auto& l : c.labels_of(c.edges()[i])) {
            if (!key.empty()) key += " ";
            key += l;
        }
        weights[key] = rational_to_string(fp.weights[i]);
    }
    Json j;
    j["value"] = rational_to_string(fp.value);
    j["weights"] = std::move(weights);
    return j;
}

inline Json precore_json(const Clutter& c, const PrecoreReport& r) {
    Json j;
    j["minimum_transversal_covered"] = r.mtc;
    j["integral_blocking"] = r.ibc;
    j["fpn"] = rational_to_string(r.fpn_value);
    j["bn"] = r.bn;
    j["tilde_fixed"] = r.tilde_fixed;
    j["ic_polytope"] = r.ic_polytope;
    j["ic_integral"] = r.ic_integral;
    if (r.ic_fractional_vertex) j["ic_fractional_vertex"] = rvec_json(*r.ic_fractional_vertex);
    j["nonseparable"] = r.nonseparable;
    if (r.separating_partition) {
        j["separating_partition"] = Json::array({mask_json(c, r.separating_partition->first),
                                                 mask_json(c, r.separating_partition->second)});
    }
    j["tilde_full"] = r.tilde_full_holds;
    if (r.tilde_full_unsupported) j["tilde_full_unsupported_edge"] = mask_json(c, *r.tilde_full_unsupported);
    j["dimension_condition"] = r.dimension_condition_holds ? Json(*r.dimension_condition_holds) : Json("n/a");
    j["dim_tilde"] = r.dim_tilde;
    j["dim_minb"] = r.dim_minb;
    j["hyperedge_nonseparable"] = r.hyperedge_nonseparable ? Json(*r.hyperedge_nonseparable) : Json("n/a");
    if (r.separating_hyperedge) j["separating_hyperedge"] = mask_json(c, *r.separating_hyperedge);
    j["unique_max_packing"] = r.unique_max_packing;
    j["step1_conditions"] = r.step1_conditions;
    j["is_precore"] = r.precore;
    return j;
}

inline Json solution_json(const Clutter& c, const SolutionReport& r) {
    Json j;
    j["c_precore"] = r.c_precore ? Json(*r.c_precore) : Json("skipped");
    j["tilde_matches"] = r.tilde_matches;
    j["ideal"] = r.ideal;
    if (r.ideal_witness) j["ideal_fractional_vertex"] = rvec_json(*r.ideal_witness);
    j["minimally_non_packing"] = r.mnp;
    if (r.mnp_witness)
        j["mnp_witness"] = Json::object({{"contract", mask_json(c, r.mnp_witness->contracted)},
                                         {"delete", mask_json(c, r.mnp_witness->deleted)}});
    j["condition_im"] = r.im;
    j["condition_if"] = r.if_holds;
    if (r.if_detail.nonintersecting)
        j["if_nonintersecting"] = Json::array({mask_json(c, r.if_detail.nonintersecting->first),
                                               mask_json(c, r.if_detail.nonintersecting->second)});
    if (r.if_detail.unmatched_facet) j["if_unmatched_facet_vertices"] = *r.if_detail.unmatched_facet;
    j["condition_h"] = r.h;
    if (r.h_detail.witness) j["h_witness"] = mask_json(c, *r.h_detail.witness);
    j["condition_b"] = r.b;
    if (r.b_detail.witness)
        j["b_witness"] = Json::object({{"contract", mask_json(c, r.b_detail.witness->contracted)},
                                       {"delete", mask_json(c, r.b_detail.witness->deleted)}});
    return j;
}

inline Json search_json(const SearchOutcome& o) {
    Json j;
    j["status"] = to_string(o.status);
    if (o.found) j["found"] = clutter_to_json(*o.found);
    j["nodes_explored"] = o.nodes_explored;
    j["pool_size"] = o.pool_size;
    Json stats = Json::object();
    for (const auto& [k, v] : o.prune_stats) stats[k] = v;
    j["prune_stats"] = std::move(stats);
    return j;
}

inline Json obstruction_json(const Clutter& c, const ObstructionReport& r) {
    Json j;
    j["bn"] = r.bn;
    Json triples = Json::array();
    for (const auto& t : r.triples) {
        Json tj;
        tj["hyperedges"] = Json::array({mask_json(c, t.edge_a), mask_json(c, t.edge_b), mask_json(c, t.edge_c)});
        tj["x"] = c.ground()[static_cast<std::size_t>(t.x)];
        tj["y"] = c.ground()[static_cast<std::size_t>(t.y)];
        tj["z"] = c.ground()[static_cast<std::size_t>(t.z)];
        tj["union"] = mask_json(c, t.union_mask);
        tj["union_proper"] = t.union_proper;
        tj["restriction_edge_count"] = t.restriction_edge_count;
        tj["restriction_bn"] = t.restriction_bn;
        tj["star_components"] = t.star_components;
        tj["stars_cover_union"] = t.stars_cover_union;
        tj["xyz_meets_every_minb_once"] = t.xyz_meets_every_minb_once;
        Json cands = Json::array();
        for (const auto& cand : t.candidates) {
            Json cj;
            cj["part1"] = mask_json(c, cand.part1);
            cj["part2"] = mask_json(c, cand.part2);
            cj["killed"] = cand.killed;
            cj["reason"] = cand.kill_reason;
            cands.push_back(std::move(cj));
        }
        tj["candidates"] = std::move(cands);
        tj["verified"] = t.verified;
        triples.push_back(std::move(tj));
    }
    j["triples"] = std::move(triples);
    j["obstruction_verified"] = r.obstruction_verified;
    return j;
}

}  // namespace clutterkit
