#ifndef BSP_HOMOGENEOUS_HPP
#define BSP_HOMOGENEOUS_HPP

#include <string>

#include "recognize.hpp"
#include "twojoin.hpp"

namespace bsp {

// not_refuted: every clause holds except that type-2 cuttingness of some
// constituent 2-join could not be settled either way.
enum class HomogeneousVerdict { verified, refuted, not_refuted };

inline const char* to_string(HomogeneousVerdict v) {
    switch (v) {
        case HomogeneousVerdict::verified: return "verified";
        case HomogeneousVerdict::refuted: return "refuted";
        case HomogeneousVerdict::not_refuted: return "not_refuted";
    }
    return "refuted";
}

struct HomogeneousReport {
    HomogeneousVerdict verdict = HomogeneousVerdict::refuted;
    std::string reason;
    explicit operator bool() const noexcept { return verdict == HomogeneousVerdict::verified; }
};

inline HomogeneousReport verify_homogeneous_2join(const Graph& g, const HomogeneousSixTuple& t,
                                                  int type2_pair_guard = 1 << 12,
                                                  std::uint64_t budget = default_budget) {
    auto refuted = [](std::string why) { return HomogeneousReport{HomogeneousVerdict::refuted, std::move(why)}; };
    if (auto r = verify_homogeneous_pair(g, t); !r) return refuted(r.violation);
    for (int x : t.e)
        if (g.degree(x) != 2) return refuted("vertex " + std::to_string(x) + " of E does not have degree 2");

    // With every E vertex of degree 2, the flat C-D paths with interior in E
    // are the E-chains whose two outside ends are one vertex of C and one of D.
    bool unsettled = false;
    for (const VertexSet& chain : components_of(g, t.e)) {
        VertexSet ends = neighborhood_of(g, chain);
        const bool cd = ends.size() == 2 && ends.intersects(t.c) && ends.intersects(t.d);
        if (!cd) return refuted("an E vertex lies on no path from C to D");
        std::vector<int> path{(ends & t.c).first()};
        VertexSet left = chain;
        for (int cur = path.back(); !left.empty();) {
            int nxt = (g.neighbors(cur) & left).first();
            if (nxt < 0) return refuted("an E-chain is not a path");
            path.push_back(nxt);
            left.erase(nxt);
            cur = nxt;
        }
        path.push_back((ends & t.d).first());
        if (!is_induced_path(g, path) || !detail::is_flat(g, path))
            return refuted("the path through an E-chain is not flat");
        if ((path.size() - 1) % 2 == 0) return refuted("a C-D path through E has even length");

        auto split = split_from_partition(g, VertexSet::from(g.vertex_count(), path));
        if (!split) return refuted("a C-D path through E is not the side of a 2-join");
        TwoJoinClass k = classify_2join(g, *split);
        if (!k.proper) return refuted("a C-D path through E gives a 2-join that is not proper");
        if (k.path_side != PathSide::x1 && k.path_side != PathSide::both)
            return refuted("a C-D path through E is not a path-side");
        if (k.cutting1) return refuted("a C-D path through E is the path-side of a cutting 2-join of type 1");
        Verdict3 t2 = cutting_type2_exhaustive(g, *split, type2_pair_guard, budget);
        if (t2 == Verdict3::yes)
            return refuted("a C-D path through E is the path-side of a cutting 2-join of type 2");
        if (t2 == Verdict3::unknown) unsettled = true;
    }
    if (unsettled) return {HomogeneousVerdict::not_refuted, "type-2 cuttingness left open"};
    return {HomogeneousVerdict::verified, ""};
}

}  // namespace bsp

#endif
