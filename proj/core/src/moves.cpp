#include "annular/moves.hpp"

#include <algorithm>

namespace annular {

namespace {

EdgeLabel max_label(const AnnularDiagram& d) {
    EdgeLabel m = 0;
    for (const auto& x : d.crossings)
        for (EdgeLabel e : x.slots) m = std::max(m, e);
    return m;
}

// Kink record for a curl of the given sign and side, with loop label l:
// positive curls carry the loop on the under-strand (slots 0,1),
// negative on slots 0,3. e_u keeps the split edge's label, e_v is fresh.
Crossing kink_record(EdgeLabel l, EdgeLabel e_u, EdgeLabel e_v, KinkSide side, int sign) {
    if (sign > 0)
        return side == KinkSide::right ? Crossing{{l, l, e_v, e_u}} : Crossing{{l, l, e_u, e_v}};
    return side == KinkSide::left ? Crossing{{l, e_u, e_v, l}} : Crossing{{l, e_v, e_u, l}};
}

SkeinPolynomial kink_factor(int sign) {
    return SkeinPolynomial::monomial(Coeff(-1), 3 * sign, 0);
}

void check_sign(int sign) {
    if (sign != 1 && sign != -1) throw MoveError("kink sign must be +1 or -1");
}

}  // namespace

RewriteResult r1_insert(const AnnularDiagram& d, EdgeLabel edge, KinkSide side, int sign) {
    check_sign(sign);
    EdgeTable edges(d);
    if (!edges.by_label().count(edge))
        throw MoveError("no edge labeled " + std::to_string(edge));
    auto [d1, d2] = edges.darts(edge);
    int q = std::max(d1, d2);  // this end moves onto the fresh label

    EdgeLabel l = max_label(d) + 1, e_v = max_label(d) + 2;
    RewriteResult res;
    res.diagram = d;
    res.diagram.crossings[q / 4].slots[q % 4] = e_v;
    res.diagram.crossings.push_back(kink_record(l, edge, e_v, side, sign));
    res.expected_bracket_factor = kink_factor(sign);
    res.crossing_delta = 1;
    return res;
}

RewriteResult r1_insert_on_loop(const AnnularDiagram& d, int loop_index, KinkSide side, int sign) {
    check_sign(sign);
    if (loop_index < 0 || loop_index >= d.loop_count())
        throw MoveError("no loop " + std::to_string(loop_index));
    if (d.loops[loop_index].dotted)
        throw MoveError("cannot kink a dotted loop: the curl has no winding encoding");

    EdgeLabel l = max_label(d) + 1, m = max_label(d) + 2;
    RewriteResult res;
    res.diagram = d;
    res.diagram.loops.erase(res.diagram.loops.begin() + loop_index);
    int n = res.diagram.crossing_count();
    res.diagram.crossings.push_back(kink_record(l, m, m, side, sign));
    if (n == 0) {
        // Previously crossingless: anchor both markers in the new
        // crossing's ambient face (the one the curl does not enclose).
        res.diagram.puncture_corner = Corner{n, sign > 0 ? 1 : 0};
        res.diagram.outer_corner = Corner{n, sign > 0 ? 3 : 2};
    }
    res.diagram.orientation_flags.clear();  // loop/strand component ids shift
    res.expected_bracket_factor = kink_factor(sign);
    res.crossing_delta = 1;
    return res;
}

RewriteResult r2_insert(const AnnularDiagram& d, EdgeLabel edge1, EdgeLabel edge2) {
    if (edge1 == edge2) throw MoveError("r2 needs two distinct edges");
    Embedding emb = compute_embedding(d);
    for (EdgeLabel e : {edge1, edge2})
        if (!emb.edges.by_label().count(e)) throw MoveError("no edge labeled " + std::to_string(e));

    // Smallest face bordered by both edges; the ends facing it get the
    // fresh labels, so the new bigon opens into that face.
    auto face_pair = [&](EdgeLabel e) {
        auto [a, b] = emb.edges.darts(e);
        return std::pair{emb.face_of[a], emb.face_of[b]};
    };
    auto [f1a, f1b] = face_pair(edge1);
    auto [f2a, f2b] = face_pair(edge2);
    int shared = -1;
    for (int f : {std::min(f1a, f1b), std::max(f1a, f1b)})
        if (f == f2a || f == f2b) {
            shared = f;
            break;
        }
    if (shared == -1)
        throw MoveError("edges " + std::to_string(edge1) + " and " + std::to_string(edge2) +
                        " share no face");
    auto face_side_dart = [&](EdgeLabel e) {
        auto [a, b] = emb.edges.darts(e);
        return emb.face_of[a] == shared ? a : b;
    };
    int end1 = face_side_dart(edge1), end2 = face_side_dart(edge2);

    EdgeLabel base = max_label(d);
    EdgeLabel a2 = base + 1, b1 = base + 2, m1 = base + 3, m2 = base + 4;
    RewriteResult res;
    res.diagram = d;
    res.diagram.crossings[end1 / 4].slots[end1 % 4] = a2;
    res.diagram.crossings[end2 / 4].slots[end2 % 4] = b1;
    res.diagram.crossings.push_back(Crossing{{m2, edge1, b1, m1}});   // edge1's strand on top
    res.diagram.crossings.push_back(Crossing{{edge2, a2, m2, m1}});
    res.expected_bracket_factor = SkeinPolynomial::one();
    res.crossing_delta = 2;
    return res;
}

RewriteResult insert_loop(const AnnularDiagram& d, bool dotted) {
    RewriteResult res;
    res.diagram = d;
    res.diagram.loops.push_back(Loop{dotted});
    bool was_empty = d.crossing_count() == 0 && d.loop_count() == 0;
    SkeinPolynomial factor =
        was_empty ? SkeinPolynomial::one() : SkeinPolynomial::circle_power(1);
    res.expected_bracket_factor = factor.times_monomial(Coeff(1), 0, dotted ? 1 : 0);
    res.crossing_delta = 0;
    return res;
}

RewriteResult remove_dotted_reducible(const AnnularDiagram& d, int c) {
    CrossingReport report = classify_nugatory(d, c);
    if (report.status != CrossingStatus::dotted_reducible)
        throw MoveError("crossing " + std::to_string(c) +
                        " is dotted-irreducible: every separating curve traps the puncture");
    const SeparatingCurve* curve = nullptr;
    for (const auto& cv : report.curves)
        if (cv.contractible) {
            curve = &cv;
            break;
        }
    const int k = curve->corner_slot;
    const int clean = 1 - curve->puncture_side;  // the half without the markers

    Embedding emb = compute_embedding(d);
    CutPath cp = cut_path(d, emb);
    std::vector<int> side = separating_curve_sides(d, c, k);
    int sign = orient(d).crossing_signs[c];

    // Crossings inside the clean half get flipped over in space: rotation
    // order reverses and under/over swaps, i.e. (a,b,c,d) -> (d,c,b,a).
    // Crossings on other pieces have no side and stay put.
    std::vector<bool> flip(d.crossing_count(), false);
    for (int x = 0; x < d.crossing_count(); ++x) {
        if (x == c) continue;
        int s = -1;
        for (int j = 0; j < 4; ++j) {
            int sf = side[emb.face_of[dart_of(x, j)]];
            if (sf == -1) continue;
            if (s != -1 && s != sf)
                throw ValidationError("internal: crossing " + std::to_string(x) +
                                      " straddles the separating curve");
            s = sf;
        }
        flip[x] = s == clean;
    }

    RewriteResult res;
    res.diagram.loops = d.loops;
    for (int x = 0; x < d.crossing_count(); ++x) {
        if (x == c) continue;
        Crossing rec = d.crossings[x];
        if (flip[x]) {
            Crossing old = rec;
            for (int j = 0; j < 4; ++j) rec.slots[j] = old.slots[3 - j];
        }
        res.diagram.crossings.push_back(rec);
    }

    // Splice the four strand ends of c pairwise across the removed
    // crossing: (k with k+1) and (k+2 with k+3). A join of equal labels
    // closes that chain into a free loop, dotted iff the chain's edges
    // cross the original cut path an odd number of times; otherwise the
    // chains merge under the smaller label (so undoing an r1 kink
    // restores the split edge's original label exactly).
    std::map<EdgeLabel, int> chain = cp.edge_parities;
    const auto& cs = d.crossings[c].slots;
    std::pair<EdgeLabel, EdgeLabel> pending{cs[(k + 2) % 4], cs[(k + 3) % 4]};
    std::pair<EdgeLabel, EdgeLabel> none{0, 0};
    auto join = [&](EdgeLabel e1, EdgeLabel e2, std::pair<EdgeLabel, EdgeLabel>& pend) {
        if (e1 == e2) {
            res.diagram.loops.push_back(Loop{chain.at(e1) == 1});
            chain.erase(e1);
            return;
        }
        EdgeLabel keep = std::min(e1, e2), drop = std::max(e1, e2);
        chain.at(keep) ^= chain.at(drop);
        chain.erase(drop);
        for (auto& x : res.diagram.crossings)
            for (auto& label : x.slots)
                if (label == drop) label = keep;
        if (pend.first == drop) pend.first = keep;
        if (pend.second == drop) pend.second = keep;
    };
    join(cs[k], cs[(k + 1) % 4], pending);
    join(pending.first, pending.second, none);

    // Re-anchor the region markers. A corner at a surviving crossing
    // still names the same wedge (flipped crossings renumber s -> 2-s);
    // a corner at c itself moves to another corner of its region, which
    // persists through the surgery (the two off-curve regions of c merge
    // with each other). When no corner remains -- c was an isolated
    // piece holding both markers -- pin both markers to one corner:
    // the markers were separated only by the removed twist.
    if (res.diagram.crossing_count() == 0) {
        res.diagram.puncture_corner.reset();
        res.diagram.outer_corner.reset();
    } else {
        auto new_corner = [&](Corner at) -> Corner {
            int x = at.crossing;
            int slot = flip[x] ? (2 - at.slot + 4) % 4 : at.slot;
            return Corner{x < c ? x : x - 1, slot};
        };
        auto rehome = [&](Corner marker) -> std::optional<Corner> {
            if (marker.crossing != c) return new_corner(marker);
            int region = emb.face_of[dart_of(marker)];
            std::vector<int> search{region};
            if (region != curve->face) {  // off-curve region: merges with its twin
                int twin = marker.slot == (k + 1) % 4 ? dart_of(c, (k + 3) % 4)
                                                      : dart_of(c, (k + 1) % 4);
                search.push_back(emb.face_of[twin]);
            }
            for (int f : search)
                for (Corner corner : emb.face_corners[f])
                    if (corner.crossing != c) return new_corner(corner);
            return std::nullopt;
        };
        auto p = d.puncture_corner ? rehome(*d.puncture_corner) : std::nullopt;
        auto o = d.outer_corner ? rehome(*d.outer_corner) : std::nullopt;
        res.diagram.puncture_corner = p ? p : std::optional<Corner>(Corner{0, 0});
        res.diagram.outer_corner = o ? o : std::optional<Corner>(Corner{0, 0});
    }

    res.diagram.orientation_flags = d.orientation_flags;
    try {
        orient(res.diagram);
    } catch (const ValidationError&) {
        res.diagram.orientation_flags.clear();  // component ids shifted out of range
    }

    res.expected_bracket_factor = kink_factor(-sign);
    res.crossing_delta = -1;
    return res;
}

}  // namespace annular
