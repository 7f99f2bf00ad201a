#include "annular/crossing_analysis.hpp"

#include <algorithm>
#include <deque>

namespace annular {

namespace {

// Sides of the separating curve through corners (c,k), (c,k+2) and the
// shared face F. Faces other than F (in c's piece) land on side 0 or 1;
// a face id maps to -1 when the curve never separates it from F (other
// pieces), which cannot happen within the piece.
struct CurveSides {
    std::vector<int> side_of_face;  // face id -> 0, 1, or -1
};

// The edge leaving corner (cr, s) along its face boundary is the edge at
// slot s+1; the face across that edge is read at the edge's other dart.
CurveSides curve_sides(const Embedding& emb, int c, int k) {
    const int f = emb.face_of[dart_of(c, k)];
    CurveSides sides;
    sides.side_of_face.assign(emb.face_corners.size(), -1);

    // Split F's corner cycle at the two corners of c; boundary edges of
    // each arc seed that side, as does the off-curve corner of c facing
    // the arc (slot k+1 for the arc leaving (c,k), slot k+3 opposite).
    const auto& cycle = emb.face_corners[f];
    const int m = static_cast<int>(cycle.size());
    int pos_k = -1, pos_k2 = -1;
    for (int i = 0; i < m; ++i) {
        if (cycle[i] == Corner{c, k}) pos_k = i;
        if (cycle[i] == Corner{c, (k + 2) % 4}) pos_k2 = i;
    }

    std::deque<int> queue;
    auto seed = [&](int face, int side) {
        if (face == f || sides.side_of_face[face] != -1) return;
        sides.side_of_face[face] = side;
        queue.push_back(face);
    };
    auto seed_arc = [&](int from, int to, int side) {
        for (int i = from; i != to; i = (i + 1) % m) {
            Corner corner = cycle[i];
            int dart = dart_of(corner.crossing, (corner.slot + 1) % 4);
            seed(emb.face_of[emb.edges.mate(dart)], side);
        }
    };
    seed_arc(pos_k, pos_k2, 0);
    seed_arc(pos_k2, pos_k, 1);
    seed(emb.face_of[dart_of(c, (k + 1) % 4)], 0);
    seed(emb.face_of[dart_of(c, (k + 3) % 4)], 1);

    // Flood the rest of the dual graph without passing through F.
    while (!queue.empty()) {
        int face = queue.front();
        queue.pop_front();
        for (Corner corner : emb.face_corners[face]) {
            int dart = dart_of(corner.crossing, (corner.slot + 1) % 4);
            seed(emb.face_of[emb.edges.mate(dart)], sides.side_of_face[face]);
        }
    }
    return sides;
}

std::vector<int> nugatory_slots(const Embedding& emb, int c) {
    std::vector<int> slots;
    for (int k = 0; k < 2; ++k)
        if (emb.face_of[dart_of(c, k)] == emb.face_of[dart_of(c, k + 2)]) slots.push_back(k);
    return slots;
}

}  // namespace

std::vector<int> nugatory_crossings(const AnnularDiagram& d) {
    Embedding emb = compute_embedding(d);
    std::vector<int> out;
    for (int c = 0; c < d.crossing_count(); ++c)
        if (!nugatory_slots(emb, c).empty()) out.push_back(c);
    return out;
}

CrossingReport classify_nugatory(const AnnularDiagram& d, int c) {
    if (c < 0 || c >= d.crossing_count())
        throw ValidationError("no crossing " + std::to_string(c));
    Embedding emb = compute_embedding(d);
    auto slots = nugatory_slots(emb, c);
    if (slots.empty())
        throw ValidationError("crossing " + std::to_string(c) + " is not nugatory");

    CrossingReport report;
    report.crossing = c;
    bool reducible = false;
    for (int k : slots) {
        const int f = emb.face_of[dart_of(c, k)];
        CurveSides sides = curve_sides(emb, c, k);
        // A marker pins its side when its face is split off by the curve;
        // in the shared face itself, or on another piece, the curve can
        // route it to either side.
        auto fixed_side = [&](int marker_face) -> int {
            if (marker_face < 0 || marker_face == f) return -1;
            return sides.side_of_face[marker_face];
        };
        int p_fixed = fixed_side(emb.puncture_face);
        int o_fixed = fixed_side(emb.outer_face);
        for (int p = 0; p < 2; ++p) {
            if (p_fixed != -1 && p != p_fixed) continue;
            for (int o = 0; o < 2; ++o) {
                if (o_fixed != -1 && o != o_fixed) continue;
                SeparatingCurve curve{k, f, p, o, p == o};
                reducible = reducible || curve.contractible;
                report.curves.push_back(curve);
            }
        }
    }
    report.status =
        reducible ? CrossingStatus::dotted_reducible : CrossingStatus::dotted_irreducible;
    return report;
}

bool is_dotted_reduced(const AnnularDiagram& d) {
    for (int c : nugatory_crossings(d))
        if (classify_nugatory(d, c).status == CrossingStatus::dotted_reducible) return false;
    return true;
}

std::vector<int> separating_curve_sides(const AnnularDiagram& d, int c, int k) {
    Embedding emb = compute_embedding(d);
    if (emb.face_of[dart_of(c, k)] != emb.face_of[dart_of(c, (k + 2) % 4)])
        throw ValidationError("corners " + std::to_string(k) + " and " + std::to_string(k + 2) +
                              " of crossing " + std::to_string(c) + " do not share a face");
    return curve_sides(emb, c, k).side_of_face;
}

std::vector<StateAdjacency> state_adjacency_scan(const AnnularDiagram& d,
                                                 std::uint64_t max_states) {
    const int n = d.crossing_count();
    if (n >= 63 || (std::uint64_t{1} << n) > max_states)
        throw StateLimitExceeded("instance too large: 2^" + std::to_string(n) +
                                 " states exceed the cap of " + std::to_string(max_states));
    CutPath cp = cut_path(d);
    const std::uint64_t total = std::uint64_t{1} << n;
    std::vector<std::pair<int, int>> counts(total);  // (circles, dotted) per state
    for (std::uint64_t mask = 0; mask < total; ++mask) {
        StateResolution r = resolve_state(d, KauffmanState{mask, n}, cp);
        counts[mask] = {r.num_circles, r.num_dotted};
    }
    std::vector<StateAdjacency> out;
    out.reserve(total * n);
    for (std::uint64_t mask = 0; mask < total; ++mask)
        for (int c = 0; c < n; ++c) {
            std::uint64_t flipped = mask ^ (std::uint64_t{1} << c);
            StateAdjacency adj;
            adj.from = {mask, n};
            adj.to = {flipped, n};
            adj.crossing = c;
            adj.delta_circles = counts[flipped].first - counts[mask].first;
            adj.delta_dotted = counts[flipped].second - counts[mask].second;
            if (adj.delta_circles != 1 && adj.delta_circles != -1)
                throw ValidationError("state adjacency changed circle count by " +
                                      std::to_string(adj.delta_circles) +
                                      ", expected a merge or split");
            out.push_back(adj);
        }
    return out;
}

}  // namespace annular
