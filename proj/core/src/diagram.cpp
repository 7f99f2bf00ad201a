#include "annular/diagram.hpp"

#include <algorithm>
#include <deque>
#include <numeric>
#include <set>
#include <tuple>

namespace annular {

namespace {

// Minimal union-find over 0..n-1.
struct Pieces {
    std::vector<int> parent;
    explicit Pieces(int n) : parent(n) { std::iota(parent.begin(), parent.end(), 0); }
    int find(int x) {
        while (parent[x] != x) x = parent[x] = parent[parent[x]];
        return x;
    }
    void join(int a, int b) { parent[find(a)] = find(b); }
};

std::string corner_str(Corner c) {
    return std::to_string(c.crossing) + "." + std::to_string(c.slot);
}

}  // namespace

EdgeTable::EdgeTable(const AnnularDiagram& d) {
    std::map<EdgeLabel, std::vector<int>> ends;
    for (int c = 0; c < d.crossing_count(); ++c)
        for (int s = 0; s < 4; ++s) ends[d.crossings[c].slots[s]].push_back(dart_of(c, s));
    mate_.assign(4 * d.crossings.size(), -1);
    for (const auto& [label, darts] : ends) {
        if (darts.size() != 2)
            throw ValidationError("edge multiplicity: label " + std::to_string(label) + " has " +
                                  std::to_string(darts.size()) + " ends, expected 2");
        by_label_[label] = {darts[0], darts[1]};
        mate_[darts[0]] = darts[1];
        mate_[darts[1]] = darts[0];
    }
}

const std::pair<int, int>& EdgeTable::darts(EdgeLabel e) const {
    auto it = by_label_.find(e);
    if (it == by_label_.end()) throw ValidationError("unknown edge label " + std::to_string(e));
    return it->second;
}

Embedding compute_embedding(const AnnularDiagram& d) {
    Embedding emb;
    emb.edges = EdgeTable(d);
    const int n = d.crossing_count();
    const int darts = 4 * n;

    // Faces: orbits of corners. The corner after (c, s) along its face
    // boundary is the mate of the dart at slot s+1 of the same crossing.
    // Starting each orbit at the smallest unvisited dart orders face ids
    // by their smallest corner token.
    emb.face_of.assign(darts, -1);
    for (int start = 0; start < darts; ++start) {
        if (emb.face_of[start] != -1) continue;
        int id = static_cast<int>(emb.face_corners.size());
        std::vector<Corner> cycle;
        int dart = start;
        do {
            emb.face_of[dart] = id;
            Corner c = corner_of(dart);
            cycle.push_back(c);
            dart = emb.edges.mate(dart_of(c.crossing, (c.slot + 1) % 4));
        } while (dart != start);
        emb.face_corners.push_back(std::move(cycle));
    }

    // Connected pieces of the 4-valent graph.
    Pieces uf(n);
    for (const auto& [label, dd] : emb.edges.by_label()) uf.join(dd.first / 4, dd.second / 4);
    emb.crossing_piece.assign(n, -1);
    int pieces = 0;
    std::map<int, int> piece_id;
    for (int c = 0; c < n; ++c) {
        auto [it, fresh] = piece_id.emplace(uf.find(c), pieces);
        if (fresh) ++pieces;
        emb.crossing_piece[c] = it->second;
    }
    emb.piece_count = pieces;
    emb.face_piece.resize(emb.face_corners.size());
    for (std::size_t f = 0; f < emb.face_corners.size(); ++f)
        emb.face_piece[f] = emb.crossing_piece[emb.face_corners[f].front().crossing];

    // Euler's formula piece by piece: a planar rotation system with c
    // 4-valent vertices in one piece has exactly c + 2 faces.
    std::vector<int> piece_crossings(pieces, 0), piece_faces(pieces, 0);
    for (int c = 0; c < n; ++c) ++piece_crossings[emb.crossing_piece[c]];
    for (std::size_t f = 0; f < emb.face_corners.size(); ++f) ++piece_faces[emb.face_piece[f]];
    for (int p = 0; p < pieces; ++p)
        if (piece_faces[p] != piece_crossings[p] + 2)
            throw ValidationError("non-planar rotation system: piece " + std::to_string(p) +
                                  " has " + std::to_string(piece_faces[p]) + " faces for " +
                                  std::to_string(piece_crossings[p]) + " crossings, expected " +
                                  std::to_string(piece_crossings[p] + 2));

    auto face_at = [&](const Corner& c, const char* name) {
        if (c.crossing < 0 || c.crossing >= n || c.slot < 0 || c.slot >= 4)
            throw ValidationError("dangling corner: " + std::string(name) + " marker " +
                                  std::to_string(c.crossing) + "." + std::to_string(c.slot) +
                                  " does not resolve");
        return emb.face_of[dart_of(c)];
    };
    if (d.puncture_corner) emb.puncture_face = face_at(*d.puncture_corner, "puncture");
    if (d.outer_corner) emb.outer_face = face_at(*d.outer_corner, "outer");
    return emb;
}

std::vector<Face> faces(const AnnularDiagram& d) {
    Embedding emb = compute_embedding(d);
    std::vector<Face> out;
    out.reserve(emb.face_corners.size());
    for (std::size_t f = 0; f < emb.face_corners.size(); ++f) {
        Face face;
        face.id = static_cast<int>(f);
        face.corners = emb.face_corners[f];
        face.contains_puncture = static_cast<int>(f) == emb.puncture_face;
        face.is_outer = static_cast<int>(f) == emb.outer_face;
        out.push_back(std::move(face));
    }
    return out;
}

CutPath cut_path(const AnnularDiagram& d, const Embedding& e) {
    CutPath cp;
    for (const auto& [label, dd] : e.edges.by_label()) cp.edge_parities[label] = 0;
    for (const auto& loop : d.loops) cp.loop_parities.push_back(loop.dotted ? 1 : 0);
    if (!d.puncture_corner || e.puncture_face == e.outer_face) return cp;

    // Breadth-first walk in the dual graph from the puncture's face to
    // the unbounded one; the cut arc crosses exactly the tree-path edges.
    // Neighbor order follows sorted edge labels, so the arc is stable.
    const int nf = static_cast<int>(e.face_corners.size());
    std::vector<std::vector<std::pair<int, EdgeLabel>>> adj(nf);
    for (const auto& [label, dd] : e.edges.by_label()) {
        int f1 = e.face_of[dd.first], f2 = e.face_of[dd.second];
        adj[f1].push_back({f2, label});
        adj[f2].push_back({f1, label});
    }
    std::vector<std::pair<int, EdgeLabel>> parent(nf, {-1, 0});
    std::vector<bool> seen(nf, false);
    std::deque<int> queue{e.puncture_face};
    seen[e.puncture_face] = true;
    while (!queue.empty()) {
        int f = queue.front();
        queue.pop_front();
        if (f == e.outer_face) break;
        for (auto [g, label] : adj[f]) {
            if (seen[g]) continue;
            seen[g] = true;
            parent[g] = {f, label};
            queue.push_back(g);
        }
    }
    if (!seen[e.outer_face])
        throw ValidationError("puncture and outer regions lie on different pieces");
    for (int f = e.outer_face; f != e.puncture_face; f = parent[f].first)
        cp.edge_parities[parent[f].second] ^= 1;
    return cp;
}

CutPath cut_path(const AnnularDiagram& d) { return cut_path(d, compute_embedding(d)); }

OrientedComponentSet orient(const AnnularDiagram& d) {
    OrientedComponentSet oc;
    const int n = d.crossing_count();
    const int darts = 4 * n;
    EdgeTable edges(d);
    oc.component_of_dart.assign(darts, -1);
    oc.dart_outgoing.assign(darts, false);

    // Trace strands: enter a crossing through one dart, leave through the
    // opposite slot, follow the edge. Components are discovered in order
    // of their smallest edge label; the default direction walks away from
    // that edge by entering at its lower dart.
    for (const auto& [label, dd] : edges.by_label()) {
        int d_lo = std::min(dd.first, dd.second);
        if (oc.component_of_dart[d_lo] != -1) continue;
        int id = oc.strand_components++;
        std::vector<EdgeLabel> cycle;
        int in = d_lo;
        do {
            Corner c = corner_of(in);
            cycle.push_back(d.crossings[c.crossing].slots[c.slot]);
            oc.component_of_dart[in] = id;
            int out = dart_of(c.crossing, (c.slot + 2) % 4);
            oc.component_of_dart[out] = id;
            oc.dart_outgoing[out] = true;
            in = edges.mate(out);
        } while (in != d_lo);
        oc.components.push_back(std::move(cycle));
    }
    oc.total_components = oc.strand_components + d.loop_count();

    std::set<int> seen_flags;
    for (int f : d.orientation_flags) {
        if (f < 0 || f >= oc.total_components)
            throw ValidationError("orientation flag " + std::to_string(f) +
                                  " out of range, have " + std::to_string(oc.total_components) +
                                  " components");
        if (!seen_flags.insert(f).second)
            throw ValidationError("duplicate orientation flag " + std::to_string(f));
        if (f >= oc.strand_components) continue;  // loop reversal: no crossings affected
        for (int dart = 0; dart < darts; ++dart)
            if (oc.component_of_dart[dart] == f) oc.dart_outgoing[dart] = !oc.dart_outgoing[dart];
    }

    oc.crossing_signs.assign(n, 0);
    for (int c = 0; c < n; ++c) {
        int out_under = oc.dart_outgoing[dart_of(c, 0)] ? 0 : 2;
        int out_over = oc.dart_outgoing[dart_of(c, 1)] ? 1 : 3;
        oc.crossing_signs[c] = out_under == (out_over + 1) % 4 ? 1 : -1;
        oc.writhe += oc.crossing_signs[c];
    }
    return oc;
}

int writhe(const OrientedComponentSet& o) { return o.writhe; }

int writhe(const AnnularDiagram& d) { return orient(d).writhe; }

bool is_alternating(const AnnularDiagram& d) {
    EdgeTable edges(d);
    for (const auto& [label, dd] : edges.by_label())
        if (dd.first % 2 == dd.second % 2) return false;  // same under/over role at both ends
    return true;
}

bool is_connected(const AnnularDiagram& d) {
    if (d.crossing_count() == 0) return d.loop_count() == 1;
    if (d.loop_count() != 0) return false;
    return compute_embedding(d).piece_count == 1;
}

ValidationReport validate(const AnnularDiagram& d) {
    ValidationReport report;
    auto flag = [&report](const std::string& msg) {
        report.ok = false;
        report.failures.push_back(msg);
    };

    std::optional<Embedding> emb;
    try {
        emb = compute_embedding(d);
    } catch (const ValidationError& err) {
        flag(err.what());
    }

    auto check_marker = [&](const std::optional<Corner>& m, const char* name) -> bool {
        if (d.crossing_count() == 0) {
            if (m) flag(std::string(name) + " marker must be unbounded on a crossingless diagram");
            return false;
        }
        if (!m) {
            flag(std::string(name) + " marker is required when crossings are present");
            return false;
        }
        if (m->crossing < 0 || m->crossing >= d.crossing_count() || m->slot < 0 || m->slot >= 4) {
            flag("dangling corner: " + std::string(name) + " marker " + corner_str(*m) +
                 " does not resolve");
            return false;
        }
        return true;
    };
    bool p_ok = check_marker(d.puncture_corner, "puncture");
    bool o_ok = check_marker(d.outer_corner, "outer");
    if (p_ok && o_ok && emb &&
        emb->crossing_piece[d.puncture_corner->crossing] !=
            emb->crossing_piece[d.outer_corner->crossing])
        flag("puncture and outer markers lie on different pieces");

    if (emb) {
        try {
            orient(d);  // checks orientation flags
        } catch (const ValidationError& err) {
            flag(err.what());
        }
    }
    return report;
}

AnnularDiagram mirror(const AnnularDiagram& d) {
    AnnularDiagram m = d;
    for (auto& x : m.crossings) {
        Crossing old = x;
        for (int s = 0; s < 4; ++s) x.slots[s] = old.slots[(s + 1) % 4];
    }
    auto move_marker = [](std::optional<Corner>& c) {
        if (c) c->slot = (c->slot + 3) % 4;
    };
    move_marker(m.puncture_corner);
    move_marker(m.outer_corner);
    return m;
}

AnnularDiagram canonical_gauge(const AnnularDiagram& d) {
    AnnularDiagram g = d;
    for (int c = 0; c < g.crossing_count(); ++c) {
        auto& slots = g.crossings[c].slots;
        std::array<EdgeLabel, 4> rotated{slots[2], slots[3], slots[0], slots[1]};
        if (rotated < slots) {
            slots = rotated;
            auto shift = [&](std::optional<Corner>& m) {
                if (m && m->crossing == c) m->slot = (m->slot + 2) % 4;
            };
            shift(g.puncture_corner);
            shift(g.outer_corner);
        }
    }
    return g;
}

AnnularDiagram canonical_relabel(const AnnularDiagram& d) {
    AnnularDiagram r = d;
    std::map<EdgeLabel, EdgeLabel> rename;
    EdgeLabel next = 1;
    for (auto& x : r.crossings)
        for (auto& label : x.slots) {
            auto [it, fresh] = rename.emplace(label, next);
            if (fresh) ++next;
            label = it->second;
        }
    return r;
}

AnnularDiagram canonicalized(const AnnularDiagram& d) {
    // Which rotation of a record compares smaller depends on the labels
    // assigned so far, so gauging each crossing in isolation does not give
    // an orbit invariant. Walk the crossings in order, keeping every
    // relabel map that still realizes the lexicographically smallest
    // record sequence; rotation ties that survive to the end differ only
    // in marker slots and are settled by the smaller corner pair.
    struct Branch {
        std::map<EdgeLabel, EdgeLabel> rename;
        EdgeLabel next = 1;
        Corner puncture{-1, -1};
        Corner outer{-1, -1};
        auto state() const { return std::tie(rename, next, puncture, outer); }
    };
    std::vector<Branch> branches(1);
    if (d.puncture_corner) branches[0].puncture = *d.puncture_corner;
    if (d.outer_corner) branches[0].outer = *d.outer_corner;

    std::vector<Crossing> records;
    for (int c = 0; c < d.crossing_count(); ++c) {
        const auto& raw = d.crossings[c].slots;
        std::array<EdgeLabel, 4> best{};
        std::vector<Branch> kept;
        for (const Branch& b : branches) {
            for (int rot = 0; rot < 2; ++rot) {
                Branch cand = b;
                std::array<EdgeLabel, 4> image{};
                for (int s = 0; s < 4; ++s) {
                    auto [it, fresh] = cand.rename.emplace(raw[(s + 2 * rot) % 4], cand.next);
                    if (fresh) ++cand.next;
                    image[s] = it->second;
                }
                if (rot) {
                    if (cand.puncture.crossing == c) cand.puncture.slot = (cand.puncture.slot + 2) % 4;
                    if (cand.outer.crossing == c) cand.outer.slot = (cand.outer.slot + 2) % 4;
                }
                if (kept.empty() || image < best) {
                    best = image;
                    kept.clear();
                }
                if (image == best) kept.push_back(std::move(cand));
            }
        }
        std::sort(kept.begin(), kept.end(),
                  [](const Branch& x, const Branch& y) { return x.state() < y.state(); });
        kept.erase(std::unique(kept.begin(), kept.end(),
                               [](const Branch& x, const Branch& y) { return x.state() == y.state(); }),
                   kept.end());
        branches = std::move(kept);
        records.push_back(Crossing{best});
    }

    const Branch& pick =
        *std::min_element(branches.begin(), branches.end(), [](const Branch& x, const Branch& y) {
            return std::tie(x.puncture, x.outer) < std::tie(y.puncture, y.outer);
        });
    AnnularDiagram out = d;
    out.crossings = std::move(records);
    if (out.puncture_corner) *out.puncture_corner = pick.puncture;
    if (out.outer_corner) *out.outer_corner = pick.outer;
    return out;
}

}  // namespace annular
