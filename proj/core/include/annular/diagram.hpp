#pragma once

#include <array>
#include <compare>
#include <map>
#include <optional>
#include <string>
#include <utility>
#include <vector>

#include "annular/errors.hpp"

namespace annular {

using EdgeLabel = int;

// One crossing: the four edge ends around it in counterclockwise order.
// The under-strand enters and leaves through slots 0 and 2; the
// over-strand through slots 1 and 3. Rotating a record by two slots
// describes the same crossing.
struct Crossing {
    std::array<EdgeLabel, 4> slots{};
    bool operator==(const Crossing&) const = default;
};

// Crossing-free closed curve. A dotted loop encircles the puncture once;
// a plain loop bounds a disk away from it. Deeper nesting is not encoded.
struct Loop {
    bool dotted = false;
    bool operator==(const Loop&) const = default;
};

// A corner of the complement: the wedge at `crossing` counterclockwise
// from slot to slot+1. Region markers (puncture, outer boundary) are
// pinned to corners so they survive face renumbering.
struct Corner {
    int crossing = 0;
    int slot = 0;
    auto operator<=>(const Corner&) const = default;
};

// Darts: quarter-edges, one per (crossing, slot). dart = 4*crossing + slot.
constexpr int dart_of(int crossing, int slot) { return 4 * crossing + slot; }
constexpr int dart_of(Corner c) { return 4 * c.crossing + c.slot; }
constexpr Corner corner_of(int dart) { return Corner{dart / 4, dart % 4}; }

// Link diagram in the annulus. The puncture corner marks the region
// containing the inner boundary, the outer corner the unbounded region;
// both are empty ("unbounded") exactly when the diagram has no
// crossings. orientation_flags lists components traversed against their
// default direction.
struct AnnularDiagram {
    std::vector<Crossing> crossings;
    std::vector<Loop> loops;
    std::optional<Corner> puncture_corner;
    std::optional<Corner> outer_corner;
    std::vector<int> orientation_flags;

    int crossing_count() const { return static_cast<int>(crossings.size()); }
    int loop_count() const { return static_cast<int>(loops.size()); }
    bool operator==(const AnnularDiagram&) const = default;
};

// Pairing of the two ends of every edge.
class EdgeTable {
  public:
    EdgeTable() = default;
    // Throws ValidationError unless every label occurs exactly twice.
    explicit EdgeTable(const AnnularDiagram& d);

    int mate(int dart) const { return mate_[dart]; }
    const std::pair<int, int>& darts(EdgeLabel e) const;
    const std::map<EdgeLabel, std::pair<int, int>>& by_label() const { return by_label_; }

  private:
    std::map<EdgeLabel, std::pair<int, int>> by_label_;
    std::vector<int> mate_;
};

// Faces and connectivity of the underlying 4-valent plane graph.
// Construction checks Euler's formula piece by piece and throws
// ValidationError on a non-planar rotation system.
struct Embedding {
    EdgeTable edges;
    std::vector<std::vector<Corner>> face_corners;  // corner cycle per face, trace order
    std::vector<int> face_of;                       // dart -> face id
    int puncture_face = -1;                         // -1 when the marker is unbounded
    int outer_face = -1;
    std::vector<int> crossing_piece;  // crossing -> connected piece id
    std::vector<int> face_piece;      // face -> piece id
    int piece_count = 0;              // pieces with crossings; loops not included
};

Embedding compute_embedding(const AnnularDiagram& d);

// Face view with the marker flags resolved. Ids are assigned by smallest
// corner token. Crossingless diagrams have no faces.
struct Face {
    int id = 0;
    std::vector<Corner> corners;
    bool contains_puncture = false;
    bool is_outer = false;
};

std::vector<Face> faces(const AnnularDiagram& d);

// Winding parities relative to a fixed arc from the puncture to the
// unbounded region. A cycle's winding parity around the puncture is the
// XOR of the parities of the edges it uses. Loops carry their own parity.
struct CutPath {
    std::map<EdgeLabel, int> edge_parities;
    std::vector<int> loop_parities;
};

CutPath cut_path(const AnnularDiagram& d, const Embedding& e);
CutPath cut_path(const AnnularDiagram& d);

// Strand components with traversal directions, crossing signs, writhe.
// The default direction of each component walks away from its smallest
// edge label through that edge's lower dart; orientation_flags reverse
// listed components. Signs: +1 iff the outgoing under-dart is the CCW
// successor of the outgoing over-dart.
struct OrientedComponentSet {
    std::vector<std::vector<EdgeLabel>> components;  // edge cycle per strand component
    std::vector<int> component_of_dart;              // dart -> component id
    std::vector<bool> dart_outgoing;  // strand leaves the crossing through this dart
    std::vector<int> crossing_signs;  // +1 / -1 per crossing
    int strand_components = 0;
    int total_components = 0;  // strands, then loops
    int writhe = 0;
};

OrientedComponentSet orient(const AnnularDiagram& d);

int writhe(const OrientedComponentSet& o);
int writhe(const AnnularDiagram& d);

// True when every edge joins an under-passage to an over-passage, i.e.
// crossings alternate along every strand. Crossingless diagrams count.
bool is_alternating(const AnnularDiagram& d);

// One piece in total: a single loop, or all crossings mutually connected
// and no loops.
bool is_connected(const AnnularDiagram& d);

// Structural check. Failures are reported, not thrown.
struct ValidationReport {
    bool ok = true;
    std::vector<std::string> failures;
};

ValidationReport validate(const AnnularDiagram& d);

// Mirror image: swaps under/over at every crossing by rotating each
// record one slot, carrying the region markers along. Brackets transform
// by A <-> A^-1; crossing signs negate.
AnnularDiagram mirror(const AnnularDiagram& d);

// Normal forms for comparing diagrams up to cosmetic choices: slot gauge
// picks the lexicographically smaller of the two equivalent records per
// crossing; relabeling renumbers edges 1.. in order of first appearance.
AnnularDiagram canonical_gauge(const AnnularDiagram& d);
AnnularDiagram canonical_relabel(const AnnularDiagram& d);

// Least diagram over the full cosmetic orbit (every combination of record
// rotations and edge relabelings), so two diagrams canonicalize equal
// exactly when they differ only cosmetically. Crossing order, loops and
// orientation flags are left alone.
AnnularDiagram canonicalized(const AnnularDiagram& d);

}  // namespace annular
