#pragma once

#include <cstdint>

#include "annular/diagram.hpp"
#include "annular/skein.hpp"

namespace annular {

enum class CrossingStatus { non_nugatory, dotted_reducible, dotted_irreducible };

// One isotopy class of a separating curve through the shared face of a
// nugatory crossing: the side of the curve each marker falls on (side 0
// holds the corner at slot k+1, side 1 the corner at slot k+3). Markers
// whose position the curve can route around (in the shared face itself,
// or on another piece entirely) are enumerated on both sides, one class
// per assignment.
struct SeparatingCurve {
    int corner_slot = 0;  // k: the curve meets corners (c, k) and (c, k+2)
    int face = -1;        // the shared face it runs through
    int puncture_side = 0;
    int outer_side = 0;
    bool contractible = false;  // both markers on one side: winding zero
    bool operator==(const SeparatingCurve&) const = default;
};

struct CrossingReport {
    int crossing = -1;
    CrossingStatus status = CrossingStatus::non_nugatory;
    std::vector<SeparatingCurve> curves;  // slot-pair ascending, then (puncture, outer) side
};

// Crossings where a pair of opposite corners shares a face, i.e. a
// simple closed curve can meet the diagram in just that double point.
std::vector<int> nugatory_crossings(const AnnularDiagram& d);

// Enumerates the separating-curve classes at a nugatory crossing and
// classifies: dotted-reducible when some class is contractible (puncture
// and outer region on one side), dotted-irreducible when every class
// traps them apart. Throws if c is not nugatory.
CrossingReport classify_nugatory(const AnnularDiagram& d, int c);

// True when no nugatory crossing is dotted-reducible.
bool is_dotted_reduced(const AnnularDiagram& d);

// Side assignment (face id -> 0/1) for the separating curve through
// corners (c,k) and (c,k+2); -1 for the shared face itself and for faces
// the curve never separates (other pieces). Pre: that pair shares a face.
std::vector<int> separating_curve_sides(const AnnularDiagram& d, int c, int k);

// Every ordered pair of smoothing states differing at one crossing, with
// the circle- and dotted-count deltas of the flip.
struct StateAdjacency {
    KauffmanState from;
    KauffmanState to;
    int crossing = 0;
    int delta_circles = 0;  // always +1 or -1
    int delta_dotted = 0;
};

std::vector<StateAdjacency> state_adjacency_scan(const AnnularDiagram& d,
                                                 std::uint64_t max_states = std::uint64_t{1}
                                                                            << 16);

}  // namespace annular
