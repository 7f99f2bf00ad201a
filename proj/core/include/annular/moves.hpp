#pragma once

#include "annular/crossing_analysis.hpp"
#include "annular/diagram.hpp"
#include "annular/polynomial.hpp"

namespace annular {

struct RewriteResult {
    AnnularDiagram diagram;
    SkeinPolynomial expected_bracket_factor;  // bracket(diagram) = factor * bracket(input)
    int crossing_delta = 0;
};

enum class KinkSide { left, right };

// Adds a kink of the given sign on an edge, curling to the chosen side.
// Factor -A^(3*sign); the new crossing is appended last.
RewriteResult r1_insert(const AnnularDiagram& d, EdgeLabel edge, KinkSide side, int sign);

// Same move on a crossingless plain loop, which becomes a one-crossing
// unknot piece. On a previously crossingless diagram the region markers
// anchor to the ambient corners of the new crossing. Dotted loops are
// rejected: the curl would need winding data the move cannot supply.
RewriteResult r1_insert_on_loop(const AnnularDiagram& d, int loop_index, KinkSide side, int sign);

// Pushes edge1 over edge2 across a face they both border (the smallest
// such face when they share two). Adds two crossings; factor 1.
RewriteResult r2_insert(const AnnularDiagram& d, EdgeLabel edge1, EdgeLabel edge2);

// Appends a disjoint loop. Factor (-A^2 - A^-2), times t when dotted;
// for an empty diagram just 1 or t (the loop is the first circle).
RewriteResult insert_loop(const AnnularDiagram& d, bool dotted);

// Undoes a dotted-reducible crossing: flips the half-tangle enclosed by
// the first contractible separating curve and splices the strands.
// Factor -A^(-3*sign of the removed crossing). Inverse of r1_insert up
// to relabeling when the kink's face avoids the puncture.
RewriteResult remove_dotted_reducible(const AnnularDiagram& d, int c);

}  // namespace annular
