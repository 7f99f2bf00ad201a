#pragma once

#include <cstdint>
#include <utility>

#include "annular/diagram.hpp"
#include "annular/polynomial.hpp"

namespace annular {

// One smoothing choice per crossing: bit c set means the B-smoothing.
// The A-smoothing joins slot pairs (0,1) and (2,3), the B-smoothing
// (0,3) and (1,2).
struct KauffmanState {
    std::uint64_t choices = 0;
    int size = 0;
};

// One circle of a resolved state: the edge labels it traverses, in trace
// order, and its winding parity around the puncture. Crossingless loops
// appear with an empty edge list.
struct StateCircle {
    std::vector<EdgeLabel> edges;
    int parity = 0;
    bool operator==(const StateCircle&) const = default;
};

struct StateResolution {
    std::vector<StateCircle> circles;
    int num_circles = 0;
    int num_dotted = 0;
    int a = 0;  // A-smoothings
    int b = 0;  // B-smoothings
};

StateResolution resolve_state(const AnnularDiagram& d, const KauffmanState& s, const CutPath& cp);

// A^(a-b) * (-A^2 - A^-2)^(|S|-1) * t^|T|, expanded into the term map.
// Rejects |S| = 0: the circle-count normalization needs a first circle.
SkeinPolynomial state_contribution(const StateResolution& r, bool big_coefficients = false);

struct BracketOptions {
    std::uint64_t max_states = std::uint64_t{1} << 26;
    int threads = 1;
    bool big_coefficients = false;  // keep all coefficients arbitrary-precision
};

// Sum of state_contribution over all 2^n smoothing choices. The state
// range may be split across threads; the result is identical for any
// worker count. Past max_states the instance is rejected, not truncated.
SkeinPolynomial bracket(const AnnularDiagram& d, const BracketOptions& opt = {});

// (-A^3)^(-w) * bracket, kept in the A-variable.
SkeinPolynomial jones(const AnnularDiagram& d, const BracketOptions& opt = {});

// Extremal A-exponents of a nonzero polynomial.
DegreeStats degree_stats(const SkeinPolynomial& p);

// Contributions of the all-A and all-B states.
std::pair<SkeinPolynomial, SkeinPolynomial> extreme_state_contributions(const AnnularDiagram& d);

// Independent evaluation by recursive crossing resolution down to the
// crossingless axioms. Exists to cross-check bracket; exponential and
// deliberately unclever.
SkeinPolynomial evaluate_recursive(const AnnularDiagram& d, const BracketOptions& opt = {});

}  // namespace annular
