#pragma once

#include <cstdint>
#include <random>

#include "annular/diagram.hpp"

namespace annular {

enum class PuncturePolicy {
    outer,                // puncture with the outer marker: classical specialization
    uniform_random_face,  // puncture in a uniformly chosen face
    adversarial_inner,    // puncture next to a nugatory crossing when one exists
};

struct GeneratorConfig {
    int min_crossings = 3;
    int max_crossings = 8;
    bool alternating = true;  // checkerboard strands; false leaves strands unconstrained
    PuncturePolicy policy = PuncturePolicy::outer;
    std::uint64_t seed = 0;
};

// Stream of validated random diagrams: a random connected plane
// multigraph is grown edge by edge (new edges across a face, or dangling
// leaves, which become nugatory crossings), its medial 4-valent graph
// becomes the diagram, and strands are assigned by the checkerboard rule
// (alternating) or per-crossing coin flips. Same config and seed, same
// stream, independent of platform.
class DiagramGenerator {
  public:
    explicit DiagramGenerator(const GeneratorConfig& cfg);
    AnnularDiagram next();

  private:
    GeneratorConfig cfg_;
    std::mt19937_64 rng_;
};

// Uniform integer in [0, bound) from full-width draws, bias-rejected; the
// stream depends only on the mt19937_64 sequence, not on library
// distribution internals.
std::uint64_t uniform_below(std::mt19937_64& rng, std::uint64_t bound);

}  // namespace annular
