#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include <algorithm>

#include "annular/diagram.hpp"
#include "annular/errors.hpp"
#include "support.hpp"

using namespace annular;
using testing_support::load_corpus;

namespace {

// Edges traversed by a face's boundary walk, in trace order.
std::vector<EdgeLabel> boundary_edges(const AnnularDiagram& d, const Face& f) {
    std::vector<EdgeLabel> out;
    for (Corner c : f.corners) {
        out.push_back(d.crossings[c.crossing].slots[(c.slot + 1) % 4]);
    }
    return out;
}

}  // namespace

TEST_CASE("edge table pairs dart ends and rejects bad multiplicity") {
    const AnnularDiagram tref = load_corpus("trefoil-f3");
    const EdgeTable et(tref);
    for (const auto& [label, ends] : et.by_label()) {
        CHECK(et.mate(ends.first) == ends.second);
        CHECK(et.mate(ends.second) == ends.first);
    }
    CHECK_THROWS_AS((void)et.darts(99), ValidationError);

    AnnularDiagram bad = tref;
    bad.crossings[0].slots[0] = 2;  // label 2 now appears three times
    CHECK_THROWS_AS((void)EdgeTable(bad), ValidationError);
}

TEST_CASE("trefoil has five faces with the expected corner cycles") {
    const AnnularDiagram tref = load_corpus("trefoil-f3");
    const std::vector<Face> fs = faces(tref);
    REQUIRE(fs.size() == 5);
    CHECK(fs[0].corners == std::vector<Corner>{{0, 0}, {2, 0}, {1, 0}});
    CHECK(fs[1].corners == std::vector<Corner>{{0, 1}, {2, 3}});
    CHECK(fs[2].corners == std::vector<Corner>{{0, 2}, {1, 2}, {2, 2}});
    CHECK(fs[3].corners == std::vector<Corner>{{0, 3}, {1, 1}});
    CHECK(fs[4].corners == std::vector<Corner>{{1, 3}, {2, 1}});
    CHECK(fs[3].contains_puncture);
    CHECK(fs[3].is_outer);
    for (const Face& f : fs) {
        CHECK(f.contains_puncture == (f.id == 3));
        CHECK(f.is_outer == (f.id == 3));
    }
}

TEST_CASE("kink faces: two lobes and the ambient region") {
    const AnnularDiagram kink = load_corpus("kink-pos-outer");
    const std::vector<Face> fs = faces(kink);
    REQUIRE(fs.size() == 3);
    CHECK(fs[0].corners == std::vector<Corner>{{0, 0}});
    CHECK(fs[1].corners == std::vector<Corner>{{0, 1}, {0, 3}});
    CHECK(fs[2].corners == std::vector<Corner>{{0, 2}});
}

TEST_CASE("non-planar rotation systems are rejected") {
    AnnularDiagram d;
    d.crossings.push_back(Crossing{{1, 2, 1, 2}});  // opposite slots share an edge
    d.puncture_corner = Corner{0, 0};
    d.outer_corner = Corner{0, 0};
    CHECK_THROWS_AS((void)compute_embedding(d), ValidationError);
    const ValidationReport rep = validate(d);
    CHECK(!rep.ok);
}

TEST_CASE("cut path parities: faces wind the puncture only at the markers") {
    for (const std::string& name : testing_support::corpus_names()) {
        const AnnularDiagram d = load_corpus(name);
        if (d.crossings.empty()) continue;
        CAPTURE(name);
        const Embedding emb = compute_embedding(d);
        const CutPath cp = cut_path(d, emb);
        const bool split_markers = emb.puncture_face != emb.outer_face;
        for (const Face& f : faces(d)) {
            int parity = 0;
            for (EdgeLabel e : boundary_edges(d, f)) parity ^= cp.edge_parities.at(e);
            const bool winds = split_markers && (f.contains_puncture || f.is_outer);
            CHECK_MESSAGE(parity == (winds ? 1 : 0), name, " face ", f.id);
        }
    }
}

TEST_CASE("orientation: trefoil is one strand of writhe 3") {
    const AnnularDiagram tref = load_corpus("trefoil-f3");
    const OrientedComponentSet oc = orient(tref);
    REQUIRE(oc.components.size() == 1);
    CHECK(oc.components[0].size() == 6);
    CHECK(oc.components[0].front() == 1);
    CHECK(oc.strand_components == 1);
    CHECK(oc.total_components == 1);
    CHECK(oc.crossing_signs == std::vector<int>{1, 1, 1});
    CHECK(oc.writhe == 3);
    CHECK(writhe(tref) == 3);
}

TEST_CASE("orientation flags: reversing a knot keeps its writhe") {
    AnnularDiagram tref = load_corpus("trefoil-f3");
    tref.orientation_flags = {0};
    CHECK(writhe(tref) == 3);
    tref.orientation_flags = {1};
    CHECK_THROWS_AS((void)orient(tref), ValidationError);
    tref.orientation_flags = {0, 0};
    CHECK_THROWS_AS((void)orient(tref), ValidationError);
}

TEST_CASE("alternation and connectivity predicates") {
    CHECK(is_alternating(load_corpus("trefoil-f0")));
    CHECK(is_alternating(load_corpus("figure8-inner")));
    CHECK(!is_alternating(load_corpus("sum-twist")));
    CHECK(is_alternating(load_corpus("loop-plain")));
    CHECK(is_alternating(AnnularDiagram{}));

    CHECK(is_connected(load_corpus("trefoil-f0")));
    CHECK(is_connected(load_corpus("loop-dotted")));
    CHECK(!is_connected(load_corpus("loops-two-plain")));
    CHECK(!is_connected(AnnularDiagram{}));
    AnnularDiagram mixed = load_corpus("trefoil-f0");
    mixed.loops.push_back(Loop{true});
    CHECK(!is_connected(mixed));
}

TEST_CASE("validate reports marker problems instead of throwing") {
    AnnularDiagram d = load_corpus("trefoil-f3");
    d.puncture_corner.reset();
    CHECK(!validate(d).ok);

    d = load_corpus("trefoil-f3");
    d.outer_corner = Corner{7, 1};
    CHECK(!validate(d).ok);

    d = load_corpus("loop-plain");
    d.puncture_corner = Corner{0, 0};
    CHECK(!validate(d).ok);

    // markers on different pieces of a split diagram
    AnnularDiagram split;
    split.crossings.push_back(Crossing{{1, 1, 2, 2}});
    split.crossings.push_back(Crossing{{3, 3, 4, 4}});
    split.puncture_corner = Corner{0, 1};
    split.outer_corner = Corner{1, 1};
    CHECK(!validate(split).ok);
    split.outer_corner = Corner{0, 3};
    CHECK(validate(split).ok);

    CHECK(validate(load_corpus("empty")).ok);
    CHECK(validate(load_corpus("sum-twist")).ok);
}

TEST_CASE("mirror negates writhe and squares to a gauge change") {
    const AnnularDiagram tref = load_corpus("trefoil-f3");
    const AnnularDiagram m = mirror(tref);
    CHECK(validate(m).ok);
    CHECK(writhe(m) == -3);
    CHECK(faces(m).size() == 5);
    // applying mirror twice rotates every record by two slots: same diagram
    CHECK(canonicalized(mirror(m)) == canonicalized(tref));
}

TEST_CASE("canonical forms are stable under gauge and relabeling") {
    const AnnularDiagram tref = load_corpus("trefoil-f3");
    const AnnularDiagram canon = canonicalized(tref);
    CHECK(canonicalized(canon) == canon);

    // rotate one record by two slots: same crossing, different gauge
    AnnularDiagram rotated = tref;
    std::rotate(rotated.crossings[1].slots.begin(), rotated.crossings[1].slots.begin() + 2,
                rotated.crossings[1].slots.end());
    CHECK(canonicalized(rotated) == canon);

    // shift all labels by ten: relabeling maps back
    AnnularDiagram shifted = tref;
    for (Crossing& x : shifted.crossings) {
        for (EdgeLabel& e : x.slots) e += 10;
    }
    CHECK(canonical_relabel(shifted) == canonical_relabel(tref));

    // rotate a record of the shifted copy too: gauge and relabeling combined
    std::rotate(shifted.crossings[2].slots.begin(), shifted.crossings[2].slots.begin() + 2,
                shifted.crossings[2].slots.end());
    CHECK(canonicalized(shifted) == canon);
}
