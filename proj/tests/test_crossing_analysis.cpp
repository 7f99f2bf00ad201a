#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include <cstdlib>

#include "annular/crossing_analysis.hpp"
#include "annular/errors.hpp"
#include "annular/moves.hpp"
#include "annular/skein.hpp"
#include "support.hpp"

using namespace annular;
using testing_support::load_corpus;

TEST_CASE("kink classifications depend on where the markers sit") {
    // markers together in the ambient region: the curl can be undone
    CHECK(nugatory_crossings(load_corpus("kink-pos-outer")) == std::vector<int>{0});
    CHECK(classify_nugatory(load_corpus("kink-pos-outer"), 0).status ==
          CrossingStatus::dotted_reducible);
    CHECK(!is_dotted_reduced(load_corpus("kink-pos-outer")));

    // markers together inside one lobe: still reducible
    CHECK(classify_nugatory(load_corpus("kink-pos-lobe1"), 0).status ==
          CrossingStatus::dotted_reducible);
    CHECK(classify_nugatory(load_corpus("kink-pos-lobe2"), 0).status ==
          CrossingStatus::dotted_reducible);

    // puncture in one lobe, outer region outside: every curve separates them
    for (const char* name : {"kink-pos-irreducible", "kink-neg-irreducible"}) {
        CAPTURE(name);
        const AnnularDiagram d = load_corpus(name);
        const CrossingReport rep = classify_nugatory(d, 0);
        CHECK(rep.status == CrossingStatus::dotted_irreducible);
        CHECK(is_dotted_reduced(d));
        for (const SeparatingCurve& c : rep.curves) CHECK(!c.contractible);
    }
}

TEST_CASE("reducible kinks admit a contractible curve class") {
    const CrossingReport rep = classify_nugatory(load_corpus("kink-pos-outer"), 0);
    REQUIRE(!rep.curves.empty());
    bool found = false;
    for (const SeparatingCurve& c : rep.curves) {
        if (c.contractible) {
            found = true;
            CHECK(c.puncture_side == c.outer_side);
        }
    }
    CHECK(found);
}

TEST_CASE("alternating corpus knots have no nugatory crossings") {
    for (const char* name : {"trefoil-f0", "trefoil-f3", "figure8-outer", "figure8-inner"}) {
        CAPTURE(name);
        const AnnularDiagram d = load_corpus(name);
        CHECK(nugatory_crossings(d).empty());
        CHECK(is_dotted_reduced(d));
        CHECK_THROWS_AS((void)classify_nugatory(d, 0), ValidationError);
    }
}

TEST_CASE("sum-twist carries one removable curl") {
    const AnnularDiagram d = load_corpus("sum-twist");
    CHECK(nugatory_crossings(d) == std::vector<int>{3});
    CHECK(classify_nugatory(d, 3).status == CrossingStatus::dotted_reducible);
    CHECK(!is_dotted_reduced(d));
}

TEST_CASE("double-kink reduces to nothing one curl at a time") {
    const AnnularDiagram d = load_corpus("double-kink");
    CHECK(nugatory_crossings(d) == std::vector<int>{0, 1});
    CHECK(classify_nugatory(d, 0).status == CrossingStatus::dotted_reducible);
    CHECK(classify_nugatory(d, 1).status == CrossingStatus::dotted_reducible);

    const AnnularDiagram once = remove_dotted_reducible(d, 1).diagram;
    CHECK(once.crossing_count() == 1);
    CHECK(nugatory_crossings(once) == std::vector<int>{0});
    const AnnularDiagram twice = remove_dotted_reducible(once, 0).diagram;
    CHECK(twice.crossing_count() == 0);
    CHECK(bracket(twice) == jones(load_corpus("double-kink")));
}

TEST_CASE("separating curve sides split the faces in two") {
    const AnnularDiagram kink = load_corpus("kink-pos-irreducible");
    const CrossingReport rep = classify_nugatory(kink, 0);
    REQUIRE(!rep.curves.empty());
    const SeparatingCurve& c = rep.curves.front();
    const std::vector<int> sides = separating_curve_sides(kink, 0, c.corner_slot);
    REQUIRE(sides.size() == faces(kink).size());
    CHECK(sides[c.face] == -1);
    bool side0 = false, side1 = false;
    for (int s : sides) {
        if (s == 0) side0 = true;
        if (s == 1) side1 = true;
    }
    CHECK(side0);
    CHECK(side1);
}

TEST_CASE("state adjacency: each flip changes the circle count by one") {
    for (const char* name : {"trefoil-f1", "figure8-inner", "sum-twist", "kink-neg-irreducible"}) {
        CAPTURE(name);
        const AnnularDiagram d = load_corpus(name);
        const int n = d.crossing_count();
        const std::vector<StateAdjacency> adj = state_adjacency_scan(d);
        CHECK(adj.size() == (std::uint64_t{1} << n) * n);
        const CutPath cp = cut_path(d);
        for (const StateAdjacency& e : adj) {
            CHECK(std::abs(e.delta_circles) == 1);
            CHECK((e.from.choices ^ e.to.choices) == (std::uint64_t{1} << e.crossing));
            const StateResolution rf = resolve_state(d, e.from, cp);
            const StateResolution rt = resolve_state(d, e.to, cp);
            CHECK(rt.num_circles - rf.num_circles == e.delta_circles);
            CHECK(rt.num_dotted - rf.num_dotted == e.delta_dotted);
        }
    }
}

TEST_CASE("state adjacency scans respect the state budget") {
    CHECK_THROWS_AS((void)state_adjacency_scan(load_corpus("trefoil-f0"), 4), StateLimitExceeded);
}
