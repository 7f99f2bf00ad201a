#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include <json.hpp>

#include "annular/format.hpp"
#include "annular/verify.hpp"
#include "support.hpp"

using namespace annular;
using testing_support::corpus_path;
using testing_support::load_corpus;

namespace {

bool all_in_scope_pass(const CheckSet& c) {
    for (CheckOutcome o : {c.prop2_2, c.prop2_3, c.sAB_count, c.thm3_5, c.cor3_6, c.thm4_1})
        if (o == CheckOutcome::fail) return false;
    return true;
}

}  // namespace

TEST_CASE("trefoil record: an alternating reduced knot hits every claim") {
    const VerificationRecord r = verify_diagram(load_corpus("trefoil-f3"), "tref");
    CHECK(r.id == "tref");
    CHECK(r.n == 3);
    CHECK(r.alternating);
    CHECK(r.dotted_reduced);
    CHECK(r.connected);
    CHECK(r.writhe == 3);
    CHECK(r.span_a == 12);
    CHECK(r.max_a_all_a == 5);
    CHECK(r.min_a_all_b == -7);
    CHECK(r.checks.prop2_2 == CheckOutcome::pass);
    CHECK(r.checks.prop2_3 == CheckOutcome::pass);
    CHECK(r.checks.sAB_count == CheckOutcome::pass);
    CHECK(r.checks.thm3_5 == CheckOutcome::pass);
    CHECK(r.checks.cor3_6 == CheckOutcome::pass);
    CHECK(r.checks.thm4_1 == CheckOutcome::pass);
    CHECK(record_passed(r));

    const std::string text = verification_text(r);
    CHECK(text.find("span_A: 12") != std::string::npos);
    CHECK(text.find("thm3_5: pass") != std::string::npos);
}

TEST_CASE("reducible kink: span claims go vacuous, bounds still hold") {
    const VerificationRecord r = verify_diagram(load_corpus("kink-pos-outer"), "kink");
    CHECK(r.n == 1);
    CHECK(r.alternating);
    CHECK(!r.dotted_reduced);
    CHECK(r.span_a == 0);  // bracket is a single monomial
    CHECK(r.checks.prop2_2 == CheckOutcome::pass);
    CHECK(r.checks.prop2_3 == CheckOutcome::pass);
    CHECK(r.checks.sAB_count == CheckOutcome::pass);
    CHECK(r.checks.thm3_5 == CheckOutcome::vacuous);
    CHECK(r.checks.cor3_6 == CheckOutcome::vacuous);
    CHECK(r.checks.thm4_1 == CheckOutcome::vacuous);
    CHECK(record_passed(r));
}

TEST_CASE("irreducible kink: the span theorem applies at n = 1") {
    const VerificationRecord r = verify_diagram(load_corpus("kink-pos-irreducible"), "irr");
    CHECK(r.dotted_reduced);
    CHECK(r.span_a == 4);
    CHECK(r.checks.thm3_5 == CheckOutcome::pass);
    CHECK(r.checks.cor3_6 == CheckOutcome::pass);
    CHECK(r.checks.thm4_1 == CheckOutcome::pass);
}

TEST_CASE("non-alternating input gates the alternating-only claims") {
    const VerificationRecord r = verify_diagram(load_corpus("sum-twist"), "st");
    CHECK(!r.alternating);
    CHECK(r.checks.sAB_count == CheckOutcome::vacuous);
    CHECK(r.checks.thm3_5 == CheckOutcome::vacuous);
    CHECK(r.checks.cor3_6 == CheckOutcome::vacuous);
    CHECK(r.checks.thm4_1 == CheckOutcome::vacuous);
    CHECK(r.checks.prop2_2 == CheckOutcome::pass);
    CHECK(r.checks.prop2_3 == CheckOutcome::pass);
    CHECK(record_passed(r));
}

TEST_CASE("a split pair of loops breaks the connected-diagram span bound") {
    const VerificationRecord r = verify_diagram(load_corpus("loops-two-plain"), "split");
    CHECK(r.n == 0);
    CHECK(!r.connected);
    CHECK(r.span_a == 4);
    CHECK(r.checks.prop2_3 == CheckOutcome::fail);
    CHECK(!record_passed(r));
}

TEST_CASE("whole corpus: every connected diagram passes every in-scope check") {
    for (const std::string& name : testing_support::corpus_names()) {
        const AnnularDiagram d = load_corpus(name);
        if (!is_connected(d) && d.crossing_count() == 0 && d.loop_count() > 1) continue;
        CAPTURE(name);
        const VerificationRecord r = verify_diagram(d, name);
        CHECK(all_in_scope_pass(r.checks));
    }
}

TEST_CASE("batch report: input order, error channel, stable csv") {
    const std::vector<std::string> paths = {corpus_path("trefoil-f0.txt"), "/nonexistent/x.txt",
                                            corpus_path("kink-neg-irreducible.txt")};
    BatchOptions opt;
    const BatchReport rep = run_batch(paths, opt);
    REQUIRE(rep.records.size() == 2);
    REQUIRE(rep.errors.size() == 1);
    CHECK(rep.records[0].id == paths[0]);
    CHECK(rep.records[1].id == paths[2]);
    CHECK(rep.errors[0].find("/nonexistent/x.txt") == 0);
    CHECK(rep.all_checks_passed);  // unreadable files are reported, not failed

    const std::string csv = batch_csv(rep, 99);
    CHECK(csv.find("# tool=annular/") == 0);
    CHECK(csv.find("seed=99") != std::string::npos);
    CHECK(csv.find("id,n,alternating,dotted_reduced,writhe,span_A,maxA_allA,minA_allB,"
                   "prop2_2,prop2_3,sAB,thm3_5,cor3_6,thm4_1\n") != std::string::npos);
    CHECK(csv.find("# error=/nonexistent/x.txt") != std::string::npos);
}

TEST_CASE("batch json carries the same records with named checks") {
    const BatchReport rep = run_batch({corpus_path("trefoil-f1.txt")}, BatchOptions{});
    const nlohmann::json doc = nlohmann::json::parse(batch_object(rep, 7));
    CHECK(doc.at("tool").get<std::string>().rfind("annular/", 0) == 0);
    CHECK(doc.at("seed").get<std::uint64_t>() == 7);
    REQUIRE(doc.at("records").size() == 1);
    const auto& rec = doc.at("records")[0];
    CHECK(rec.at("n") == 3);
    CHECK(rec.at("span_A") == 12);
    CHECK(rec.at("checks").at("sAB_count") == "pass");
    CHECK(rec.at("checks").at("thm4_1") == "pass");
    CHECK(doc.at("errors").empty());
}

TEST_CASE("a failing record flips the batch verdict") {
    const BatchReport rep = run_batch({corpus_path("loops-two-plain.txt")}, BatchOptions{});
    REQUIRE(rep.records.size() == 1);
    CHECK(!rep.all_checks_passed);
}

TEST_CASE("worker count changes neither records nor rendering") {
    std::vector<std::string> paths;
    for (const std::string& name : testing_support::corpus_names())
        paths.push_back(corpus_path(name + ".txt"));
    BatchOptions opt;
    const std::string base = batch_csv(run_batch(paths, opt), 1);
    for (int threads : {2, 5, 16}) {
        opt.threads = threads;
        CHECK(batch_csv(run_batch(paths, opt), 1) == base);
        CHECK(batch_object(run_batch(paths, opt), 1) ==
              batch_object(run_batch(paths, BatchOptions{}), 1));
    }
}

TEST_CASE("object-format batch parses json documents") {
    // serialize one corpus diagram as an object document first
    const AnnularDiagram d = load_corpus("trefoil-f4");
    const std::string path = "/tmp/annular-test-trefoil-f4.json";
    {
        std::ofstream out(path);
        out << serialize_diagram_object(d);
    }
    BatchOptions opt;
    opt.object_format = true;
    const BatchReport rep = run_batch({path}, opt);
    REQUIRE(rep.records.size() == 1);
    CHECK(rep.records[0].span_a == 12);

    // the same file through the text parser lands in the error channel
    const BatchReport wrong = run_batch({path}, BatchOptions{});
    CHECK(wrong.records.empty());
    REQUIRE(wrong.errors.size() == 1);
}

TEST_CASE("empty batch passes by definition") {
    const BatchReport rep = run_batch({}, BatchOptions{});
    CHECK(rep.records.empty());
    CHECK(rep.errors.empty());
    CHECK(rep.all_checks_passed);
}

TEST_CASE("outcome names") {
    CHECK(std::string(to_string(CheckOutcome::pass)) == "pass");
    CHECK(std::string(to_string(CheckOutcome::fail)) == "fail");
    CHECK(std::string(to_string(CheckOutcome::vacuous)) == "vacuous");
}
