#include "annular/verify.hpp"

#include <atomic>
#include <cstddef>
#include <fstream>
#include <optional>
#include <sstream>
#include <thread>
#include <utility>

#include <json.hpp>

#include "annular/crossing_analysis.hpp"
#include "annular/errors.hpp"
#include "annular/format.hpp"
#include "annular/version.hpp"

namespace annular {

const char* to_string(CheckOutcome o) {
    switch (o) {
        case CheckOutcome::pass: return "pass";
        case CheckOutcome::fail: return "fail";
        case CheckOutcome::vacuous: return "vacuous";
    }
    return "vacuous";
}

namespace {

CheckOutcome judged(bool ok) { return ok ? CheckOutcome::pass : CheckOutcome::fail; }

CheckOutcome gated(bool in_scope, bool ok) {
    return in_scope ? judged(ok) : CheckOutcome::vacuous;
}

const char* bool_text(bool b) { return b ? "true" : "false"; }

std::string csv_field(const std::string& s) {
    if (s.find_first_of(",\"\n\r") == std::string::npos) return s;
    std::string out = "\"";
    for (char c : s) {
        if (c == '"') out += "\"\"";
        else out += c;
    }
    out += '"';
    return out;
}

nlohmann::json record_json(const VerificationRecord& r) {
    nlohmann::json checks;
    checks["prop2_2"] = to_string(r.checks.prop2_2);
    checks["prop2_3"] = to_string(r.checks.prop2_3);
    checks["sAB_count"] = to_string(r.checks.sAB_count);
    checks["thm3_5"] = to_string(r.checks.thm3_5);
    checks["cor3_6"] = to_string(r.checks.cor3_6);
    checks["thm4_1"] = to_string(r.checks.thm4_1);
    nlohmann::json j;
    j["id"] = r.id;
    j["n"] = r.n;
    j["alternating"] = r.alternating;
    j["dotted_reduced"] = r.dotted_reduced;
    j["writhe"] = r.writhe;
    j["span_A"] = r.span_a;
    j["maxA_allA"] = r.max_a_all_a;
    j["minA_allB"] = r.min_a_all_b;
    j["checks"] = std::move(checks);
    return j;
}

}  // namespace

VerificationRecord verify_diagram(const AnnularDiagram& d, std::string id,
                                  const BracketOptions& opt) {
    VerificationRecord r;
    r.id = std::move(id);
    r.n = d.crossing_count();
    r.alternating = is_alternating(d);
    r.dotted_reduced = is_dotted_reduced(d);
    r.connected = is_connected(d);
    r.writhe = writhe(d);

    const SkeinPolynomial b = bracket(d, opt);
    const auto [all_a, all_b] = extreme_state_contributions(d);
    r.max_a_all_a = degree_stats(all_a).max_a;
    r.min_a_all_b = degree_stats(all_b).min_a;

    // The bracket of a diagram is never zero, but a degenerate polynomial
    // would still need defined degrees; treat it as inside every bound.
    const auto bstats = b.a_degree_stats();
    const std::int64_t bracket_max = bstats ? bstats->max_a : r.max_a_all_a;
    const std::int64_t bracket_min = bstats ? bstats->min_a : r.min_a_all_b;
    r.span_a = static_cast<int>(bracket_max - bracket_min);

    const std::int64_t w = r.writhe;
    const SkeinPolynomial v =
        b.times_monomial(Coeff{std::int64_t{(w % 2 != 0) ? -1 : 1}}, -3 * w, 0);
    const auto vstats = v.a_degree_stats();
    const std::int64_t jones_span = vstats ? vstats->span() : 0;

    const CutPath cp = cut_path(d);
    const int s_a = resolve_state(d, KauffmanState{0, r.n}, cp).num_circles;
    const std::uint64_t all_b_mask = r.n == 0 ? 0 : (std::uint64_t{1} << r.n) - 1;
    const int s_b = resolve_state(d, KauffmanState{all_b_mask, r.n}, cp).num_circles;

    r.checks.prop2_2 = judged(bracket_max <= r.max_a_all_a && bracket_min >= r.min_a_all_b);
    r.checks.prop2_3 = judged(r.span_a <= 4 * r.n);
    r.checks.sAB_count = gated(r.alternating && r.connected, s_a + s_b == r.n + 2);
    const bool span_scope = r.alternating && r.dotted_reduced && r.connected;
    r.checks.thm3_5 = gated(span_scope, r.span_a == 4 * r.n);
    r.checks.cor3_6 = gated(span_scope, jones_span == 4 * r.n);
    r.checks.thm4_1 = gated(r.alternating && r.dotted_reduced,
                            bracket_max == r.max_a_all_a && bracket_min == r.min_a_all_b);
    return r;
}

bool record_passed(const VerificationRecord& r) {
    for (CheckOutcome o : {r.checks.prop2_2, r.checks.prop2_3, r.checks.sAB_count,
                           r.checks.thm3_5, r.checks.cor3_6, r.checks.thm4_1}) {
        if (o == CheckOutcome::fail) return false;
    }
    return true;
}

std::string verification_text(const VerificationRecord& r) {
    std::ostringstream out;
    out << "id: " << r.id << "\n"
        << "n: " << r.n << "\n"
        << "alternating: " << bool_text(r.alternating) << "\n"
        << "dotted_reduced: " << bool_text(r.dotted_reduced) << "\n"
        << "writhe: " << r.writhe << "\n"
        << "span_A: " << r.span_a << "\n"
        << "maxA_allA: " << r.max_a_all_a << "\n"
        << "minA_allB: " << r.min_a_all_b << "\n"
        << "prop2_2: " << to_string(r.checks.prop2_2) << "\n"
        << "prop2_3: " << to_string(r.checks.prop2_3) << "\n"
        << "sAB: " << to_string(r.checks.sAB_count) << "\n"
        << "thm3_5: " << to_string(r.checks.thm3_5) << "\n"
        << "cor3_6: " << to_string(r.checks.cor3_6) << "\n"
        << "thm4_1: " << to_string(r.checks.thm4_1) << "\n";
    return out.str();
}

std::string verification_object(const VerificationRecord& r) {
    return record_json(r).dump() + "\n";
}

BatchReport run_batch(const std::vector<std::string>& paths, const BatchOptions& opt) {
    struct Slot {
        std::optional<VerificationRecord> record;
        std::string error;
    };
    std::vector<Slot> slots(paths.size());

    BracketOptions bopt;
    bopt.max_states = opt.max_states;
    bopt.big_coefficients = opt.big_coefficients;
    bopt.threads = 1;  // parallelism lives across items, not inside them

    auto work_one = [&](std::size_t i) {
        const std::string& path = paths[i];
        std::ifstream in(path);
        if (!in) {
            slots[i].error = path + ": cannot open file";
            return;
        }
        std::ostringstream buf;
        buf << in.rdbuf();
        try {
            const AnnularDiagram d =
                opt.object_format ? parse_diagram_object(buf.str()) : parse_diagram(buf.str());
            const ValidationReport check = validate(d);
            if (!check.ok) {
                slots[i].error = path + ": " + check.failures.front();
                return;
            }
            slots[i].record = verify_diagram(d, path, bopt);
        } catch (const std::exception& e) {
            slots[i].error = path + ": " + std::string(e.what());
        }
    };

    const int workers =
        static_cast<int>(std::min<std::size_t>(std::max(opt.threads, 1), paths.size()));
    if (workers <= 1) {
        for (std::size_t i = 0; i < paths.size(); ++i) work_one(i);
    } else {
        std::atomic<std::size_t> cursor{0};
        std::vector<std::thread> pool;
        pool.reserve(workers);
        for (int t = 0; t < workers; ++t) {
            pool.emplace_back([&] {
                for (;;) {
                    const std::size_t i = cursor.fetch_add(1);
                    if (i >= paths.size()) return;
                    work_one(i);
                }
            });
        }
        for (auto& th : pool) th.join();
    }

    BatchReport rep;
    for (auto& slot : slots) {
        if (slot.record) {
            if (!record_passed(*slot.record)) rep.all_checks_passed = false;
            rep.records.push_back(std::move(*slot.record));
        } else {
            rep.errors.push_back(std::move(slot.error));
        }
    }
    return rep;
}

std::string batch_csv(const BatchReport& rep, std::uint64_t seed) {
    std::ostringstream out;
    out << "# tool=annular/" << kVersion << ",seed=" << seed << "\n";
    out << "id,n,alternating,dotted_reduced,writhe,span_A,maxA_allA,minA_allB,"
           "prop2_2,prop2_3,sAB,thm3_5,cor3_6,thm4_1\n";
    for (const VerificationRecord& r : rep.records) {
        out << csv_field(r.id) << ',' << r.n << ',' << bool_text(r.alternating) << ','
            << bool_text(r.dotted_reduced) << ',' << r.writhe << ',' << r.span_a << ','
            << r.max_a_all_a << ',' << r.min_a_all_b << ',' << to_string(r.checks.prop2_2) << ','
            << to_string(r.checks.prop2_3) << ',' << to_string(r.checks.sAB_count) << ','
            << to_string(r.checks.thm3_5) << ',' << to_string(r.checks.cor3_6) << ','
            << to_string(r.checks.thm4_1) << "\n";
    }
    for (const std::string& e : rep.errors) out << "# error=" << e << "\n";
    return out.str();
}

std::string batch_object(const BatchReport& rep, std::uint64_t seed) {
    nlohmann::json j;
    j["tool"] = std::string("annular/") + kVersion;
    j["seed"] = seed;
    nlohmann::json records = nlohmann::json::array();
    for (const VerificationRecord& r : rep.records) records.push_back(record_json(r));
    j["records"] = std::move(records);
    j["errors"] = rep.errors;
    return j.dump() + "\n";
}

}  // namespace annular
