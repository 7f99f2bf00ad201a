#pragma once

#include <cstdint>
#include <string>
#include <vector>

#include "annular/diagram.hpp"
#include "annular/skein.hpp"

namespace annular {

// Three-valued check result: vacuous when the diagram is outside the
// claim's hypotheses, pass/fail otherwise.
enum class CheckOutcome { pass, fail, vacuous };

const char* to_string(CheckOutcome o);

// One outcome per recorded claim, keyed by the stable check ids used in
// reports:
//   prop2_2   bracket degrees stay inside the all-A / all-B contributions
//   prop2_3   span_A(bracket) <= 4n
//   sAB_count |S_A| + |S_B| = n + 2            (alternating, connected)
//   thm3_5    span_A(bracket) = 4n             (alternating, dotted-reduced, connected)
//   cor3_6    span_A(jones) = 4n               (alternating, dotted-reduced, connected)
//   thm4_1    bracket degrees reach both extremes (alternating, dotted-reduced)
struct CheckSet {
    CheckOutcome prop2_2 = CheckOutcome::vacuous;
    CheckOutcome prop2_3 = CheckOutcome::vacuous;
    CheckOutcome sAB_count = CheckOutcome::vacuous;
    CheckOutcome thm3_5 = CheckOutcome::vacuous;
    CheckOutcome cor3_6 = CheckOutcome::vacuous;
    CheckOutcome thm4_1 = CheckOutcome::vacuous;
};

struct VerificationRecord {
    std::string id;
    int n = 0;
    bool alternating = false;
    bool dotted_reduced = false;
    bool connected = false;  // gates sAB_count / thm3_5 / cor3_6; not a report column
    int writhe = 0;
    int span_a = 0;
    std::int64_t max_a_all_a = 0;  // top A-degree of the all-A state's contribution
    std::int64_t min_a_all_b = 0;  // bottom A-degree of the all-B state's contribution
    CheckSet checks;
};

VerificationRecord verify_diagram(const AnnularDiagram& d, std::string id,
                                  const BracketOptions& opt = {});

// True when no check came out as fail (vacuous outcomes do not count).
bool record_passed(const VerificationRecord& r);

// Single-record renderings for the command line: readable key/value lines,
// and one compact JSON object.
std::string verification_text(const VerificationRecord& r);
std::string verification_object(const VerificationRecord& r);

struct BatchOptions {
    bool object_format = false;  // parse inputs as JSON documents instead of text
    int threads = 1;
    std::uint64_t max_states = BracketOptions{}.max_states;
    bool big_coefficients = false;
    std::uint64_t seed = 0;  // echoed into report headers for provenance
};

struct BatchReport {
    std::vector<VerificationRecord> records;  // input order
    std::vector<std::string> errors;          // "path: reason", input order
    bool all_checks_passed = true;            // no non-vacuous failure anywhere
};

// Reads, validates and verifies one diagram document per path. Unreadable
// or invalid files are listed in `errors` and skipped; they do not stop
// the run and do not affect all_checks_passed.
BatchReport run_batch(const std::vector<std::string>& paths, const BatchOptions& opt);

// CSV report: a `# tool=...,seed=...` comment, the fixed header, one row
// per record, then one `# error=` comment per skipped file.
std::string batch_csv(const BatchReport& rep, std::uint64_t seed);

// JSON report mirroring the CSV: tool, seed, records, errors.
std::string batch_object(const BatchReport& rep, std::uint64_t seed);

}  // namespace annular
