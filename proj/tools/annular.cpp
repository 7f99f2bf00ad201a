#include <cstdint>
#include <filesystem>
#include <stdexcept>
#include <fstream>
#include <iostream>
#include <sstream>
#include <string>
#include <vector>

#include <CLI11.hpp>

#include "annular/crossing_analysis.hpp"
#include "annular/diagram.hpp"
#include "annular/errors.hpp"
#include "annular/format.hpp"
#include "annular/generator.hpp"
#include "annular/moves.hpp"
#include "annular/polynomial.hpp"
#include "annular/skein.hpp"
#include "annular/verify.hpp"
#include "annular/version.hpp"

namespace {

using namespace annular;

// Missing or contradictory command-line arguments; maps to exit code 2.
struct UsageError : std::runtime_error {
    using std::runtime_error::runtime_error;
};

std::string read_input(const std::string& path) {
    if (path == "-") {
        std::ostringstream buf;
        buf << std::cin.rdbuf();
        return buf.str();
    }
    std::ifstream in(path);
    if (!in) throw ParseError("cannot open file: " + path);
    std::ostringstream buf;
    buf << in.rdbuf();
    return buf.str();
}

AnnularDiagram load_diagram(const std::string& path, bool object_format) {
    const std::string text = read_input(path);
    AnnularDiagram d = object_format ? parse_diagram_object(text) : parse_diagram(text);
    const ValidationReport check = validate(d);
    if (!check.ok) throw ValidationError(path + ": " + check.failures.front());
    return d;
}

// Display form with q-exponents = -a/4, kept as exact reduced rationals.
std::string q_exponent(std::int64_t a_exp) {
    const std::int64_t num = -a_exp;
    if (num % 4 == 0) return std::to_string(num / 4);
    if (num % 2 == 0) return std::to_string(num / 2) + "/2";
    return std::to_string(num) + "/4";
}

std::string to_q_text(const SkeinPolynomial& p) {
    if (p.is_zero()) return "0";
    std::string out;
    for (const auto& [key, coeff] : p.terms()) {
        if (!out.empty()) out += " + ";
        out += coeff.str();
        if (key.a_exp != 0) out += "*q^" + q_exponent(key.a_exp);
        if (key.t_exp != 0) out += "*t^" + std::to_string(key.t_exp);
    }
    return out;
}

const char* status_text(CrossingStatus s) {
    switch (s) {
        case CrossingStatus::non_nugatory: return "non-nugatory";
        case CrossingStatus::dotted_reducible: return "nugatory dotted-reducible";
        case CrossingStatus::dotted_irreducible: return "nugatory dotted-irreducible";
    }
    return "non-nugatory";
}

const char* status_token(CrossingStatus s) {
    switch (s) {
        case CrossingStatus::non_nugatory: return "non-nugatory";
        case CrossingStatus::dotted_reducible: return "dotted-reducible";
        case CrossingStatus::dotted_irreducible: return "dotted-irreducible";
    }
    return "non-nugatory";
}

struct PolynomialArgs {
    std::string input = "-";
    std::string format = "text";
    std::uint64_t max_states = BracketOptions{}.max_states;
    int threads = 1;
    bool big = false;
};

void add_polynomial_options(CLI::App* cmd, PolynomialArgs& args) {
    cmd->add_option("input", args.input, "diagram document, or - for stdin");
    cmd->add_option("--format", args.format, "document and result format")
        ->check(CLI::IsMember({"text", "object"}));
    cmd->add_option("--max-states", args.max_states, "state-count cap before giving up");
    cmd->add_option("--threads", args.threads, "worker threads")->check(CLI::PositiveNumber);
    cmd->add_flag("--big-coefficients,--big", args.big, "arbitrary-precision coefficients");
}

BracketOptions bracket_options(const PolynomialArgs& args) {
    BracketOptions opt;
    opt.max_states = args.max_states;
    opt.threads = args.threads;
    opt.big_coefficients = args.big;
    return opt;
}

int run_polynomial(const PolynomialArgs& args, bool want_jones, bool q_display) {
    const AnnularDiagram d = load_diagram(args.input, args.format == "object");
    const SkeinPolynomial p =
        want_jones ? jones(d, bracket_options(args)) : bracket(d, bracket_options(args));
    if (args.format == "object") {
        std::cout << p.to_json() << "\n";
    } else if (q_display) {
        std::cout << to_q_text(p) << "\n";
    } else {
        std::cout << p.to_text() << "\n";
    }
    return 0;
}

int run_classify(const std::string& input, const std::string& format) {
    const AnnularDiagram d = load_diagram(input, format == "object");
    std::vector<CrossingReport> reports;
    for (int c : nugatory_crossings(d)) reports.push_back(classify_nugatory(d, c));
    const bool reduced = is_dotted_reduced(d);
    if (format == "object") {
        std::string out = "{\"crossings\":[";
        std::size_t at = 0;
        for (int c = 0; c < d.crossing_count(); ++c) {
            CrossingStatus s = CrossingStatus::non_nugatory;
            if (at < reports.size() && reports[at].crossing == c) s = reports[at++].status;
            if (c) out += ",";
            out += "{\"crossing\":" + std::to_string(c) + ",\"status\":\"" +
                   status_token(s) + "\"}";
        }
        out += "],\"dotted_reduced\":";
        out += reduced ? "true" : "false";
        out += "}";
        std::cout << out << "\n";
    } else {
        std::size_t at = 0;
        for (int c = 0; c < d.crossing_count(); ++c) {
            CrossingStatus s = CrossingStatus::non_nugatory;
            if (at < reports.size() && reports[at].crossing == c) s = reports[at++].status;
            std::cout << "crossing " << c << ": " << status_text(s) << "\n";
        }
        std::cout << "dotted_reduced: " << (reduced ? "true" : "false") << "\n";
    }
    return 0;
}

int run_verify(const PolynomialArgs& args) {
    const AnnularDiagram d = load_diagram(args.input, args.format == "object");
    const VerificationRecord rec =
        verify_diagram(d, args.input == "-" ? "stdin" : args.input, bracket_options(args));
    std::cout << (args.format == "object" ? verification_object(rec) : verification_text(rec));
    return 0;
}

struct BatchArgs {
    std::vector<std::string> inputs;
    std::string format = "text";
    std::string csv_path;
    std::string json_path;
    std::uint64_t max_states = BracketOptions{}.max_states;
    int threads = 1;
    bool big = false;
    std::uint64_t seed = 0;
};

int run_batch(const BatchArgs& args) {
    BatchOptions opt;
    opt.object_format = args.format == "object";
    opt.threads = args.threads;
    opt.max_states = args.max_states;
    opt.big_coefficients = args.big;
    opt.seed = args.seed;
    const BatchReport rep = run_batch(args.inputs, opt);
    const std::string csv = batch_csv(rep, args.seed);
    const std::string object = batch_object(rep, args.seed);
    if (!args.csv_path.empty()) {
        std::ofstream out(args.csv_path);
        if (!out) throw ParseError("cannot write file: " + args.csv_path);
        out << csv;
    }
    if (!args.json_path.empty()) {
        std::ofstream out(args.json_path);
        if (!out) throw ParseError("cannot write file: " + args.json_path);
        out << object;
    }
    std::cout << (args.format == "object" ? object : csv);
    return rep.all_checks_passed ? 0 : 1;
}

struct GenerateArgs {
    int count = 1;
    GeneratorConfig cfg;
    std::string policy = "outer";
    std::string format = "text";
    std::string out_dir;
};

int run_generate(GenerateArgs& args) {
    if (args.policy == "uniform-random-face") {
        args.cfg.policy = PuncturePolicy::uniform_random_face;
    } else if (args.policy == "adversarial-inner") {
        args.cfg.policy = PuncturePolicy::adversarial_inner;
    } else {
        args.cfg.policy = PuncturePolicy::outer;
    }
    DiagramGenerator gen(args.cfg);
    const bool object = args.format == "object";
    for (int i = 0; i < args.count; ++i) {
        const AnnularDiagram d = gen.next();
        const std::string doc = object ? serialize_diagram_object(d) : serialize_diagram(d);
        if (args.out_dir.empty()) {
            if (i && !object) std::cout << "---\n";
            std::cout << doc;
            continue;
        }
        std::filesystem::create_directories(args.out_dir);
        std::ostringstream name;
        name << "gen-" << args.cfg.seed << "-" << i << (object ? ".json" : ".txt");
        const std::filesystem::path path = std::filesystem::path(args.out_dir) / name.str();
        std::ofstream out(path);
        if (!out) throw ParseError("cannot write file: " + path.string());
        out << doc;
        std::cout << path.string() << "\n";
    }
    return 0;
}

struct RewriteArgs {
    std::string input = "-";
    std::string format = "text";
    std::string move;
    std::string side = "right";
    int sign = 1;
    EdgeLabel edge = 0;
    EdgeLabel edge2 = 0;
    int loop_index = 0;
    int crossing = 0;
    bool dotted = false;
};

int run_rewrite(const RewriteArgs& args, const CLI::App* cmd) {
    const AnnularDiagram d = load_diagram(args.input, args.format == "object");
    const KinkSide side = args.side == "left" ? KinkSide::left : KinkSide::right;
    RewriteResult result;
    if (args.move == "r1") {
        if (!cmd->count("--edge")) throw UsageError("rewrite r1 needs --edge");
        result = r1_insert(d, args.edge, side, args.sign);
    } else if (args.move == "r1-loop") {
        if (!cmd->count("--loop-index")) throw UsageError("rewrite r1-loop needs --loop-index");
        result = r1_insert_on_loop(d, args.loop_index, side, args.sign);
    } else if (args.move == "r2") {
        if (!cmd->count("--edge") || !cmd->count("--edge2")) {
            throw UsageError("rewrite r2 needs --edge and --edge2");
        }
        result = r2_insert(d, args.edge, args.edge2);
    } else if (args.move == "insert-loop") {
        result = insert_loop(d, args.dotted);
    } else {
        if (!cmd->count("--crossing")) throw UsageError("rewrite untwist needs --crossing");
        result = remove_dotted_reducible(d, args.crossing);
    }
    if (args.format == "object") {
        std::cout << serialize_diagram_object(result.diagram);
    } else {
        std::cout << "# factor: " << result.expected_bracket_factor.to_text() << "\n"
                  << "# crossing_delta: " << result.crossing_delta << "\n"
                  << serialize_diagram(result.diagram);
    }
    return 0;
}

}  // namespace

int main(int argc, char** argv) {
    CLI::App app{std::string("annular ") + annular::kVersion +
                 " - exact skein computations for link diagrams in the solid torus"};
    app.require_subcommand(1);

    PolynomialArgs bracket_args;
    CLI::App* cmd_bracket = app.add_subcommand("bracket", "generalized Kauffman bracket");
    add_polynomial_options(cmd_bracket, bracket_args);

    PolynomialArgs jones_args;
    bool q_display = false;
    CLI::App* cmd_jones = app.add_subcommand("jones", "writhe-normalized bracket");
    add_polynomial_options(cmd_jones, jones_args);
    cmd_jones->add_flag("--q", q_display, "display with q-exponents (-a/4, exact rationals)");

    std::string classify_input = "-";
    std::string classify_format = "text";
    CLI::App* cmd_classify = app.add_subcommand("classify", "nugatory-crossing classification");
    cmd_classify->add_option("input", classify_input, "diagram document, or - for stdin");
    cmd_classify->add_option("--format", classify_format, "document and result format")
        ->check(CLI::IsMember({"text", "object"}));

    PolynomialArgs verify_args;
    CLI::App* cmd_verify = app.add_subcommand("verify", "span and state-count checks");
    add_polynomial_options(cmd_verify, verify_args);

    BatchArgs batch_args;
    CLI::App* cmd_batch = app.add_subcommand("batch", "verify many documents, emit a report");
    cmd_batch->add_option("inputs", batch_args.inputs, "diagram documents");
    cmd_batch->add_option("--format", batch_args.format, "input documents and stdout report")
        ->check(CLI::IsMember({"text", "object"}));
    cmd_batch->add_option("--csv", batch_args.csv_path, "also write the CSV report here");
    cmd_batch->add_option("--json", batch_args.json_path, "also write the JSON report here");
    cmd_batch->add_option("--max-states", batch_args.max_states, "state-count cap per diagram");
    cmd_batch->add_option("--threads", batch_args.threads, "parallel batch items")
        ->check(CLI::PositiveNumber);
    cmd_batch->add_flag("--big-coefficients,--big", batch_args.big,
                        "arbitrary-precision coefficients");
    cmd_batch->add_option("--seed", batch_args.seed, "seed echoed into the report header");

    GenerateArgs gen_args;
    CLI::App* cmd_generate = app.add_subcommand("generate", "random valid diagrams");
    cmd_generate->add_option("--count", gen_args.count, "diagrams to emit")
        ->check(CLI::PositiveNumber);
    cmd_generate->add_option("--min-crossings", gen_args.cfg.min_crossings, "crossing range low")
        ->check(CLI::PositiveNumber);
    cmd_generate->add_option("--max-crossings", gen_args.cfg.max_crossings, "crossing range high")
        ->check(CLI::PositiveNumber);
    cmd_generate->add_flag("--alternating,!--no-alternating", gen_args.cfg.alternating,
                           "checkerboard strands (default) vs unconstrained");
    cmd_generate
        ->add_option("--policy", gen_args.policy, "puncture placement")
        ->check(CLI::IsMember({"outer", "uniform-random-face", "adversarial-inner"}));
    cmd_generate->add_option("--seed", gen_args.cfg.seed, "stream seed");
    cmd_generate->add_option("--format", gen_args.format, "document format")
        ->check(CLI::IsMember({"text", "object"}));
    cmd_generate->add_option("--out-dir", gen_args.out_dir,
                             "write one file per diagram and print the paths");

    RewriteArgs rw_args;
    CLI::App* cmd_rewrite = app.add_subcommand("rewrite", "apply a diagram move");
    cmd_rewrite->add_option("input", rw_args.input, "diagram document, or - for stdin");
    cmd_rewrite->add_option("--format", rw_args.format, "document format")
        ->check(CLI::IsMember({"text", "object"}));
    cmd_rewrite
        ->add_option("--move", rw_args.move, "r1 | r1-loop | r2 | insert-loop | untwist")
        ->required()
        ->check(CLI::IsMember({"r1", "r1-loop", "r2", "insert-loop", "untwist"}));
    cmd_rewrite->add_option("--edge", rw_args.edge, "edge to kink (r1) or push over (r2)");
    cmd_rewrite->add_option("--edge2", rw_args.edge2, "edge pushed under (r2)");
    cmd_rewrite->add_option("--loop-index", rw_args.loop_index, "loop to kink (r1-loop)");
    cmd_rewrite->add_option("--crossing", rw_args.crossing, "crossing to untwist");
    cmd_rewrite->add_option("--side", rw_args.side, "curl side for kinks")
        ->check(CLI::IsMember({"left", "right"}));
    cmd_rewrite->add_option("--sign", rw_args.sign, "kink sign")
        ->check(CLI::IsMember({-1, 1}));
    cmd_rewrite->add_flag("--dotted", rw_args.dotted, "insert a dotted loop");

    try {
        app.parse(argc, argv);
    } catch (const CLI::CallForHelp& e) {
        return app.exit(e);
    } catch (const CLI::CallForAllHelp& e) {
        return app.exit(e);
    } catch (const CLI::CallForVersion& e) {
        return app.exit(e);
    } catch (const CLI::ParseError& e) {
        app.exit(e);
        return 2;
    }

    try {
        if (cmd_bracket->parsed()) return run_polynomial(bracket_args, false, false);
        if (cmd_jones->parsed()) return run_polynomial(jones_args, true, q_display);
        if (cmd_classify->parsed()) return run_classify(classify_input, classify_format);
        if (cmd_verify->parsed()) return run_verify(verify_args);
        if (cmd_batch->parsed()) return run_batch(batch_args);
        if (cmd_generate->parsed()) return run_generate(gen_args);
        if (cmd_rewrite->parsed()) return run_rewrite(rw_args, cmd_rewrite);
    } catch (const UsageError& e) {
        std::cerr << "annular: " << e.what() << "\n";
        return 2;
    } catch (const std::exception& e) {
        std::cerr << "annular: " << e.what() << "\n";
        return 1;
    }
    return 0;
}
