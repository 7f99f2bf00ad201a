#include "annular/format.hpp"

#include <algorithm>
#include <cctype>
#include <map>
#include <sstream>
#include <vector>

#include <json.hpp>

namespace annular {

namespace {

std::string strip(const std::string& s) {
    auto b = s.find_first_not_of(" \t\r");
    if (b == std::string::npos) return {};
    auto e = s.find_last_not_of(" \t\r");
    return s.substr(b, e - b + 1);
}

std::vector<std::string> split_ws(const std::string& s) {
    std::istringstream in(s);
    std::vector<std::string> out;
    for (std::string tok; in >> tok;) out.push_back(tok);
    return out;
}

[[noreturn]] void fail(int line_no, const std::string& msg) {
    throw ParseError("line " + std::to_string(line_no) + ": " + msg);
}

int parse_int(const std::string& tok, int line_no, const std::string& what) {
    std::size_t pos = 0;
    int value = 0;
    try {
        value = std::stoi(tok, &pos);
    } catch (const std::exception&) {
        fail(line_no, "bad " + what + " '" + tok + "'");
    }
    if (pos != tok.size()) fail(line_no, "bad " + what + " '" + tok + "'");
    return value;
}

Corner parse_corner_token(const std::string& tok, int line_no) {
    auto dot = tok.find('.');
    if (dot == std::string::npos || dot == 0 || dot + 1 == tok.size())
        fail(line_no, "bad corner token '" + tok + "', expected i.s or unbounded");
    Corner c;
    c.crossing = parse_int(tok.substr(0, dot), line_no, "corner crossing index");
    c.slot = parse_int(tok.substr(dot + 1), line_no, "corner slot");
    if (c.slot < 0 || c.slot > 3)
        fail(line_no, "corner slot out of range in '" + tok + "', expected 0..3");
    return c;
}

std::string corner_token(const std::optional<Corner>& c) {
    if (!c) return "unbounded";
    return std::to_string(c->crossing) + "." + std::to_string(c->slot);
}

void check_multiplicity(const std::vector<Crossing>& crossings) {
    std::map<EdgeLabel, int> uses;
    for (const auto& x : crossings)
        for (EdgeLabel e : x.slots) ++uses[e];
    for (const auto& [label, count] : uses)
        if (count != 2)
            throw ParseError("edge multiplicity: label " + std::to_string(label) + " used " +
                             std::to_string(count) + " times, expected 2");
}

template <typename T>
std::vector<T> collect_indexed(std::map<int, T>& by_index, const char* kind) {
    std::vector<T> out;
    int next = 0;
    for (auto& [index, value] : by_index) {
        if (index != next)
            throw ParseError(std::string(kind) + " indices must cover 0..count-1; missing " +
                             std::to_string(next));
        out.push_back(std::move(value));
        ++next;
    }
    return out;
}

}  // namespace

AnnularDiagram parse_diagram(const std::string& text) {
    std::map<int, Crossing> crossings;
    std::map<int, Loop> loops;
    AnnularDiagram d;
    bool saw_puncture = false, saw_outer = false;

    std::istringstream in(text);
    std::string raw;
    int line_no = 0;
    while (std::getline(in, raw)) {
        ++line_no;
        auto hash = raw.find('#');
        if (hash != std::string::npos) raw.erase(hash);
        std::string line = strip(raw);
        if (line.empty()) continue;

        auto colon = line.find(':');
        if (colon == std::string::npos) fail(line_no, "expected 'keyword:' in '" + line + "'");
        std::string head = strip(line.substr(0, colon));
        std::string rest = strip(line.substr(colon + 1));
        auto head_parts = split_ws(head);

        if (head_parts.size() == 2 && head_parts[0] == "X") {
            int index = parse_int(head_parts[1], line_no, "crossing index");
            if (index < 0) fail(line_no, "crossing index must be nonnegative");
            auto labels = split_ws(rest);
            if (labels.size() != 4)
                fail(line_no, "crossing " + std::to_string(index) + " needs 4 edge labels, got " +
                                  std::to_string(labels.size()));
            Crossing x;
            for (int s = 0; s < 4; ++s) x.slots[s] = parse_int(labels[s], line_no, "edge label");
            if (!crossings.emplace(index, x).second)
                fail(line_no, "duplicate crossing index " + std::to_string(index));
        } else if (head_parts.size() == 2 && head_parts[0] == "O") {
            int index = parse_int(head_parts[1], line_no, "loop index");
            if (index < 0) fail(line_no, "loop index must be nonnegative");
            Loop loop;
            if (rest == "dotted")
                loop.dotted = true;
            else if (rest == "plain")
                loop.dotted = false;
            else
                fail(line_no, "loop kind must be dotted or plain, got '" + rest + "'");
            if (!loops.emplace(index, loop).second)
                fail(line_no, "duplicate loop index " + std::to_string(index));
        } else if (head == "puncture" || head == "outer") {
            bool& seen = head == "puncture" ? saw_puncture : saw_outer;
            if (seen) fail(line_no, "duplicate " + head + " line");
            seen = true;
            std::optional<Corner> corner;
            if (rest != "unbounded") corner = parse_corner_token(rest, line_no);
            (head == "puncture" ? d.puncture_corner : d.outer_corner) = corner;
        } else if (head == "orient") {
            auto tokens = split_ws(rest);
            if (tokens.empty()) fail(line_no, "orient line needs at least one k=reversed flag");
            for (const auto& tok : tokens) {
                auto eq = tok.find('=');
                if (eq == std::string::npos || tok.substr(eq + 1) != "reversed")
                    fail(line_no, "bad orientation flag '" + tok + "', expected k=reversed");
                d.orientation_flags.push_back(
                    parse_int(tok.substr(0, eq), line_no, "component index"));
            }
        } else {
            fail(line_no, "unrecognized line '" + line + "'");
        }
    }

    d.crossings = collect_indexed(crossings, "crossing");
    d.loops = collect_indexed(loops, "loop");
    check_multiplicity(d.crossings);
    for (const auto* marker : {&d.puncture_corner, &d.outer_corner})
        if (*marker && ((*marker)->crossing < 0 || (*marker)->crossing >= d.crossing_count()))
            throw ParseError("corner token " + corner_token(*marker) +
                             " references a missing crossing");
    return d;
}

std::string serialize_diagram(const AnnularDiagram& d) {
    std::ostringstream out;
    for (int i = 0; i < d.crossing_count(); ++i) {
        const auto& s = d.crossings[i].slots;
        out << "X " << i << ": " << s[0] << " " << s[1] << " " << s[2] << " " << s[3] << "\n";
    }
    for (int k = 0; k < d.loop_count(); ++k)
        out << "O " << k << ": " << (d.loops[k].dotted ? "dotted" : "plain") << "\n";
    out << "puncture: " << corner_token(d.puncture_corner) << "\n";
    out << "outer: " << corner_token(d.outer_corner) << "\n";
    if (!d.orientation_flags.empty()) {
        auto flags = d.orientation_flags;
        std::sort(flags.begin(), flags.end());
        out << "orient:";
        for (int f : flags) out << " " << f << "=reversed";
        out << "\n";
    }
    return out.str();
}

AnnularDiagram parse_diagram_object(const std::string& text) {
    nlohmann::json doc;
    try {
        doc = nlohmann::json::parse(text);
    } catch (const nlohmann::json::exception& err) {
        throw ParseError(std::string("bad diagram object: ") + err.what());
    }
    auto demand = [&doc](const char* key) -> const nlohmann::json& {
        if (!doc.contains(key)) throw ParseError(std::string("missing field '") + key + "'");
        return doc.at(key);
    };
    auto corner_from = [](const nlohmann::json& v, const char* key) -> std::optional<Corner> {
        if (!v.is_string())
            throw ParseError(std::string("field '") + key + "' must be a corner-token string");
        std::string tok = v.get<std::string>();
        if (tok == "unbounded") return std::nullopt;
        try {
            return parse_corner_token(tok, 1);
        } catch (const ParseError&) {
            throw ParseError(std::string("field '") + key + "': bad corner token '" + tok + "'");
        }
    };

    AnnularDiagram d;
    try {
        for (const auto& rec : demand("crossings")) {
            if (!rec.is_array() || rec.size() != 4)
                throw ParseError("each crossing must be an array of 4 edge labels");
            Crossing x;
            for (int s = 0; s < 4; ++s) x.slots[s] = rec.at(s).get<int>();
            d.crossings.push_back(x);
        }
        for (const auto& rec : demand("loops")) {
            std::string kind = rec.get<std::string>();
            if (kind != "dotted" && kind != "plain")
                throw ParseError("loop kind must be dotted or plain, got '" + kind + "'");
            d.loops.push_back(Loop{kind == "dotted"});
        }
        d.puncture_corner = corner_from(demand("puncture_corner"), "puncture_corner");
        d.outer_corner = corner_from(demand("outer_corner"), "outer_corner");
        for (const auto& rec : demand("orientation_flags"))
            d.orientation_flags.push_back(rec.get<int>());
    } catch (const nlohmann::json::exception& err) {
        throw ParseError(std::string("bad diagram object: ") + err.what());
    }
    check_multiplicity(d.crossings);
    for (const auto* marker : {&d.puncture_corner, &d.outer_corner})
        if (*marker && ((*marker)->crossing < 0 || (*marker)->crossing >= d.crossing_count()))
            throw ParseError("corner token " + corner_token(*marker) +
                             " references a missing crossing");
    return d;
}

std::string serialize_diagram_object(const AnnularDiagram& d) {
    nlohmann::json doc;
    doc["crossings"] = nlohmann::json::array();
    for (const auto& x : d.crossings)
        doc["crossings"].push_back({x.slots[0], x.slots[1], x.slots[2], x.slots[3]});
    doc["loops"] = nlohmann::json::array();
    for (const auto& loop : d.loops) doc["loops"].push_back(loop.dotted ? "dotted" : "plain");
    doc["puncture_corner"] = corner_token(d.puncture_corner);
    doc["outer_corner"] = corner_token(d.outer_corner);
    auto flags = d.orientation_flags;
    std::sort(flags.begin(), flags.end());
    doc["orientation_flags"] = flags;
    return doc.dump() + "\n";
}

}  // namespace annular
