#pragma once

// Reference implementations used to cross-check the library, written on
// purpose with different techniques: union-find instead of strand
// tracing, a bare exponent map instead of SkeinPolynomial, Pascal's
// triangle instead of incremental product expansion.

#include <bit>
#include <cstdint>
#include <fstream>
#include <map>
#include <numeric>
#include <sstream>
#include <stdexcept>
#include <string>
#include <vector>

#include "annular/diagram.hpp"
#include "annular/format.hpp"
#include "annular/polynomial.hpp"

namespace oracle {

struct DisjointSets {
    std::vector<int> parent;
    explicit DisjointSets(int n) : parent(n) { std::iota(parent.begin(), parent.end(), 0); }
    int find(int x) {
        while (parent[x] != x) x = parent[x] = parent[parent[x]];
        return x;
    }
    void unite(int a, int b) { parent[find(a)] = find(b); }
};

// Circle count of one smoothing state (bit c set = B-smoothing at
// crossing c), by gluing dart endpoints with union-find.
inline int state_circles(const annular::AnnularDiagram& d, std::uint64_t bits) {
    const int n = d.crossing_count();
    DisjointSets ds(4 * n);
    std::map<annular::EdgeLabel, std::vector<int>> ends;
    for (int c = 0; c < n; ++c) {
        for (int s = 0; s < 4; ++s) ends[d.crossings[c].slots[s]].push_back(annular::dart_of(c, s));
    }
    for (const auto& [label, darts] : ends) {
        if (darts.size() == 2) ds.unite(darts[0], darts[1]);
    }
    for (int c = 0; c < n; ++c) {
        if (bits >> c & 1) {
            ds.unite(annular::dart_of(c, 0), annular::dart_of(c, 3));
            ds.unite(annular::dart_of(c, 1), annular::dart_of(c, 2));
        } else {
            ds.unite(annular::dart_of(c, 0), annular::dart_of(c, 1));
            ds.unite(annular::dart_of(c, 2), annular::dart_of(c, 3));
        }
    }
    std::vector<char> seen(4 * n, 0);
    int circles = 0;
    for (int x = 0; x < 4 * n; ++x) {
        const int root = ds.find(x);
        if (!seen[root]) {
            seen[root] = 1;
            ++circles;
        }
    }
    return circles + d.loop_count();
}

// Laurent polynomial in A alone, as exponent -> coefficient.
using LaurentA = std::map<std::int64_t, std::int64_t>;

inline void add_term(LaurentA& p, std::int64_t exp, std::int64_t coef) {
    if ((p[exp] += coef) == 0) p.erase(exp);
}

// Kauffman bracket of the underlying classical diagram: the puncture is
// ignored, every loop counts as a plain circle. Only meaningful to compare
// against the annular bracket when the puncture sits beside the outer
// region and no loop is dotted.
inline LaurentA classical_bracket(const annular::AnnularDiagram& d) {
    const int n = d.crossing_count();
    LaurentA total;
    for (std::uint64_t bits = 0; bits < (std::uint64_t{1} << n); ++bits) {
        const int b = std::popcount(bits);
        const int a = n - b;
        LaurentA term{{a - b, 1}};
        const int circles = state_circles(d, bits);
        for (int k = 1; k < circles; ++k) {
            LaurentA next;
            for (const auto& [exp, coef] : term) {
                add_term(next, exp + 2, -coef);
                add_term(next, exp - 2, -coef);
            }
            term = std::move(next);
        }
        for (const auto& [exp, coef] : term) add_term(total, exp, coef);
    }
    return total;
}

// Row k of Pascal's triangle, exact.
inline std::vector<annular::BigInt> pascal_row(int k) {
    std::vector<annular::BigInt> row{annular::BigInt(1)};
    for (int i = 0; i < k; ++i) {
        std::vector<annular::BigInt> next(row.size() + 1, annular::BigInt(0));
        for (std::size_t j = 0; j < row.size(); ++j) {
            next[j] += row[j];
            next[j + 1] += row[j];
        }
        row = std::move(next);
    }
    return row;
}

}  // namespace oracle

namespace testing_support {

inline std::string read_file(const std::string& path) {
    std::ifstream in(path);
    if (!in) throw std::runtime_error("cannot open " + path);
    std::ostringstream buf;
    buf << in.rdbuf();
    return buf.str();
}

inline std::string corpus_path(const std::string& name) {
    return std::string(ANNULAR_CORPUS_DIR) + "/" + name;
}

inline annular::AnnularDiagram load_corpus(const std::string& name) {
    return annular::parse_diagram(read_file(corpus_path(name + ".txt")));
}

// expected/<name>.expected files are "key: value" lines.
inline std::map<std::string, std::string> load_expected(const std::string& name) {
    const std::string text = read_file(corpus_path("expected/" + name + ".expected"));
    std::map<std::string, std::string> out;
    std::istringstream lines(text);
    std::string line;
    while (std::getline(lines, line)) {
        const auto sep = line.find(": ");
        if (sep != std::string::npos) out[line.substr(0, sep)] = line.substr(sep + 2);
    }
    return out;
}

inline const std::vector<std::string>& corpus_names() {
    static const std::vector<std::string> names = {
        "empty",          "loop-plain",      "loop-dotted",
        "loops-two-plain", "loops-plain-dotted", "loops-two-dotted",
        "kink-pos-outer", "kink-pos-lobe1",  "kink-pos-lobe2",
        "kink-pos-irreducible", "kink-neg-irreducible",
        "trefoil-f0",     "trefoil-f1",      "trefoil-f2",
        "trefoil-f3",     "trefoil-f4",      "sum-twist",
        "double-kink",    "figure8-outer",   "figure8-inner",
    };
    return names;
}

}  // namespace testing_support
