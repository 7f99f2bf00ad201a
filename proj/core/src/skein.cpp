#include "annular/skein.hpp"

#include <algorithm>
#include <bit>
#include <exception>
#include <thread>

namespace annular {

namespace {

// Dart joined to `dart` by the smoothing arc chosen at its crossing.
int smoothing_partner(int dart, bool b_smoothing) {
    int slot = dart % 4;
    int partner = b_smoothing ? 3 - slot            // B: 0-3, 1-2
                              : slot ^ 1;           // A: 0-1, 2-3
    return dart - slot + partner;
}

SkeinPolynomial axiom_value(int circles, int dotted, bool big) {
    if (circles == 0) return SkeinPolynomial::one();  // empty diagram
    SkeinPolynomial p = SkeinPolynomial::circle_power(circles - 1, big);
    return p.times_monomial(Coeff(1), 0, dotted);
}

}  // namespace

StateResolution resolve_state(const AnnularDiagram& d, const KauffmanState& s, const CutPath& cp) {
    if (s.size != d.crossing_count())
        throw ValidationError("state has " + std::to_string(s.size) + " choices for " +
                              std::to_string(d.crossing_count()) + " crossings");
    StateResolution r;
    const int n = d.crossing_count();
    if (n < 64 && (s.choices >> n) != 0)
        throw ValidationError("state has choice bits beyond crossing " + std::to_string(n - 1));
    r.b = std::popcount(s.choices);
    r.a = n - r.b;

    EdgeTable edges(d);
    std::vector<bool> visited(4 * n, false);
    for (int start = 0; start < 4 * n; ++start) {
        if (visited[start]) continue;
        StateCircle circle;
        int dart = start;
        do {
            visited[dart] = true;
            int arc_end = smoothing_partner(dart, (s.choices >> (dart / 4)) & 1);
            visited[arc_end] = true;
            Corner c = corner_of(arc_end);
            EdgeLabel label = d.crossings[c.crossing].slots[c.slot];
            circle.edges.push_back(label);
            circle.parity ^= cp.edge_parities.at(label);
            dart = edges.mate(arc_end);
        } while (dart != start);
        r.circles.push_back(std::move(circle));
    }
    for (std::size_t k = 0; k < d.loops.size(); ++k)
        r.circles.push_back(StateCircle{{}, cp.loop_parities[k]});

    r.num_circles = static_cast<int>(r.circles.size());
    for (const auto& circle : r.circles) r.num_dotted += circle.parity;
    return r;
}

SkeinPolynomial state_contribution(const StateResolution& r, bool big_coefficients) {
    if (r.num_circles == 0) throw ValidationError("state resolution has no circles");
    SkeinPolynomial p = SkeinPolynomial::circle_power(r.num_circles - 1, big_coefficients);
    return p.times_monomial(Coeff(1), r.a - r.b, r.num_dotted);
}

SkeinPolynomial bracket(const AnnularDiagram& d, const BracketOptions& opt) {
    const int n = d.crossing_count();
    if (n >= 63 || (std::uint64_t{1} << n) > opt.max_states)
        throw StateLimitExceeded("instance too large: 2^" + std::to_string(n) +
                                 " states exceed the cap of " + std::to_string(opt.max_states));
    if (n == 0 && d.loop_count() == 0) return SkeinPolynomial::one();

    Embedding emb = compute_embedding(d);
    CutPath cp = cut_path(d, emb);
    const std::uint64_t total = std::uint64_t{1} << n;

    auto sum_range = [&](std::uint64_t lo, std::uint64_t hi) {
        SkeinPolynomial acc;
        for (std::uint64_t mask = lo; mask < hi; ++mask) {
            StateResolution r = resolve_state(d, KauffmanState{mask, n}, cp);
            acc += state_contribution(r, opt.big_coefficients);
        }
        return acc;
    };

    int workers = std::max(1, opt.threads);
    if (static_cast<std::uint64_t>(workers) > total) workers = static_cast<int>(total);
    if (workers == 1) return sum_range(0, total);

    std::vector<SkeinPolynomial> parts(workers);
    std::vector<std::exception_ptr> errors(workers);
    std::vector<std::thread> pool;
    const std::uint64_t chunk = total / workers;
    for (int w = 0; w < workers; ++w) {
        std::uint64_t lo = chunk * w;
        std::uint64_t hi = w + 1 == workers ? total : chunk * (w + 1);
        pool.emplace_back([&, w, lo, hi] {
            try {
                parts[w] = sum_range(lo, hi);
            } catch (...) {
                errors[w] = std::current_exception();
            }
        });
    }
    for (auto& t : pool) t.join();
    for (auto& err : errors)
        if (err) std::rethrow_exception(err);
    SkeinPolynomial acc;
    for (auto& part : parts) acc += part;
    return acc;
}

SkeinPolynomial jones(const AnnularDiagram& d, const BracketOptions& opt) {
    int w = writhe(d);
    SkeinPolynomial p = bracket(d, opt);
    return p.times_monomial(Coeff(w % 2 == 0 ? 1 : -1), -3 * static_cast<int64_t>(w), 0);
}

DegreeStats degree_stats(const SkeinPolynomial& p) {
    auto stats = p.a_degree_stats();
    if (!stats) throw ValidationError("degree stats of the zero polynomial");
    return *stats;
}

std::pair<SkeinPolynomial, SkeinPolynomial> extreme_state_contributions(const AnnularDiagram& d) {
    const int n = d.crossing_count();
    if (n == 0 && d.loop_count() == 0)
        return {SkeinPolynomial::one(), SkeinPolynomial::one()};
    CutPath cp = cut_path(d);
    std::uint64_t all = n == 0 ? 0 : (std::uint64_t{1} << n) - 1;
    StateResolution all_a = resolve_state(d, KauffmanState{0, n}, cp);
    StateResolution all_b = resolve_state(d, KauffmanState{all, n}, cp);
    return {state_contribution(all_a), state_contribution(all_b)};
}

namespace {

// Working form for the recursive evaluation: remaining crossing records
// plus the winding parity accumulated on each live chain of merged edges.
struct SkeinFrame {
    std::vector<Crossing> crossings;
    std::map<EdgeLabel, int> chain_parity;
};

// Connect two free ends. Equal labels close that chain into a circle;
// unequal labels merge the chains under the smaller label, renaming the
// larger everywhere it still occurs (including `pending`, the second arc
// of the same smoothing).
void join_ends(SkeinFrame& f, EdgeLabel e1, EdgeLabel e2, std::pair<EdgeLabel, EdgeLabel>& pending,
               int& closed, int& closed_dotted) {
    if (e1 == e2) {
        ++closed;
        closed_dotted += f.chain_parity.at(e1);
        f.chain_parity.erase(e1);
        return;
    }
    EdgeLabel keep = std::min(e1, e2), drop = std::max(e1, e2);
    f.chain_parity.at(keep) ^= f.chain_parity.at(drop);
    f.chain_parity.erase(drop);
    for (auto& x : f.crossings)
        for (auto& label : x.slots)
            if (label == drop) label = keep;
    if (pending.first == drop) pending.first = keep;
    if (pending.second == drop) pending.second = keep;
}

SkeinPolynomial eval_frame(const SkeinFrame& frame, int closed, int closed_dotted,
                           int loop_circles, int loop_dotted, bool big) {
    if (frame.crossings.empty())
        return axiom_value(closed + loop_circles, closed_dotted + loop_dotted, big);

    SkeinPolynomial total;
    for (int b_smoothing = 0; b_smoothing < 2; ++b_smoothing) {
        SkeinFrame next = frame;
        Crossing x = next.crossings.back();
        next.crossings.pop_back();
        int c = closed, cd = closed_dotted;
        std::pair<EdgeLabel, EdgeLabel> pending =
            b_smoothing ? std::pair{x.slots[1], x.slots[2]} : std::pair{x.slots[2], x.slots[3]};
        std::pair<EdgeLabel, EdgeLabel> first =
            b_smoothing ? std::pair{x.slots[0], x.slots[3]} : std::pair{x.slots[0], x.slots[1]};
        std::pair<EdgeLabel, EdgeLabel> none{0, 0};
        join_ends(next, first.first, first.second, pending, c, cd);
        join_ends(next, pending.first, pending.second, none, c, cd);
        SkeinPolynomial branch = eval_frame(next, c, cd, loop_circles, loop_dotted, big);
        total += branch.times_monomial(Coeff(1), b_smoothing ? -1 : 1, 0);
    }
    return total;
}

}  // namespace

SkeinPolynomial evaluate_recursive(const AnnularDiagram& d, const BracketOptions& opt) {
    const int n = d.crossing_count();
    if (n >= 63 || (std::uint64_t{1} << n) > opt.max_states)
        throw StateLimitExceeded("instance too large: 2^" + std::to_string(n) +
                                 " states exceed the cap of " + std::to_string(opt.max_states));
    CutPath cp = cut_path(d);
    SkeinFrame frame{d.crossings, cp.edge_parities};
    int loop_dotted = 0;
    for (int p : cp.loop_parities) loop_dotted += p;
    return eval_frame(frame, 0, 0, d.loop_count(), loop_dotted, opt.big_coefficients);
}

}  // namespace annular
