#pragma once

#include <algorithm>
#include <cstdint>
#include <map>
#include <optional>
#include <queue>
#include <random>
#include <set>
#include <stdexcept>
#include <string>
#include <vector>

#include "gtl/group_ring.hpp"
#include "gtl/linalg.hpp"
#include "gtl/series.hpp"

namespace gtl {

struct Visit {
    int crossing = 0;
    int visit = 1;

    friend bool operator==(const Visit&, const Visit&) = default;
};

// Signed double-occurrence sequence of an immersed loop. `sequence` is read
// from a reference point on arc 0; visit 1 of every crossing precedes visit 2
// and `signs` are given for that reading. Arc j ends at position j, so arc 0
// runs from the last position back to position 0. `marked_arc` carries the
// basepoint.
struct GaussCode {
    int crossings = 0;
    std::vector<Visit> sequence;
    std::map<int, int> signs;
    int marked_arc = 0;

    int arc_count() const { return crossings == 0 ? 1 : 2 * crossings; }

    friend bool operator==(const GaussCode&, const GaussCode&) = default;
};

class GaussCodeError : public std::invalid_argument {
public:
    using std::invalid_argument::invalid_argument;
};

inline void validate(const GaussCode& code) {
    if (code.crossings < 0) throw GaussCodeError("negative crossing count");
    if (code.sequence.size() != static_cast<std::size_t>(2 * code.crossings))
        throw GaussCodeError("sequence length " + std::to_string(code.sequence.size()) + " does not equal 2 x " +
                             std::to_string(code.crossings));
    std::map<int, std::vector<int>> seen;
    for (const Visit& v : code.sequence) {
        if (v.visit != 1 && v.visit != 2)
            throw GaussCodeError("crossing " + std::to_string(v.crossing) + ": visit must be 1 or 2");
        auto& list = seen[v.crossing];
        if (std::find(list.begin(), list.end(), v.visit) != list.end())
            throw GaussCodeError("crossing " + std::to_string(v.crossing) + ": duplicate visit " +
                                 std::to_string(v.visit));
        if (v.visit == 2 && list.empty())
            throw GaussCodeError("crossing " + std::to_string(v.crossing) + ": visit 2 precedes visit 1");
        list.push_back(v.visit);
    }
    if (seen.size() != static_cast<std::size_t>(code.crossings))
        throw GaussCodeError("expected " + std::to_string(code.crossings) + " distinct crossings, found " +
                             std::to_string(seen.size()));
    for (const auto& [id, list] : seen) {
        if (list.size() != 2) throw GaussCodeError("crossing " + std::to_string(id) + " is not visited twice");
        auto it = code.signs.find(id);
        if (it == code.signs.end()) throw GaussCodeError("missing sign for crossing " + std::to_string(id));
        if (it->second != 1 && it->second != -1)
            throw GaussCodeError("sign of crossing " + std::to_string(id) + " must be 1 or -1");
    }
    if (code.signs.size() != seen.size()) throw GaussCodeError("signs given for unknown crossings");
    if (code.marked_arc < 0 || code.marked_arc >= code.arc_count())
        throw GaussCodeError("marked_arc " + std::to_string(code.marked_arc) + " out of range");
}

// Positions of one crossing in the reading that starts on the marked arc.
struct CrossingReading {
    int crossing = 0;
    int first = 0;   // position of t_1
    int second = 0;  // position of t_2
    int sign = 1;    // epsilon in this reading
};

inline std::vector<CrossingReading> read_from_marked_arc(const GaussCode& code) {
    validate(code);
    const int n = static_cast<int>(code.sequence.size());
    std::map<int, CrossingReading> by_id;
    for (int pos = 0; pos < n; ++pos) {
        const Visit& v = code.sequence[pos];
        auto& r = by_id[v.crossing];
        r.crossing = v.crossing;
        (v.visit == 1 ? r.first : r.second) = pos;
    }
    std::vector<CrossingReading> out;
    for (auto& [id, r] : by_id) {
        r.sign = code.signs.at(id);
        // The reading from arc a visits a, a+1, ...; visit 1 loses its lead
        // exactly when first < a <= second.
        if (r.first < code.marked_arc && code.marked_arc <= r.second) {
            std::swap(r.first, r.second);
            r.sign = -r.sign;
        }
        out.push_back(r);
    }
    return out;
}

inline std::map<int, int> effective_signs(const GaussCode& code) {
    std::map<int, int> out;
    for (const auto& r : read_from_marked_arc(code)) out[r.crossing] = r.sign;
    return out;
}

inline long long epsilon_sum(const GaussCode& code) {
    long long s = 0;
    for (const auto& r : read_from_marked_arc(code)) s += r.sign;
    return s;
}

// The same curve read from a basepoint on `new_arc`: rotated so that arc is
// arc 0, visits relabelled, signs taken in the new reading.
inline GaussCode shift_basepoint(const GaussCode& code, int new_arc) {
    validate(code);
    if (new_arc < 0 || new_arc >= code.arc_count())
        throw std::out_of_range("shift_basepoint: arc " + std::to_string(new_arc) + " out of range");
    GaussCode moved = code;
    moved.marked_arc = new_arc;
    GaussCode out;
    out.crossings = code.crossings;
    out.signs = effective_signs(moved);
    const int n = static_cast<int>(code.sequence.size());
    std::set<int> met;
    for (int i = 0; i < n; ++i) {
        const int id = code.sequence[(new_arc + i) % n].crossing;
        out.sequence.push_back({id, met.insert(id).second ? 1 : 2});
    }
    return out;
}

struct Edge {
    int from = 0;
    int to = 0;
};

// 4-valent graph of the curve: one vertex per crossing (a single vertex for a
// simple loop), one edge per arc. The cycle basis is given by the edges
// outside a breadth-first spanning tree.
struct CurveGraph {
    std::vector<int> vertex_ids;
    std::vector<Edge> edges;
    std::vector<int> tree_edges;
    std::vector<int> cycle_edges;

    int betti() const { return static_cast<int>(cycle_edges.size()); }
};

inline CurveGraph build_graph(const GaussCode& code) {
    validate(code);
    CurveGraph g;
    std::map<int, int> index;
    for (const auto& [id, s] : code.signs) {
        index[id] = static_cast<int>(g.vertex_ids.size());
        g.vertex_ids.push_back(id);
    }
    if (g.vertex_ids.empty()) g.vertex_ids.push_back(0);
    const int n = static_cast<int>(code.sequence.size());
    if (n == 0) {
        g.edges.push_back({0, 0});
    } else {
        for (int j = 0; j < n; ++j)
            g.edges.push_back({index.at(code.sequence[(j + n - 1) % n].crossing), index.at(code.sequence[j].crossing)});
    }
    const int v = static_cast<int>(g.vertex_ids.size());
    std::vector<std::vector<int>> incident(static_cast<std::size_t>(v));
    for (int e = 0; e < static_cast<int>(g.edges.size()); ++e) {
        incident[g.edges[e].from].push_back(e);
        if (g.edges[e].to != g.edges[e].from) incident[g.edges[e].to].push_back(e);
    }
    std::vector<char> visited(static_cast<std::size_t>(v), 0);
    std::vector<char> in_tree(g.edges.size(), 0);
    std::queue<int> frontier;
    visited[0] = 1;
    frontier.push(0);
    while (!frontier.empty()) {
        const int u = frontier.front();
        frontier.pop();
        for (int e : incident[u]) {
            const int w = g.edges[e].from == u ? g.edges[e].to : g.edges[e].from;
            if (visited[w]) continue;
            visited[w] = 1;
            in_tree[e] = 1;
            frontier.push(w);
        }
    }
    for (int e = 0; e < static_cast<int>(g.edges.size()); ++e) (in_tree[e] ? g.tree_edges : g.cycle_edges).push_back(e);
    return g;
}

using AbelianClass = std::vector<long long>;

// Coordinates of x_p, y_p (per crossing, ascending id) and c in the cycle
// basis of build_graph, for the reading from the marked arc.
struct HomologyClasses {
    std::vector<int> crossing_ids;
    std::vector<AbelianClass> x;
    std::vector<AbelianClass> y;
    AbelianClass c;
};

inline HomologyClasses homology_classes(const GaussCode& code) {
    const CurveGraph g = build_graph(code);
    const int arcs = code.arc_count();
    std::vector<int> coordinate(static_cast<std::size_t>(arcs), -1);
    for (int i = 0; i < g.betti(); ++i) coordinate[g.cycle_edges[i]] = i;
    auto coords_of = [&](const std::vector<int>& arc_list) {
        AbelianClass v(static_cast<std::size_t>(g.betti()), 0);
        for (int a : arc_list)
            if (coordinate[a] >= 0) ++v[coordinate[a]];
        return v;
    };
    HomologyClasses h;
    std::vector<int> all(static_cast<std::size_t>(arcs));
    for (int a = 0; a < arcs; ++a) all[a] = a;
    h.c = coords_of(all);
    for (const auto& r : read_from_marked_arc(code)) {
        std::vector<int> inside;
        std::vector<char> is_inside(static_cast<std::size_t>(arcs), 0);
        for (int a = (r.first + 1) % arcs;; a = (a + 1) % arcs) {
            inside.push_back(a);
            is_inside[a] = 1;
            if (a == r.second) break;
        }
        std::vector<int> outside;
        for (int a = 0; a < arcs; ++a)
            if (!is_inside[a]) outside.push_back(a);
        h.crossing_ids.push_back(r.crossing);
        h.y.push_back(coords_of(inside));
        h.x.push_back(coords_of(outside));
    }
    return h;
}

inline IntMatrix basis_matrix(const HomologyClasses& h) {
    IntMatrix m;
    for (const auto& row : h.x) m.emplace_back(row.begin(), row.end());
    m.emplace_back(h.c.begin(), h.c.end());
    return m;
}

struct BasisCheck {
    bool ok = false;
    BigInt determinant = 0;
};

// {x_p} together with c is a Z-basis iff the coordinate matrix has det +-1.
inline BasisCheck basis_check(const GaussCode& code) {
    const BigInt det = integer_determinant(basis_matrix(homology_classes(code)));
    return {det == 1 || det == -1, det};
}

// -sum_p eps_p (y_p + x_p (y_p^2 - 1) h(c)) with group elements g -> 1 + s.
inline GroupRingSeries pimu_element(const GaussCode& code, int order) {
    if (order < 1) throw std::invalid_argument("pimu_element: order must be >= 1");
    const HomologyClasses h = homology_classes(code);
    const int n = static_cast<int>(h.c.size());
    GroupRingSeries total(n, order);
    if (h.crossing_ids.empty()) return total;
    const GroupRingSeries one = GroupRingSeries::constant(n, order, 1);
    const GroupRingSeries h_of_c = compose(h_series(order), GroupRingSeries::group_element(h.c, order) - one);
    const auto signs = effective_signs(code);
    for (std::size_t p = 0; p < h.crossing_ids.size(); ++p) {
        AbelianClass y2 = h.y[p];
        for (auto& e : y2) e *= 2;
        AbelianClass xy2 = y2;
        for (std::size_t i = 0; i < xy2.size(); ++i) xy2[i] += h.x[p][i];
        const GroupRingSeries x = GroupRingSeries::group_element(h.x[p], order);
        const GroupRingSeries term = GroupRingSeries::group_element(h.y[p], order) +
                                     (GroupRingSeries::group_element(xy2, order) - x) * h_of_c;
        total -= term * Rational(signs.at(h.crossing_ids[p]));
    }
    return total;
}

// Integer functional phi on cycle coordinates with phi(x_p) = 0, phi(c) = 1;
// nullopt when {x_p} and c fail to be a Z-basis.
inline std::optional<std::vector<long long>> specialization_functional(const GaussCode& code) {
    const HomologyClasses h = homology_classes(code);
    const IntMatrix m = basis_matrix(h);
    const BigInt det = integer_determinant(m);
    if (det != 1 && det != -1) return std::nullopt;
    std::vector<std::vector<Rational>> a;
    for (const auto& row : m) {
        std::vector<Rational> r;
        for (const auto& v : row) r.emplace_back(v, BigInt(1));
        a.push_back(std::move(r));
    }
    std::vector<Rational> rhs(m.size(), 0);
    rhs.back() = 1;
    const auto sol = solve_exact(a, rhs);
    std::vector<long long> phi;
    for (const auto& q : *sol) {
        if (!q.is_integer()) return std::nullopt;
        phi.push_back(static_cast<long long>(q.numerator()));
    }
    return phi;
}

// Sends x_p -> 1 and c -> t = 1 + s, giving a series in s.
inline TruncatedSeries specialize_phi(const GroupRingSeries& series, const GaussCode& code) {
    const auto phi = specialization_functional(code);
    if (!phi) throw std::domain_error("specialize_phi: {x_p} and c do not form a Z-basis");
    if (static_cast<int>(phi->size()) != series.variables())
        throw std::invalid_argument("specialize_phi: series is not over this code's cycle basis");
    std::vector<TruncatedSeries> images;
    for (long long e : *phi) {
        auto coeffs = GroupRingSeries::binomial_series(e, series.order());
        coeffs[0] = 0;
        images.emplace_back("s", std::move(coeffs));
    }
    return substitute_all(series, images, "s");
}

inline constexpr const char* kObstructed = "OBSTRUCTED";
inline constexpr const char* kNoObstructionFound = "NO_OBSTRUCTION_FOUND";
inline constexpr const char* kInjectivityAssumption =
    "assumes the inclusion pi_1(N(C)) -> pi_1(S) of a regular neighbourhood is injective";

struct Verdict {
    std::string status;
    std::string reason;
    int crossings = 0;
    int marked_arc = 0;
    int basepoint_arc = 0;
    std::vector<long long> epsilon_by_arc;
    long long epsilon_sum = 0;
    bool basis_ok = false;
    BigInt determinant = 0;
    TruncatedSeries series = TruncatedSeries::zero("s", 0);
};

inline Verdict obstruction_verdict(const GaussCode& code, int order) {
    if (order < 2) throw std::invalid_argument("obstruction_verdict: order must be >= 2");
    validate(code);
    Verdict v;
    v.crossings = code.crossings;
    v.marked_arc = code.marked_arc;
    v.series = TruncatedSeries::zero("s", order);
    if (code.crossings == 0) {
        v.status = kNoObstructionFound;
        v.reason = "simple closed curve";
        v.basis_ok = true;
        v.determinant = basis_check(code).determinant;
        return v;
    }
    std::optional<int> chosen;
    for (int a = 0; a < code.arc_count(); ++a) {
        GaussCode c = code;
        c.marked_arc = a;
        v.epsilon_by_arc.push_back(epsilon_sum(c));
    }
    if (v.epsilon_by_arc[code.marked_arc] != 0) chosen = code.marked_arc;
    for (int a = 0; !chosen && a < code.arc_count(); ++a)
        if (v.epsilon_by_arc[a] != 0) chosen = a;
    if (!chosen) {
        v.status = kNoObstructionFound;
        v.reason = "epsilon sum vanishes for every basepoint arc";
        return v;
    }
    v.basepoint_arc = *chosen;
    v.epsilon_sum = v.epsilon_by_arc[*chosen];
    const GaussCode based = shift_basepoint(code, *chosen);
    const BasisCheck b = basis_check(based);
    v.basis_ok = b.ok;
    v.determinant = b.determinant;
    if (!b.ok) {
        v.status = kNoObstructionFound;
        v.reason = "x_p and c do not form a Z-basis";
        return v;
    }
    v.series = specialize_phi(pimu_element(based, order), based);
    bool nonconstant = false;
    for (int d = 1; d <= v.series.order(); ++d) nonconstant = nonconstant || !v.series.coefficient(d).is_zero();
    if (nonconstant) {
        v.status = kObstructed;
        v.reason = kInjectivityAssumption;
    } else {
        v.status = kNoObstructionFound;
        v.reason = "specialized series is constant";
    }
    return v;
}

// Canonical double-occurrence words on k letters: crossings are numbered in
// order of first appearance.
inline std::vector<std::vector<int>> double_occurrence_words(int k) {
    std::vector<std::vector<int>> out;
    std::vector<int> cur;
    std::vector<int> used(static_cast<std::size_t>(k) + 1, 0);
    auto rec = [&](auto& self, int next_new) -> void {
        if (static_cast<int>(cur.size()) == 2 * k) {
            out.push_back(cur);
            return;
        }
        for (int id = 1; id < next_new; ++id) {
            if (used[id] != 1) continue;
            used[id] = 2;
            cur.push_back(id);
            self(self, next_new);
            cur.pop_back();
            used[id] = 1;
        }
        if (next_new <= k) {
            used[next_new] = 1;
            cur.push_back(next_new);
            self(self, next_new + 1);
            cur.pop_back();
            used[next_new] = 0;
        }
    };
    rec(rec, 1);
    return out;
}

inline GaussCode code_from_word(const std::vector<int>& word, const std::map<int, int>& signs, int marked_arc) {
    GaussCode code;
    code.crossings = static_cast<int>(word.size() / 2);
    std::set<int> met;
    for (int id : word) code.sequence.push_back({id, met.insert(id).second ? 1 : 2});
    code.signs = signs;
    code.marked_arc = marked_arc;
    validate(code);
    return code;
}

// Every canonical code with up to max_crossings crossings, with seeded signs
// and marked arcs.
inline std::vector<GaussCode> generate_corpus(int max_crossings, std::uint64_t seed) {
    std::mt19937_64 rng(seed);
    std::vector<GaussCode> out;
    for (int k = 0; k <= max_crossings; ++k)
        for (const auto& word : double_occurrence_words(k)) {
            std::map<int, int> signs;
            for (int id = 1; id <= k; ++id) signs[id] = rng() % 2 == 0 ? 1 : -1;
            const int arcs = k == 0 ? 1 : 2 * k;
            out.push_back(code_from_word(word, signs, static_cast<int>(rng() % static_cast<std::uint64_t>(arcs))));
        }
    return out;
}

}  // namespace gtl
