#pragma once

#include <cstdint>
#include <optional>
#include <random>
#include <stdexcept>
#include <string>
#include <vector>

#include "gtl/cobracket.hpp"
#include "gtl/derivation.hpp"
#include "gtl/enumerate.hpp"

namespace gtl {

// Tr_k(d) = (-1)^k sym(C_12(d)) for d homogeneous of degree k+1.
inline TensorElement morita_trace(int k, const DerivationElement& d) {
    if (d.is_zero()) return TensorElement(d.genus(), d.max_degree());
    const auto deg = d.homogeneous_degree();
    if (!deg) throw std::invalid_argument("morita_trace: derivation is not homogeneous");
    if (*deg != k + 1)
        throw std::invalid_argument("morita_trace: Tr_" + std::to_string(k) + " needs degree " + std::to_string(k + 1) +
                                    ", got " + std::to_string(*deg));
    TensorElement r = sym_project(c12_contract(d.component(*deg)));
    if (k % 2 != 0) r *= Rational(-1);
    return r;
}

// Keeps the terms whose first slot has degree 1, multiplies that letter onto
// the second slot and projects to Sym.
inline TensorElement s_map(const PairTensorElement& t) {
    TensorElement r(t.genus(), t.max_degree());
    for (const auto& [k, c] : t)
        if (k[0].size() == 1) r.add_term((k[0] + k[1]).sorted(), c);
    return r;
}

namespace detail {

// Adds sign (P . w[pos]) Q w-without-pos, in Sym, for both (P, Q) = (Y, Z) and (Z, Y).
inline void contract_at(TensorElement& r, Letter y, Letter z, const Word& w, std::size_t pos, const Rational& c) {
    if (const int p = pairing(y, w[pos])) r.add_term((z + w.without(pos)).sorted(), -c * Rational(p));
    if (const int p = pairing(z, w[pos])) r.add_term((y + w.without(pos)).sorted(), c * Rational(p));
}

}  // namespace detail

// beta_{Y,Z}: contractions of Y, Z with the first and last letters.
inline TensorElement beta_map(Letter y, Letter z, const TensorElement& t) {
    TensorElement r(t.genus(), t.max_degree() + 1);
    for (const auto& [w, c] : t) {
        if (w.empty()) throw std::invalid_argument("beta_map: degree-0 term");
        detail::contract_at(r, y, z, w, 0, c);
        detail::contract_at(r, y, z, w, w.size() - 1, c);
    }
    return r;
}

// gamma_{Y,Z}: contractions of Y, Z with the second and second-to-last letters.
inline TensorElement gamma_map(Letter y, Letter z, const TensorElement& t) {
    TensorElement r(t.genus(), t.max_degree() + 1);
    for (const auto& [w, c] : t) {
        if (w.size() < 2) throw std::invalid_argument("gamma_map: term of degree < 2");
        detail::contract_at(r, y, z, w, 1, c);
        detail::contract_at(r, y, z, w, w.size() - 2, c);
    }
    return r;
}

inline TensorElement alpha_map(Letter y, Letter z, const TensorElement& t) {
    return gamma_map(y, z, t) - beta_map(y, z, t);
}

enum class TraceNormalization { Stated, Corrected };

inline std::string to_string(TraceNormalization n) { return n == TraceNormalization::Stated ? "stated" : "corrected"; }

inline TraceNormalization parse_normalization(const std::string& s) {
    if (s == "stated") return TraceNormalization::Stated;
    if (s == "corrected") return TraceNormalization::Corrected;
    throw std::invalid_argument("unknown normalization '" + s + "'");
}

// Scalar c_m with s(delta(d)) = c_m Tr_{m+1}(d) under each normalization:
// stated (-1)^m m, corrected (-1)^{m+1} m (m-1).
inline Rational trace_factor(int m, TraceNormalization n) {
    const Rational sign = m % 2 == 0 ? 1 : -1;
    if (n == TraceNormalization::Stated) return sign * Rational(m);
    return -sign * Rational(m) * Rational(m - 1);
}

struct TraceCase {
    Letter y;
    Letter z;
    Word w;
};

struct TraceFailure {
    TraceCase input;
    TensorElement lhs;
    TensorElement rhs;
};

struct TraceReport {
    int genus = 1;
    int m = 3;
    std::string mode;
    std::uint64_t seed = 0;
    TraceNormalization normalization = TraceNormalization::Stated;
    std::size_t checked = 0;
    std::size_t failed = 0;
    std::size_t trace_beta_failed = 0;
    std::size_t nonzero = 0;
    std::vector<TraceFailure> failures;

    bool passed() const { return failed == 0 && trace_beta_failed == 0; }
};

inline std::vector<TraceCase> trace_cases_exhaustive(int genus, int m) {
    std::vector<TraceCase> out;
    const auto letters = basis_letters(genus);
    const auto words = all_words(genus, m);
    for (Letter y : letters)
        for (Letter z : letters)
            for (const Word& w : words) out.push_back({y, z, w});
    return out;
}

inline std::vector<TraceCase> trace_cases_random(int genus, int m, std::size_t samples, std::uint64_t seed) {
    std::mt19937_64 rng(seed);
    std::vector<TraceCase> out;
    for (std::size_t i = 0; i < samples; ++i) {
        const Letter y = random_letter(rng, genus);
        const Letter z = random_letter(rng, genus);
        out.push_back({y, z, random_word(rng, genus, m)});
    }
    return out;
}

// Checks s(delta(N([Y,Z] Phi(w)))) = c_m Tr_{m+1}(N([Y,Z] Phi(w))) and
// Tr_{m+1}(N([Y,Z] Phi(w))) = (-1)^{m+1} beta(Phi(w)) on every case.
inline TraceReport verify_trace_cases(int genus, int m, const std::vector<TraceCase>& cases,
                                      TraceNormalization normalization, int jobs = 1, std::size_t keep_failures = 10) {
    if (m < 3) throw std::invalid_argument("verify_54trace: m must be >= 3");
    struct Outcome {
        bool ok = true;
        bool trace_beta_ok = true;
        bool nonzero = false;
        std::optional<TraceFailure> failure;
    };
    const Rational factor = trace_factor(m, normalization);
    const auto outcomes = parallel_map(cases, jobs, [&](const TraceCase& c) {
        Outcome o;
        const DerivationElement d = lplus_generator(c.y, c.z, c.w, genus);
        const TensorElement lhs = s_map(cobracket(d));
        const TensorElement tr = morita_trace(m + 1, d);
        TensorElement rhs = tr;
        rhs *= factor;
        TensorElement beta = beta_map(c.y, c.z, dynkin_phi(c.w, genus));
        if (m % 2 == 0) beta *= Rational(-1);
        o.trace_beta_ok = tr == beta;
        o.nonzero = !tr.is_zero() || !lhs.is_zero();
        if (!(lhs == rhs)) {
            o.ok = false;
            o.failure = TraceFailure{c, lhs, rhs};
        }
        return o;
    });
    TraceReport report;
    report.genus = genus;
    report.m = m;
    report.normalization = normalization;
    report.checked = cases.size();
    for (const auto& o : outcomes) {
        if (o.nonzero) ++report.nonzero;
        if (!o.trace_beta_ok) ++report.trace_beta_failed;
        if (!o.ok) {
            ++report.failed;
            if (report.failures.size() < keep_failures) report.failures.push_back(*o.failure);
        }
    }
    return report;
}

inline TraceReport verify_54trace(int genus, int m, const std::string& mode, std::size_t samples, std::uint64_t seed,
                                  TraceNormalization normalization = TraceNormalization::Stated, int jobs = 1) {
    if (m < 3) throw std::invalid_argument("verify_54trace: m must be >= 3");
    std::vector<TraceCase> cases;
    if (mode == "exhaustive") cases = trace_cases_exhaustive(genus, m);
    else if (mode == "random") cases = trace_cases_random(genus, m, samples, seed);
    else throw std::invalid_argument("verify_54trace: unknown mode '" + mode + "'");
    TraceReport r = verify_trace_cases(genus, m, cases, normalization, jobs);
    r.mode = mode;
    r.seed = seed;
    return r;
}

}  // namespace gtl
