#pragma once

#include <chrono>
#include <cstdint>
#include <functional>
#include <iostream>
#include <optional>
#include <string>
#include <vector>

#include <CLI11.hpp>

#include "gtl/cobracket.hpp"
#include "gtl/derivation.hpp"
#include "gtl/io.hpp"
#include "gtl/morita.hpp"
#include "gtl/series.hpp"
#include "gtl/twist.hpp"
#include "gtl/verify.hpp"

namespace gtl::cli {

enum ExitCode : int { kOk = 0, kVerificationFailed = 1, kUsage = 2 };

struct Outcome {
    Json inputs = Json::object();
    Json result;
    std::string status = "value";
    std::string text;
};

struct Options {
    std::string output = "json";
    bool timing = false;
    int jobs = 1;
    std::uint64_t seed = 0;
    int genus = 1;
    std::string word;
    std::string y;
    std::string z;
    std::string left;
    std::string right;
    std::string series_kind;
    std::string suite;
    int order = 8;
    int corpus_order = 4;
    int max_degree = 6;
    int m = 3;
    std::string mode = "exhaustive";
    std::size_t samples = 100;
    int random_genus = 2;
    int max_n = 12;
    int max_crossings = 5;
    std::string normalization = "stated";
    std::string file;
};

inline Word parse_word_for(const std::string& text, int genus) {
    const Word w = Word::parse(text);
    if (w.max_index() > genus)
        throw ParseError("word '" + text + "' uses a letter beyond genus " + std::to_string(genus));
    return w;
}

inline Letter parse_letter_for(const std::string& text, int genus) {
    const Letter l = Letter::parse(text);
    if (l.index() > genus) throw ParseError("letter '" + text + "' is beyond genus " + std::to_string(genus));
    return l;
}

inline std::string suite_text(const SuiteReport& r) {
    std::string s;
    for (const auto& i : r.identities)
        s += i.name + ": checked " + std::to_string(i.checked) + ", failed " + std::to_string(i.failed) + "\n";
    for (const auto& a : r.axioms)
        s += a.axiom + ": checked " + std::to_string(a.checked) + ", violations " + std::to_string(a.violations.size()) +
             "\n";
    for (const auto& a : r.empirical)
        s += a.axiom + " (reported): checked " + std::to_string(a.checked) + ", violations " +
             std::to_string(a.violations.size()) + "\n";
    return s;
}

inline Outcome run_schedler(const Options& o) {
    const Word w = parse_word_for(o.word, o.genus);
    if (w.empty()) throw ParseError("word must be non-empty");
    const auto r = schedler_delta(w, o.genus);
    return {Json{{"genus", o.genus}, {"word", o.word}}, to_json(r), "value", to_text(r)};
}

inline Outcome run_mu_alg(const Options& o) {
    const auto r = mu_alg(parse_word_for(o.word, o.genus), o.genus);
    return {Json{{"genus", o.genus}, {"word", o.word}}, to_json(r), "value", to_text(r)};
}

inline Outcome run_mu0(const Options& o) {
    const Word w = parse_word_for(o.word, o.genus);
    if (w.empty()) throw ParseError("word must be non-empty");
    const auto r = mu_theta_0(w, o.genus);
    return {Json{{"genus", o.genus}, {"word", o.word}}, to_json(r), "value", to_text(r)};
}

// With --y/--z: Tr_{|w|+1} of N([Y,Z] Phi(w)); otherwise Tr_{|w|-1} of N(w).
inline Outcome run_trace(const Options& o) {
    const Word w = parse_word_for(o.word, o.genus);
    Json inputs{{"genus", o.genus}, {"word", o.word}};
    DerivationElement d(o.genus);
    int k = 0;
    if (!o.y.empty() || !o.z.empty()) {
        if (o.y.empty() || o.z.empty()) throw ParseError("--y and --z must be given together");
        if (w.empty()) throw ParseError("word must be non-empty");
        d = lplus_generator(parse_letter_for(o.y, o.genus), parse_letter_for(o.z, o.genus), w, o.genus);
        k = w.degree() + 1;
        inputs["y"] = o.y;
        inputs["z"] = o.z;
    } else {
        if (w.degree() < 2) throw ParseError("word must have degree >= 2");
        d = DerivationElement::symmetrized(w, o.genus);
        k = w.degree() - 1;
    }
    const auto r = morita_trace(k, d);
    inputs["k"] = k;
    return {inputs, to_json(r), "value", "Tr_" + std::to_string(k) + " = " + to_text(r)};
}

inline Outcome run_bracket(const Options& o) {
    const Word u = parse_word_for(o.left, o.genus);
    const Word v = parse_word_for(o.right, o.genus);
    if (u.empty() || v.empty()) throw ParseError("words must be non-empty");
    const auto r = bracket(DerivationElement::symmetrized(u, o.genus), DerivationElement::symmetrized(v, o.genus));
    return {Json{{"genus", o.genus}, {"left", o.left}, {"right", o.right}}, to_json(r), "value",
            to_text(r.as_tensor())};
}

inline Outcome run_series(const Options& o) {
    if (o.order < 0) throw ParseError("--order must be non-negative");
    TruncatedSeries s = TruncatedSeries::zero("z", 0);
    if (o.series_kind == "s") s = s_series(o.order);
    else if (o.series_kind == "h") s = h_series(o.order);
    else if (o.series_kind == "obstruction") s = obstruction_series(o.order);
    else throw ParseError("unknown series '" + o.series_kind + "'");
    return {Json{{"series", o.series_kind}, {"order", o.order}}, to_json(s), "value", to_text(s)};
}

inline Outcome run_verify(const Options& o) {
    Outcome out;
    if (o.suite == "54trace") {
        const auto norm = parse_normalization(o.normalization);
        const auto r = verify_54trace(o.genus, o.m, o.mode, o.samples, o.seed, norm, o.jobs);
        out.inputs = Json{{"suite", o.suite}, {"genus", o.genus}, {"m", o.m},           {"mode", o.mode},
                          {"samples", o.samples}, {"seed", o.seed}, {"normalization", o.normalization}};
        out.result = to_json(r);
        out.status = r.passed() ? "pass" : "fail";
        out.text = "checked " + std::to_string(r.checked) + ", nonzero " + std::to_string(r.nonzero) + ", failed " +
                   std::to_string(r.failed) + ", trace/beta mismatches " + std::to_string(r.trace_beta_failed) + "\n";
        return out;
    }
    SuiteReport r;
    if (o.suite == "bialgebra") {
        r = verify_bialgebra(o.genus, o.max_degree, o.jobs);
        out.inputs = Json{{"suite", o.suite}, {"genus", o.genus}, {"max_degree", o.max_degree}};
    } else if (o.suite == "mu-zero") {
        r = verify_mu_zero(word_sample(o.genus, o.max_degree, o.random_genus, o.samples, o.seed), o.jobs);
        out.inputs = Json{{"suite", o.suite},         {"genus", o.genus},     {"max_degree", o.max_degree},
                          {"random_genus", o.random_genus}, {"samples", o.samples}, {"seed", o.seed}};
    } else if (o.suite == "fn") {
        r = verify_fn(o.max_n);
        out.inputs = Json{{"suite", o.suite}, {"max_n", o.max_n}};
    } else if (o.suite == "obstruction-corpus") {
        r = verify_obstruction_corpus(o.max_crossings, o.seed, o.corpus_order, o.jobs);
        out.inputs = Json{
            {"suite", o.suite}, {"max_crossings", o.max_crossings}, {"seed", o.seed}, {"order", o.corpus_order}};
    } else {
        throw ParseError("unknown suite '" + o.suite + "'");
    }
    out.result = to_json(r);
    out.status = r.passed() ? "pass" : "fail";
    out.text = suite_text(r);
    return out;
}

inline Outcome run_obstruction(const Options& o) {
    const GaussCode code = load_gauss_code(o.file);
    const Verdict v = obstruction_verdict(code, o.order);
    return {Json{{"file", o.file}, {"order", o.order}}, to_json(v), "value",
            v.status + " (" + v.reason + ")\nepsilon sum " + std::to_string(v.epsilon_sum) + ", determinant " +
                v.determinant.str() + "\nseries " + to_text(v.series)};
}

// Runs one command line (args excludes the program name); returns the exit code.
inline int run(const std::vector<std::string>& args, std::ostream& out, std::ostream& err) {
    CLI::App app{"Exact graded Goldman-Turaev computations and twist obstructions", "gtl"};
    app.require_subcommand(1);
    app.fallthrough();
    Options o;
    app.add_option("--output", o.output, "Output format")->check(CLI::IsMember({"json", "text"}))->capture_default_str();
    app.add_flag("--timing", o.timing, "Add elapsed_ms to the report");
    app.add_option("--jobs", o.jobs, "Worker threads for sweeps")->check(CLI::PositiveNumber)->capture_default_str();
    app.add_option("--seed", o.seed, "Seed for random sampling")->capture_default_str();

    auto genus_opt = [&](CLI::App* s) {
        s->add_option("--genus", o.genus, "Genus g")->check(CLI::Range(1, 127))->capture_default_str();
    };

    std::string chosen;
    std::map<std::string, std::function<Outcome(const Options&)>> handlers;
    auto add = [&](const std::string& name, const std::string& help, std::function<Outcome(const Options&)> f) {
        CLI::App* s = app.add_subcommand(name, help);
        s->callback([&chosen, name] { chosen = name; });
        handlers[name] = std::move(f);
        return s;
    };

    auto* sched = add("schedler", "Schedler's cobracket of N(word)", run_schedler);
    genus_opt(sched);
    sched->add_option("--word", o.word, "Word such as a1a2b1b2")->required();

    auto* mu = add("mu-alg", "Leading self-intersection term of a word", run_mu_alg);
    genus_opt(mu);
    mu->add_option("--word", o.word, "Word")->required();

    auto* mu0 = add("mu0", "Degree-0 self-intersection term of a word", run_mu0);
    genus_opt(mu0);
    mu0->add_option("--word", o.word, "Word")->required();

    auto* tr = add("trace", "Morita trace of N(word), or of N([Y,Z] Phi(word)) with --y/--z", run_trace);
    genus_opt(tr);
    tr->add_option("--word", o.word, "Word")->required();
    tr->add_option("--y", o.y, "Letter Y");
    tr->add_option("--z", o.z, "Letter Z");

    auto* br = add("bracket", "Bracket [N(left), N(right)] of symplectic derivations", run_bracket);
    genus_opt(br);
    br->add_option("--left", o.left, "Left word")->required();
    br->add_option("--right", o.right, "Right word")->required();

    auto* se = add("series", "Power series s, h or obstruction", run_series);
    se->add_option("kind", o.series_kind, "s | h | obstruction")
        ->required()
        ->check(CLI::IsMember({"s", "h", "obstruction"}));
    se->add_option("--order", o.order, "Truncation order")->capture_default_str();

    auto* ve = add("verify", "Run a verification suite", run_verify);
    ve->add_option("suite", o.suite, "54trace | bialgebra | mu-zero | fn | obstruction-corpus")->required();
    genus_opt(ve);
    ve->add_option("--m", o.m, "Degree m of Phi(w) for 54trace")->capture_default_str();
    ve->add_option("--mode", o.mode, "exhaustive | random")
        ->check(CLI::IsMember({"exhaustive", "random"}))
        ->capture_default_str();
    ve->add_option("--samples", o.samples, "Random samples")->capture_default_str();
    ve->add_option("--normalization", o.normalization, "stated | corrected")
        ->check(CLI::IsMember({"stated", "corrected"}))
        ->capture_default_str();
    ve->add_option("--max-degree", o.max_degree, "Largest word degree in sweeps")
        ->check(CLI::PositiveNumber)
        ->capture_default_str();
    ve->add_option("--random-genus", o.random_genus, "Genus of random words for mu-zero")
        ->check(CLI::Range(1, 127))
        ->capture_default_str();
    ve->add_option("--max-n", o.max_n, "Largest n for fn")->check(CLI::PositiveNumber)->capture_default_str();
    ve->add_option("--max-crossings", o.max_crossings, "Largest crossing count in the corpus")
        ->check(CLI::Range(0, 7))
        ->capture_default_str();
    ve->add_option("--order", o.corpus_order, "Series truncation order for the corpus")
        ->check(CLI::PositiveNumber)
        ->capture_default_str();

    auto* ob = add("obstruction", "Twist obstruction verdict for a Gauss code file", run_obstruction);
    ob->add_option("--file", o.file, "Gauss code JSON file")->required();
    ob->add_option("--order", o.order, "Series truncation order")->check(CLI::Range(2, 32))->capture_default_str();

    std::vector<const char*> argv{"gtl"};
    for (const auto& a : args) argv.push_back(a.c_str());
    try {
        app.parse(static_cast<int>(argv.size()), argv.data());
    } catch (const CLI::ParseError& e) {
        if (e.get_exit_code() == 0) {
            app.exit(e, out, err);
            return kOk;
        }
        err << "error: " << e.what() << "\n";
        return kUsage;
    }

    const auto start = std::chrono::steady_clock::now();
    Outcome outcome;
    try {
        outcome = handlers.at(chosen)(o);
    } catch (const ParseError& e) {
        err << "error: " << e.what() << "\n";
        return kUsage;
    } catch (const std::invalid_argument& e) {
        err << "error: " << e.what() << "\n";
        return kUsage;
    } catch (const std::out_of_range& e) {
        err << "error: " << e.what() << "\n";
        return kUsage;
    } catch (const std::exception& e) {
        err << "internal error: " << e.what() << "\n";
        return kVerificationFailed;
    }
    const auto elapsed =
        std::chrono::duration_cast<std::chrono::milliseconds>(std::chrono::steady_clock::now() - start).count();

    if (o.output == "json") {
        Json report{{"command", chosen}, {"inputs", outcome.inputs}, {"result", outcome.result}, {"status", outcome.status}};
        if (o.timing) report["elapsed_ms"] = elapsed;
        out << report.dump(2) << "\n";
    } else {
        out << chosen << ": " << outcome.status << "\n" << outcome.text;
        if (!outcome.text.empty() && outcome.text.back() != '\n') out << "\n";
        if (o.timing) out << "elapsed_ms: " << elapsed << "\n";
    }
    return outcome.status == "fail" ? kVerificationFailed : kOk;
}

}  // namespace gtl::cli
