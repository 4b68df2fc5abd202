#pragma once

#include <fstream>
#include <sstream>
#include <stdexcept>
#include <string>
#include <vector>

#include <json.hpp>

#include "gtl/axioms.hpp"
#include "gtl/derivation.hpp"
#include "gtl/morita.hpp"
#include "gtl/series.hpp"
#include "gtl/twist.hpp"
#include "gtl/verify.hpp"

namespace gtl {

using Json = nlohmann::ordered_json;

class ParseError : public std::invalid_argument {
public:
    using std::invalid_argument::invalid_argument;
};

inline Json to_json(const Rational& r) { return r.str(); }

inline Json word_json(const Word& w) {
    Json a = Json::array();
    for (Letter l : w) a.push_back(l.name());
    return a;
}

inline Json to_json(const TruncatedSeries& s) {
    Json coeffs = Json::array();
    for (const auto& c : s.coefficients()) coeffs.push_back(c.str());
    return Json{{"var", s.var()}, {"order", s.order()}, {"coeffs", coeffs}};
}

inline Json to_json(const TensorElement& t) {
    Json terms = Json::array();
    for (const auto& [w, c] : t) terms.push_back(Json{{"coeff", c.str()}, {"word", word_json(w)}});
    return Json{{"genus", t.genus()}, {"max_degree", t.max_degree()}, {"terms", terms}};
}

inline Json to_json(const PairTensorElement& t) {
    Json terms = Json::array();
    for (const auto& [k, c] : t)
        terms.push_back(Json{{"coeff", c.str()}, {"left", word_json(k[0])}, {"right", word_json(k[1])}});
    return Json{{"genus", t.genus()}, {"max_degree", t.max_degree()}, {"terms", terms}};
}

inline Json to_json(const DerivationElement& d) {
    Json comps = Json::object();
    for (const auto& [m, c] : d.components()) comps[std::to_string(m)] = to_json(c);
    return Json{{"genus", d.genus()}, {"components", comps}};
}

inline Word word_from_json(const Json& j) {
    if (!j.is_array()) throw ParseError("word must be an array of letter names");
    std::vector<Letter> letters;
    for (const auto& l : j) {
        if (!l.is_string()) throw ParseError("letter must be a string");
        letters.push_back(Letter::parse(l.get<std::string>()));
    }
    return Word(std::move(letters));
}

inline TensorElement tensor_from_json(const Json& j) {
    try {
        TensorElement t(j.at("genus").get<int>(), j.value("max_degree", kDefaultMaxDegree));
        for (const auto& term : j.at("terms"))
            t.add_term(word_from_json(term.at("word")), Rational::parse(term.at("coeff").get<std::string>()));
        return t;
    } catch (const Json::exception& e) {
        throw ParseError(std::string("tensor: ") + e.what());
    }
}

// Validates that every component is cyclic-invariant.
inline DerivationElement derivation_from_json(const Json& j) {
    try {
        const int genus = j.at("genus").get<int>();
        TensorElement all(genus, kDefaultMaxDegree);
        for (const auto& [key, comp] : j.at("components").items()) {
            const TensorElement t = tensor_from_json(comp);
            const auto deg = t.homogeneous_degree();
            if (deg && std::to_string(*deg) != key)
                throw ParseError("component '" + key + "' has degree " + std::to_string(*deg));
            all += t;
        }
        return DerivationElement::from_tensor(all);
    } catch (const Json::exception& e) {
        throw ParseError(std::string("derivation: ") + e.what());
    }
}

inline Json to_json(const GaussCode& code) {
    Json seq = Json::array();
    for (const auto& v : code.sequence) seq.push_back(Json{{"crossing", v.crossing}, {"visit", v.visit}});
    Json signs = Json::object();
    for (const auto& [id, s] : code.signs) signs[std::to_string(id)] = s;
    return Json{{"crossings", code.crossings}, {"sequence", seq}, {"signs", signs}, {"marked_arc", code.marked_arc}};
}

inline GaussCode gauss_code_from_json(const Json& j) {
    GaussCode code;
    try {
        code.crossings = j.at("crossings").get<int>();
        for (const auto& v : j.at("sequence"))
            code.sequence.push_back({v.at("crossing").get<int>(), v.at("visit").get<int>()});
        if (j.contains("signs")) {
            for (const auto& [key, s] : j.at("signs").items()) {
                std::size_t used = 0;
                const int id = std::stoi(key, &used);
                if (used != key.size()) throw ParseError("bad crossing id '" + key + "'");
                code.signs[id] = s.get<int>();
            }
        }
        code.marked_arc = j.value("marked_arc", 0);
    } catch (const Json::exception& e) {
        throw ParseError(std::string("gauss code: ") + e.what());
    } catch (const std::logic_error& e) {
        if (dynamic_cast<const ParseError*>(&e)) throw;
        throw ParseError(std::string("gauss code: ") + e.what());
    }
    try {
        validate(code);
    } catch (const GaussCodeError& e) {
        throw ParseError(std::string("gauss code: ") + e.what());
    }
    return code;
}

inline GaussCode load_gauss_code(const std::string& path) {
    std::ifstream in(path);
    if (!in) throw ParseError("cannot open '" + path + "'");
    Json j;
    try {
        j = Json::parse(in);
    } catch (const Json::parse_error& e) {
        throw ParseError("'" + path + "': " + e.what());
    }
    return gauss_code_from_json(j);
}

inline Json to_json(const AxiomReport& r) {
    return Json{{"axiom", r.axiom},         {"genus", r.genus},
                {"max_degree", r.max_degree}, {"checked", r.checked},
                {"violations", r.violations}};
}

inline Json to_json(const IdentityCount& c) {
    return Json{{"identity", c.name}, {"checked", c.checked}, {"failed", c.failed}, {"first_failures", c.first_failures}};
}

inline Json to_json(const SuiteReport& r) {
    Json j{{"suite", r.suite}};
    if (!r.identities.empty()) {
        Json a = Json::array();
        for (const auto& i : r.identities) a.push_back(to_json(i));
        j["identities"] = a;
    }
    if (!r.axioms.empty()) {
        Json a = Json::array();
        for (const auto& x : r.axioms) a.push_back(to_json(x));
        j["axioms"] = a;
    }
    if (!r.empirical.empty()) {
        Json a = Json::array();
        for (const auto& x : r.empirical) a.push_back(to_json(x));
        j["empirical"] = a;
    }
    j["passed"] = r.passed();
    return j;
}

inline Json to_json(const TraceReport& r) {
    Json failures = Json::array();
    for (const auto& f : r.failures)
        failures.push_back(Json{{"y", f.input.y.name()},
                                {"z", f.input.z.name()},
                                {"word", word_json(f.input.w)},
                                {"lhs", to_json(f.lhs)},
                                {"rhs", to_json(f.rhs)}});
    return Json{{"theorem", "54trace"},
                {"genus", r.genus},
                {"m", r.m},
                {"mode", r.mode},
                {"seed", r.seed},
                {"normalization", to_string(r.normalization)},
                {"checked", r.checked},
                {"nonzero", r.nonzero},
                {"failed", r.failed},
                {"trace_beta_failed", r.trace_beta_failed},
                {"failures", failures}};
}

inline Json to_json(const Verdict& v) {
    Json j{{"status", v.status},
           {"reason", v.reason},
           {"crossings", v.crossings},
           {"marked_arc", v.marked_arc},
           {"basepoint_arc", v.basepoint_arc},
           {"epsilon_by_arc", v.epsilon_by_arc},
           {"epsilon_sum", v.epsilon_sum},
           {"basis_ok", v.basis_ok},
           {"determinant", v.determinant.str()},
           {"series", to_json(v.series)}};
    return j;
}

// Compact human-readable forms for --output text.
inline std::string to_text(const TensorElement& t) {
    if (t.is_zero()) return "0";
    std::ostringstream os;
    bool first = true;
    for (const auto& [w, c] : t) {
        os << (first ? "" : " + ") << "(" << c << ") " << w.str();
        first = false;
    }
    return os.str();
}

inline std::string to_text(const PairTensorElement& t) {
    if (t.is_zero()) return "0";
    std::ostringstream os;
    bool first = true;
    for (const auto& [k, c] : t) {
        os << (first ? "" : " + ") << "(" << c << ") " << k[0].str() << " (x) " << k[1].str();
        first = false;
    }
    return os.str();
}

inline std::string to_text(const TruncatedSeries& s) {
    std::ostringstream os;
    bool first = true;
    for (int i = 0; i <= s.order(); ++i) {
        const Rational& c = s.coefficients()[i];
        if (c.is_zero()) continue;
        os << (first ? "" : " + ") << "(" << c << ")";
        if (i > 0) os << " " << s.var() << (i > 1 ? "^" + std::to_string(i) : "");
        first = false;
    }
    if (first) os << "0";
    os << " + O(" << s.var() << "^" << s.order() + 1 << ")";
    return os.str();
}

}  // namespace gtl
