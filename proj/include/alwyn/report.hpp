#pragma once

#include <map>
#include <string>
#include <vector>

#include "alwyn/sequence.hpp"
#include "alwyn/serialize.hpp"

namespace alwyn {

// Finite parameter lists plus index bounds. Degenerate combinations
// (D = 0, and rho = 0 where an identity divides by rho) stay in the
// enumeration and are counted as skipped by the checkers.
struct GridSpec {
    std::vector<Rational> p_values;
    std::vector<Rational> q_values;
    std::vector<Rational> r_values;
    std::vector<Rational> a_values;
    std::vector<Rational> b_values;
    int n_max = 25;
    int u_max = 5;
    int v_max = 5;
    int m_max = 10;

    static GridSpec default_grid() {
        GridSpec g;
        for (int v = -3; v <= 3; ++v) {
            g.p_values.push_back(v);
            g.q_values.push_back(v);
        }
        for (int v = -2; v <= 2; ++v) g.r_values.push_back(v);
        for (int v : {-1, 0, 1, 2}) {
            g.a_values.push_back(v);
            g.b_values.push_back(v);
        }
        return g;
    }

    // One point per (p, q, r, a, b) combination, in nested enumeration
    // order; includes D = 0 points so they can be counted as skipped.
    std::vector<SeqParams> points() const {
        std::vector<SeqParams> out;
        out.reserve(p_values.size() * q_values.size() * r_values.size() *
                    a_values.size() * b_values.size());
        for (const auto& p : p_values)
            for (const auto& q : q_values)
                for (const auto& r : r_values)
                    for (const auto& a : a_values)
                        for (const auto& b : b_values)
                            out.push_back({p, q, r, a, b});
        return out;
    }

    Json to_json() const {
        auto list = [](const std::vector<Rational>& vs) {
            Json arr = Json::array();
            for (const auto& v : vs) arr.push_back(v.str());
            return arr;
        };
        return Json{{"p", list(p_values)}, {"q", list(q_values)},
                    {"r", list(r_values)}, {"a", list(a_values)},
                    {"b", list(b_values)}, {"n_max", n_max},
                    {"u_max", u_max},      {"v_max", v_max},
                    {"m_max", m_max}};
    }
};

// A re-verified failing point: exact LHS/RHS and their difference, the
// parameter point and index assignment it occurred at.
struct Counterexample {
    std::string section;
    SeqParams params;
    std::map<std::string, long long> indices;
    std::string lhs;
    std::string rhs;
    std::string difference;
    bool confirmed_second_path = false;

    Json to_json() const {
        Json idx = Json::object();
        for (const auto& [k, v] : indices) idx[k] = v;
        return Json{{"section", section},
                    {"params", alwyn::to_json(params)},
                    {"indices", idx},
                    {"lhs", lhs},
                    {"rhs", rhs},
                    {"difference", difference},
                    {"confirmed_by_definition_path", confirmed_second_path}};
    }
};

enum class SectionClass { must_pass, must_pass_reclassifiable, under_test };

inline const char* section_class_name(SectionClass c) {
    switch (c) {
        case SectionClass::must_pass: return "must-pass";
        case SectionClass::must_pass_reclassifiable: return "must-pass(reclassifiable)";
        case SectionClass::under_test: return "under-test";
    }
    return "?";
}

struct SectionReport {
    std::string name;
    SectionClass cls = SectionClass::must_pass;
    long long pass = 0;
    long long fail = 0;
    long long skipped = 0;
    bool reclassified = false;

    Json to_json() const {
        return Json{{"name", name},
                    {"class", section_class_name(cls)},
                    {"pass", pass},
                    {"fail", fail},
                    {"skipped", skipped},
                    {"reclassified", reclassified}};
    }
};

// Per-identity result: section tallies roll up into the totals block;
// counterexamples are capped while fail counts stay exact.
struct IdentityReport {
    std::string identity;
    std::string classification;  // "must-pass" | "under-test" | "reclassified-under-test"
    Json grid = Json::object();
    std::vector<SectionReport> sections;
    std::vector<Counterexample> counterexamples;
    std::vector<std::string> notes;
    bool artifact_defect = false;

    long long pass() const {
        long long t = 0;
        for (const auto& s : sections) t += s.pass;
        return t;
    }
    long long fail() const {
        long long t = 0;
        for (const auto& s : sections) t += s.fail;
        return t;
    }
    long long skipped() const {
        long long t = 0;
        for (const auto& s : sections) t += s.skipped;
        return t;
    }

    const SectionReport* section(const std::string& name) const {
        for (const auto& s : sections)
            if (s.name == name) return &s;
        return nullptr;
    }

    Json to_json() const {
        Json sec = Json::array();
        for (const auto& s : sections) sec.push_back(s.to_json());
        Json cex = Json::array();
        for (const auto& c : counterexamples) cex.push_back(c.to_json());
        return Json{{"identity", identity},
                    {"classification", classification},
                    {"grid", grid},
                    {"totals", Json{{"pass", pass()}, {"fail", fail()}, {"skipped", skipped()}}},
                    {"sections", sec},
                    {"counterexamples", cex},
                    {"notes", notes},
                    {"artifact_defect", artifact_defect}};
    }
};

}  // namespace alwyn
