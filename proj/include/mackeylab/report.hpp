#pragma once

// Check reports and their canonical JSON form. Canonical JSON carries no
// timestamps or timings, so two runs with the same flags are byte-identical.

#include "mackeylab/complexes.hpp"
#include "mackeylab/gem.hpp"

#include <json.hpp>

#include <map>
#include <string>
#include <vector>

namespace mackeylab {

inline constexpr const char* kReportVersion = "1";

struct Finding {
    std::string item;
    std::string expected;
    std::string got;

    bool ok() const { return expected == got; }
};

struct CheckReport {
    std::string check;
    std::map<std::string, long> params;
    std::vector<Finding> details;

    bool passed() const {
        for (const auto& f : details)
            if (!f.ok()) return false;
        return true;
    }

    void expect(std::string item, std::string expected, std::string got) {
        details.push_back({std::move(item), std::move(expected), std::move(got)});
    }
    void expect_true(std::string item, bool got) {
        expect(std::move(item), "true", got ? "true" : "false");
    }
    void expect_eq_int(std::string item, long expected, long got) {
        expect(std::move(item), std::to_string(expected), std::to_string(got));
    }
    void merge(const CheckReport& other) {
        for (const auto& f : other.details)
            details.push_back({other.check + "." + f.item, f.expected, f.got});
    }
};

inline nlohmann::json to_json(const CheckReport& r) {
    nlohmann::json details = nlohmann::json::array();
    for (const auto& f : r.details)
        details.push_back({{"item", f.item}, {"expected", f.expected}, {"got", f.got}});
    nlohmann::json params = nlohmann::json::object();
    for (const auto& [k, v] : r.params) params[k] = v;
    return {{"check", r.check},
            {"params", params},
            {"status", r.passed() ? "pass" : "fail"},
            {"details", details},
            {"version", kReportVersion}};
}

// -- Domain object serialization ---------------------------------------------

inline nlohmann::json to_json(const Matrix& m) {
    nlohmann::json rows = nlohmann::json::array();
    for (int i = 0; i < m.rows(); ++i) {
        nlohmann::json row = nlohmann::json::array();
        for (int j = 0; j < m.cols(); ++j) row.push_back(to_fraction_string(m.at(i, j)));
        rows.push_back(row);
    }
    return rows;
}

inline nlohmann::json to_json(const MackeyFunctor& m) {
    return {{"underlying_dim", m.underlying.dim},
            {"tau", to_json(m.underlying.tau)},
            {"fixed_dim", m.fixed_dim},
            {"res", to_json(m.res)},
            {"tr", to_json(m.tr)}};
}

inline nlohmann::json to_json(const DecompositionTriple& t) {
    return {t.m_triv, t.m_sign, t.m_I};
}

inline nlohmann::json homology_to_json(const std::map<int, HomologyClass>& h) {
    nlohmann::json out = nlohmann::json::object();
    for (const auto& [degree, cls] : h) {
        const MackeyFunctor& m = cls.subquotient.functor;
        out[std::to_string(degree)] = {{"underlying_dim", m.underlying.dim},
                                       {"fixed_dim", m.fixed_dim},
                                       {"triple", to_json(cls.triple)}};
    }
    return out;
}

inline nlohmann::json to_json(const PowerSeries& s) {
    return nlohmann::json(s.coefficients);
}

inline nlohmann::json to_json(const GradedRing& r) {
    nlohmann::json out = nlohmann::json::array();
    for (const auto& g : r.gens) out.push_back({{"name", g.name}, {"degree", g.degree}});
    return out;
}

inline std::string table_to_string(const DimTable& t) {
    std::string s = "{";
    bool first = true;
    for (const auto& [d, n] : t) {
        if (!first) s += ", ";
        s += std::to_string(d) + ":" + std::to_string(n);
        first = false;
    }
    return s + "}";
}

inline std::string triple_to_string(const DecompositionTriple& t) {
    return "(" + std::to_string(t.m_triv) + "," + std::to_string(t.m_sign) + "," +
           std::to_string(t.m_I) + ")";
}

}  // namespace mackeylab
