#include "babgraph/analysis.hpp"

#include <limits>
#include <sstream>

#include "babgraph/oracle.hpp"
#include "json.hpp"

namespace bab {

namespace {

void oracle_cross_checks(const Graph& g, const AnalysisReport& r, const CriticalProfile& profile) {
    auto mismatch = [](const std::string& what) {
        throw Error("oracle cross-check failed: " + what);
    };
    if (g.order() <= 20 && oracle::alpha_dp(g) != r.alpha) mismatch("alpha");
    if (g.order() <= 20 && oracle::matching_number_dp(g) != r.mu) mismatch("mu");
    if (g.order() <= 16 && oracle::deficiency_tutte_berge(g) != r.deficiency)
        mismatch("deficiency (Tutte-Berge)");
    if (oracle::critical_difference_subsets(g) != r.d) mismatch("critical difference");
    if (sachs_expansion(g) != r.det) mismatch("determinant (Sachs expansion)");
    auto cc = core_corona(g);
    if (!(cc.core == profile.core) || !(cc.corona == profile.corona))
        mismatch("core/corona (deletion route)");
    auto m = maximum_matching(g);
    if (!validate_ge(g, r.ge, m).empty()) mismatch("Gallai-Edmonds validation");
    bool nonke = r.alpha + r.mu < g.order();
    if (has_sterboul_certificate(g, m) != nonke) mismatch("Sterboul certificate");
    if (r.bab_structure) {
        auto fast = fast_critical_sets(g, *r.bab_structure);
        if (!(fast.ker == profile.ker) || !(fast.nucleus == profile.nucleus) ||
            !(fast.diadem == profile.diadem))
            mismatch("fast critical sets vs enumeration");
    }
}

}  // namespace

AnalysisReport analyze(const Graph& g, const AnalysisOptions& options) {
    AnalysisReport r;
    r.n = g.order();
    r.m = g.size();
    r.alpha = alpha_value(g, options.guards);
    r.mu = matching_number(g);
    r.deficiency = r.n - 2 * r.mu;
    r.is_ke = r.alpha + r.mu == r.n;
    r.ge = gallai_edmonds(g);

    auto profile = critical_profile(g, options.guards);
    r.d = profile.d;
    r.ker = profile.ker;
    r.core = profile.core;
    r.nucleus = profile.nucleus;
    r.diadem = profile.diadem;
    r.corona = profile.corona;

    r.odd_cycle_count = enumerate_odd_cycles(g).count();
    r.r_disjoint = is_r_disjoint(g).value;

    auto recognition = recognize_bab(g, options.recognition_cap);
    r.bab_structure = recognition.structure;

    r.det = adjacency_determinant(g);
    r.has_sachs = has_sachs_subgraph(g, options.guards).exists;

    if (r.bab_structure) r.theorem_results = theorem_suite(g, *r.bab_structure, options.guards);

    if (options.oracle) oracle_cross_checks(g, r, profile);
    return r;
}

namespace {

nlohmann::ordered_json set_json(const VertexSet& s) { return s.values(); }

nlohmann::ordered_json det_json(const ExactInt& v) {
    if (v >= std::numeric_limits<std::int64_t>::min() &&
        v <= std::numeric_limits<std::int64_t>::max())
        return static_cast<std::int64_t>(v);
    return v.str();
}

}  // namespace

std::string analysis_to_json(const AnalysisReport& r) {
    nlohmann::ordered_json j;
    j["n"] = r.n;
    j["m"] = r.m;
    j["alpha"] = r.alpha;
    j["mu"] = r.mu;
    j["deficiency"] = r.deficiency;
    j["isKE"] = r.is_ke;
    j["D"] = set_json(r.ge.D);
    j["A"] = set_json(r.ge.A);
    j["C"] = set_json(r.ge.C);
    j["X"] = set_json(r.ge.X);
    j["Y"] = set_json(r.ge.Y);
    j["d"] = r.d;
    j["ker"] = set_json(r.ker);
    j["core"] = set_json(r.core);
    j["nucleus"] = set_json(r.nucleus);
    j["diadem"] = set_json(r.diadem);
    j["corona"] = set_json(r.corona);
    j["oddCycleCount"] = r.odd_cycle_count;
    j["rDisjoint"] = r.r_disjoint;
    if (r.bab_structure)
        j["babStructure"] = nlohmann::ordered_json::parse(r.bab_structure->to_json());
    else
        j["babStructure"] = nullptr;
    j["det"] = det_json(r.det);
    j["hasSachs"] = r.has_sachs;
    if (r.theorem_results) {
        auto checks = nlohmann::ordered_json::array();
        for (const auto& c : r.theorem_results->checks) {
            nlohmann::ordered_json cj;
            cj["name"] = c.name;
            cj["applicable"] = c.applicable;
            cj["pass"] = c.pass;
            cj["detail"] = c.detail;
            checks.push_back(std::move(cj));
        }
        j["theoremSuite"] = std::move(checks);
    } else {
        j["theoremSuite"] = nullptr;
    }
    return j.dump(2);
}

std::string analysis_to_text(const AnalysisReport& r) {
    std::ostringstream out;
    auto set_str = [](const VertexSet& s) {
        std::ostringstream o;
        o << '{';
        for (int i = 0; i < s.size(); ++i) o << (i ? "," : "") << s[i];
        o << '}';
        return o.str();
    };
    out << "n = " << r.n << ", m = " << r.m << '\n';
    out << "alpha = " << r.alpha << ", mu = " << r.mu << ", deficiency = " << r.deficiency
        << ", Koenig-Egervary: " << (r.is_ke ? "yes" : "no") << '\n';
    out << "Gallai-Edmonds: D = " << set_str(r.ge.D) << ", A = " << set_str(r.ge.A)
        << ", C = " << set_str(r.ge.C) << '\n';
    out << "                X = " << set_str(r.ge.X) << ", Y = " << set_str(r.ge.Y) << '\n';
    out << "critical difference d = " << r.d << '\n';
    out << "ker = " << set_str(r.ker) << ", core = " << set_str(r.core)
        << ", nucleus = " << set_str(r.nucleus) << '\n';
    out << "diadem = " << set_str(r.diadem) << ", corona = " << set_str(r.corona) << '\n';
    out << "odd cycles: " << r.odd_cycle_count << ", R-disjoint: " << (r.r_disjoint ? "yes" : "no")
        << '\n';
    if (r.bab_structure) {
        out << "BAB structure: B = " << set_str(r.bab_structure->b) << ", k = "
            << r.bab_structure->k();
        for (const auto& p : r.bab_structure->parts) out << ", part " << set_str(p);
        out << '\n';
    } else {
        out << "BAB structure: none\n";
    }
    out << "det = " << r.det << ", Sachs subgraph: " << (r.has_sachs ? "yes" : "no") << '\n';
    if (r.theorem_results) {
        out << "theorem suite:\n";
        for (const auto& c : r.theorem_results->checks) {
            out << "  " << c.name << ": "
                << (!c.applicable ? "n/a" : c.pass ? "pass" : "FAIL") << " (" << c.detail << ")\n";
        }
    }
    return out.str();
}

}  // namespace bab
