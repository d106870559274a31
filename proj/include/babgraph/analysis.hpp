#pragma once

#include <optional>
#include <string>

#include "babgraph/bab.hpp"
#include "babgraph/gallai_edmonds.hpp"
#include "babgraph/graph.hpp"
#include "babgraph/independence.hpp"
#include "babgraph/spectral.hpp"

namespace bab {

struct AnalysisOptions {
    bool oracle = false;  // cross-check fast paths against the enumeration oracles
    Guards guards;
    std::size_t recognition_cap = 200'000;
};

/// Everything the analyzer reports for one graph.
struct AnalysisReport {
    int n = 0;
    int m = 0;
    int alpha = 0;
    int mu = 0;
    int deficiency = 0;
    bool is_ke = false;
    GEDecomposition ge;
    int d = 0;
    VertexSet ker, core, nucleus, diadem, corona;
    std::size_t odd_cycle_count = 0;
    bool r_disjoint = false;
    std::optional<BABStructure> bab_structure;
    ExactInt det = 0;
    bool has_sachs = false;
    std::optional<TheoremSuiteResult> theorem_results;
};

/// Runs every module on the graph. Size-guard refusals propagate as
/// GuardError naming the refusing stage; with options.oracle set, any
/// fast-path/oracle mismatch raises Error.
AnalysisReport analyze(const Graph& g, const AnalysisOptions& options = {});

/// Stable JSON rendering: fixed key order, arrays sorted ascending, the
/// determinant as a JSON number when it fits 64 bits and as a decimal
/// string otherwise.
std::string analysis_to_json(const AnalysisReport& report);

/// Human-readable rendering.
std::string analysis_to_text(const AnalysisReport& report);

}  // namespace bab
