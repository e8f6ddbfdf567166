#pragma once

#include <functional>
#include <map>
#include <string>
#include <vector>

#include "chartforge/graphs.hpp"

namespace chartforge {

struct EnumFilter {
    std::string name;
    std::string cite;
    std::function<bool(const GraphTemplate&)> pass;
};

// Documented filters: connected, planar, no-loop, black-parity,
// assumption2 (at most one terminal per white and an orientation exists),
// lemma4-1 (no single-white component), lens-l32.
const std::vector<EnumFilter>& known_filters();

// The preset reproducing the nine-graph catalog at five whites.
std::vector<std::string> paper_preset();

struct RejectedCandidate {
    GraphTemplate graph;
    std::string killed_by;
};

struct EnumerationResult {
    std::vector<GraphTemplate> classes;  // RO-deduplicated survivors
    std::map<std::string, int> rejected_by_filter;
    std::vector<RejectedCandidate> rejected;  // only when emit_rejected
    long long raw_candidates = 0;
    bool budget_exceeded = false;
};

struct EnumerationOptions {
    int whites = 5;
    std::vector<std::string> filters;  // names from known_filters()
    bool emit_rejected = false;
    long long budget = 200000000;  // raw search steps
};

EnumerationResult enumerate_components(const EnumerationOptions& opt);

}  // namespace chartforge
