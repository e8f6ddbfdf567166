#pragma once

#include <string>
#include <vector>

#include "chartforge/chart.hpp"

namespace chartforge {

struct Violation {
    std::string rule;      // e.g. "degree", "label-range", "white-alt"
    std::string location;  // element name
    std::string message;
};

struct ValidationReport {
    std::vector<Violation> violations;
    bool ok() const { return violations.empty(); }
};

// Chart conditions: degrees, label range, white alternation and orientation,
// crossing diagonals, face closure, Euler identity, placement shape.
ValidationReport validate(const Chart& chart);

// Minimal-chart assumptions: terminal strands middle at their white vertex,
// no free strands or simple hoops, every ring/hoop side holds a white vertex.
ValidationReport check_assumptions(const Chart& chart);

// Whites strictly inside each side of a closed curve given by its edge set.
// Side 0 is the side of face_of(anchor). Used by hoop/ring domain checks.
std::pair<int, int> whites_by_side(const Chart& chart, const Embedding& emb,
                                   const std::vector<Id>& curve_edges);

}  // namespace chartforge
