#pragma once

#include <array>
#include <vector>

#include "chartforge/graphs.hpp"

namespace chartforge {

// One consistent orientation of a template: every edge directed, terminal
// edges middle at their white vertex, and per white a middle slot such that
// the middle dart takes one direction and the other two m-darts the other.
struct OrientationAssignment {
    std::vector<bool> edge_a_to_b;  // per template edge
    std::vector<Id> middle_edge;    // per vertex: incident edge that is middle
    std::vector<int> terminal_wedge;  // per vertex: internal corner holding
                                      // the terminal, -1 when none
};

// All raw assignments (terminal slot positions included, no RO dedup).
std::vector<OrientationAssignment> enumerate_raw_orientations(
    const GraphTemplate& t);

// True when at least one assignment exists (terminal slots ignored).
bool orientation_feasible(const GraphTemplate& t);

// The oriented, fixed-slot template realizing one assignment.
GraphTemplate apply_orientation(const GraphTemplate& t,
                                const OrientationAssignment& a);

// Label-(m+eps) arc entering the wedge after m-slot j of a white vertex:
// direction at the white and whether it is the (m+eps)-middle there.
struct WedgeArc {
    Direction dir;
    bool middle;
};

// slots are the white's three m-slots in rotation order; middle_slot the
// index of the middle one; middle_dir its direction at the white.
WedgeArc wedge_arc(int j, int middle_slot, Direction middle_dir);

// Per-white slot data for an oriented template vertex: the three m-slots in
// rotation order (terminal included at its wedge), with directions.
struct WhiteSlots {
    std::vector<Id> edges;           // length 3, template edge ids
    std::vector<Direction> dirs;     // at this white
    int middle_slot = -1;
};

// Requires a fully oriented fixed-slot template (as from apply_orientation).
WhiteSlots white_slots(const GraphTemplate& t, Id white);

}  // namespace chartforge
