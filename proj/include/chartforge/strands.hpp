#pragma once

#include <vector>

#include "chartforge/chart.hpp"

namespace chartforge {

enum class StrandClass { Free, Terminal, Internal, Hoop, Ring, Loop };

const char* to_string(StrandClass c);

// A maximal label-m curve passing straight through crossings.
struct Strand {
    int label = 0;
    std::vector<Id> edges;       // in walk order
    std::vector<Id> end_darts;   // 0 (closed) or 2 darts at white/black ends
    std::vector<Id> endpoints;   // vertices of end_darts
    std::vector<Id> crossings;   // pass-throughs, in walk order
    bool closed = false;
    StrandClass cls = StrandClass::Internal;

    bool has_endpoint(Id v) const {
        return (endpoints.size() > 0 && endpoints[0] == v) ||
               (endpoints.size() > 1 && endpoints[1] == v);
    }
};

std::vector<Strand> strands(const Chart& chart, int label);
std::vector<Strand> all_strands(const Chart& chart);

// Index of the strand containing each edge, for one label's strand list.
std::vector<Id> edge_strand_map(const Chart& chart,
                                const std::vector<Strand>& list);

// The two middle darts at a white vertex: center of the inward triple and of
// the outward triple. Returns {inward_mid, outward_mid}.
std::pair<Id, Id> middle_darts(const Chart& chart, Id white);

bool is_middle_dart(const Chart& chart, Id white, Id dart);

// A strand is middle at w if one of its end darts at w is a middle dart.
bool is_middle(const Chart& chart, const Strand& s, Id white);

// Strands immediately before and after `dart` in its vertex rotation,
// so that a, dart's strand, b lie anticlockwise in this order.
std::pair<Id, Id> flank_strands(const Chart& chart,
                                const std::vector<Strand>& list,
                                const std::vector<Id>& by_edge, Id dart);

std::vector<Id> bw_vertices(const Chart& chart, int label);

struct ComponentWhiteCount {
    std::vector<Id> whites;
    std::vector<Id> strand_ids;
    int white_count = 0;
};

// Connected components of gamma(chart, m): strands glued at white vertices.
std::vector<ComponentWhiteCount> component_white_counts(const Chart& chart,
                                                        int label);

}  // namespace chartforge
