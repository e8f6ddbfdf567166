#include "chartforge/orient.hpp"

#include <stdexcept>

namespace chartforge {

namespace {

struct VertexChoice {
    Id middle;           // incident edge id
    bool middle_inward;  // direction of the middle dart at this vertex
};

bool set_edge(const GraphTemplate& t, std::vector<int>& edge_dir, Id e, Id v,
              Direction at_v) {
    // dir code: 1 means a->b
    bool av = t.edges[e].a == v;
    bool a_to_b = av ? at_v == Direction::Outward : at_v == Direction::Inward;
    int code = a_to_b ? 1 : 2;
    if (edge_dir[e] == 0) {
        edge_dir[e] = code;
        return true;
    }
    return edge_dir[e] == code;
}

void emit(const GraphTemplate& t, const std::vector<VertexChoice>& choice,
          const std::vector<int>& edge_dir, bool slots,
          std::vector<OrientationAssignment>& out) {
    OrientationAssignment base;
    base.edge_a_to_b.resize(t.edges.size());
    for (Id e = 0; e < static_cast<Id>(t.edges.size()); ++e)
        base.edge_a_to_b[e] = edge_dir[e] != 2;
    base.middle_edge.assign(t.vertices.size(), kNone);
    base.terminal_wedge.assign(t.vertices.size(), -1);
    for (Id v = 0; v < static_cast<Id>(t.vertices.size()); ++v)
        if (t.vertices[v].white) base.middle_edge[v] = choice[v].middle;
    if (!slots) {
        out.push_back(base);
        return;
    }
    // Expand terminal slot positions: one wedge choice per stubbed white.
    std::vector<Id> stubbed;
    std::vector<int> internal_count;
    for (Id v = 0; v < static_cast<Id>(t.vertices.size()); ++v) {
        if (!t.vertices[v].white) continue;
        int stubs = 0, internal = 0;
        for (Id e : t.vertices[v].edges_ccw)
            (t.is_terminal_edge(e) ? stubs : internal)++;
        if (stubs == 1) {
            stubbed.push_back(v);
            internal_count.push_back(internal);
        }
    }
    std::vector<int> wedge(stubbed.size(), 0);
    while (true) {
        OrientationAssignment a = base;
        for (size_t i = 0; i < stubbed.size(); ++i)
            a.terminal_wedge[stubbed[i]] = wedge[i];
        out.push_back(a);
        size_t i = 0;
        for (; i < stubbed.size(); ++i) {
            if (++wedge[i] < internal_count[i]) break;
            wedge[i] = 0;
        }
        if (i == stubbed.size()) break;
    }
}

void search(const GraphTemplate& t, size_t v, std::vector<VertexChoice>& acc,
            std::vector<int>& edge_dir, bool slots,
            std::vector<OrientationAssignment>& out) {
    if (v == t.vertices.size()) {
        emit(t, acc, edge_dir, slots, out);
        return;
    }
    if (!t.vertices[v].white) {
        search(t, v + 1, acc, edge_dir, slots, out);
        return;
    }
    std::vector<Id> terminals, internals;
    for (Id e : t.vertices[v].edges_ccw)
        (t.is_terminal_edge(e) ? terminals : internals).push_back(e);
    if (terminals.size() >= 2) return;  // two middles are impossible

    const std::vector<Id>& middle_options =
        terminals.size() == 1 ? terminals : internals;
    for (Id middle : middle_options) {
        for (bool inward : {false, true}) {
            std::vector<int> saved = edge_dir;
            bool ok = true;
            for (Id e : t.vertices[v].edges_ccw) {
                bool is_mid = e == middle;
                Direction d = (is_mid == inward) ? Direction::Inward
                                                 : Direction::Outward;
                if (!set_edge(t, edge_dir, e, static_cast<Id>(v), d)) {
                    ok = false;
                    break;
                }
            }
            if (ok) {
                acc[v] = {middle, inward};
                search(t, v + 1, acc, edge_dir, slots, out);
            }
            edge_dir = saved;
        }
    }
}

}  // namespace

std::vector<OrientationAssignment> enumerate_raw_orientations(
    const GraphTemplate& t) {
    std::vector<OrientationAssignment> out;
    std::vector<VertexChoice> acc(t.vertices.size());
    std::vector<int> edge_dir(t.edges.size(), 0);
    search(t, 0, acc, edge_dir, true, out);
    return out;
}

bool orientation_feasible(const GraphTemplate& t) {
    std::vector<OrientationAssignment> out;
    std::vector<VertexChoice> acc(t.vertices.size());
    std::vector<int> edge_dir(t.edges.size(), 0);
    search(t, 0, acc, edge_dir, false, out);
    return !out.empty();
}

GraphTemplate apply_orientation(const GraphTemplate& t,
                                const OrientationAssignment& a) {
    GraphTemplate out = t;
    out.fixed_slots = true;
    for (Id e = 0; e < static_cast<Id>(out.edges.size()); ++e) {
        out.edges[e].oriented = true;
        out.edges[e].a_to_b = a.edge_a_to_b[e];
    }
    // Re-seat each terminal stub in its chosen wedge: internal edges keep
    // their cyclic order, the stub goes after position terminal_wedge[v].
    for (Id v = 0; v < static_cast<Id>(out.vertices.size()); ++v) {
        if (!out.vertices[v].white || a.terminal_wedge[v] < 0) continue;
        std::vector<Id> internals, stubs;
        for (Id e : out.vertices[v].edges_ccw)
            (out.is_terminal_edge(e) ? stubs : internals).push_back(e);
        std::vector<Id> rot;
        for (size_t j = 0; j < internals.size(); ++j) {
            rot.push_back(internals[j]);
            if (static_cast<int>(j) == a.terminal_wedge[v])
                for (Id s : stubs) rot.push_back(s);
        }
        out.vertices[v].edges_ccw = rot;
    }
    return out;
}

WedgeArc wedge_arc(int j, int middle_slot, Direction middle_dir) {
    bool touches_middle = j == middle_slot || (j + 1) % 3 == middle_slot;
    if (touches_middle) return {middle_dir, false};
    return {opposite(middle_dir), true};
}

WhiteSlots white_slots(const GraphTemplate& t, Id white) {
    if (!t.fixed_slots)
        throw std::logic_error("white_slots needs a fixed-slot template");
    WhiteSlots out;
    for (Id e : t.vertices[white].edges_ccw) {
        out.edges.push_back(e);
        const auto& ed = t.edges[e];
        if (!ed.oriented) throw std::logic_error("template not oriented");
        Id from = ed.a_to_b ? ed.a : ed.b;
        out.dirs.push_back(from == white ? Direction::Outward
                                         : Direction::Inward);
    }
    if (out.edges.size() != 3) throw std::logic_error("white degree != 3");
    for (int j = 0; j < 3; ++j)
        if (out.dirs[j] != out.dirs[(j + 1) % 3] &&
            out.dirs[j] != out.dirs[(j + 2) % 3])
            out.middle_slot = j;
    if (out.middle_slot < 0)
        throw std::logic_error("no middle slot: directions inconsistent");
    return out;
}

}  // namespace chartforge
