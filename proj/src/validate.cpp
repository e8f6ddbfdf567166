#include "chartforge/validate.hpp"

#include <algorithm>
#include <functional>
#include <cstdlib>
#include <set>

#include "chartforge/strands.hpp"

namespace chartforge {

namespace {

void add(ValidationReport& r, const std::string& rule, const std::string& loc,
         const std::string& msg) {
    r.violations.push_back(Violation{rule, loc, msg});
}

bool white_ok(const Chart& chart, Id v, ValidationReport& r) {
    const auto& rot = chart.vertices[v].rotation;
    const std::string& name = chart.vertex_names[v];
    int lo = chart.dart_label(rot[0]);
    int hi = lo;
    for (Id d : rot) {
        lo = std::min(lo, chart.dart_label(d));
        hi = std::max(hi, chart.dart_label(d));
    }
    bool ok = true;
    if (hi != lo + 1) {
        add(r, "white-alt", name, "labels are not i and i+1");
        ok = false;
    } else {
        for (int k = 0; k < 6; ++k)
            if (chart.dart_label(rot[k]) == chart.dart_label(rot[(k + 1) % 6])) {
                add(r, "white-alt", name, "labels do not alternate");
                ok = false;
                break;
            }
    }
    bool triple = false;
    for (int p = 0; p < 6 && !triple; ++p) {
        bool run = true;
        for (int k = 0; k < 3; ++k)
            run = run &&
                  chart.dart_direction(rot[(p + k) % 6]) == Direction::Inward;
        for (int k = 3; k < 6; ++k)
            run = run &&
                  chart.dart_direction(rot[(p + k) % 6]) == Direction::Outward;
        triple = run;
    }
    if (!triple) {
        add(r, "white-orient", name,
            "needs three consecutive inward then three outward darts");
        ok = false;
    }
    return ok;
}

bool crossing_ok(const Chart& chart, Id v, ValidationReport& r) {
    const auto& rot = chart.vertices[v].rotation;
    const std::string& name = chart.vertex_names[v];
    bool ok = true;
    for (int k = 0; k < 2; ++k) {
        Id a = rot[k], b = rot[k + 2];
        if (chart.dart_label(a) != chart.dart_label(b)) {
            add(r, "crossing-diagonal", name, "diagonal labels differ");
            ok = false;
        }
        if (chart.dart_direction(a) == chart.dart_direction(b)) {
            add(r, "crossing-orient", name,
                "diagonal darts are not oriented coherently");
            ok = false;
        }
    }
    int i = chart.dart_label(rot[0]);
    int j = chart.dart_label(rot[1]);
    if (std::abs(i - j) <= 1) {
        add(r, "crossing-gap", name, "labels " + std::to_string(i) + "," +
                                         std::to_string(j) +
                                         " must differ by more than 1");
        ok = false;
    }
    return ok;
}

}  // namespace

ValidationReport validate(const Chart& chart) {
    ValidationReport r;

    // Structural coherence first; later checks assume it.
    std::vector<int> dart_seen(chart.darts.size(), 0);
    for (Id v = 0; v < static_cast<Id>(chart.vertices.size()); ++v) {
        for (Id d : chart.vertices[v].rotation) {
            if (d < 0 || d >= static_cast<Id>(chart.darts.size())) {
                add(r, "structure", chart.vertex_names[v], "rotation dart out of range");
                return r;
            }
            ++dart_seen[d];
            if (chart.darts[d].vertex != v)
                add(r, "structure", chart.dart_names[d], "dart vertex mismatch");
        }
    }
    for (Id d = 0; d < static_cast<Id>(chart.darts.size()); ++d) {
        if (dart_seen[d] != 1)
            add(r, "face-closure", chart.dart_names[d],
                "dart appears in " + std::to_string(dart_seen[d]) + " rotations");
        if (chart.darts[d].edge == kNone)
            add(r, "structure", chart.dart_names[d], "dart without edge");
    }
    for (Id e = 0; e < static_cast<Id>(chart.edges.size()); ++e) {
        const Edge& ed = chart.edges[e];
        if (ed.tail == kNone || ed.head == kNone || ed.tail == ed.head)
            add(r, "structure", chart.edge_names[e], "edge dart pair malformed");
    }
    if (!r.ok()) return r;

    for (Id v = 0; v < static_cast<Id>(chart.vertices.size()); ++v) {
        const auto& vert = chart.vertices[v];
        int want = expected_degree(vert.kind);
        if (static_cast<int>(vert.rotation.size()) != want) {
            add(r, "degree", chart.vertex_names[v],
                "expected degree " + std::to_string(want) + ", found " +
                    std::to_string(vert.rotation.size()));
            continue;
        }
        if (vert.kind == VertexKind::White) white_ok(chart, v, r);
        if (vert.kind == VertexKind::Crossing) crossing_ok(chart, v, r);
        if (vert.kind == VertexKind::Phantom) {
            if (chart.darts[vert.rotation[0]].edge !=
                chart.darts[vert.rotation[1]].edge)
                add(r, "phantom", chart.vertex_names[v],
                    "phantom must carry one closed edge");
        }
    }
    for (Id e = 0; e < static_cast<Id>(chart.edges.size()); ++e) {
        int l = chart.edges[e].label;
        if (l < 1 || l > chart.degree_n - 1)
            add(r, "label-range", chart.edge_names[e],
                "label " + std::to_string(l) + " outside 1.." +
                    std::to_string(chart.degree_n - 1));
    }

    Embedding emb;
    if (auto err = build_embedding(chart, emb)) {
        add(r, "placement", "", err->message);
        return r;
    }
    int V = euler_vertex_count(chart);
    int E = static_cast<int>(chart.edges.size());
    int F = static_cast<int>(emb.faces.size());
    int C = euler_component_count(chart);
    if (V - E + F != 1 + C)
        add(r, "euler", "",
            "V-E+F = " + std::to_string(V - E + F) + " but 1+C = " +
                std::to_string(1 + C));
    return r;
}

std::pair<int, int> whites_by_side(const Chart& chart, const Embedding& emb,
                                   const std::vector<Id>& curve_edges) {
    std::set<Id> curve(curve_edges.begin(), curve_edges.end());
    // Union faces across every edge not on the curve; two classes remain.
    std::vector<Id> parent(emb.faces.size());
    for (size_t i = 0; i < parent.size(); ++i) parent[i] = static_cast<Id>(i);
    std::function<Id(Id)> find = [&](Id x) {
        while (parent[x] != x) x = parent[x] = parent[parent[x]];
        return x;
    };
    for (Id e = 0; e < static_cast<Id>(chart.edges.size()); ++e) {
        if (curve.count(e)) continue;
        Id fa = emb.face_of_dart(chart.edges[e].tail);
        Id fb = emb.face_of_dart(chart.edges[e].head);
        parent[find(fa)] = find(fb);
    }
    Id side0 = find(emb.face_of_dart(chart.edges[curve_edges[0]].tail));
    int in0 = 0, in1 = 0;
    for (Id v = 0; v < static_cast<Id>(chart.vertices.size()); ++v) {
        if (chart.vertices[v].kind != VertexKind::White) continue;
        // Whites on the curve belong to neither open side; curve edges of a
        // hoop/ring never touch whites, so any incident face classifies v.
        Id d = chart.vertices[v].rotation[0];
        bool on_curve = false;
        for (Id dd : chart.vertices[v].rotation)
            if (curve.count(chart.darts[dd].edge)) on_curve = true;
        if (on_curve) continue;
        (find(emb.face_of_dart(d)) == side0 ? in0 : in1)++;
    }
    return {in0, in1};
}

ValidationReport check_assumptions(const Chart& chart) {
    ValidationReport r;
    Embedding emb = embedding_or_throw(chart);
    for (const auto& s : all_strands(chart)) {
        if (s.cls == StrandClass::Free) {
            add(r, "A3", chart.edge_names[s.edges.front()],
                "free edge present");
        } else if (s.cls == StrandClass::Terminal) {
            Id w = chart.vertices[s.endpoints[0]].kind == VertexKind::White
                       ? s.endpoints[0]
                       : s.endpoints[1];
            if (!is_middle(chart, s, w))
                add(r, "A2", chart.edge_names[s.edges.front()],
                    "terminal edge not middle at " + chart.vertex_names[w]);
        } else if (s.cls == StrandClass::Hoop || s.cls == StrandClass::Ring) {
            auto [a, b] = whites_by_side(chart, emb, s.edges);
            if (s.cls == StrandClass::Hoop && (a == 0 || b == 0))
                add(r, "A3", chart.edge_names[s.edges.front()],
                    "simple hoop present");
            else if (a == 0 || b == 0)
                add(r, "A4", chart.edge_names[s.edges.front()],
                    "ring side without white vertices");
        }
    }
    return r;
}

}  // namespace chartforge
