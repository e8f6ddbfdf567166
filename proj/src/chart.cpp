#include "chartforge/chart.hpp"

#include <algorithm>
#include <functional>
#include <numeric>
#include <stdexcept>

namespace chartforge {

Id Chart::rotation_next(Id dart) const {
    const auto& rot = vertices[darts[dart].vertex].rotation;
    for (size_t i = 0; i < rot.size(); ++i)
        if (rot[i] == dart) return rot[(i + 1) % rot.size()];
    throw std::logic_error("dart missing from its vertex rotation");
}

Id Chart::rotation_prev(Id dart) const {
    const auto& rot = vertices[darts[dart].vertex].rotation;
    for (size_t i = 0; i < rot.size(); ++i)
        if (rot[i] == dart) return rot[(i + rot.size() - 1) % rot.size()];
    throw std::logic_error("dart missing from its vertex rotation");
}

Id Chart::add_vertex(VertexKind kind, const std::string& name) {
    Id id = static_cast<Id>(vertices.size());
    vertices.push_back(Vertex{kind, {}});
    vertex_names.push_back(name.empty() ? "v" + std::to_string(id) : name);
    return id;
}

Id Chart::add_dart(Id vertex, const std::string& name) {
    Id id = static_cast<Id>(darts.size());
    darts.push_back(Dart{vertex, kNone});
    dart_names.push_back(name.empty() ? "d" + std::to_string(id) : name);
    return id;
}

Id Chart::add_edge(int label, Id tail_vertex, Id head_vertex,
                   const std::string& name) {
    Id id = static_cast<Id>(edges.size());
    Id t = add_dart(tail_vertex);
    Id h = add_dart(head_vertex);
    darts[t].edge = id;
    darts[h].edge = id;
    vertices[tail_vertex].rotation.push_back(t);
    vertices[head_vertex].rotation.push_back(h);
    edges.push_back(Edge{label, t, h});
    edge_names.push_back(name.empty() ? "e" + std::to_string(id) : name);
    return id;
}

Components components(const Chart& chart) {
    Components out;
    out.vertex_component.assign(chart.vertices.size(), kNone);
    for (Id v = 0; v < static_cast<Id>(chart.vertices.size()); ++v) {
        if (out.vertex_component[v] != kNone) continue;
        Id comp = static_cast<Id>(out.members.size());
        out.members.emplace_back();
        std::vector<Id> stack{v};
        out.vertex_component[v] = comp;
        while (!stack.empty()) {
            Id u = stack.back();
            stack.pop_back();
            out.members[comp].push_back(u);
            for (Id d : chart.vertices[u].rotation) {
                Id w = chart.darts[chart.twin(d)].vertex;
                if (out.vertex_component[w] == kNone) {
                    out.vertex_component[w] = comp;
                    stack.push_back(w);
                }
            }
        }
    }
    return out;
}

static std::vector<Orbit> face_orbits(const Chart& chart,
                                      const Components& comps,
                                      std::vector<Id>& dart_orbit) {
    std::vector<Orbit> orbits;
    dart_orbit.assign(chart.darts.size(), kNone);
    for (Id d0 = 0; d0 < static_cast<Id>(chart.darts.size()); ++d0) {
        if (dart_orbit[d0] != kNone) continue;
        Orbit orbit;
        orbit.component = comps.vertex_component[chart.darts[d0].vertex];
        Id d = d0;
        do {
            dart_orbit[d] = static_cast<Id>(orbits.size());
            orbit.darts.push_back(d);
            d = chart.face_next(d);
        } while (d != d0);
        orbits.push_back(std::move(orbit));
    }
    return orbits;
}

std::optional<EmbeddingError> build_embedding(const Chart& chart,
                                              Embedding& out) {
    out = Embedding{};
    out.comps = components(chart);
    int ncomp = out.comps.count();
    out.orbits = face_orbits(chart, out.comps, out.dart_orbit);

    if (static_cast<int>(chart.placements.size()) != ncomp)
        return EmbeddingError{"placement table does not cover all components"};

    out.outer_orbit.assign(ncomp, kNone);
    for (Id c = 0; c < ncomp; ++c) {
        Id anchor = chart.placements[c].outer_anchor;
        if (anchor == kNone || anchor >= static_cast<Id>(chart.darts.size()))
            return EmbeddingError{"bad outer anchor for component"};
        if (out.comps.vertex_component[chart.darts[anchor].vertex] != c)
            return EmbeddingError{"outer anchor lies outside its component"};
        out.outer_orbit[c] = out.dart_orbit[anchor];
    }

    // Face ids: 0 = root region, then one per non-outer orbit.
    out.orbit_face.assign(out.orbits.size(), kNone);
    std::vector<Id> own_face(out.orbits.size(), kNone);
    out.faces.clear();
    out.faces.push_back(Face{{}, {}, true});
    for (Id o = 0; o < static_cast<Id>(out.orbits.size()); ++o) {
        if (out.outer_orbit[out.orbits[o].component] == o) continue;
        own_face[o] = static_cast<Id>(out.faces.size());
        out.faces.push_back(Face{{o}, {}, false});
    }

    // Resolve the face of each outer orbit through the placement chain.
    std::function<std::optional<Id>(Id, int)> host_face =
        [&](Id comp, int depth) -> std::optional<Id> {
        if (depth > ncomp) return std::nullopt;  // placement cycle
        const auto& pl = chart.placements[comp];
        if (!pl.parent_anchor) return 0;
        Id anchor = *pl.parent_anchor;
        if (anchor < 0 || anchor >= static_cast<Id>(chart.darts.size()))
            return std::nullopt;
        Id o = out.dart_orbit[anchor];
        Id oc = out.orbits[o].component;
        if (oc == comp) return std::nullopt;  // self-hosting
        if (out.outer_orbit[oc] == o) return host_face(oc, depth + 1);
        return own_face[o];
    };

    for (Id c = 0; c < ncomp; ++c) {
        auto f = host_face(c, 0);
        if (!f) return EmbeddingError{"placement chain is cyclic or dangling"};
        Id fo = out.outer_orbit[c];
        out.orbit_face[fo] = *f;
        out.faces[*f].orbits.push_back(fo);
        out.faces[*f].components_inside.push_back(c);
    }
    for (Id o = 0; o < static_cast<Id>(out.orbits.size()); ++o)
        if (own_face[o] != kNone) out.orbit_face[o] = own_face[o];

    if (chart.infinity_anchor) {
        Id a = *chart.infinity_anchor;
        if (a < 0 || a >= static_cast<Id>(chart.darts.size()))
            return EmbeddingError{"infinity anchor does not exist"};
        out.infinity_face = out.face_of_dart(a);
    } else {
        out.infinity_face = 0;
    }
    return std::nullopt;
}

Embedding embedding_or_throw(const Chart& chart) {
    Embedding emb;
    if (auto err = build_embedding(chart, emb))
        throw std::runtime_error("invalid chart embedding: " + err->message);
    return emb;
}

int euler_vertex_count(const Chart& chart) {
    int v = 0;
    for (const auto& vert : chart.vertices)
        if (vert.kind != VertexKind::Phantom) ++v;
    return v;
}

int euler_component_count(const Chart& chart) {
    Components comps = components(chart);
    int c = 0;
    for (const auto& members : comps.members) {
        bool real = false;
        for (Id v : members)
            if (chart.vertices[v].kind != VertexKind::Phantom) real = true;
        if (real) ++c;
    }
    return c;
}

std::pair<int, int> white_labels(const Chart& chart, Id white) {
    int lo = 0, hi = 0;
    for (Id d : chart.vertices[white].rotation) {
        int l = chart.dart_label(d);
        if (lo == 0 || l < lo) lo = l;
        if (l > hi) hi = l;
    }
    return {lo, hi};
}

SubgraphView gamma(const Chart& chart, int label) {
    SubgraphView view;
    view.label = label;
    std::vector<bool> seen(chart.vertices.size(), false);
    for (Id e = 0; e < static_cast<Id>(chart.edges.size()); ++e) {
        if (chart.edges[e].label != label) continue;
        view.edges.push_back(e);
        for (Id d : {chart.edges[e].tail, chart.edges[e].head}) {
            Id v = chart.darts[d].vertex;
            if (seen[v]) continue;
            seen[v] = true;
            switch (chart.vertices[v].kind) {
                case VertexKind::White: view.whites.push_back(v); break;
                case VertexKind::Black: view.blacks.push_back(v); break;
                case VertexKind::Crossing: view.crossings.push_back(v); break;
                case VertexKind::Phantom: break;
            }
        }
    }
    return view;
}

std::optional<ChartType> chart_type(const Chart& chart) {
    // counts[i] = number of whites whose label pair is {i, i+1}
    std::unordered_map<int, int> counts;
    bool any = false;
    for (Id v = 0; v < static_cast<Id>(chart.vertices.size()); ++v) {
        if (chart.vertices[v].kind != VertexKind::White) continue;
        any = true;
        auto [lo, hi] = white_labels(chart, v);
        counts[lo]++;
        (void)hi;
    }
    if (!any) return std::nullopt;
    int lo = 0, hi = 0;
    bool first = true;
    for (auto& [i, c] : counts) {
        if (first) { lo = hi = i; first = false; }
        lo = std::min(lo, i);
        hi = std::max(hi, i);
    }
    ChartType t;
    t.m = lo;
    for (int i = lo; i <= hi; ++i) t.counts.push_back(counts.count(i) ? counts[i] : 0);
    return t;
}

}  // namespace chartforge
