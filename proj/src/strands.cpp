#include "chartforge/strands.hpp"

#include <algorithm>
#include <functional>
#include <unordered_map>
#include <set>
#include <stdexcept>

namespace chartforge {

const char* to_string(StrandClass c) {
    switch (c) {
        case StrandClass::Free: return "free";
        case StrandClass::Terminal: return "terminal";
        case StrandClass::Internal: return "internal";
        case StrandClass::Hoop: return "hoop";
        case StrandClass::Ring: return "ring";
        case StrandClass::Loop: return "loop";
    }
    return "?";
}

// Dart diagonally opposite at a crossing (the strand continues there).
static Id diagonal(const Chart& chart, Id dart) {
    const auto& rot = chart.vertices[chart.darts[dart].vertex].rotation;
    for (size_t i = 0; i < rot.size(); ++i)
        if (rot[i] == dart) return rot[(i + 2) % rot.size()];
    throw std::logic_error("dart missing at crossing");
}

static bool stops_strand(const Chart& chart, Id vertex) {
    auto k = chart.vertices[vertex].kind;
    return k == VertexKind::White || k == VertexKind::Black;
}

static void classify(Strand& s, const Chart& chart) {
    if (s.closed) {
        s.cls = s.crossings.empty() ? StrandClass::Hoop : StrandClass::Ring;
        return;
    }
    int blacks = 0, whites = 0;
    for (Id v : s.endpoints) {
        if (chart.vertices[v].kind == VertexKind::Black) ++blacks;
        if (chart.vertices[v].kind == VertexKind::White) ++whites;
    }
    if (blacks == 2) s.cls = StrandClass::Free;
    else if (blacks == 1) s.cls = StrandClass::Terminal;
    else if (s.endpoints[0] == s.endpoints[1]) s.cls = StrandClass::Loop;
    else s.cls = StrandClass::Internal;
}

static std::vector<Strand> strands_of_edges(const Chart& chart,
                                            const std::vector<Id>& edge_set) {
    std::vector<Strand> out;
    std::vector<bool> used(chart.edges.size(), false);
    std::set<Id> wanted(edge_set.begin(), edge_set.end());

    auto walk_end = [&](Id dart) {
        // Follow the strand from `dart` (pointing away from the current end)
        // until it stops; returns the final inward dart.
        Id d = dart;
        while (true) {
            Id t = chart.twin(d);
            Id v = chart.darts[t].vertex;
            if (stops_strand(chart, v) ||
                chart.vertices[v].kind == VertexKind::Phantom)
                return t;
            d = diagonal(chart, t);
        }
    };

    for (Id e : edge_set) {
        if (used[e]) continue;
        Strand s;
        s.label = chart.edges[e].label;

        // Find a stopping end by walking backwards from the tail, or detect
        // a closed strand.
        Id start_dart = chart.edges[e].tail;
        {
            Id d = start_dart;
            size_t guard = 0;
            while (true) {
                Id v = chart.darts[d].vertex;
                if (stops_strand(chart, v) ||
                    chart.vertices[v].kind == VertexKind::Phantom)
                    break;
                d = chart.twin(diagonal(chart, d));
                if (++guard > 2 * chart.darts.size()) break;
                if (d == start_dart) break;  // closed
            }
            start_dart = d;
        }

        Id v0 = chart.darts[start_dart].vertex;
        bool closed = !stops_strand(chart, v0);
        Id d = start_dart;
        if (closed && chart.vertices[v0].kind == VertexKind::Crossing)
            s.crossings.push_back(v0);
        while (true) {
            used[chart.darts[d].edge] = true;
            s.edges.push_back(chart.darts[d].edge);
            Id t = chart.twin(d);
            Id v = chart.darts[t].vertex;
            if (closed) {
                if (chart.vertices[v].kind == VertexKind::Phantom) {
                    // vertex-free closed edge; single edge orbit
                    break;
                }
                Id nxt = diagonal(chart, t);
                if (nxt == start_dart || chart.darts[nxt].edge ==
                                             chart.darts[start_dart].edge) {
                    if (v != v0 || s.edges.size() > 1) s.crossings.push_back(v);
                    break;
                }
                s.crossings.push_back(v);
                d = nxt;
            } else {
                if (stops_strand(chart, v)) {
                    s.end_darts = {start_dart, t};
                    s.endpoints = {v0, v};
                    break;
                }
                s.crossings.push_back(v);
                d = diagonal(chart, t);
            }
        }
        s.closed = closed;
        if (closed && !s.crossings.empty()) {
            // drop duplicate when the walk closed exactly where it started
            if (s.crossings.size() > s.edges.size()) s.crossings.pop_back();
        }
        classify(s, chart);
        out.push_back(std::move(s));
    }
    (void)wanted;
    return out;
}

std::vector<Strand> strands(const Chart& chart, int label) {
    std::vector<Id> edge_set;
    for (Id e = 0; e < static_cast<Id>(chart.edges.size()); ++e)
        if (chart.edges[e].label == label) edge_set.push_back(e);
    return strands_of_edges(chart, edge_set);
}

std::vector<Strand> all_strands(const Chart& chart) {
    std::set<int> labels;
    for (const auto& e : chart.edges) labels.insert(e.label);
    std::vector<Strand> out;
    for (int l : labels) {
        auto part = strands(chart, l);
        out.insert(out.end(), part.begin(), part.end());
    }
    return out;
}

std::vector<Id> edge_strand_map(const Chart& chart,
                                const std::vector<Strand>& list) {
    std::vector<Id> map(chart.edges.size(), kNone);
    for (Id i = 0; i < static_cast<Id>(list.size()); ++i)
        for (Id e : list[i].edges) map[e] = i;
    return map;
}

std::pair<Id, Id> middle_darts(const Chart& chart, Id white) {
    const auto& rot = chart.vertices[white].rotation;
    if (rot.size() != 6) throw std::invalid_argument("not a white vertex");
    for (int p = 0; p < 6; ++p) {
        bool run = true;
        for (int k = 0; k < 3; ++k)
            run = run && chart.dart_direction(rot[(p + k) % 6]) ==
                             Direction::Inward;
        bool rest = true;
        for (int k = 3; k < 6; ++k)
            rest = rest && chart.dart_direction(rot[(p + k) % 6]) ==
                               Direction::Outward;
        if (run && rest) return {rot[(p + 1) % 6], rot[(p + 4) % 6]};
    }
    throw std::invalid_argument("white vertex has no inward triple");
}

bool is_middle_dart(const Chart& chart, Id white, Id dart) {
    auto [mi, mo] = middle_darts(chart, white);
    return dart == mi || dart == mo;
}

bool is_middle(const Chart& chart, const Strand& s, Id white) {
    if (!s.has_endpoint(white)) throw std::invalid_argument("not incident");
    for (size_t i = 0; i < s.endpoints.size(); ++i)
        if (s.endpoints[i] == white &&
            is_middle_dart(chart, white, s.end_darts[i]))
            return true;
    return false;
}

std::pair<Id, Id> flank_strands(const Chart& chart,
                                const std::vector<Strand>& list,
                                const std::vector<Id>& by_edge, Id dart) {
    Id before = chart.rotation_prev(dart);
    Id after = chart.rotation_next(dart);
    Id a = by_edge[chart.darts[before].edge];
    Id b = by_edge[chart.darts[after].edge];
    if (a == kNone || b == kNone)
        throw std::invalid_argument("flanking darts leave the subgraph");
    (void)list;
    return {a, b};
}

std::vector<Id> bw_vertices(const Chart& chart, int label) {
    auto list = strands(chart, label);
    std::set<Id> found;
    for (const auto& s : list) {
        if (s.cls != StrandClass::Terminal) continue;
        for (Id v : s.endpoints)
            if (chart.vertices[v].kind == VertexKind::White) found.insert(v);
    }
    return {found.begin(), found.end()};
}

std::vector<ComponentWhiteCount> component_white_counts(const Chart& chart,
                                                        int label) {
    auto list = strands(chart, label);
    // Union strands sharing a white endpoint.
    std::vector<Id> parent(list.size());
    for (size_t i = 0; i < parent.size(); ++i) parent[i] = static_cast<Id>(i);
    std::function<Id(Id)> find = [&](Id x) {
        while (parent[x] != x) x = parent[x] = parent[parent[x]];
        return x;
    };
    std::unordered_map<Id, Id> white_first;
    for (size_t i = 0; i < list.size(); ++i) {
        for (Id v : list[i].endpoints) {
            if (chart.vertices[v].kind != VertexKind::White) continue;
            auto it = white_first.find(v);
            if (it == white_first.end())
                white_first[v] = static_cast<Id>(i);
            else
                parent[find(static_cast<Id>(i))] = find(it->second);
        }
    }
    std::unordered_map<Id, Id> root_index;
    std::vector<ComponentWhiteCount> out;
    for (size_t i = 0; i < list.size(); ++i) {
        Id r = find(static_cast<Id>(i));
        if (!root_index.count(r)) {
            root_index[r] = static_cast<Id>(out.size());
            out.emplace_back();
        }
        out[root_index[r]].strand_ids.push_back(static_cast<Id>(i));
    }
    for (auto& comp : out) {
        std::set<Id> whites;
        for (Id si : comp.strand_ids)
            for (Id v : list[si].endpoints)
                if (chart.vertices[v].kind == VertexKind::White)
                    whites.insert(v);
        comp.whites.assign(whites.begin(), whites.end());
        comp.white_count = static_cast<int>(whites.size());
    }
    return out;
}

std::pair<int, int> complexity(const Chart& chart) {
    int w = 0;
    for (const auto& v : chart.vertices)
        if (v.kind == VertexKind::White) ++w;
    int f = 0;
    for (const auto& s : all_strands(chart))
        if (s.cls == StrandClass::Free) ++f;
    return {w, -f};
}

}  // namespace chartforge
