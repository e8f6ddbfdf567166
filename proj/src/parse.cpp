#include "chartforge/parse.hpp"

#include <algorithm>
#include <fstream>
#include <map>
#include <sstream>

namespace chartforge {

namespace {

std::vector<std::string> split(const std::string& s, char sep) {
    std::vector<std::string> out;
    std::string cur;
    for (char c : s) {
        if (c == sep) {
            out.push_back(cur);
            cur.clear();
        } else {
            cur += c;
        }
    }
    out.push_back(cur);
    return out;
}

std::vector<std::string> tokens(const std::string& line) {
    std::istringstream in(line);
    std::vector<std::string> out;
    std::string t;
    while (in >> t) {
        if (t[0] == '#') break;
        out.push_back(t);
    }
    return out;
}

// "key=value" -> value, else error
std::string field(const std::string& tok, const std::string& key) {
    auto pos = tok.find('=');
    if (pos == std::string::npos || tok.substr(0, pos) != key)
        throw ParseError("expected " + key + "=..., got '" + tok + "'");
    return tok.substr(pos + 1);
}

// "face(d)" -> d; "root" -> empty
std::optional<std::string> face_key(const std::string& s) {
    if (s == "root") return std::nullopt;
    if (s.rfind("face(", 0) == 0 && s.back() == ')')
        return s.substr(5, s.size() - 6);
    throw ParseError("bad face key '" + s + "'");
}

bool name_less(const std::string& a, const std::string& b) {
    if (a.size() != b.size()) return a.size() < b.size();
    return a < b;
}

}  // namespace

Chart build_chart(const std::string& text) {
    Chart chart;
    std::map<std::string, Id> dart_ids, vertex_ids, edge_ids;
    struct PlaceLine {
        std::string element;
        std::optional<std::string> parent_dart;
        std::optional<std::string> outer_dart;
    };
    std::vector<PlaceLine> place_lines;
    std::optional<std::string> infinity_dart;
    bool have_header = false;

    std::istringstream in(text);
    std::string line;
    int lineno = 0;
    // Pass 1 collects edge lines so darts can be declared first.
    std::vector<std::vector<std::string>> edge_lines;
    while (std::getline(in, line)) {
        ++lineno;
        auto toks = tokens(line);
        if (toks.empty()) continue;
        const std::string& kw = toks[0];
        auto where = [&] { return " (line " + std::to_string(lineno) + ")"; };
        if (kw == "chart") {
            if (toks.size() != 2)
                throw ParseError("chart line needs n=<int>" + where());
            chart.degree_n = std::stoi(field(toks[1], "n"));
            if (chart.degree_n < 2)
                throw ParseError("chart degree must be at least 2" + where());
            have_header = true;
        } else if (kw == "white" || kw == "cross" || kw == "black" ||
                   kw == "phantom") {
            if (toks.size() != 3)
                throw ParseError(kw + " line needs <id> darts=..." + where());
            VertexKind kind = kw == "white"     ? VertexKind::White
                              : kw == "cross"   ? VertexKind::Crossing
                              : kw == "black"   ? VertexKind::Black
                                                : VertexKind::Phantom;
            if (vertex_ids.count(toks[1]))
                throw ParseError("duplicate vertex '" + toks[1] + "'" + where());
            Id v = chart.add_vertex(kind, toks[1]);
            vertex_ids[toks[1]] = v;
            auto names = split(field(toks[2], "darts"), ',');
            if (static_cast<int>(names.size()) != expected_degree(kind))
                throw ParseError(kw + " '" + toks[1] + "' needs " +
                                 std::to_string(expected_degree(kind)) +
                                 " darts" + where());
            for (const auto& dn : names) {
                if (dn.empty() || dart_ids.count(dn))
                    throw ParseError("duplicate or empty dart '" + dn + "'" +
                                     where());
                Id d = chart.add_dart(v, dn);
                dart_ids[dn] = d;
                chart.vertices[v].rotation.push_back(d);
            }
        } else if (kw == "edge") {
            edge_lines.push_back(toks);
        } else if (kw == "place") {
            if (toks.size() != 4 && toks.size() != 5)
                throw ParseError("place line malformed" + where());
            if (toks[2] != "in") throw ParseError("place line needs 'in'" + where());
            PlaceLine pl;
            pl.element = toks[1];
            pl.parent_dart = face_key(toks[3]);
            if (toks.size() == 5) pl.outer_dart = face_key(field(toks[4], "outer"));
            place_lines.push_back(pl);
        } else if (kw == "infinity") {
            if (toks.size() != 2) throw ParseError("infinity line malformed" + where());
            infinity_dart = face_key(toks[1]);
        } else {
            throw ParseError("unknown keyword '" + kw + "'" + where());
        }
    }
    if (!have_header) throw ParseError("missing 'chart n=<int>' header");

    for (const auto& toks : edge_lines) {
        if (toks.size() != 5) throw ParseError("edge line malformed");
        if (edge_ids.count(toks[1]))
            throw ParseError("duplicate edge '" + toks[1] + "'");
        int label = std::stoi(field(toks[2], "label"));
        auto tail_name = field(toks[3], "tail");
        auto head_name = field(toks[4], "head");
        if (!dart_ids.count(tail_name))
            throw DanglingReference("edge '" + toks[1] + "': unknown dart '" +
                                    tail_name + "'");
        if (!dart_ids.count(head_name))
            throw DanglingReference("edge '" + toks[1] + "': unknown dart '" +
                                    head_name + "'");
        Id t = dart_ids[tail_name], h = dart_ids[head_name];
        if (t == h) throw ParseError("edge '" + toks[1] + "' reuses one dart");
        for (Id d : {t, h})
            if (chart.darts[d].edge != kNone)
                throw ParseError("dart '" + chart.dart_names[d] +
                                 "' belongs to two edges");
        Id e = static_cast<Id>(chart.edges.size());
        chart.edges.push_back(Edge{label, t, h});
        chart.edge_names.push_back(toks[1]);
        chart.darts[t].edge = e;
        chart.darts[h].edge = e;
        edge_ids[toks[1]] = e;
    }

    for (Id d = 0; d < static_cast<Id>(chart.darts.size()); ++d)
        if (chart.darts[d].edge == kNone)
            throw DanglingReference("dart '" + chart.dart_names[d] +
                                    "' belongs to no edge");

    Components comps = components(chart);
    chart.placements.assign(comps.count(), Placement{});
    // Default outer anchor: the lowest dart of the component.
    std::vector<Id> lowest(comps.count(), kNone);
    for (Id d = 0; d < static_cast<Id>(chart.darts.size()); ++d) {
        Id c = comps.vertex_component[chart.darts[d].vertex];
        if (lowest[c] == kNone) lowest[c] = d;
    }
    for (Id c = 0; c < comps.count(); ++c)
        chart.placements[c].outer_anchor = lowest[c];

    auto resolve_dart = [&](const std::string& name) {
        auto it = dart_ids.find(name);
        if (it == dart_ids.end())
            throw DanglingReference("unknown dart '" + name + "'");
        return it->second;
    };
    std::vector<bool> placed(comps.count(), false);
    for (const auto& pl : place_lines) {
        Id comp;
        if (vertex_ids.count(pl.element)) {
            comp = comps.vertex_component[vertex_ids[pl.element]];
        } else if (edge_ids.count(pl.element)) {
            Id e = edge_ids[pl.element];
            comp = comps.vertex_component[chart.darts[chart.edges[e].tail].vertex];
        } else {
            throw DanglingReference("place: unknown element '" + pl.element + "'");
        }
        if (placed[comp])
            throw ParseError("component of '" + pl.element + "' placed twice");
        placed[comp] = true;
        if (pl.parent_dart)
            chart.placements[comp].parent_anchor = resolve_dart(*pl.parent_dart);
        if (pl.outer_dart)
            chart.placements[comp].outer_anchor = resolve_dart(*pl.outer_dart);
    }
    if (infinity_dart) chart.infinity_anchor = resolve_dart(*infinity_dart);
    return chart;
}

Chart load_chart_file(const std::string& path) {
    std::ifstream in(path);
    if (!in) throw ParseError("cannot open '" + path + "'");
    std::stringstream buf;
    buf << in.rdbuf();
    return build_chart(buf.str());
}

std::string render_text(const Chart& chart) {
    std::ostringstream out;
    out << "chart n=" << chart.degree_n << "\n";
    std::vector<Id> vs(chart.vertices.size());
    for (size_t i = 0; i < vs.size(); ++i) vs[i] = static_cast<Id>(i);
    std::sort(vs.begin(), vs.end(), [&](Id a, Id b) {
        return name_less(chart.vertex_names[a], chart.vertex_names[b]);
    });
    for (Id v : vs) {
        const auto& vert = chart.vertices[v];
        const char* kw = vert.kind == VertexKind::White     ? "white"
                         : vert.kind == VertexKind::Crossing ? "cross"
                         : vert.kind == VertexKind::Black    ? "black"
                                                             : "phantom";
        out << kw << " " << chart.vertex_names[v] << " darts=";
        for (size_t i = 0; i < vert.rotation.size(); ++i)
            out << (i ? "," : "") << chart.dart_names[vert.rotation[i]];
        out << "\n";
    }
    std::vector<Id> es(chart.edges.size());
    for (size_t i = 0; i < es.size(); ++i) es[i] = static_cast<Id>(i);
    std::sort(es.begin(), es.end(), [&](Id a, Id b) {
        return name_less(chart.edge_names[a], chart.edge_names[b]);
    });
    for (Id e : es) {
        const auto& edge = chart.edges[e];
        out << "edge " << chart.edge_names[e] << " label=" << edge.label
            << " tail=" << chart.dart_names[edge.tail]
            << " head=" << chart.dart_names[edge.head] << "\n";
    }

    Components comps = components(chart);
    std::vector<Id> anchor_vertex(comps.count(), kNone);
    for (Id c = 0; c < comps.count(); ++c) {
        Id best = kNone;
        for (Id v : comps.members[c])
            if (best == kNone ||
                name_less(chart.vertex_names[v], chart.vertex_names[best]))
                best = v;
        anchor_vertex[c] = best;
    }
    std::vector<Id> order(comps.count());
    for (Id c = 0; c < comps.count(); ++c) order[c] = c;
    std::sort(order.begin(), order.end(), [&](Id a, Id b) {
        return name_less(chart.vertex_names[anchor_vertex[a]],
                         chart.vertex_names[anchor_vertex[b]]);
    });
    for (Id c : order) {
        const auto& pl = chart.placements[c];
        out << "place " << chart.vertex_names[anchor_vertex[c]] << " in ";
        if (pl.parent_anchor)
            out << "face(" << chart.dart_names[*pl.parent_anchor] << ")";
        else
            out << "root";
        out << " outer=face(" << chart.dart_names[pl.outer_anchor] << ")\n";
    }
    if (chart.infinity_anchor)
        out << "infinity face(" << chart.dart_names[*chart.infinity_anchor]
            << ")\n";
    else
        out << "infinity root\n";
    return out.str();
}

}  // namespace chartforge
