#include "chartforge/graphs.hpp"

#include <algorithm>
#include <fstream>
#include <map>
#include <set>
#include <sstream>
#include <stdexcept>

namespace chartforge {

namespace {

// dart id = 2*edge + end, end 0 at vertex a, end 1 at vertex b
Id dart_vertex(const GraphTemplate& t, Id d) {
    const auto& e = t.edges[d / 2];
    return d % 2 == 0 ? e.a : e.b;
}
Id dart_twin(Id d) { return d ^ 1; }

// true when the dart points along the edge orientation (from-side)
int dart_orient_code(const GraphTemplate& t, Id d) {
    const auto& e = t.edges[d / 2];
    if (!e.oriented) return 0;
    bool from_side = (d % 2 == 0) == e.a_to_b;
    return from_side ? 2 : 1;
}

std::vector<std::vector<Id>> rotations(const GraphTemplate& t,
                                       bool include_terminals) {
    std::vector<std::vector<Id>> rot(t.vertices.size());
    for (Id v = 0; v < static_cast<Id>(t.vertices.size()); ++v) {
        for (Id e : t.vertices[v].edges_ccw) {
            if (!include_terminals && t.is_terminal_edge(e)) continue;
            if (t.edges[e].a == v)
                rot[v].push_back(2 * e);
            else
                rot[v].push_back(2 * e + 1);
        }
    }
    return rot;
}

struct DartMap {
    std::vector<Id> sigma;  // rotation next
    std::vector<Id> alpha;  // twin
    std::vector<bool> present;
};

DartMap dart_map(const GraphTemplate& t, bool include_terminals,
                 bool reflected) {
    DartMap m;
    size_t nd = 2 * t.edges.size();
    m.sigma.assign(nd, kNone);
    m.alpha.assign(nd, kNone);
    m.present.assign(nd, false);
    auto rot = rotations(t, include_terminals);
    for (auto& r : rot) {
        if (reflected) std::reverse(r.begin(), r.end());
        for (size_t i = 0; i < r.size(); ++i) {
            m.sigma[r[i]] = r[(i + 1) % r.size()];
            m.present[r[i]] = true;
        }
    }
    for (Id d = 0; d < static_cast<Id>(nd); ++d)
        if (m.present[d]) m.alpha[d] = dart_twin(d);
    return m;
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

std::string field(const std::string& tok, const std::string& key) {
    auto pos = tok.find('=');
    if (pos == std::string::npos || tok.substr(0, pos) != key)
        throw std::runtime_error("graph: expected " + key + "=...");
    return tok.substr(pos + 1);
}

}  // namespace

int GraphTemplate::white_count() const {
    int n = 0;
    for (auto& v : vertices) n += v.white ? 1 : 0;
    return n;
}

int GraphTemplate::black_count() const {
    return static_cast<int>(vertices.size()) - white_count();
}

bool GraphTemplate::has_white_loop() const {
    for (auto& e : edges)
        if (e.a == e.b) return true;
    return false;
}

bool GraphTemplate::connected() const {
    if (vertices.empty()) return true;
    std::vector<bool> seen(vertices.size(), false);
    std::vector<Id> stack{0};
    seen[0] = true;
    size_t n = 1;
    while (!stack.empty()) {
        Id v = stack.back();
        stack.pop_back();
        for (Id e : vertices[v].edges_ccw) {
            Id u = other_end(e, v);
            if (!seen[u]) {
                seen[u] = true;
                ++n;
                stack.push_back(u);
            }
        }
    }
    return n == vertices.size();
}

int GraphTemplate::euler_characteristic() const {
    auto m = dart_map(*this, true, false);
    int faces = 0;
    std::vector<bool> done(m.sigma.size(), false);
    for (Id d = 0; d < static_cast<Id>(m.sigma.size()); ++d) {
        if (!m.present[d] || done[d]) continue;
        ++faces;
        Id cur = d;
        do {
            done[cur] = true;
            cur = m.sigma[m.alpha[cur]];
        } while (cur != d);
    }
    return static_cast<int>(vertices.size()) -
           static_cast<int>(edges.size()) + faces;
}

GraphTemplate parse_graph(const std::string& text) {
    GraphTemplate t;
    std::map<std::string, Id> vids, eids;
    struct VLine {
        std::string name;
        bool white;
        std::vector<std::string> edge_names;
    };
    std::vector<VLine> vlines;
    struct ELine {
        std::string name, a, b;
    };
    std::vector<ELine> elines;
    struct OLine {
        std::string edge, from, to;
    };
    std::vector<OLine> olines;

    std::istringstream in(text);
    std::string line;
    while (std::getline(in, line)) {
        auto toks = tokens(line);
        if (toks.empty()) continue;
        if (toks[0] == "graph") {
            t.name = toks.size() > 1 ? toks[1] : "";
        } else if (toks[0] == "mode") {
            t.fixed_slots = toks.at(1) == "fixed";
        } else if (toks[0] == "white" || toks[0] == "black") {
            VLine v;
            v.name = toks.at(1);
            v.white = toks[0] == "white";
            std::string names = field(toks.at(2), "edges");
            std::string cur;
            for (char c : names + ",") {
                if (c == ',') {
                    if (!cur.empty()) v.edge_names.push_back(cur);
                    cur.clear();
                } else
                    cur += c;
            }
            vlines.push_back(v);
        } else if (toks[0] == "edge") {
            elines.push_back(ELine{toks.at(1), toks.at(2), toks.at(3)});
        } else if (toks[0] == "orient") {
            auto arrow = toks.at(2).find("->");
            if (arrow == std::string::npos)
                throw std::runtime_error("orient needs from->to");
            olines.push_back(OLine{toks.at(1), toks.at(2).substr(0, arrow),
                                   toks.at(2).substr(arrow + 2)});
        } else {
            throw std::runtime_error("graph: unknown keyword " + toks[0]);
        }
    }
    for (auto& v : vlines) {
        if (vids.count(v.name)) throw std::runtime_error("duplicate vertex");
        vids[v.name] = static_cast<Id>(t.vertices.size());
        t.vertices.push_back({v.white, {}});
        t.vertex_names.push_back(v.name);
    }
    for (auto& e : elines) {
        if (eids.count(e.name)) throw std::runtime_error("duplicate edge");
        if (!vids.count(e.a) || !vids.count(e.b))
            throw std::runtime_error("edge '" + e.name + "' has unknown ends");
        eids[e.name] = static_cast<Id>(t.edges.size());
        t.edges.push_back({vids[e.a], vids[e.b], false, true});
        t.edge_names.push_back(e.name);
    }
    for (size_t i = 0; i < vlines.size(); ++i) {
        for (auto& en : vlines[i].edge_names) {
            if (!eids.count(en))
                throw std::runtime_error("rotation uses unknown edge " + en);
            t.vertices[i].edges_ccw.push_back(eids[en]);
        }
        int want = t.vertices[i].white ? 3 : 1;
        if (static_cast<int>(t.vertices[i].edges_ccw.size()) != want)
            throw std::runtime_error("vertex " + vlines[i].name +
                                     " has wrong degree");
    }
    for (auto& o : olines) {
        if (!eids.count(o.edge) || !vids.count(o.from) || !vids.count(o.to))
            throw std::runtime_error("orient line references unknown ids");
        auto& e = t.edges[eids[o.edge]];
        if (!((e.a == vids[o.from] && e.b == vids[o.to]) ||
              (e.b == vids[o.from] && e.a == vids[o.to])))
            throw std::runtime_error("orient endpoints mismatch on " + o.edge);
        e.oriented = true;
        e.a_to_b = e.a == vids[o.from];
    }
    for (auto& e : t.edges)
        if (e.a == e.b) throw std::runtime_error("loops are not supported");
    return t;
}

GraphTemplate load_graph_file(const std::string& path) {
    std::ifstream in(path);
    if (!in) throw std::runtime_error("cannot open " + path);
    std::stringstream buf;
    buf << in.rdbuf();
    GraphTemplate t = parse_graph(buf.str());
    if (t.name.empty()) t.name = path;
    return t;
}

std::string render_graph(const GraphTemplate& t) {
    std::ostringstream out;
    out << "graph " << t.name << "\n";
    out << "mode " << (t.fixed_slots ? "fixed" : "abstract") << "\n";
    for (Id v = 0; v < static_cast<Id>(t.vertices.size()); ++v) {
        out << (t.vertices[v].white ? "white " : "black ") << t.vertex_names[v]
            << " edges=";
        for (size_t i = 0; i < t.vertices[v].edges_ccw.size(); ++i)
            out << (i ? "," : "") << t.edge_names[t.vertices[v].edges_ccw[i]];
        out << "\n";
    }
    for (Id e = 0; e < static_cast<Id>(t.edges.size()); ++e)
        out << "edge " << t.edge_names[e] << " " << t.vertex_names[t.edges[e].a]
            << " " << t.vertex_names[t.edges[e].b] << "\n";
    for (Id e = 0; e < static_cast<Id>(t.edges.size()); ++e)
        if (t.edges[e].oriented) {
            Id from = t.edges[e].a_to_b ? t.edges[e].a : t.edges[e].b;
            Id to = t.other_end(e, from);
            out << "orient " << t.edge_names[e] << " " << t.vertex_names[from]
                << "->" << t.vertex_names[to] << "\n";
        }
    return out.str();
}

std::vector<TemplateFace> internal_faces(const GraphTemplate& t) {
    auto m = dart_map(t, false, false);
    std::vector<TemplateFace> out;
    std::vector<bool> done(m.sigma.size(), false);
    for (Id d0 = 0; d0 < static_cast<Id>(m.sigma.size()); ++d0) {
        if (!m.present[d0] || done[d0]) continue;
        TemplateFace f;
        std::set<Id> whites;
        std::map<Id, int> edge_uses, vertex_uses;
        Id d = d0;
        do {
            done[d] = true;
            Id nxt = m.sigma[m.alpha[d]];
            Id corner_vertex = dart_vertex(t, nxt);
            f.corners.push_back({corner_vertex, d / 2, nxt / 2});
            whites.insert(corner_vertex);
            edge_uses[d / 2]++;
            vertex_uses[corner_vertex]++;
            d = nxt;
        } while (d != d0);
        f.distinct_whites.assign(whites.begin(), whites.end());
        for (auto& [e, n] : edge_uses)
            if (n > 1) f.embedded_circle = false;
        for (auto& [v, n] : vertex_uses)
            if (n > 1) f.embedded_circle = false;
        out.push_back(std::move(f));
    }
    return out;
}

std::vector<std::vector<Id>> white_corner_faces(
    const GraphTemplate& t, const std::vector<TemplateFace>& faces) {
    auto m = dart_map(t, false, false);
    std::vector<Id> dart_face(m.sigma.size(), kNone);
    for (Id f = 0; f < static_cast<Id>(faces.size()); ++f) {
        // reconstruct the orbit from any corner
        const auto& c0 = faces[f].corners.front();
        Id d0 = t.edges[c0.edge_out].a == c0.vertex ? 2 * c0.edge_out
                                                    : 2 * c0.edge_out + 1;
        Id d = d0;
        do {
            dart_face[d] = f;
            d = m.sigma[m.alpha[d]];
        } while (d != d0);
    }
    auto rot = rotations(t, false);
    std::vector<std::vector<Id>> out(t.vertices.size());
    for (Id v = 0; v < static_cast<Id>(t.vertices.size()); ++v) {
        if (!t.vertices[v].white) continue;
        for (Id d : rot[v]) out[v].push_back(dart_face[d]);
    }
    return out;
}

namespace {

// vertex attribute bytes for canonical encoding
std::string vertex_tag(const GraphTemplate& t, Id v, bool reversed) {
    std::string tag = t.vertices[v].white ? "w" : "b";
    if (!t.fixed_slots && t.vertices[v].white) {
        std::vector<int> dirs;
        for (Id e : t.vertices[v].edges_ccw) {
            if (!t.is_terminal_edge(e)) continue;
            const auto& ed = t.edges[e];
            if (!ed.oriented) {
                dirs.push_back(0);
            } else {
                Id from = ed.a_to_b ? ed.a : ed.b;
                int code = t.vertices[from].white ? 2 : 1;  // 1 = inward
                if (reversed) code = 3 - code;
                dirs.push_back(code);
            }
        }
        std::sort(dirs.begin(), dirs.end());
        tag += std::to_string(dirs.size());
        for (int d : dirs) tag += static_cast<char>('0' + d);
    }
    return tag;
}

std::string encode_from(const GraphTemplate& t, const DartMap& m, Id root,
                        bool reversed) {
    std::vector<Id> idx(m.sigma.size(), kNone);
    std::vector<Id> order;
    idx[root] = 0;
    order.push_back(root);
    for (size_t q = 0; q < order.size(); ++q) {
        for (Id nxt : {m.sigma[order[q]], m.alpha[order[q]]}) {
            if (idx[nxt] == kNone) {
                idx[nxt] = static_cast<Id>(order.size());
                order.push_back(nxt);
            }
        }
    }
    std::ostringstream out;
    for (Id d : order) {
        int oc = dart_orient_code(t, d);
        if (reversed && oc) oc = 3 - oc;
        out << idx[m.sigma[d]] << "," << idx[m.alpha[d]] << ","
            << vertex_tag(t, dart_vertex(t, d), reversed) << "," << oc << ";";
    }
    return out.str();
}

std::string min_encoding(const GraphTemplate& t, bool reflected,
                         bool reversed) {
    auto m = dart_map(t, t.fixed_slots, reflected);
    std::string best;
    for (Id d = 0; d < static_cast<Id>(m.sigma.size()); ++d) {
        if (!m.present[d]) continue;
        std::string enc = encode_from(t, m, d, reversed);
        if (best.empty() || enc < best) best = enc;
    }
    if (best.empty()) best = "(empty)";
    return best;
}

}  // namespace

ROClass ro_canonical(const GraphTemplate& t) {
    std::string best;
    for (bool refl : {false, true})
        for (bool rev : {false, true}) {
            std::string enc = min_encoding(t, refl, rev);
            if (best.empty() || enc < best) best = enc;
        }
    return ROClass{best};
}

GraphTemplate reflect(const GraphTemplate& t) {
    GraphTemplate out = t;
    for (auto& v : out.vertices)
        std::reverse(v.edges_ccw.begin(), v.edges_ccw.end());
    out.name = t.name + "~r";
    return out;
}

GraphTemplate reverse_all(const GraphTemplate& t) {
    GraphTemplate out = t;
    for (auto& e : out.edges)
        if (e.oriented) e.a_to_b = !e.a_to_b;
    out.name = t.name + "~*";
    return out;
}

namespace {

struct ChartSlot {
    Id strand;
    Id dart;
};

struct ChartSide {
    std::vector<Strand> list;
    // chart white -> its three m-slots in rotation order
    std::map<Id, std::vector<ChartSlot>> slots;
};

ChartSide chart_side(const Chart& chart, int m) {
    ChartSide side;
    side.list = strands(chart, m);
    auto by_edge = edge_strand_map(chart, side.list);
    for (Id v = 0; v < static_cast<Id>(chart.vertices.size()); ++v) {
        if (chart.vertices[v].kind != VertexKind::White) continue;
        std::vector<ChartSlot> sl;
        for (Id d : chart.vertices[v].rotation) {
            if (chart.dart_label(d) != m) continue;
            sl.push_back({by_edge[chart.darts[d].edge], d});
        }
        if (sl.size() == 3) side.slots[v] = sl;
    }
    return side;
}

// endpoint whose end dart is outward (the strand's source vertex)
std::optional<Id> strand_source(const Chart& chart, const Strand& s) {
    if (s.closed) return std::nullopt;
    for (size_t i = 0; i < s.end_darts.size(); ++i)
        if (chart.dart_direction(s.end_darts[i]) == Direction::Outward)
            return s.endpoints[i];
    return std::nullopt;
}

bool is_terminal_strand(const Chart& chart, const Strand& s) {
    return s.cls == StrandClass::Terminal;
}

// template rotation, terminal edges filtered out unless fixed
std::vector<Id> trot(const GraphTemplate& t, Id v) {
    std::vector<Id> out;
    for (Id e : t.vertices[v].edges_ccw)
        if (t.fixed_slots || !t.is_terminal_edge(e)) out.push_back(e);
    return out;
}

struct Matcher {
    const Chart& chart;
    const ChartSide& side;
    const GraphTemplate& t;
    std::vector<Id> v2c;
    std::vector<Id> e2s;
    std::set<Id> used_white, used_strand;

    Matcher(const Chart& c, const ChartSide& s, const GraphTemplate& tp)
        : chart(c), side(s), t(tp) {
        v2c.assign(t.vertices.size(), kNone);
        e2s.assign(t.edges.size(), kNone);
    }

    bool terminal_dir_ok(Id te, const Strand& s) const {
        const auto& ed = t.edges[te];
        if (!ed.oriented) return true;
        Id from = ed.a_to_b ? ed.a : ed.b;
        bool black_to_white = !t.vertices[from].white;
        auto src = strand_source(chart, s);
        if (!src) return false;
        return black_to_white ==
               (chart.vertices[*src].kind == VertexKind::Black);
    }

    bool internal_dir_ok(Id te, const Strand& s, Id chart_from) const {
        const auto& ed = t.edges[te];
        if (!ed.oriented) return true;
        auto src = strand_source(chart, s);
        return src && *src == chart_from;
    }

    // aligned chart slots for a white: full list (fixed) or non-terminal only
    std::vector<ChartSlot> chart_rot(Id cw) const {
        const auto& sl = side.slots.at(cw);
        if (t.fixed_slots) return sl;
        std::vector<ChartSlot> out;
        for (const auto& s : sl)
            if (!is_terminal_strand(chart, side.list[s.strand])) out.push_back(s);
        return out;
    }

    int chart_terminal_count(Id cw) const {
        int n = 0;
        for (const auto& s : side.slots.at(cw))
            if (is_terminal_strand(chart, side.list[s.strand])) ++n;
        return n;
    }

    int template_stub_count(Id tv) const {
        int n = 0;
        for (Id e : t.vertices[tv].edges_ccw)
            if (t.is_terminal_edge(e)) ++n;
        return n;
    }

    // Deterministic propagation given the root assignment.
    bool run(Id root, Id cw, int offset, TemplateEmbedding& out) {
        v2c.assign(t.vertices.size(), kNone);
        e2s.assign(t.edges.size(), kNone);
        used_white.clear();
        used_strand.clear();
        std::vector<std::tuple<Id, Id, int>> queue{{root, cw, offset}};
        while (!queue.empty()) {
            auto [tv, cv, off] = queue.back();
            queue.pop_back();
            if (v2c[tv] != kNone) {
                if (v2c[tv] != cv) return false;
                continue;
            }
            if (used_white.count(cv)) return false;
            if (!side.slots.count(cv)) return false;
            auto rot = trot(t, tv);
            auto crot = chart_rot(cv);
            if (rot.size() != crot.size()) return false;
            if (!t.fixed_slots &&
                template_stub_count(tv) != chart_terminal_count(cv))
                return false;
            v2c[tv] = cv;
            used_white.insert(cv);
            size_t k = rot.size();
            for (size_t j = 0; j < k; ++j) {
                Id te = rot[j];
                const ChartSlot& cs = crot[(j + off) % k];
                const Strand& s = side.list[cs.strand];
                bool want_terminal = t.is_terminal_edge(te);
                if (want_terminal != is_terminal_strand(chart, s)) return false;
                if (e2s[te] != kNone) {
                    if (e2s[te] != cs.strand) return false;
                    continue;
                }
                if (used_strand.count(cs.strand)) return false;
                e2s[te] = cs.strand;
                used_strand.insert(cs.strand);
                if (want_terminal) {
                    if (!terminal_dir_ok(te, s)) return false;
                    continue;
                }
                if (s.closed || s.endpoints[0] == s.endpoints[1])
                    return false;  // hoops/rings/loops carry no template edge
                Id tu = t.other_end(te, tv);
                Id cu = s.endpoints[0] == cv ? s.endpoints[1] : s.endpoints[0];
                if (!s.has_endpoint(cv)) return false;
                const auto& ed = t.edges[te];
                Id tfrom = ed.a_to_b ? ed.a : ed.b;
                if (ed.oriented &&
                    !internal_dir_ok(te, s, tfrom == tv ? cv : cu))
                    return false;
                // offset for tu: align te's position with the strand's dart
                if (!side.slots.count(cu)) return false;
                auto urot = trot(t, tu);
                auto curot = chart_rot(cu);
                if (urot.size() != curot.size()) return false;
                Id udart = kNone;
                for (size_t i = 0; i < s.end_darts.size(); ++i)
                    if (s.endpoints[i] == cu) udart = s.end_darts[i];
                int ju = -1, pu = -1;
                for (size_t i = 0; i < urot.size(); ++i)
                    if (urot[i] == te) ju = static_cast<int>(i);
                for (size_t i = 0; i < curot.size(); ++i)
                    if (curot[i].dart == udart) pu = static_cast<int>(i);
                if (ju < 0 || pu < 0) return false;
                int uoff =
                    (pu - ju + static_cast<int>(urot.size()) * 2) %
                    static_cast<int>(urot.size());
                queue.emplace_back(tu, cu, uoff);
            }
        }
        for (Id v = 0; v < static_cast<Id>(t.vertices.size()); ++v)
            if (t.vertices[v].white && v2c[v] == kNone) return false;

        // In abstract mode, bind terminal edges to terminal strands now.
        if (!t.fixed_slots) {
            for (Id e = 0; e < static_cast<Id>(t.edges.size()); ++e) {
                if (!t.is_terminal_edge(e)) continue;
                Id tv = t.white_end(e);
                Id cv = v2c[tv];
                bool ok = false;
                for (const auto& cs : side.slots.at(cv)) {
                    const Strand& s = side.list[cs.strand];
                    if (!is_terminal_strand(chart, s)) continue;
                    if (used_strand.count(cs.strand)) continue;
                    if (!terminal_dir_ok(e, s)) continue;
                    e2s[e] = cs.strand;
                    used_strand.insert(cs.strand);
                    ok = true;
                    break;
                }
                if (!ok) return false;
            }
        }
        out.vertex_to_chart = v2c;
        out.edge_to_strand = e2s;
        return true;
    }
};

}  // namespace

std::optional<TemplateEmbedding> contains_template(const Chart& chart, int m,
                                                   const GraphTemplate& t) {
    if (t.white_count() == 0) return std::nullopt;
    ChartSide side = chart_side(chart, m);
    Matcher matcher(chart, side, t);
    Id root = kNone;
    for (Id v = 0; v < static_cast<Id>(t.vertices.size()); ++v)
        if (t.vertices[v].white) { root = v; break; }
    size_t k = trot(t, root).size();
    for (const auto& [cw, sl] : side.slots) {
        (void)sl;
        size_t koff = std::max<size_t>(k, 1);
        for (size_t off = 0; off < koff; ++off) {
            TemplateEmbedding emb;
            if (matcher.run(root, cw, static_cast<int>(off), emb)) return emb;
        }
    }
    return std::nullopt;
}

std::optional<TemplateEmbedding> contains_template_ro(const Chart& chart,
                                                      int m,
                                                      const GraphTemplate& t) {
    GraphTemplate r = reflect(t);
    for (const GraphTemplate& v :
         {t, reverse_all(t), r, reverse_all(r)}) {
        if (auto emb = contains_template(chart, m, v)) return emb;
    }
    return std::nullopt;
}

}  // namespace chartforge
