#pragma once

// Test-only oracles, independent of the library's canonical/matching code.

#include <algorithm>
#include <map>
#include <set>
#include <vector>

#include "chartforge/graphs.hpp"

namespace oracles {

using chartforge::GraphTemplate;
using chartforge::Id;
using chartforge::kNone;

// rotation of (edge, dir-annotation) pairs at a vertex; terminal slots
// dropped in abstract mode, with bw info recorded separately
struct SimpleVertex {
    std::vector<Id> rot;
    std::vector<int> stub_dirs;  // sorted; 0 unknown, 1 in at white, 2 out
    bool white;
};

struct SimpleGraph {
    std::vector<SimpleVertex> verts;
    std::vector<std::pair<Id, Id>> edges;  // white endpoints (kNone = black)
    std::vector<int> dir;                  // 0 none, 1 a->b, 2 b->a
};

inline SimpleGraph simplify(const GraphTemplate& t) {
    SimpleGraph g;
    std::map<Id, Id> vmap;
    for (Id v = 0; v < static_cast<Id>(t.vertices.size()); ++v) {
        if (!t.vertices[v].white) continue;
        vmap[v] = static_cast<Id>(g.verts.size());
        g.verts.push_back({{}, {}, true});
    }
    std::map<Id, Id> emap;
    for (Id e = 0; e < static_cast<Id>(t.edges.size()); ++e) {
        if (t.is_terminal_edge(e)) {
            Id w = vmap[t.white_end(e)];
            int d = 0;
            if (t.edges[e].oriented) {
                Id from = t.edges[e].a_to_b ? t.edges[e].a : t.edges[e].b;
                d = t.vertices[from].white ? 2 : 1;
            }
            g.verts[w].stub_dirs.push_back(d);
            continue;
        }
        emap[e] = static_cast<Id>(g.edges.size());
        Id a = vmap[t.edges[e].a], b = vmap[t.edges[e].b];
        int d = 0;
        if (t.edges[e].oriented) d = t.edges[e].a_to_b ? 1 : 2;
        g.edges.emplace_back(a, b);
        g.dir.push_back(d);
    }
    for (Id v = 0; v < static_cast<Id>(t.vertices.size()); ++v) {
        if (!t.vertices[v].white) continue;
        for (Id e : t.vertices[v].edges_ccw) {
            if (t.fixed_slots) {
                // keep stub slots as sentinel edge id kNone
                if (t.is_terminal_edge(e)) {
                    g.verts[vmap[v]].rot.push_back(kNone);
                    continue;
                }
            } else if (t.is_terminal_edge(e)) {
                continue;
            }
            g.verts[vmap[v]].rot.push_back(emap[e]);
        }
        std::sort(g.verts[vmap[v]].stub_dirs.begin(),
                  g.verts[vmap[v]].stub_dirs.end());
    }
    return g;
}

inline SimpleGraph variant(SimpleGraph g, bool refl, bool rev) {
    if (refl)
        for (auto& v : g.verts) std::reverse(v.rot.begin(), v.rot.end());
    if (rev) {
        for (auto& d : g.dir)
            if (d) d = 3 - d;
        for (auto& v : g.verts)
            for (auto& s : v.stub_dirs)
                if (s) s = 3 - s;
        for (auto& v : g.verts)
            std::sort(v.stub_dirs.begin(), v.stub_dirs.end());
    }
    return g;
}

// Exhaustive embedded-isomorphism over vertex bijections with cyclic
// rotation alignment.
inline bool iso_search(const SimpleGraph& A, const SimpleGraph& B,
                       std::vector<Id>& map, std::vector<Id>& emap, size_t v) {
    size_t n = A.verts.size();
    if (v == n) return true;
    for (Id bv = 0; bv < static_cast<Id>(n); ++bv) {
        if (std::find(map.begin(), map.end(), bv) != map.end()) continue;
        if (A.verts[v].rot.size() != B.verts[bv].rot.size()) continue;
        if (A.verts[v].stub_dirs != B.verts[bv].stub_dirs) continue;
        size_t k = A.verts[v].rot.size();
        for (size_t off = 0; off < std::max<size_t>(k, 1); ++off) {
            // try aligning rotations at this offset
            std::vector<Id> emap2 = emap;
            std::vector<Id> map2 = map;
            map2[v] = bv;
            bool ok = true;
            for (size_t j = 0; j < k && ok; ++j) {
                Id ea = A.verts[v].rot[j];
                Id eb = B.verts[bv].rot[(j + off) % k];
                if ((ea == kNone) != (eb == kNone)) { ok = false; break; }
                if (ea == kNone) continue;
                if (emap2[ea] != kNone) {
                    if (emap2[ea] != eb) ok = false;
                    continue;
                }
                // endpoints must be compatible under the partial map
                auto [aa, ab] = A.edges[ea];
                auto [ba, bb] = B.edges[eb];
                Id au = aa == static_cast<Id>(v) ? ab : aa;
                Id bu = ba == bv ? bb : ba;
                if (map2[au] != kNone && map2[au] != bu) { ok = false; break; }
                // direction relative to this endpoint
                int da = A.dir[ea], db = B.dir[eb];
                if (da || db) {
                    auto rel = [](const std::pair<Id, Id>& e, int d, Id at) {
                        if (!d) return 0;
                        bool from_a = d == 1;
                        bool at_a = e.first == at;
                        return (from_a == at_a) ? 2 : 1;  // 2 = outgoing
                    };
                    if (rel(A.edges[ea], da, static_cast<Id>(v)) !=
                        rel(B.edges[eb], db, bv)) {
                        ok = false;
                        break;
                    }
                }
                emap2[ea] = eb;
            }
            if (!ok) continue;
            std::swap(map, map2);
            std::swap(emap, emap2);
            if (iso_search(A, B, map, emap, v + 1)) return true;
            std::swap(map, map2);
            std::swap(emap, emap2);
        }
    }
    return false;
}

inline bool embedded_iso(const SimpleGraph& A, const SimpleGraph& B) {
    if (A.verts.size() != B.verts.size() || A.edges.size() != B.edges.size())
        return false;
    std::vector<Id> map(A.verts.size(), kNone);
    std::vector<Id> emap(A.edges.size(), kNone);
    return iso_search(A, B, map, emap, 0);
}

// Brute-force RO-equivalence: all four variants, all bijections.
inline bool ro_equivalent_brute(const GraphTemplate& a,
                                const GraphTemplate& b) {
    SimpleGraph A = simplify(a);
    for (bool refl : {false, true})
        for (bool rev : {false, true})
            if (embedded_iso(A, variant(simplify(b), refl, rev))) return true;
    return false;
}

}  // namespace oracles
