#include "chartforge/enumerate.hpp"

#include <algorithm>
#include <set>
#include <stdexcept>

#include "chartforge/orient.hpp"

namespace chartforge {

namespace {

bool lens_l32_pass(const GraphTemplate& t) {
    // Reject when every consistent orientation gives some feelerless
    // two-angled disk an edge that is middle at both boundary whites: such a
    // disk forces an empty lens, which minimal charts exclude.
    auto raw = enumerate_raw_orientations(t);
    if (raw.empty()) return true;  // assumption2 filter reports this case
    auto faces = internal_faces(t);
    for (const auto& a : raw) {
        bool seeded = false;
        for (const auto& f : faces) {
            if (f.corners.size() != 2 || !f.embedded_circle) continue;
            Id u = f.corners[0].vertex, v = f.corners[1].vertex;
            for (Id e : {f.corners[0].edge_in, f.corners[0].edge_out}) {
                if (a.middle_edge[u] == e && a.middle_edge[v] == e)
                    seeded = true;
            }
        }
        if (!seeded) return true;  // a lens-free orientation exists
    }
    return false;
}

std::vector<EnumFilter> make_filters() {
    std::vector<EnumFilter> fs;
    fs.push_back({"connected", "component hypothesis",
                  [](const GraphTemplate& t) { return t.connected(); }});
    fs.push_back({"planar", "spherical embedding",
                  [](const GraphTemplate& t) {
                      return t.euler_characteristic() == 2;
                  }});
    fs.push_back({"no-loop", "L14.6",
                  [](const GraphTemplate& t) { return !t.has_white_loop(); }});
    fs.push_back({"black-parity", "trivalence handshake",
                  [](const GraphTemplate& t) {
                      int internal = 0;
                      for (Id e = 0; e < static_cast<Id>(t.edges.size()); ++e)
                          if (!t.is_terminal_edge(e)) ++internal;
                      return 2 * internal + t.black_count() ==
                             3 * t.white_count();
                  }});
    fs.push_back({"assumption2", "A2 with condition (iii)",
                  [](const GraphTemplate& t) {
                      for (Id v = 0; v < static_cast<Id>(t.vertices.size());
                           ++v) {
                          if (!t.vertices[v].white) continue;
                          int stubs = 0;
                          for (Id e : t.vertices[v].edges_ccw)
                              if (t.is_terminal_edge(e)) ++stubs;
                          if (stubs > 1) return false;
                      }
                      return orientation_feasible(t);
                  }});
    fs.push_back({"lemma4-1", "L4.1",
                  [](const GraphTemplate& t) { return t.white_count() != 1; }});
    fs.push_back({"lens-l32", "L3.2", lens_l32_pass});
    return fs;
}

struct Builder {
    int whites;
    // slot s = 3*w + k; partner[s]: kNone unset, -2 terminal, else slot
    std::vector<Id> partner;
    long long budget;
    long long steps = 0;
    bool exceeded = false;

    std::vector<const EnumFilter*> filters;
    bool emit_rejected;
    std::set<std::string> seen;
    EnumerationResult* result;

    static constexpr Id kTerminal = -2;

    GraphTemplate build() const {
        GraphTemplate t;
        t.name = "enum";
        for (int w = 0; w < whites; ++w) {
            t.vertices.push_back({true, {}});
            t.vertex_names.push_back("w" + std::to_string(w + 1));
        }
        std::vector<std::vector<Id>> rot(whites);
        std::map<int, Id> edge_of_slot;
        int nblack = 0;
        for (int s = 0; s < 3 * whites; ++s) {
            if (partner[s] == kTerminal) {
                Id b = static_cast<Id>(t.vertices.size());
                t.vertices.push_back({false, {}});
                t.vertex_names.push_back("k" + std::to_string(++nblack));
                Id e = static_cast<Id>(t.edges.size());
                t.edges.push_back({s / 3, b, false, true});
                t.edge_names.push_back("t" + std::to_string(e + 1));
                t.vertices[b].edges_ccw.push_back(e);
                rot[s / 3].push_back(e);
            } else if (partner[s] > s) {
                Id e = static_cast<Id>(t.edges.size());
                t.edges.push_back({s / 3, partner[s] / 3, false, true});
                t.edge_names.push_back("e" + std::to_string(e + 1));
                rot[s / 3].push_back(e);
                edge_of_slot[partner[s]] = e;
            } else {
                rot[s / 3].push_back(edge_of_slot.at(s));
            }
        }
        for (int w = 0; w < whites; ++w) t.vertices[w].edges_ccw = rot[w];
        return t;
    }

    void leaf() {
        GraphTemplate t = build();
        ++result->raw_candidates;
        for (const EnumFilter* f : filters) {
            if (!f->pass(t)) {
                result->rejected_by_filter[f->name]++;
                if (emit_rejected)
                    result->rejected.push_back({t, f->name});
                return;
            }
        }
        std::string key = ro_canonical(t).canonical_form;
        if (seen.insert(key).second) result->classes.push_back(t);
    }

    void rec(int s) {
        if (exceeded) return;
        if (++steps > budget) {
            exceeded = true;
            return;
        }
        int total = 3 * whites;
        while (s < total && partner[s] != kNone) ++s;
        if (s == total) {
            leaf();
            return;
        }
        // terminal stub
        partner[s] = kTerminal;
        rec(s + 1);
        partner[s] = kNone;
        // pair with a later slot on another white; untouched whites are
        // interchangeable, so only their first representative is tried
        bool fresh_seen = false;
        for (int s2 = s + 1; s2 < total; ++s2) {
            if (partner[s2] != kNone || s2 / 3 == s / 3) continue;
            bool fresh = true;
            for (int k = 3 * (s2 / 3); k < 3 * (s2 / 3) + 3; ++k)
                if (partner[k] != kNone) fresh = false;
            if (fresh) {
                if (fresh_seen) continue;  // symmetric to the first fresh white
                if (s2 % 3 != 0) continue; // rotate fresh whites to slot 0
                fresh_seen = true;
            }
            partner[s] = s2;
            partner[s2] = s;
            rec(s + 1);
            partner[s] = kNone;
            partner[s2] = kNone;
        }
    }
};

}  // namespace

const std::vector<EnumFilter>& known_filters() {
    static const std::vector<EnumFilter> fs = make_filters();
    return fs;
}

std::vector<std::string> paper_preset() {
    return {"connected", "planar",     "no-loop", "black-parity",
            "assumption2", "lemma4-1", "lens-l32"};
}

EnumerationResult enumerate_components(const EnumerationOptions& opt) {
    if (opt.whites < 1 || opt.whites > 6)
        throw std::invalid_argument("enumeration supports 1..6 whites");
    EnumerationResult result;
    Builder b;
    b.whites = opt.whites;
    b.partner.assign(3 * opt.whites, kNone);
    b.budget = opt.budget;
    b.emit_rejected = opt.emit_rejected;
    b.result = &result;
    for (const auto& name : opt.filters) {
        bool found = false;
        for (const auto& f : known_filters())
            if (f.name == name) {
                b.filters.push_back(&f);
                found = true;
            }
        if (!found) throw std::invalid_argument("unknown filter " + name);
    }
    b.rec(0);
    result.budget_exceeded = b.exceeded;
    return result;
}

}  // namespace chartforge
