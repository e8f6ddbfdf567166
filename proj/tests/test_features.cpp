#include "chartforge/chart.hpp"
#include "chartforge/parse.hpp"
#include "chartforge/strands.hpp"
#include "chartforge/validate.hpp"
#include "doctest.h"

using namespace chartforge;

namespace {

// One terminal edge of label 2 at a white vertex, a label-2 loop through it,
// and three label-3 edges ending at blacks (valid chart, not assumption-clean).
const char* kTermLoop =
    "chart n=4\n"
    "white w darts=t,x1,l1,y1,l2,z1\n"
    "black b darts=tb\n"
    "black bx darts=xb\n"
    "black by darts=yb\n"
    "black bz darts=zb\n"
    "edge et label=2 tail=tb head=t\n"
    "edge ex label=3 tail=xb head=x1\n"
    "edge el label=2 tail=l2 head=l1\n"
    "edge ey label=3 tail=y1 head=yb\n"
    "edge ez label=3 tail=z1 head=zb\n"
    "infinity face(t)\n";

}  // namespace

TEST_CASE("strand classes: terminal and loop; bw vertex found") {
    Chart c = build_chart(kTermLoop);
    auto rep = validate(c);
    for (auto& v : rep.violations)
        MESSAGE(v.rule, " at ", v.location, ": ", v.message);
    REQUIRE(rep.ok());

    auto list = strands(c, 2);
    REQUIRE(list.size() == 2);
    int terminals = 0, loops = 0;
    for (auto& s : list) {
        if (s.cls == StrandClass::Terminal) ++terminals;
        if (s.cls == StrandClass::Loop) ++loops;
    }
    CHECK(terminals == 1);
    CHECK(loops == 1);

    auto bw = bw_vertices(c, 2);
    REQUIRE(bw.size() == 1);
    CHECK(c.vertex_names[bw[0]] == "w");
    CHECK(bw_vertices(c, 4).size() == 0);
}

TEST_CASE("middle darts: exactly one inward and one outward middle") {
    Chart c = build_chart(kTermLoop);
    Id w = 0;
    REQUIRE(c.vertex_names[w] == "w");
    auto [mi, mo] = middle_darts(c, w);
    // rotation (t,x1,l1,y1,l2,z1): t,x1,l1 inward; y1,l2,z1 outward.
    CHECK(c.dart_names[mi] == "x1");
    CHECK(c.dart_names[mo] == "l2");
    int count = 0;
    for (Id d : c.vertices[w].rotation)
        if (is_middle_dart(c, w, d)) ++count;
    CHECK(count == 2);

    auto list = strands(c, 2);
    const Strand* term = nullptr;
    const Strand* loop = nullptr;
    for (auto& s : list) {
        if (s.cls == StrandClass::Terminal) term = &s;
        if (s.cls == StrandClass::Loop) loop = &s;
    }
    REQUIRE(term);
    REQUIRE(loop);
    CHECK(!is_middle(c, *term, w));  // t at position 0, not center
    CHECK(is_middle(c, *loop, w));   // l2 is the outward middle
}

TEST_CASE("flank strands around a white vertex") {
    Chart c = build_chart(kTermLoop);
    auto all = all_strands(c);
    auto by_edge_all = edge_strand_map(c, all);
    Id t_dart = kNone;
    for (Id d : c.vertices[0].rotation)
        if (c.dart_names[d] == "t") t_dart = d;
    REQUIRE(t_dart != kNone);
    auto [a, b] = flank_strands(c, all, by_edge_all, t_dart);
    // neighbours of t in the rotation: z1 (edge ez) before, x1 (edge ex) after
    CHECK(c.edge_names[all[a].edges[0]] == "ez");
    CHECK(c.edge_names[all[b].edges[0]] == "ex");
}

TEST_CASE("component white counts: disjoint hoops") {
    const char* two_hoops =
        "chart n=3\n"
        "phantom p1 darts=a1,a2\n"
        "phantom p2 darts=b1,b2\n"
        "edge e1 label=2 tail=a1 head=a2\n"
        "edge e2 label=2 tail=b1 head=b2\n"
        "place p1 in root\n"
        "place p2 in face(a1)\n"
        "infinity root\n";
    Chart c = build_chart(two_hoops);
    REQUIRE(validate(c).ok());
    auto comps = component_white_counts(c, 2);
    REQUIRE(comps.size() == 2);
    CHECK(comps[0].white_count == 0);
    CHECK(comps[1].white_count == 0);

    Embedding emb = embedding_or_throw(c);
    CHECK(emb.faces.size() == 3);  // V=0 E=2 C=0: F = 1 + 0 - 0 + 2
}
