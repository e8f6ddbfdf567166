#include <string>

#include "chartforge/chart.hpp"
#include "chartforge/parse.hpp"
#include "chartforge/strands.hpp"
#include "chartforge/validate.hpp"
#include "doctest.h"

using namespace chartforge;

namespace {

const char* kEmpty = "chart n=3\ninfinity root\n";

const char* kHoop =
    "chart n=4\n"
    "phantom p1 darts=h1,h2\n"
    "edge e1 label=2 tail=h1 head=h2\n"
    "infinity root\n";

// Two whites joined by six parallel edges, labels alternating 2,3.
// Rotations reversed at w2, inward triple at each end.
const char* kTheta6 =
    "chart n=4\n"
    "white w1 darts=a1,b1,c1,d1,f1,g1\n"
    "white w2 darts=g2,f2,d2,c2,b2,a2\n"
    "edge ea label=2 tail=a2 head=a1\n"
    "edge eb label=3 tail=b2 head=b1\n"
    "edge ec label=2 tail=c2 head=c1\n"
    "edge ed label=3 tail=d1 head=d2\n"
    "edge ef label=2 tail=f1 head=f2\n"
    "edge eg label=3 tail=g1 head=g2\n"
    "infinity face(a1)\n";

}  // namespace

TEST_CASE("empty chart has one face and passes validation") {
    Chart c = build_chart(kEmpty);
    CHECK(validate(c).ok());
    Embedding emb = embedding_or_throw(c);
    CHECK(emb.faces.size() == 1);
    CHECK(emb.infinity_face == 0);
    auto [w, mf] = complexity(c);
    CHECK(w == 0);
    CHECK(mf == 0);
    CHECK(!chart_type(c).has_value());
}

TEST_CASE("single hoop: two faces, Euler holds") {
    Chart c = build_chart(kHoop);
    auto rep = validate(c);
    for (auto& v : rep.violations) CAPTURE(v.rule + " " + v.message);
    CHECK(rep.ok());
    Embedding emb = embedding_or_throw(c);
    CHECK(emb.faces.size() == 2);
    auto list = strands(c, 2);
    REQUIRE(list.size() == 1);
    CHECK(list[0].cls == StrandClass::Hoop);
    CHECK(!chart_type(c).has_value());
    // simple hoop violates A3
    auto rep2 = check_assumptions(c);
    CHECK(!rep2.ok());
    CHECK(rep2.violations[0].rule == "A3");
}

TEST_CASE("theta chart validates; gamma and chart_type work") {
    Chart c = build_chart(kTheta6);
    auto rep = validate(c);
    for (auto& v : rep.violations)
        MESSAGE(v.rule, " at ", v.location, ": ", v.message);
    CHECK(rep.ok());
    Embedding emb = embedding_or_throw(c);
    // V=2, E=6, C=1 -> F = 1 + C - V + E = 6
    CHECK(emb.faces.size() == 6);

    auto g2 = gamma(c, 2);
    CHECK(g2.edges.size() == 3);
    CHECK(g2.whites.size() == 2);
    auto g4 = gamma(c, 4);  // empty view within label range check
    CHECK(g4.edges.empty());

    auto t = chart_type(c);
    REQUIRE(t.has_value());
    CHECK(t->m == 2);
    CHECK(t->counts == std::vector<int>{2});

    auto [w, mf] = complexity(c);
    CHECK(w == 2);
    CHECK(mf == 0);
}

TEST_CASE("round trip: render_text then build_chart is identical") {
    for (const char* src : {kEmpty, kHoop, kTheta6}) {
        Chart c = build_chart(src);
        std::string text = render_text(c);
        Chart c2 = build_chart(text);
        CHECK(render_text(c2) == text);
        CHECK(c2.degree_n == c.degree_n);
        CHECK(c2.darts.size() == c.darts.size());
        CHECK(c2.edges.size() == c.edges.size());
    }
}

TEST_CASE("parse errors") {
    CHECK_THROWS_AS(build_chart("chart n=3\nedge e label=1 tail=x head=y\n"),
                    DanglingReference);
    CHECK_THROWS_AS(build_chart("white w darts=a,b,c,d,e,f\n"), ParseError);
    CHECK_THROWS_AS(build_chart("chart n=3\nbogus line here\n"), ParseError);
}

TEST_CASE("validation catches condition violations") {
    // crossing with labels 2,3: gap too small
    const char* bad_cross =
        "chart n=5\n"
        "cross x darts=p1,q1,p2,q2\n"
        "phantom h darts=u1,u2\n"
        "edge ep label=2 tail=p1 head=p2\n"
        "edge eq label=3 tail=q1 head=q2\n"
        "edge eh label=2 tail=u1 head=u2\n"
        "infinity root\n";
    Chart c = build_chart(bad_cross);
    auto rep = validate(c);
    bool saw = false;
    for (auto& v : rep.violations)
        if (v.rule == "crossing-gap") saw = true;
    CHECK(saw);

    // white with alternating in/out directions violates the triple rule
    const char* bad_white =
        "chart n=3\n"
        "white w darts=a1,b1,c1,a2,b2,c2\n"
        "black k1 darts=t1\n"
        "black k2 darts=t2\n"
        "black k3 darts=t3\n"
        "black k4 darts=t4\n"
        "black k5 darts=t5\n"
        "black k6 darts=t6\n"
        "edge e1 label=1 tail=a1 head=t1\n"
        "edge e2 label=2 tail=t2 head=b1\n"
        "edge e3 label=1 tail=c1 head=t3\n"
        "edge e4 label=2 tail=t4 head=a2\n"
        "edge e5 label=1 tail=b2 head=t5\n"
        "edge e6 label=2 tail=t6 head=c2\n"
        "infinity root\n";
    Chart c2 = build_chart(bad_white);
    auto rep2 = validate(c2);
    bool orient = false;
    for (auto& v : rep2.violations)
        if (v.rule == "white-orient") orient = true;
    CHECK(orient);
}
