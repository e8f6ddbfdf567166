#include <algorithm>
#include <map>
#include <set>
#include <string>
#include <vector>

#include "chartforge/graphs.hpp"
#include "doctest.h"
#include "oracles.hpp"

using namespace chartforge;

namespace {

std::string data_dir() { return CHARTFORGE_DATA_DIR; }

std::vector<GraphTemplate> load_set(const std::string& fig,
                                    const std::vector<std::string>& names) {
    std::vector<GraphTemplate> out;
    for (const auto& n : names)
        out.push_back(
            load_graph_file(data_dir() + "/catalog/" + fig + "/" + n + ".graph"));
    return out;
}

std::multiset<std::multiset<int>> disk_profile(const GraphTemplate& t) {
    std::multiset<std::multiset<int>> out;
    std::multiset<int> profile;
    for (const auto& f : internal_faces(t))
        profile.insert(static_cast<int>(f.distinct_whites.size()));
    out.insert(profile);
    return out;
}

std::multiset<int> angles(const GraphTemplate& t) {
    std::multiset<int> profile;
    for (const auto& f : internal_faces(t))
        profile.insert(static_cast<int>(f.distinct_whites.size()));
    return profile;
}

}  // namespace

TEST_CASE("catalog fig2/fig13 load, are spherical and connected") {
    auto fig2 = load_set("fig2", {"a", "b"});
    auto fig13 = load_set("fig13", {"a", "b", "c", "d", "e", "f", "g"});
    for (const auto& t : fig2) {
        CHECK(t.connected());
        CHECK(t.euler_characteristic() == 2);
        CHECK(t.white_count() == 5);
        CHECK(t.black_count() == 3);
        CHECK(!t.has_white_loop());
    }
    int expected_blacks[] = {3, 3, 3, 1, 1, 1, 1};
    for (size_t i = 0; i < fig13.size(); ++i) {
        CAPTURE(fig13[i].name);
        CHECK(fig13[i].connected());
        CHECK(fig13[i].euler_characteristic() == 2);
        CHECK(fig13[i].white_count() == 5);
        CHECK(fig13[i].black_count() == expected_blacks[i]);
    }
}

TEST_CASE("complementary disk profiles match the case analysis") {
    auto g = [&](const std::string& f, const std::string& n) {
        return load_graph_file(data_dir() + "/catalog/" + f + "/" + n +
                               ".graph");
    };
    CHECK(angles(g("fig13", "a")) == std::multiset<int>{2, 5, 5});
    CHECK(angles(g("fig13", "b")) == std::multiset<int>{3, 4, 5});
    CHECK(angles(g("fig13", "c")) == std::multiset<int>{4, 4, 4});
    CHECK(angles(g("fig13", "d")) == std::multiset<int>{2, 2, 5, 5});
    CHECK(angles(g("fig13", "e")) == std::multiset<int>{2, 3, 4, 5});
    CHECK(angles(g("fig13", "f")) == std::multiset<int>{3, 3, 4, 4});
    CHECK(angles(g("fig13", "g")) == std::multiset<int>{2, 2, 3, 5});
    CHECK(angles(g("fig2", "a")) == std::multiset<int>{2, 2, 5});
    CHECK(angles(g("fig2", "b")) == std::multiset<int>{2, 3, 5});
}

TEST_CASE("ro_canonical is invariant under reflection and reversal") {
    auto fig13 = load_set("fig13", {"a", "b", "c", "d", "e", "f", "g"});
    for (const auto& t : fig13) {
        CAPTURE(t.name);
        CHECK(ro_canonical(t) == ro_canonical(reflect(t)));
        CHECK(ro_canonical(t) == ro_canonical(reverse_all(t)));
        CHECK(ro_canonical(t) == ro_canonical(reverse_all(reflect(t))));
    }
}

TEST_CASE("catalog graphs are pairwise RO-inequivalent; canonical forms agree "
          "with brute force on all pairs") {
    auto all = load_set("fig2", {"a", "b"});
    auto fig13 = load_set("fig13", {"a", "b", "c", "d", "e", "f", "g"});
    all.insert(all.end(), fig13.begin(), fig13.end());
    for (size_t i = 0; i < all.size(); ++i) {
        for (size_t j = 0; j < all.size(); ++j) {
            bool canon = ro_canonical(all[i]) == ro_canonical(all[j]);
            bool brute = oracles::ro_equivalent_brute(all[i], all[j]);
            CAPTURE(all[i].name);
            CAPTURE(all[j].name);
            CHECK(canon == brute);
            if (i == j) CHECK(canon);
            if (i != j) CHECK(!canon);
        }
    }
}

TEST_CASE("graph text round trip") {
    auto t = load_graph_file(data_dir() + "/catalog/fig13/g.graph");
    auto t2 = parse_graph(render_graph(t));
    CHECK(ro_canonical(t) == ro_canonical(t2));
    CHECK(t2.vertices.size() == t.vertices.size());
}
