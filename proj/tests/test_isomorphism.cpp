#include <doctest.h>

#include <algorithm>
#include <random>
#include <vector>

#include "gcg/errors.hpp"
#include "gcg/graph.hpp"
#include "gcg/isomorphism.hpp"

using namespace gcg;

namespace {

SimpleGraph cycle_graph(int n) {
    std::vector<std::string> labels;
    for (int i = 0; i < n; ++i) labels.push_back(std::to_string(i));
    SimpleGraph x(n, false, std::move(labels));
    for (int i = 0; i < n; ++i) x.add_edge(i, (i + 1) % n);
    return x;
}

SimpleGraph relabel(const SimpleGraph& x, const std::vector<int>& perm) {
    std::vector<std::string> labels(x.size());
    for (int i = 0; i < x.size(); ++i) labels[perm[i]] = x.label(i);
    SimpleGraph y(x.size(), x.loops_allowed(), std::move(labels));
    for (const auto& [i, j] : x.edges()) y.add_edge(perm[i], perm[j]);
    return y;
}

void check_mapping(const SimpleGraph& x, const SimpleGraph& y, const std::vector<int>& m) {
    REQUIRE(m.size() == static_cast<std::size_t>(x.size()));
    for (int i = 0; i < x.size(); ++i)
        for (int j = 0; j < x.size(); ++j) CHECK(x.adjacent(i, j) == y.adjacent(m[i], m[j]));
}

}  // namespace

TEST_CASE("random relabelings are always recognized") {
    std::mt19937 rng(20240817);
    for (const int n : {6, 9, 12}) {
        SimpleGraph x(n, false, std::vector<std::string>(cycle_graph(n).labels()));
        // A circulant-ish graph: cycle plus chords of step 3.
        for (int i = 0; i < n; ++i) {
            x.add_edge(i, (i + 1) % n);
            x.add_edge(i, (i + 3) % n);
        }
        for (int trial = 0; trial < 10; ++trial) {
            std::vector<int> perm(n);
            for (int i = 0; i < n; ++i) perm[i] = i;
            std::shuffle(perm.begin(), perm.end(), rng);
            const SimpleGraph y = relabel(x, perm);
            const auto m = are_isomorphic(x, y);
            REQUIRE(m.has_value());
            check_mapping(x, y, *m);
        }
    }
}

TEST_CASE("degree-matched non-isomorphic pairs are rejected") {
    // C6 and two triangles: both 2-regular on six vertices.
    SimpleGraph two_triangles(6, false, {"0", "1", "2", "3", "4", "5"});
    for (int base : {0, 3}) {
        two_triangles.add_edge(base, base + 1);
        two_triangles.add_edge(base + 1, base + 2);
        two_triangles.add_edge(base, base + 2);
    }
    CHECK(!are_isomorphic(cycle_graph(6), two_triangles).has_value());

    // K4 versus K4 minus an edge: different edge counts.
    SimpleGraph k4(4, false, {"0", "1", "2", "3"});
    SimpleGraph k4e(4, false, {"0", "1", "2", "3"});
    for (int i = 0; i < 4; ++i)
        for (int j = i + 1; j < 4; ++j) {
            k4.add_edge(i, j);
            if (!(i == 2 && j == 3)) k4e.add_edge(i, j);
        }
    CHECK(!are_isomorphic(k4, k4e).has_value());

    // Different vertex counts.
    CHECK(!are_isomorphic(cycle_graph(5), cycle_graph(6)).has_value());
}

TEST_CASE("the isomorphism search is capped at 32 vertices") {
    CHECK_THROWS_AS(are_isomorphic(cycle_graph(33), cycle_graph(33)), SizeLimitExceeded);
    CHECK(are_isomorphic(cycle_graph(32), cycle_graph(32)).has_value());
}
