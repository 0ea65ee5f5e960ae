#include <doctest.h>

#include <vector>

#include "gcg/catalog.hpp"
#include "gcg/criteria.hpp"
#include "gcg/element_spec.hpp"
#include "gcg/errors.hpp"
#include "gcg/gcs.hpp"
#include "gcg/graph.hpp"
#include "gcg/group.hpp"

using namespace gcg;

namespace {

// Identity component as the graph oracle sees it.
ElementSet bfs_component_of_identity(const GCSubset& s) {
    const SimpleGraph x = build_gc_graph(s);
    for (const auto& comp : connected_components(x))
        if (comp.front() == s.group().identity()) return ElementSet::of(s.group(), comp);
    return ElementSet(s.group());
}

// Elements reachable from the identity by even-length walks.
ElementSet bfs_even_class(const GCSubset& s) {
    const FiniteGroup& g = s.group();
    const SimpleGraph x = build_gc_graph(s);
    ElementSet seen = ElementSet::of(g, {g.identity()});
    std::vector<int> frontier = {g.identity()};
    while (!frontier.empty()) {
        std::vector<int> next;
        for (const int v : frontier)
            for (int m = 0; m < g.order(); ++m) {
                if (!x.adjacent(v, m)) continue;
                for (int w = 0; w < g.order(); ++w)
                    if (x.adjacent(m, w) && !seen.contains(w)) {
                        seen.insert(w);
                        next.push_back(w);
                    }
            }
        frontier = std::move(next);
    }
    return seen;
}

}  // namespace

TEST_CASE("the three connectivity deciders agree on every small instance") {
    for (const int n : {4, 6, 8})
        for (const auto& [name, g] : catalog_of_order(n, CatalogKind::All))
            for (const GroupMap& alpha : involutory_automorphisms(g))
                for (int k = 1; k <= g.order(); ++k)
                    for (const GCSubset& s : enumerate_gcs(g, alpha, k)) {
                        INFO(name, " ", alpha.to_string(), " S=", s.to_string());
                        const ConnectivityVerdict a = connected_algebraic(s);
                        const ConnectivityVerdict c = connected_coset_criterion(s);
                        const bool bfs =
                            connected_components(build_gc_graph(s)).size() == 1;
                        CHECK(a.connected == bfs);
                        CHECK(c.connected == bfs);
                        if (a.connected) CHECK(a.branch == c.branch);

                        // Identity component and even-walk class against BFS.
                        CHECK(identity_component_algebraic(s) == bfs_component_of_identity(s));
                        CHECK(theta_class(s) == bfs_even_class(s));
                        CHECK(verify_alpha_bridge(s));

                        // Algebraic bipartiteness against the 2-coloring oracle.
                        if (g.is_abelian()) {
                            const BipartiteVerdict b = bipartite_algebraic(s);
                            CHECK(b.bipartite ==
                                  is_bipartite(build_gc_graph(s)).bipartite);
                        }
                    }
}

TEST_CASE("the odd-rotation subset of the order-8 cycle group") {
    const FiniteGroup z8 = cyclic_group(8);
    const GCSubset s(z8, inverse_automorphism(z8), resolve_element_set(z8, "1,3,5"));

    const ConnectivityVerdict v = connected_algebraic(s);
    CHECK(v.connected);
    CHECK(v.branch == ConnBranch::IndexTwoCoset);
    CHECK(v.index == 2);
    CHECK(v.alpha_invariant);
    CHECK(v.product_subgroup.elements() == std::vector<int>{0, 2, 4, 6});
    CHECK(v.generated == ElementSet::full(z8));
    CHECK(to_string(v.branch) == "IndexTwoCoset");

    CHECK(theta_class(s).elements() == std::vector<int>{0, 2, 4, 6});

    const ConnectedBipartiteVerdict b = bipartite_when_connected(s);
    CHECK(b.bipartite);
    CHECK(b.graph_two_colorable);
    CHECK(b.index_two);
    CHECK(b.subset_disjoint);
}

TEST_CASE("bipartite analysis needs an abelian group and connectivity") {
    const FiniteGroup d6 = dihedral_group(6);
    const GroupMap alpha = resolve_group_map(d6, "a->a^2,b->b");
    const GCSubset s(d6, alpha, resolve_element_set(d6, "b,ab,a^2b"));
    CHECK_THROWS_AS(bipartite_algebraic(s), NotAbelian);

    // A disconnected instance: S inside the rotation subgroup of D12.
    const FiniteGroup d12 = dihedral_group(12);
    const GroupMap beta = resolve_group_map(d12, "a->a^5,b->a^2b");
    const GCSubset t(d12, beta, resolve_element_set(d12, "a^3b,a^5b,ab"));
    CHECK(!connected_algebraic(t).connected);
    CHECK_THROWS_AS(bipartite_when_connected(t), NotConnected);

    // The identity component of a disconnected graph still matches BFS.
    CHECK(identity_component_algebraic(t) == bfs_component_of_identity(t));
}

TEST_CASE("the odd-product witness for the order-24 mixed-rank group") {
    const FiniteGroup g = build_group("Z2^2 x Z6");
    const GroupMap alpha =
        resolve_group_map(g, "(1,0,0)->(1,0,0),(0,1,0)->(0,1,0),(0,0,1)->(0,1,1)");
    const GCSubset s(g, alpha, resolve_element_set(g, "(1,0,0),(0,0,2),(0,0,4)"));

    const BipartiteVerdict b = bipartite_algebraic(s);
    CHECK(!b.bipartite);
    REQUIRE(b.subset.size() == 3);
    CHECK(b.subset == std::vector<int>{resolve_element(g, "(0,0,2)"),
                                       resolve_element(g, "(0,0,4)"),
                                       resolve_element(g, "(1,0,0)")});
    // (0,0,2)^3 = (0,0,0): three factors, odd count, landing on the identity.
    CHECK(b.witness == std::vector<long long>{3, 0, 0});
    CHECK(b.omega_product == g.identity());
    CHECK(!is_bipartite(build_gc_graph(s)).bipartite);
}

TEST_CASE("witnesses re-verify by direct multiplication") {
    // Whenever the criterion reports non-bipartite, multiply the witness out.
    for (const char* expr : {"Z6", "Z8", "Z2 x Z4", "Z12", "Z10"}) {
        const FiniteGroup g = build_group(expr);
        for (const GroupMap& alpha : involutory_automorphisms(g))
            for (int k = 1; k <= 4; ++k)
                for (const GCSubset& s : enumerate_gcs(g, alpha, k)) {
                    const BipartiteVerdict b = bipartite_algebraic(s);
                    if (b.bipartite) continue;
                    long long total = 0;
                    int prod = g.identity();
                    REQUIRE(b.witness.size() == b.subset.size());
                    for (std::size_t i = 0; i < b.subset.size(); ++i) {
                        total += b.witness[i];
                        for (long long r = 0; r < b.witness[i]; ++r)
                            prod = g.mul(prod, b.subset[i]);
                    }
                    INFO(expr, " ", alpha.to_string(), " S=", s.to_string());
                    CHECK(total % 2 == 1);
                    CHECK(prod == b.omega_product);
                    CHECK(alpha_partition(g, alpha, s.identity_alpha_allowed())
                              .omega.contains(b.omega_product));
                }
    }
}

TEST_CASE("connected-case bipartiteness equivalences never disagree") {
    for (const char* expr : {"Z6", "Z8", "Z2^3", "Z12", "Z2 x Z6"}) {
        const FiniteGroup g = build_group(expr);
        for (const GroupMap& alpha : involutory_automorphisms(g))
            for (int k = 1; k <= 4; ++k)
                for (const GCSubset& s : enumerate_gcs(g, alpha, k)) {
                    if (!connected_algebraic(s).connected) continue;
                    const ConnectedBipartiteVerdict v = bipartite_when_connected(s);
                    CHECK(v.bipartite == v.graph_two_colorable);
                    CHECK(v.bipartite == v.index_two);
                    CHECK(v.bipartite == v.subset_disjoint);
                }
    }
}
