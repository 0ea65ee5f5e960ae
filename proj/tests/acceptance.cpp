// End-to-end checks for the cubic generalized Cayley graph classifier.
// Each check prints exactly one PASS/FAIL line; the exit status is the
// number of failed checks.

#include <cstdio>
#include <exception>
#include <functional>
#include <iostream>
#include <random>
#include <sstream>
#include <string>
#include <vector>

#include "gcg/catalog.hpp"
#include "gcg/census.hpp"
#include "gcg/criteria.hpp"
#include "gcg/element_spec.hpp"
#include "gcg/errors.hpp"
#include "gcg/fixtures.hpp"
#include "gcg/gcs.hpp"
#include "gcg/graph.hpp"
#include "gcg/group.hpp"
#include "gcg/isomorphism.hpp"
#include "gcg/spectrum.hpp"
#include "gcg/table1.hpp"

#ifndef GCG_TABLE1_GOLDEN
#define GCG_TABLE1_GOLDEN "data/table1_golden.txt"
#endif

using namespace gcg;

namespace {

const std::vector<int> kAllOrders = {4, 6, 8, 10, 12, 20, 24, 30};
const std::vector<int> kSmallOrders = {4, 6, 8, 10, 12};  // the 16 groups of order <= 16

struct CheckFailure : std::runtime_error {
    using std::runtime_error::runtime_error;
};

void require(bool ok, const std::string& detail) {
    if (!ok) throw CheckFailure(detail);
}

int run_check(int number, const std::string& title, const std::function<void()>& body) {
    try {
        body();
        std::cout << "PASS: " << number << ". " << title << "\n";
        return 0;
    } catch (const std::exception& e) {
        std::cout << "FAIL: " << number << ". " << title << " -- " << e.what() << "\n";
        return 1;
    }
}

std::string join(const std::vector<std::string>& names) {
    std::string out;
    for (std::size_t i = 0; i < names.size(); ++i) {
        if (i) out += ", ";
        out += names[i];
    }
    return out;
}

// Captures stdout of a shell command; empty optional-style "" on failure.
std::string capture_command(const std::string& command) {
    FILE* pipe = popen(command.c_str(), "r");
    require(pipe != nullptr, "could not launch: " + command);
    std::string out;
    char buf[4096];
    while (std::size_t got = fread(buf, 1, sizeof(buf), pipe)) out.append(buf, got);
    const int status = pclose(pipe);
    require(status == 0, "command exited with status " + std::to_string(status));
    return out;
}

void verify_mapping(const SimpleGraph& x, const SimpleGraph& y, const std::vector<int>& m,
                    const std::string& context) {
    require(m.size() == static_cast<std::size_t>(x.size()), context + ": mapping size");
    for (int i = 0; i < x.size(); ++i)
        for (int j = 0; j < x.size(); ++j)
            require(x.adjacent(i, j) == y.adjacent(m[i], m[j]),
                    context + ": mapping does not preserve adjacency");
}

void verify_isomorphic(const SimpleGraph& x, const SimpleGraph& y, const std::string& context) {
    const auto m = are_isomorphic(x, y);
    require(m.has_value(), context + ": no isomorphism found");
    verify_mapping(x, y, *m, context);
}

// ---- individual checks ------------------------------------------------------

void check_abelian_census() {
    const CensusReport r = run_census(kAllOrders, CatalogKind::Abelian);
    require(r.survivors == std::vector<std::string>{"Z6", "Z2^3", "Z8"},
            "library survivors were: " + join(r.survivors));

    const std::string out = capture_command(
        std::string(GCG_CLI_PATH) + " census --kind abelian --orders 4,6,8,10,12,20,24,30");
    const std::size_t at = out.rfind("survivors: ");
    require(at != std::string::npos, "no survivors line in the command output");
    std::string line = out.substr(at);
    if (!line.empty() && line.back() == '\n') line.pop_back();
    require(line == "survivors: Z6, Z2^3, Z8", "command says \"" + line + "\"");
}

void check_nonabelian_census() {
    const CensusReport r = run_census(kAllOrders, CatalogKind::NonAbelian);
    require(r.survivors == std::vector<std::string>{"D6", "D8", "Q8"},
            "survivors were: " + join(r.survivors));
}

void check_sum_graph_census() {
    const CensusReport r = cayley_sum_census(kAllOrders);
    require(r.survivors == std::vector<std::string>{"Z2^2", "Z6", "Z2^3", "Z8"},
            "survivors were: " + join(r.survivors));
}

void check_involution_table() {
    const std::string rendered = reproduce_table1(GCG_TABLE1_GOLDEN);
    require(!rendered.empty() && rendered.rfind("involution | omega | Omega\n", 0) == 0,
            "unexpected table header");
}

void check_bipartite_verdicts() {
    // Order 14: the cubic inversion graph is connected and bipartite.
    const FiniteGroup z14 = build_group("Z14");
    const GCSubset s14(z14, inverse_automorphism(z14), resolve_element_set(z14, "g,g^3,g^5"));
    const BipartiteVerdict b14 = bipartite_algebraic(s14);
    const BipartiteCertificate c14 = is_bipartite(build_gc_graph(s14));
    require(b14.bipartite && c14.bipartite, "order-14 graph should be bipartite both ways");

    // Order 24: non-bipartite, with an explicit odd product landing in omega.
    const FiniteGroup g = build_group("Z2^2 x Z6");
    const GroupMap alpha =
        resolve_group_map(g, "(1,0,0)->(1,0,0),(0,1,0)->(0,1,0),(0,0,1)->(0,1,1)");
    const GCSubset s(g, alpha, resolve_element_set(g, "(1,0,0),(0,0,2),(0,0,4)"));
    const BipartiteVerdict b = bipartite_algebraic(s);
    require(!b.bipartite, "order-24 graph should not be bipartite");
    require(!is_bipartite(build_gc_graph(s)).bipartite, "coloring oracle disagrees");

    require(b.subset == std::vector<int>{resolve_element(g, "(0,0,2)"),
                                         resolve_element(g, "(0,0,4)"),
                                         resolve_element(g, "(1,0,0)")},
            "unexpected subset ordering");
    require(b.witness == std::vector<long long>{3, 0, 0}, "unexpected witness exponents");

    // Re-verify the witness by direct multiplication: odd total, lands in omega.
    long long total = 0;
    int prod = g.identity();
    for (std::size_t i = 0; i < b.subset.size(); ++i) {
        total += b.witness[i];
        for (long long r = 0; r < b.witness[i]; ++r) prod = g.mul(prod, b.subset[i]);
    }
    require(total % 2 == 1, "witness total is even");
    require(prod == b.omega_product, "witness product mismatch");
    require(prod == g.identity(), "the cube of (0,0,2) should be the identity");
    require(alpha_partition(g, alpha).omega.contains(prod), "witness product is not in omega");
}

void check_criteria_exhaustively() {
    long long instances = 0;
    int groups_seen = 0;
    for (const int n : kSmallOrders)
        for (const auto& [name, g] : catalog_of_order(n, CatalogKind::All)) {
            ++groups_seen;
            for (const GroupMap& alpha : involutory_automorphisms(g))
                for (int k = 1; k <= g.order(); ++k)
                    for (const GCSubset& s : enumerate_gcs(g, alpha, k)) {
                        ++instances;
                        const std::string ctx = name + " " + alpha.to_string() + " S=" +
                                                s.to_string();
                        const SimpleGraph x = build_gc_graph(s);
                        const bool bfs = connected_components(x).size() == 1;
                        const ConnectivityVerdict a = connected_algebraic(s);
                        const ConnectivityVerdict c = connected_coset_criterion(s);
                        require(a.connected == bfs, ctx + ": criterion vs BFS");
                        require(c.connected == bfs, ctx + ": coset criterion vs BFS");
                        if (bfs) require(a.branch == c.branch, ctx + ": branch mismatch");

                        if (g.is_abelian()) {
                            const BipartiteVerdict b = bipartite_algebraic(s);
                            require(b.bipartite == is_bipartite(x).bipartite,
                                    ctx + ": bipartite criterion vs coloring");
                        }

                        ElementSet comp(g);
                        for (const auto& vertices : connected_components(x))
                            if (vertices.front() == g.identity())
                                comp = ElementSet::of(g, vertices);
                        require(identity_component_algebraic(s) == comp,
                                ctx + ": identity component mismatch");
                        require(verify_alpha_bridge(s), ctx + ": bridge identity");
                    }
        }
    require(groups_seen == 16, "expected 16 groups of order at most 16");
    require(instances > 1000, "suspiciously few instances enumerated");
}

void check_conjugation_isomorphisms() {
    std::mt19937 rng(6427183);
    for (const int n : kSmallOrders)
        for (const auto& [name, g] : catalog_of_order(n, CatalogKind::All)) {
            const auto alphas = involutory_automorphisms(g);
            const auto betas = automorphism_group(g);
            // All valid subsets per alpha, every size, flattened.
            std::vector<GCSubset> pool;
            for (const GroupMap& alpha : alphas)
                for (int k = 1; k <= g.order(); ++k)
                    for (GCSubset& s : enumerate_gcs(g, alpha, k)) pool.push_back(std::move(s));
            require(!pool.empty(), name + ": no valid subsets at all");
            std::uniform_int_distribution<std::size_t> pick_s(0, pool.size() - 1);
            std::uniform_int_distribution<std::size_t> pick_b(0, betas.size() - 1);
            for (int trial = 0; trial < 100; ++trial) {
                const GCSubset& s = pool[pick_s(rng)];
                const GroupMap& beta = betas[pick_b(rng)];
                const GCSubset moved = conjugate_gcs(s, beta);
                const SimpleGraph x = build_gc_graph(s);
                const SimpleGraph y = build_gc_graph(moved);
                std::vector<int> m(static_cast<std::size_t>(g.order()));
                for (int v = 0; v < g.order(); ++v) m[static_cast<std::size_t>(v)] = beta(v);
                verify_mapping(x, y, m, name + " trial " + std::to_string(trial));
            }
        }
}

void check_product_graphs() {
    // The catalogs stay alive for the whole check so that the maps and sets in
    // the pool keep pointing at live groups.
    std::vector<std::vector<std::pair<std::string, FiniteGroup>>> catalogs;
    for (const int n : kSmallOrders) catalogs.push_back(catalog_of_order(n, CatalogKind::All));

    // Instance pool: one small subset per involution class of each group.
    struct Instance {
        const std::string* name;
        const FiniteGroup* group;
        GroupMap alpha;
        ElementSet members;
    };
    std::vector<Instance> pool;
    for (const auto& catalog : catalogs)
        for (const auto& [name, g] : catalog)
            for (const auto& cls : involution_conjugacy_classes(g)) {
                for (int k = 2; k <= 3; ++k) {
                    const auto subs = enumerate_gcs(g, cls.front(), k);
                    if (!subs.empty()) {
                        pool.push_back({&name, &g, cls.front(), subs.front().members()});
                        break;
                    }
                }
            }
    require(pool.size() >= 10, "instance pool unexpectedly small");

    std::mt19937 rng(91150623);
    std::uniform_int_distribution<std::size_t> pick(0, pool.size() - 1);
    for (int trial = 0; trial < 20; ++trial) {
        const Instance& a = pool[pick(rng)];
        const Instance& b = pool[pick(rng)];
        const std::string ctx =
            "trial " + std::to_string(trial) + " (" + *a.name + " x " + *b.name + ")";

        const GCSubset sa(*a.group, a.alpha, a.members);
        const GCSubset sb(*b.group, b.alpha, b.members);
        const FiniteGroup product = direct_product(*a.group, *b.group);
        const GroupMap combined = product_map(product, a.alpha, b.alpha);
        ElementSet cross(product);
        for (const int s : a.members.elements())
            for (const int t : b.members.elements())
                cross.insert(s * b.group->order() + t);

        const GCSubset sp(product, combined, cross);
        const SimpleGraph direct = build_gc_graph(sp);
        const SimpleGraph tensored =
            direct_product_graph(build_gc_graph(sa), build_gc_graph(sb));
        require(direct == tensored, ctx + ": tensor product differs from direct build");

        // Connectivity of the product forces connectivity of both factors.
        if (connected_components(direct).size() == 1) {
            require(connected_components(build_gc_graph(sa)).size() == 1,
                    ctx + ": connected product, disconnected left factor");
            require(connected_components(build_gc_graph(sb)).size() == 1,
                    ctx + ": connected product, disconnected right factor");
        }
    }
}

void check_cross_group_isomorphisms() {
    // All four cubic graphs of the rank-3 elementary abelian pair-swapping map
    // are pairwise isomorphic.
    const FiniteGroup z2c = elem_abelian_2(3);
    const GroupMap alpha = resolve_group_map(z2c, "(0,0,1)->(0,1,1)");
    const auto z2c_subs = enumerate_gcs(z2c, alpha, 3);
    require(z2c_subs.size() == 4, "expected four cubic subsets for the pair-swapping map");
    std::vector<SimpleGraph> z2c_graphs;
    for (const GCSubset& s : z2c_subs) z2c_graphs.push_back(build_gc_graph(s));
    for (std::size_t i = 0; i < z2c_graphs.size(); ++i)
        for (std::size_t j = i + 1; j < z2c_graphs.size(); ++j)
            verify_isomorphic(z2c_graphs[i], z2c_graphs[j],
                              "rank-3 pair " + std::to_string(i) + "," + std::to_string(j));

    // The quaternion group: 9 involutory automorphisms in two classes.  The
    // three inner involutions each carry 8 cubic subsets; the size-6 class has
    // an empty big-Omega set and therefore no cubic subsets at all.  Each of
    // the 24 graphs is isomorphic to the elementary abelian one.
    const FiniteGroup q8 = quaternion_group();
    const auto classes = involution_conjugacy_classes(q8);
    require(classes.size() == 2, "expected two involution classes");
    int total_graphs = 0;
    for (const auto& cls : classes) {
        require(cls.size() == 6 || cls.size() == 3, "unexpected class size");
        const std::size_t expected = cls.size() == 3 ? 8 : 0;
        for (const GroupMap& beta : cls) {
            const auto subs = enumerate_gcs(q8, beta, 3);
            require(subs.size() == expected,
                    "class of size " + std::to_string(cls.size()) + " gave " +
                        std::to_string(subs.size()) + " cubic subsets");
            if (expected == 0)
                require(alpha_partition(q8, beta).big_omega.empty(),
                        "the cubic-free class should have an empty big-Omega set");
            for (const GCSubset& s : subs) {
                ++total_graphs;
                verify_isomorphic(z2c_graphs[0], build_gc_graph(s),
                                  "quaternion " + beta.to_string() + " S=" + s.to_string());
            }
        }
    }
    require(total_graphs == 24, "expected 24 quaternion graphs, got " +
                                    std::to_string(total_graphs));

    // The order-6 dihedral group: three involutions, one cubic subset each,
    // all giving the same graph up to isomorphism.
    const FiniteGroup d6 = dihedral_group(6);
    const auto d6_alphas = involutory_automorphisms(d6);
    require(d6_alphas.size() == 3, "expected three dihedral involutions");
    std::vector<SimpleGraph> d6_graphs;
    for (const GroupMap& a : d6_alphas) {
        const auto subs = enumerate_gcs(d6, a, 3);
        require(subs.size() == 1, "expected one cubic subset per dihedral involution");
        d6_graphs.push_back(build_gc_graph(subs.front()));
    }
    for (std::size_t i = 0; i < d6_graphs.size(); ++i)
        for (std::size_t j = i + 1; j < d6_graphs.size(); ++j)
            verify_isomorphic(d6_graphs[i], d6_graphs[j],
                              "dihedral pair " + std::to_string(i) + "," + std::to_string(j));
}

void check_survivor_spectra() {
    for (const char* expr : {"Z6", "Z2^3", "Z8", "D6", "D8", "Q8"}) {
        const FiniteGroup g = build_group(expr);
        for (const auto& cls : involution_conjugacy_classes(g))
            for (const GCSubset& s : enumerate_gcs(g, cls.front(), 3)) {
                const std::string ctx = std::string(expr) + " S=" + s.to_string();
                const SimpleGraph x = build_gc_graph(s);
                const SpectrumVerdict v = integral_spectrum(x);
                require(v.integral, ctx + ": spectrum is not integral");
                require(v.roots.size() == static_cast<std::size_t>(g.order()),
                        ctx + ": root count");
                long long sum = 0, sumsq = 0;
                for (const long long r : v.roots) {
                    require(-3 <= r && r <= 3, ctx + ": eigenvalue out of [-3, 3]");
                    sum += r;
                    sumsq += r * r;
                }
                require(sum == 0, ctx + ": eigenvalue sum is not zero");
                require(sumsq == 2 * x.edge_count(), ctx + ": sum of squares != 2|E|");
            }
    }

    // And one connected cubic graph that is not integral.
    const FiniteGroup d10 = dihedral_group(10);
    const GCSubset s(d10, resolve_group_map(d10, "a->a^4,b->b"),
                     resolve_element_set(d10, "b,ab,a^4b"));
    require(connected_algebraic(s).connected, "the order-10 dihedral sample should connect");
    const SpectrumVerdict v = integral_spectrum(build_gc_graph(s));
    require(!v.integral, "the order-10 dihedral sample should not be integral");
    require(v.remainder.degree() >= 2, "non-integral verdict needs a non-linear remainder");
}

}  // namespace

int main() {
    int failures = 0;
    failures += run_check(1, "abelian census survivors are Z6, Z2^3, Z8 (library and command)",
                          check_abelian_census);
    failures += run_check(2, "non-abelian census survivors are D6, D8, Q8",
                          check_nonabelian_census);
    failures += run_check(3, "sum-graph census survivors are Z2^2, Z6, Z2^3, Z8",
                          check_sum_graph_census);
    failures += run_check(4, "dihedral involution table matches its golden file",
                          check_involution_table);
    failures += run_check(5, "bipartite verdicts and the odd-product witness",
                          check_bipartite_verdicts);
    failures += run_check(6, "criteria agree with graph oracles on every small instance",
                          check_criteria_exhaustively);
    failures += run_check(7, "automorphism transport yields graph isomorphisms (100 per group)",
                          check_conjugation_isomorphisms);
    failures += run_check(8, "tensor products match product-group graphs (20 samples)",
                          check_product_graphs);
    failures += run_check(9, "cross-group isomorphisms among the cubic order-8 and order-6 graphs",
                          check_cross_group_isomorphisms);
    failures += run_check(10, "survivor spectra are integral in [-3, 3]; a non-integral witness",
                          check_survivor_spectra);

    if (failures == 0) std::cout << "all 10 checks passed\n";
    else std::cout << failures << " check(s) failed\n";
    return failures;
}
