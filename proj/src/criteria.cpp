#include "gcg/criteria.hpp"

#include <deque>
#include <string>
#include <vector>

#include "gcg/errors.hpp"
#include "gcg/graph.hpp"

namespace gcg {

std::string to_string(ConnBranch b) {
    switch (b) {
        case ConnBranch::GeneratesAndFullProduct:
            return "GeneratesAndFullProduct";
        case ConnBranch::IndexTwoCoset:
            return "IndexTwoCoset";
        case ConnBranch::FailsGeneration:
            return "FailsGeneration";
        case ConnBranch::FailsIndex:
            return "FailsIndex";
        case ConnBranch::FailsAlphaInvariance:
            return "FailsAlphaInvariance";
    }
    return "?";
}

namespace {

int power_of(const FiniteGroup& g, int base, long long exp) {
    int acc = g.identity();
    for (long long i = 0; i < exp; ++i) acc = g.mul(acc, base);
    return acc;
}

}  // namespace

BipartiteVerdict bipartite_algebraic(const GCSubset& s) {
    const FiniteGroup& g = s.group();
    if (!g.is_abelian()) throw NotAbelian("bipartite criterion applies to abelian groups only");
    const AlphaPartition part = alpha_partition(g, s.alpha(), s.identity_alpha_allowed());
    const std::vector<int> subs = s.members().elements();
    const int n = g.order();

    // States (element, parity) with parity = word length mod 2; one BFS step
    // appends one subset element to the word.  Encoded as element*2 + parity.
    std::vector<int> parent(static_cast<std::size_t>(2 * n), -2);  // -2 unvisited
    std::vector<int> via(static_cast<std::size_t>(2 * n), -1);     // subset index used
    std::deque<int> queue;
    parent[0] = -1;  // (identity, even)
    queue.push_back(0);
    while (!queue.empty()) {
        const int state = queue.front();
        queue.pop_front();
        const int x = state / 2;
        const int p = state % 2;
        for (std::size_t i = 0; i < subs.size(); ++i) {
            const int next = g.mul(x, subs[i]) * 2 + (1 - p);
            if (parent[next] != -2) continue;
            parent[next] = state;
            via[next] = static_cast<int>(i);
            queue.push_back(next);
        }
    }

    BipartiteVerdict v;
    v.subset = subs;
    int hit = -1;
    for (int w : part.omega.elements()) {
        if (parent[w * 2 + 1] != -2) {
            hit = w;
            break;
        }
    }
    if (hit < 0) {
        v.bipartite = true;
        return v;
    }

    v.bipartite = false;
    v.omega_product = hit;
    v.witness.assign(subs.size(), 0);
    for (int state = hit * 2 + 1; state != 0; state = parent[state]) ++v.witness[via[state]];

    // Re-verify the witness independently of the BFS bookkeeping.
    long long total = 0;
    int prod = g.identity();
    for (std::size_t i = 0; i < subs.size(); ++i) {
        total += v.witness[i];
        prod = g.mul(prod, power_of(g, subs[i], v.witness[i]));
    }
    if (total % 2 == 0 || prod != hit || !part.omega.contains(prod))
        throw Error("odd-product witness failed re-verification");
    return v;
}

ElementSet theta_class(const GCSubset& s) {
    // A length-2 walk from x ends at x * alpha(s1) * s2 and alpha(S) = S^-1,
    // so even-walk reachability from the identity is exactly <S^-1 S>.
    return generated_subgroup(set_product(set_inverse(s.members()), s.members()));
}

ElementSet identity_component_algebraic(const GCSubset& s) {
    const ElementSet h = generated_subgroup(set_product(s.members(), set_inverse(s.members())));
    const std::vector<int> subs = s.members().elements();
    const ElementSet odd = right_coset(h, subs.front());
    for (std::size_t i = 1; i < subs.size(); ++i) {
        if (right_coset(h, subs[i]) != odd)
            throw Error("identity component depends on the chosen subset element");
    }
    return theta_class(s) | odd;
}

namespace {

ConnectivityVerdict measure(const GCSubset& s) {
    ConnectivityVerdict v{false,
                          ConnBranch::FailsGeneration,
                          generated_subgroup(set_product(s.members(), set_inverse(s.members()))),
                          0,
                          generated_subgroup(s.members()),
                          false};
    v.index = subgroup_index(v.product_subgroup);
    v.alpha_invariant = map_set(s.alpha(), v.product_subgroup) == v.product_subgroup;
    return v;
}

}  // namespace

ConnectivityVerdict connected_algebraic(const GCSubset& s) {
    ConnectivityVerdict v = measure(s);
    if (v.generated.size() != s.group().order()) {
        v.branch = ConnBranch::FailsGeneration;
    } else if (v.index > 2) {
        v.branch = ConnBranch::FailsIndex;
    } else if (!v.alpha_invariant) {
        v.branch = ConnBranch::FailsAlphaInvariance;
    } else {
        v.connected = true;
        v.branch = v.index == 1 ? ConnBranch::GeneratesAndFullProduct : ConnBranch::IndexTwoCoset;
    }
    return v;
}

ConnectivityVerdict connected_coset_criterion(const GCSubset& s) {
    // If S sits inside a coset Kg then SS^-1 lands in K, so H = <SS^-1> is
    // the minimal subgroup with S inside one of its cosets (namely H*s for
    // any s in S); only H needs to be examined.
    ConnectivityVerdict v = measure(s);
    if (v.index == 1) {
        v.connected = true;
        v.branch = ConnBranch::GeneratesAndFullProduct;
    } else if (v.index > 2) {
        v.branch = ConnBranch::FailsIndex;
    } else if (v.product_subgroup.contains(s.members().first())) {
        // S lies in H itself, so <S> stays inside the proper subgroup H.
        v.branch = ConnBranch::FailsGeneration;
    } else if (!v.alpha_invariant) {
        v.branch = ConnBranch::FailsAlphaInvariance;
    } else {
        v.connected = true;
        v.branch = ConnBranch::IndexTwoCoset;
    }
    return v;
}

ConnectedBipartiteVerdict bipartite_when_connected(const GCSubset& s) {
    const ConnectivityVerdict cv = connected_algebraic(s);
    if (!cv.connected)
        throw NotConnected("bipartiteness split requires a connected graph; got " +
                           to_string(cv.branch));
    ConnectedBipartiteVerdict v;
    v.index_two = cv.index == 2;
    v.subset_disjoint = (s.members() & cv.product_subgroup).empty();
    v.graph_two_colorable = is_bipartite(build_gc_graph(s)).bipartite;
    if (v.graph_two_colorable != v.index_two || v.index_two != v.subset_disjoint)
        throw VerdictDisagreement(
            "connected-case bipartite conditions disagree: two-colorable=" +
            std::to_string(v.graph_two_colorable) + " index-two=" + std::to_string(v.index_two) +
            " subset-disjoint=" + std::to_string(v.subset_disjoint));
    v.bipartite = v.graph_two_colorable;
    return v;
}

bool verify_alpha_bridge(const GCSubset& s) {
    const ElementSet sinv_s =
        generated_subgroup(set_product(set_inverse(s.members()), s.members()));
    const ElementSet s_sinv =
        generated_subgroup(set_product(s.members(), set_inverse(s.members())));
    return map_set(s.alpha(), sinv_s) == s_sinv;
}

}  // namespace gcg
