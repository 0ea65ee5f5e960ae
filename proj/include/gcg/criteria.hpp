#pragma once

#include <string>
#include <vector>

#include "gcg/gcs.hpp"
#include "gcg/group.hpp"

namespace gcg {

// Which clause of the connectivity criterion decided the verdict.
enum class ConnBranch {
    GeneratesAndFullProduct,  // connected with <SS^-1> = G
    IndexTwoCoset,            // connected with |G : <SS^-1>| = 2
    FailsGeneration,          // <S> != G
    FailsIndex,               // |G : <SS^-1>| > 2
    FailsAlphaInvariance,     // alpha(<SS^-1>) != <SS^-1>
};
std::string to_string(ConnBranch b);

struct ConnectivityVerdict {
    bool connected;
    ConnBranch branch;
    ElementSet product_subgroup;  // <SS^-1>
    int index;                    // |G : <SS^-1>|
    ElementSet generated;         // <S>
    bool alpha_invariant;         // alpha(<SS^-1>) == <SS^-1>
};

struct BipartiteVerdict {
    bool bipartite;
    // The subset's elements in ascending order, and (when not bipartite) one
    // non-negative exponent per element with odd total such that the product
    // s1^k1 s2^k2 ... lands in omega_alpha(G); that landing element is
    // omega_product.
    std::vector<int> subset;
    std::vector<long long> witness;
    int omega_product = -1;
};

// Decides bipartiteness of GC(G, S, alpha) algebraically for abelian G: the
// graph is NOT bipartite exactly when some product of subset elements with
// odd total exponent falls into omega_alpha(G).  The existential is decided
// by BFS over (element, parity) states from (e, even); the witness exponents
// are read off the BFS parents and re-verified.  Throws NotAbelian.
BipartiteVerdict bipartite_algebraic(const GCSubset& s);

// The even-walk equivalence class of the identity: BFS whose one step is all
// length-2 walk endpoints, i.e. right multiplication by S^-1 S.  Equals
// <S^-1 S> once the graph is connected.
ElementSet theta_class(const GCSubset& s);

// C(e) = <S^-1 S> union <S S^-1> s, evaluated with the least-index s and
// re-verified to be independent of that choice.
ElementSet identity_component_algebraic(const GCSubset& s);

// Connectivity via the three-condition criterion: <S> = G, |G : <SS^-1>| <=
// 2, and alpha(<SS^-1>) = <SS^-1>.  The branch is the first failing
// condition in that order, or the holding case when connected.
ConnectivityVerdict connected_algebraic(const GCSubset& s);

// Connectivity via the coset criterion: connected iff S is not contained in
// a right coset of a proper subgroup, or S lies in Hg for H = <SS^-1> with
// |G : H| = 2, alpha(H) = H and g not in H.  Containment in a coset of a
// proper subgroup K forces <SS^-1> <= K, so H is the minimal witness and no
// subgroup enumeration is needed.
ConnectivityVerdict connected_coset_criterion(const GCSubset& s);

struct ConnectedBipartiteVerdict {
    bool bipartite;
    bool graph_two_colorable;   // BFS oracle
    bool index_two;             // |<SS^-1>| = |G| / 2
    bool subset_disjoint;       // S does not meet <SS^-1>
};

// For a connected graph the three conditions above are equivalent; all are
// evaluated and must agree (VerdictDisagreement otherwise).  Throws
// NotConnected when connected_algebraic rejects the input.
ConnectedBipartiteVerdict bipartite_when_connected(const GCSubset& s);

// The bridge identity alpha(<S^-1 S>) = <S S^-1>; must hold for every valid
// subset, so a false return signals an implementation fault.
bool verify_alpha_bridge(const GCSubset& s);

}  // namespace gcg
