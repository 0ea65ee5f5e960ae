#pragma once

#include <string>
#include <vector>

#include "gcg/group.hpp"

namespace gcg {

// The three-way partition of a group induced by an involutory automorphism:
//   omega     = { alpha(g^-1) g : g in G }
//   big_omega = { g not in omega : alpha(g) = g^-1 }
//   mho       = { g : alpha(g) != g^-1 }
struct AlphaPartition {
    const FiniteGroup* group;
    GroupMap alpha;
    ElementSet omega;
    ElementSet big_omega;
    ElementSet mho;
};

// Throws NotInvolutory when alpha^2 != id; IdentityAlpha when alpha = id and
// identities are not explicitly allowed.
AlphaPartition alpha_partition(const FiniteGroup& g, const GroupMap& alpha,
                               bool allow_identity = false);

// A subset S valid for GC(G, S, alpha): S avoids omega and alpha(S^-1) = S.
// Construction performs full validation (NotInvolutory, IdentityAlpha,
// EmptySubset, MeetsOmega with witness, NotAlphaSymmetric with witness).
class GCSubset {
public:
    GCSubset(const FiniteGroup& g, const GroupMap& alpha, const ElementSet& members,
             bool allow_identity = false);

    const FiniteGroup& group() const { return *group_; }
    const GroupMap& alpha() const { return alpha_; }
    const ElementSet& members() const { return members_; }
    bool identity_alpha_allowed() const { return allow_identity_; }
    int size() const { return members_.size(); }
    std::string to_string() const { return members_.to_string(); }

private:
    const FiniteGroup* group_;
    GroupMap alpha_;
    ElementSet members_;
    bool allow_identity_;
};

GCSubset validate_gcs(const FiniteGroup& g, const GroupMap& alpha, const ElementSet& s,
                      bool allow_identity = false);

// All valid subsets of the given size, built by choosing big_omega elements
// freely and mho elements in alpha-paired orbits {s, alpha(s^-1)}.  Sorted by
// ascending member lists; empty when none exist.  Throws EmptySubset for
// size < 1.
std::vector<GCSubset> enumerate_gcs(const FiniteGroup& g, const GroupMap& alpha, int size,
                                    bool allow_identity = false);

// The stabilizer G_alpha(S) = { g : omega_alpha(g^-1) S = S } for abelian G;
// its right translations are exactly the translation automorphisms of the
// graph.  Throws NotAbelian.
ElementSet stabilizer_set(const GCSubset& s);

// Transports (S, alpha) along an automorphism beta to (beta(S), beta alpha
// beta^-1); validity is preserved, and beta is a graph isomorphism between
// the two generalized Cayley graphs.
GCSubset conjugate_gcs(const GCSubset& s, const GroupMap& beta);

}  // namespace gcg
