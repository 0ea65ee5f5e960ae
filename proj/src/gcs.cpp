#include "gcg/gcs.hpp"

#include <algorithm>
#include <functional>

#include "gcg/errors.hpp"

namespace gcg {

namespace {

void require_involutory(const FiniteGroup& g, const GroupMap& alpha, bool allow_identity) {
    if (!alpha.is_involution())
        throw NotInvolutory("the map " + alpha.to_string() + " is not an involution");
    if (!allow_identity && alpha.is_identity())
        throw IdentityAlpha("the identity automorphism is excluded unless explicitly allowed");
    (void)g;
}

ElementSet omega_of(const FiniteGroup& g, const GroupMap& alpha) {
    ElementSet omega(g);
    for (int x = 0; x < g.order(); ++x) omega.insert(g.mul(alpha(g.inv(x)), x));
    return omega;
}

}  // namespace

AlphaPartition alpha_partition(const FiniteGroup& g, const GroupMap& alpha, bool allow_identity) {
    require_involutory(g, alpha, allow_identity);
    AlphaPartition p{&g, alpha, omega_of(g, alpha), ElementSet(g), ElementSet(g)};
    for (int x = 0; x < g.order(); ++x) {
        if (alpha(x) != g.inv(x)) p.mho.insert(x);
        else if (!p.omega.contains(x)) p.big_omega.insert(x);
    }
    return p;
}

GCSubset::GCSubset(const FiniteGroup& g, const GroupMap& alpha, const ElementSet& members,
                   bool allow_identity)
    : group_(&g), alpha_(alpha), members_(members), allow_identity_(allow_identity) {
    require_involutory(g, alpha, allow_identity);
    if (members.empty()) throw EmptySubset("a generalized Cayley subset must be non-empty");
    const ElementSet omega = omega_of(g, alpha);
    for (int s : members.elements())
        if (omega.contains(s))
            throw MeetsOmega("subset member " + g.name(s) + " lies in omega_alpha(G)", s);
    for (int s : members.elements())
        if (!members.contains(alpha(g.inv(s))))
            throw NotAlphaSymmetric(
                "alpha(" + g.name(s) + "^-1) = " + g.name(alpha(g.inv(s))) + " is not in the subset",
                s);
}

GCSubset validate_gcs(const FiniteGroup& g, const GroupMap& alpha, const ElementSet& s,
                      bool allow_identity) {
    return GCSubset(g, alpha, s, allow_identity);
}

std::vector<GCSubset> enumerate_gcs(const FiniteGroup& g, const GroupMap& alpha, int size,
                                    bool allow_identity) {
    if (size < 1) throw EmptySubset("requested subset size must be >= 1");
    const AlphaPartition part = alpha_partition(g, alpha, allow_identity);
    const std::vector<int> singles = part.big_omega.elements();
    std::vector<std::pair<int, int>> pairs;  // mho orbits {s, alpha(s^-1)} with s < partner
    for (int s : part.mho.elements()) {
        int partner = alpha(g.inv(s));
        if (s < partner) pairs.emplace_back(s, partner);
    }

    std::vector<std::vector<int>> chosen_sets;
    const int max_pairs = std::min<int>(size / 2, static_cast<int>(pairs.size()));
    for (int t = 0; t <= max_pairs; ++t) {
        const int m = size - 2 * t;
        if (m > static_cast<int>(singles.size())) continue;
        // All t-combinations of pairs crossed with all m-combinations of singles.
        std::vector<int> pick_pairs, pick_singles;
        std::function<void(int)> choose_singles = [&](int from) {
            if (static_cast<int>(pick_singles.size()) == m) {
                std::vector<int> members;
                for (int pi : pick_pairs) {
                    members.push_back(pairs[pi].first);
                    members.push_back(pairs[pi].second);
                }
                members.insert(members.end(), pick_singles.begin(), pick_singles.end());
                std::sort(members.begin(), members.end());
                chosen_sets.push_back(std::move(members));
                return;
            }
            for (int i = from; i < static_cast<int>(singles.size()); ++i) {
                pick_singles.push_back(singles[i]);
                choose_singles(i + 1);
                pick_singles.pop_back();
            }
        };
        std::function<void(int)> choose_pairs = [&](int from) {
            if (static_cast<int>(pick_pairs.size()) == t) {
                choose_singles(0);
                return;
            }
            for (int i = from; i < static_cast<int>(pairs.size()); ++i) {
                pick_pairs.push_back(i);
                choose_pairs(i + 1);
                pick_pairs.pop_back();
            }
        };
        choose_pairs(0);
    }

    std::sort(chosen_sets.begin(), chosen_sets.end());
    std::vector<GCSubset> out;
    out.reserve(chosen_sets.size());
    for (const auto& members : chosen_sets)
        out.emplace_back(g, alpha, ElementSet::of(g, members), allow_identity);
    return out;
}

ElementSet stabilizer_set(const GCSubset& s) {
    const FiniteGroup& g = s.group();
    if (!g.is_abelian()) throw NotAbelian("the stabilizer G_alpha(S) is defined for abelian groups");
    const GroupMap& alpha = s.alpha();
    ElementSet result(g);
    const std::vector<int> members = s.members().elements();
    for (int x = 0; x < g.order(); ++x) {
        const int t = g.mul(alpha(x), g.inv(x));  // omega_alpha(x^-1)
        bool stable = true;
        for (int m : members)
            if (!s.members().contains(g.mul(t, m))) { stable = false; break; }
        if (stable) result.insert(x);
    }
    return result;
}

GCSubset conjugate_gcs(const GCSubset& s, const GroupMap& beta) {
    const FiniteGroup& g = s.group();
    GroupMap conjugated = compose(beta, compose(s.alpha(), beta.inverse()));
    return GCSubset(g, conjugated, map_set(beta, s.members()), s.identity_alpha_allowed());
}

}  // namespace gcg
