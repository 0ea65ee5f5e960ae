#pragma once

#include <string>
#include <vector>

#include "gcg/catalog.hpp"
#include "gcg/group.hpp"

namespace gcg {

// One evaluated (alpha representative, subset) pair.
struct CensusRow {
    std::string alpha;                // generator-image form of the representative
    std::string subset;               // member names, "{b, ab, a^4b}"
    std::vector<int> subset_elements; // ascending element indices
    bool connected = false;
    bool bipartite = false;
    bool integral = false;
    std::string branch;               // connectivity branch that decided the row
    std::vector<long long> spectrum;  // integer roots found, descending
};

enum class GroupVerdict {
    AllConnectedIntegral,   // rows exist; every row connected and integral
    NoCubicGCS,             // no valid (alpha, subset) row at all
    Excluded,               // some row fails; excluded_row names the first
    ConnectedOnesIntegral,  // Cayley-sum only: disconnected rows exist but every
                            // connected row is integral
    NoConnectedGraph,       // Cayley-sum only: rows exist, none connected
};
std::string to_string(GroupVerdict v);

struct GroupRecord {
    std::string name;
    int order = 0;
    bool abelian = false;
    int involution_class_count = 0;  // alpha representatives actually iterated
    std::vector<CensusRow> rows;
    GroupVerdict verdict = GroupVerdict::NoCubicGCS;
    int excluded_row = -1;  // index into rows when verdict == Excluded
};

struct CensusReport {
    std::vector<GroupRecord> groups;       // input iteration order
    std::vector<std::string> survivors;    // sorted by (order, name)
};

// Evaluates every (involutory alpha, valid subset of the given size) pair of
// one group.  With conjugacy reduction (default) alpha runs over one
// representative per conjugacy class, otherwise over all involutions; the
// group verdict is the same either way.  Every row cross-checks the algebraic
// connectivity criteria against BFS (and, for abelian groups, the odd-product
// bipartiteness criterion against 2-coloring); any disagreement throws
// VerdictDisagreement.  Guard: |G| <= 30 (OrderLimitExceeded).
GroupRecord classify_group(const std::string& name, const FiniteGroup& g,
                           bool use_conjugacy_reduction = true, int subset_size = 3,
                           bool include_identity_alpha = false);

// classify_group over catalog_of_order for each requested order; survivors
// are the groups with verdict AllConnectedIntegral.
CensusReport run_census(const std::vector<int>& orders, CatalogKind kind, int subset_size = 3,
                        bool use_conjugacy_reduction = true, bool include_identity_alpha = false);

// Cayley-sum classification of one abelian group: subsets are the square-free
// ones of the given size (equivalently the valid subsets for the inversion
// map, which is here allowed to be the identity), and the graph joins g ~ h
// whenever gh lands in S.  That graph is also re-derived through the general
// construction and the two must agree.  Throws NotAbelian.
GroupRecord classify_group_cayley_sum(const std::string& name, const FiniteGroup& g,
                                      int subset_size = 3);

// Cayley-sum classification over the abelian catalog of each order; survivors
// are the groups whose connected graphs all exist and are integral
// (AllConnectedIntegral or ConnectedOnesIntegral).
CensusReport cayley_sum_census(const std::vector<int>& orders, int subset_size = 3);

std::string census_to_json(const CensusReport& r);
std::string census_to_csv(const CensusReport& r);
std::string census_to_markdown(const CensusReport& r);

}  // namespace gcg
