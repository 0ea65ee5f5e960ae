#pragma once

#include <boost/dynamic_bitset.hpp>
#include <initializer_list>
#include <memory>
#include <optional>
#include <string>
#include <utility>
#include <vector>

#include "gcg/errors.hpp"

namespace gcg {

class ElementSet;
class GroupMap;

// A finite group given by its full multiplication table.  Elements are the
// indices 0..order-1; index 0 is always the identity.  Instances are
// immutable once built; ElementSet / GroupMap / GCSubset hold a pointer to
// the group they were created from, so the group must outlive them.
class FiniteGroup {
public:
    int order() const { return static_cast<int>(table_.size()); }
    int mul(int a, int b) const { return table_[a][b]; }
    int inv(int a) const { return inverse_[a]; }
    int identity() const { return 0; }
    int element_order(int a) const { return element_order_[a]; }
    int conjugate(int g, int by) const { return mul(mul(by, g), inv(by)); }

    const std::string& name(int a) const { return names_[a]; }
    const std::vector<std::string>& names() const { return names_; }
    // Index of the element with the given name, or -1.
    int element_by_name(const std::string& s) const;

    bool is_abelian() const;
    bool is_elementary_abelian_2() const;
    int center_size() const;
    int exponent() const;
    // hist[k] = number of elements of order k (index 0 unused).
    std::vector<int> order_histogram() const;

    // Designated generators with their word symbols ("a", "b", "g", ...).
    // Set by the catalog constructors; may be empty for raw tables.
    const std::vector<std::pair<std::string, int>>& generators() const { return generators_; }
    void set_generators(std::vector<std::pair<std::string, int>> gens);

    // Set when this group was produced by direct_product.
    const FiniteGroup* left_factor() const { return left_.get(); }
    const FiniteGroup* right_factor() const { return right_.get(); }

    const std::vector<std::vector<int>>& table() const { return table_; }

    friend FiniteGroup validate_group(std::vector<std::vector<int>> table,
                                      std::vector<std::string> names);
    friend FiniteGroup direct_product(const FiniteGroup& g, const FiniteGroup& h);

private:
    FiniteGroup() = default;

    std::vector<std::vector<int>> table_;
    std::vector<std::string> names_;
    std::vector<int> inverse_;
    std::vector<int> element_order_;
    std::vector<std::pair<std::string, int>> generators_;
    std::shared_ptr<const FiniteGroup> left_, right_;
};

// Checks that the table is a group: square over 0..n-1, a Latin square,
// row/column 0 the identity, associative.  (With those established, inverses
// exist automatically; they are still verified.)  Throws NotLatinSquare,
// NoIdentity, NotAssociative or NoInverse naming the first violation.
FiniteGroup validate_group(std::vector<std::vector<int>> table, std::vector<std::string> names);

FiniteGroup trivial_group();

// Direct product; element (i, j) becomes index i*|H|+j.  Component names are
// joined into flat tuples: ("a", "0") -> "(a,0)", ("(1,0)", "2") -> "(1,0,2)".
FiniteGroup direct_product(const FiniteGroup& g, const FiniteGroup& h);

// The tuple-joining rule used by direct_product for names and labels.
std::string join_tuple_name(const std::string& l, const std::string& r);

// A subset of a group's elements, stored as a bit set.
class ElementSet {
public:
    explicit ElementSet(const FiniteGroup& g)
        : group_(&g), bits_(static_cast<std::size_t>(g.order())) {}
    static ElementSet of(const FiniteGroup& g, std::initializer_list<int> xs);
    static ElementSet of(const FiniteGroup& g, const std::vector<int>& xs);
    static ElementSet full(const FiniteGroup& g);

    const FiniteGroup& group() const { return *group_; }
    bool contains(int a) const { return bits_.test(static_cast<std::size_t>(a)); }
    void insert(int a) { bits_.set(static_cast<std::size_t>(a)); }
    void erase(int a) { bits_.reset(static_cast<std::size_t>(a)); }
    int size() const { return static_cast<int>(bits_.count()); }
    bool empty() const { return bits_.none(); }
    std::vector<int> elements() const;  // ascending index order
    int first() const;                  // least element, -1 if empty

    bool operator==(const ElementSet& o) const { return bits_ == o.bits_; }
    bool operator!=(const ElementSet& o) const { return !(*this == o); }
    bool subset_of(const ElementSet& o) const { return bits_.is_subset_of(o.bits_); }

    ElementSet& operator|=(const ElementSet& o) { bits_ |= o.bits_; return *this; }
    ElementSet& operator&=(const ElementSet& o) { bits_ &= o.bits_; return *this; }
    ElementSet& operator-=(const ElementSet& o) { bits_ -= o.bits_; return *this; }
    friend ElementSet operator|(ElementSet a, const ElementSet& b) { return a |= b; }
    friend ElementSet operator&(ElementSet a, const ElementSet& b) { return a &= b; }
    friend ElementSet operator-(ElementSet a, const ElementSet& b) { return a -= b; }

    // "{e, a^2}" in ascending index order; "{}" when empty.
    std::string to_string() const;

private:
    const FiniteGroup* group_;
    boost::dynamic_bitset<> bits_;
};

ElementSet set_product(const ElementSet& a, const ElementSet& b);  // {xy}
ElementSet set_inverse(const ElementSet& a);                       // {x^-1}
bool is_subgroup(const ElementSet& h);
// H*g for a verified subgroup H; throws NotASubgroup otherwise.
ElementSet right_coset(const ElementSet& h, int g);
// |G| / |H| for a verified subgroup H; throws NotASubgroup otherwise.
int subgroup_index(const ElementSet& h);
// Subgroup generated by the given elements (always contains the identity).
ElementSet generated_subgroup(const ElementSet& t);
ElementSet squares(const FiniteGroup& g);  // {x^2}

// A homomorphic bijection of a group onto itself, stored as an image table.
// Construction validates bijectivity and the homomorphism property.
class GroupMap {
public:
    GroupMap(const FiniteGroup& g, std::vector<int> image);

    const FiniteGroup& group() const { return *group_; }
    int operator()(int a) const { return image_[a]; }
    const std::vector<int>& image() const { return image_; }

    bool is_identity() const;
    bool is_involution() const;  // map * map == identity (includes identity)

    GroupMap inverse() const;

    bool operator==(const GroupMap& o) const { return image_ == o.image_; }
    bool operator!=(const GroupMap& o) const { return !(*this == o); }
    bool operator<(const GroupMap& o) const { return image_ < o.image_; }

    // "a->a^3, b->b" over designated generators, else the full image list.
    std::string to_string() const;

private:
    const FiniteGroup* group_;
    std::vector<int> image_;
};

GroupMap identity_map(const FiniteGroup& g);
GroupMap compose(const GroupMap& f, const GroupMap& g);  // x -> f(g(x))
// x -> x^-1; an automorphism only for abelian groups (NotAbelian otherwise).
GroupMap inverse_automorphism(const FiniteGroup& g);
// beta(A) for a set A.
ElementSet map_set(const GroupMap& f, const ElementSet& a);

// All automorphisms, sorted by image table.  Guard: |G| <= 64
// (OrderLimitExceeded).  Found by picking a minimal generating set, trying
// order-preserving images for each generator and completing the map by
// closure, rejecting conflicts.
std::vector<GroupMap> automorphism_group(const FiniteGroup& g);

// Automorphisms of order dividing 2; the identity is excluded unless asked for.
std::vector<GroupMap> involutory_automorphisms(const FiniteGroup& g,
                                               bool include_identity = false);

// Non-identity involutory automorphisms grouped into conjugacy classes under
// the full automorphism group.  Classes are sorted by their lexicographically
// least member, which is placed first as the representative.
std::vector<std::vector<GroupMap>> involution_conjugacy_classes(const FiniteGroup& g);

// Image table of an isomorphism g -> h, if one exists.  Same search engine as
// automorphism_group.  Guard: orders <= 64.
std::optional<std::vector<int>> find_group_isomorphism(const FiniteGroup& g,
                                                       const FiniteGroup& h);

// alpha1 x alpha2 on a product group built by direct_product.
GroupMap product_map(const FiniteGroup& product, const GroupMap& f, const GroupMap& g);

namespace detail {
// Completes a partial homomorphism dom -> cod (partial[x] == -1 for unknown)
// by multiplicative closure.  Returns std::nullopt on any conflict or if the
// known elements do not generate dom.  Injectivity of the result is checked.
std::optional<std::vector<int>> complete_homomorphism(const FiniteGroup& dom,
                                                      const FiniteGroup& cod,
                                                      std::vector<int> partial);
}  // namespace detail

}  // namespace gcg
