#include "gcg/group.hpp"

#include <algorithm>
#include <numeric>
#include <set>
#include <sstream>

namespace gcg {

// ---------------------------------------------------------------------------
// FiniteGroup

int FiniteGroup::element_by_name(const std::string& s) const {
    for (int i = 0; i < order(); ++i)
        if (names_[i] == s) return i;
    return -1;
}

bool FiniteGroup::is_abelian() const {
    for (int a = 0; a < order(); ++a)
        for (int b = a + 1; b < order(); ++b)
            if (table_[a][b] != table_[b][a]) return false;
    return true;
}

bool FiniteGroup::is_elementary_abelian_2() const {
    for (int a = 0; a < order(); ++a)
        if (element_order_[a] > 2) return false;
    return true;
}

int FiniteGroup::center_size() const {
    int c = 0;
    for (int a = 0; a < order(); ++a) {
        bool central = true;
        for (int b = 0; b < order() && central; ++b)
            if (table_[a][b] != table_[b][a]) central = false;
        if (central) ++c;
    }
    return c;
}

int FiniteGroup::exponent() const {
    int e = 1;
    for (int a = 0; a < order(); ++a) e = std::lcm(e, element_order_[a]);
    return e;
}

std::vector<int> FiniteGroup::order_histogram() const {
    std::vector<int> hist(static_cast<std::size_t>(order()) + 1, 0);
    for (int a = 0; a < order(); ++a) ++hist[static_cast<std::size_t>(element_order_[a])];
    return hist;
}

void FiniteGroup::set_generators(std::vector<std::pair<std::string, int>> gens) {
    for (const auto& [sym, idx] : gens)
        if (idx < 0 || idx >= order())
            throw Error("generator '" + sym + "' index out of range");
    generators_ = std::move(gens);
}

FiniteGroup validate_group(std::vector<std::vector<int>> table, std::vector<std::string> names) {
    const int n = static_cast<int>(table.size());
    if (n == 0) throw NotLatinSquare("multiplication table is empty");
    for (int i = 0; i < n; ++i) {
        if (static_cast<int>(table[i].size()) != n)
            throw NotLatinSquare("row " + std::to_string(i) + " has " +
                                 std::to_string(table[i].size()) + " entries, expected " +
                                 std::to_string(n));
        for (int j = 0; j < n; ++j)
            if (table[i][j] < 0 || table[i][j] >= n)
                throw NotLatinSquare("entry (" + std::to_string(i) + "," + std::to_string(j) +
                                     ") = " + std::to_string(table[i][j]) + " is out of range");
    }
    for (int i = 0; i < n; ++i) {
        std::vector<bool> row(n, false), col(n, false);
        for (int j = 0; j < n; ++j) {
            if (row[table[i][j]])
                throw NotLatinSquare("row " + std::to_string(i) + " repeats value " +
                                     std::to_string(table[i][j]));
            row[table[i][j]] = true;
            if (col[table[j][i]])
                throw NotLatinSquare("column " + std::to_string(i) + " repeats value " +
                                     std::to_string(table[j][i]));
            col[table[j][i]] = true;
        }
    }
    for (int j = 0; j < n; ++j)
        if (table[0][j] != j || table[j][0] != j)
            throw NoIdentity("element 0 is not a two-sided identity");
    for (int a = 0; a < n; ++a)
        for (int b = 0; b < n; ++b)
            for (int c = 0; c < n; ++c)
                if (table[table[a][b]][c] != table[a][table[b][c]])
                    throw NotAssociative("(" + std::to_string(a) + "*" + std::to_string(b) +
                                         ")*" + std::to_string(c) + " != " + std::to_string(a) +
                                         "*(" + std::to_string(b) + "*" + std::to_string(c) + ")");

    if (names.empty()) {
        names.push_back("e");
        for (int i = 1; i < n; ++i) names.push_back("x" + std::to_string(i));
    }
    if (static_cast<int>(names.size()) != n)
        throw Error("got " + std::to_string(names.size()) + " element names for a group of order " +
                    std::to_string(n));

    FiniteGroup g;
    g.table_ = std::move(table);
    g.names_ = std::move(names);
    g.inverse_.assign(static_cast<std::size_t>(n), -1);
    for (int a = 0; a < n; ++a)
        for (int b = 0; b < n; ++b)
            if (g.table_[a][b] == 0 && g.table_[b][a] == 0) g.inverse_[a] = b;
    for (int a = 0; a < n; ++a)
        if (g.inverse_[a] < 0)
            throw NoInverse("element " + std::to_string(a) + " has no two-sided inverse");
    g.element_order_.assign(static_cast<std::size_t>(n), 0);
    for (int a = 0; a < n; ++a) {
        int x = a, k = 1;
        while (x != 0) {
            x = g.table_[x][a];
            ++k;
        }
        g.element_order_[a] = k;
    }
    return g;
}

FiniteGroup trivial_group() { return validate_group({{0}}, {"e"}); }

// ---------------------------------------------------------------------------
// Products

namespace {
// True when s reads as a single parenthesized tuple: the opening paren
// matches the final one and encloses a comma at depth 1.
bool is_tuple_name(const std::string& s) {
    if (s.size() < 2 || s.front() != '(' || s.back() != ')') return false;
    int depth = 0;
    bool comma = false;
    for (std::size_t i = 0; i < s.size(); ++i) {
        if (s[i] == '(') ++depth;
        else if (s[i] == ')') {
            --depth;
            if (depth == 0 && i + 1 != s.size()) return false;  // "(12)(34)"
        } else if (s[i] == ',' && depth == 1) comma = true;
    }
    return depth == 0 && comma;
}

std::string tuple_part(const std::string& s) {
    return is_tuple_name(s) ? s.substr(1, s.size() - 2) : s;
}
}  // namespace

std::string join_tuple_name(const std::string& l, const std::string& r) {
    return "(" + tuple_part(l) + "," + tuple_part(r) + ")";
}

FiniteGroup direct_product(const FiniteGroup& g, const FiniteGroup& h) {
    const int ng = g.order(), nh = h.order(), n = ng * nh;
    std::vector<std::vector<int>> table(static_cast<std::size_t>(n),
                                        std::vector<int>(static_cast<std::size_t>(n)));
    std::vector<std::string> names;
    names.reserve(static_cast<std::size_t>(n));
    for (int i = 0; i < ng; ++i)
        for (int j = 0; j < nh; ++j) names.push_back(join_tuple_name(g.name(i), h.name(j)));
    for (int i = 0; i < ng; ++i)
        for (int j = 0; j < nh; ++j)
            for (int k = 0; k < ng; ++k)
                for (int l = 0; l < nh; ++l)
                    table[static_cast<std::size_t>(i * nh + j)][static_cast<std::size_t>(k * nh + l)] =
                        g.mul(i, k) * nh + h.mul(j, l);

    FiniteGroup p = validate_group(std::move(table), std::move(names));
    p.left_ = std::make_shared<const FiniteGroup>(g);
    p.right_ = std::make_shared<const FiniteGroup>(h);
    std::vector<std::pair<std::string, int>> gens;
    for (const auto& [sym, idx] : g.generators()) {
        (void)sym;
        int e = idx * nh;
        gens.emplace_back(p.name(e), e);
    }
    for (const auto& [sym, idx] : h.generators()) {
        (void)sym;
        gens.emplace_back(p.name(idx), idx);
    }
    p.set_generators(std::move(gens));
    return p;
}

// ---------------------------------------------------------------------------
// ElementSet

ElementSet ElementSet::of(const FiniteGroup& g, std::initializer_list<int> xs) {
    ElementSet s(g);
    for (int x : xs) s.insert(x);
    return s;
}

ElementSet ElementSet::of(const FiniteGroup& g, const std::vector<int>& xs) {
    ElementSet s(g);
    for (int x : xs) s.insert(x);
    return s;
}

ElementSet ElementSet::full(const FiniteGroup& g) {
    ElementSet s(g);
    s.bits_.set();
    return s;
}

std::vector<int> ElementSet::elements() const {
    std::vector<int> out;
    for (auto i = bits_.find_first(); i != boost::dynamic_bitset<>::npos; i = bits_.find_next(i))
        out.push_back(static_cast<int>(i));
    return out;
}

int ElementSet::first() const {
    auto i = bits_.find_first();
    return i == boost::dynamic_bitset<>::npos ? -1 : static_cast<int>(i);
}

std::string ElementSet::to_string() const {
    std::string out = "{";
    bool first = true;
    for (int x : elements()) {
        if (!first) out += ", ";
        first = false;
        out += group_->name(x);
    }
    return out + "}";
}

ElementSet set_product(const ElementSet& a, const ElementSet& b) {
    ElementSet out(a.group());
    for (int x : a.elements())
        for (int y : b.elements()) out.insert(a.group().mul(x, y));
    return out;
}

ElementSet set_inverse(const ElementSet& a) {
    ElementSet out(a.group());
    for (int x : a.elements()) out.insert(a.group().inv(x));
    return out;
}

bool is_subgroup(const ElementSet& h) {
    const FiniteGroup& g = h.group();
    if (!h.contains(g.identity())) return false;
    std::vector<int> xs = h.elements();
    for (int x : xs) {
        if (!h.contains(g.inv(x))) return false;
        for (int y : xs)
            if (!h.contains(g.mul(x, y))) return false;
    }
    return true;
}

ElementSet right_coset(const ElementSet& h, int g) {
    if (!is_subgroup(h)) throw NotASubgroup(h.to_string() + " is not a subgroup");
    ElementSet out(h.group());
    for (int x : h.elements()) out.insert(h.group().mul(x, g));
    return out;
}

int subgroup_index(const ElementSet& h) {
    if (!is_subgroup(h)) throw NotASubgroup(h.to_string() + " is not a subgroup");
    return h.group().order() / h.size();
}

ElementSet generated_subgroup(const ElementSet& t) {
    const FiniteGroup& g = t.group();
    ElementSet h = t;
    h.insert(g.identity());
    bool changed = true;
    while (changed) {
        changed = false;
        std::vector<int> xs = h.elements();
        for (int x : xs)
            for (int y : xs) {
                int z = g.mul(x, y);
                if (!h.contains(z)) {
                    h.insert(z);
                    changed = true;
                }
            }
    }
    return h;
}

ElementSet squares(const FiniteGroup& g) {
    ElementSet out(g);
    for (int x = 0; x < g.order(); ++x) out.insert(g.mul(x, x));
    return out;
}

// ---------------------------------------------------------------------------
// GroupMap

GroupMap::GroupMap(const FiniteGroup& g, std::vector<int> image)
    : group_(&g), image_(std::move(image)) {
    const int n = g.order();
    if (static_cast<int>(image_.size()) != n)
        throw InvalidGroupMap("image table has " + std::to_string(image_.size()) +
                              " entries, expected " + std::to_string(n));
    std::vector<bool> seen(static_cast<std::size_t>(n), false);
    for (int x = 0; x < n; ++x) {
        if (image_[x] < 0 || image_[x] >= n)
            throw InvalidGroupMap("image of " + g.name(x) + " is out of range");
        if (seen[image_[x]])
            throw InvalidGroupMap("not a bijection: " + g.name(image_[x]) + " is hit twice");
        seen[image_[x]] = true;
    }
    if (image_[0] != 0) throw InvalidGroupMap("identity is not fixed");
    for (int x = 0; x < n; ++x)
        for (int y = 0; y < n; ++y)
            if (image_[g.mul(x, y)] != g.mul(image_[x], image_[y]))
                throw InvalidGroupMap("not a homomorphism at (" + g.name(x) + ", " + g.name(y) +
                                      ")");
}

bool GroupMap::is_identity() const {
    for (int x = 0; x < group_->order(); ++x)
        if (image_[x] != x) return false;
    return true;
}

bool GroupMap::is_involution() const {
    for (int x = 0; x < group_->order(); ++x)
        if (image_[image_[x]] != x) return false;
    return true;
}

GroupMap GroupMap::inverse() const {
    std::vector<int> inv(image_.size());
    for (int x = 0; x < group_->order(); ++x) inv[image_[x]] = x;
    return GroupMap(*group_, std::move(inv));
}

std::string GroupMap::to_string() const {
    const auto& gens = group_->generators();
    std::string out;
    if (gens.empty()) {
        out = "[";
        for (int x = 0; x < group_->order(); ++x) {
            if (x) out += " ";
            out += std::to_string(image_[x]);
        }
        return out + "]";
    }
    bool first = true;
    for (const auto& [sym, idx] : gens) {
        if (!first) out += ", ";
        first = false;
        out += sym + "->" + group_->name(image_[idx]);
    }
    return out;
}

GroupMap identity_map(const FiniteGroup& g) {
    std::vector<int> image(static_cast<std::size_t>(g.order()));
    std::iota(image.begin(), image.end(), 0);
    return GroupMap(g, std::move(image));
}

GroupMap compose(const GroupMap& f, const GroupMap& g) {
    if (f.group().order() != g.group().order())
        throw Error("cannot compose maps of different groups");
    std::vector<int> image(static_cast<std::size_t>(f.group().order()));
    for (int x = 0; x < f.group().order(); ++x) image[x] = f(g(x));
    return GroupMap(f.group(), std::move(image));
}

GroupMap inverse_automorphism(const FiniteGroup& g) {
    if (!g.is_abelian())
        throw NotAbelian("inversion is an automorphism only for abelian groups");
    std::vector<int> image(static_cast<std::size_t>(g.order()));
    for (int x = 0; x < g.order(); ++x) image[x] = g.inv(x);
    return GroupMap(g, std::move(image));
}

ElementSet map_set(const GroupMap& f, const ElementSet& a) {
    ElementSet out(f.group());
    for (int x : a.elements()) out.insert(f(x));
    return out;
}

// ---------------------------------------------------------------------------
// Automorphism / isomorphism search

namespace detail {

// Propagates img[x*y] = img[x]*img[y] to a fixed point.  Returns false on a
// conflict with an already-assigned image.  At the fixed point the final
// sweep has verified the homomorphism identity on every pair of assigned
// elements, so a fully-assigned table that survives is a homomorphism.
static bool saturate(const FiniteGroup& dom, const FiniteGroup& cod, std::vector<int>& img) {
    const int n = dom.order();
    bool changed = true;
    while (changed) {
        changed = false;
        for (int x = 0; x < n; ++x) {
            if (img[x] < 0) continue;
            for (int y = 0; y < n; ++y) {
                if (img[y] < 0) continue;
                const int z = dom.mul(x, y);
                const int w = cod.mul(img[x], img[y]);
                if (img[z] < 0) {
                    img[z] = w;
                    changed = true;
                } else if (img[z] != w) {
                    return false;
                }
            }
        }
    }
    return true;
}

std::optional<std::vector<int>> complete_homomorphism(const FiniteGroup& dom,
                                                      const FiniteGroup& cod,
                                                      std::vector<int> partial) {
    if (static_cast<int>(partial.size()) != dom.order())
        throw Error("partial image table has the wrong size");
    if (partial[0] < 0) partial[0] = 0;
    if (partial[0] != 0) return std::nullopt;
    if (!saturate(dom, cod, partial)) return std::nullopt;
    std::vector<bool> seen(static_cast<std::size_t>(cod.order()), false);
    for (int x = 0; x < dom.order(); ++x) {
        if (partial[x] < 0) return std::nullopt;  // assignments do not generate dom
        if (seen[partial[x]]) return std::nullopt;
        seen[partial[x]] = true;
    }
    return partial;
}

}  // namespace detail

namespace {

// Minimal-by-greed generating set: repeatedly adjoin the least element
// outside the subgroup generated so far.
std::vector<int> greedy_generators(const FiniteGroup& g) {
    std::vector<int> gens;
    ElementSet h = generated_subgroup(ElementSet(g));
    while (h.size() < g.order()) {
        int x = 0;
        while (h.contains(x)) ++x;
        gens.push_back(x);
        h = generated_subgroup(ElementSet::of(g, gens));
    }
    return gens;
}

void search_isomorphisms(const FiniteGroup& dom, const FiniteGroup& cod,
                         const std::vector<int>& gens, const std::vector<int>& img,
                         std::size_t depth, bool stop_at_first,
                         std::vector<std::vector<int>>& out) {
    if (stop_at_first && !out.empty()) return;
    if (depth == gens.size()) {
        std::vector<bool> seen(static_cast<std::size_t>(cod.order()), false);
        for (int x = 0; x < dom.order(); ++x) {
            if (img[x] < 0) throw Error("generator images failed to determine the map");
            if (seen[img[x]]) return;  // a collapsing homomorphism, not injective
            seen[img[x]] = true;
        }
        out.push_back(img);
        return;
    }
    const int gen = gens[depth];
    for (int c = 0; c < cod.order(); ++c) {
        if (cod.element_order(c) != dom.element_order(gen)) continue;
        std::vector<int> next = img;
        next[gen] = c;
        if (!detail::saturate(dom, cod, next)) continue;
        search_isomorphisms(dom, cod, gens, next, depth + 1, stop_at_first, out);
        if (stop_at_first && !out.empty()) return;
    }
}

std::vector<std::vector<int>> all_isomorphisms(const FiniteGroup& dom, const FiniteGroup& cod,
                                               bool stop_at_first) {
    std::vector<int> img(static_cast<std::size_t>(dom.order()), -1);
    img[0] = 0;
    std::vector<std::vector<int>> out;
    search_isomorphisms(dom, cod, greedy_generators(dom), img, 0, stop_at_first, out);
    std::sort(out.begin(), out.end());
    return out;
}

}  // namespace

std::vector<GroupMap> automorphism_group(const FiniteGroup& g) {
    if (g.order() > 64)
        throw OrderLimitExceeded("automorphism search is limited to groups of order 64");
    std::vector<GroupMap> maps;
    for (auto& image : all_isomorphisms(g, g, false)) maps.emplace_back(g, std::move(image));
    return maps;
}

std::vector<GroupMap> involutory_automorphisms(const FiniteGroup& g, bool include_identity) {
    std::vector<GroupMap> out;
    for (const GroupMap& f : automorphism_group(g))
        if (f.is_involution() && (include_identity || !f.is_identity())) out.push_back(f);
    return out;
}

std::vector<std::vector<GroupMap>> involution_conjugacy_classes(const FiniteGroup& g) {
    const std::vector<GroupMap> invs = involutory_automorphisms(g, false);
    const std::vector<GroupMap> auts = automorphism_group(g);
    std::set<std::vector<int>> assigned;
    std::vector<std::vector<GroupMap>> classes;
    for (const GroupMap& f : invs) {
        if (assigned.count(f.image())) continue;
        std::set<std::vector<int>> members;
        for (const GroupMap& s : auts) members.insert(compose(compose(s, f), s.inverse()).image());
        std::vector<GroupMap> cls;
        for (const auto& image : members) {
            assigned.insert(image);
            cls.emplace_back(g, image);
        }
        classes.push_back(std::move(cls));
    }
    return classes;  // ordered by least member: invs are scanned in sorted order
}

std::optional<std::vector<int>> find_group_isomorphism(const FiniteGroup& g,
                                                       const FiniteGroup& h) {
    if (g.order() > 64 || h.order() > 64)
        throw OrderLimitExceeded("isomorphism search is limited to groups of order 64");
    if (g.order() != h.order()) return std::nullopt;
    if (g.is_abelian() != h.is_abelian()) return std::nullopt;
    if (g.center_size() != h.center_size()) return std::nullopt;
    if (g.order_histogram() != h.order_histogram()) return std::nullopt;
    auto found = all_isomorphisms(g, h, true);
    if (found.empty()) return std::nullopt;
    return found.front();
}

GroupMap product_map(const FiniteGroup& product, const GroupMap& f, const GroupMap& g) {
    const FiniteGroup* l = product.left_factor();
    const FiniteGroup* r = product.right_factor();
    if (!l || !r) throw Error("group was not built by direct_product");
    if (f.group().table() != l->table() || g.group().table() != r->table())
        throw Error("maps do not act on the factors of this product");
    const int nh = r->order();
    std::vector<int> image(static_cast<std::size_t>(product.order()));
    for (int i = 0; i < l->order(); ++i)
        for (int j = 0; j < nh; ++j) image[i * nh + j] = f(i) * nh + g(j);
    return GroupMap(product, std::move(image));
}

}  // namespace gcg
