#include "gcg/catalog.hpp"

#include <algorithm>
#include <array>
#include <cctype>
#include <functional>
#include <map>
#include <numeric>

#include "gcg/errors.hpp"

namespace gcg {

namespace {

// ---------------------------------------------------------------------------
// Parsing
// ---------------------------------------------------------------------------

struct Parser {
    const std::string& text;
    std::size_t pos = 0;

    explicit Parser(const std::string& t) : text(t) {}

    void skip_ws() {
        while (pos < text.size() && std::isspace(static_cast<unsigned char>(text[pos]))) ++pos;
    }
    bool at_end() {
        skip_ws();
        return pos >= text.size();
    }
    char peek() {
        skip_ws();
        return pos < text.size() ? text[pos] : '\0';
    }

    [[noreturn]] void fail(const std::string& expected) {
        throw ParseError("cannot parse group expression \"" + text + "\"", pos, expected);
    }

    int parse_int(const std::string& what) {
        skip_ws();
        std::size_t start = pos;
        while (pos < text.size() && std::isdigit(static_cast<unsigned char>(text[pos]))) ++pos;
        if (pos == start) fail(what);
        long v = 0;
        for (std::size_t i = start; i < pos; ++i) {
            v = v * 10 + (text[i] - '0');
            if (v > 1000000) { pos = start; fail("a smaller integer"); }
        }
        if (v < 1) { pos = start; fail("a positive integer"); }
        return static_cast<int>(v);
    }

    std::shared_ptr<const GroupExpr> make(GroupExpr::Kind k, int param = 0,
                                          std::shared_ptr<const GroupExpr> l = nullptr,
                                          std::shared_ptr<const GroupExpr> r = nullptr) {
        auto e = std::make_shared<GroupExpr>();
        e->kind = k;
        e->param = param;
        e->left = std::move(l);
        e->right = std::move(r);
        return e;
    }

    std::shared_ptr<const GroupExpr> parse_atom() {
        skip_ws();
        if (pos >= text.size()) fail("a group name or '('");
        char c = text[pos];
        if (c == '(') {
            ++pos;
            auto inner = parse_expr();
            skip_ws();
            if (pos >= text.size() || text[pos] != ')') fail("')'");
            ++pos;
            return inner;
        }
        std::size_t start = pos;
        while (pos < text.size() && std::isupper(static_cast<unsigned char>(text[pos]))) ++pos;
        if (pos == start) fail("a group name (Z, D, T, Q8, S, A, SL23, F54, U24, V24, U30) or '('");
        std::string name = text.substr(start, pos - start);
        int n = parse_int("an integer after '" + name + "'");
        if (name == "Z") return make(GroupExpr::Kind::Cyclic, n);
        if (name == "D") return make(GroupExpr::Kind::Dihedral, n);
        if (name == "T") return make(GroupExpr::Kind::Dicyclic, n);
        if (name == "S") return make(GroupExpr::Kind::Sym, n);
        if (name == "A") return make(GroupExpr::Kind::Alt, n);
        if (name == "Q") {
            if (n != 8) { pos = start; fail("Q8"); }
            return make(GroupExpr::Kind::Quaternion);
        }
        if (name == "SL") {
            if (n != 23) { pos = start; fail("SL23"); }
            return make(GroupExpr::Kind::SL23);
        }
        if (name == "F") {
            if (n != 54) { pos = start; fail("F54"); }
            return make(GroupExpr::Kind::F54);
        }
        if (name == "U") {
            if (n == 24) return make(GroupExpr::Kind::U24);
            if (n == 30) return make(GroupExpr::Kind::U30);
            pos = start;
            fail("U24 or U30");
        }
        if (name == "V") {
            if (n != 24) { pos = start; fail("V24"); }
            return make(GroupExpr::Kind::V24);
        }
        pos = start;
        fail("a known group family (Z, D, T, Q8, S, A, SL23, F54, U24, V24, U30)");
    }

    std::shared_ptr<const GroupExpr> parse_term() {
        auto base = parse_atom();
        skip_ws();
        if (pos < text.size() && text[pos] == '^') {
            ++pos;
            int k = parse_int("an exponent");
            return make(GroupExpr::Kind::Power, k, base);
        }
        return base;
    }

    std::shared_ptr<const GroupExpr> parse_expr() {
        auto lhs = parse_term();
        while (true) {
            skip_ws();
            if (pos < text.size() && text[pos] == 'x') {
                ++pos;
                auto rhs = parse_term();
                lhs = make(GroupExpr::Kind::Product, 0, lhs, rhs);
            } else {
                return lhs;
            }
        }
    }
};

bool needs_parens_in_product(const GroupExpr& child, bool right_side) {
    return child.kind == GroupExpr::Kind::Product && right_side;
}

bool needs_parens_in_power(const GroupExpr& base) {
    return base.kind == GroupExpr::Kind::Product || base.kind == GroupExpr::Kind::Power;
}

// ---------------------------------------------------------------------------
// Family constructors
// ---------------------------------------------------------------------------

constexpr int kMaxOrder = 64;

// Normal-form word name a^i b^j with index j*na + i.
std::string word_name(int i, int j) {
    std::string s;
    if (i == 1) s += "a";
    else if (i > 1) s += "a^" + std::to_string(i);
    if (j == 1) s += "b";
    else if (j > 1) s += "b^" + std::to_string(j);
    if (s.empty()) s = "e";
    return s;
}

// Builds a group of words a^i b^j (0 <= i < na, 0 <= j < nb) from a product
// rule on exponent pairs, then validates the table.
FiniteGroup two_generator_group(int na, int nb,
                                const std::function<std::pair<int, int>(int, int, int, int)>& rule) {
    const int n = na * nb;
    std::vector<std::vector<int>> table(n, std::vector<int>(n));
    std::vector<std::string> names(n);
    for (int j = 0; j < nb; ++j)
        for (int i = 0; i < na; ++i) names[j * na + i] = word_name(i, j);
    for (int x = 0; x < n; ++x) {
        int i = x % na, j = x / na;
        for (int y = 0; y < n; ++y) {
            int k = y % na, l = y / na;
            auto [ri, rj] = rule(i, j, k, l);
            ri = ((ri % na) + na) % na;
            rj = ((rj % nb) + nb) % nb;
            table[x][y] = rj * na + ri;
        }
    }
    FiniteGroup g = validate_group(std::move(table), std::move(names));
    g.set_generators({{"a", 1}, {"b", na}});
    return g;
}

// Cycle notation for a permutation of {1..n} given as 0-based images.
std::string cycle_name(const std::vector<int>& p) {
    const int n = static_cast<int>(p.size());
    std::vector<bool> seen(n, false);
    std::string out;
    for (int s = 0; s < n; ++s) {
        if (seen[s] || p[s] == s) continue;
        out += '(';
        int c = s;
        do {
            seen[c] = true;
            out += std::to_string(c + 1);
            c = p[c];
        } while (c != s);
        out += ')';
    }
    return out.empty() ? "e" : out;
}

bool is_even_permutation(const std::vector<int>& p) {
    const int n = static_cast<int>(p.size());
    std::vector<bool> seen(n, false);
    int transpositions = 0;
    for (int s = 0; s < n; ++s) {
        if (seen[s]) continue;
        int len = 0, c = s;
        do {
            seen[c] = true;
            ++len;
            c = p[c];
        } while (c != s);
        transpositions += len - 1;
    }
    return transpositions % 2 == 0;
}

FiniteGroup permutation_group(int n, bool alternating) {
    if (n < 1) throw UnsupportedOrder("permutation group degree must be >= 1");
    std::vector<std::vector<int>> perms;
    std::vector<int> p(n);
    std::iota(p.begin(), p.end(), 0);
    do {
        if (!alternating || is_even_permutation(p)) perms.push_back(p);
    } while (std::next_permutation(p.begin(), p.end()));
    const int m = static_cast<int>(perms.size());
    if (m > kMaxOrder)
        throw UnsupportedOrder("group order " + std::to_string(m) + " exceeds the supported bound " +
                               std::to_string(kMaxOrder));
    std::map<std::vector<int>, int> index_of;
    for (int i = 0; i < m; ++i) index_of[perms[i]] = i;
    std::vector<std::vector<int>> table(m, std::vector<int>(m));
    std::vector<std::string> names(m);
    for (int i = 0; i < m; ++i) names[i] = cycle_name(perms[i]);
    for (int i = 0; i < m; ++i)
        for (int j = 0; j < m; ++j) {
            // (fg)(x) = f(g(x))
            std::vector<int> fg(n);
            for (int x = 0; x < n; ++x) fg[x] = perms[i][perms[j][x]];
            table[i][j] = index_of.at(fg);
        }
    FiniteGroup g = validate_group(std::move(table), std::move(names));
    std::vector<std::pair<std::string, int>> gens;
    auto perm_index = [&](const std::vector<int>& q) { return index_of.at(q); };
    if (!alternating && n >= 2) {
        std::vector<int> t(n);
        std::iota(t.begin(), t.end(), 0);
        std::swap(t[0], t[1]);
        gens.emplace_back(cycle_name(t), perm_index(t));
        if (n >= 3) {
            std::vector<int> c(n);
            for (int x = 0; x < n; ++x) c[x] = (x + 1) % n;
            gens.emplace_back(cycle_name(c), perm_index(c));
        }
    } else if (alternating && n >= 3) {
        std::vector<int> t3(n);
        std::iota(t3.begin(), t3.end(), 0);
        t3[0] = 1; t3[1] = 2; t3[2] = 0;  // (123)
        gens.emplace_back(cycle_name(t3), perm_index(t3));
        if (n == 4) {
            std::vector<int> d{1, 0, 3, 2};  // (12)(34)
            gens.emplace_back(cycle_name(d), perm_index(d));
        } else if (n >= 5) {
            std::vector<int> c(n);
            std::iota(c.begin(), c.end(), 0);
            for (int x = 0; x < 5; ++x) c[x] = (x + 1) % 5;  // (12345)
            gens.emplace_back(cycle_name(c), perm_index(c));
        }
    }
    g.set_generators(std::move(gens));
    return g;
}

std::string matrix_name(const std::array<int, 4>& m) {
    return "[[" + std::to_string(m[0]) + "," + std::to_string(m[1]) + "],[" +
           std::to_string(m[2]) + "," + std::to_string(m[3]) + "]]";
}

// ---------------------------------------------------------------------------
// Abelian catalogs by invariant factors
// ---------------------------------------------------------------------------

std::vector<std::vector<int>> partitions_of(int e) {
    std::vector<std::vector<int>> out;
    std::vector<int> cur;
    std::function<void(int, int)> rec = [&](int rest, int maxpart) {
        if (rest == 0) {
            out.push_back(cur);
            return;
        }
        for (int part = std::min(rest, maxpart); part >= 1; --part) {
            cur.push_back(part);
            rec(rest - part, part);
            cur.pop_back();
        }
    };
    rec(e, e);
    return out;
}

// All abelian groups of order n as ascending invariant-factor chains
// d1 | d2 | ... | dk.
std::vector<std::vector<int>> invariant_factor_lists(int n) {
    std::vector<std::pair<int, int>> primes;  // (p, exponent)
    int m = n;
    for (int p = 2; p * p <= m; ++p)
        if (m % p == 0) {
            int e = 0;
            while (m % p == 0) { m /= p; ++e; }
            primes.emplace_back(p, e);
        }
    if (m > 1) primes.emplace_back(m, 1);

    std::vector<std::vector<std::vector<int>>> per_prime;
    for (auto& [p, e] : primes) per_prime.push_back(partitions_of(e));

    std::vector<std::vector<int>> result;
    std::vector<int> choice(primes.size(), 0);
    while (true) {
        std::size_t len = 0;
        for (std::size_t i = 0; i < primes.size(); ++i)
            len = std::max(len, per_prime[i][choice[i]].size());
        std::vector<int> factors(len, 1);  // factors[0] = largest invariant factor
        for (std::size_t i = 0; i < primes.size(); ++i) {
            const auto& parts = per_prime[i][choice[i]];  // descending
            for (std::size_t j = 0; j < parts.size(); ++j) {
                int pw = 1;
                for (int t = 0; t < parts[j]; ++t) pw *= primes[i].first;
                factors[j] *= pw;
            }
        }
        std::reverse(factors.begin(), factors.end());  // ascending d1 | ... | dk
        result.push_back(std::move(factors));
        std::size_t i = 0;
        for (; i < primes.size(); ++i) {
            if (static_cast<std::size_t>(++choice[i]) < per_prime[i].size()) break;
            choice[i] = 0;
        }
        if (i == primes.size()) break;
    }
    return result;
}

std::string abelian_name(const std::vector<int>& factors) {
    std::string out;
    std::size_t i = 0;
    while (i < factors.size()) {
        std::size_t j = i;
        while (j < factors.size() && factors[j] == factors[i]) ++j;
        if (!out.empty()) out += " x ";
        out += "Z" + std::to_string(factors[i]);
        if (j - i > 1) out += "^" + std::to_string(j - i);
        i = j;
    }
    return out;
}

FiniteGroup abelian_group(const std::vector<int>& factors) {
    FiniteGroup g = cyclic_group(factors[0]);
    for (std::size_t i = 1; i < factors.size(); ++i)
        g = direct_product(g, cyclic_group(factors[i]));
    return g;
}

const std::map<int, std::vector<std::string>>& nonabelian_lists() {
    static const std::map<int, std::vector<std::string>> lists = {
        {4, {}},
        {6, {"D6"}},
        {8, {"D8", "Q8"}},
        {10, {"D10"}},
        {12, {"D12", "T12", "A4"}},
        {20, {"D20", "T20", "F54"}},
        {24,
         {"D12 x Z2", "T12 x Z2", "D6 x Z4", "A4 x Z2", "Q8 x Z3", "D24", "T24", "S4",
          "D8 x Z3", "U24", "V24", "SL23"}},
        {30, {"D30", "U30", "D10 x Z3"}},
    };
    return lists;
}

}  // namespace

// ---------------------------------------------------------------------------
// Public API
// ---------------------------------------------------------------------------

GroupExpr parse_group_expr(const std::string& text) {
    Parser p(text);
    if (p.at_end()) p.fail("a group expression");
    auto e = p.parse_expr();
    if (!p.at_end()) p.fail("'x', '^' or end of input");
    return *e;
}

std::string print_group_expr(const GroupExpr& e) {
    using K = GroupExpr::Kind;
    switch (e.kind) {
        case K::Cyclic: return "Z" + std::to_string(e.param);
        case K::ElemAbelian2: return "Z2^" + std::to_string(e.param);
        case K::Dihedral: return "D" + std::to_string(e.param);
        case K::Dicyclic: return "T" + std::to_string(e.param);
        case K::Quaternion: return "Q8";
        case K::Sym: return "S" + std::to_string(e.param);
        case K::Alt: return "A" + std::to_string(e.param);
        case K::SL23: return "SL23";
        case K::F54: return "F54";
        case K::U24: return "U24";
        case K::V24: return "V24";
        case K::U30: return "U30";
        case K::Product: {
            std::string l = print_group_expr(*e.left);
            std::string r = print_group_expr(*e.right);
            if (needs_parens_in_product(*e.left, false)) l = "(" + l + ")";
            if (needs_parens_in_product(*e.right, true)) r = "(" + r + ")";
            return l + " x " + r;
        }
        case K::Power: {
            std::string b = print_group_expr(*e.left);
            if (needs_parens_in_power(*e.left)) b = "(" + b + ")";
            return b + "^" + std::to_string(e.param);
        }
    }
    throw Error("unhandled group expression kind");
}

FiniteGroup build(const GroupExpr& e) {
    using K = GroupExpr::Kind;
    switch (e.kind) {
        case K::Cyclic: return cyclic_group(e.param);
        case K::ElemAbelian2: return elem_abelian_2(e.param);
        case K::Dihedral: return dihedral_group(e.param);
        case K::Dicyclic: return dicyclic_group(e.param);
        case K::Quaternion: return quaternion_group();
        case K::Sym: return symmetric_group(e.param);
        case K::Alt: return alternating_group(e.param);
        case K::SL23: return sl23_group();
        case K::F54: return f54_group();
        case K::U24: return u24_group();
        case K::V24: return v24_group();
        case K::U30: return u30_group();
        case K::Product: {
            FiniteGroup l = build(*e.left);
            FiniteGroup r = build(*e.right);
            if (static_cast<long>(l.order()) * r.order() > kMaxOrder)
                throw UnsupportedOrder("product order " +
                                       std::to_string(static_cast<long>(l.order()) * r.order()) +
                                       " exceeds the supported bound " + std::to_string(kMaxOrder));
            return direct_product(l, r);
        }
        case K::Power: {
            FiniteGroup base = build(*e.left);
            long total = 1;
            for (int i = 0; i < e.param; ++i) {
                total *= base.order();
                if (total > kMaxOrder)
                    throw UnsupportedOrder("power order exceeds the supported bound " +
                                           std::to_string(kMaxOrder));
            }
            FiniteGroup g = base;
            for (int i = 1; i < e.param; ++i) g = direct_product(g, base);
            return g;
        }
    }
    throw Error("unhandled group expression kind");
}

FiniteGroup build_group(const std::string& text) { return build(parse_group_expr(text)); }

FiniteGroup cyclic_group(int n) {
    if (n < 1) throw UnsupportedOrder("cyclic group order must be >= 1");
    if (n > kMaxOrder)
        throw UnsupportedOrder("group order " + std::to_string(n) + " exceeds the supported bound " +
                               std::to_string(kMaxOrder));
    std::vector<std::vector<int>> table(n, std::vector<int>(n));
    std::vector<std::string> names(n);
    for (int i = 0; i < n; ++i) {
        names[i] = std::to_string(i);
        for (int j = 0; j < n; ++j) table[i][j] = (i + j) % n;
    }
    FiniteGroup g = validate_group(std::move(table), std::move(names));
    if (n >= 2) g.set_generators({{"g", 1}});
    return g;
}

FiniteGroup elem_abelian_2(int k) {
    if (k < 1) throw UnsupportedOrder("elementary abelian rank must be >= 1");
    if (k > 6) throw UnsupportedOrder("elementary abelian order exceeds the supported bound 64");
    FiniteGroup g = cyclic_group(2);
    for (int i = 1; i < k; ++i) g = direct_product(g, cyclic_group(2));
    return g;
}

FiniteGroup dihedral_group(int order) {
    if (order < 4 || order % 2 != 0)
        throw UnsupportedOrder("dihedral group order must be even and >= 4, got " +
                               std::to_string(order));
    if (order > kMaxOrder)
        throw UnsupportedOrder("group order " + std::to_string(order) +
                               " exceeds the supported bound " + std::to_string(kMaxOrder));
    const int na = order / 2;
    return two_generator_group(na, 2, [na](int i, int j, int k, int l) {
        return std::pair<int, int>(i + (j ? -k : k), j + l);
    });
}

FiniteGroup dicyclic_group(int order) {
    if (order < 4 || order % 4 != 0)
        throw UnsupportedOrder("dicyclic group order must be divisible by 4, got " +
                               std::to_string(order));
    if (order > kMaxOrder)
        throw UnsupportedOrder("group order " + std::to_string(order) +
                               " exceeds the supported bound " + std::to_string(kMaxOrder));
    const int n = order / 4;   // a^{2n} = e, a^n = b^2
    return two_generator_group(2 * n, 2, [n](int i, int j, int k, int l) {
        int ri = i + (j ? -k : k) + ((j && l) ? n : 0);
        return std::pair<int, int>(ri, j + l);
    });
}

FiniteGroup quaternion_group() { return dicyclic_group(8); }

FiniteGroup symmetric_group(int n) { return permutation_group(n, false); }

FiniteGroup alternating_group(int n) { return permutation_group(n, true); }

FiniteGroup sl23_group() {
    std::vector<std::array<int, 4>> mats;
    for (int a = 0; a < 3; ++a)
        for (int b = 0; b < 3; ++b)
            for (int c = 0; c < 3; ++c)
                for (int d = 0; d < 3; ++d)
                    if ((a * d - b * c) % 3 == 1 || (a * d - b * c) % 3 == -2) mats.push_back({a, b, c, d});
    // Identity first, the rest in tuple-lexicographic order.
    std::sort(mats.begin(), mats.end());
    const std::array<int, 4> id{1, 0, 0, 1};
    auto it = std::find(mats.begin(), mats.end(), id);
    std::rotate(mats.begin(), it, it + 1);
    const int m = static_cast<int>(mats.size());
    std::map<std::array<int, 4>, int> index_of;
    for (int i = 0; i < m; ++i) index_of[mats[i]] = i;
    std::vector<std::vector<int>> table(m, std::vector<int>(m));
    std::vector<std::string> names(m);
    for (int i = 0; i < m; ++i) names[i] = matrix_name(mats[i]);
    for (int i = 0; i < m; ++i)
        for (int j = 0; j < m; ++j) {
            const auto& x = mats[i];
            const auto& y = mats[j];
            std::array<int, 4> p{(x[0] * y[0] + x[1] * y[2]) % 3, (x[0] * y[1] + x[1] * y[3]) % 3,
                                 (x[2] * y[0] + x[3] * y[2]) % 3, (x[2] * y[1] + x[3] * y[3]) % 3};
            table[i][j] = index_of.at(p);
        }
    FiniteGroup g = validate_group(std::move(table), std::move(names));
    g.set_generators({{"A", index_of.at({0, 1, 2, 0})}, {"B", index_of.at({1, 1, 0, 1})}});
    return g;
}

FiniteGroup f54_group() {
    // b^j a = a^{3^j} b^j  (from b^-1 a b = a^2, so b a b^-1 = a^3).
    return two_generator_group(5, 4, [](int i, int j, int k, int l) {
        int pw = 1;
        for (int t = 0; t < j; ++t) pw = (pw * 3) % 5;
        return std::pair<int, int>(i + k * pw, j + l);
    });
}

FiniteGroup u24_group() {
    // b a = a b^-1, hence b^j a^k = a^k b^{j(-1)^k}.
    return two_generator_group(8, 3, [](int i, int j, int k, int l) {
        return std::pair<int, int>(i + k, (k % 2 ? -j : j) + l);
    });
}

FiniteGroup u30_group() {
    return two_generator_group(10, 3, [](int i, int j, int k, int l) {
        return std::pair<int, int>(i + k, (k % 2 ? -j : j) + l);
    });
}

FiniteGroup v24_group() {
    // Step rule derived from ba = a^-1 b^-1 and b^-1 a = a^-1 b:
    //   b^0 a = a b^0,  b^1 a = a^-1 b^3,  b^2 a = a b^2,  b^3 a = a^-1 b^1.
    static constexpr int kStepA[4] = {1, -1, 1, -1};
    static constexpr int kStepB[4] = {0, 3, 2, 1};
    return two_generator_group(6, 4, [](int i, int j, int k, int l) {
        int acc = 0, q = j;
        for (int t = 0; t < k; ++t) {
            acc += kStepA[q];
            q = kStepB[q];
        }
        return std::pair<int, int>(i + acc, q + l);
    });
}

const std::vector<int>& catalog_orders() {
    static const std::vector<int> orders = {4, 6, 8, 10, 12, 20, 24, 30};
    return orders;
}

std::vector<std::pair<std::string, FiniteGroup>> catalog_of_order(int n, CatalogKind kind) {
    const auto& orders = catalog_orders();
    if (std::find(orders.begin(), orders.end(), n) == orders.end())
        throw UnsupportedOrder("no catalog for order " + std::to_string(n));
    std::vector<std::pair<std::string, FiniteGroup>> out;
    if (kind == CatalogKind::Abelian || kind == CatalogKind::All) {
        auto lists = invariant_factor_lists(n);
        // Most-cyclic first: descending lexicographic on reversed factor chains.
        std::sort(lists.begin(), lists.end(), [](const auto& a, const auto& b) {
            std::vector<int> ra(a.rbegin(), a.rend()), rb(b.rbegin(), b.rend());
            return ra > rb;
        });
        for (const auto& f : lists) out.emplace_back(abelian_name(f), abelian_group(f));
    }
    if (kind == CatalogKind::NonAbelian || kind == CatalogKind::All) {
        for (const auto& name : nonabelian_lists().at(n)) out.emplace_back(name, build_group(name));
    }
    return out;
}

}  // namespace gcg
