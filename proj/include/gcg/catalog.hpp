#pragma once

#include <memory>
#include <string>
#include <utility>
#include <vector>

#include "gcg/group.hpp"

namespace gcg {

// Abstract syntax for group expressions such as "Z2^2 x Z6", "D8 x Z3",
// "SL23".  D and T take the group ORDER as their parameter.
struct GroupExpr {
    enum class Kind {
        Cyclic,        // Z n       (param = n)
        ElemAbelian2,  // param = k; semantically Power(Cyclic 2, k)
        Dihedral,      // D n       (param = order, even, >= 4)
        Dicyclic,      // T n       (param = order, divisible by 4)
        Quaternion,    // Q8
        Sym,           // S n
        Alt,           // A n
        SL23,
        F54,
        U24,
        V24,
        U30,
        Product,       // left x right
        Power,         // left ^ param
    };
    Kind kind = Kind::Cyclic;
    int param = 0;
    std::shared_ptr<const GroupExpr> left, right;
};

// Recursive-descent parser for the grammar
//   expr := term ('x' term)*
//   term := atom ('^' INT)?
//   atom := 'Z' INT | 'D' INT | 'T' INT | 'Q8' | 'S' INT | 'A' INT
//         | 'SL23' | 'F54' | 'U24' | 'V24' | 'U30' | '(' expr ')'
// Whitespace-insensitive; products associate left; INT >= 1.
// Throws ParseError carrying the byte offset and the expected-token set.
GroupExpr parse_group_expr(const std::string& text);

// Canonical printed form.  parse_group_expr(print_group_expr(e)) round-trips
// every expression the parser can produce.
std::string print_group_expr(const GroupExpr& e);

// Realizes an expression as a validated multiplication table with
// normal-form element names and designated generators.  Throws
// UnsupportedOrder for family constraint violations or orders > 64.
FiniteGroup build(const GroupExpr& e);
FiniteGroup build_group(const std::string& text);  // parse + build

// Named family constructors (all outputs pass validate_group).
FiniteGroup cyclic_group(int n);        // names "0".."n-1"; generator "g" = 1
FiniteGroup elem_abelian_2(int k);      // iterated product of Z2
FiniteGroup dihedral_group(int order);  // a^n = b^2 = e, bab = a^-1   (order = 2n)
FiniteGroup dicyclic_group(int order);  // a^{2n} = e, a^n = b^2, b^-1 a b = a^-1
FiniteGroup quaternion_group();         // the dicyclic group of order 8
FiniteGroup symmetric_group(int n);     // cycle-notation names, "e" identity
FiniteGroup alternating_group(int n);
FiniteGroup sl23_group();               // 2x2 determinant-1 matrices over F_3
FiniteGroup f54_group();                // a^5 = b^4 = e, b^-1 a b = a^2
FiniteGroup u24_group();                // a^8 = b^3 = e, a^-1 b a = b^-1
FiniteGroup v24_group();                // a^6 = b^4 = e, ba = a^-1 b^-1, b^-1 a = a^-1 b
FiniteGroup u30_group();                // a^10 = b^3 = e, a^-1 b a = b^-1

enum class CatalogKind { Abelian, NonAbelian, All };

// Complete isomorphism-class lists for orders in catalog_orders().  Abelian
// entries come first, most-cyclic first, named by ascending invariant factors
// ("Z8", "Z2 x Z4", "Z2^3"); the non-abelian lists are fixed per order (the
// order-24 list has exactly 12 entries).  Throws UnsupportedOrder otherwise.
std::vector<std::pair<std::string, FiniteGroup>> catalog_of_order(int n, CatalogKind kind);

const std::vector<int>& catalog_orders();  // {4, 6, 8, 10, 12, 20, 24, 30}

}  // namespace gcg
