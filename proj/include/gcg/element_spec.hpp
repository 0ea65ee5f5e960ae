#pragma once

#include <string>
#include <vector>

#include "gcg/group.hpp"

namespace gcg {

// Splits on separators at nesting depth zero with respect to '(' ')' and
// '[' ']'.  Segments are whitespace-trimmed; empty input yields no segments.
std::vector<std::string> split_top_level(const std::string& text, char sep = ',');

// Resolves an element reference to its index:
//   1. an exact element name ("a^2b", "(123)", "[[0,1],[2,0]]", "(1,0,2)");
//   2. "e" for the identity;
//   3. for product groups, a tuple "(x,y,...)" resolved component-wise
//      against the factors;
//   4. a word over the designated generator symbols with optional integer
//      exponents, e.g. "g^-1", "a^3b", "A^2B".
// Throws ElementNotFound when nothing matches.
int resolve_element(const FiniteGroup& g, const std::string& text);

// Comma-separated element references -> set (duplicates merge).
ElementSet resolve_element_set(const FiniteGroup& g, const std::string& csv);

// Builds an automorphism from comma-separated "element->element" pairs,
// e.g. "a->a^-1,b->b".  Designated generators that do not appear on any
// left-hand side are fixed.  The partial map is completed by multiplicative
// closure; contradictions, non-automorphisms, and conflicting pairs throw
// InvalidGroupMap.  The empty spec and "id" give the identity map.
GroupMap resolve_group_map(const FiniteGroup& g, const std::string& spec);

}  // namespace gcg
