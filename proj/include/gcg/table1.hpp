#pragma once

#include <string>

namespace gcg {

// Renders the five non-identity involutory automorphisms of the order-8
// dihedral group with their omega / big-Omega sets, one row per involution,
// sorted by the images of the generators a then b.  Header line:
// "involution | omega | Omega".
std::string render_involution_table();

// Renders the table and byte-compares it against the golden file; returns
// the rendered text on success, throws MismatchAgainstGolden with the first
// differing line otherwise.
std::string reproduce_table1(const std::string& golden_path);

}  // namespace gcg
