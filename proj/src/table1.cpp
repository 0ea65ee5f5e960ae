#include "gcg/table1.hpp"

#include <algorithm>
#include <fstream>
#include <sstream>
#include <vector>

#include "gcg/catalog.hpp"
#include "gcg/errors.hpp"
#include "gcg/gcs.hpp"
#include "gcg/group.hpp"

namespace gcg {

std::string render_involution_table() {
    const FiniteGroup d8 = dihedral_group(8);
    std::vector<GroupMap> invs = involutory_automorphisms(d8);
    const auto& gens = d8.generators();  // ("a", .), ("b", .)
    std::sort(invs.begin(), invs.end(), [&](const GroupMap& x, const GroupMap& y) {
        for (const auto& [symbol, element] : gens) {
            if (x(element) != y(element)) return x(element) < y(element);
        }
        return false;
    });

    std::string out = "involution | omega | Omega\n";
    for (const GroupMap& alpha : invs) {
        const AlphaPartition part = alpha_partition(d8, alpha);
        out += alpha.to_string() + " | " + part.omega.to_string() + " | " +
               part.big_omega.to_string() + "\n";
    }
    return out;
}

std::string reproduce_table1(const std::string& golden_path) {
    const std::string rendered = render_involution_table();
    std::ifstream in(golden_path, std::ios::binary);
    if (!in) throw MismatchAgainstGolden("cannot open golden file: " + golden_path);
    std::ostringstream buffer;
    buffer << in.rdbuf();
    const std::string golden = buffer.str();
    if (rendered == golden) return rendered;

    std::istringstream got(rendered), want(golden);
    std::string got_line, want_line;
    int line = 0;
    while (true) {
        ++line;
        const bool has_got = static_cast<bool>(std::getline(got, got_line));
        const bool has_want = static_cast<bool>(std::getline(want, want_line));
        if (!has_got && !has_want) break;
        if (!has_got) got_line = "<end of rendered table>";
        if (!has_want) want_line = "<end of golden file>";
        if (got_line != want_line)
            throw MismatchAgainstGolden("line " + std::to_string(line) + ": rendered \"" +
                                        got_line + "\" but golden has \"" + want_line + "\"");
    }
    throw MismatchAgainstGolden("rendered table differs from golden file in whitespace only");
}

}  // namespace gcg
