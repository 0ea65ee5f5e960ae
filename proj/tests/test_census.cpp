#include <doctest.h>
#include <json.hpp>

#include <cstdio>
#include <fstream>
#include <string>
#include <vector>

#include "gcg/catalog.hpp"
#include "gcg/census.hpp"
#include "gcg/errors.hpp"
#include "gcg/fixtures.hpp"
#include "gcg/group.hpp"
#include "gcg/table1.hpp"

#ifndef GCG_TABLE1_GOLDEN
#define GCG_TABLE1_GOLDEN "data/table1_golden.txt"
#endif

using namespace gcg;

TEST_CASE("single-group classification of the canonical examples") {
    const GroupRecord z6 = classify_group("Z6", cyclic_group(6));
    CHECK(z6.verdict == GroupVerdict::AllConnectedIntegral);
    CHECK(z6.involution_class_count == 1);
    REQUIRE(z6.rows.size() == 1);
    CHECK(z6.rows[0].connected);
    CHECK(z6.rows[0].bipartite);
    CHECK(z6.rows[0].integral);
    CHECK(z6.rows[0].branch == "IndexTwoCoset");
    CHECK(z6.rows[0].subset == "{1, 3, 5}");

    const GroupRecord z8 = classify_group("Z8", cyclic_group(8));
    CHECK(z8.verdict == GroupVerdict::AllConnectedIntegral);
    CHECK(z8.involution_class_count == 3);  // g->g^3, g->g^5, g->g^7
    CHECK(z8.rows.size() == 4);             // all four from the inversion map

    const GroupRecord d10 = classify_group("D10", dihedral_group(10));
    CHECK(d10.verdict == GroupVerdict::Excluded);
    REQUIRE(d10.excluded_row >= 0);
    REQUIRE(d10.excluded_row < static_cast<int>(d10.rows.size()));
    CHECK(d10.rows[d10.excluded_row].connected);
    CHECK(!d10.rows[d10.excluded_row].integral);

    CHECK(classify_group("Z4", cyclic_group(4)).verdict == GroupVerdict::NoCubicGCS);
    CHECK(classify_group("Z2^2", elem_abelian_2(2)).verdict == GroupVerdict::NoCubicGCS);
    CHECK(classify_group("Z4", cyclic_group(4)).rows.empty());

    CHECK_THROWS_AS(classify_group("Z32", cyclic_group(32)), OrderLimitExceeded);
}

TEST_CASE("census runs aggregate verdicts and sort survivors") {
    const CensusReport empty = run_census({}, CatalogKind::All);
    CHECK(empty.groups.empty());
    CHECK(empty.survivors.empty());

    const CensusReport abelian = run_census({4, 6, 8}, CatalogKind::Abelian);
    CHECK(abelian.groups.size() == 2 + 1 + 3);
    CHECK(abelian.survivors == std::vector<std::string>{"Z6", "Z2^3", "Z8"});

    // Duplicate and unsorted order lists normalize.
    const CensusReport dedup = run_census({8, 4, 8, 6, 4}, CatalogKind::Abelian);
    CHECK(dedup.survivors == abelian.survivors);

    const CensusReport nonab = run_census({6, 8}, CatalogKind::NonAbelian);
    CHECK(nonab.survivors == std::vector<std::string>{"D6", "D8", "Q8"});
}

TEST_CASE("verdicts are independent of conjugacy reduction") {
    for (const int n : {4, 6, 8, 10, 12})
        for (const auto& [name, g] : catalog_of_order(n, CatalogKind::All)) {
            const GroupRecord reduced = classify_group(name, g, true);
            const GroupRecord full = classify_group(name, g, false);
            INFO(name);
            CHECK(reduced.verdict == full.verdict);
            CHECK(reduced.involution_class_count <= full.involution_class_count);
        }
}

TEST_CASE("sum-graph classification of the abelian groups through order 8") {
    auto verdict_of = [](const char* expr) {
        return classify_group_cayley_sum(expr, build_group(expr)).verdict;
    };
    CHECK(verdict_of("Z2^2") == GroupVerdict::AllConnectedIntegral);
    CHECK(verdict_of("Z4") == GroupVerdict::NoCubicGCS);
    CHECK(verdict_of("Z6") == GroupVerdict::AllConnectedIntegral);
    CHECK(verdict_of("Z8") == GroupVerdict::AllConnectedIntegral);
    CHECK(verdict_of("Z2 x Z4") == GroupVerdict::Excluded);
    CHECK(verdict_of("Z2^3") == GroupVerdict::ConnectedOnesIntegral);
    CHECK_THROWS_AS(classify_group_cayley_sum("D6", dihedral_group(6)), NotAbelian);

    const CensusReport report = cayley_sum_census({4, 6, 8});
    CHECK(report.survivors == std::vector<std::string>{"Z2^2", "Z6", "Z2^3", "Z8"});
}

TEST_CASE("serialized reports are deterministic and well-formed") {
    const CensusReport r = run_census({8}, CatalogKind::All);

    const std::string json_text = census_to_json(r);
    CHECK(json_text == census_to_json(r));
    const nlohmann::json parsed = nlohmann::json::parse(json_text);
    REQUIRE(parsed.contains("groups"));
    REQUIRE(parsed.contains("survivors"));
    CHECK(parsed["groups"].size() == 5);
    CHECK(parsed["groups"][0]["order"] == 8);
    for (const auto& g : parsed["groups"]) {
        CHECK(g.contains("verdict"));
        for (const auto& row : g["rows"]) {
            CHECK(row.contains("alpha"));
            CHECK(row.contains("connected"));
            CHECK(row.contains("spectrum"));
        }
    }
    // Sorted by (order, name); all share order 8 here.
    const std::vector<std::string> expect_survivors = {"D8", "Q8", "Z2^3", "Z8"};
    CHECK(parsed["survivors"].get<std::vector<std::string>>() == expect_survivors);

    const std::string csv = census_to_csv(r);
    CHECK(csv.rfind("group,order,alpha_class,subset,connected,bipartite,integral,branch\n", 0) ==
          0);
    // RFC 4180: every record has exactly 7 separators outside quoted fields.
    std::size_t line_start = 0;
    while (line_start < csv.size()) {
        std::size_t line_end = csv.find('\n', line_start);
        if (line_end == std::string::npos) line_end = csv.size();
        const std::string line = csv.substr(line_start, line_end - line_start);
        if (!line.empty()) {
            int commas = 0;
            bool quoted = false;
            for (const char c : line) {
                if (c == '"') quoted = !quoted;
                else if (c == ',' && !quoted) ++commas;
            }
            INFO(line);
            CHECK(commas == 7);
        }
        line_start = line_end + 1;
    }
    // Multi-generator involutions carry ", " and must be quoted.
    CHECK(csv.find("\"a->") != std::string::npos);

    const std::string md = census_to_markdown(r);
    CHECK(md.rfind("# Cubic generalized Cayley graph census\n", 0) == 0);
    CHECK(md.find("survivors: D8, Q8, Z2^3, Z8\n") != std::string::npos);
    const std::string md_none = census_to_markdown(run_census({4}, CatalogKind::Abelian));
    CHECK(md_none.find("survivors: (none)\n") != std::string::npos);
}

TEST_CASE("the dihedral involution table reproduces its golden file") {
    const std::string rendered = render_involution_table();
    CHECK(rendered.rfind("involution | omega | Omega\n", 0) == 0);

    std::ifstream golden(GCG_TABLE1_GOLDEN, std::ios::binary);
    REQUIRE(golden.good());
    std::string golden_text((std::istreambuf_iterator<char>(golden)),
                            std::istreambuf_iterator<char>());
    CHECK(rendered == golden_text);

    CHECK(reproduce_table1(GCG_TABLE1_GOLDEN) == rendered);
    CHECK_THROWS_AS(reproduce_table1("/nonexistent/golden.txt"), MismatchAgainstGolden);

    // A corrupted golden file is reported with the first differing line.
    const std::string tmp = "table1_corrupt_golden.txt";
    {
        std::ofstream out(tmp, std::ios::binary);
        out << "involution | omega | Omega\nwrong row\n";
    }
    try {
        reproduce_table1(tmp);
        FAIL("expected MismatchAgainstGolden");
    } catch (const MismatchAgainstGolden& e) {
        CHECK(std::string(e.what()).find("line 2") != std::string::npos);
    }
    std::remove(tmp.c_str());
}

TEST_CASE("every registered fixture passes") {
    const auto results = run_fixtures();
    CHECK(results.size() == fixture_registry().size());
    CHECK(results.size() >= 30);
    for (const auto& r : results) {
        INFO(r.id, ": ", r.detail);
        CHECK(r.passed);
    }
}
