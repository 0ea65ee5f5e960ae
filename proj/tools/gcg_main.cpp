#include <iostream>
#include <string>
#include <vector>

#include <CLI11.hpp>

#include "gcg/catalog.hpp"
#include "gcg/census.hpp"
#include "gcg/criteria.hpp"
#include "gcg/element_spec.hpp"
#include "gcg/errors.hpp"
#include "gcg/fixtures.hpp"
#include "gcg/gcs.hpp"
#include "gcg/graph.hpp"
#include "gcg/group.hpp"
#include "gcg/isomorphism.hpp"
#include "gcg/spectrum.hpp"
#include "gcg/table1.hpp"

#ifndef GCG_TABLE1_GOLDEN
#define GCG_TABLE1_GOLDEN "data/table1_golden.txt"
#endif

namespace {

std::string yes_no(bool b) { return b ? "yes" : "no"; }
std::string true_false(bool b) { return b ? "true" : "false"; }

void run_group_info(const std::string& expr) {
    const gcg::FiniteGroup g = gcg::build_group(expr);
    std::cout << "expression: " << gcg::print_group_expr(gcg::parse_group_expr(expr)) << "\n";
    std::cout << "order: " << g.order() << "\n";
    std::cout << "abelian: " << yes_no(g.is_abelian()) << "\n";
    std::cout << "exponent: " << g.exponent() << "\n";
    std::cout << "center size: " << g.center_size() << "\n";
    const std::vector<int> hist = g.order_histogram();
    std::cout << "element orders:";
    for (std::size_t k = 1; k < hist.size(); ++k)
        if (hist[k] > 0) std::cout << " " << k << "x" << hist[k];
    std::cout << "\n";
    std::cout << "generators:";
    if (g.generators().empty()) std::cout << " (none designated)";
    for (const auto& [symbol, element] : g.generators())
        std::cout << " " << symbol << "=" << g.name(element);
    std::cout << "\n";
    std::cout << "elements:";
    for (int i = 0; i < g.order(); ++i) std::cout << (i ? ", " : " ") << g.name(i);
    std::cout << "\n";
}

void run_aut(const std::string& expr, bool involutions, bool classes) {
    const gcg::FiniteGroup g = gcg::build_group(expr);
    const auto auts = gcg::automorphism_group(g);
    std::cout << "|Aut| = " << auts.size() << "\n";
    if (involutions) {
        const auto invs = gcg::involutory_automorphisms(g);
        std::cout << "involutions (" << invs.size() << "):\n";
        for (const auto& a : invs) std::cout << "  " << a.to_string() << "\n";
    }
    if (classes) {
        const auto cls = gcg::involution_conjugacy_classes(g);
        std::cout << "involution conjugacy classes (" << cls.size() << "):\n";
        for (const auto& c : cls)
            std::cout << "  size " << c.size() << ", representative " << c.front().to_string()
                      << "\n";
    }
}

void run_gcs_enumerate(const std::string& expr, const std::string& alpha_spec, int size) {
    const gcg::FiniteGroup g = gcg::build_group(expr);
    const gcg::GroupMap alpha = gcg::resolve_group_map(g, alpha_spec);
    const gcg::AlphaPartition part = gcg::alpha_partition(g, alpha);
    std::cout << "omega: " << part.omega.to_string() << "\n";
    std::cout << "big Omega: " << part.big_omega.to_string() << "\n";
    std::cout << "paired remainder: " << part.mho.to_string() << "\n";
    const auto subsets = gcg::enumerate_gcs(g, alpha, size);
    std::cout << "valid subsets of size " << size << ": " << subsets.size() << "\n";
    for (const auto& s : subsets) std::cout << "  " << s.to_string() << "\n";
}

void run_graph_build(const std::string& expr, const std::string& alpha_spec,
                     const std::string& set_spec, const std::string& format) {
    const gcg::FiniteGroup g = gcg::build_group(expr);
    const gcg::GroupMap alpha = gcg::resolve_group_map(g, alpha_spec);
    const gcg::GCSubset s(g, alpha, gcg::resolve_element_set(g, set_spec));
    std::cout << gcg::export_graph(gcg::build_gc_graph(s), format);
}

int run_check(const std::string& expr, const std::string& alpha_spec,
              const std::string& set_spec) {
    const gcg::FiniteGroup g = gcg::build_group(expr);
    const gcg::GroupMap alpha = gcg::resolve_group_map(g, alpha_spec);
    const gcg::GCSubset s(g, alpha, gcg::resolve_element_set(g, set_spec));
    std::cout << "group: " << expr << " (order " << g.order() << ")\n";
    std::cout << "alpha: " << alpha.to_string() << "\n";
    std::cout << "subset: " << s.to_string() << " (valid)\n";

    const gcg::SimpleGraph graph = gcg::build_gc_graph(s);
    const gcg::ConnectivityVerdict three_part = gcg::connected_algebraic(s);
    const gcg::ConnectivityVerdict coset = gcg::connected_coset_criterion(s);
    const bool bfs_connected = gcg::connected_components(graph).size() == 1;
    std::cout << "connected: criterion=" << true_false(three_part.connected)
              << " coset=" << true_false(coset.connected) << " bfs=" << true_false(bfs_connected)
              << " branch=" << gcg::to_string(three_part.branch) << "\n";

    const bool two_colorable = gcg::is_bipartite(graph).bipartite;
    bool bipartite_agree = true;
    std::cout << "bipartite: graph=" << true_false(two_colorable);
    if (g.is_abelian()) {
        const gcg::BipartiteVerdict bv = gcg::bipartite_algebraic(s);
        bipartite_agree = bv.bipartite == two_colorable;
        std::cout << " criterion=" << true_false(bv.bipartite);
        if (!bv.bipartite) {
            std::cout << " witness=";
            for (std::size_t i = 0; i < bv.subset.size(); ++i) {
                if (bv.witness[i] == 0) continue;
                std::cout << g.name(bv.subset[i]) << "^" << bv.witness[i] << " ";
            }
            std::cout << "-> " << g.name(bv.omega_product);
        }
    } else {
        std::cout << " criterion=n/a (non-abelian)";
    }
    std::cout << "\n";

    const gcg::SpectrumVerdict sv = gcg::integral_spectrum(graph);
    std::cout << "integral: " << true_false(sv.integral);
    if (sv.integral) {
        std::cout << " spectrum:";
        for (long long r : sv.roots) std::cout << " " << r;
    } else {
        std::cout << " (degree-" << sv.remainder.degree() << " factor " << sv.remainder.to_string()
                  << " has no integer root)";
    }
    std::cout << "\n";

    const bool agree = three_part.connected == bfs_connected &&
                       coset.connected == bfs_connected && bipartite_agree;
    if (!agree) std::cout << "DISAGREEMENT between criterion and oracle\n";
    return agree ? 0 : 1;
}

int run_census_cmd(std::vector<int> orders, const std::string& kind, const std::string& format,
                   bool all_involutions, bool include_identity_alpha) {
    if (orders.empty()) orders = gcg::catalog_orders();
    gcg::CensusReport report;
    if (kind == "cayley-sum") {
        report = gcg::cayley_sum_census(orders);
    } else {
        gcg::CatalogKind ck = gcg::CatalogKind::All;
        if (kind == "abelian") ck = gcg::CatalogKind::Abelian;
        if (kind == "nonabelian") ck = gcg::CatalogKind::NonAbelian;
        report = gcg::run_census(orders, ck, 3, !all_involutions, include_identity_alpha);
    }
    if (format == "json") {
        std::cout << gcg::census_to_json(report);
    } else if (format == "csv") {
        std::cout << gcg::census_to_csv(report);
    } else {
        std::cout << gcg::census_to_markdown(report);
    }
    return 0;
}

int run_fixtures_cmd() {
    int failures = 0;
    for (const gcg::FixtureResult& r : gcg::run_fixtures()) {
        if (r.passed) {
            std::cout << "PASS " << r.id << "\n";
        } else {
            ++failures;
            std::cout << "FAIL " << r.id << ": " << r.detail << "\n";
        }
    }
    std::cout << (failures == 0 ? "all fixtures passed" : std::to_string(failures) + " failed")
              << "\n";
    return failures == 0 ? 0 : 1;
}

int run_table1(const std::string& golden) {
    std::cout << gcg::reproduce_table1(golden);
    std::cout << "matches golden file\n";
    return 0;
}

}  // namespace

int main(int argc, char** argv) {
    CLI::App app{"finite groups, generalized Cayley graphs, and their classification"};
    app.require_subcommand(1);
    int exit_code = 0;

    std::string expr, alpha_spec, set_spec;
    std::string format_graph = "dot", format_census = "md", kind = "all";
    std::string golden = GCG_TABLE1_GOLDEN;
    std::vector<int> orders;
    int size = 3;
    bool involutions = false, classes = false;
    bool all_involutions = false, include_identity_alpha = false;

    CLI::App* group = app.add_subcommand("group", "group inspection");
    group->require_subcommand(1);
    CLI::App* info = group->add_subcommand("info", "order, structure and element list");
    info->add_option("expr", expr, "group expression, e.g. \"D8\" or \"Z2^2 x Z6\"")->required();
    info->callback([&] { run_group_info(expr); });

    CLI::App* aut = app.add_subcommand("aut", "automorphism group");
    aut->add_option("expr", expr)->required();
    aut->add_flag("--involutions", involutions, "list the involutory automorphisms");
    aut->add_flag("--classes", classes, "list involution conjugacy classes");
    aut->callback([&] { run_aut(expr, involutions, classes); });

    CLI::App* gcs = app.add_subcommand("gcs", "valid subsets");
    gcs->require_subcommand(1);
    CLI::App* enumerate = gcs->add_subcommand("enumerate", "all valid subsets of a size");
    enumerate->add_option("expr", expr)->required();
    enumerate->add_option("--alpha", alpha_spec, "generator images, e.g. \"a->a^-1,b->b\"")
        ->required();
    enumerate->add_option("--size", size, "subset size")->required();
    enumerate->callback([&] { run_gcs_enumerate(expr, alpha_spec, size); });

    CLI::App* graph = app.add_subcommand("graph", "graph construction");
    graph->require_subcommand(1);
    CLI::App* build = graph->add_subcommand("build", "emit the graph");
    build->add_option("expr", expr)->required();
    build->add_option("--alpha", alpha_spec)->required();
    build->add_option("--set", set_spec, "comma-separated element names")->required();
    build->add_option("--format", format_graph)
        ->check(CLI::IsMember({"dot", "json"}));
    build->callback([&] { run_graph_build(expr, alpha_spec, set_spec, format_graph); });

    CLI::App* check = app.add_subcommand("check", "connected/bipartite/integral verdicts");
    check->add_option("expr", expr)->required();
    check->add_option("--alpha", alpha_spec)->required();
    check->add_option("--set", set_spec)->required();
    check->callback([&] { exit_code = run_check(expr, alpha_spec, set_spec); });

    CLI::App* census = app.add_subcommand("census", "exhaustive cubic classification");
    census->add_option("--orders", orders, "comma-separated orders")->delimiter(',');
    census->add_option("--kind", kind)
        ->check(CLI::IsMember({"abelian", "nonabelian", "all", "cayley-sum"}));
    census->add_option("--format", format_census)->check(CLI::IsMember({"json", "csv", "md"}));
    census->add_flag("--all-involutions", all_involutions,
                     "iterate every involution instead of class representatives");
    census->add_flag("--include-identity-alpha", include_identity_alpha,
                     "also admit the identity map (Cayley sum rows)");
    census->callback([&] {
        exit_code =
            run_census_cmd(orders, kind, format_census, all_involutions, include_identity_alpha);
    });

    CLI::App* fixtures = app.add_subcommand("fixtures", "named instance registry");
    fixtures->require_subcommand(1);
    CLI::App* fixtures_run = fixtures->add_subcommand("run", "evaluate every fixture");
    fixtures_run->callback([&] { exit_code = run_fixtures_cmd(); });

    CLI::App* table1 = app.add_subcommand("table1", "involution table of D8 vs golden file");
    table1->add_option("--golden", golden, "golden file path");
    table1->callback([&] { exit_code = run_table1(golden); });

    try {
        app.parse(argc, argv);
    } catch (const CLI::CallForHelp& e) {
        return app.exit(e);
    } catch (const CLI::CallForAllHelp& e) {
        return app.exit(e);
    } catch (const CLI::ParseError& e) {
        app.exit(e);
        std::cerr << app.help();
        return 2;
    } catch (const gcg::VerdictDisagreement& e) {
        std::cerr << "disagreement: " << e.what() << "\n";
        return 1;
    } catch (const gcg::MismatchAgainstGolden& e) {
        std::cerr << "golden mismatch: " << e.what() << "\n";
        return 1;
    } catch (const gcg::Error& e) {
        std::cerr << "error: " << e.what() << "\n";
        return 2;
    }
    return exit_code;
}
