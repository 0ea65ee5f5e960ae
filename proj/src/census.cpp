#include "gcg/census.hpp"

#include <algorithm>
#include <set>
#include <string>
#include <utility>
#include <vector>

#include <json.hpp>

#include "gcg/criteria.hpp"
#include "gcg/errors.hpp"
#include "gcg/gcs.hpp"
#include "gcg/graph.hpp"
#include "gcg/spectrum.hpp"

namespace gcg {

std::string to_string(GroupVerdict v) {
    switch (v) {
        case GroupVerdict::AllConnectedIntegral:
            return "AllConnectedIntegral";
        case GroupVerdict::NoCubicGCS:
            return "NoCubicGCS";
        case GroupVerdict::Excluded:
            return "Excluded";
        case GroupVerdict::ConnectedOnesIntegral:
            return "ConnectedOnesIntegral";
        case GroupVerdict::NoConnectedGraph:
            return "NoConnectedGraph";
    }
    return "?";
}

namespace {

// Evaluates one (alpha, subset) pair on the prebuilt graph, cross-checking
// every algebraic verdict against the graph oracle.
CensusRow evaluate_row(const std::string& context, const GCSubset& s, const SimpleGraph& graph) {
    CensusRow row;
    row.alpha = s.alpha().to_string();
    row.subset = s.to_string();
    row.subset_elements = s.members().elements();

    const ConnectivityVerdict three_part = connected_algebraic(s);
    const ConnectivityVerdict coset = connected_coset_criterion(s);
    const bool bfs_connected = connected_components(graph).size() == 1;
    if (three_part.connected != bfs_connected || coset.connected != bfs_connected)
        throw VerdictDisagreement(context + ": connectivity criteria=" +
                                  std::to_string(three_part.connected) + "/" +
                                  std::to_string(coset.connected) +
                                  " but BFS=" + std::to_string(bfs_connected));
    row.connected = bfs_connected;
    row.branch = to_string(three_part.branch);

    const bool two_colorable = is_bipartite(graph).bipartite;
    if (s.group().is_abelian()) {
        const BipartiteVerdict bv = bipartite_algebraic(s);
        if (bv.bipartite != two_colorable)
            throw VerdictDisagreement(context + ": odd-product criterion says bipartite=" +
                                      std::to_string(bv.bipartite) +
                                      " but 2-coloring says " + std::to_string(two_colorable));
    }
    row.bipartite = two_colorable;

    const SpectrumVerdict sv = integral_spectrum(graph);
    row.integral = sv.integral;
    row.spectrum = sv.roots;
    return row;
}

void finish_classification(GroupRecord& rec) {
    if (rec.rows.empty()) {
        rec.verdict = GroupVerdict::NoCubicGCS;
        return;
    }
    for (std::size_t i = 0; i < rec.rows.size(); ++i) {
        if (!rec.rows[i].connected || !rec.rows[i].integral) {
            rec.verdict = GroupVerdict::Excluded;
            rec.excluded_row = static_cast<int>(i);
            return;
        }
    }
    rec.verdict = GroupVerdict::AllConnectedIntegral;
}

std::vector<std::string> sorted_survivor_names(
    std::vector<std::pair<int, std::string>> survivors) {
    std::sort(survivors.begin(), survivors.end());
    std::vector<std::string> names;
    names.reserve(survivors.size());
    for (auto& s : survivors) names.push_back(std::move(s.second));
    return names;
}

}  // namespace

GroupRecord classify_group(const std::string& name, const FiniteGroup& g,
                           bool use_conjugacy_reduction, int subset_size,
                           bool include_identity_alpha) {
    if (g.order() > 30)
        throw OrderLimitExceeded("census is limited to groups of order at most 30; got " +
                                 std::to_string(g.order()));
    GroupRecord rec;
    rec.name = name;
    rec.order = g.order();
    rec.abelian = g.is_abelian();

    std::vector<GroupMap> alphas;
    if (include_identity_alpha) alphas.push_back(identity_map(g));
    if (use_conjugacy_reduction) {
        for (const auto& cls : involution_conjugacy_classes(g)) alphas.push_back(cls.front());
    } else {
        for (const auto& a : involutory_automorphisms(g)) alphas.push_back(a);
    }
    rec.involution_class_count = static_cast<int>(alphas.size());

    for (const GroupMap& alpha : alphas) {
        for (const GCSubset& s :
             enumerate_gcs(g, alpha, subset_size, include_identity_alpha)) {
            const std::string context =
                name + " alpha=[" + alpha.to_string() + "] S=" + s.to_string();
            rec.rows.push_back(evaluate_row(context, s, build_gc_graph(s)));
        }
    }
    finish_classification(rec);
    return rec;
}

CensusReport run_census(const std::vector<int>& orders, CatalogKind kind, int subset_size,
                        bool use_conjugacy_reduction, bool include_identity_alpha) {
    std::set<int> wanted(orders.begin(), orders.end());
    CensusReport report;
    std::vector<std::pair<int, std::string>> survivors;
    for (int order : wanted) {
        for (const auto& [name, group] : catalog_of_order(order, kind)) {
            report.groups.push_back(classify_group(name, group, use_conjugacy_reduction,
                                                   subset_size, include_identity_alpha));
            if (report.groups.back().verdict == GroupVerdict::AllConnectedIntegral)
                survivors.emplace_back(order, name);
        }
    }
    report.survivors = sorted_survivor_names(std::move(survivors));
    return report;
}

GroupRecord classify_group_cayley_sum(const std::string& name, const FiniteGroup& g,
                                      int subset_size) {
    if (!g.is_abelian())
        throw NotAbelian("Cayley-sum classification applies to abelian groups only");
    if (g.order() > 30)
        throw OrderLimitExceeded("census is limited to groups of order at most 30; got " +
                                 std::to_string(g.order()));
    GroupRecord rec;
    rec.name = name;
    rec.order = g.order();
    rec.abelian = true;
    rec.involution_class_count = 1;  // the inversion map only

    const GroupMap inv = inverse_automorphism(g);
    const bool allow_identity = inv.is_identity();
    for (const GCSubset& s : enumerate_gcs(g, inv, subset_size, allow_identity)) {
        const std::string context = name + " Cay+ S=" + s.to_string();
        const SimpleGraph sum_graph = build_cayley_sum_graph(g, s.members());
        if (sum_graph != build_gc_graph(s))
            throw VerdictDisagreement(context +
                                      ": sum graph differs from the inversion-map construction");
        rec.rows.push_back(evaluate_row(context, s, sum_graph));
    }

    if (rec.rows.empty()) {
        rec.verdict = GroupVerdict::NoCubicGCS;
        return rec;
    }
    int connected_count = 0;
    int first_bad = -1;
    for (std::size_t i = 0; i < rec.rows.size(); ++i) {
        if (!rec.rows[i].connected) continue;
        ++connected_count;
        if (!rec.rows[i].integral && first_bad < 0) first_bad = static_cast<int>(i);
    }
    if (connected_count == 0) {
        rec.verdict = GroupVerdict::NoConnectedGraph;
    } else if (first_bad >= 0) {
        rec.verdict = GroupVerdict::Excluded;
        rec.excluded_row = first_bad;
    } else if (connected_count == static_cast<int>(rec.rows.size())) {
        rec.verdict = GroupVerdict::AllConnectedIntegral;
    } else {
        rec.verdict = GroupVerdict::ConnectedOnesIntegral;
    }
    return rec;
}

CensusReport cayley_sum_census(const std::vector<int>& orders, int subset_size) {
    std::set<int> wanted(orders.begin(), orders.end());
    CensusReport report;
    std::vector<std::pair<int, std::string>> survivors;
    for (int order : wanted) {
        for (const auto& [name, group] : catalog_of_order(order, CatalogKind::Abelian)) {
            report.groups.push_back(classify_group_cayley_sum(name, group, subset_size));
            const GroupVerdict v = report.groups.back().verdict;
            if (v == GroupVerdict::AllConnectedIntegral ||
                v == GroupVerdict::ConnectedOnesIntegral)
                survivors.emplace_back(order, name);
        }
    }
    report.survivors = sorted_survivor_names(std::move(survivors));
    return report;
}

std::string census_to_json(const CensusReport& r) {
    nlohmann::ordered_json out;
    out["groups"] = nlohmann::ordered_json::array();
    for (const GroupRecord& g : r.groups) {
        nlohmann::ordered_json jg;
        jg["name"] = g.name;
        jg["order"] = g.order;
        jg["abelian"] = g.abelian;
        jg["involution_classes"] = g.involution_class_count;
        jg["verdict"] = to_string(g.verdict);
        jg["excluded_row"] = g.excluded_row;
        jg["rows"] = nlohmann::ordered_json::array();
        for (const CensusRow& row : g.rows) {
            nlohmann::ordered_json jr;
            jr["alpha"] = row.alpha;
            jr["subset"] = row.subset;
            jr["subset_elements"] = row.subset_elements;
            jr["connected"] = row.connected;
            jr["bipartite"] = row.bipartite;
            jr["integral"] = row.integral;
            jr["branch"] = row.branch;
            jr["spectrum"] = row.spectrum;
            jg["rows"].push_back(std::move(jr));
        }
        out["groups"].push_back(std::move(jg));
    }
    out["survivors"] = r.survivors;
    return out.dump(2) + "\n";
}

namespace {

std::string csv_field(const std::string& raw) {
    if (raw.find_first_of(",\"\n") == std::string::npos) return raw;
    std::string quoted = "\"";
    for (char c : raw) {
        if (c == '"') quoted += '"';
        quoted += c;
    }
    quoted += '"';
    return quoted;
}

}  // namespace

std::string census_to_csv(const CensusReport& r) {
    std::string out = "group,order,alpha_class,subset,connected,bipartite,integral,branch\n";
    for (const GroupRecord& g : r.groups) {
        for (const CensusRow& row : g.rows) {
            out += csv_field(g.name) + ',' + std::to_string(g.order) + ',' +
                   csv_field(row.alpha) + ',' + csv_field(row.subset) + ',' +
                   (row.connected ? "true" : "false") + ',' +
                   (row.bipartite ? "true" : "false") + ',' +
                   (row.integral ? "true" : "false") + ',' + csv_field(row.branch) + '\n';
        }
    }
    return out;
}

std::string census_to_markdown(const CensusReport& r) {
    std::string out = "# Cubic generalized Cayley graph census\n";
    for (const GroupRecord& g : r.groups) {
        out += "\n## " + g.name + " (order " + std::to_string(g.order) + ", " +
               (g.abelian ? "abelian" : "non-abelian") + ") - " + to_string(g.verdict) + "\n\n";
        if (g.rows.empty()) {
            out += "no valid (alpha, subset) pairs\n";
            continue;
        }
        out += "| alpha | subset | connected | bipartite | integral | branch | spectrum |\n";
        out += "|---|---|---|---|---|---|---|\n";
        for (const CensusRow& row : g.rows) {
            std::string spectrum;
            if (row.integral) {
                for (std::size_t i = 0; i < row.spectrum.size(); ++i) {
                    if (i) spectrum += ", ";
                    spectrum += std::to_string(row.spectrum[i]);
                }
            } else {
                spectrum = "non-integral";
            }
            out += "| " + row.alpha + " | " + row.subset + " | " +
                   (row.connected ? "yes" : "no") + " | " + (row.bipartite ? "yes" : "no") +
                   " | " + (row.integral ? "yes" : "no") + " | " + row.branch + " | " +
                   spectrum + " |\n";
        }
    }
    out += "\nsurvivors: ";
    if (r.survivors.empty()) {
        out += "(none)";
    } else {
        for (std::size_t i = 0; i < r.survivors.size(); ++i) {
            if (i) out += ", ";
            out += r.survivors[i];
        }
    }
    out += "\n";
    return out;
}

}  // namespace gcg
