#include "gcg/graph.hpp"

#include <algorithm>
#include <deque>

#include <json.hpp>

#include "gcg/errors.hpp"

namespace gcg {

SimpleGraph::SimpleGraph(int n, bool loops_allowed, std::vector<std::string> labels)
    : n_(n), loops_allowed_(loops_allowed), labels_(std::move(labels)) {
    if (static_cast<int>(labels_.size()) != n)
        throw Error("graph label count does not match the vertex count");
    rows_.assign(static_cast<std::size_t>(n), boost::dynamic_bitset<>(static_cast<std::size_t>(n)));
}

void SimpleGraph::add_edge(int i, int j) {
    if (i < 0 || j < 0 || i >= n_ || j >= n_) throw Error("edge endpoint out of range");
    if (i == j && !loops_allowed_) throw Error("loops are not allowed in this graph");
    rows_[i].set(static_cast<std::size_t>(j));
    rows_[j].set(static_cast<std::size_t>(i));
}

int SimpleGraph::max_degree() const {
    int d = 0;
    for (int i = 0; i < n_; ++i) d = std::max(d, degree(i));
    return d;
}

long long SimpleGraph::edge_count() const {
    long long twice = 0, loops = 0;
    for (int i = 0; i < n_; ++i) {
        twice += degree(i);
        if (adjacent(i, i)) ++loops;
    }
    return (twice - loops) / 2 + loops;
}

std::vector<std::pair<int, int>> SimpleGraph::edges() const {
    std::vector<std::pair<int, int>> out;
    for (int i = 0; i < n_; ++i)
        for (int j = i; j < n_; ++j)
            if (adjacent(i, j)) out.emplace_back(i, j);
    return out;
}

bool SimpleGraph::operator==(const SimpleGraph& o) const {
    return n_ == o.n_ && labels_ == o.labels_ && rows_ == o.rows_;
}

SimpleGraph build_gc_graph(const GCSubset& s) {
    const FiniteGroup& g = s.group();
    const GroupMap& alpha = s.alpha();
    const int n = g.order();
    SimpleGraph graph(n, false, g.names());
    for (int x = 0; x < n; ++x)
        for (int y = x + 1; y < n; ++y) {
            const bool xy = s.members().contains(g.mul(alpha(g.inv(x)), y));
            const bool yx = s.members().contains(g.mul(alpha(g.inv(y)), x));
            if (xy != yx)
                throw InternalAsymmetry("edge relation between " + g.name(x) + " and " + g.name(y) +
                                        " is not symmetric");
            if (xy) graph.add_edge(x, y);
        }
    for (int x = 0; x < n; ++x)
        if (s.members().contains(g.mul(alpha(g.inv(x)), x)))
            throw InternalAsymmetry("loop produced at " + g.name(x) +
                                    "; the subset meets omega_alpha(G)");
    return graph;
}

SimpleGraph build_cayley_graph(const FiniteGroup& g, const ElementSet& t) {
    for (int x : t.elements())
        if (!t.contains(g.inv(x)))
            throw NotSymmetricSet("connection set lacks the inverse of " + g.name(x));
    SimpleGraph graph(g.order(), true, g.names());
    for (int x = 0; x < g.order(); ++x)
        for (int s : t.elements()) graph.add_edge(x, g.mul(x, s));
    return graph;
}

SimpleGraph build_cayley_sum_graph(const FiniteGroup& g, const ElementSet& s) {
    if (!g.is_abelian()) throw NotAbelian("Cayley sum graphs are defined over abelian groups");
    const ElementSet sq = squares(g);
    for (int x : s.elements())
        if (sq.contains(x))
            throw NotSquareFree("subset member " + g.name(x) + " is a square", x);
    SimpleGraph graph(g.order(), false, g.names());
    for (int x = 0; x < g.order(); ++x)
        for (int y = x + 1; y < g.order(); ++y)
            if (s.contains(g.mul(x, y))) graph.add_edge(x, y);
    return graph;
}

SimpleGraph direct_product_graph(const SimpleGraph& x, const SimpleGraph& y) {
    const int nx = x.size(), ny = y.size();
    std::vector<std::string> labels;
    labels.reserve(static_cast<std::size_t>(nx) * ny);
    for (int i = 0; i < nx; ++i)
        for (int j = 0; j < ny; ++j) labels.push_back(join_tuple_name(x.label(i), y.label(j)));
    SimpleGraph p(nx * ny, x.loops_allowed() && y.loops_allowed(), std::move(labels));
    for (int i1 = 0; i1 < nx; ++i1)
        for (int i2 = 0; i2 < nx; ++i2) {
            if (!x.adjacent(i1, i2)) continue;
            for (int j1 = 0; j1 < ny; ++j1)
                for (int j2 = 0; j2 < ny; ++j2)
                    if (y.adjacent(j1, j2) && i1 * ny + j1 <= i2 * ny + j2)
                        p.add_edge(i1 * ny + j1, i2 * ny + j2);
        }
    return p;
}

std::vector<std::vector<int>> connected_components(const SimpleGraph& x) {
    const int n = x.size();
    std::vector<int> comp(n, -1);
    std::vector<std::vector<int>> out;
    for (int start = 0; start < n; ++start) {
        if (comp[start] != -1) continue;
        const int id = static_cast<int>(out.size());
        out.emplace_back();
        std::deque<int> queue{start};
        comp[start] = id;
        while (!queue.empty()) {
            int v = queue.front();
            queue.pop_front();
            out[id].push_back(v);
            for (int w = 0; w < n; ++w)
                if (x.adjacent(v, w) && comp[w] == -1) {
                    comp[w] = id;
                    queue.push_back(w);
                }
        }
        std::sort(out[id].begin(), out[id].end());
    }
    return out;
}

BipartiteCertificate is_bipartite(const SimpleGraph& x) {
    const int n = x.size();
    std::vector<int> color(n, -1), parent(n, -1), depth(n, 0);
    for (int v = 0; v < n; ++v)
        if (x.adjacent(v, v)) return {false, {}, {v}};
    for (int start = 0; start < n; ++start) {
        if (color[start] != -1) continue;
        color[start] = 0;
        std::deque<int> queue{start};
        while (!queue.empty()) {
            int v = queue.front();
            queue.pop_front();
            for (int w = 0; w < n; ++w) {
                if (!x.adjacent(v, w)) continue;
                if (color[w] == -1) {
                    color[w] = color[v] ^ 1;
                    parent[w] = v;
                    depth[w] = depth[v] + 1;
                    queue.push_back(w);
                } else if (color[w] == color[v] && w != v) {
                    // Conflict edge (v, w): climb to the common ancestor.
                    std::vector<int> left{v}, right{w};
                    int a = v, b = w;
                    while (depth[a] > depth[b]) { a = parent[a]; left.push_back(a); }
                    while (depth[b] > depth[a]) { b = parent[b]; right.push_back(b); }
                    while (a != b) {
                        a = parent[a]; left.push_back(a);
                        b = parent[b]; right.push_back(b);
                    }
                    // left ends at the ancestor; right's copy of it is dropped.
                    std::vector<int> cycle(left.begin(), left.end());
                    right.pop_back();
                    cycle.insert(cycle.end(), right.rbegin(), right.rend());
                    return {false, {}, cycle};
                }
            }
        }
    }
    return {true, color, {}};
}

std::string export_graph(const SimpleGraph& x, const std::string& format) {
    if (format == "dot") {
        std::string out = "graph {\n";
        for (int i = 0; i < x.size(); ++i)
            if (x.degree(i) == 0) out += "  \"" + x.label(i) + "\";\n";
        for (const auto& [i, j] : x.edges())
            out += "  \"" + x.label(i) + "\" -- \"" + x.label(j) + "\";\n";
        out += "}\n";
        return out;
    }
    if (format == "json") {
        nlohmann::ordered_json j;
        j["n"] = x.size();
        j["labels"] = x.labels();
        auto edges = nlohmann::ordered_json::array();
        for (const auto& [a, b] : x.edges()) edges.push_back({a, b});
        j["edges"] = std::move(edges);
        return j.dump(2) + "\n";
    }
    throw Error("unknown graph export format \"" + format + "\" (expected dot or json)");
}

}  // namespace gcg
