#include "gcg/isomorphism.hpp"

#include <algorithm>
#include <deque>
#include <functional>

#include "gcg/errors.hpp"

namespace gcg {

namespace {

constexpr int kMaxIsoOrder = 32;

// Per-vertex invariant preserved by isomorphism: degree, sorted neighbor
// degrees, sorted BFS-distance multiset (size() stands in for "unreachable").
std::vector<std::vector<int>> vertex_invariants(const SimpleGraph& g) {
    const int n = g.size();
    std::vector<std::vector<int>> inv(n);
    for (int v = 0; v < n; ++v) {
        std::vector<int> neigh_degrees;
        for (int w = 0; w < n; ++w)
            if (g.adjacent(v, w)) neigh_degrees.push_back(g.degree(w));
        std::sort(neigh_degrees.begin(), neigh_degrees.end());

        std::vector<int> dist(n, n);
        dist[v] = 0;
        std::deque<int> queue{v};
        while (!queue.empty()) {
            int a = queue.front();
            queue.pop_front();
            for (int b = 0; b < n; ++b)
                if (g.adjacent(a, b) && dist[b] == n && b != a) {
                    dist[b] = dist[a] + 1;
                    queue.push_back(b);
                }
        }
        std::sort(dist.begin(), dist.end());

        inv[v].push_back(g.degree(v));
        inv[v].push_back(g.adjacent(v, v) ? 1 : 0);
        inv[v].insert(inv[v].end(), neigh_degrees.begin(), neigh_degrees.end());
        inv[v].insert(inv[v].end(), dist.begin(), dist.end());
    }
    return inv;
}

}  // namespace

std::optional<std::vector<int>> are_isomorphic(const SimpleGraph& x, const SimpleGraph& y) {
    if (x.size() > kMaxIsoOrder || y.size() > kMaxIsoOrder)
        throw SizeLimitExceeded("isomorphism search supports up to " +
                                std::to_string(kMaxIsoOrder) + " vertices");
    const int n = x.size();
    if (n != y.size() || x.edge_count() != y.edge_count()) return std::nullopt;

    const auto inv_x = vertex_invariants(x);
    const auto inv_y = vertex_invariants(y);
    {
        auto sx = inv_x, sy = inv_y;
        std::sort(sx.begin(), sx.end());
        std::sort(sy.begin(), sy.end());
        if (sx != sy) return std::nullopt;
    }

    // Candidate lists per x-vertex; process scarce classes first.
    std::vector<std::vector<int>> candidates(n);
    for (int v = 0; v < n; ++v)
        for (int w = 0; w < n; ++w)
            if (inv_x[v] == inv_y[w]) candidates[v].push_back(w);
    std::vector<int> order(n);
    for (int i = 0; i < n; ++i) order[i] = i;
    std::sort(order.begin(), order.end(), [&](int a, int b) {
        if (candidates[a].size() != candidates[b].size())
            return candidates[a].size() < candidates[b].size();
        return a < b;
    });

    std::vector<int> map(n, -1);
    std::vector<bool> used(n, false);
    std::vector<int> assigned;  // x-vertices mapped so far, in assignment order

    std::function<bool(std::size_t)> search = [&](std::size_t step) -> bool {
        if (step == order.size()) return true;
        const int v = order[step];
        for (int w : candidates[v]) {
            if (used[w]) continue;
            bool consistent = true;
            for (int u : assigned)
                if (x.adjacent(v, u) != y.adjacent(w, map[u])) { consistent = false; break; }
            if (!consistent) continue;
            map[v] = w;
            used[w] = true;
            assigned.push_back(v);
            if (search(step + 1)) return true;
            assigned.pop_back();
            used[w] = false;
            map[v] = -1;
        }
        return false;
    };
    if (!search(0)) return std::nullopt;

    for (int i = 0; i < n; ++i)
        for (int j = 0; j < n; ++j)
            if (x.adjacent(i, j) != y.adjacent(map[i], map[j]))
                throw Error("isomorphism search returned an unverified map");
    return map;
}

}  // namespace gcg
