#pragma once

#include <algorithm>
#include <cstddef>
#include <vector>

namespace tubecluster {

/// All maximal cliques of the graph on vertices 0..count-1 whose edges are
/// given by `adjacent(i, j)` (symmetric, irreflexive). Bron-Kerbosch with
/// Tomita pivoting; each clique is reported once, vertices ascending.
template <typename Adjacent>
std::vector<std::vector<std::size_t>> maximal_cliques(std::size_t count, Adjacent&& adjacent)
{
    std::vector<std::vector<char>> adj(count, std::vector<char>(count, 0));
    for (std::size_t i = 0; i < count; ++i)
        for (std::size_t j = i + 1; j < count; ++j)
            adj[i][j] = adj[j][i] = adjacent(i, j) ? 1 : 0;

    std::vector<std::vector<std::size_t>> out;
    std::vector<std::size_t> clique;
    auto expand = [&](auto& self, std::vector<std::size_t> cand, std::vector<std::size_t> excluded) -> void {
        if (cand.empty()) {
            if (excluded.empty()) {
                auto found = clique;
                std::sort(found.begin(), found.end());
                out.push_back(std::move(found));
            }
            return;
        }
        std::size_t pivot = cand.front();
        std::size_t best = 0;
        for (const auto* pool : {&cand, &excluded}) {
            for (auto u : *pool) {
                std::size_t deg = 0;
                for (auto v : cand)
                    deg += adj[u][v];
                if (deg >= best) {
                    best = deg;
                    pivot = u;
                }
            }
        }
        std::vector<std::size_t> branch;
        for (auto v : cand)
            if (!adj[pivot][v])
                branch.push_back(v);
        for (auto v : branch) {
            std::vector<std::size_t> nc, nx;
            for (auto u : cand)
                if (adj[v][u])
                    nc.push_back(u);
            for (auto u : excluded)
                if (adj[v][u])
                    nx.push_back(u);
            clique.push_back(v);
            self(self, std::move(nc), std::move(nx));
            clique.pop_back();
            cand.erase(std::find(cand.begin(), cand.end(), v));
            excluded.push_back(v);
        }
    };
    std::vector<std::size_t> all(count);
    for (std::size_t i = 0; i < count; ++i)
        all[i] = i;
    expand(expand, std::move(all), {});
    std::sort(out.begin(), out.end());
    return out;
}

} // namespace tubecluster
