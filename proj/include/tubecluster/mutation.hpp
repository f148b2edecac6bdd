#pragma once

// Exchange matrices, Fomin-Zelevinsky mutation and the exchange graph of
// maximal rigid objects in the cluster tube.

#include <algorithm>
#include <cstdlib>
#include <deque>
#include <map>
#include <optional>
#include <string>
#include <tuple>
#include <utility>
#include <vector>

#include "error.hpp"
#include "rigid.hpp"

namespace tubecluster {

/// Square integer matrix whose rows and columns are indexed by `order`.
struct ExchangeMatrix {
    std::vector<TubeObject> order;
    IntMatrix entries;

    std::size_t size() const noexcept { return order.size(); }
    std::int64_t operator()(std::size_t i, std::size_t j) const { return entries.at(i).at(j); }

    friend bool operator==(const ExchangeMatrix&, const ExchangeMatrix&) = default;
};

inline std::string to_string(const IntMatrix& m)
{
    std::string s = "[";
    for (std::size_t i = 0; i < m.size(); ++i) {
        s += i ? ",[" : "[";
        for (std::size_t j = 0; j < m[i].size(); ++j)
            s += (j ? "," : "") + std::to_string(m[i][j]);
        s += "]";
    }
    return s + "]";
}

inline bool is_square(const IntMatrix& m)
{
    return std::all_of(m.begin(), m.end(), [&](const auto& row) { return row.size() == m.size(); });
}

/// sign(b_ij) = -sign(b_ji) for all i, j, with sign(0) = 0.
inline bool is_sign_skew_symmetric(const IntMatrix& b)
{
    auto sign = [](std::int64_t v) { return (v > 0) - (v < 0); };
    for (std::size_t i = 0; i < b.size(); ++i)
        for (std::size_t j = 0; j < b.size(); ++j)
            if (sign(b[i][j]) != -sign(b[j][i]))
                return false;
    return true;
}

inline bool is_sign_skew_symmetric(const ExchangeMatrix& b)
{
    return is_sign_skew_symmetric(b.entries);
}

/// a_ii = 2, a_ij = -|b_ij|.
inline IntMatrix cartan_counterpart(const IntMatrix& b)
{
    if (!is_square(b))
        throw InputError("Cartan counterpart needs a square matrix");
    IntMatrix a = b;
    for (std::size_t i = 0; i < b.size(); ++i)
        for (std::size_t j = 0; j < b.size(); ++j)
            a[i][j] = i == j ? 2 : -std::llabs(b[i][j]);
    return a;
}

inline IntMatrix cartan_counterpart(const ExchangeMatrix& b)
{
    return cartan_counterpart(b.entries);
}

/// Cartan matrix of type B_r with the double bond between nodes 1 and 2,
/// i.e. a_12 = -2, a_21 = -1.
inline IntMatrix cartan_matrix_type_b(int r)
{
    IntMatrix a(r, std::vector<std::int64_t>(r, 0));
    for (int i = 0; i < r; ++i) {
        a[i][i] = 2;
        if (i + 1 < r)
            a[i][i + 1] = a[i + 1][i] = -1;
    }
    if (r >= 2)
        a[0][1] = -2;
    return a;
}

/// Fomin-Zelevinsky mutation at index k. The row/column order is left as is.
inline IntMatrix fz_mutate(const IntMatrix& b, std::size_t k)
{
    if (k >= b.size())
        throw InputError("mutation index " + std::to_string(k) + " out of range");
    IntMatrix out = b;
    for (std::size_t i = 0; i < b.size(); ++i) {
        for (std::size_t j = 0; j < b.size(); ++j) {
            if (i == k || j == k)
                out[i][j] = -b[i][j];
            else
                out[i][j] = b[i][j] + (std::llabs(b[i][k]) * b[k][j] + b[i][k] * std::llabs(b[k][j])) / 2;
        }
    }
    return out;
}

inline ExchangeMatrix fz_mutate(const ExchangeMatrix& b, std::size_t k)
{
    return {b.order, fz_mutate(b.entries, k)};
}

/// Simultaneous row/column permutation of `b` onto `order`, which must be a
/// rearrangement of b.order.
inline ExchangeMatrix reindex(const ExchangeMatrix& b, const std::vector<TubeObject>& order)
{
    if (order.size() != b.order.size())
        throw InputError("re-indexing onto an order of different length");
    std::vector<std::size_t> from(order.size());
    for (std::size_t i = 0; i < order.size(); ++i) {
        auto it = std::find(b.order.begin(), b.order.end(), order[i]);
        if (it == b.order.end())
            throw InputError(to_string(order[i]) + " is not in the matrix order");
        from[i] = static_cast<std::size_t>(it - b.order.begin());
    }
    ExchangeMatrix out{order, IntMatrix(order.size(), std::vector<std::int64_t>(order.size(), 0))};
    for (std::size_t i = 0; i < order.size(); ++i)
        for (std::size_t j = 0; j < order.size(); ++j)
            out.entries[i][j] = b.entries[from[i]][from[j]];
    return out;
}

struct Seed {
    MaximalRigid object;
    ExchangeMatrix matrix;

    friend bool operator==(const Seed&, const Seed&) = default;
};

/// Zig-zag object: (i, n-2i+1) and (i, n-2i) for i = 1..floor(n/2), dropping
/// quasi-length 0. Listed by decreasing quasi-length, T_1 = top.
inline std::vector<TubeObject> zigzag_summands(int n)
{
    const TubeRank rank(n);
    std::vector<TubeObject> out;
    for (int i = 1; i <= n / 2; ++i) {
        out.emplace_back(rank, i, n - 2 * i + 1);
        if (n - 2 * i > 0)
            out.emplace_back(rank, i, n - 2 * i);
    }
    return out;
}

/// Exchange matrix of the zig-zag object in the order of zigzag_summands:
/// b_12 = -2, b_21 = 1, and b_{i,i-1} = b_{i,i+1} = (-1)^i for i >= 2.
inline IntMatrix zigzag_matrix(int n)
{
    const int r = n - 1;
    IntMatrix b(r, std::vector<std::int64_t>(r, 0));
    if (r >= 2) {
        b[0][1] = -2;
        b[1][0] = 1;
    }
    for (int i = 2; i <= r; ++i) {
        const int s = i % 2 == 0 ? 1 : -1;
        b[i - 1][i - 2] = s;
        if (i < r)
            b[i - 1][i] = s;
    }
    return b;
}

/// The zig-zag seed with its matrix in canonical (lexicographic) order.
inline Seed initial_seed(int n)
{
    auto order = zigzag_summands(n);
    ExchangeMatrix zigzag_order{order, zigzag_matrix(n)};
    MaximalRigid object(TubeRank(n), order);
    return {object, reindex(zigzag_order, object.summands())};
}

/// Replace summand k by its other complement. Returns the new object and the
/// index the new summand occupies in its canonical order.
inline std::pair<MaximalRigid, std::size_t> exchange(const MaximalRigid& t, std::size_t k)
{
    if (k >= t.size())
        throw InputError("exchange index " + std::to_string(k) + " out of range");
    std::vector<TubeObject> rest = t.summands();
    const TubeObject removed = rest[k];
    rest.erase(rest.begin() + static_cast<std::ptrdiff_t>(k));
    const auto [first, second] = complements(AlmostComplete(t.rank(), rest));
    if (first != removed && second != removed)
        throw VerificationFailure("removed summand " + to_string(removed) + " is not among its own complements");
    const TubeObject replacement = first == removed ? second : first;
    rest.push_back(replacement);
    MaximalRigid next(t.rank(), std::move(rest));
    return {next, next.index_of(replacement)};
}

inline constexpr std::int64_t kMaxEntry = 2;

/// Exchange at k, mutate the matrix at k, substitute the new summand and
/// re-sort rows/columns canonically.
inline std::pair<Seed, std::size_t> mutate_seed(const Seed& seed, std::size_t k)
{
    auto [next, slot] = exchange(seed.object, k);
    ExchangeMatrix mutated = fz_mutate(seed.matrix, k);
    mutated.order[k] = next[slot];
    for (const auto& row : mutated.entries)
        for (auto v : row)
            if (std::llabs(v) > kMaxEntry)
                throw VerificationFailure("exchange matrix entry " + std::to_string(v) + " exceeds 2 in absolute value");
    ExchangeMatrix canonical = reindex(mutated, next.summands());
    return {Seed{std::move(next), std::move(canonical)}, slot};
}

struct ExchangeEdge {
    std::size_t from = 0;
    /// summand index within `from`
    std::size_t slot = 0;
    std::size_t to = 0;
    /// index of the new summand within `to`
    std::size_t toSlot = 0;

    friend bool operator==(const ExchangeEdge&, const ExchangeEdge&) = default;
};

/// Seeds keyed by their maximal rigid object, nodes in canonical order.
class ExchangeGraph {
public:
    ExchangeGraph(TubeRank rank, std::vector<Seed> seeds) : rank_(rank), seeds_(std::move(seeds))
    {
        std::sort(seeds_.begin(), seeds_.end(), [](const Seed& x, const Seed& y) { return x.object < y.object; });
        for (std::size_t i = 0; i < seeds_.size(); ++i)
            index_.emplace(seeds_[i].object, i);
        neighbours_.assign(seeds_.size(), std::vector<std::size_t>(rank.value() - 1, npos));
    }

    static constexpr std::size_t npos = static_cast<std::size_t>(-1);

    TubeRank rank() const noexcept { return rank_; }
    std::size_t node_count() const noexcept { return seeds_.size(); }
    const std::vector<Seed>& seeds() const noexcept { return seeds_; }
    const Seed& seed(std::size_t i) const { return seeds_.at(i); }
    const std::vector<ExchangeEdge>& edges() const noexcept { return edges_; }

    std::optional<std::size_t> find(const MaximalRigid& t) const
    {
        auto it = index_.find(t);
        if (it == index_.end())
            return std::nullopt;
        return it->second;
    }

    std::size_t index_of(const MaximalRigid& t) const
    {
        if (auto i = find(t))
            return *i;
        throw InputError("{" + to_string(t) + "} is not a node of the exchange graph");
    }

    /// Node reached from `node` by exchanging summand `slot`.
    std::size_t neighbour(std::size_t node, std::size_t slot) const { return neighbours_.at(node).at(slot); }

    void add_edge(std::size_t from, std::size_t slot, std::size_t to, std::size_t toSlot)
    {
        auto& fwd = neighbours_.at(from).at(slot);
        auto& back = neighbours_.at(to).at(toSlot);
        if (fwd == to && back == from)
            return;
        if (fwd != npos || back != npos)
            throw VerificationFailure("inconsistent exchange at {" + to_string(seeds_[from].object) + "}");
        fwd = to;
        back = from;
        if (from < to)
            edges_.push_back({from, slot, to, toSlot});
        else
            edges_.push_back({to, toSlot, from, slot});
    }

    void sort_edges()
    {
        std::sort(edges_.begin(), edges_.end(), [](const ExchangeEdge& x, const ExchangeEdge& y) {
            return std::tie(x.from, x.slot, x.to, x.toSlot) < std::tie(y.from, y.slot, y.to, y.toSlot);
        });
    }

    bool is_regular() const
    {
        for (const auto& row : neighbours_)
            for (auto v : row)
                if (v == npos)
                    return false;
        return true;
    }

    bool is_connected() const
    {
        if (seeds_.empty())
            return true;
        std::vector<char> seen(seeds_.size(), 0);
        std::deque<std::size_t> queue{0};
        seen[0] = 1;
        std::size_t count = 1;
        while (!queue.empty()) {
            auto u = queue.front();
            queue.pop_front();
            for (auto v : neighbours_[u])
                if (v != npos && !seen[v]) {
                    seen[v] = 1;
                    ++count;
                    queue.push_back(v);
                }
        }
        return count == seeds_.size();
    }

private:
    TubeRank rank_;
    std::vector<Seed> seeds_;
    std::map<MaximalRigid, std::size_t> index_;
    std::vector<std::vector<std::size_t>> neighbours_;
    std::vector<ExchangeEdge> edges_;
};

/// Breadth-first propagation of the zig-zag seed over all exchanges. A node
/// reached twice must receive the identical canonical matrix; any mismatch,
/// and any maximal rigid object left unreached, is a VerificationFailure.
inline ExchangeGraph build_exchange_graph(int n)
{
    const TubeRank rank(n);
    std::map<MaximalRigid, ExchangeMatrix> found;
    struct Step {
        MaximalRigid from;
        std::size_t slot;
        MaximalRigid to;
        std::size_t toSlot;
    };
    std::vector<Step> steps;

    const Seed start = initial_seed(n);
    found.emplace(start.object, start.matrix);
    std::deque<MaximalRigid> queue{start.object};
    while (!queue.empty()) {
        const MaximalRigid current = queue.front();
        queue.pop_front();
        const Seed seed{current, found.at(current)};
        for (std::size_t k = 0; k < current.size(); ++k) {
            auto [next, slot] = mutate_seed(seed, k);
            steps.push_back({current, k, next.object, slot});
            auto it = found.find(next.object);
            if (it == found.end()) {
                found.emplace(next.object, next.matrix);
                queue.push_back(next.object);
            } else if (it->second != next.matrix) {
                throw VerificationFailure("path dependence at {" + to_string(next.object) + "}: stored " +
                                          to_string(it->second.entries) + ", propagated " +
                                          to_string(next.matrix.entries));
            }
        }
    }

    std::vector<Seed> seeds;
    for (auto& [object, matrix] : found)
        seeds.push_back({object, matrix});
    ExchangeGraph graph(rank, std::move(seeds));
    for (const auto& s : steps)
        graph.add_edge(graph.index_of(s.from), s.slot, graph.index_of(s.to), s.toSlot);
    graph.sort_edges();

    for (const auto& t : enumerate_maximal_rigid(n))
        if (!graph.find(t))
            throw VerificationFailure("maximal rigid object {" + to_string(t) + "} is unreachable from the zig-zag seed");
    return graph;
}

inline const ExchangeMatrix& b_matrix(const ExchangeGraph& graph, const MaximalRigid& t)
{
    return graph.seed(graph.index_of(t)).matrix;
}

/// Middle terms of the two exchange triangles for summand i, recovered from
/// row i: T_j enters U with multiplicity max(-b_ij, 0) and U' with
/// multiplicity max(b_ij, 0). Multisets are stored with repetition.
struct MiddleTerms {
    std::vector<TubeObject> U;
    std::vector<TubeObject> Uprime;
};

inline MiddleTerms middle_terms(const Seed& seed, std::size_t i)
{
    const auto& b = seed.matrix;
    if (i >= b.size())
        throw InputError("summand index " + std::to_string(i) + " out of range");
    MiddleTerms out;
    for (std::size_t j = 0; j < b.size(); ++j) {
        for (std::int64_t m = 0; m < -b(i, j); ++m)
            out.U.push_back(b.order[j]);
        for (std::int64_t m = 0; m < b(i, j); ++m)
            out.Uprime.push_back(b.order[j]);
    }
    for (const auto& x : out.U)
        if (std::find(out.Uprime.begin(), out.Uprime.end(), x) != out.Uprime.end())
            throw VerificationFailure("exchange triangles share the summand " + to_string(x));
    return out;
}

inline MiddleTerms middle_terms(const ExchangeGraph& graph, const MaximalRigid& t, std::size_t i)
{
    return middle_terms(graph.seed(graph.index_of(t)), i);
}

} // namespace tubecluster
