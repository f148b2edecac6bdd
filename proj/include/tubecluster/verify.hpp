#pragma once

// Exhaustive invariant suites over a fixed rank. Each check records pass/fail
// and, on failure, the first counterexample found.

#include <functional>
#include <map>
#include <ostream>
#include <set>
#include <string>
#include <vector>

#include "error.hpp"
#include "mutation.hpp"
#include "polygon.hpp"
#include "rigid.hpp"
#include "tube.hpp"

namespace tubecluster {

inline long long binomial(int n, int k)
{
    if (k < 0 || k > n)
        return 0;
    long long r = 1;
    for (int i = 1; i <= k; ++i)
        r = r * (n - k + i) / i;
    return r;
}

inline long long catalan(int m)
{
    return binomial(2 * m, m) / (m + 1);
}

struct CheckResult {
    std::string name;
    bool passed = false;
    std::string detail;
};

struct VerifyReport {
    std::string suite;
    int rank = 0;
    std::vector<CheckResult> checks;

    bool passed() const
    {
        for (const auto& c : checks)
            if (!c.passed)
                return false;
        return true;
    }

    int exit_code() const { return passed() ? 0 : 1; }

    /// Runs `body`; an empty return string or no exception means pass.
    void run(const std::string& name, const std::function<std::string()>& body)
    {
        CheckResult r{name, false, {}};
        try {
            r.detail = body();
            r.passed = r.detail.empty();
        } catch (const std::exception& e) {
            r.detail = e.what();
        }
        checks.push_back(std::move(r));
    }

    void append(const VerifyReport& other)
    {
        for (const auto& c : other.checks)
            checks.push_back(c);
    }
};

inline std::ostream& operator<<(std::ostream& os, const VerifyReport& r)
{
    for (const auto& c : r.checks) {
        os << (c.passed ? "PASS " : "FAIL ") << "rank " << r.rank << " " << c.name;
        if (!c.passed)
            os << ": " << c.detail;
        os << '\n';
    }
    return os;
}

/// Every indecomposable with quasi-length at most maxLength.
inline std::vector<TubeObject> enumerate_indecs(int n, int maxLength)
{
    const TubeRank rank(n);
    std::vector<TubeObject> out;
    for (int a = 1; a <= n; ++a)
        for (int b = 1; b <= maxLength; ++b)
            out.emplace_back(rank, a, b);
    return out;
}

/// Whether delta(1,b) and delta(c,d) satisfy the two crossing conditions,
/// for rigid (1,b) and rigid (c,d) with c in 1..n.
inline int hammock_conditions(int n, int b, int c, int d)
{
    const bool first = 1 < c && c < b + 2 && c + d > b + 1;
    const bool second = 1 < c + d + 1 - n && c + d + 1 - n < b + 2 && 1 < c && c < n + 1;
    return (first ? 1 : 0) + (second ? 1 : 0);
}

namespace suites {

inline VerifyReport hom(int n)
{
    VerifyReport r{"hom", n, {}};
    const auto objs = enumerate_indecs(n, 2 * n);
    r.run("hom formula equals intertwiner oracle (quasi-length <= 2n)", [&]() -> std::string {
        for (const auto& x : objs)
            for (const auto& y : objs) {
                const int f = hom_dim_tube(x, y);
                const int o = hom_dim_oracle(x, y);
                if (f != o)
                    return "(" + to_string(x) + ") -> (" + to_string(y) + "): formula " + std::to_string(f) +
                           ", oracle " + std::to_string(o);
            }
        return {};
    });
    r.run("self-extensions vanish exactly on quasi-length <= n-1", [&]() -> std::string {
        for (const auto& x : objs)
            if ((ext_dim_cluster(x, x) == 0) != (x.b() <= n - 1) || is_rigid_indec(x) != (x.b() <= n - 1))
                return "(" + to_string(x) + ") has self-ext " + std::to_string(ext_dim_cluster(x, x));
        return {};
    });
    r.run("Ext^1 is symmetric", [&]() -> std::string {
        for (const auto& x : objs)
            for (const auto& y : objs)
                if (ext_dim_cluster(x, y) != ext_dim_cluster(y, x))
                    return "(" + to_string(x) + "), (" + to_string(y) + ")";
        return {};
    });
    r.run("cluster Hom contains tube Hom", [&]() -> std::string {
        for (const auto& x : objs)
            for (const auto& y : objs)
                if (hom_dim_cluster(x, y) < hom_dim_tube(x, y))
                    return "(" + to_string(x) + "), (" + to_string(y) + ")";
        return {};
    });
    r.run("Ext^1 between rigid objects matches the crossing conditions", [&]() -> std::string {
        const TubeRank rank(n);
        for (const auto& x : enumerate_rigid_indecs(n))
            for (const auto& y : enumerate_rigid_indecs(n)) {
                // rotate so that x sits at (1, b)
                const TubeObject ys(rank, y.a() - x.a() + 1, y.b());
                const int expected = hammock_conditions(n, x.b(), ys.a(), ys.b());
                if (ext_dim_cluster(x, y) != expected)
                    return "(" + to_string(x) + "), (" + to_string(y) + "): ext " +
                           std::to_string(ext_dim_cluster(x, y)) + ", conditions " + std::to_string(expected);
            }
        return {};
    });
    return r;
}

inline VerifyReport counts(int n)
{
    VerifyReport r{"counts", n, {}};
    std::vector<MaximalRigid> all;
    try {
        all = enumerate_maximal_rigid(n);
    } catch (const std::exception& e) {
        r.checks.push_back({"enumerate maximal rigid objects", false, e.what()});
        return r;
    }
    r.run("rigid indecomposables number n(n-1)", [&]() -> std::string {
        const auto rigid = enumerate_rigid_indecs(n);
        const auto among = enumerate_indecs(n, 2 * n);
        std::size_t self_rigid = 0;
        for (const auto& x : among)
            self_rigid += ext_dim_cluster(x, x) == 0 ? 1 : 0;
        if (rigid.size() != static_cast<std::size_t>(n * (n - 1)) || self_rigid != rigid.size())
            return "found " + std::to_string(self_rigid) + ", listed " + std::to_string(rigid.size());
        return {};
    });
    r.run("maximal rigid objects number binomial(2n-2, n-1)", [&]() -> std::string {
        if (static_cast<long long>(all.size()) != binomial(2 * n - 2, n - 1))
            return "found " + std::to_string(all.size()) + ", expected " + std::to_string(binomial(2 * n - 2, n - 1));
        return {};
    });
    r.run("each top position carries Catalan(n-1) maximal rigid objects", [&]() -> std::string {
        std::map<int, long long> per_top;
        for (const auto& t : all)
            ++per_top[top_summand(t).a()];
        for (int s = 1; s <= n; ++s)
            if (per_top[s] != catalan(n - 1))
                return "top " + std::to_string(s) + " has " + std::to_string(per_top[s]);
        return {};
    });
    r.run("n-1 summands, unique top of quasi-length n-1, wing containment", [&]() -> std::string {
        for (const auto& t : all) {
            if (t.size() != static_cast<std::size_t>(n - 1) || !is_rigid_set(t.summands()))
                return "{" + to_string(t) + "}";
            const TubeObject top = top_summand(t);
            for (const auto& s : t.summands())
                if (!wing_contains(top, s))
                    return "{" + to_string(t) + "}: (" + to_string(s) + ") outside the wing";
        }
        return {};
    });
    r.run("tilting data round-trip", [&]() -> std::string {
        std::set<std::pair<int, std::vector<WingPosition>>> seen;
        for (const auto& t : all) {
            const auto d = to_tilting_datum(t);
            if (from_tilting_datum(t.rank(), d) != t)
                return "{" + to_string(t) + "}";
            seen.emplace(d.topCoordinate, d.wingPositions);
        }
        if (seen.size() != all.size())
            return "tilting data are not distinct";
        return {};
    });
    r.run("every almost complete object has exactly two complements", [&]() -> std::string {
        for (const auto& t : all)
            for (std::size_t k = 0; k < t.size(); ++k) {
                auto rest = t.summands();
                rest.erase(rest.begin() + static_cast<std::ptrdiff_t>(k));
                const auto [c1, c2] = complements(AlmostComplete(t.rank(), rest));
                if (c1 == c2 || (c1 != t[k] && c2 != t[k]))
                    return "{" + to_string(t) + "} without (" + to_string(t[k]) + ")";
            }
        return {};
    });
    r.run("the top summand has a two-dimensional endomorphism space", [&]() -> std::string {
        for (const auto& t : all) {
            const auto top = top_summand(t);
            if (hom_dim_cluster(top, top) != 2)
                return "{" + to_string(t) + "}";
        }
        return {};
    });
    return r;
}

inline VerifyReport mutation(int n)
{
    VerifyReport r{"mutation", n, {}};
    r.run("zig-zag exchange matrix and its type B Cartan counterpart", [&]() -> std::string {
        const Seed seed = initial_seed(n);
        const auto zigzag_order = reindex(seed.matrix, zigzag_summands(n));
        if (zigzag_order.entries != zigzag_matrix(n))
            return "re-indexed matrix " + to_string(zigzag_order.entries);
        if (cartan_counterpart(zigzag_order) != cartan_matrix_type_b(n - 1))
            return "Cartan counterpart " + to_string(cartan_counterpart(zigzag_order));
        return {};
    });
    std::optional<ExchangeGraph> graph;
    r.run("matrix propagation is path independent over the exchange graph", [&]() -> std::string {
        graph.emplace(build_exchange_graph(n));
        return {};
    });
    if (!graph)
        return r;
    r.run("stored matrices: zero diagonal, sign-skew-symmetric, entries in [-2, 2]", [&]() -> std::string {
        for (const auto& s : graph->seeds()) {
            const auto& b = s.matrix;
            if (b.order != s.object.summands())
                return "{" + to_string(s.object) + "}: order mismatch";
            if (!is_sign_skew_symmetric(b))
                return "{" + to_string(s.object) + "}: " + to_string(b.entries);
            for (std::size_t i = 0; i < b.size(); ++i) {
                if (b(i, i) != 0)
                    return "{" + to_string(s.object) + "}: nonzero diagonal";
                for (std::size_t j = 0; j < b.size(); ++j)
                    if (b(i, j) < -kMaxEntry || b(i, j) > kMaxEntry || (b(i, j) > 0 && b(j, i) > 0))
                        return "{" + to_string(s.object) + "}: " + to_string(b.entries);
            }
        }
        return {};
    });
    r.run("exchange graph is connected, (n-1)-regular, with the expected size", [&]() -> std::string {
        const auto nodes = static_cast<long long>(graph->node_count());
        const auto edges = static_cast<long long>(graph->edges().size());
        if (nodes != binomial(2 * n - 2, n - 1) || edges != nodes * (n - 1) / 2 || !graph->is_regular() ||
            !graph->is_connected())
            return std::to_string(nodes) + " nodes, " + std::to_string(edges) + " edges";
        return {};
    });
    r.run("mutation class is closed: every mutation of a stored seed is a stored seed", [&]() -> std::string {
        for (std::size_t i = 0; i < graph->node_count(); ++i)
            for (std::size_t k = 0; k + 1 < static_cast<std::size_t>(n); ++k) {
                const auto [next, slot] = mutate_seed(graph->seed(i), k);
                const auto j = graph->find(next.object);
                if (!j || graph->seed(*j) != next)
                    return "{" + to_string(graph->seed(i).object) + "} at " + std::to_string(k);
            }
        return {};
    });
    r.run("middle terms are disjoint and supported on the other summands", [&]() -> std::string {
        for (const auto& s : graph->seeds())
            for (std::size_t i = 0; i < s.object.size(); ++i) {
                const auto m = middle_terms(s, i);
                for (const auto* side : {&m.U, &m.Uprime})
                    for (const auto& x : *side)
                        if (x == s.object[i] || !s.object.contains(x))
                            return "{" + to_string(s.object) + "}, summand " + std::to_string(i);
            }
        return {};
    });
    r.run("mutating twice at the exchanged summand restores the seed", [&]() -> std::string {
        for (const auto& s : graph->seeds())
            for (std::size_t k = 0; k < s.object.size(); ++k) {
                const auto [once, slot] = mutate_seed(s, k);
                const auto [twice, back] = mutate_seed(once, slot);
                if (twice != s || back != k)
                    return "{" + to_string(s.object) + "} at " + std::to_string(k);
                if (graph->neighbour(graph->index_of(s.object), k) != graph->index_of(once.object))
                    return "graph edge mismatch at {" + to_string(s.object) + "}";
            }
        return {};
    });
    return r;
}

inline VerifyReport polygon(int n)
{
    VerifyReport r{"polygon", n, {}};
    const auto rigid = enumerate_rigid_indecs(n);
    r.run("delta is a bijection onto centrally symmetric pairs", [&]() -> std::string {
        std::set<CsPair> image;
        for (const auto& x : rigid) {
            const CsPair p = delta(x);
            if (delta_inv(p) != x)
                return "(" + to_string(x) + ") -> " + to_string(p);
            if (p.degenerate() != (x.b() == n - 1))
                return "(" + to_string(x) + ") diameter mismatch";
            image.insert(p);
        }
        const auto pairs = enumerate_cs_pairs(n);
        if (image.size() != rigid.size() || pairs.size() != rigid.size() ||
            !std::equal(image.begin(), image.end(), pairs.begin()))
            return std::to_string(image.size()) + " images, " + std::to_string(pairs.size()) + " pairs";
        return {};
    });
    r.run("crossing points equal twice dim Ext^1", [&]() -> std::string {
        for (const auto& x : rigid)
            for (const auto& y : rigid)
                if (crossing_points(delta(x), delta(y)) != 2 * ext_dim_cluster(x, y))
                    return "(" + to_string(x) + "), (" + to_string(y) + "): " +
                           std::to_string(crossing_points(delta(x), delta(y))) + " crossings, ext " +
                           std::to_string(ext_dim_cluster(x, y));
        return {};
    });
    std::optional<FlipGraph> flips;
    r.run("flip graph is connected and (n-1)-regular; one diameter per triangulation", [&]() -> std::string {
        flips.emplace(n);
        if (!flips->is_regular() || !flips->is_connected())
            return "flip graph shape";
        if (static_cast<long long>(flips->node_count()) != binomial(2 * n - 2, n - 1))
            return std::to_string(flips->node_count()) + " triangulations";
        for (const auto& t : flips->nodes())
            if (t.distinct_diagonals() != static_cast<std::size_t>(2 * n - 3))
                return to_string(t);
        return {};
    });
    r.run("triangulation_of is an isomorphism from the exchange graph to the flip graph", [&]() -> std::string {
        if (!flips)
            return "flip graph unavailable";
        const auto eg = build_exchange_graph(n);
        std::string why;
        if (!graphs_isomorphic_via_delta(eg, *flips, &why))
            return why;
        return {};
    });
    return r;
}

inline VerifyReport no_cluster_tilting(int n)
{
    VerifyReport r{"no-ct", n, {}};
    r.run("witnesses Y_k (k = 2, 3) are Ext-orthogonal to T, outside add T, not rigid", [&]() -> std::string {
        for (const auto& t : enumerate_maximal_rigid(n))
            for (int k : {2, 3}) {
                const auto y = cluster_tilting_witness(t, k);
                const auto top = top_summand(t);
                if (y != TubeObject(t.rank(), top.a(), k * n - 1))
                    return "unexpected witness (" + to_string(y) + ")";
                if (t.contains(y) || ext_dim_cluster(y, y) == 0)
                    return "{" + to_string(t) + "}, k=" + std::to_string(k);
                for (const auto& s : t.summands())
                    if (ext_dim_cluster(s, y) != 0 || ext_dim_cluster(y, s) != 0)
                        return "{" + to_string(t) + "}, k=" + std::to_string(k) + ", summand (" + to_string(s) + ")";
            }
        return {};
    });
    return r;
}

} // namespace suites

inline constexpr int kMaxRank = 8;
inline constexpr int kMaxOracleRank = 6;

inline const std::vector<std::string>& suite_names()
{
    static const std::vector<std::string> names{"all", "hom", "counts", "mutation", "polygon", "no-ct"};
    return names;
}

/// Runs one suite (or "all") at rank n. Ranks outside the supported range
/// are an InputError. "all" above the oracle range leaves out hom and polygon.
inline VerifyReport run_suite(const std::string& suite, int n)
{
    if (n < 2 || n > kMaxRank)
        throw InputError("rank " + std::to_string(n) + " is outside the supported range 2.." + std::to_string(kMaxRank));
    const bool exhaustive = suite == "hom" || suite == "polygon";
    if (exhaustive && n > kMaxOracleRank)
        throw InputError("suite " + suite + " supports ranks 2.." + std::to_string(kMaxOracleRank));
    if (suite == "hom")
        return suites::hom(n);
    if (suite == "counts")
        return suites::counts(n);
    if (suite == "mutation")
        return suites::mutation(n);
    if (suite == "polygon")
        return suites::polygon(n);
    if (suite == "no-ct")
        return suites::no_cluster_tilting(n);
    if (suite != "all")
        throw InputError("unknown suite '" + suite + "'");
    VerifyReport all{"all", n, {}};
    if (n <= kMaxOracleRank)
        all.append(suites::hom(n));
    all.append(suites::counts(n));
    all.append(suites::mutation(n));
    if (n <= kMaxOracleRank)
        all.append(suites::polygon(n));
    all.append(suites::no_cluster_tilting(n));
    return all;
}

} // namespace tubecluster
