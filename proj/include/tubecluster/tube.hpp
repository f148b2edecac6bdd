#pragma once

// Indecomposables of the rank-n tube and of its cluster category, addressed
// by (socle position, quasi-length), together with Hom/Ext dimensions.

#include <algorithm>
#include <compare>
#include <cstdint>
#include <string>
#include <vector>

#include "error.hpp"
#include "exact_rank.hpp"

namespace tubecluster {

/// Rank of the tube; always at least 2.
class TubeRank {
public:
    constexpr explicit TubeRank(int n) : n_(n)
    {
        if (n < 2)
            throw InputError("tube rank must be at least 2, got " + std::to_string(n));
    }

    constexpr int value() const noexcept { return n_; }

    /// Reduce any integer into the window {1..n}.
    constexpr int reduce(int a) const noexcept { return ((a - 1) % n_ + n_) % n_ + 1; }

    friend constexpr bool operator==(TubeRank, TubeRank) = default;
    friend constexpr auto operator<=>(TubeRank, TubeRank) = default;

private:
    int n_;
};

/// Indecomposable (a, b): socle at the simple (a, 1), quasi-length b.
/// The first coordinate is reduced into {1..n} on construction.
class TubeObject {
public:
    constexpr TubeObject(TubeRank rank, int a, int b) : rank_(rank), a_(rank.reduce(a)), b_(b)
    {
        if (b < 1)
            throw InputError("quasi-length must be positive, got " + std::to_string(b));
    }

    constexpr int a() const noexcept { return a_; }
    constexpr int b() const noexcept { return b_; }
    constexpr int quasi_length() const noexcept { return b_; }
    constexpr TubeRank rank() const noexcept { return rank_; }
    constexpr int n() const noexcept { return rank_.value(); }

    friend constexpr bool operator==(const TubeObject&, const TubeObject&) = default;

    /// Lexicographic by (a, b); rank breaks ties only across ranks.
    friend constexpr std::strong_ordering operator<=>(const TubeObject& x, const TubeObject& y)
    {
        if (auto c = x.a_ <=> y.a_; c != 0)
            return c;
        if (auto c = x.b_ <=> y.b_; c != 0)
            return c;
        return x.rank_ <=> y.rank_;
    }

private:
    TubeRank rank_;
    int a_;
    int b_;
};

inline std::string to_string(const TubeObject& x)
{
    return std::to_string(x.a()) + "," + std::to_string(x.b());
}

struct HomDims {
    int tubeDim = 0;
    int clusterDim = 0;
    int extDim = 0;

    friend bool operator==(const HomDims&, const HomDims&) = default;
};

namespace detail {

inline void require_same_rank(const TubeObject& x, const TubeObject& y)
{
    if (x.rank() != y.rank())
        throw InputError("rank mismatch: " + std::to_string(x.n()) + " vs " + std::to_string(y.n()));
}

} // namespace detail

constexpr TubeObject tau(const TubeObject& x)
{
    return TubeObject(x.rank(), x.a() - 1, x.b());
}

constexpr TubeObject tau_inv(const TubeObject& x)
{
    return TubeObject(x.rank(), x.a() + 1, x.b());
}

/// dim Hom_T(X, Y) for uniserials X = (a,b), Y = (c,d).
///
/// A nonzero map factors through a common uniserial of length e that is a
/// quotient of X (top a+b-1) and a submodule of Y (socle c), so it is counted
/// by e <= min(b,d) with e = a+b-c (mod n).
inline int hom_dim_tube(const TubeObject& x, const TubeObject& y)
{
    detail::require_same_rank(x, y);
    const int n = x.n();
    const int residue = ((x.a() + x.b() - y.a()) % n + n) % n;
    const int limit = std::min(x.b(), y.b());
    const int first = residue == 0 ? n : residue;
    if (first > limit)
        return 0;
    return (limit - first) / n + 1;
}

/// dim Hom in the cluster tube: D Hom_T(Y, tau^2 X) plus Hom_T(X, Y).
inline int hom_dim_cluster(const TubeObject& x, const TubeObject& y)
{
    detail::require_same_rank(x, y);
    return hom_dim_tube(y, tau(tau(x))) + hom_dim_tube(x, y);
}

/// dim Ext^1 in the cluster tube: D Hom_T(Y, tau X) plus Hom_T(X, tau Y).
inline int ext_dim_cluster(const TubeObject& x, const TubeObject& y)
{
    detail::require_same_rank(x, y);
    return hom_dim_tube(y, tau(x)) + hom_dim_tube(x, tau(y));
}

inline HomDims hom_dims(const TubeObject& x, const TubeObject& y)
{
    return {hom_dim_tube(x, y), hom_dim_cluster(x, y), ext_dim_cluster(x, y)};
}

constexpr bool is_rigid_indec(const TubeObject& x) noexcept
{
    return x.b() <= x.n() - 1;
}

/// Smallest representative of x's first coordinate that is >= base.
constexpr int lift_into_window(int base, const TubeObject& x) noexcept
{
    const int n = x.n();
    return base + ((x.a() - base) % n + n) % n;
}

/// Membership in the wing below `top`: a' >= a and a'+b' <= a+b, after
/// lifting a' into [a, a+n).
inline bool wing_contains(const TubeObject& top, const TubeObject& x)
{
    detail::require_same_rank(top, x);
    const int lifted = lift_into_window(top.a(), x);
    return lifted + x.b() <= top.a() + top.b();
}

/// Explicit representation of a uniserial nilpotent module over the cyclic
/// quiver on vertices 1..n with arrows v -> v-1.
struct NilpotentRep {
    TubeRank rank;
    /// dims[v-1] is the dimension at vertex v.
    std::vector<int> dims;
    /// arrowMaps[v-1] is the dims[v-2] x dims[v-1] matrix of the arrow
    /// leaving vertex v (vertex indices cyclic).
    std::vector<IntMatrix> arrowMaps;

    int total_dim() const
    {
        int s = 0;
        for (int d : dims)
            s += d;
        return s;
    }
};

/// Basis v_a, ..., v_{a+b-1}; v_j sits at vertex j mod n. The arrow sends
/// v_j to v_{j-1} and kills v_a, so the socle is the simple at vertex a.
inline NilpotentRep build_rep(const TubeObject& x)
{
    const TubeRank rank = x.rank();
    const int n = rank.value();
    NilpotentRep rep{rank, std::vector<int>(n, 0), {}};

    // local[j - a] = position of v_j inside its vertex space
    std::vector<int> local(x.b());
    for (int j = x.a(); j < x.a() + x.b(); ++j)
        local[j - x.a()] = rep.dims[rank.reduce(j) - 1]++;

    rep.arrowMaps.resize(n);
    for (int v = 1; v <= n; ++v) {
        const int target = rank.reduce(v - 1);
        rep.arrowMaps[v - 1] = IntMatrix(rep.dims[target - 1], std::vector<std::int64_t>(rep.dims[v - 1], 0));
    }
    for (int j = x.a() + 1; j < x.a() + x.b(); ++j) {
        const int v = rank.reduce(j);
        rep.arrowMaps[v - 1][local[j - 1 - x.a()]][local[j - x.a()]] = 1;
    }
    return rep;
}

/// dim Hom(X, Y) computed directly: the null space of the intertwiner
/// equations F_{v-1} A^X_v = A^Y_v F_v over all arrows v -> v-1.
inline int hom_dim_oracle(const TubeObject& x, const TubeObject& y)
{
    detail::require_same_rank(x, y);
    const NilpotentRep rx = build_rep(x);
    const NilpotentRep ry = build_rep(y);
    const TubeRank rank = x.rank();
    const int n = rank.value();

    // unknown (v, r, c) is entry (r, c) of F_v : X_v -> Y_v
    std::vector<int> offset(n + 1, 0);
    for (int v = 1; v <= n; ++v)
        offset[v] = offset[v - 1] + ry.dims[v - 1] * rx.dims[v - 1];
    const int unknowns = offset[n];
    if (unknowns == 0)
        return 0;
    auto var = [&](int v, int r, int c) { return offset[v - 1] + r * rx.dims[v - 1] + c; };

    IntMatrix equations;
    for (int v = 1; v <= n; ++v) {
        const int w = rank.reduce(v - 1);
        const IntMatrix& ax = rx.arrowMaps[v - 1]; // X_v -> X_w
        const IntMatrix& ay = ry.arrowMaps[v - 1]; // Y_v -> Y_w
        // entry (r, c) of F_w * ax - ay * F_v, with r in Y_w and c in X_v
        for (int r = 0; r < ry.dims[w - 1]; ++r) {
            for (int c = 0; c < rx.dims[v - 1]; ++c) {
                std::vector<std::int64_t> row(unknowns, 0);
                for (int k = 0; k < rx.dims[w - 1]; ++k)
                    row[var(w, r, k)] += ax[k][c];
                for (int k = 0; k < ry.dims[v - 1]; ++k)
                    row[var(v, k, c)] -= ay[r][k];
                equations.push_back(std::move(row));
            }
        }
    }
    return unknowns - static_cast<int>(exact_rank(std::move(equations)));
}

} // namespace tubecluster
