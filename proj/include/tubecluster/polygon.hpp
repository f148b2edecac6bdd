#pragma once

// Centrally symmetric diagonals and triangulations of the 2n-gon (corners
// labelled clockwise 1..2n), and their match with the cluster tube.

#include <algorithm>
#include <deque>
#include <map>
#include <optional>
#include <string>
#include <tuple>
#include <utility>
#include <vector>

#include "cliques.hpp"
#include "error.hpp"
#include "mutation.hpp"
#include "rigid.hpp"
#include "tube.hpp"

namespace tubecluster {

/// Diagonal [p, q] of the 2n-gon, stored with p < q.
class Diagonal {
public:
    Diagonal(int corners, int p, int q) : corners_(corners)
    {
        if (corners < 4 || corners % 2 != 0)
            throw InputError("polygon must have an even number of corners, at least 4");
        p = reduce(p);
        q = reduce(q);
        if (p > q)
            std::swap(p, q);
        if (p == q || q - p == 1 || q - p == corners - 1)
            throw InputError("[" + std::to_string(p) + "," + std::to_string(q) + "] is not a diagonal");
        p_ = p;
        q_ = q;
    }

    int p() const noexcept { return p_; }
    int q() const noexcept { return q_; }
    int corners() const noexcept { return corners_; }
    bool is_diameter() const noexcept { return q_ - p_ == corners_ / 2; }

    /// Rotation by `steps` corners.
    Diagonal shifted(int steps) const { return Diagonal(corners_, p_ + steps, q_ + steps); }

    friend bool operator==(const Diagonal&, const Diagonal&) = default;
    friend auto operator<=>(const Diagonal& x, const Diagonal& y)
    {
        return std::tie(x.corners_, x.p_, x.q_) <=> std::tie(y.corners_, y.p_, y.q_);
    }

private:
    int reduce(int c) const noexcept { return ((c - 1) % corners_ + corners_) % corners_ + 1; }

    int corners_;
    int p_ = 0;
    int q_ = 0;
};

inline std::string to_string(const Diagonal& d)
{
    return "[" + std::to_string(d.p()) + "," + std::to_string(d.q()) + "]";
}

/// True iff the endpoints strictly interleave; shared corners never cross.
inline bool diagonals_cross(const Diagonal& d, const Diagonal& e)
{
    if (d.corners() != e.corners())
        throw InputError("diagonals of different polygons");
    auto strictly_inside = [&](int c) { return d.p() < c && c < d.q(); };
    if (d.p() == e.p() || d.p() == e.q() || d.q() == e.p() || d.q() == e.q())
        return false;
    return strictly_inside(e.p()) != strictly_inside(e.q());
}

/// {d, d + n}; a diameter is the degenerate pair d = d + n.
class CsPair {
public:
    explicit CsPair(const Diagonal& d) : first_(d), second_(d.shifted(d.corners() / 2))
    {
        if (second_ < first_)
            std::swap(first_, second_);
    }

    const Diagonal& first() const noexcept { return first_; }
    const Diagonal& second() const noexcept { return second_; }
    bool degenerate() const noexcept { return first_ == second_; }
    int n() const noexcept { return first_.corners() / 2; }

    friend bool operator==(const CsPair&, const CsPair&) = default;
    friend auto operator<=>(const CsPair& x, const CsPair& y)
    {
        if (auto c = x.first_ <=> y.first_; c != 0)
            return c;
        return x.second_ <=> y.second_;
    }

private:
    Diagonal first_;
    Diagonal second_;
};

inline std::string to_string(const CsPair& p)
{
    if (p.degenerate())
        return to_string(p.first());
    return "(" + to_string(p.first()) + "," + to_string(p.second()) + ")";
}

/// Sum of crossings over both representatives of each pair; a diameter
/// counts as its own second representative, so two diameters give 4.
inline int crossing_points(const CsPair& x, const CsPair& y)
{
    int total = 0;
    for (const auto* d : {&x.first(), &x.second()})
        for (const auto* e : {&y.first(), &y.second()})
            total += diagonals_cross(*d, *e) ? 1 : 0;
    return total;
}

/// (a, b) -> ([a, a+b+1], [a+n, a+b+1+n]).
inline CsPair delta(const TubeObject& x)
{
    if (!is_rigid_indec(x))
        throw InputError("delta is defined on rigid objects only, got (" + to_string(x) + ")");
    return CsPair(Diagonal(2 * x.n(), x.a(), x.a() + x.b() + 1));
}

inline TubeObject delta_inv(const CsPair& pair)
{
    const Diagonal& d = pair.first();
    const int m = d.corners();
    const int n = m / 2;
    // read the diagonal from the endpoint whose clockwise span is at most n
    const int span = d.q() - d.p();
    const int start = span <= n ? d.p() : d.q();
    const int length = span <= n ? span : m - span;
    return TubeObject(TubeRank(n), start, length - 1);
}

inline std::vector<CsPair> enumerate_cs_pairs(int n)
{
    const int m = 2 * TubeRank(n).value();
    std::vector<CsPair> out;
    for (int p = 1; p <= m; ++p)
        for (int q = p + 2; q <= m; ++q)
            if (!(p == 1 && q == m))
                out.emplace_back(Diagonal(m, p, q));
    std::sort(out.begin(), out.end());
    out.erase(std::unique(out.begin(), out.end()), out.end());
    return out;
}

/// n-1 pairwise non-crossing centrally symmetric pairs, exactly one diameter.
class CsTriangulation {
public:
    CsTriangulation(int n, std::vector<CsPair> pairs) : n_(TubeRank(n).value()), pairs_(std::move(pairs))
    {
        std::sort(pairs_.begin(), pairs_.end());
        validate();
    }

    int n() const noexcept { return n_; }
    const std::vector<CsPair>& pairs() const noexcept { return pairs_; }
    bool contains(const CsPair& p) const { return std::binary_search(pairs_.begin(), pairs_.end(), p); }

    std::size_t distinct_diagonals() const
    {
        std::vector<Diagonal> ds;
        for (const auto& p : pairs_) {
            ds.push_back(p.first());
            ds.push_back(p.second());
        }
        std::sort(ds.begin(), ds.end());
        return static_cast<std::size_t>(std::unique(ds.begin(), ds.end()) - ds.begin());
    }

    friend bool operator==(const CsTriangulation&, const CsTriangulation&) = default;
    friend auto operator<=>(const CsTriangulation& x, const CsTriangulation& y) { return x.pairs_ <=> y.pairs_; }

private:
    void validate() const
    {
        if (pairs_.size() != static_cast<std::size_t>(n_ - 1))
            throw StructuralError("a centrally symmetric triangulation of the " + std::to_string(2 * n_) +
                                  "-gon has " + std::to_string(n_ - 1) + " pairs, got " +
                                  std::to_string(pairs_.size()));
        if (std::adjacent_find(pairs_.begin(), pairs_.end()) != pairs_.end())
            throw StructuralError("repeated pair in triangulation");
        int diameters = 0;
        for (std::size_t i = 0; i < pairs_.size(); ++i) {
            if (pairs_[i].n() != n_)
                throw InputError("pair from a different polygon");
            diameters += pairs_[i].degenerate() ? 1 : 0;
            for (std::size_t j = i + 1; j < pairs_.size(); ++j)
                if (crossing_points(pairs_[i], pairs_[j]) != 0)
                    throw StructuralError(to_string(pairs_[i]) + " crosses " + to_string(pairs_[j]));
        }
        if (diameters != 1)
            throw StructuralError("triangulation has " + std::to_string(diameters) + " diameters, expected 1");
    }

    int n_;
    std::vector<CsPair> pairs_;
};

inline std::string to_string(const CsTriangulation& t)
{
    std::string s;
    for (const auto& p : t.pairs())
        s += (s.empty() ? "" : " ") + to_string(p);
    return s;
}

inline CsTriangulation triangulation_of(const MaximalRigid& t)
{
    std::vector<CsPair> pairs;
    for (const auto& s : t.summands())
        pairs.push_back(delta(s));
    try {
        return CsTriangulation(t.n(), std::move(pairs));
    } catch (const StructuralError& e) {
        throw VerificationFailure("image of {" + to_string(t) + "} is not a triangulation: " + e.what());
    }
}

/// Replace `p` by the unique other pair that keeps a triangulation.
inline CsTriangulation flip(const CsTriangulation& tri, const CsPair& p)
{
    if (!tri.contains(p))
        throw InputError(to_string(p) + " is not in the triangulation");
    std::vector<CsPair> rest;
    for (const auto& q : tri.pairs())
        if (q != p)
            rest.push_back(q);
    std::vector<CsTriangulation> found;
    for (const auto& cand : enumerate_cs_pairs(tri.n())) {
        if (cand == p || tri.contains(cand))
            continue;
        auto attempt = rest;
        attempt.push_back(cand);
        try {
            found.emplace_back(tri.n(), std::move(attempt));
        } catch (const StructuralError&) {
        }
    }
    if (found.size() != 1)
        throw VerificationFailure("flipping " + to_string(p) + " has " + std::to_string(found.size()) +
                                  " replacements, expected 1");
    return found.front();
}

/// Every maximal family of pairwise non-crossing pairs, found by clique search
/// on the pairs alone (no reference to the tube).
inline std::vector<CsTriangulation> enumerate_cs_triangulations(int n)
{
    const auto pairs = enumerate_cs_pairs(n);
    const auto cliques =
        maximal_cliques(pairs.size(), [&](std::size_t i, std::size_t j) { return crossing_points(pairs[i], pairs[j]) == 0; });
    std::vector<CsTriangulation> out;
    for (const auto& c : cliques) {
        std::vector<CsPair> chosen;
        for (auto i : c)
            chosen.push_back(pairs[i]);
        try {
            out.emplace_back(n, std::move(chosen));
        } catch (const StructuralError& e) {
            throw VerificationFailure(std::string("maximal non-crossing family is not a triangulation: ") + e.what());
        }
    }
    std::sort(out.begin(), out.end());
    return out;
}

struct FlipEdge {
    std::size_t from = 0;
    std::size_t fromPair = 0;
    std::size_t to = 0;
    std::size_t toPair = 0;
};

/// Triangulations in canonical order with flips as edges.
class FlipGraph {
public:
    static constexpr std::size_t npos = static_cast<std::size_t>(-1);

    explicit FlipGraph(int n) : n_(n), nodes_(enumerate_cs_triangulations(n))
    {
        for (std::size_t i = 0; i < nodes_.size(); ++i)
            index_.emplace(nodes_[i], i);
        neighbours_.assign(nodes_.size(), std::vector<std::size_t>(n - 1, npos));
        for (std::size_t i = 0; i < nodes_.size(); ++i) {
            const auto& tri = nodes_[i];
            for (std::size_t k = 0; k < tri.pairs().size(); ++k) {
                const CsTriangulation next = flip(tri, tri.pairs()[k]);
                const std::size_t j = index_of(next);
                neighbours_[i][k] = j;
                if (i < j) {
                    const auto& np = next.pairs();
                    std::size_t slot = 0;
                    while (slot < np.size() && tri.contains(np[slot]))
                        ++slot;
                    edges_.push_back({i, k, j, slot});
                }
            }
        }
    }

    int n() const noexcept { return n_; }
    std::size_t node_count() const noexcept { return nodes_.size(); }
    const std::vector<CsTriangulation>& nodes() const noexcept { return nodes_; }
    const std::vector<FlipEdge>& edges() const noexcept { return edges_; }
    std::size_t neighbour(std::size_t node, std::size_t pair) const { return neighbours_.at(node).at(pair); }

    std::optional<std::size_t> find(const CsTriangulation& t) const
    {
        auto it = index_.find(t);
        if (it == index_.end())
            return std::nullopt;
        return it->second;
    }

    std::size_t index_of(const CsTriangulation& t) const
    {
        if (auto i = find(t))
            return *i;
        throw VerificationFailure("triangulation " + to_string(t) + " is not a node of the flip graph");
    }

    bool is_regular() const
    {
        for (std::size_t i = 0; i < neighbours_.size(); ++i)
            for (auto v : neighbours_[i])
                if (v == npos || v == i)
                    return false;
        return true;
    }

    bool is_connected() const
    {
        if (nodes_.empty())
            return true;
        std::vector<char> seen(nodes_.size(), 0);
        std::deque<std::size_t> queue{0};
        seen[0] = 1;
        std::size_t count = 1;
        while (!queue.empty()) {
            auto u = queue.front();
            queue.pop_front();
            for (auto v : neighbours_[u])
                if (!seen[v]) {
                    seen[v] = 1;
                    ++count;
                    queue.push_back(v);
                }
        }
        return count == nodes_.size();
    }

private:
    int n_;
    std::vector<CsTriangulation> nodes_;
    std::map<CsTriangulation, std::size_t> index_;
    std::vector<std::vector<std::size_t>> neighbours_;
    std::vector<FlipEdge> edges_;
};

inline FlipGraph flip_graph(int n)
{
    return FlipGraph(n);
}

/// T -> triangulation_of(T) is a bijection on nodes and carries every
/// exchange (T, k, T') to the flip of T's triangulation at delta(T_k).
inline bool graphs_isomorphic_via_delta(const ExchangeGraph& eg, const FlipGraph& fg, std::string* why = nullptr)
{
    auto fail = [&](std::string msg) {
        if (why)
            *why = std::move(msg);
        return false;
    };
    if (eg.rank().value() != fg.n())
        return fail("graphs of different rank");
    if (eg.node_count() != fg.node_count())
        return fail("node counts differ: " + std::to_string(eg.node_count()) + " vs " +
                    std::to_string(fg.node_count()));
    if (eg.edges().size() != fg.edges().size())
        return fail("edge counts differ: " + std::to_string(eg.edges().size()) + " vs " +
                    std::to_string(fg.edges().size()));

    std::vector<std::size_t> image(eg.node_count());
    std::vector<char> hit(fg.node_count(), 0);
    for (std::size_t i = 0; i < eg.node_count(); ++i) {
        const auto tri = triangulation_of(eg.seed(i).object);
        const auto j = fg.find(tri);
        if (!j)
            return fail("{" + to_string(eg.seed(i).object) + "} maps outside the flip graph");
        if (hit[*j])
            return fail("two maximal rigid objects map to " + to_string(tri));
        hit[*j] = 1;
        image[i] = *j;
    }
    for (const auto& e : eg.edges()) {
        const auto& from = eg.seed(e.from).object;
        const CsTriangulation& tri = fg.nodes()[image[e.from]];
        const CsPair flipped = delta(from[e.slot]);
        const auto pos = std::lower_bound(tri.pairs().begin(), tri.pairs().end(), flipped) - tri.pairs().begin();
        if (fg.neighbour(image[e.from], static_cast<std::size_t>(pos)) != image[e.to])
            return fail("exchanging " + to_string(from[e.slot]) + " in {" + to_string(from) +
                        "} does not match the flip at " + to_string(flipped));
    }
    return true;
}

} // namespace tubecluster
