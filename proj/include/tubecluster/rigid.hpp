#pragma once

// Rigid and maximal rigid objects of the cluster tube.

#include <algorithm>
#include <span>
#include <string>
#include <utility>
#include <vector>

#include "cliques.hpp"
#include "error.hpp"
#include "tube.hpp"

namespace tubecluster {

inline std::string to_string(std::span<const TubeObject> objs)
{
    std::string s;
    for (std::size_t i = 0; i < objs.size(); ++i) {
        if (i)
            s += ';';
        s += to_string(objs[i]);
    }
    return s;
}

inline bool compatible(const TubeObject& x, const TubeObject& y)
{
    return ext_dim_cluster(x, y) == 0;
}

/// Ext^1 vanishes on every ordered pair, self-pairs included.
inline bool is_rigid_set(std::span<const TubeObject> objs)
{
    for (std::size_t i = 0; i < objs.size(); ++i)
        for (std::size_t j = i; j < objs.size(); ++j)
            if (!compatible(objs[i], objs[j]))
                return false;
    return true;
}

/// All (a, b) with b <= n-1, in lexicographic order.
inline std::vector<TubeObject> enumerate_rigid_indecs(int n)
{
    const TubeRank rank(n);
    std::vector<TubeObject> out;
    out.reserve(static_cast<std::size_t>(n) * (n - 1));
    for (int a = 1; a <= n; ++a)
        for (int b = 1; b <= n - 1; ++b)
            out.emplace_back(rank, a, b);
    return out;
}

/// The unique summand of quasi-length n-1.
inline TubeObject top_summand(std::span<const TubeObject> summands)
{
    const TubeObject* top = nullptr;
    for (const auto& s : summands) {
        if (s.b() != s.n() - 1)
            continue;
        if (top)
            throw StructuralError("more than one summand of quasi-length n-1 in {" + to_string(summands) + "}");
        top = &s;
    }
    if (!top)
        throw StructuralError("no summand of quasi-length n-1 in {" + to_string(summands) + "}");
    return *top;
}

namespace detail {

inline std::vector<TubeObject> canonical(std::vector<TubeObject> objs)
{
    std::sort(objs.begin(), objs.end());
    return objs;
}

inline bool is_maximal(const TubeRank rank, std::span<const TubeObject> objs)
{
    for (const auto& cand : enumerate_rigid_indecs(rank.value())) {
        if (std::find(objs.begin(), objs.end(), cand) != objs.end())
            continue;
        if (std::all_of(objs.begin(), objs.end(), [&](const TubeObject& s) { return compatible(s, cand); }))
            return false;
    }
    return true;
}

} // namespace detail

/// Maximal rigid object: n-1 distinct pairwise compatible summands, kept in
/// lexicographic (a, b) order, which is its canonical identity.
class MaximalRigid {
public:
    /// Validates everything; throws StructuralError on failure.
    MaximalRigid(TubeRank rank, std::vector<TubeObject> summands)
        : rank_(rank), summands_(detail::canonical(std::move(summands)))
    {
        validate();
    }

    TubeRank rank() const noexcept { return rank_; }
    int n() const noexcept { return rank_.value(); }
    const std::vector<TubeObject>& summands() const noexcept { return summands_; }
    std::size_t size() const noexcept { return summands_.size(); }
    const TubeObject& operator[](std::size_t i) const { return summands_.at(i); }

    std::size_t index_of(const TubeObject& x) const
    {
        auto it = std::lower_bound(summands_.begin(), summands_.end(), x);
        if (it == summands_.end() || *it != x)
            throw InputError(to_string(x) + " is not a summand of {" + to_string(summands_) + "}");
        return static_cast<std::size_t>(it - summands_.begin());
    }

    bool contains(const TubeObject& x) const { return std::binary_search(summands_.begin(), summands_.end(), x); }

    friend bool operator==(const MaximalRigid&, const MaximalRigid&) = default;
    friend auto operator<=>(const MaximalRigid& x, const MaximalRigid& y)
    {
        return x.summands_ <=> y.summands_;
    }

private:
    void validate() const
    {
        const int n = rank_.value();
        const std::string shown = "{" + to_string(summands_) + "}";
        for (const auto& s : summands_)
            if (s.rank() != rank_)
                throw InputError("summand of wrong rank in " + shown);
        if (std::adjacent_find(summands_.begin(), summands_.end()) != summands_.end())
            throw StructuralError("repeated summand in " + shown);
        if (summands_.size() != static_cast<std::size_t>(n - 1))
            throw StructuralError(shown + " has " + std::to_string(summands_.size()) + " summands, expected " +
                                  std::to_string(n - 1));
        if (!is_rigid_set(summands_))
            throw StructuralError(shown + " is not rigid");
        const TubeObject top = top_summand(summands_);
        for (const auto& s : summands_)
            if (!wing_contains(top, s))
                throw StructuralError(to_string(s) + " lies outside the wing of the top summand in " + shown);
        if (!detail::is_maximal(rank_, summands_))
            throw StructuralError(shown + " is rigid but not maximal");
    }

    TubeRank rank_;
    std::vector<TubeObject> summands_;
};

inline std::string to_string(const MaximalRigid& t)
{
    return to_string(std::span<const TubeObject>(t.summands()));
}

inline TubeObject top_summand(const MaximalRigid& t)
{
    return top_summand(std::span<const TubeObject>(t.summands()));
}

/// n-2 pairwise compatible rigid summands; one summand short of maximal.
class AlmostComplete {
public:
    AlmostComplete(TubeRank rank, std::vector<TubeObject> summands)
        : rank_(rank), summands_(detail::canonical(std::move(summands)))
    {
        if (summands_.size() != static_cast<std::size_t>(rank.value() - 2))
            throw InputError("an almost complete object at rank " + std::to_string(rank.value()) + " needs " +
                             std::to_string(rank.value() - 2) + " summands");
        for (const auto& s : summands_)
            if (s.rank() != rank_)
                throw InputError("summand of wrong rank");
        if (std::adjacent_find(summands_.begin(), summands_.end()) != summands_.end())
            throw InputError("repeated summand in {" + to_string(summands_) + "}");
        if (!is_rigid_set(summands_))
            throw InputError("{" + to_string(summands_) + "} is not rigid");
    }

    TubeRank rank() const noexcept { return rank_; }
    const std::vector<TubeObject>& summands() const noexcept { return summands_; }

private:
    TubeRank rank_;
    std::vector<TubeObject> summands_;
};

/// The two indecomposables completing `tbar` to a maximal rigid object,
/// in lexicographic order. Any other count is a VerificationFailure.
inline std::pair<TubeObject, TubeObject> complements(const AlmostComplete& tbar)
{
    const auto& base = tbar.summands();
    std::vector<TubeObject> found;
    for (const auto& cand : enumerate_rigid_indecs(tbar.rank().value())) {
        if (std::binary_search(base.begin(), base.end(), cand))
            continue;
        if (!std::all_of(base.begin(), base.end(), [&](const TubeObject& s) { return compatible(s, cand); }))
            continue;
        std::vector<TubeObject> completed = base;
        completed.push_back(cand);
        if (detail::is_maximal(tbar.rank(), completed))
            found.push_back(cand);
    }
    if (found.size() != 2)
        throw VerificationFailure("{" + to_string(base) + "} has " + std::to_string(found.size()) +
                                  " complements, expected exactly 2");
    return {found[0], found[1]};
}

/// Every maximal clique of the compatibility graph on rigid indecomposables,
/// sorted canonically.
inline std::vector<MaximalRigid> enumerate_maximal_rigid(int n)
{
    const TubeRank rank(n);
    const auto verts = enumerate_rigid_indecs(n);
    const auto cliques =
        maximal_cliques(verts.size(), [&](std::size_t i, std::size_t j) { return compatible(verts[i], verts[j]); });
    std::vector<MaximalRigid> out;
    out.reserve(cliques.size());
    for (const auto& clique : cliques) {
        std::vector<TubeObject> objs;
        for (auto i : clique)
            objs.push_back(verts[i]);
        try {
            out.emplace_back(rank, std::move(objs));
        } catch (const StructuralError& e) {
            throw VerificationFailure(std::string("maximal compatible set is malformed: ") + e.what());
        }
    }
    std::sort(out.begin(), out.end());
    return out;
}

/// Non-top summand of a maximal rigid object, relative to its top (s, n-1):
/// `offset` = lifted socle minus s, `length` = quasi-length.
struct WingPosition {
    int offset = 0;
    int length = 0;

    friend bool operator==(const WingPosition&, const WingPosition&) = default;
    friend auto operator<=>(const WingPosition&, const WingPosition&) = default;
};

/// A top coordinate together with the position set of the remaining summands
/// inside the wing (a tilting module over the linearly oriented A_{n-1}).
struct TiltingDatum {
    int topCoordinate = 1;
    std::vector<WingPosition> wingPositions;

    friend bool operator==(const TiltingDatum&, const TiltingDatum&) = default;
};

inline TiltingDatum to_tilting_datum(const MaximalRigid& t)
{
    const TubeObject top = top_summand(t);
    TiltingDatum d{top.a(), {}};
    for (const auto& s : t.summands())
        if (s != top)
            d.wingPositions.push_back({lift_into_window(top.a(), s) - top.a(), s.b()});
    std::sort(d.wingPositions.begin(), d.wingPositions.end());
    return d;
}

inline MaximalRigid from_tilting_datum(TubeRank rank, const TiltingDatum& d)
{
    const int n = rank.value();
    if (d.topCoordinate < 1 || d.topCoordinate > n)
        throw InputError("top coordinate out of range");
    std::vector<TubeObject> objs{TubeObject(rank, d.topCoordinate, n - 1)};
    for (const auto& p : d.wingPositions) {
        if (p.offset < 0 || p.length < 1 || p.offset + p.length > n - 1)
            throw InputError("wing position (" + std::to_string(p.offset) + "," + std::to_string(p.length) +
                             ") is outside the wing");
        objs.emplace_back(rank, d.topCoordinate + p.offset, p.length);
    }
    try {
        return MaximalRigid(rank, std::move(objs));
    } catch (const StructuralError& e) {
        throw InputError(std::string("tilting datum does not extend to a maximal rigid object: ") + e.what());
    }
}

/// Y_k = tau^{-1}(s-1, kn-1) = (s, kn-1) for the top (s, n-1) of t: Ext^1
/// against t vanishes, yet Y_k is not in add t and is not rigid.
inline TubeObject cluster_tilting_witness(const MaximalRigid& t, int k)
{
    if (k < 2)
        throw InputError("witness index k must be at least 2");
    const TubeObject top = top_summand(t);
    return tau_inv(TubeObject(t.rank(), top.a() - 1, k * t.n() - 1));
}

} // namespace tubecluster
