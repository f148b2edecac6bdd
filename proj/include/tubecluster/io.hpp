#pragma once

// Text formats: object lists ("a,b;c,d" or JSON [[a,b],...]), JSON and DOT
// exports, and plain-text matrices.

#include <algorithm>
#include <cctype>
#include <ostream>
#include <span>
#include <sstream>
#include <string>
#include <string_view>
#include <vector>

#include <nlohmann/json.hpp>

#include "error.hpp"
#include "mutation.hpp"
#include "polygon.hpp"
#include "rigid.hpp"
#include "tube.hpp"

namespace tubecluster {

namespace detail {

inline std::string strip_spaces(std::string_view text)
{
    std::string out;
    for (char c : text)
        if (!std::isspace(static_cast<unsigned char>(c)))
            out += c;
    return out;
}

inline int parse_int(const std::string& token, std::string_view context)
{
    std::size_t used = 0;
    int v = 0;
    try {
        v = std::stoi(token, &used);
    } catch (const std::exception&) {
        used = std::string::npos;
    }
    if (token.empty() || used != token.size())
        throw InputError("cannot read '" + token + "' as an integer in '" + std::string(context) + "'");
    return v;
}

inline TubeObject checked_object(TubeRank rank, int a, int b)
{
    if (a < 1 || a > rank.value() || b < 1)
        throw InputError("(" + std::to_string(a) + "," + std::to_string(b) + ") is not an object of the rank-" +
                         std::to_string(rank.value()) + " tube");
    return TubeObject(rank, a, b);
}

inline TubeObject object_from_json(TubeRank rank, const nlohmann::json& j)
{
    if (!j.is_array() || j.size() != 2 || !j[0].is_number_integer() || !j[1].is_number_integer())
        throw InputError("expected [a,b], got " + j.dump());
    return checked_object(rank, j[0].get<int>(), j[1].get<int>());
}

} // namespace detail

/// Parses "a,b" (or JSON "[a,b]"); whitespace is ignored.
inline TubeObject parse_object(TubeRank rank, std::string_view text)
{
    const std::string s = detail::strip_spaces(text);
    if (!s.empty() && s.front() == '[') {
        const auto j = nlohmann::json::parse(s, nullptr, false);
        if (j.is_discarded())
            throw InputError("malformed JSON object '" + s + "'");
        return detail::object_from_json(rank, j);
    }
    const auto comma = s.find(',');
    if (comma == std::string::npos || s.find(',', comma + 1) != std::string::npos)
        throw InputError("expected 'a,b', got '" + s + "'");
    return detail::checked_object(rank, detail::parse_int(s.substr(0, comma), s),
                                  detail::parse_int(s.substr(comma + 1), s));
}

/// Parses "a1,b1;a2,b2;..." or a JSON list [[a1,b1],...] such as one entry
/// of the `enumerate` output. Order is preserved.
inline std::vector<TubeObject> parse_object_list(TubeRank rank, std::string_view text)
{
    const std::string s = detail::strip_spaces(text);
    std::vector<TubeObject> out;
    if (!s.empty() && s.front() == '[') {
        const auto j = nlohmann::json::parse(s, nullptr, false);
        if (j.is_discarded() || !j.is_array())
            throw InputError("malformed JSON object list '" + s + "'");
        for (const auto& item : j)
            out.push_back(detail::object_from_json(rank, item));
        return out;
    }
    std::size_t start = 0;
    while (start <= s.size()) {
        const auto end = std::min(s.find(';', start), s.size());
        const std::string token = s.substr(start, end - start);
        if (!token.empty())
            out.push_back(parse_object(rank, token));
        start = end + 1;
    }
    return out;
}

inline nlohmann::json to_json(const TubeObject& x)
{
    return nlohmann::json::array({x.a(), x.b()});
}

inline nlohmann::json to_json(const std::vector<TubeObject>& objs)
{
    auto j = nlohmann::json::array();
    for (const auto& x : objs)
        j.push_back(to_json(x));
    return j;
}

inline nlohmann::json to_json(const IntMatrix& m)
{
    auto j = nlohmann::json::array();
    for (const auto& row : m)
        j.push_back(row);
    return j;
}

inline nlohmann::ordered_json hom_json(const HomDims& d)
{
    nlohmann::ordered_json j;
    j["tube"] = d.tubeDim;
    j["cluster"] = d.clusterDim;
    j["ext"] = d.extDim;
    return j;
}

inline nlohmann::ordered_json enumerate_json(int n, const std::vector<MaximalRigid>& all)
{
    nlohmann::ordered_json j;
    j["rank"] = n;
    j["objects"] = nlohmann::json::array();
    for (const auto& t : all)
        j["objects"].push_back(nlohmann::ordered_json(to_json(t.summands())));
    return j;
}

inline void write_enumerate_table(std::ostream& os, const std::vector<MaximalRigid>& all)
{
    for (std::size_t i = 0; i < all.size(); ++i)
        os << i << '\t' << to_string(top_summand(all[i])) << '\t' << to_string(all[i]) << '\n';
}

inline nlohmann::ordered_json matrix_json(const ExchangeMatrix& b, bool withCartan)
{
    nlohmann::ordered_json j;
    j["order"] = to_json(b.order);
    j["matrix"] = to_json(b.entries);
    if (withCartan)
        j["cartan"] = to_json(cartan_counterpart(b));
    return j;
}

inline void write_matrix_rows(std::ostream& os, const IntMatrix& m)
{
    for (const auto& row : m) {
        for (std::size_t j = 0; j < row.size(); ++j)
            os << (j ? " " : "") << row[j];
        os << '\n';
    }
}

/// "order: a,b;..." followed by one line per row, ASCII integers.
inline void write_matrix_table(std::ostream& os, const ExchangeMatrix& b, bool withCartan)
{
    os << "order: " << to_string(std::span<const TubeObject>(b.order)) << '\n';
    write_matrix_rows(os, b.entries);
    if (withCartan) {
        os << "cartan:\n";
        write_matrix_rows(os, cartan_counterpart(b));
    }
}

/// Nodes carry their canonical matrix; edges are [from, slot, to] triples
/// with `slot` the exchanged summand's index in `from`.
inline nlohmann::ordered_json exchange_graph_json(const ExchangeGraph& g)
{
    nlohmann::ordered_json j;
    j["rank"] = g.rank().value();
    j["nodes"] = nlohmann::json::array();
    for (std::size_t i = 0; i < g.node_count(); ++i) {
        const auto& s = g.seed(i);
        nlohmann::ordered_json node;
        node["id"] = i;
        node["order"] = to_json(s.matrix.order);
        node["matrix"] = to_json(s.matrix.entries);
        j["nodes"].push_back(std::move(node));
    }
    j["edges"] = nlohmann::json::array();
    for (const auto& e : g.edges())
        j["edges"].push_back(nlohmann::ordered_json::array({e.from, e.slot, e.to}));
    return j;
}

inline void write_exchange_graph_dot(std::ostream& os, const ExchangeGraph& g)
{
    os << "graph exchange_rank" << g.rank().value() << " {\n";
    os << "  node [shape=box];\n";
    for (std::size_t i = 0; i < g.node_count(); ++i)
        os << "  n" << i << " [label=\"" << to_string(g.seed(i).object) << "\"];\n";
    for (const auto& e : g.edges())
        os << "  n" << e.from << " -- n" << e.to << " [label=\"" << to_string(g.seed(e.from).object[e.slot])
           << "\"];\n";
    os << "}\n";
}

inline nlohmann::ordered_json polygon_json(const MaximalRigid& t)
{
    nlohmann::ordered_json j;
    j["rank"] = t.n();
    j["corners"] = 2 * t.n();
    j["pairs"] = nlohmann::json::array();
    for (const auto& s : t.summands()) {
        const CsPair p = delta(s);
        nlohmann::ordered_json entry;
        entry["object"] = to_json(s);
        entry["diagonals"] = nlohmann::json::array();
        entry["diagonals"].push_back({p.first().p(), p.first().q()});
        if (!p.degenerate())
            entry["diagonals"].push_back({p.second().p(), p.second().q()});
        entry["diameter"] = p.degenerate();
        j["pairs"].push_back(std::move(entry));
    }
    return j;
}

inline void write_polygon_table(std::ostream& os, const MaximalRigid& t)
{
    const CsTriangulation tri = triangulation_of(t);
    os << "corners: " << 2 * t.n() << '\n';
    for (const auto& s : t.summands())
        os << to_string(s) << " -> " << to_string(delta(s)) << '\n';
    os << "triangulation: " << to_string(tri) << '\n';
}

} // namespace tubecluster
