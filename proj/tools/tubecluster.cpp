// Command-line front end: Hom/Ext dimensions, maximal rigid objects,
// exchange graphs, B-matrices, mutation, the polygon model and verification.
//
// Exit codes: 0 success, 1 a verification check failed, 2 bad usage or input.

#include <fstream>
#include <iostream>
#include <sstream>
#include <string>
#include <utility>

#include "CLI11.hpp"
#include <tubecluster/tubecluster.hpp>

namespace tc = tubecluster;

namespace {

constexpr int kUsageError = 2;
constexpr int kVerificationFailure = 1;

struct Options {
    int rank = 0;
    std::string object;
    std::string from;
    std::string to;
    std::string at;
    std::string format;
    std::string out;
    std::string suite = "all";
    bool cartan = false;
};

void require_rank(int n)
{
    if (n < 2 || n > tc::kMaxRank)
        throw tc::InputError("--rank must be between 2 and " + std::to_string(tc::kMaxRank));
}

tc::MaximalRigid read_maximal_rigid(tc::TubeRank rank, const std::vector<tc::TubeObject>& objs)
{
    try {
        return tc::MaximalRigid(rank, objs);
    } catch (const tc::StructuralError& e) {
        throw tc::InputError(std::string("not a maximal rigid object: ") + e.what());
    }
}

/// Writes to --out when given, stdout otherwise.
void emit(const Options& opt, const std::string& text)
{
    if (opt.out.empty()) {
        std::cout << text;
        return;
    }
    std::ofstream file(opt.out, std::ios::binary);
    if (!file)
        throw tc::InputError("cannot write to '" + opt.out + "'");
    file << text;
    if (!file)
        throw tc::InputError("failed writing '" + opt.out + "'");
}

int cmd_hom(const Options& opt)
{
    const tc::TubeRank rank(opt.rank);
    const auto x = tc::parse_object(rank, opt.from);
    const auto y = tc::parse_object(rank, opt.to);
    emit(opt, tc::hom_json(tc::hom_dims(x, y)).dump() + "\n");
    return 0;
}

int cmd_enumerate(const Options& opt)
{
    require_rank(opt.rank);
    const auto all = tc::enumerate_maximal_rigid(opt.rank);
    if (opt.format == "table") {
        std::ostringstream os;
        tc::write_enumerate_table(os, all);
        emit(opt, os.str());
    } else {
        emit(opt, tc::enumerate_json(opt.rank, all).dump() + "\n");
    }
    return 0;
}

int cmd_exchange_graph(const Options& opt)
{
    require_rank(opt.rank);
    const auto graph = tc::build_exchange_graph(opt.rank);
    if (opt.format == "json") {
        emit(opt, tc::exchange_graph_json(graph).dump(2) + "\n");
    } else {
        std::ostringstream os;
        tc::write_exchange_graph_dot(os, graph);
        emit(opt, os.str());
    }
    return 0;
}

void print_matrix(const Options& opt, const tc::ExchangeMatrix& b, const std::string& prefix = {})
{
    if (opt.format == "json") {
        auto j = tc::matrix_json(b, opt.cartan);
        if (!prefix.empty())
            j["object"] = tc::to_json(b.order);
        emit(opt, j.dump() + "\n");
        return;
    }
    std::ostringstream os;
    os << prefix;
    tc::write_matrix_table(os, b, opt.cartan);
    emit(opt, os.str());
}

/// B-matrix in the summand order the user wrote.
int cmd_bmatrix(const Options& opt)
{
    require_rank(opt.rank);
    const tc::TubeRank rank(opt.rank);
    const auto objs = tc::parse_object_list(rank, opt.object);
    const auto t = read_maximal_rigid(rank, objs);
    const auto graph = tc::build_exchange_graph(opt.rank);
    print_matrix(opt, tc::reindex(tc::b_matrix(graph, t), objs));
    return 0;
}

int cmd_mutate(const Options& opt)
{
    require_rank(opt.rank);
    const tc::TubeRank rank(opt.rank);
    const auto t = read_maximal_rigid(rank, tc::parse_object_list(rank, opt.object));
    const auto at = tc::parse_object(rank, opt.at);
    const std::size_t k = t.index_of(at);
    const auto graph = tc::build_exchange_graph(opt.rank);
    const auto [next, slot] = tc::mutate_seed(graph.seed(graph.index_of(t)), k);
    print_matrix(opt, next.matrix, "object: " + tc::to_string(next.object) + "\n");
    return 0;
}

int cmd_polygon(const Options& opt)
{
    require_rank(opt.rank);
    const tc::TubeRank rank(opt.rank);
    const auto t = read_maximal_rigid(rank, tc::parse_object_list(rank, opt.object));
    if (opt.format == "json") {
        emit(opt, tc::polygon_json(t).dump() + "\n");
    } else {
        std::ostringstream os;
        tc::write_polygon_table(os, t);
        emit(opt, os.str());
    }
    return 0;
}

int cmd_verify(const Options& opt)
{
    const auto report = tc::run_suite(opt.suite, opt.rank);
    std::ostringstream os;
    os << report;
    os << "verify rank " << opt.rank << " suite " << opt.suite << ": " << (report.passed() ? "PASS" : "FAIL") << '\n';
    emit(opt, os.str());
    return report.passed() ? 0 : kVerificationFailure;
}

} // namespace

int main(int argc, char** argv)
{
    CLI::App app{"Combinatorics of the cluster category of a rank-n tube"};
    app.require_subcommand(1);
    Options opt;

    auto rank_opt = [&](CLI::App* cmd) { cmd->add_option("--rank", opt.rank, "Rank n of the tube")->required(); };

    auto* hom = app.add_subcommand("hom", "Hom and Ext^1 dimensions between two indecomposables");
    rank_opt(hom);
    hom->add_option("--from", opt.from, "Source object \"a,b\"")->required();
    hom->add_option("--to", opt.to, "Target object \"a,b\"")->required();

    auto* enumerate = app.add_subcommand("enumerate", "List all maximal rigid objects");
    rank_opt(enumerate);
    enumerate->add_option("--format", opt.format, "json or table")
        ->default_str("json")
        ->check(CLI::IsMember({"json", "table"}));
    enumerate->add_option("--out", opt.out, "Output file");

    auto* graph = app.add_subcommand("exchange-graph", "Export the exchange graph with B-matrices");
    rank_opt(graph);
    graph->add_option("--format", opt.format, "dot or json")->default_str("dot")->check(CLI::IsMember({"dot", "json"}));
    graph->add_option("--out", opt.out, "Output file");

    auto* bmatrix = app.add_subcommand("bmatrix", "Exchange matrix of a maximal rigid object");
    rank_opt(bmatrix);
    bmatrix->add_option("--object", opt.object, "Summands \"a,b;c,d;...\"")->required();
    bmatrix->add_flag("--cartan", opt.cartan, "Also print the Cartan counterpart");
    bmatrix->add_option("--format", opt.format, "table or json")
        ->default_str("table")
        ->check(CLI::IsMember({"table", "json"}));

    auto* mutate = app.add_subcommand("mutate", "Exchange one summand and mutate the matrix");
    rank_opt(mutate);
    mutate->add_option("--object", opt.object, "Summands \"a,b;c,d;...\"")->required();
    mutate->add_option("--at", opt.at, "Summand to exchange \"a,b\"")->required();
    mutate->add_flag("--cartan", opt.cartan, "Also print the Cartan counterpart");
    mutate->add_option("--format", opt.format, "table or json")
        ->default_str("table")
        ->check(CLI::IsMember({"table", "json"}));

    auto* polygon = app.add_subcommand("polygon", "Centrally symmetric triangulation of a maximal rigid object");
    rank_opt(polygon);
    polygon->add_option("--object", opt.object, "Summands \"a,b;c,d;...\"")->required();
    polygon->add_option("--format", opt.format, "table or json")
        ->default_str("table")
        ->check(CLI::IsMember({"table", "json"}));

    auto* verify = app.add_subcommand("verify", "Run invariant suites");
    rank_opt(verify);
    verify->add_option("--suite", opt.suite, "all, hom, counts, mutation, polygon or no-ct")
        ->default_val("all")
        ->check(CLI::IsMember(tc::suite_names()));

    try {
        app.parse(argc, argv);
    } catch (const CLI::CallForHelp& e) {
        return app.exit(e);
    } catch (const CLI::CallForAllHelp& e) {
        return app.exit(e);
    } catch (const CLI::ParseError& e) {
        app.exit(e);
        return kUsageError;
    }

    // defaults are applied here because every subcommand shares opt.format
    const std::pair<CLI::App*, const char*> format_defaults[]{
        {enumerate, "json"}, {graph, "dot"}, {bmatrix, "table"}, {mutate, "table"}, {polygon, "table"}};
    for (const auto& [sub, fallback] : format_defaults)
        if (sub->parsed() && opt.format.empty())
            opt.format = fallback;

    try {
        if (hom->parsed())
            return cmd_hom(opt);
        if (enumerate->parsed())
            return cmd_enumerate(opt);
        if (graph->parsed())
            return cmd_exchange_graph(opt);
        if (bmatrix->parsed())
            return cmd_bmatrix(opt);
        if (mutate->parsed())
            return cmd_mutate(opt);
        if (polygon->parsed())
            return cmd_polygon(opt);
        if (verify->parsed())
            return cmd_verify(opt);
    } catch (const tc::VerificationFailure& e) {
        std::cerr << "verification failure: " << e.what() << '\n';
        return kVerificationFailure;
    } catch (const std::exception& e) {
        std::cerr << "error: " << e.what() << '\n';
        return kUsageError;
    }
    return kUsageError;
}
