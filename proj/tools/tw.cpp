#include <CLI11.hpp>

#include <cstdlib>
#include <fstream>
#include <iostream>
#include <optional>
#include <sstream>
#include <string>

#include "tw/debug.hpp"
#include "tw/drivers.hpp"
#include "tw/io.hpp"
#include "tw/oracle.hpp"

namespace {

constexpr int kExitNo = 10;
constexpr int kExitBudget = 20;
constexpr int kExitInvalid = 1;
constexpr int kExitInput = 2;

std::string slurp(const std::string& path) {
    std::ifstream in(path, std::ios::binary);
    if (!in) throw tw::Error("cannot open " + path);
    std::ostringstream s;
    s << in.rdbuf();
    return s.str();
}

tw::Graph read_graph(const std::string& path) {
    std::vector<std::string> warnings;
    tw::Graph g = tw::parse_gr(slurp(path), &warnings);
    for (const auto& w : warnings) std::cerr << path << ": " << w << '\n';
    return g;
}

// Writes to `path`, or to stdout when it is empty.
void deliver(const std::string& text, const std::string& path) {
    if (path.empty()) {
        std::cout << text;
        return;
    }
    std::ofstream out(path, std::ios::binary);
    if (!out) throw tw::Error("cannot write " + path);
    out << text;
}

tw::Ratio parse_ratio(const std::string& s) {
    auto slash = s.find('/');
    try {
        std::size_t used = 0;
        tw::Ratio r;
        r.p = std::stol(s.substr(0, slash), &used);
        if (used != (slash == std::string::npos ? s.size() : slash)) throw tw::Error("");
        if (slash != std::string::npos) {
            std::string q = s.substr(slash + 1);
            r.q = std::stol(q, &used);
            if (used != q.size()) throw tw::Error("");
        }
        return r;
    } catch (const std::exception&) {
        throw tw::Error("eps must be a rational p/q, got '" + s + "'");
    }
}

std::uint64_t default_seed() {
    const char* env = std::getenv("TW_SEED");
    return env ? std::strtoull(env, nullptr, 10) : 1;
}

void report_debug() {
    if (!tw::debug::enabled()) return;
    std::cerr << "c debug checks " << tw::debug::checks_run() << ", violations " << tw::debug::violation_count()
              << '\n';
}

}  // namespace

int main(int argc, char** argv) {
    CLI::App app{"Treewidth by subset treewidth and important separators"};
    app.require_subcommand(1);

    int k = 0;
    std::string backend = "stw";
    std::uint64_t budget_nodes = 0;
    std::string in_gr, in_td, out_path, eps_text;

    auto* exact_cmd = app.add_subcommand("exact", "Decomposition of width at most k, or TW > k");
    exact_cmd->add_option("-k", k, "Width bound")->required()->check(CLI::NonNegativeNumber);
    exact_cmd->add_option("--backend", backend, "Subset treewidth backend")->check(CLI::IsMember({"stw", "pstw"}));
    exact_cmd->add_option("--budget", budget_nodes, "Search node cap shared by all backend calls (0: none)");
    exact_cmd->add_option("input", in_gr, "Graph in .gr format")->required();
    exact_cmd->add_option("-o", out_path, "Write the .td here instead of stdout");

    auto* approx_cmd = app.add_subcommand("approx", "Decomposition of width at most (1+eps)k, or TW > k");
    approx_cmd->add_option("-k", k, "Width bound")->required()->check(CLI::NonNegativeNumber);
    approx_cmd->add_option("--eps", eps_text, "Slack as a rational p/q in (0, 1]")->required();
    approx_cmd->add_option("input", in_gr, "Graph in .gr format")->required();
    approx_cmd->add_option("-o", out_path, "Write the .td here instead of stdout");

    auto* width_cmd = app.add_subcommand("width", "Treewidth with an optimal decomposition");
    width_cmd->add_option("input", in_gr, "Graph in .gr format")->required();
    width_cmd->add_option("-o", out_path, "Write the .td here instead of stdout");

    auto* validate_cmd = app.add_subcommand("validate", "Check a .td against a .gr");
    validate_cmd->add_option("graph", in_gr, "Graph in .gr format")->required();
    validate_cmd->add_option("td", in_td, "Decomposition in .td format")->required();

    auto* oracle_cmd = app.add_subcommand("oracle", "Brute-force treewidth (n <= 20)");
    oracle_cmd->add_option("input", in_gr, "Graph in .gr format")->required();

    auto* gen_cmd = app.add_subcommand("gen", "Generate a graph: gnp n p | grid r c | ktree n k | cycle n");
    std::string kind;
    std::vector<std::string> params;
    std::uint64_t seed = default_seed();
    double drop = 0;
    gen_cmd->add_option("kind", kind, "Graph family")->required()->check(
        CLI::IsMember({"gnp", "grid", "ktree", "cycle"}));
    gen_cmd->add_option("params", params, "Family parameters");
    gen_cmd->add_option("--seed", seed, "Random seed (default: TW_SEED or 1)");
    gen_cmd->add_option("--drop", drop, "Fraction of edges to remove afterwards");
    gen_cmd->add_option("-o", out_path, "Write the .gr here instead of stdout");

    CLI11_PARSE(app, argc, argv);

    try {
        if (*exact_cmd || *approx_cmd) {
            tw::Graph g = read_graph(in_gr);
            tw::SearchBudget budget;
            budget.limit = budget_nodes;
            tw::DriverOptions opt;
            opt.backend = backend == "pstw" ? tw::Backend::pstw : tw::Backend::stw;
            opt.budget = &budget;
            std::optional<tw::TreeDecomposition> td;
            try {
                if (*exact_cmd) {
                    td = tw::exact(g, k, opt);
                } else {
                    tw::Ratio eps = parse_ratio(eps_text);
                    td = tw::approx(g, k, eps, opt);
                    std::cout << "c width bound " << tw::approx_width(k, eps) << '\n';
                }
            } catch (const tw::BudgetExceeded&) {
                report_debug();
                std::cout << "budget of " << budget.limit << " nodes exhausted\n";
                return kExitBudget;
            }
            report_debug();
            if (!td) {
                std::cout << "TW > " << k << '\n';
                return kExitNo;
            }
            deliver(tw::emit_td(*td, g), out_path);
            return 0;
        }
        if (*width_cmd) {
            tw::Graph g = read_graph(in_gr);
            tw::TreewidthResult r = tw::treewidth(g);
            report_debug();
            std::cout << "c width " << r.width << '\n';
            deliver(tw::emit_td(r.td, g), out_path);
            return 0;
        }
        if (*validate_cmd) {
            tw::Graph g = read_graph(in_gr);
            try {
                tw::TreeDecomposition td = tw::parse_td(slurp(in_td), g);
                std::cout << "valid, width " << td.width() << '\n';
                return 0;
            } catch (const tw::ParseError& e) {
                std::cout << "invalid: " << e.what() << '\n';
                return kExitInvalid;
            }
        }
        if (*oracle_cmd) {
            tw::Graph g = read_graph(in_gr);
            if (g.order() > 20) throw tw::Error("oracle is limited to 20 vertices");
            std::cout << tw::oracle::exact_tw(g).width << '\n';
            return 0;
        }
        if (*gen_cmd) {
            auto need = [&](std::size_t count) {
                if (params.size() != count)
                    throw tw::Error(kind + " takes " + std::to_string(count) + " parameters");
            };
            auto num = [&](std::size_t i) { return std::stoi(params.at(i)); };
            tw::Graph g;
            if (kind == "gnp") {
                need(2);
                g = tw::gnp(num(0), std::stod(params[1]), seed);
            } else if (kind == "grid") {
                need(2);
                g = tw::grid(num(0), num(1));
            } else if (kind == "ktree") {
                need(2);
                g = tw::ktree(num(0), num(1), seed);
            } else {
                need(1);
                g = tw::cycle(num(0));
            }
            if (drop > 0) g = tw::drop_edges(g, drop, seed + 1);
            deliver(tw::emit_gr(g), out_path);
            return 0;
        }
    } catch (const std::exception& e) {
        std::cerr << "tw: " << e.what() << '\n';
        return kExitInput;
    }
    return 0;
}
