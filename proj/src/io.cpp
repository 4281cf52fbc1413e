#include "tw/io.hpp"

#include <algorithm>
#include <cmath>
#include <optional>
#include <random>
#include <sstream>

namespace tw {

namespace {

struct Line {
    int number;
    std::vector<std::string> tokens;
};

// Non-empty, non-comment lines split on whitespace; CR before LF is fine.
std::vector<Line> lines_of(const std::string& text) {
    std::vector<Line> out;
    std::istringstream in(text);
    std::string raw;
    for (int number = 1; std::getline(in, raw); ++number) {
        if (!raw.empty() && raw.back() == '\r') raw.pop_back();
        std::istringstream words(raw);
        Line line{number, {}};
        for (std::string w; words >> w;) line.tokens.push_back(w);
        if (line.tokens.empty() || line.tokens[0] == "c") continue;
        out.push_back(std::move(line));
    }
    return out;
}

[[noreturn]] void fail(const Line& line, const std::string& what) {
    throw ParseError("line " + std::to_string(line.number) + ": " + what);
}

long to_int(const Line& line, const std::string& tok) {
    std::size_t used = 0;
    long v = 0;
    try {
        v = std::stol(tok, &used);
    } catch (const std::exception&) {
        fail(line, "expected an integer, got '" + tok + "'");
    }
    if (used != tok.size()) fail(line, "expected an integer, got '" + tok + "'");
    return v;
}

// 1-based rank of every vertex of g, indexed by id.
std::vector<int> ranks(const Graph& g) {
    std::vector<int> r(g.id_bound(), 0);
    int next = 1;
    for (int v : g.vertices()) r[v] = next++;
    return r;
}

}  // namespace

Graph parse_gr(const std::string& text, std::vector<std::string>* warnings) {
    Graph g;
    long n = -1, m = -1, seen = 0;
    for (const Line& line : lines_of(text)) {
        const auto& t = line.tokens;
        if (t[0] == "p") {
            if (n >= 0) fail(line, "second header");
            if (t.size() != 4 || t[1] != "tw") fail(line, "malformed header, expected 'p tw <n> <m>'");
            n = to_int(line, t[2]);
            m = to_int(line, t[3]);
            if (n < 0 || m < 0) fail(line, "negative count in header");
            for (int v = 1; v <= n; ++v) g.add_vertex(v);
            continue;
        }
        if (n < 0) fail(line, "edge before header");
        if (t.size() != 2) fail(line, "edge line needs two ids");
        long u = to_int(line, t[0]), v = to_int(line, t[1]);
        if (u < 1 || u > n || v < 1 || v > n) fail(line, "id out of range [1," + std::to_string(n) + "]");
        if (u == v) fail(line, "self-loop");
        ++seen;
        if (g.adjacent(static_cast<int>(u), static_cast<int>(v))) {
            if (warnings) warnings->push_back("line " + std::to_string(line.number) + ": duplicate edge dropped");
            continue;
        }
        g.add_edge(static_cast<int>(u), static_cast<int>(v));
    }
    if (n < 0) throw ParseError("missing 'p tw' header");
    if (seen != m)
        throw ParseError("header announces " + std::to_string(m) + " edges, found " + std::to_string(seen));
    return g;
}

std::string emit_gr(const Graph& g) {
    std::vector<int> r = ranks(g);
    std::vector<std::pair<int, int>> edges;
    for (auto [u, v] : g.edges()) edges.emplace_back(std::min(r[u], r[v]), std::max(r[u], r[v]));
    std::sort(edges.begin(), edges.end());
    std::ostringstream out;
    out << "p tw " << g.order() << ' ' << edges.size() << '\n';
    for (auto [u, v] : edges) out << u << ' ' << v << '\n';
    return out.str();
}

TreeDecomposition parse_td(const std::string& text, const Graph& g) {
    long bags = -1, width1 = -1;
    std::vector<std::optional<VSet>> read;
    TreeDecomposition td;
    const VSet& vs = g.vertices();
    for (const Line& line : lines_of(text)) {
        const auto& t = line.tokens;
        if (t[0] == "s") {
            if (bags >= 0) fail(line, "second header");
            if (t.size() != 5 || t[1] != "td") fail(line, "malformed header, expected 's td <bags> <width+1> <n>'");
            bags = to_int(line, t[2]);
            width1 = to_int(line, t[3]);
            long n = to_int(line, t[4]);
            if (bags < 0 || width1 < 0) fail(line, "negative count in header");
            if (n != g.order()) fail(line, "header has n = " + std::to_string(n) + ", graph has " +
                                               std::to_string(g.order()));
            read.assign(static_cast<std::size_t>(bags), std::nullopt);
            continue;
        }
        if (bags < 0) fail(line, "content before header");
        if (t[0] == "b") {
            if (t.size() < 2) fail(line, "bag line needs an index");
            long i = to_int(line, t[1]);
            if (i < 1 || i > bags) fail(line, "bag index out of range");
            if (read[i - 1]) fail(line, "bag " + std::to_string(i) + " given twice");
            VSet bag;
            for (std::size_t j = 2; j < t.size(); ++j) {
                long v = to_int(line, t[j]);
                if (v < 1 || v > g.order()) fail(line, "vertex out of range");
                bag.push_back(vs[v - 1]);
            }
            read[i - 1] = make_set(std::move(bag));
            continue;
        }
        if (t.size() != 2) fail(line, "tree edge line needs two bag indices");
        long a = to_int(line, t[0]), b = to_int(line, t[1]);
        if (a < 1 || a > bags || b < 1 || b > bags) fail(line, "tree edge names a missing bag");
        td.add_edge(static_cast<int>(a - 1), static_cast<int>(b - 1));
    }
    if (bags < 0) throw ParseError("missing 's td' header");
    for (long i = 0; i < bags; ++i) {
        if (!read[i]) throw ParseError("bag " + std::to_string(i + 1) + " missing");
        td.bags.push_back(*read[i]);
    }
    if (!is_tree(td)) throw ParseError("tree edges do not form a tree");
    if (td.width() + 1 != width1)
        throw ParseError("header says width+1 = " + std::to_string(width1) + ", largest bag has " +
                         std::to_string(td.width() + 1));
    ValidationReport rep = validate(g, td);
    if (!rep.ok()) throw ParseError(std::string("invalid decomposition (") + failure_name(rep.failure) + "): " + rep.detail);
    return td;
}

std::string emit_td(const TreeDecomposition& td, const Graph& g, const std::vector<std::string>& comments) {
    std::vector<int> r = ranks(g);
    std::ostringstream out;
    for (const std::string& c : comments) out << "c " << c << '\n';
    out << "s td " << td.size() << ' ' << td.width() + 1 << ' ' << g.order() << '\n';
    for (int i = 0; i < td.size(); ++i) {
        out << "b " << i + 1;
        for (int v : td.bags[i]) out << ' ' << r.at(v);
        out << '\n';
    }
    for (auto [a, b] : td.edges) out << a + 1 << ' ' << b + 1 << '\n';
    return out.str();
}

Graph gnp(int n, double p, std::uint64_t seed) {
    if (n < 0) throw Error("gnp: n must be non-negative");
    if (!(p >= 0 && p <= 1)) throw Error("gnp: p must lie in [0, 1]");
    std::mt19937_64 rng(seed);
    std::bernoulli_distribution coin(p);
    Graph g;
    for (int v = 1; v <= n; ++v) g.add_vertex(v);
    for (int u = 1; u <= n; ++u)
        for (int v = u + 1; v <= n; ++v)
            if (coin(rng)) g.add_edge(u, v);
    return g;
}

Graph grid(int rows, int cols) {
    if (rows < 1 || cols < 1) throw Error("grid: sides must be positive");
    Graph g;
    auto id = [&](int i, int j) { return i * cols + j + 1; };
    for (int i = 0; i < rows; ++i)
        for (int j = 0; j < cols; ++j) {
            g.add_vertex(id(i, j));
            if (i + 1 < rows) g.add_edge(id(i, j), id(i + 1, j));
            if (j + 1 < cols) g.add_edge(id(i, j), id(i, j + 1));
        }
    return g;
}

Graph ktree(int n, int k, std::uint64_t seed) {
    if (n < 1 || k < 0) throw Error("ktree: need n >= 1 and k >= 0");
    std::mt19937_64 rng(seed);
    Graph g;
    int base = std::min(n, k + 1);
    VSet first;
    for (int v = 1; v <= base; ++v) {
        g.add_vertex(v);
        for (int u : first) g.add_edge(u, v);
        first.push_back(v);
    }
    std::vector<VSet> cliques{first};
    for (int v = base + 1; v <= n; ++v) {
        VSet c = cliques[std::uniform_int_distribution<std::size_t>(0, cliques.size() - 1)(rng)];
        c.erase(c.begin() + std::uniform_int_distribution<std::size_t>(0, c.size() - 1)(rng));
        g.add_vertex(v);
        for (int u : c) g.add_edge(u, v);
        cliques.push_back(with(c, v));
    }
    return g;
}

Graph cycle(int n) {
    if (n < 3) throw Error("cycle: n must be at least 3");
    Graph g;
    for (int v = 1; v <= n; ++v) g.add_edge(v, v % n + 1);
    return g;
}

Graph drop_edges(const Graph& g, double fraction, std::uint64_t seed) {
    if (!(fraction >= 0 && fraction <= 1)) throw Error("drop_edges: fraction must lie in [0, 1]");
    auto edges = g.edges();
    std::mt19937_64 rng(seed);
    std::shuffle(edges.begin(), edges.end(), rng);
    auto drop = static_cast<std::size_t>(std::llround(fraction * static_cast<double>(edges.size())));
    Graph h;
    for (int v : g.vertices()) h.add_vertex(v);
    for (std::size_t i = drop; i < edges.size(); ++i) h.add_edge(edges[i].first, edges[i].second);
    return h;
}

}  // namespace tw
