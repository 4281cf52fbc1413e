#pragma once

#include <cstdint>
#include <string>
#include <vector>

#include "tw/graph.hpp"
#include "tw/treedec.hpp"

namespace tw {

struct ParseError : Error {
    using Error::Error;
};

// PACE .gr text: `c` comments, `p tw <n> <m>`, then m lines `<u> <v>` over
// ids 1..n. Duplicate edges are dropped with a warning.
Graph parse_gr(const std::string& text, std::vector<std::string>* warnings = nullptr);

// Writes g with its vertices renumbered 1..n in id order, edges ascending.
std::string emit_gr(const Graph& g);

// PACE .td text: `s td <bags> <width+1> <n>`, `b <i> <v...>`, tree edges
// `<i> <j>`. The result is validated against g (same ids as parse_gr).
TreeDecomposition parse_td(const std::string& text, const Graph& g);

// Bags and vertices renumbered like emit_gr; `comments` become leading `c`
// lines.
std::string emit_td(const TreeDecomposition& td, const Graph& g, const std::vector<std::string>& comments = {});

// Generators; vertices are 1..n.
Graph gnp(int n, double p, std::uint64_t seed);
Graph grid(int rows, int cols);
// Random k-tree: K_{k+1}, then each new vertex joins a random k-clique.
Graph ktree(int n, int k, std::uint64_t seed);
Graph cycle(int n);
// Drops round(fraction * m) edges chosen uniformly.
Graph drop_edges(const Graph& g, double fraction, std::uint64_t seed);

}  // namespace tw
