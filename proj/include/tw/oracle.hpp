#pragma once

#include <vector>

#include "tw/graph.hpp"
#include "tw/treedec.hpp"

// Brute-force ground truth. Nothing here calls into the flow or separator
// code; reachability is redone on bitmasks so the checks stay independent.
namespace tw::oracle {

struct TwResult {
    int width = -1;
    std::vector<int> order;  // an optimal elimination order
};

// Subset dynamic programme over elimination prefixes; at most 20 vertices.
TwResult exact_tw(const Graph& g);

// Minimum width over every elimination order; at most 8 vertices.
int exact_tw_orderings(const Graph& g);

// Fill-in decomposition of an elimination order.
TreeDecomposition td_from_elimination(const Graph& g, const std::vector<int>& order);

// Every important (a,b)-separator of size at most k, straight from the
// definition; at most 15 vertices.
std::vector<VSet> all_important_bruteforce(const Graph& g, const VSet& a, const VSet& b, int k);

// Every (a,b)-separator of size at most k (not necessarily minimal).
std::vector<VSet> all_separators_bruteforce(const Graph& g, const VSet& a, const VSet& b, int k);

// Smallest (x,y)-separator size by exhaustive search.
int min_separator_size(const Graph& g, const VSet& x, const VSet& y);

// Flow potential from its definition: smallest separation with the far side
// nonempty.
int flow_potential(const Graph& g, const VSet& x, const VSet& y);

// Vertices reachable from x \ s in g \ s, computed independently.
VSet reach(const Graph& g, const VSet& x, const VSet& s);

// Independent decomposition checker.
bool is_valid_decomposition(const Graph& g, const TreeDecomposition& td);

}  // namespace tw::oracle
