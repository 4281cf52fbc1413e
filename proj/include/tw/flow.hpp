#pragma once

#include <climits>
#include <optional>
#include <vector>

#include "tw/graph.hpp"

namespace tw {

struct FlowResult {
    int value = 0;
    std::vector<std::vector<int>> paths;  // vertex-disjoint, each from x to y
    VSet min_separator;                   // the minimum cut closest to y
};

// Maximum number of vertex-disjoint x-y paths, with the paths and a minimum
// separator. One-vertex paths through x ∩ y count.
FlowResult flow(const Graph& g, const VSet& x, const VSet& y);

// Flow value only. Vertices in `undeletable` get unbounded capacity, i.e. no
// separator may use them. The search stops once `limit` is exceeded, so the
// result is min(true value, limit + 1).
int flow_value(const Graph& g, const VSet& x, const VSet& y, const VSet& undeletable = {},
               int limit = INT_MAX);

// Minimum separation (A,S,B) with x ⊆ A∪S and y ⊆ B∪S. The cut is the one
// closest to y; min_separation_near_x returns the one closest to x.
Separation min_separation(const Graph& g, const VSet& x, const VSet& y);
Separation min_separation_near_x(const Graph& g, const VSet& x, const VSet& y);

// As min_separation, but separators avoid `undeletable`. Empty if the
// minimum such separator is larger than `limit` or does not exist.
std::optional<Separation> min_separation_avoiding(const Graph& g, const VSet& x, const VSet& y,
                                                  const VSet& undeletable, int limit);

bool is_linked(const Graph& g, const VSet& x, const VSet& y);
bool is_strictly_linked(const Graph& g, const VSet& x, const VSet& y);

// A minimum (x,y)-separator different from both x and y, if one exists.
std::optional<VSet> other_min_separator(const Graph& g, const VSet& x, const VSet& y);

// Minimum order of a separation (A,S,B) with x ⊆ A∪S, y ⊆ B∪S, B nonempty;
// |x| when x covers the whole graph.
int flow_potential(const Graph& g, const VSet& x, const VSet& y);

}  // namespace tw
