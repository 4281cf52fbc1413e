#pragma once

#include <string>
#include <utility>
#include <vector>

#include "tw/graph.hpp"

namespace tw {

struct TreeDecomposition {
    std::vector<VSet> bags;
    std::vector<std::pair<int, int>> edges;  // tree edges between node ids
    int root = -1;                           // -1 when unrooted

    int size() const { return static_cast<int>(bags.size()); }
    int width() const;
    int count_bags_of_size(int s) const;
    std::vector<std::vector<int>> adjacency() const;
    int add_node(VSet bag) {
        bags.push_back(std::move(bag));
        return size() - 1;
    }
    void add_edge(int a, int b) { edges.emplace_back(a, b); }
};

// The empty graph's decomposition: one node, empty bag.
TreeDecomposition single_bag(VSet bag);

struct TorsoTreeDecomposition {
    VSet x;
    TreeDecomposition td;
    bool covers(const VSet& w) const { return is_subset(w, x); }
    int width() const { return td.width(); }
};

struct ValidationReport {
    enum class Failure { none, tree, vertex, edge, connected, foreign };
    Failure failure = Failure::none;
    std::string detail;
    int vertex = -1, other = -1, node = -1;
    bool ok() const { return failure == Failure::none; }
};

const char* failure_name(ValidationReport::Failure f);

ValidationReport validate(const Graph& g, const TreeDecomposition& td);
ValidationReport validate_torso(const Graph& g, const TorsoTreeDecomposition& ttd);

// True iff the edge list forms a tree on td.size() nodes.
bool is_tree(const TreeDecomposition& td);

// Contracts tree edges whose bags are nested until none remain.
TreeDecomposition shrink(const TreeDecomposition& td);

// Disjoint union of both decompositions plus one edge between bags ⊇ s.
TreeDecomposition join_on(const TreeDecomposition& a, const TreeDecomposition& b, const VSet& s);

// Index of the first node whose bag contains s, or -1.
int find_bag(const TreeDecomposition& td, const VSet& s);

// Rooted view: parent and depth per node, plus a pre-order listing.
struct RootedTree {
    int root = 0;
    std::vector<int> parent, depth, order;
    std::vector<std::vector<int>> children;
};
RootedTree rooted(const TreeDecomposition& td, int root);

// Forget node of each vertex (closest-to-root node containing it), indexed by
// vertex id; -1 for vertices absent from every bag.
std::vector<int> forget_nodes(const TreeDecomposition& td, const RootedTree& rt, int id_bound);

// d(v) = depth of the forget node of v plus one, indexed by vertex id; 0 for
// vertices absent from td.
std::vector<int> depth_weights(const TreeDecomposition& td, int root, int id_bound);

// Rooted nice decomposition: empty root bag, at most two children, adjacent
// bags differ by one vertex (or are equal at joins), forget nodes have
// exactly one child.
TreeDecomposition nice_form(const Graph& g, const TreeDecomposition& td);

}  // namespace tw
