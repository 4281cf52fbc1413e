#pragma once

#include <cstdint>
#include <variant>
#include <vector>

#include "tw/graph.hpp"
#include "tw/treedec.hpp"

namespace tw {

// (node, S): S is a (bag(node), W)-separator that is smaller than the bag,
// or equally large with smaller total weight.
struct DLinkWitness {
    int node = -1;
    VSet separator;
};

std::int64_t weight_of(const VSet& s, const std::vector<int>& d);

// phi_d(X) = |X| * n * (k+1) + d(X), k the torso decomposition's width.
std::int64_t phi_d(const Graph& g, const VSet& x, const std::vector<int>& d, int k);

// Routes S along disjoint paths toward bag(r): each bag keeps its A-part and
// gains the s_i whose path it meets.
TorsoTreeDecomposition pull(const Graph& g, const TorsoTreeDecomposition& ttd, const Separation& sep, int r);

bool is_witness(const Graph& g, const VSet& w, const TorsoTreeDecomposition& ttd, const std::vector<int>& d,
                const DLinkWitness& wit);

TorsoTreeDecomposition refine_cover(const Graph& g, const VSet& w, const TorsoTreeDecomposition& ttd,
                                    const std::vector<int>& d, const DLinkWitness& wit);

// td must be rooted at a node whose bag W has size width+1, and ttd must
// cover W with width below td's.
std::variant<TreeDecomposition, DLinkWitness> improve_step(const Graph& g, const TreeDecomposition& td,
                                                           const TorsoTreeDecomposition& ttd);

struct ImproveStats {
    int iterations = 0;
    std::int64_t initial_phi = 0;
};

// Repeats improve_step / refine_cover until the decomposition improves.
TreeDecomposition improve(const Graph& g, const TreeDecomposition& td, TorsoTreeDecomposition ttd,
                          ImproveStats* stats = nullptr);

}  // namespace tw
