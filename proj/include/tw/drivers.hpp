#pragma once

#include <cstdint>
#include <functional>
#include <optional>
#include <string>
#include <vector>

#include "tw/budget.hpp"
#include "tw/graph.hpp"
#include "tw/treedec.hpp"

namespace tw {

// Subset treewidth backend used by the exact driver. pstw gives every
// vertex of W its own terminal clique.
enum class Backend { stw, pstw };

const char* backend_name(Backend b);

// Approximation slack p/q, kept exact so width bounds never round.
struct Ratio {
    long p = 1, q = 1;
    double value() const { return static_cast<double>(p) / static_cast<double>(q); }
};

struct DriverStats {
    std::uint64_t insertions = 0;
    std::uint64_t backend_calls = 0;
    std::uint64_t improvements = 0;
    std::uint64_t partitions_tried = 0;
    std::uint64_t partitions_pruned = 0;
    std::uint64_t lower_bound_cuts = 0;
};

// Search limits shared by every backend call of one driver run.
struct DriverOptions {
    Backend backend = Backend::stw;
    // Answer NO straight away when exceeds_width(g, k) certifies
    // tw(g) > k, without running the compression.
    bool lower_bound = true;
    SearchBudget* budget = nullptr;
    DriverStats* stats = nullptr;
};

// Decomposition of width ≤ k, or nothing iff tw(g) > k. Throws
// BudgetExceeded when the budget runs out.
std::optional<TreeDecomposition> exact(const Graph& g, int k, const DriverOptions& opt = {});

// Decomposition of width ≤ floor((1+eps)k), or nothing, which implies
// tw(g) > k. eps must lie in (0, 1].
std::optional<TreeDecomposition> approx(const Graph& g, int k, Ratio eps, const DriverOptions& opt = {});

// floor((1+eps)k) in integer arithmetic.
int approx_width(int k, Ratio eps);
// Largest number of parts W is split into: ceil(16/eps) + 1.
int approx_parts(Ratio eps);

struct TreewidthResult {
    int width = -1;
    TreeDecomposition td;
};

// Tries k = 0, 1, ... until the driver succeeds. With eps set the width is
// at most (1+eps)·tw(g), otherwise it is tw(g). The empty graph gives -1.
TreewidthResult treewidth(const Graph& g, std::optional<Ratio> eps = std::nullopt, const DriverOptions& opt = {});

// Set partitions of w into exactly `blocks` blocks, each of at most
// max_size vertices, in restricted growth order; stops once `emit`
// returns false.
void for_each_partition(const VSet& w, int blocks, int max_size,
                        const std::function<bool(const std::vector<VSet>&)>& emit);

// Replays the constructive partition argument on a width-k decomposition
// of g: parts of W collected bottom-up, each part added to the bags that
// produced it.
struct PartitionCheck {
    std::vector<VSet> parts;
    TreeDecomposition td;  // decomposition of g with every part made a clique
    int part_limit = 0;    // floor(|W| / (eps k / 2)) + 1
    int width_limit = 0;   // floor(k + eps k)
    bool ok = false;
    std::string detail;
};
PartitionCheck partition_exists_check(const Graph& g, const VSet& w, const TreeDecomposition& td, Ratio eps);

}  // namespace tw
