#pragma once

#include <cstddef>
#include <cstdint>
#include <span>
#include <vector>

#include "l1tv/perimeter.hpp"

namespace l1tv {

enum class FlowAlgorithm { boykov_kolmogorov, push_relabel };

struct FlowStats {
    std::int64_t augmentations = 0;
    std::int64_t pushes = 0;
    std::int64_t relabels = 0;
    std::int64_t global_relabels = 0;
};

/* s-t network on a W x H grid with implicit neighbour arcs. Arc d of a node
 * points along +v_k for d = 2k and along -v_k for d = 2k + 1; capacities are
 * uniform per offset. Terminal links are folded: a node keeps only
 * source_cap - sink_cap, and min(source_cap, sink_cap) goes to a constant. */
class GridFlowNetwork {
public:
    GridFlowNetwork(int width, int height, std::span<const Offset> offsets, std::span<const std::int64_t> caps);

    void add_terminal(std::size_t node, std::int64_t source_cap, std::int64_t sink_cap);

    // Runs max-flow once; returns the flow through the folded network.
    std::int64_t solve(FlowAlgorithm algorithm);

    std::int64_t folded_constant() const { return constant_; }
    std::int64_t flow() const { return flow_; }
    const FlowStats& stats() const { return stats_; }

    /* After solve(): source side of the minimum cut.
     * smallest: nodes reachable from s in the residual graph.
     * largest:  nodes that cannot reach t in the residual graph. */
    std::vector<std::uint8_t> source_side(bool smallest) const;

    std::size_t nodes() const { return n_; }

private:
    std::size_t neighbour(std::size_t i, int d) const {
        return static_cast<std::size_t>(static_cast<std::ptrdiff_t>(i) + step_[static_cast<std::size_t>(d)]);
    }
    bool has(std::size_t i, int d) const { return (valid_[i] >> d) & 1u; }
    std::int64_t& rc(std::size_t i, int d) { return rc_[i * dirs_ + static_cast<std::size_t>(d)]; }
    std::int64_t rc(std::size_t i, int d) const { return rc_[i * dirs_ + static_cast<std::size_t>(d)]; }

    void run_boykov_kolmogorov();
    void run_push_relabel();

    int width_, height_;
    std::size_t n_;
    int dirs_;
    std::vector<std::ptrdiff_t> step_;
    std::vector<std::uint32_t> valid_;
    std::vector<std::int64_t> rc_;
    std::vector<std::int64_t> tr_;  // > 0: residual from s, < 0: residual to t
    std::int64_t constant_ = 0;
    std::int64_t flow_ = 0;
    bool solved_ = false;
    FlowStats stats_;
};

}  // namespace l1tv
