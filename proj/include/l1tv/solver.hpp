#pragma once

#include <cstdint>
#include <vector>

#include "l1tv/energy.hpp"
#include "l1tv/grid.hpp"
#include "l1tv/grid_flow.hpp"
#include "l1tv/perimeter.hpp"

namespace l1tv {

// Which of the global minimizers to return. Both are unique.
enum class Canonical { smallest, largest };

struct SolveOptions {
    FlowAlgorithm algorithm = FlowAlgorithm::boykov_kolmogorov;
    Canonical canonical = Canonical::smallest;
    Border border = Border::background;
};

struct SolveStats {
    FlowStats flow;
    double wall_seconds = 0;
};

/* Exact global minimizer of the discrete energy.
 *
 * Cut construction (S = source side = sigma):
 *   omega cell      : s -> p with l h^2 (paid when p is dropped)
 *   background cell : p -> t with l h^2 (paid when p is kept)
 *   neighbour pair  : weight w_k in both directions
 *   grid edge       : each pair leaving the grid adds w_k to p -> t (background
 *                     border) or to s -> p (foreground border)
 * Terminal links are folded per node, so
 *   report.total_units == flow_value_units + offset_units
 * where offset_units = sum over nodes of min(cap(s->p), cap(p->t)): the
 * lambda-weighted area of omega cells that also pay a grid-edge term. */
struct SolveResult {
    BinaryMask sigma;
    EnergyReport report;
    std::int64_t flow_value_units = 0;
    std::int64_t offset_units = 0;
    double flow_value = 0;
    SolveStats stats;
    SolveOptions options;
};

SolveResult minimize(const BinaryMask& omega, const EnergyParams& params, const Stencil& stencil,
                     const SolveOptions& options = {});

}  // namespace l1tv
