#include "l1tv/solver.hpp"

#include <chrono>
#include <stdexcept>

namespace l1tv {

SolveResult minimize(const BinaryMask& omega, const EnergyParams& params, const Stencil& stencil,
                     const SolveOptions& options) {
    const auto start = std::chrono::steady_clock::now();
    const GridGeom& geom = omega.geom();
    const EnergyScale scale(geom, params);

    std::vector<std::int64_t> caps;
    for (std::int64_t u : stencil.units()) caps.push_back(u * scale.edge_factor());

    GridFlowNetwork net(geom.width, geom.height, stencil.offsets(), caps);
    const auto offsets = stencil.offsets();
    for (int y = 0; y < geom.height; ++y) {
        for (int x = 0; x < geom.width; ++x) {
            const std::size_t i = geom.index(x, y);
            std::int64_t to_source = 0, to_sink = 0;
            if (omega.test(i)) to_source += scale.cell_factor();
            else to_sink += scale.cell_factor();
            if (options.border != Border::interior) {
                std::int64_t leaving = 0;
                for (std::size_t k = 0; k < offsets.size(); ++k)
                    for (int s : {1, -1})
                        if (!geom.contains(x + s * offsets[k].dx, y + s * offsets[k].dy)) leaving += caps[k];
                if (options.border == Border::background) to_sink += leaving;
                else to_source += leaving;
            }
            net.add_terminal(i, to_source, to_sink);
        }
    }

    SolveResult out;
    out.options = options;
    out.flow_value_units = net.solve(options.algorithm);
    out.offset_units = net.folded_constant();

    const auto side = net.source_side(options.canonical == Canonical::smallest);
    out.sigma = BinaryMask(geom);
    for (std::size_t i = 0; i < side.size(); ++i)
        if (side[i]) out.sigma.assign(i, true);

    out.report = energy(out.sigma, omega, params, stencil, options.border);
    out.flow_value = scale.to_energy(out.flow_value_units);
    out.stats.flow = net.stats();
    out.stats.wall_seconds = std::chrono::duration<double>(std::chrono::steady_clock::now() - start).count();

    if (out.report.total_units != out.flow_value_units + out.offset_units)
        throw std::logic_error("min-cut value disagrees with the recomputed energy");
    return out;
}

}  // namespace l1tv
