#include "l1tv/report.hpp"

#include "l1tv/errors.hpp"

namespace l1tv {

Json to_json(const EnergyReport& r) {
    return {{"perimeter", r.perimeter_term},
            {"fidelity", r.fidelity_term},
            {"total", r.total},
            {"lambda", r.params.lambda.str()},
            {"lambda_value", r.params.lambda_value()},
            {"R", r.params.critical_radius()},
            {"dimension_n", r.params.dimension_n},
            {"stencil", r.stencil_name},
            {"border", std::string(to_string(r.border))},
            {"exact", {{"perimeter_units", r.perimeter_units},
                       {"fidelity_units", r.fidelity_units},
                       {"total_units", r.total_units},
                       {"unit", r.unit}}}};
}

Json to_json(const Stencil& s) {
    Json offsets = Json::array();
    for (std::size_t k = 0; k < s.size(); ++k) {
        offsets.push_back({{"dx", s.offsets()[k].dx},
                           {"dy", s.offsets()[k].dy},
                           {"weight", s.weight(k, 1.0)},
                           {"weight_units", s.units()[k]}});
    }
    return {{"name", s.name()},
            {"weight_denominator", kWeightDenominator},
            {"offsets", offsets},
            {"anisotropy_bound", anisotropy_bound(s)}};
}

std::string_view to_string(FlowAlgorithm a) {
    return a == FlowAlgorithm::boykov_kolmogorov ? "bk" : "push-relabel";
}

FlowAlgorithm parse_flow_algorithm(std::string_view name) {
    if (name == "bk") return FlowAlgorithm::boykov_kolmogorov;
    if (name == "push-relabel" || name == "pr") return FlowAlgorithm::push_relabel;
    throw ConfigError("unknown max-flow algorithm '" + std::string(name) + "' (bk, push-relabel)");
}

Json to_json(const SolveResult& r, bool with_timing) {
    Json j = {{"energy", to_json(r.report)},
              {"flow_value", r.flow_value},
              {"flow_value_units", r.flow_value_units},
              {"offset_units", r.offset_units},
              {"sigma_area", r.sigma.area()},
              {"sigma_cells", r.sigma.count()},
              {"canonical", r.options.canonical == Canonical::smallest ? "smallest" : "largest"},
              {"algorithm", std::string(to_string(r.options.algorithm))},
              {"stats", {{"augmentations", r.stats.flow.augmentations},
                         {"pushes", r.stats.flow.pushes},
                         {"relabels", r.stats.flow.relabels},
                         {"global_relabels", r.stats.flow.global_relabels}}}};
    if (with_timing) j["stats"]["wall_seconds"] = r.stats.wall_seconds;
    return j;
}

}  // namespace l1tv
