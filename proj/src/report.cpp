#include "extclosure/report.hpp"

namespace extclosure {

Json element_json(const LocalAlgebra& algebra, const RingElement& a) { return algebra.format(a); }

Json ring_matrix_json(const LocalAlgebra& algebra, const RingMatrix& m) {
    Json rows = Json::array();
    for (std::size_t r = 0; r < m.rows; ++r) {
        Json row = Json::array();
        for (std::size_t c = 0; c < m.cols; ++c) row.push_back(element_json(algebra, m.at(r, c)));
        rows.push_back(std::move(row));
    }
    return rows;
}

Json matrix_json(const Matrix& m) {
    Json rows = Json::array();
    for (std::size_t r = 0; r < m.rows(); ++r) {
        const auto row = m.row(r);
        rows.push_back(std::vector<Scalar>(row.begin(), row.end()));
    }
    return rows;
}

Json invariants_json(const AlgebraInvariants& inv) {
    return {{"length", inv.length},
            {"edim", inv.edim},
            {"hilbert", inv.hilbert},
            {"socle_dim", inv.socle_dim},
            {"top_socle_degree", inv.top_socle_degree}};
}

Json classification_json(const Classification& c) {
    return {{"field", c.is_field},
            {"hypersurface", c.is_hypersurface},
            {"gorenstein", c.is_gorenstein},
            {"stretched", c.is_stretched}};
}

Json analyze_json(const AlgebraPtr& algebra) {
    Json gens = Json::array();
    for (const auto& g : algebra->generators()) gens.push_back(element_json(*algebra, g));
    Json soc = Json::array();
    for (const auto& s : socle(algebra).elements()) soc.push_back(element_json(*algebra, s));
    return {{"p", algebra->p()},
            {"basis", algebra->labels()},
            {"generators", gens},
            {"socle", soc},
            {"invariants", invariants_json(invariants(algebra))},
            {"classification", classification_json(classify(algebra))}};
}

Json module_json(const FpModule& m, std::size_t betti_steps) {
    return {{"dim", m.dim()},
            {"betti", betti_numbers(m, betti_steps)},
            {"socle_dim", module_socle(m).cols()},
            {"radical_dim", radical(m).cols()},
            {"k_summand", splits_off_k(m).splits}};
}

Json resolution_json(const FreeResolution& res, const LocalAlgebra& algebra) {
    Json diffs = Json::array();
    for (const auto& d : res.differentials) diffs.push_back(ring_matrix_json(algebra, d));
    return {{"ranks", res.ranks}, {"differentials", diffs}};
}

Json filt_json(const std::vector<FiltLevel>& levels, bool include_modules) {
    Json out = Json::array();
    for (const auto& level : levels) {
        Json nodes = Json::array();
        for (const auto& node : level.nodes) {
            const LocalAlgebra& alg = *node.module.algebra();
            Json n = {{"dim", node.module.dim()},
                      {"parent", node.parent},
                      {"cocycle", node.cocycle_coefficients},
                      {"k_summand", splits_off_k(node.module).splits}};
            if (node.presentation) n["presentation"] = ring_matrix_json(alg, node.presentation->relations);
            if (include_modules) {
                Json actions = Json::array();
                for (const auto& a : node.module.actions()) actions.push_back(matrix_json(a));
                n["action"] = actions;
            }
            nodes.push_back(std::move(n));
        }
        out.push_back({{"level", level.level},
                       {"count", level.nodes.size()},
                       {"cocycles", level.cocycles_enumerated},
                       {"inconclusive_pairs", level.inconclusive_pairs},
                       {"nodes", nodes}});
    }
    return out;
}

Json closure_json(const ClosureVerdict& v) {
    Json j = {{"depth", v.depth},
              {"contains_k", v.contains_k},
              {"census", v.census},
              {"bounded_depth", v.bounded_depth}};
    if (v.contains_k && v.witness_node) {
        const LocalAlgebra& alg = *v.witness_node->module.algebra();
        j["witness"] = {{"level", v.witness_node->level},
                        {"dim", v.witness_node->module.dim()},
                        {"splitting_element", v.splitting_element}};
        if (v.witness_node->presentation)
            j["witness"]["presentation"] = ring_matrix_json(alg, v.witness_node->presentation->relations);
    } else {
        j["note"] = "no module with a k summand at levels <= " + std::to_string(v.depth) +
                    "; bounded-depth evidence only";
    }
    return j;
}

Json diagnosis_json(const AlgebraPtr& algebra, const DiagnosisReport& r) {
    Json applicable = Json::array();
    for (Verdict v : r.applicable) applicable.push_back(std::string(to_string(v)));
    Json j = {{"verdict", std::string(to_string(r.verdict))},
              {"applicable", applicable},
              {"invariants", invariants_json(r.invariants)},
              {"classification", classification_json(r.classification)},
              {"notes", r.notes}};
    if (r.pair) j["pair"] = {element_json(*algebra, r.pair->first), element_json(*algebra, r.pair->second)};
    if (r.census) {
        j["census"] = closure_json(*r.census);
        j["census"]["x"] = element_json(*algebra, r.census->x);
    }
    if (r.census_error) j["census_error"] = *r.census_error;
    if (r.bounded_betti)
        j["bounded_betti"] = {{"x", element_json(*algebra, r.bounded_betti->x)},
                              {"module", "R/(" + algebra->format(r.bounded_betti->x) + ")"},
                              {"betti", r.bounded_betti->betti}};
    if (r.goto_witness) j["goto"] = {{"variable", r.goto_witness->name}, {"l", r.goto_witness->l}};
    return j;
}

Json ladder_json(const LadderReport& r) {
    Json steps = Json::array();
    for (const auto& s : r.steps)
        steps.push_back({{"i", s.i}, {"well_defined", s.well_defined}, {"module_maps", s.module_maps}, {"exact", s.exact}});
    Json reach = Json::array();
    for (std::size_t l = 0; l < r.reachable.size(); ++l) reach.push_back({{"seed", l + 1}, {"reached", r.reachable[l]}});
    return {{"n", r.n},
            {"steps", steps},
            {"reachability", reach},
            {"all_exact", r.all_exact()},
            {"closure_complete", r.closure_complete()}};
}

Json make_report(const std::string& command, Json config, Json result, const std::string& status) {
    return {{"schema", kReportSchema},
            {"command", command},
            {"config", std::move(config)},
            {"result", std::move(result)},
            {"status", status}};
}

std::string dump(const Json& j) { return j.dump(2) + "\n"; }

}  // namespace extclosure
