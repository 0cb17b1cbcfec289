// extclosure: command-line front end for the extension-closure toolkit.
//
// Exit codes: 0 success, 1 negative outcome (failed check, budget exceeded,
// condition violated), 2 usage, parse, or I/O error.

#include <chrono>
#include <fstream>
#include <iostream>
#include <optional>
#include <sstream>
#include <string>
#include <vector>

#include <CLI11.hpp>

#include "extclosure/reference_corpus.hpp"

using namespace extclosure;

namespace {

struct Settings {
    std::size_t depth = 3;
    std::size_t budget = std::size_t{1} << 20;
    std::uint64_t seed = 0;
    std::string json_path;
    std::optional<std::uint32_t> p;
    bool quiet = false;
    std::size_t workers = 1;
    bool timing = false;

    std::string ring_path;
    std::string element = "x";
    std::string module = "k";
    std::string left = "R";
    std::string right = "k";
    std::size_t steps = 4;
    std::size_t index = 1;
    std::string matrix;
    bool modules = false;
};

struct Outcome {
    Json result;
    std::string status = "ok";
    int exit_code = 0;
    std::string text;  // human-readable summary; the JSON is printed when empty
};

EnumerationOptions enumeration(const Settings& s) {
    EnumerationOptions e;
    e.budget = s.budget;
    e.workers = s.workers;
    e.iso.seed = s.seed;
    return e;
}

/// R, k, E (the Matlis dual of R), or R/(f, g, ...).
FpModule parse_module(const LoadedRing& ring, const std::string& spec) {
    const AlgebraPtr& a = ring.algebra();
    if (spec == "R") return free_module(a, 1);
    if (spec == "k") return residue_field(a);
    if (spec == "E") return matlis_dual(free_module(a, 1));
    if (spec.rfind("R/(", 0) == 0 && spec.back() == ')') {
        std::vector<RingElement> gens;
        std::stringstream list(spec.substr(3, spec.size() - 4));
        std::string item;
        while (std::getline(list, item, ',')) gens.push_back(ring.element(item));
        return cyclic_module(ideal_generated(a, gens));
    }
    throw InvalidArgument("unknown module '" + spec + "' (expected R, k, E, or R/(f,...))");
}

/// Rows separated by ';', entries by ','. Entries are polynomials.
RingMatrix parse_matrix(const LoadedRing& ring, const std::string& text) {
    std::vector<std::vector<RingElement>> rows;
    std::stringstream in(text);
    std::string row;
    while (std::getline(in, row, ';')) {
        std::vector<RingElement> entries;
        std::stringstream cells(row);
        std::string cell;
        while (std::getline(cells, cell, ',')) entries.push_back(ring.element(cell));
        rows.push_back(std::move(entries));
    }
    if (rows.empty()) throw InvalidArgument("empty matrix");
    RingMatrix m(*ring.algebra(), rows.size(), rows.front().size());
    for (std::size_t r = 0; r < rows.size(); ++r) {
        if (rows[r].size() != m.cols) throw InvalidArgument("matrix rows have different lengths");
        for (std::size_t c = 0; c < m.cols; ++c) m.at(r, c) = rows[r][c];
    }
    return m;
}

Outcome run_analyze(const Settings& s) {
    const LoadedRing ring = load_ring(s.ring_path, s.p);
    return {analyze_json(ring.algebra())};
}

Outcome run_resolve(const Settings& s) {
    const LoadedRing ring = load_ring(s.ring_path, s.p);
    const FpModule m = parse_module(ring, s.module);
    Json r = resolution_json(minimal_free_resolution(m, s.steps), *ring.algebra());
    r["module"] = s.module;
    r["dim"] = m.dim();
    return {r};
}

Outcome run_tor(const Settings& s) {
    const LoadedRing ring = load_ring(s.ring_path, s.p);
    const auto t = tor(parse_module(ring, s.left), parse_module(ring, s.right), s.index);
    return {{{"left", s.left}, {"right", s.right}, {"index", s.index}, {"dim", t.dim}}};
}

Outcome run_ext1(const Settings& s) {
    const LoadedRing ring = load_ring(s.ring_path, s.p);
    const Ext1Space e = ext1(parse_module(ring, s.left), parse_module(ring, s.right));
    return {{{"left", s.left}, {"right", s.right}, {"dim", e.dim()}, {"betti", e.resolution.ranks}}};
}

Outcome run_filt(const Settings& s) {
    const LoadedRing ring = load_ring(s.ring_path, s.p);
    const RingElement x = ring.element(s.element);
    EnumerationOptions e = enumeration(s);
    e.x = x;
    const FpModule base = cyclic_module(ideal_generated(ring.algebra(), {x}));
    try {
        return {{{"element", s.element}, {"levels", filt_json(filt_enumerate(base, s.depth, e), s.modules)}}};
    } catch (const EnumerationBudgetExceeded& ex) {
        return {{{"element", s.element},
                 {"levels", filt_json(ex.partial(), s.modules)},
                 {"error", ex.what()},
                 {"partial", true}},
                "budget_exceeded",
                1};
    }
}

Outcome run_closure(const Settings& s) {
    const LoadedRing ring = load_ring(s.ring_path, s.p);
    const RingElement x = ring.element(s.element);
    try {
        Json r = closure_json(ext_closure_contains_k(ring.algebra(), x, s.depth, enumeration(s)));
        r["x"] = element_json(*ring.algebra(), x);
        return {r};
    } catch (const EnumerationBudgetExceeded& ex) {
        return {{{"x", element_json(*ring.algebra(), x)}, {"error", ex.what()}}, "budget_exceeded", 1};
    }
}

Json condition_json(const std::vector<bool>& columns) {
    Json j = Json::array();
    for (std::size_t c = 0; c < columns.size(); ++c) j.push_back({{"column", c + 2}, {"passes", bool(columns[c])}});
    return j;
}

Outcome run_matrix_check(const Settings& s) {
    const LoadedRing ring = load_ring(s.ring_path, s.p);
    const AlgebraPtr& a = ring.algebra();
    const RingElement x = ring.element(s.element);
    Outcome out;
    bool all = true;
    if (!s.matrix.empty()) {
        FreePresentation pres;
        pres.relations = parse_matrix(ring, s.matrix);
        pres.betti0 = pres.relations.rows;
        pres.betti1 = pres.relations.cols;
        const auto cols = check_matrix_condition(a, pres, x);
        for (bool c : cols) all = all && c;
        out.result = {{"matrix", ring_matrix_json(*a, pres.relations)}, {"columns", condition_json(cols)}};
        if (a->edim() >= 2) {
            const FreePresentation reduced = strict_upper_reduction(a, pres, x);
            out.result["reduced"] = ring_matrix_json(*a, reduced.relations);
        }
    } else {
        EnumerationOptions e = enumeration(s);
        e.x = x;
        const auto levels = filt_enumerate(cyclic_module(ideal_generated(a, {x})), s.depth, e);
        Json nodes = Json::array();
        for (const auto& level : levels)
            for (std::size_t i = 0; i < level.nodes.size(); ++i) {
                const auto cols = check_matrix_condition(a, *level.nodes[i].presentation, x);
                bool ok = true;
                for (bool c : cols) ok = ok && c;
                all = all && ok;
                nodes.push_back({{"level", level.level}, {"index", i}, {"passes", ok},
                                 {"matrix", ring_matrix_json(*a, level.nodes[i].presentation->relations)}});
            }
        out.result = {{"nodes", nodes}};
    }
    out.result["all_pass"] = all;
    if (!all) {
        out.status = "condition_fails";
        out.exit_code = 1;
    }
    return out;
}

Outcome run_diagnose(const Settings& s) {
    const LoadedRing ring = load_ring(s.ring_path, s.p);
    DiagnoseOptions o;
    o.depth = s.depth;
    o.enumeration = enumeration(s);
    const DiagnosisReport d = diagnose(ring.algebra(), &ring.presentation, o);
    Json r = diagnosis_json(ring.algebra(), d);
    if (d.verdict == Verdict::OnlyTrivial_Hypersurface) r["ladder"] = ladder_json(hypersurface_ladder_check(ring.algebra()));
    return {r};
}

Outcome run_verify(const Settings& s) {
    CorpusOptions o;
    o.depth = s.depth;
    o.enumeration = enumeration(s);
    const auto checks = run_reference_corpus(o);
    Outcome out{corpus_json(checks)};
    std::ostringstream text;
    for (const auto& c : checks) text << (c.passed ? "PASS " : "FAIL ") << c.id << ": " << c.claim << "\n";
    text << out.result["passed"].get<std::size_t>() << "/" << checks.size() << " checks passed\n";
    out.text = text.str();
    if (!out.result["all_passed"].get<bool>()) {
        out.status = "failed";
        out.exit_code = 1;
    }
    return out;
}

Json config_json(const Settings& s, const std::string& command) {
    // The worker count is left out: reports must not depend on it.
    Json c = {{"depth", s.depth}, {"budget", s.budget}, {"seed", s.seed}};
    c["p"] = s.p ? Json(*s.p) : Json(nullptr);
    if (command != "verify-paper") c["ring"] = s.ring_path;
    return c;
}

}  // namespace

int main(int argc, char** argv) {
    CLI::App app{"Extension-closed subcategories of modules over Artinian local F_p-algebras"};
    app.require_subcommand(1);
    Settings s;

    auto add_common = [&](CLI::App* sub) {
        sub->add_option("--depth", s.depth, "filt levels to enumerate")->capture_default_str();
        sub->add_option("--budget", s.budget, "cocycles allowed per level")->capture_default_str();
        sub->add_option("--seed", s.seed, "seed for isomorphism sampling")->capture_default_str();
        sub->add_option("--json", s.json_path, "write the JSON report to this path ('-' for stdout)");
        sub->add_option("--p", s.p, "override the characteristic from the ring file");
        sub->add_flag("--quiet", s.quiet, "suppress the text summary");
        sub->add_option("--workers", s.workers, "worker threads for enumeration")->capture_default_str();
        sub->add_flag("--timing", s.timing, "include wall-clock time in the report");
    };
    auto ring_command = [&](const std::string& name, const std::string& help) {
        CLI::App* sub = app.add_subcommand(name, help);
        sub->add_option("ring", s.ring_path, "ring definition file")->required();
        add_common(sub);
        return sub;
    };

    ring_command("analyze", "invariants and classification");
    ring_command("resolve", "minimal free resolution of a module")
        ->add_option("--module", s.module, "R, k, E, or R/(f,...)")
        ->capture_default_str();
    app.get_subcommand("resolve")->add_option("--steps", s.steps, "resolution length")->capture_default_str();
    auto* tor_cmd = ring_command("tor", "dimension of Tor_i(left, right)");
    tor_cmd->add_option("--left", s.left)->capture_default_str();
    tor_cmd->add_option("--right", s.right)->capture_default_str();
    tor_cmd->add_option("--index", s.index)->capture_default_str();
    auto* ext_cmd = ring_command("ext1", "dimension of Ext^1(left, right)");
    ext_cmd->add_option("--left", s.left)->capture_default_str();
    ext_cmd->add_option("--right", s.right)->capture_default_str();
    auto* filt_cmd = ring_command("filt", "enumerate filt^n(R/(x)) up to isomorphism");
    filt_cmd->add_option("--element", s.element, "the element x")->capture_default_str();
    filt_cmd->add_flag("--modules", s.modules, "include action matrices of every node");
    ring_command("closure", "search filt^n(R/(x)) for a k summand")
        ->add_option("--element", s.element, "the element x")
        ->capture_default_str();
    auto* mc_cmd = ring_command("matrix-check", "check the column condition on triangular presentations");
    mc_cmd->add_option("--element", s.element, "the diagonal element x")->capture_default_str();
    mc_cmd->add_option("--matrix", s.matrix, "explicit matrix, rows ';'-separated, entries ','-separated");
    ring_command("diagnose", "which sufficient condition applies");
    add_common(app.add_subcommand("verify-paper", "run the built-in reference corpus"));

    try {
        app.parse(argc, argv);
    } catch (const CLI::ParseError& e) {
        const int code = app.exit(e);
        return code == 0 ? 0 : 2;
    }

    CLI::App* sub = app.get_subcommands().front();
    const std::string command = sub->get_name();
    const auto start = std::chrono::steady_clock::now();
    Outcome out;
    try {
        if (command == "analyze") out = run_analyze(s);
        else if (command == "resolve") out = run_resolve(s);
        else if (command == "tor") out = run_tor(s);
        else if (command == "ext1") out = run_ext1(s);
        else if (command == "filt") out = run_filt(s);
        else if (command == "closure") out = run_closure(s);
        else if (command == "matrix-check") out = run_matrix_check(s);
        else if (command == "diagnose") out = run_diagnose(s);
        else out = run_verify(s);
    } catch (const Error& e) {
        std::cerr << "extclosure: " << e.what() << "\n";
        return 2;
    }

    Json report = make_report(command, config_json(s, command), std::move(out.result), out.status);
    if (s.timing)
        report["timing_seconds"] =
            std::chrono::duration<double>(std::chrono::steady_clock::now() - start).count();
    const std::string text = dump(report);

    if (s.json_path == "-") {
        std::cout << text;
    } else {
        if (!s.json_path.empty()) {
            std::ofstream f(s.json_path, std::ios::binary);
            if (!(f << text)) {
                std::cerr << "extclosure: cannot write '" << s.json_path << "'\n";
                return 2;
            }
        }
        if (!s.quiet) std::cout << (out.text.empty() ? text : out.text);
    }
    return out.exit_code;
}
