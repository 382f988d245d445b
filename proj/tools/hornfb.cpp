// hornfb: command-line driver for the CHC analyses.
//
// Exit codes: 0 SAFE / check passed, 10 UNKNOWN, 1 failed check or internal
// error, 2 input or parse error, 3 resource bound exceeded.

#include "hornfb/gen/random_system.hpp"
#include "hornfb/solver/pipeline.hpp"
#include "hornfb/trees/trees.hpp"

#include "CLI11.hpp"
#include "json.hpp"

#include <chrono>
#include <fstream>
#include <iostream>

namespace {

using namespace hornfb;
using json = nlohmann::ordered_json;

constexpr int exit_safe = 0;
constexpr int exit_fail = 1;
constexpr int exit_input = 2;
constexpr int exit_resource = 3;
constexpr int exit_unknown = 10;

std::string read_text(const std::string &path) {
    std::ifstream in(path);
    if (!in)
        throw input_error("cannot read " + path);
    std::ostringstream os;
    os << in.rdbuf();
    return os.str();
}

void write_text(const std::string &path, const std::string &text) {
    if (path == "-") {
        std::cout << text;
        return;
    }
    std::ofstream out(path);
    if (!out)
        throw input_error("cannot write " + path);
    out << text;
}

struct solve_options {
    std::string mode = "alt";
    std::size_t max_rounds = analysis_config{}.max_rounds;
    std::size_t widen_delay = analysis_config{}.widening_delay;
    std::string start = "fwd";
    bool coarse_first = false;
    std::string json_path;
    std::string model_out;

    void attach(CLI::App *cmd) {
        cmd->add_option("--mode", mode, "fwd, alt, qa2 or qa-iter")
            ->check(CLI::IsMember({"fwd", "alt", "qa2", "qa-iter"}));
        cmd->add_option("--max-rounds", max_rounds, "forward analyses before giving up")->check(CLI::PositiveNumber);
        cmd->add_option("--widen-delay", widen_delay, "updates before widening at a cut point");
        cmd->add_option("--start", start, "direction of the first analysis")->check(CLI::IsMember({"fwd", "bwd"}));
        cmd->add_flag("--coarse-first", coarse_first, "start with the predicate-level backward reachability");
    }

    analysis_config config() const {
        analysis_config cfg;
        cfg.max_rounds = max_rounds;
        cfg.widening_delay = widen_delay;
        cfg.start = start == "bwd" ? analysis_config::direction::backward : analysis_config::direction::forward;
        cfg.coarse_first = coarse_first;
        return cfg;
    }
};

json element_json(const horn_system &sys, const abstract_element &e) {
    json out = json::object();
    for (auto &[name, text] : digest(sys, e))
        out[name] = text;
    return out;
}

json report_json(const std::string &file, const horn_system &sys, const run_report &r, double millis) {
    json j;
    j["schema"] = 1;
    j["file"] = file;
    j["mode"] = to_string(r.mode);
    j["verdict"] = to_string(r.status);
    j["rounds"] = r.rounds;
    if (r.reason)
        j["stop"] = to_string(*r.reason);
    json model = json::object();
    for (pred_id p = 0; p < sys.num_preds(); ++p)
        model[sys.decl(p).name] = to_string(r.model[p]);
    j["model"] = model;
    j["certs"] = {{"eq6", r.certs.sequence_laws}, {"model_check", r.certs.model_check}, {"goal_disjoint", r.certs.goal_disjoint}};
    if (!r.certs.failures.empty())
        j["cert_failures"] = r.certs.failures;
    j["stats"] = {{"forward_runs", r.stats.forward_runs},
                  {"backward_runs", r.stats.backward_runs},
                  {"updates", r.stats.updates},
                  {"widenings", r.stats.widenings},
                  {"transformer_calls", r.stats.transformer_calls}};
    json trace = json::array();
    for (std::size_t i = 0; i < r.d.size(); ++i) {
        json round{{"round", i + 1}, {"d", element_json(sys, r.d[i])}};
        if (i + 1 < r.b.size())
            round["b"] = element_json(sys, r.b[i + 1]);
        trace.push_back(round);
    }
    j["trace"] = trace;
    j["timing"] = {{"ms", millis}};
    return j;
}

int verdict_code(verdict v) { return v == verdict::safe ? exit_safe : exit_unknown; }

int cmd_solve(const std::string &file, const solve_options &opt) {
    auto sys = parse_system(read_text(file));
    auto t0 = std::chrono::steady_clock::now();
    auto r = run_analysis(sys, *parse_run_mode(opt.mode), opt.config());
    double ms = std::chrono::duration<double, std::milli>(std::chrono::steady_clock::now() - t0).count();

    std::cout << "verdict: " << to_string(r.status) << "\n";
    std::cout << "rounds: " << r.rounds << "\n";
    std::cout << model_file_text(sys, r.model);
    for (auto &f : r.certs.failures)
        std::cout << "note: " << f << "\n";
    if (!opt.json_path.empty())
        write_text(opt.json_path, report_json(file, sys, r, ms).dump(2) + "\n");
    if (!opt.model_out.empty())
        write_text(opt.model_out, model_file_text(sys, r.model));
    return verdict_code(r.status);
}

int cmd_batch(const std::vector<std::string> &files, const solve_options &opt) {
    int worst = exit_safe;
    for (auto &file : files) {
        try {
            auto sys = parse_system(read_text(file));
            auto r = run_analysis(sys, *parse_run_mode(opt.mode), opt.config());
            bool certified = r.certs.model_check && (r.status != verdict::safe || r.certs.goal_disjoint);
            std::cout << file << " " << to_string(r.status) << " rounds=" << r.rounds
                      << " model=" << (certified ? "ok" : "FAIL") << "\n";
            if (!certified)
                worst = exit_fail;
        } catch (const std::exception &e) {
            std::cout << file << " ERROR " << e.what() << "\n";
            worst = exit_fail;
        }
    }
    return worst;
}

int cmd_oracle(const std::string &file, const std::string &semantics, bool restriction_check) {
    auto sys = parse_system(read_text(file));
    require_universe(sys);
    auto rel = ground_relation(sys);
    auto goal = ground_goal(sys);
    interpretation out;
    if (semantics == "fwd")
        out = lfp_forward(rel);
    else if (semantics == "bwd")
        out = lfp_backward(rel, goal);
    else
        out = lfp_combined(rel, goal);
    for (auto &a : out)
        std::cout << to_string(sys, a) << "\n";
    if (restriction_check) {
        bool ok = check_forward_restriction(rel, goal);
        std::cout << "forward restriction: " << (ok ? "PASS" : "FAIL") << "\n";
        return ok ? exit_safe : exit_fail;
    }
    return exit_safe;
}

int cmd_trees(const std::string &file, std::size_t depth, bool check) {
    auto sys = parse_system(read_text(file));
    require_universe(sys);
    auto rel = ground_relation(sys);
    auto goal = ground_goal(sys);
    if (!check) {
        auto fwd = forward_trees(rel, depth);
        auto bwd = backward_trees(rel, goal, depth);
        std::cout << "forward trees: " << fwd.size() << "\n";
        for (auto &t : fwd)
            std::cout << "  " << to_string(sys, t) << "\n";
        std::cout << "backward trees: " << bwd.size() << "\n";
        for (auto &t : bwd)
            std::cout << "  " << to_string(sys, t) << "\n";
        return exit_safe;
    }
    auto r = check_tree_abstractions(rel, goal, depth);
    auto depth_text = [](const std::optional<std::size_t> &d) { return d ? std::to_string(*d) : std::string("-"); };
    std::cout << "forward: " << to_string(r.forward) << " (atoms stable at " << depth_text(r.forward_depth)
              << ", trees stable at " << depth_text(r.forward_tree_depth) << ", " << r.forward_trees << " trees)\n";
    std::cout << "backward: " << to_string(r.backward) << " (atoms stable at " << depth_text(r.backward_depth)
              << ", trees stable at " << depth_text(r.backward_tree_depth) << ", " << r.backward_trees
              << " trees)\n";
    std::cout << "combined: " << to_string(r.combined) << " (" << r.common_trees << " common trees)\n";
    if (!r.note.empty())
        std::cout << "note: " << r.note << "\n";
    return r.any_fail() ? exit_fail : exit_safe;
}

int cmd_check(const std::string &file, const std::string &model_file) {
    auto sys = parse_system(read_text(file));
    auto model = parse_model_file(read_text(model_file), sys);
    auto bad = check_model(sys, model);
    if (bad.empty()) {
        std::cout << "PASS\n";
        return exit_safe;
    }
    std::cout << "FAIL\n";
    for (auto &v : bad)
        std::cout << describe(sys, v) << "\n";
    return exit_fail;
}

int cmd_qa(const std::string &file) {
    auto sys = parse_system(read_text(file));
    std::cout << to_string(qa_transform(sys).system);
    return exit_safe;
}

} // namespace

int main(int argc, char **argv) {
    CLI::App app{"Forward/backward abstract interpretation of constrained Horn clauses"};
    app.require_subcommand(1);

    std::string file, model_file;
    std::vector<std::string> files;
    solve_options sopt;
    auto *solve = app.add_subcommand("solve", "analyze a system");
    solve->add_option("file", file)->required();
    sopt.attach(solve);
    solve->add_option("--json", sopt.json_path, "write a JSON report ('-' for stdout)");
    solve->add_option("--model-out", sopt.model_out, "write the refined model file");

    auto *batch = app.add_subcommand("batch", "analyze several systems");
    batch->add_option("files", files)->required();
    sopt.attach(batch);

    std::string semantics = "combined";
    bool restriction_check = false;
    auto *oracle = app.add_subcommand("oracle", "concrete semantics over the declared universe");
    oracle->add_option("file", file)->required();
    oracle->add_option("--semantics", semantics)->check(CLI::IsMember({"fwd", "bwd", "combined"}));
    oracle->add_flag("--check-prop1", restriction_check, "verify the forward-restriction identity");

    std::size_t depth = 4;
    bool check_props = false;
    auto *trees = app.add_subcommand("trees", "derivation tree enumeration");
    trees->add_option("file", file)->required();
    trees->add_option("--depth", depth)->check(CLI::PositiveNumber);
    trees->add_flag("--check-props", check_props, "compare tree abstractions with the collecting semantics");

    auto *check = app.add_subcommand("check", "check a model file against a system");
    check->add_option("file", file)->required();
    check->add_option("model", model_file)->required();

    auto *qa = app.add_subcommand("qa", "print the query-answer transformed system");
    qa->add_option("file", file)->required();

    unsigned seed = 0;
    gen::options gopt;
    auto *gen_cmd = app.add_subcommand("gen", "print a random finite-universe system");
    gen_cmd->add_option("--seed", seed);
    gen_cmd->add_option("--max-preds", gopt.max_preds);
    gen_cmd->add_option("--max-arity", gopt.max_arity);
    gen_cmd->add_option("--max-clauses", gopt.max_clauses);
    gen_cmd->add_option("--universe-hi", gopt.universe_hi);
    gen_cmd->add_flag("--acyclic", gopt.acyclic);
    gen_cmd->add_flag("--explicit-goal", gopt.explicit_goal);

    CLI11_PARSE(app, argc, argv);

    try {
        if (*solve)
            return cmd_solve(file, sopt);
        if (*batch)
            return cmd_batch(files, sopt);
        if (*oracle)
            return cmd_oracle(file, semantics, restriction_check);
        if (*trees)
            return cmd_trees(file, depth, check_props);
        if (*check)
            return cmd_check(file, model_file);
        if (*qa)
            return cmd_qa(file);
        if (*gen_cmd) {
            std::cout << gen::random_system_text(seed, gopt);
            return exit_safe;
        }
    } catch (const parse_error &e) {
        std::cerr << "parse error: " << e.what() << "\n";
        return exit_input;
    } catch (const input_error &e) {
        std::cerr << "input error: " << e.what() << "\n";
        return exit_input;
    } catch (const resource_error &e) {
        std::cerr << "resource limit: " << e.what() << "\n";
        return exit_resource;
    } catch (const std::exception &e) {
        std::cerr << "error: " << e.what() << "\n";
        return exit_fail;
    }
    return exit_fail;
}
