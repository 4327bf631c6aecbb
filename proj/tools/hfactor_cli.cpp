// Command-line front end: greedy runs, adversary construction, verification,
// bounds, characterization, repair, brute-force oracle, and parameter sweeps.
//
// Exit codes: 0 = all claims held, 1 = usage/configuration error,
// 2 = theorem violation observed (witness printed).
#include <CLI11.hpp>
#include <json.hpp>

#include "hfactor/hfactor.hpp"

#include <cstdlib>
#include <filesystem>
#include <fstream>
#include <iostream>
#include <sstream>

using namespace hfactor;
using ordered_json = nlohmann::ordered_json;

namespace {

FactorShape make_shape(const std::string& kind, int k) {
    if (kind == "clique") return FactorShape::clique(k);
    if (kind == "cycle") return FactorShape::cycle(k);
    throw CLI::ValidationError("--shape must be clique or cycle");
}

ordered_json tournament_json(const Tournament& t) {
    ordered_json j;
    j["shape"] = t.shape.kind == ShapeKind::Clique ? "clique" : "cycle";
    j["k"] = t.shape.k;
    j["n"] = t.n;
    j["rounds"] = ordered_json::array();
    for (const Round& r : t.rounds) {
        ordered_json jr = ordered_json::array();
        for (const Block& b : r.blocks) jr.push_back(b.verts);
        j["rounds"].push_back(jr);
    }
    return j;
}

void emit(const ordered_json& j, const std::string& format, const std::string& out_path) {
    std::string text;
    if (format == "json") {
        text = j.dump(2) + "\n";
    } else {
        std::ostringstream os;
        // flat key: value lines; nested values rendered as compact JSON
        for (auto& [key, val] : j.items())
            os << key << ": " << (val.is_string() ? val.get<std::string>() : val.dump()) << "\n";
        text = os.str();
    }
    if (out_path.empty()) {
        std::cout << text;
    } else {
        std::ofstream f(out_path);
        if (!f) throw IoError("cannot open output file " + out_path);
        f << text;
    }
}

Tournament load_tournament(const std::string& path) {
    std::ifstream f(path);
    if (!f) throw IoError("cannot open " + path);
    return read_tournament(f);
}

void save_tournament(const std::string& path, const Tournament& t) {
    std::ofstream f(path);
    if (!f) throw IoError("cannot open output file " + path);
    write_tournament(f, t);
}

std::filesystem::path cache_dir() {
    if (const char* env = std::getenv("HFACTOR_CACHE_DIR")) return env;
    return ".hfactor_cache";
}

} // namespace

int main(int argc, char** argv) {
    CLI::App app{"greedy H-factor tournament toolkit"};
    app.require_subcommand(1);

    std::string shape_kind = "clique", format = "text", out_path, in_path, family, mode = "min";
    int n = 0, k = 2, i = 1, trials = 100, n_from = 0, n_to = 0, step = 0, limit = 0;
    std::uint64_t seed = 0;
    long long pool = 1000;
    std::string strategy_name = "first";
    bool explain = false, strict = false;
    int exit_code = 0;

    auto add_common = [&](CLI::App* cmd) {
        cmd->add_option("--format", format)->check(CLI::IsMember({"json", "text"}));
        cmd->add_option("--out", out_path);
    };

    CLI::App* c_run = app.add_subcommand("run", "one greedy run");
    c_run->add_option("--n", n)->required();
    c_run->add_option("--shape", shape_kind);
    c_run->add_option("--k", k);
    c_run->add_option("--strategy", strategy_name)->check(CLI::IsMember({"first", "random"}));
    c_run->add_option("--seed", seed);
    c_run->add_option("--pool", pool);
    add_common(c_run);

    CLI::App* c_construct = app.add_subcommand("construct", "build an adversarial tournament");
    c_construct->add_option("family", family)
        ->required()
        ->check(CLI::IsMember({"roundrobin", "matching", "clique", "cycle-odd", "cycle-mod4",
                               "cycle-mod2"}));
    c_construct->add_option("--n", n);
    c_construct->add_option("--k", k);
    c_construct->add_option("--i", i);
    c_construct->add_flag("--explain", explain);
    add_common(c_construct);

    CLI::App* c_verify = app.add_subcommand("verify", "check a tournament file");
    c_verify->add_option("--in", in_path)->required();
    add_common(c_verify);

    CLI::App* c_bound = app.add_subcommand("bound", "bound formulas for (n, shape)");
    c_bound->add_option("--n", n)->required();
    c_bound->add_option("--shape", shape_kind);
    c_bound->add_option("--k", k);
    add_common(c_bound);

    CLI::App* c_char = app.add_subcommand("characterize", "stuck-state characterization");
    c_char->add_option("--in", in_path)->required();
    add_common(c_char);

    CLI::App* c_repair = app.add_subcommand("repair", "replace last round and gain one");
    c_repair->add_option("--in", in_path)->required();
    add_common(c_repair);

    CLI::App* c_oracle = app.add_subcommand("oracle", "exhaustive tiny-scale ground truth");
    c_oracle->add_option("--n", n)->required();
    c_oracle->add_option("--shape", shape_kind);
    c_oracle->add_option("--k", k);
    c_oracle->add_option("--mode", mode)->check(CLI::IsMember({"min", "max", "characterize"}));
    c_oracle->add_option("--limit", limit);
    add_common(c_oracle);

    CLI::App* c_sweep = app.add_subcommand("sweep", "survey bounds across n");
    c_sweep->add_option("--n-from", n_from)->required();
    c_sweep->add_option("--n-to", n_to)->required();
    c_sweep->add_option("--step", step);
    c_sweep->add_option("--shape", shape_kind);
    c_sweep->add_option("--k", k);
    c_sweep->add_option("--trials", trials);
    c_sweep->add_option("--seed", seed);
    c_sweep->add_flag("--strict", strict);
    add_common(c_sweep);

    try {
        app.parse(argc, argv);
    } catch (const CLI::ParseError& e) {
        int code = app.exit(e);
        return code == 0 ? 0 : 1;  // normalize all usage errors to 1
    }

    try {
        if (c_run->parsed()) {
            FactorShape shape = make_shape(shape_kind, k);
            Strategy strat = strategy_name == "random" ? Strategy::random(seed, pool)
                                                       : Strategy::first_found();
            GreedyReport rep = run_greedy(n, shape, strat);
            ordered_json j;
            j["n"] = n;
            j["shape"] = shape.name();
            j["strategy"] = strategy_name;
            j["seed"] = seed;
            j["rounds_played"] = rep.rounds_played;
            j["stuck"] = rep.stuck;
            j["guarantee"] = rep.guarantee;
            ordered_json trace = ordered_json::array();
            for (int r = 0; r <= rep.rounds_played; ++r)
                trace.push_back(n - 1 - r * shape.degree_loss());
            j["degree_trace"] = trace;
            j["tournament"] = tournament_json(rep.tournament);
            if (rep.stuck && rep.rounds_played < rep.guarantee) {
                j["theorem_violation"] = true;
                exit_code = 2;
            }
            emit(j, format, out_path);
        } else if (c_construct->parsed()) {
            BuiltTournament bt;
            if (family == "roundrobin") {
                bt.tournament = round_robin_circle(n);
            } else if (family == "matching") {
                bt = construct_matching_adversary(n);
            } else if (family == "clique") {
                bt = construct_clique_adversary(n, k);
            } else if (family == "cycle-odd") {
                bt = construct_cycle_adversary_odd(k, i);
            } else if (family == "cycle-mod4") {
                bt = construct_cycle_adversary_mod4(k, i);
            } else {
                bt = construct_cycle_adversary_mod2(k, i);
            }
            if (!out_path.empty()) save_tournament(out_path, bt.tournament);
            ordered_json j;
            j["family"] = family;
            j["n"] = bt.tournament.n;
            j["rounds"] = bt.tournament.rounds_played();
            if (explain) {
                j["split_a"] = bt.split.side_a;
                j["split_b"] = bt.split.side_b;
                j["stuck"] = find_factor(feasibility_graph(bt.tournament),
                                         bt.tournament.shape).status == SearchStatus::NotFound;
            }
            if (out_path.empty()) j["tournament"] = tournament_json(bt.tournament);
            else j["written_to"] = out_path;
            emit(j, format, "");
        } else if (c_verify->parsed()) {
            Tournament t = load_tournament(in_path);
            ValidityReport rep = verify_tournament(t);
            ordered_json j;
            j["valid"] = rep.valid;
            j["complete"] = rep.complete;
            j["issues"] = rep.issues;
            emit(j, format, out_path);
            if (!rep.valid) exit_code = 1;
        } else if (c_bound->parsed()) {
            FactorShape shape = make_shape(shape_kind, k);
            BoundReport b = guarantee_bound(n, shape);
            RatioReport r = approx_ratio(n, shape);
            ordered_json j;
            j["n"] = n;
            j["shape"] = shape.name();
            j["guarantee"] = b.guarantee;
            if (b.conditional_guarantee) j["conditional_guarantee"] = *b.conditional_guarantee;
            j["conditional"] = b.conditional_guarantee.has_value();
            j["opt_upper"] = b.opt_upper;
            j["instance_ratio"] = r.instance.str();
            if (r.worst_case) j["worst_case_ratio"] = r.worst_case->str();
            emit(j, format, out_path);
        } else if (c_char->parsed()) {
            Tournament t = load_tournament(in_path);
            ordered_json j;
            j["shape"] = t.shape.name();
            if (t.shape == FactorShape::clique(2)) {
                MatchingStuckVerdict v = characterize_matching_stuck(t);
                j["is_stuck"] = v.is_stuck;
                j["complement_is_knn"] = v.complement_is_knn;
                j["n_half_odd"] = v.n_half_odd;
                j["biconditional_holds"] = v.biconditional_holds();
                j["conditional"] = false;
                if (!v.biconditional_holds()) exit_code = 2;
            } else if (t.shape.kind == ShapeKind::Clique) {
                CliqueStuckVerdict v = check_clique_stuck_characterization(t);
                j["is_stuck"] = v.is_stuck;
                j["has_big_clique"] = v.has_big_clique;
                j["conditional"] = v.conditional;
                j["counterexample_candidate"] = v.counterexample_candidate();
                if (v.counterexample_candidate()) exit_code = 2;
            } else {
                throw WrongShapeError("characterize: clique shapes only");
            }
            emit(j, format, out_path);
        } else if (c_repair->parsed()) {
            Tournament t = load_tournament(in_path);
            Tournament rep = repair_plus_one(t);
            if (!out_path.empty()) save_tournament(out_path, rep);
            ordered_json j;
            j["rounds_before"] = t.rounds_played();
            j["rounds_after"] = rep.rounds_played();
            j["valid"] = verify_tournament(rep).valid;
            if (out_path.empty()) j["tournament"] = tournament_json(rep);
            emit(j, format, "");
        } else if (c_oracle->parsed()) {
            FactorShape shape = make_shape(shape_kind, k);
            std::filesystem::path dir = cache_dir();
            std::filesystem::create_directories(dir);
            std::string key = "oracle_" + std::to_string(n) + "_" + shape.name() + "_" + mode;
            for (auto& c : key)
                if (c == '(' || c == ')') c = '_';
            std::filesystem::path cache_file = dir / (key + ".json");
            ordered_json j;
            bool from_cache = false;
            if (std::filesystem::exists(cache_file)) {
                std::ifstream f(cache_file);
                j = ordered_json::parse(f);
                from_cache = true;
            } else {
                OracleOptions opts;
                opts.max_vertices = limit;
                if (mode == "characterize") {
                    CharacterizationSweep sw = exhaustive_characterization_check(n, shape, opts);
                    j["n"] = n;
                    j["shape"] = shape.name();
                    j["mode"] = mode;
                    j["critical_rounds"] = sw.critical_rounds;
                    j["states_checked"] = sw.states_checked;
                    j["stuck_states"] = sw.stuck_states;
                    j["holds"] = sw.holds();
                } else {
                    OracleResult r = oracle_depths(n, shape, opts);
                    j["n"] = n;
                    j["shape"] = shape.name();
                    j["mode"] = mode;
                    j["depth"] = mode == "min" ? r.min_depth : r.max_depth;
                    j["min_depth"] = r.min_depth;
                    j["max_depth"] = r.max_depth;
                    j["states_explored"] = r.states_explored;
                    if (mode == "min") j["witness"] = tournament_json(r.witness_min);
                }
                std::ofstream f(cache_file);
                f << j.dump(2) << "\n";
            }
            j["cached"] = from_cache;
            if (j.contains("holds") && !j["holds"].get<bool>()) exit_code = 2;
            emit(j, format, out_path);
        } else if (c_sweep->parsed()) {
            FactorShape shape = make_shape(shape_kind, k);
            if (step == 0) step = shape.k;
            ordered_json rows = ordered_json::array();
            for (int nn = n_from; nn <= n_to; nn += step) {
                if (nn % shape.k != 0) {
                    if (strict) throw DivisibilityError("sweep: " + std::to_string(nn) +
                                                        " not divisible by k");
                    std::cerr << "warning: skipping n=" << nn << " (not divisible by k)\n";
                    continue;
                }
                BoundReport b = guarantee_bound(nn, shape);
                int min_obs = -1, max_obs = -1, stuck_count = 0;
                for (int tr = 0; tr < trials; ++tr) {
                    GreedyReport rep =
                        run_greedy(nn, shape, Strategy::random(seed + std::uint64_t(tr)));
                    if (rep.stuck) ++stuck_count;
                    if (min_obs < 0 || rep.rounds_played < min_obs) min_obs = rep.rounds_played;
                    if (rep.rounds_played > max_obs) max_obs = rep.rounds_played;
                }
                ordered_json row;
                row["n"] = nn;
                row["guarantee"] = b.guarantee;
                row["min_observed"] = min_obs;
                row["max_observed"] = max_obs;
                row["stuck_frequency"] = trials ? double(stuck_count) / trials : 0.0;
                rows.push_back(row);
                if (min_obs >= 0 && min_obs < b.guarantee) exit_code = 2;
            }
            ordered_json j;
            j["shape"] = shape.name();
            j["trials"] = trials;
            j["seed"] = seed;
            j["rows"] = rows;
            if (exit_code == 2) j["theorem_violation"] = true;
            emit(j, format, out_path);
        }
    } catch (const std::exception& e) {
        std::cerr << "error: " << e.what() << "\n";
        return 1;
    }
    return exit_code;
}
