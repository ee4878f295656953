#include "rpasched/cli.hpp"

#include <algorithm>
#include <chrono>
#include <cmath>
#include <fstream>
#include <functional>
#include <iomanip>
#include <iostream>
#include <sstream>

#include "CLI11.hpp"
#include "json.hpp"
#include "rpasched/baselines.hpp"
#include "rpasched/decompose.hpp"
#include "rpasched/generate.hpp"
#include "rpasched/io.hpp"
#include "rpasched/reduction.hpp"
#include "rpasched/solver.hpp"

namespace rpasched {

namespace {

using Clock = std::chrono::steady_clock;

double elapsed_ms(Clock::time_point since) {
    return std::chrono::duration<double, std::milli>(Clock::now() - since).count();
}

std::string read_source(const std::string& path) {
    std::ostringstream buf;
    if (path == "-") {
        buf << std::cin.rdbuf();
    } else {
        std::ifstream in(path);
        if (!in) fail(ErrorCode::ParseError, path + ":0: cannot open file");
        buf << in.rdbuf();
    }
    return buf.str();
}

Instance load_instance(const std::string& path) { return parse_instance(read_source(path), path == "-" ? "<stdin>" : path); }

SolveResult from_oracle(const OracleResult& o) {
    SolveResult r;
    r.algorithm = "oracle";
    r.feasible = o.feasible;
    r.cmax = o.cmax;
    r.schedule = o.schedule;
    r.lmax = o.lmax_opt;
    r.states_explored = o.nodes;
    return r;
}

SolveResult from_edd(const Instance& inst) {
    const EddReport edd = edd_schedule(inst);
    SolveResult r;
    r.algorithm = "edd";
    r.lmax = edd.lmax_edd;
    r.feasible = edd.lmax_edd <= 0;
    r.states_explored = inst.jobs.size();
    if (r.feasible) {
        r.cmax = edd.cmax;
        r.schedule = edd.schedule;
    }
    return r;
}

SolveResult dispatch(const Instance& inst, const std::string& algo) {
    if (algo == "chain-dp")
        return solve_chain_dp(inst, inst.declared_chains ? declared_decomposition(inst) : min_chain_decomposition(inst));
    if (algo == "width-dp") return solve_width_dp(inst);
    if (algo == "edd") return from_edd(inst);
    if (algo == "single-window") return solve_single_window(inst);
    if (algo == "oracle") return from_oracle(oracle_solve(inst));
    // auto
    const InstanceStats stats = instance_stats(inst);
    if (stats.num_window_sizes <= 1 && stats.prec_consistent) return solve_single_window(inst);
    if (inst.declared_chains) return solve_chain_dp(inst, declared_decomposition(inst));
    return solve_width_dp(inst);
}

template <typename F>
double median_ms(F&& run, int repeats = 5) {
    run();  // warmup, discarded
    std::vector<double> samples;
    for (int i = 0; i < repeats; ++i) {
        const auto t0 = Clock::now();
        run();
        samples.push_back(elapsed_ms(t0));
    }
    std::sort(samples.begin(), samples.end());
    return samples[samples.size() / 2];
}

struct BenchRow {
    std::string label;
    std::size_t n;
    std::size_t k;
    std::string algorithm;
    double wall_ms;
    std::size_t states;
    std::string bound;  // n^k for the DP rows, otherwise a suite-specific note
};

void print_rows(std::ostream& out, const std::vector<BenchRow>& rows, const std::string& last_header) {
    out << std::left << std::setw(22) << "label" << std::setw(6) << "n" << std::setw(6) << "k/w" << std::setw(14) << "algorithm"
        << std::setw(12) << "wall_ms" << std::setw(12) << "states" << last_header << "\n";
    for (const auto& row : rows) {
        std::ostringstream ms;
        ms << std::fixed << std::setprecision(3) << row.wall_ms;
        out << std::left << std::setw(22) << row.label << std::setw(6) << row.n << std::setw(6) << row.k << std::setw(14)
            << row.algorithm << std::setw(12) << ms.str() << std::setw(12) << row.states << row.bound << "\n";
    }
}

std::string power(std::size_t base, std::size_t exp) {
    long double v = 1;
    for (std::size_t i = 0; i < exp; ++i) v *= static_cast<long double>(base);
    std::ostringstream s;
    s << std::setprecision(12) << v;
    return s.str();
}

int bench(const std::string& suite, std::size_t seeds, std::ostream& out) {
    std::vector<BenchRow> rows;
    if (suite == "dp-scaling") {
        for (std::size_t k = 1; k <= 4; ++k) {
            for (std::size_t m : {5, 10, 15, 20}) {
                if (k == 4 && m > 15) continue;
                const Instance inst = loose_chains_instance(k, m, 1000 + k * 100 + m);
                SolveResult last;
                const double ms = median_ms([&] { last = solve_width_dp(inst); });
                rows.push_back({"chains" + std::to_string(k) + "x" + std::to_string(m), inst.jobs.size(), k, "width-dp", ms,
                                last.states_explored, power(inst.jobs.size(), k)});
            }
        }
        print_rows(out, rows, "n^k");
    } else if (suite == "edd-vs-opt") {
        for (std::size_t seed = 0; seed < seeds; ++seed) {
            GenOptions opt;
            opt.n = 9;
            opt.width = 3;
            opt.seed = seed;
            opt.profile = Profile::AgreeableQueues;
            const Instance inst = generate_instance(opt);
            const Time pmax = instance_stats(inst).max_processing;
            OracleResult oracle;
            const double oracle_ms = median_ms([&] { oracle = oracle_solve(inst); });
            EddReport edd;
            const double edd_ms = median_ms([&] { edd = edd_schedule(inst, oracle.lmax_opt); });
            const std::string label = "agreeable-s" + std::to_string(seed);
            rows.push_back({label, inst.jobs.size(), 3, "oracle", oracle_ms, oracle.nodes, "lmax=" + std::to_string(oracle.lmax_opt)});
            rows.push_back({label, inst.jobs.size(), 3, "edd", edd_ms, inst.jobs.size(),
                            "gap=" + std::to_string(*edd.bound_gap_certificate) + " bound=" + std::to_string(pmax - 1)});
        }
        print_rows(out, rows, "lmax / gap");
    } else if (suite == "reduction") {
        for (std::size_t seed = 0; seed < seeds; ++seed) {
            const ShuffleInstance si = random_shuffle_instance(seed, 3, 8);
            for (int which : {1, 2}) {
                CertReport rep;
                const double ms = median_ms([&] { rep = certify_reduction(si, which, 1, 2); });
                const Construction c = which == 1 ? construct_1(si, 1, 2) : construct_2(si, 1, 2);
                rows.push_back({"shuffle-s" + std::to_string(seed) + "-c" + std::to_string(which), c.instance.jobs.size(),
                                c.instance.declared_chains->size(), "width-dp", ms, rep.dp_states, rep.shuffle_member ? "yes" : "no"});
            }
        }
        print_rows(out, rows, "member");
    } else {
        fail(ErrorCode::ParseError, "unknown suite '" + suite + "'");
    }
    return kExitOk;
}

nlohmann::json shuffle_json(const ShuffleInstance& si) { return {{"u", si.u_words}, {"v", si.v_word}}; }

}  // namespace

int run_cli(const std::vector<std::string>& args, std::ostream& out, std::ostream& err) {
    CLI::App app{"Single-machine scheduling with release times, deadlines and precedence chains"};
    app.require_subcommand(1);

    std::string file = "-";
    std::string algo = "auto";
    bool no_stats = false;
    auto* solve = app.add_subcommand("solve", "Solve an instance file; exit 0 feasible, 1 infeasible");
    solve->add_option("file", file, "Instance file, '-' for standard input");
    solve->add_option("--algo", algo, "Algorithm")
        ->check(CLI::IsMember({"auto", "chain-dp", "width-dp", "edd", "single-window", "oracle"}));
    solve->add_flag("--no-stats", no_stats, "Omit the stats block");

    auto* stats = app.add_subcommand("stats", "Print instance parameters");
    stats->add_option("file", file, "Instance file, '-' for standard input");

    int construction = 1;
    Time p = 1, q = 2;
    std::string v_word;
    std::vector<std::string> u_words;
    auto* reduce = app.add_subcommand("reduce", "Build a scheduling instance from shuffle words");
    reduce->add_option("--construction", construction)->check(CLI::IsMember({1, 2}))->required();
    reduce->add_option("--p", p, "Integer for letter '0'")->required();
    reduce->add_option("--q", q, "Integer for letter '1'")->required();
    reduce->add_option("--v", v_word, "Target word over {0,1}");
    reduce->add_option("--u", u_words, "Word over {0,1}; repeat per word")->allow_extra_args(false);

    auto* shuffle = app.add_subcommand("shuffle", "Decide whether v is a shuffle of the u words; exit 0 yes, 1 no");
    shuffle->add_option("--v", v_word, "Target word over {0,1}");
    shuffle->add_option("--u", u_words, "Word over {0,1}; repeat per word")->allow_extra_args(false);

    std::size_t seeds = 100, max_v = 8, max_l = 3;
    std::uint64_t seed_base = 0;
    auto* certify = app.add_subcommand("certify", "Check the reduction on random shuffle instances");
    certify->add_option("--construction", construction)->check(CLI::IsMember({1, 2}))->required();
    certify->add_option("--seeds", seeds);
    certify->add_option("--max-v", max_v);
    certify->add_option("--max-l", max_l);
    certify->add_option("--seed-base", seed_base);
    certify->add_option("--p", p);
    certify->add_option("--q", q);

    GenOptions gen;
    std::string profile = "general";
    auto* gen_random = app.add_subcommand("gen-random", "Emit a random instance file");
    gen_random->add_option("--n", gen.n)->required();
    gen_random->add_option("--width", gen.width);
    gen_random->add_option("--seed", gen.seed);
    gen_random->add_option("--window-sizes", gen.window_sizes);
    gen_random->add_option("--horizon", gen.horizon);
    gen_random->add_option("--max-p", gen.max_processing);
    gen_random->add_option("--profile", profile)
        ->check(CLI::IsMember({"general", "chain-uniform", "single-window", "agreeable-queues"}));

    std::string suite = "dp-scaling";
    std::size_t bench_seeds = 5;
    auto* bench_cmd = app.add_subcommand("bench", "Timing tables");
    bench_cmd->add_option("--suite", suite)->check(CLI::IsMember({"dp-scaling", "edd-vs-opt", "reduction"}));
    bench_cmd->add_option("--seeds", bench_seeds);

    std::vector<std::string> argv_storage{"rpasched"};
    argv_storage.insert(argv_storage.end(), args.begin(), args.end());
    std::vector<char*> argv;
    for (auto& s : argv_storage) argv.push_back(s.data());

    try {
        app.parse(static_cast<int>(argv.size()), argv.data());
    } catch (const CLI::ParseError& e) {
        const int code = app.exit(e, out, err);
        return code == 0 ? kExitOk : kExitError;
    }

    try {
        if (solve->parsed()) {
            const Instance inst = load_instance(file);
            const auto t0 = Clock::now();
            const SolveResult result = dispatch(inst, algo);
            const double ms = elapsed_ms(t0);
            out << serialize_result(result, inst.objective, no_stats ? std::nullopt : std::optional<double>(ms));
            return result.feasible ? kExitOk : kExitNegative;
        }
        if (stats->parsed()) {
            out << serialize_stats(instance_stats(load_instance(file)));
            return kExitOk;
        }
        if (reduce->parsed()) {
            const ShuffleInstance si{u_words, v_word};
            const Construction c = construction == 1 ? construct_1(si, p, q) : construct_2(si, p, q);
            if (c.trivial_no) err << "letter counts differ; emitting the trivial no-instance\n";
            out << serialize_instance(c.instance);
            return kExitOk;
        }
        if (shuffle->parsed()) {
            const ShuffleInstance si{u_words, v_word};
            const ShuffleAnswer answer = shuffle_member(si);
            out << serialize_witness(si, answer);
            return answer.member ? kExitOk : kExitNegative;
        }
        if (certify->parsed()) {
            std::size_t passed = 0, failed = 0, yes = 0;
            for (std::size_t s = 0; s < seeds; ++s) {
                const ShuffleInstance si = random_shuffle_instance(seed_base + s, max_l, max_v);
                try {
                    const CertReport rep = certify_reduction(si, construction, p, q);
                    ++passed;
                    yes += rep.shuffle_member ? 1 : 0;
                } catch (const Error& e) {
                    ++failed;
                    err << "counterexample seed " << seed_base + s << ": " << e.what() << "\n";
                    out << "counterexample " << shuffle_json(si).dump() << "\n";
                }
            }
            out << "construction " << construction << ": " << passed << " passed, " << failed << " failed (" << yes
                << " yes-instances) over " << seeds << " seeds\n";
            return failed == 0 ? kExitOk : kExitNegative;
        }
        if (gen_random->parsed()) {
            gen.profile = *parse_profile(profile);
            const Instance inst = generate_instance(gen);
            std::string why;
            if (!satisfies_profile(inst, gen, &why)) {
                err << "generated instance violates profile " << profile << ": " << why << "\n";
                return kExitError;
            }
            out << serialize_instance(inst);
            return kExitOk;
        }
        if (bench_cmd->parsed()) return bench(suite, bench_seeds, out);
    } catch (const Error& e) {
        err << "error: " << e.what() << "\n";
        return kExitError;
    } catch (const std::exception& e) {
        err << "error: " << e.what() << "\n";
        return kExitError;
    }
    return kExitError;
}

}  // namespace rpasched
