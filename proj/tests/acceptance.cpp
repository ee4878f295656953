// Acceptance suite: one PASS/FAIL line per criterion, nonzero exit on any FAIL.

#include <chrono>
#include <fstream>
#include <functional>
#include <iostream>
#include <set>
#include <sstream>

#include "rpasched/baselines.hpp"
#include "rpasched/cli.hpp"
#include "rpasched/decompose.hpp"
#include "rpasched/generate.hpp"
#include "rpasched/io.hpp"
#include "rpasched/reduction.hpp"
#include "rpasched/solver.hpp"
#include "json.hpp"
#include "test_support.hpp"

using namespace rpasched;

namespace {

using Clock = std::chrono::steady_clock;

struct Outcome {
    bool pass = true;
    std::string detail;
};

int failures = 0;

void criterion(int id, const std::string& name, double limit_s, const std::function<Outcome()>& body) {
    const auto t0 = Clock::now();
    Outcome o;
    try {
        o = body();
    } catch (const std::exception& e) {
        o = {false, std::string("exception: ") + e.what()};
    }
    const double secs = std::chrono::duration<double>(Clock::now() - t0).count();
    if (limit_s > 0 && secs >= limit_s) {
        o.pass = false;
        o.detail += " (over the " + std::to_string(limit_s) + " s limit)";
    }
    std::ostringstream line;
    line << (o.pass ? "PASS" : "FAIL") << " " << id << " " << name << ": " << o.detail << " [" << secs << " s]";
    std::cout << line.str() << std::endl;
    if (!o.pass) ++failures;
}

Outcome fail_at(const std::string& what, std::uint64_t seed) { return {false, what + " at seed " + std::to_string(seed)}; }

Outcome guard_layout() {
    std::ostringstream out, err;
    if (run_cli({"reduce", "--construction", "1", "--p", "1", "--q", "2", "--v", "011", "--u", "011"}, out, err) != kExitOk)
        return {false, "reduce failed: " + err.str()};
    const Instance inst = parse_instance(out.str());
    std::vector<Time> releases;
    for (const Job& j : inst.jobs) {
        if (j.id[0] != 'g') continue;
        if (j.processing != 1 || j.window() != 1) return {false, "guard " + j.id + " is not rigid with length 1"};
        releases.push_back(j.release);
    }
    if (releases != std::vector<Time>{0, 2, 5, 8}) return {false, "guard releases differ"};

    const std::string path = "reduce_011_instance.json";
    std::ofstream(path) << out.str();
    std::ostringstream solved, err2;
    const int code = run_cli({"solve", path, "--no-stats"}, solved, err2);
    const auto doc = nlohmann::json::parse(solved.str());
    if (code != kExitOk || doc["cmax"] != 9) return {false, "solve gave " + solved.str()};
    return {true, "guards at 0,2,5,8; cmax 9 via " + doc["algorithm"].get<std::string>()};
}

Outcome two_word_shuffle() {
    const std::set<std::string> expect{"abcd", "acbd", "acdb", "cdab", "cabd", "cadb"};
    const auto got = enumerate_shuffle({"ab", "cd"});
    if (got != expect) return {false, std::to_string(got.size()) + " words, not the expected six"};
    return {true, "exactly the 6 interleavings"};
}

Outcome dp_vs_oracle() {
    std::size_t feasible = 0;
    for (std::uint64_t seed = 0; seed < 1000; ++seed) {
        GenOptions opt;
        opt.seed = seed;
        opt.n = 1 + seed % 9;
        opt.width = 1 + (seed / 9) % 3;
        opt.horizon = 30;
        const Instance inst = generate_instance(opt);
        if (width(inst) > 3) return fail_at("width above 3", seed);
        const SolveResult dp = solve_width_dp(inst);
        const OracleResult oracle = oracle_solve(inst);
        if (dp.feasible != oracle.feasible || dp.cmax != oracle.cmax) return fail_at("DP and oracle disagree", seed);
        if (dp.feasible) {
            const auto report = validate_schedule(inst, *dp.schedule);
            if (!report.feasible() || report.cmax != *dp.cmax) return fail_at("DP witness invalid", seed);
            const auto oracle_report = validate_schedule(inst, *oracle.schedule);
            if (!oracle_report.feasible() || oracle_report.cmax != *oracle.cmax) return fail_at("oracle witness invalid", seed);
            ++feasible;
        }
    }
    return {true, "1000 seeds agree (" + std::to_string(feasible) + " feasible)"};
}

Outcome reduction_biconditional() {
    std::size_t yes = 0;
    for (std::uint64_t seed = 0; seed < 500; ++seed) {
        const ShuffleInstance si = random_shuffle_instance(seed, 3, 8);
        for (int which : {1, 2}) {
            const CertReport rep = certify_reduction(si, which, 1, 2);
            if (rep.shuffle_member != rep.schedule_feasible) return fail_at("biconditional broken", seed);
            if (which == 2) {
                const auto stats = instance_stats(construct_2(si, 1, 2).instance);
                if (!stats.prec_consistent) return fail_at("construction 2 not prec-consistent", seed);
                if (stats.num_window_sizes > 2) return fail_at("construction 2 has more than 2 window sizes", seed);
                if (stats.num_processing_times > 3) return fail_at("construction 2 has more than 3 processing times", seed);
            } else {
                yes += rep.shuffle_member;
            }
        }
    }
    return {true, "500 seeds x 2 constructions (" + std::to_string(yes) + " yes-instances)"};
}

Outcome edd_bound() {
    Time worst = 0;
    for (std::uint64_t seed = 0; seed < 500; ++seed) {
        GenOptions opt;
        opt.seed = seed;
        opt.n = 1 + seed % 9;
        opt.width = 1 + seed % 3;
        opt.profile = Profile::AgreeableQueues;
        const Instance inst = generate_instance(opt);
        const OracleResult oracle = oracle_solve(inst);
        const EddReport edd = edd_schedule(inst, oracle.lmax_opt);
        const Time gap = *edd.bound_gap_certificate;
        if (gap > instance_stats(inst).max_processing - 1) return fail_at("gap " + std::to_string(gap) + " above p_max - 1", seed);
        worst = std::max(worst, gap);
    }
    return {true, "500 seeds, largest gap " + std::to_string(worst)};
}

Outcome single_window() {
    std::size_t feasible = 0;
    for (std::uint64_t seed = 0; seed < 500; ++seed) {
        GenOptions opt;
        opt.seed = seed;
        opt.n = 1 + seed % 9;
        opt.width = 1 + seed % 3;
        opt.profile = Profile::SingleWindow;
        const Instance inst = generate_instance(opt);
        const SolveResult sw = solve_single_window(inst);
        const OracleResult oracle = oracle_solve(inst);
        if (sw.feasible != oracle.feasible) {
            const std::string path = "single_window_counterexample_" + std::to_string(seed) + ".json";
            std::ofstream(path) << serialize_instance(inst);
            return fail_at("verdict differs (dumped to " + path + ")", seed);
        }
        feasible += sw.feasible;
    }
    return {true, "500 seeds agree (" + std::to_string(feasible) + " feasible)"};
}

Outcome chain_uniform_drop() {
    std::size_t feasible = 0;
    for (std::uint64_t seed = 0; seed < 300; ++seed) {
        GenOptions opt;
        opt.seed = seed;
        opt.n = 1 + seed % 9;
        opt.width = 1 + seed % 3;
        opt.profile = Profile::ChainUniform;
        const Instance inst = generate_instance(opt);
        const Instance dropped = drop_precedence_if_chain_uniform(inst);
        const bool a = oracle_solve(inst).feasible;
        if (a != oracle_solve(dropped).feasible) return fail_at("feasibility changed", seed);
        feasible += a;
    }
    return {true, "300 seeds agree (" + std::to_string(feasible) + " feasible)"};
}

Outcome xp_smoke(std::size_t k, std::size_t length, std::size_t max_states, double limit_s) {
    const Instance inst = loose_chains_instance(k, length, 42);
    const auto t0 = Clock::now();
    const SolveResult r = solve_width_dp(inst);
    const double secs = std::chrono::duration<double>(Clock::now() - t0).count();
    if (!r.feasible) return {false, "loose instance reported infeasible"};
    if (r.states_explored > max_states) return {false, std::to_string(r.states_explored) + " states"};
    if (secs >= limit_s) return {false, std::to_string(secs) + " s"};
    return {true, std::to_string(k) + "x" + std::to_string(length) + ": " + std::to_string(r.states_explored) + " states"};
}

Outcome dilworth() {
    for (std::uint64_t seed = 0; seed < 300; ++seed) {
        Rng rng(seed);
        const auto n = static_cast<std::size_t>(rng.between(1, 10));
        const auto density = static_cast<unsigned>(rng.between(5, 60));
        Instance inst;
        for (std::size_t i = 0; i < n; ++i) inst.jobs.push_back({"j" + std::to_string(i), 0, 1, 100});
        for (std::size_t i = 0; i < n; ++i)
            for (std::size_t k = i + 1; k < n; ++k)
                if (rng.chance(density)) inst.prec_edges.emplace_back(inst.jobs[i].id, inst.jobs[k].id);
        if (min_chain_decomposition(inst).size() != testing::brute_force_max_antichain(inst))
            return fail_at("chain count differs from the largest antichain", seed);
    }
    return {true, "300 DAGs agree"};
}

}  // namespace

int main() {
    criterion(1, "reduction guard layout", 1.0, guard_layout);
    criterion(2, "shuffle of ab and cd", 0, two_word_shuffle);
    criterion(3, "width DP matches oracle", 60.0, dp_vs_oracle);
    criterion(4, "reduction biconditional", 120.0, reduction_biconditional);
    criterion(5, "EDD lateness bound", 0, edd_bound);
    criterion(6, "single-window exactness", 0, single_window);
    criterion(7, "chain-uniform precedence drop", 0, chain_uniform_drop);
    criterion(8, "XP scaling smoke", 0, [] {
        Outcome a = xp_smoke(3, 20, 21 * 21 * 21, 1.0);
        Outcome b = xp_smoke(4, 15, 16 * 16 * 16 * 16, 5.0);
        return Outcome{a.pass && b.pass, a.detail + "; " + b.detail};
    });
    criterion(9, "Dilworth consistency", 0, dilworth);
    std::cout << (failures == 0 ? "all criteria passed" : std::to_string(failures) + " criteria failed") << std::endl;
    return failures == 0 ? 0 : 1;
}
