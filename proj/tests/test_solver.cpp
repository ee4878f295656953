#include <algorithm>

#include "doctest.h"
#include "rpasched/baselines.hpp"
#include "rpasched/generate.hpp"
#include "rpasched/solver.hpp"
#include "test_support.hpp"

using namespace rpasched;
using namespace rpasched::testing;

namespace {

using Chains = std::vector<std::vector<std::string>>;

Instance guard_chain() {
    return make_instance({{"g0", 0, 1, 1}, {"g1", 2, 1, 3}, {"g2", 5, 1, 6}, {"g3", 8, 1, 9}},
                         {{"g0", "g1"}, {"g1", "g2"}, {"g2", "g3"}}, Chains{{"g0", "g1", "g2", "g3"}});
}

Instance diamond(Time da) {
    return make_instance({{"a", 0, 1, da}, {"b", 0, 1, 4}, {"c", 0, 1, 4}, {"d", 0, 1, 4}},
                         {{"a", "b"}, {"a", "c"}, {"b", "d"}, {"c", "d"}});
}

void check_witness(const Instance& inst, const SolveResult& r) {
    if (!r.feasible) {
        CHECK_FALSE(r.schedule.has_value());
        return;
    }
    REQUIRE(r.schedule.has_value());
    const auto report = validate_schedule(inst, *r.schedule);
    CHECK(report.feasible());
    CHECK(report.cmax == *r.cmax);
}

/// The jobs of `inst` selected by `keep`, with the precedence restricted.
Instance restrict_to(const Instance& inst, const std::vector<bool>& keep) {
    Instance sub;
    for (std::size_t j = 0; j < inst.size(); ++j)
        if (keep[j]) sub.jobs.push_back(inst.jobs[j]);
    const auto closure = transitive_closure(inst);
    for (std::size_t a = 0; a < inst.size(); ++a)
        for (std::size_t b = 0; b < inst.size(); ++b)
            if (keep[a] && keep[b] && closure.reaches(a, b)) sub.prec_edges.emplace_back(inst.jobs[a].id, inst.jobs[b].id);
    return sub;
}

}  // namespace

TEST_CASE("chain DP on the guard chain") {
    const Instance inst = guard_chain();
    const auto r = solve_chain_dp(inst, declared_decomposition(inst));
    REQUIRE(r.feasible);
    CHECK(r.cmax == 9);
    CHECK(r.schedule->starts == std::map<std::string, Time>{{"g0", 0}, {"g1", 2}, {"g2", 5}, {"g3", 8}});
    CHECK(r.algorithm == "chain-dp");
}

TEST_CASE("chain DP small cases") {
    SUBCASE("empty") {
        const auto r = solve_chain_dp(Instance{}, ChainDecomposition{});
        CHECK(r.feasible);
        CHECK(r.cmax == 0);
    }
    SUBCASE("one slot, two jobs") {
        const Instance inst = make_instance({{"a", 0, 3, 3}, {"b", 0, 3, 3}});
        const auto r = solve_chain_dp(inst, ChainDecomposition{{{0}, {1}}});
        CHECK_FALSE(r.feasible);
        CHECK_FALSE(r.cmax.has_value());
    }
    SUBCASE("two chains, makespan 7") {
        const Instance inst = make_instance({{"a", 0, 2, 10}, {"b", 4, 2, 10}, {"c", 0, 3, 5}}, {{"a", "b"}});
        CHECK(brute_force_start_times(inst) == 7);
        const auto r = solve_chain_dp(inst, ChainDecomposition{{{0, 1}, {2}}});
        CHECK(r.cmax == 7);
        check_witness(inst, r);
    }
    SUBCASE("single job") {
        const Instance inst = make_instance({{"a", 0, 5, 5}});
        const auto r = solve_chain_dp(inst, ChainDecomposition{{{0}}});
        CHECK(r.schedule->starts.at("a") == 0);
    }
    SUBCASE("rejects a cross edge") {
        const Instance inst = diamond(4);
        CHECK_THROWS_AS(solve_chain_dp(inst, ChainDecomposition{{{0, 1, 3}, {2}}}), Error);
    }
}

TEST_CASE("width DP on the diamond") {
    const auto loose = solve_width_dp(diamond(4));
    CHECK(loose.cmax == 4);
    CHECK(brute_force_start_times(diamond(1)) == 4);
    const auto tight = solve_width_dp(diamond(1));
    REQUIRE(tight.feasible);
    CHECK(tight.cmax == 4);
    CHECK(tight.schedule->starts.at("a") == 0);
    check_witness(diamond(1), tight);
    CHECK(tight.algorithm == "width-dp");
}

TEST_CASE("reconstruct_schedule throws on an infinite final state") {
    const Instance inst = make_instance({{"a", 0, 3, 3}, {"b", 0, 3, 3}});
    const ChainDecomposition dec{{{0}, {1}}};
    const auto table = build_dp_table(inst, transitive_closure(inst), dec);
    try {
        reconstruct_schedule(table, inst);
        FAIL("expected InfeasibleNoSchedule");
    } catch (const Error& e) {
        CHECK(e.code() == ErrorCode::InfeasibleNoSchedule);
    }
}

TEST_CASE("width DP agrees with start-time enumeration") {
    std::size_t feasible = 0;
    for (std::uint64_t seed = 0; seed < 150; ++seed) {
        GenOptions opt;
        opt.seed = seed;
        opt.n = 1 + seed % 5;
        opt.width = 1 + seed % 3;
        opt.horizon = 10;
        opt.max_processing = 3;
        const Instance inst = generate_instance(opt);
        const auto expect = brute_force_start_times(inst);
        const auto r = solve_width_dp(inst);
        INFO("seed ", seed);
        CHECK(r.feasible == expect.has_value());
        CHECK(r.cmax == expect);
        check_witness(inst, r);
        feasible += r.feasible;
    }
    CHECK(feasible > 20);
    CHECK(feasible < 140);
}

TEST_CASE("width DP agrees with the oracle") {
    for (std::uint64_t seed = 0; seed < 300; ++seed) {
        GenOptions opt;
        opt.seed = seed;
        opt.n = 1 + seed % 9;
        opt.width = 1 + seed % 3;
        const Instance inst = generate_instance(opt);
        const auto r = solve_width_dp(inst);
        const auto o = oracle_solve(inst);
        INFO("seed ", seed);
        CHECK(r.feasible == o.feasible);
        CHECK(r.cmax == o.cmax);
        check_witness(inst, r);
    }
}

TEST_CASE("DP table values are the optimal makespans of their prefixes") {
    for (std::uint64_t seed = 0; seed < 60; ++seed) {
        GenOptions opt;
        opt.seed = seed;
        opt.n = 2 + seed % 7;
        opt.width = 1 + seed % 3;
        opt.horizon = 40;
        const Instance inst = generate_instance(opt);
        const auto closure = transitive_closure(inst);
        const auto dec = min_chain_decomposition(inst);
        const auto table = build_dp_table(inst, closure, dec);

        std::uint64_t tuples = 1;
        for (const auto& chain : dec.chains) tuples *= chain.size() + 1;
        CHECK(table.size() <= tuples);
        CHECK(table.value(DpTable::Progress(dec.size(), 0)) == 0);

        for (std::uint64_t key = 0; key < tuples; ++key) {
            const auto progress = table.decode(key);
            REQUIRE(table.key(progress) == key);
            std::vector<bool> keep(inst.size(), false);
            for (std::size_t c = 0; c < dec.size(); ++c)
                for (std::size_t k = 0; k < progress[c]; ++k) keep[dec.chains[c][k]] = true;
            bool ideal = true;
            for (std::size_t a = 0; a < inst.size(); ++a)
                for (std::size_t b = 0; b < inst.size(); ++b)
                    if (keep[b] && !keep[a] && closure.reaches(a, b)) ideal = false;
            const auto value = table.value(progress);
            INFO("seed ", seed, " key ", key);
            if (!ideal) {
                CHECK_FALSE(value.has_value());
                continue;
            }
            const auto sub = oracle_solve(restrict_to(inst, keep));
            CHECK(value == sub.cmax);
            // one more job can only push the makespan up
            for (std::size_t c = 0; c < dec.size() && value; ++c) {
                if (progress[c] == dec.chains[c].size()) continue;
                auto bigger = progress;
                ++bigger[c];
                if (auto v = table.value(bigger)) CHECK(*v >= *value);
            }
        }
    }
}

TEST_CASE("chain DP and width DP agree on pure chains") {
    for (std::uint64_t seed = 0; seed < 200; ++seed) {
        GenOptions opt;
        opt.seed = seed;
        opt.n = 1 + seed % 9;
        opt.width = 1 + seed % 3;
        opt.profile = seed % 2 ? Profile::ChainUniform : Profile::AgreeableQueues;
        const Instance inst = generate_instance(opt);
        const auto a = solve_chain_dp(inst, min_chain_decomposition(inst));
        const auto b = solve_width_dp(inst);
        CHECK(a.feasible == b.feasible);
        CHECK(a.cmax == b.cmax);
        check_witness(inst, a);
    }
}

TEST_CASE("loose chains fill the whole progress lattice") {
    const Instance inst = loose_chains_instance(3, 4, 1);
    const auto r = solve_width_dp(inst);
    CHECK(r.feasible);
    CHECK(r.states_explored == 125);
    check_witness(inst, r);
}
