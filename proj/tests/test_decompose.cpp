#include <algorithm>
#include <set>

#include "doctest.h"
#include "rpasched/decompose.hpp"
#include "rpasched/generate.hpp"
#include "test_support.hpp"

using namespace rpasched;
using namespace rpasched::testing;

namespace {

Instance diamond() {
    return make_instance({{"a", 0, 1, 9}, {"b", 0, 1, 9}, {"c", 0, 1, 9}, {"d", 0, 1, 9}},
                         {{"a", "b"}, {"a", "c"}, {"b", "d"}, {"c", "d"}});
}

Instance random_dag(std::uint64_t seed, std::size_t n, unsigned density) {
    Rng rng(seed);
    std::vector<Job> jobs;
    for (std::size_t i = 0; i < n; ++i) jobs.push_back({"j" + std::to_string(i), 0, 1, 100});
    std::vector<IdPair> edges;
    for (std::size_t i = 0; i < n; ++i)
        for (std::size_t k = i + 1; k < n; ++k)
            if (rng.chance(density)) edges.emplace_back(jobs[i].id, jobs[k].id);
    return make_instance(jobs, edges);
}

void check_decomposition(const Instance& inst, const ChainDecomposition& dec) {
    const auto closure = transitive_closure(inst);
    std::vector<int> seen(inst.size(), 0);
    for (const auto& chain : dec.chains) {
        CHECK_FALSE(chain.empty());
        for (std::size_t k = 0; k < chain.size(); ++k) {
            ++seen[chain[k]];
            if (k > 0) CHECK(closure.reaches(chain[k - 1], chain[k]));
        }
    }
    CHECK(std::all_of(seen.begin(), seen.end(), [](int c) { return c == 1; }));
}

}  // namespace

TEST_CASE("closure of a diamond") {
    const auto c = transitive_closure(diamond());
    CHECK(c.reaches(0, 3));
    CHECK_FALSE(c.comparable(1, 2));
    CHECK(c.pair_count() == 5);
}

TEST_CASE("closure matches a naive reference and is idempotent") {
    for (std::uint64_t seed = 0; seed < 200; ++seed) {
        const Instance inst = random_dag(seed, 2 + seed % 11, 10 + seed % 40);
        const auto c = transitive_closure(inst);
        const auto ref = naive_closure(inst);
        std::vector<std::pair<std::size_t, std::size_t>> again;
        for (std::size_t a = 0; a < inst.size(); ++a) {
            for (std::size_t b = 0; b < inst.size(); ++b) {
                REQUIRE(c.reaches(a, b) == ref[a][b]);
                if (ref[a][b]) again.emplace_back(a, b);
            }
        }
        CHECK(transitive_closure(inst.size(), again) == c);
    }
}

TEST_CASE("cycles are rejected") {
    CHECK_THROWS_AS(transitive_closure(2, {{0, 1}, {1, 0}}), Error);
    CHECK_THROWS_AS(transitive_closure(1, {{0, 0}}), Error);
    CHECK_THROWS_AS(topological_order(3, {{0, 1}, {1, 2}, {2, 0}}), Error);
}

TEST_CASE("topological order") {
    CHECK(topological_order(3, {}) == std::vector<std::size_t>{0, 1, 2});
    CHECK(topological_order(3, {{2, 0}}) == std::vector<std::size_t>{1, 2, 0});
}

TEST_CASE("width of small posets") {
    CHECK(width(Instance{}) == 0);
    CHECK(width(make_instance({{"a", 0, 1, 1}})) == 1);
    CHECK(width(diamond()) == 2);
    CHECK(width(make_instance({{"a", 0, 1, 1}, {"b", 0, 1, 1}, {"c", 0, 1, 1}})) == 3);
    // the "N" poset
    CHECK(width(make_instance({{"a", 0, 1, 1}, {"b", 0, 1, 1}, {"c", 0, 1, 1}, {"d", 0, 1, 1}},
                              {{"a", "c"}, {"b", "c"}, {"b", "d"}})) == 2);
}

TEST_CASE("Dilworth: minimum chain count equals the largest antichain") {
    for (std::uint64_t seed = 0; seed < 300; ++seed) {
        const Instance inst = random_dag(seed + 1000, 1 + seed % 10, 5 + seed % 50);
        const auto dec = min_chain_decomposition(inst);
        check_decomposition(inst, dec);
        CHECK(dec.size() == brute_force_max_antichain(inst));
        CHECK(width(inst) == dec.size());
    }
}

TEST_CASE("adding an edge never increases the width") {
    for (std::uint64_t seed = 0; seed < 100; ++seed) {
        Instance inst = random_dag(seed + 7, 8, 15);
        const std::size_t before = width(inst);
        Rng rng(seed);
        const auto a = static_cast<std::size_t>(rng.between(0, 6));
        const auto b = static_cast<std::size_t>(rng.between(static_cast<std::int64_t>(a) + 1, 7));
        inst.prec_edges.emplace_back(inst.jobs[a].id, inst.jobs[b].id);
        CHECK(width(inst) <= before);
    }
}

TEST_CASE("declared chains of minimum size are kept") {
    const std::vector<Job> jobs{{"a", 0, 1, 9}, {"b", 0, 1, 9}, {"c", 0, 1, 9}, {"d", 0, 1, 9}};
    const Instance inst = make_instance(jobs, {{"a", "b"}, {"c", "d"}}, std::vector<std::vector<std::string>>{{"c", "d"}, {"a", "b"}});
    CHECK(min_chain_decomposition(inst).ids(inst) == std::vector<std::vector<std::string>>{{"c", "d"}, {"a", "b"}});

    // four singleton chains are valid but not minimum
    const Instance loose = make_instance(jobs, {{"a", "b"}, {"c", "d"}},
                                         std::vector<std::vector<std::string>>{{"a"}, {"b"}, {"c"}, {"d"}});
    CHECK(min_chain_decomposition(loose).size() == 2);
}

TEST_CASE("check_pure_chains") {
    const Instance inst = diamond();
    const auto closure = transitive_closure(inst);
    ChainDecomposition dec{{{0, 1, 3}, {2}}};
    try {
        check_pure_chains(closure, dec);
        FAIL("expected CrossChainEdge");
    } catch (const Error& e) {
        CHECK(e.code() == ErrorCode::CrossChainEdge);
    }
    try {
        check_pure_chains(closure, ChainDecomposition{{{0, 2, 1}, {3}}});
        FAIL("expected NotAChainPartition");
    } catch (const Error& e) {
        CHECK(e.code() == ErrorCode::NotAChainPartition);
    }
    const auto two = transitive_closure(2, {{0, 1}});
    CHECK_NOTHROW(check_pure_chains(two, ChainDecomposition{{{0, 1}}}));
}

TEST_CASE("prec consistency and proper level") {
    // a before b with r_a <= r_b and d_a <= d_b
    CHECK(prec_consistent(make_instance({{"a", 0, 1, 3}, {"b", 1, 1, 4}}, {{"a", "b"}})));
    CHECK_FALSE(prec_consistent(make_instance({{"a", 2, 1, 5}, {"b", 1, 1, 6}}, {{"a", "b"}})));
    CHECK_FALSE(prec_consistent(make_instance({{"a", 0, 1, 5}, {"b", 0, 1, 4}}, {{"a", "b"}})));
    CHECK(proper_level(make_instance({{"a", 0, 1, 9}, {"b", 1, 1, 3}, {"c", 2, 1, 4}})) == 1);
    CHECK(proper_level(make_instance({{"a", 0, 1, 9}, {"b", 1, 1, 8}, {"c", 2, 1, 3}})) == 2);
    CHECK(proper_level(make_instance({{"a", 0, 1, 2}, {"b", 1, 1, 3}})) == 0);
}

TEST_CASE("chain uniformity") {
    CHECK(chain_uniform(make_instance({{"a", 0, 1, 3}, {"b", 0, 1, 3}, {"c", 1, 2, 9}}, {{"a", "b"}})));
    CHECK_FALSE(chain_uniform(make_instance({{"a", 0, 1, 3}, {"b", 0, 1, 4}}, {{"a", "b"}})));
    CHECK_FALSE(chain_uniform(diamond()));
    CHECK(chain_uniform(Instance{}));
}

TEST_CASE("generated profiles keep their promises") {
    for (std::uint64_t seed = 0; seed < 200; ++seed) {
        GenOptions opt;
        opt.seed = seed;
        opt.n = 1 + seed % 9;
        opt.width = 1 + seed % 3;
        opt.profile = static_cast<Profile>(seed % 4);
        const Instance inst = generate_instance(opt);
        std::string why;
        INFO(why);
        CHECK(satisfies_profile(inst, opt, &why));
        CHECK(width(inst) <= opt.width);
    }
}
