#include <algorithm>
#include <numeric>

#include "rpasched/decompose.hpp"
#include "rpasched/reduction.hpp"
#include "rpasched/solver.hpp"

namespace rpasched {

namespace {

struct Letters {
    Time p, q;
    Time operator()(char c) const { return c == '0' ? p : q; }
};

void check_input(const ShuffleInstance& si, Time p, Time q) {
    if (p <= 0 || p >= q) fail(ErrorCode::BadAlphabetValues, "need 0 < p < q, got p=" + std::to_string(p) + " q=" + std::to_string(q));
    auto binary = [](const std::string& w) {
        return std::all_of(w.begin(), w.end(), [](char c) { return c == '0' || c == '1'; });
    };
    if (!binary(si.v_word)) fail(ErrorCode::NonBinaryAlphabet, "v = '" + si.v_word + "'");
    for (const auto& u : si.u_words)
        if (!binary(u)) fail(ErrorCode::NonBinaryAlphabet, "u = '" + u + "'");
}

bool counts_match(const ShuffleInstance& si) {
    std::ptrdiff_t zeros = std::count(si.v_word.begin(), si.v_word.end(), '0');
    std::ptrdiff_t ones = std::count(si.v_word.begin(), si.v_word.end(), '1');
    for (const auto& u : si.u_words) {
        zeros -= std::count(u.begin(), u.end(), '0');
        ones -= std::count(u.begin(), u.end(), '1');
    }
    return zeros == 0 && ones == 0;
}

Construction trivial_no_instance() {
    Construction c;
    c.trivial_no = true;
    c.instance.jobs.push_back({"z", 0, 2, 1});
    c.instance.declared_chains = std::vector<std::vector<std::string>>{{"z"}};
    return c;
}

// prefix[i] is the total length of the first i letters of v, i.e. the sum
// over the 1-based positions 1..i.
std::vector<Time> prefix_lengths(const std::string& v, Letters value) {
    std::vector<Time> prefix(v.size() + 1, 0);
    for (std::size_t k = 0; k < v.size(); ++k) prefix[k + 1] = prefix[k] + value(v[k]);
    return prefix;
}

std::string guard_id(std::size_t i) { return "g" + std::to_string(i); }
std::string x_id(std::size_t word, std::size_t letter) {
    return "x" + std::to_string(word + 1) + "_" + std::to_string(letter + 1);
}

// Shared skeleton: guard chain g_0..g_|v| followed by one chain per
// non-empty word. Times are filled in by the callers.
Construction skeleton(const ShuffleInstance& si) {
    Construction c;
    auto& chains = c.instance.declared_chains.emplace();
    auto& guard_chain = chains.emplace_back();
    for (std::size_t i = 0; i <= si.v_word.size(); ++i) {
        c.guards.push_back(c.instance.jobs.size());
        c.instance.jobs.push_back({guard_id(i), 0, 1, 0});
        guard_chain.push_back(guard_id(i));
        if (i > 0) c.instance.prec_edges.emplace_back(guard_id(i - 1), guard_id(i));
    }
    for (std::size_t w = 0; w < si.u_words.size(); ++w) {
        auto& xs = c.x_jobs.emplace_back();
        if (si.u_words[w].empty()) continue;
        auto& chain = chains.emplace_back();
        for (std::size_t j = 0; j < si.u_words[w].size(); ++j) {
            xs.push_back(c.instance.jobs.size());
            c.instance.jobs.push_back({x_id(w, j), 0, 1, 0});
            chain.push_back(x_id(w, j));
            if (j > 0) c.instance.prec_edges.emplace_back(x_id(w, j - 1), x_id(w, j));
        }
    }
    return c;
}

}  // namespace

Construction construct_1(const ShuffleInstance& si, Time p, Time q) {
    check_input(si, p, q);
    if (!counts_match(si)) return trivial_no_instance();

    const Letters value{p, q};
    const auto prefix = prefix_lengths(si.v_word, value);
    const std::size_t n = si.v_word.size();
    const Time horizon = static_cast<Time>(n + 1) * p + prefix[n];

    Construction c = skeleton(si);
    for (std::size_t i = 0; i <= n; ++i) {
        Job& g = c.instance.jobs[c.guards[i]];
        g.release = p * static_cast<Time>(i) + prefix[i];
        g.processing = p;
        g.deadline = g.release + p;
    }
    for (std::size_t w = 0; w < si.u_words.size(); ++w) {
        for (std::size_t j = 0; j < si.u_words[w].size(); ++j) {
            Job& x = c.instance.jobs[c.x_jobs[w][j]];
            x.release = 0;
            x.processing = value(si.u_words[w][j]);
            x.deadline = horizon;
        }
    }
    return c;
}

Construction construct_2(const ShuffleInstance& si, Time p, Time q) {
    check_input(si, p, q);
    if (!counts_match(si)) return trivial_no_instance();

    const Letters value{p, q};
    const auto prefix = prefix_lengths(si.v_word, value);
    const std::size_t n = si.v_word.size();
    const Time delta = static_cast<Time>(n + 1) * q + prefix[n];

    Construction c = skeleton(si);
    for (std::size_t i = 0; i <= n; ++i) {
        Job& g = c.instance.jobs[c.guards[i]];
        g.release = q * static_cast<Time>(i) + prefix[i];
        g.deadline = g.release + (i < n ? q : delta);
        g.processing = g.deadline - g.release;
    }
    for (std::size_t w = 0; w < si.u_words.size(); ++w) {
        for (std::size_t j = 0; j < si.u_words[w].size(); ++j) {
            // Letter j (0-based) can sit no earlier than slot j+1, which opens
            // when guard g_j completes: (j+1)q + prefix[j].
            Job& x = c.instance.jobs[c.x_jobs[w][j]];
            x.release = static_cast<Time>(j + 1) * q + prefix[j];
            x.processing = value(si.u_words[w][j]);
            x.deadline = x.release + delta;
        }
    }
    return c;
}

Schedule witness_to_schedule(const Construction& c, const ShuffleWitness& witness) {
    const auto& jobs = c.instance.jobs;
    std::vector<Time> starts(jobs.size(), 0);
    for (std::size_t g : c.guards) starts[g] = jobs[g].release;
    for (std::size_t w = 0; w < c.x_jobs.size(); ++w) {
        for (std::size_t j = 0; j < c.x_jobs[w].size(); ++j) {
            const std::size_t slot = witness.maps.at(w).at(j);
            const Job& before = jobs[c.guards.at(slot)];
            starts[c.x_jobs[w][j]] = before.release + before.processing;
        }
    }
    return schedule_from_starts(c.instance, starts);
}

ShuffleWitness witness_from_schedule(const Construction& c, const Schedule& sched) {
    std::vector<std::pair<Time, std::size_t>> by_start;
    for (const auto& xs : c.x_jobs)
        for (std::size_t x : xs) by_start.emplace_back(sched.starts.at(c.instance.jobs[x].id), x);
    std::sort(by_start.begin(), by_start.end());
    std::vector<std::size_t> rank(c.instance.jobs.size(), 0);
    for (std::size_t k = 0; k < by_start.size(); ++k) rank[by_start[k].second] = k;

    ShuffleWitness witness;
    for (const auto& xs : c.x_jobs) {
        auto& f = witness.maps.emplace_back();
        for (std::size_t x : xs) f.push_back(rank[x]);
    }
    return witness;
}

CertReport certify_reduction(const ShuffleInstance& si, int which, Time p, Time q) {
    if (which != 1 && which != 2) fail(ErrorCode::BadAlphabetValues, "construction must be 1 or 2");
    const Construction c = which == 1 ? construct_1(si, p, q) : construct_2(si, p, q);
    const ShuffleAnswer shuffle = shuffle_member(si);
    const SolveResult solved = solve_width_dp(validate_instance(c.instance));

    CertReport report;
    report.shuffle_member = shuffle.member;
    report.schedule_feasible = solved.feasible;
    report.dp_states = solved.states_explored;
    if (shuffle.member != solved.feasible)
        fail(ErrorCode::EquivalenceViolated, std::string("shuffle says ") + (shuffle.member ? "yes" : "no") +
                                                 ", scheduling says " + (solved.feasible ? "feasible" : "infeasible"));
    if (!shuffle.member) return report;

    report.extracted = witness_from_schedule(c, *solved.schedule);
    if (!is_valid_witness(si.u_words, si.v_word, *report.extracted))
        fail(ErrorCode::EquivalenceViolated, "witness read from the schedule is not a valid shuffle witness");
    if (!validate_schedule(c.instance, witness_to_schedule(c, *shuffle.witness)).feasible())
        fail(ErrorCode::EquivalenceViolated, "schedule built from the shuffle witness is infeasible");
    return report;
}

}  // namespace rpasched
