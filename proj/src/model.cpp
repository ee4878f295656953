#include "rpasched/model.hpp"

#include <algorithm>
#include <numeric>
#include <set>
#include <tuple>
#include <unordered_set>

#include "rpasched/decompose.hpp"

namespace rpasched {

std::string_view to_string(ErrorCode code) {
    switch (code) {
        case ErrorCode::DuplicateId: return "DuplicateId";
        case ErrorCode::UnknownIdReference: return "UnknownIdReference";
        case ErrorCode::CyclicPrecedence: return "CyclicPrecedence";
        case ErrorCode::BadChainPartition: return "BadChainPartition";
        case ErrorCode::NegativeTime: return "NegativeTime";
        case ErrorCode::ZeroProcessing: return "ZeroProcessing";
        case ErrorCode::HorizonTooLarge: return "HorizonTooLarge";
        case ErrorCode::JobSetMismatch: return "JobSetMismatch";
        case ErrorCode::NotAChainPartition: return "NotAChainPartition";
        case ErrorCode::CrossChainEdge: return "CrossChainEdge";
        case ErrorCode::InfeasibleNoSchedule: return "InfeasibleNoSchedule";
        case ErrorCode::PreconditionViolated: return "PreconditionViolated";
        case ErrorCode::NotChainUniform: return "NotChainUniform";
        case ErrorCode::InstanceTooLarge: return "InstanceTooLarge";
        case ErrorCode::TooManyTies: return "TooManyTies";
        case ErrorCode::NonBinaryAlphabet: return "NonBinaryAlphabet";
        case ErrorCode::TooLarge: return "TooLarge";
        case ErrorCode::BadAlphabetValues: return "BadAlphabetValues";
        case ErrorCode::EquivalenceViolated: return "EquivalenceViolated";
        case ErrorCode::ParseError: return "ParseError";
    }
    return "Unknown";
}

void fail(ErrorCode code, const std::string& what) {
    throw Error(code, std::string(to_string(code)) + ": " + what);
}

std::unordered_map<std::string, std::size_t> index_map(const Instance& inst) {
    std::unordered_map<std::string, std::size_t> index;
    index.reserve(inst.jobs.size());
    for (std::size_t i = 0; i < inst.jobs.size(); ++i) {
        if (!index.emplace(inst.jobs[i].id, i).second) fail(ErrorCode::DuplicateId, "job id '" + inst.jobs[i].id + "'");
    }
    return index;
}

namespace {

std::size_t lookup(const std::unordered_map<std::string, std::size_t>& index, const std::string& id) {
    auto it = index.find(id);
    if (it == index.end()) fail(ErrorCode::UnknownIdReference, "no job with id '" + id + "'");
    return it->second;
}

}  // namespace

std::vector<std::pair<std::size_t, std::size_t>> edge_indices(const Instance& inst) {
    const auto index = index_map(inst);
    std::vector<std::pair<std::size_t, std::size_t>> edges;
    edges.reserve(inst.prec_edges.size());
    for (const auto& [from, to] : inst.prec_edges) edges.emplace_back(lookup(index, from), lookup(index, to));
    return edges;
}

Instance validate_instance(Instance raw) {
    for (const Job& job : raw.jobs) {
        if (job.release < 0 || job.deadline < 0) fail(ErrorCode::NegativeTime, "job '" + job.id + "'");
        if (job.processing < 1) fail(ErrorCode::ZeroProcessing, "job '" + job.id + "'");
        if (job.deadline > kMaxHorizon || job.release > kMaxHorizon || job.processing > kMaxHorizon)
            fail(ErrorCode::HorizonTooLarge, "job '" + job.id + "' exceeds 2^61");
    }
    const auto index = index_map(raw);
    const auto closure = transitive_closure(raw);  // UnknownIdReference, CyclicPrecedence

    if (raw.declared_chains) {
        std::vector<int> seen(raw.jobs.size(), -1);
        const auto& chains = *raw.declared_chains;
        for (std::size_t c = 0; c < chains.size(); ++c) {
            for (std::size_t k = 0; k < chains[c].size(); ++k) {
                const std::size_t j = lookup(index, chains[c][k]);
                if (seen[j] != -1) fail(ErrorCode::BadChainPartition, "job '" + chains[c][k] + "' appears in two chains");
                seen[j] = static_cast<int>(c);
                if (k > 0 && !closure.reaches(lookup(index, chains[c][k - 1]), j))
                    fail(ErrorCode::BadChainPartition,
                         "'" + chains[c][k - 1] + "' does not precede '" + chains[c][k] + "' in chain " + std::to_string(c));
            }
        }
        for (std::size_t j = 0; j < seen.size(); ++j)
            if (seen[j] == -1) fail(ErrorCode::BadChainPartition, "job '" + raw.jobs[j].id + "' is in no chain");
        for (const auto& [from, to] : edge_indices(raw))
            if (seen[from] != seen[to])
                fail(ErrorCode::BadChainPartition,
                     "edge ('" + raw.jobs[from].id + "', '" + raw.jobs[to].id + "') crosses two chains");
    }
    return raw;
}

Schedule schedule_from_starts(const Instance& inst, const std::vector<Time>& starts) {
    Schedule sched;
    for (std::size_t j = 0; j < inst.jobs.size(); ++j) sched.starts.emplace(inst.jobs[j].id, starts.at(j));
    return sched;
}

std::string_view to_string(ViolationKind kind) {
    switch (kind) {
        case ViolationKind::Release: return "release";
        case ViolationKind::Deadline: return "deadline";
        case ViolationKind::Overlap: return "overlap";
        case ViolationKind::Precedence: return "precedence";
    }
    return "unknown";
}

FeasibilityReport validate_schedule(const Instance& inst, const Schedule& sched) {
    if (sched.starts.size() != inst.jobs.size()) fail(ErrorCode::JobSetMismatch, "schedule size differs from job count");

    // Work in id order so that the report does not depend on job list order.
    std::vector<std::size_t> order(inst.jobs.size());
    std::iota(order.begin(), order.end(), 0);
    std::sort(order.begin(), order.end(), [&](std::size_t a, std::size_t b) { return inst.jobs[a].id < inst.jobs[b].id; });

    std::vector<Time> start(inst.jobs.size());
    for (std::size_t j : order) {
        auto it = sched.starts.find(inst.jobs[j].id);
        if (it == sched.starts.end()) fail(ErrorCode::JobSetMismatch, "job '" + inst.jobs[j].id + "' has no start time");
        start[j] = it->second;
    }

    const auto closure = transitive_closure(inst);
    FeasibilityReport report;
    for (std::size_t j : order) {
        const Job& job = inst.jobs[j];
        if (start[j] < job.release) report.violations.push_back({ViolationKind::Release, {job.id}});
        const Time completion = start[j] + job.processing;
        if (completion > job.deadline) report.violations.push_back({ViolationKind::Deadline, {job.id}});
        report.cmax = std::max(report.cmax, completion);
        const Time lateness = completion - job.deadline;
        report.lmax = report.lmax ? std::max(*report.lmax, lateness) : lateness;
    }
    for (std::size_t x = 0; x < order.size(); ++x) {
        for (std::size_t y = x + 1; y < order.size(); ++y) {
            const std::size_t a = order[x], b = order[y];
            const bool apart = start[a] >= start[b] + inst.jobs[b].processing || start[b] >= start[a] + inst.jobs[a].processing;
            if (!apart) report.violations.push_back({ViolationKind::Overlap, {inst.jobs[a].id, inst.jobs[b].id}});
        }
    }
    for (std::size_t a : order)
        for (std::size_t b : order)
            if (closure.reaches(a, b) && start[a] > start[b])
                report.violations.push_back({ViolationKind::Precedence, {inst.jobs[a].id, inst.jobs[b].id}});
    return report;
}

InstanceStats instance_stats(const Instance& inst) {
    InstanceStats stats;
    stats.n = inst.jobs.size();
    if (inst.jobs.empty()) return stats;

    std::set<Time> windows, processing;
    std::set<std::tuple<Time, Time, Time>> types;
    stats.max_slack = inst.jobs.front().slack();
    stats.max_flexibility = {inst.jobs.front().window(), inst.jobs.front().processing};
    for (const Job& job : inst.jobs) {
        windows.insert(job.window());
        processing.insert(job.processing);
        types.emplace(job.release, job.deadline, job.processing);
        stats.max_slack = std::max(stats.max_slack, job.slack());
        stats.max_processing = std::max(stats.max_processing, job.processing);
        // window/p compared by cross multiplication; p >= 1 so signs are safe
        const Rational& best = stats.max_flexibility;
        if (static_cast<__int128>(job.window()) * best.den > static_cast<__int128>(best.num) * job.processing)
            stats.max_flexibility = {job.window(), job.processing};
    }
    const std::int64_t g = std::gcd(stats.max_flexibility.num, stats.max_flexibility.den);
    if (g > 1) stats.max_flexibility = {stats.max_flexibility.num / g, stats.max_flexibility.den / g};

    stats.num_window_sizes = windows.size();
    stats.num_processing_times = processing.size();
    stats.num_job_types = types.size();

    const auto closure = transitive_closure(inst);
    std::vector<std::string> ids;
    for (const Job& job : inst.jobs) ids.push_back(job.id);
    stats.width = width(closure, ids);
    stats.min_chain_count = min_chain_decomposition(inst).size();
    stats.prec_consistent = prec_consistent(inst, closure);
    stats.chain_uniform = chain_uniform(inst);
    stats.proper_level = proper_level(inst);
    return stats;
}

}  // namespace rpasched
