#include <algorithm>
#include <limits>
#include <tuple>

#include "rpasched/baselines.hpp"
#include "rpasched/decompose.hpp"

namespace rpasched {

EddReport edd_schedule(const Instance& inst) {
    const std::size_t n = inst.jobs.size();
    std::vector<std::vector<std::size_t>> succ(n);
    std::vector<std::size_t> pending(n, 0);
    // The closure is not needed: a job whose direct predecessors are done has
    // all its closure predecessors done.
    for (const auto& [from, to] : edge_indices(inst)) {
        succ[from].push_back(to);
        ++pending[to];
    }

    auto before = [&](std::size_t a, std::size_t b) {
        const Job& x = inst.jobs[a];
        const Job& y = inst.jobs[b];
        return std::tie(x.deadline, x.release, x.id) < std::tie(y.deadline, y.release, y.id);
    };

    EddReport report;
    std::vector<Time> starts(n, 0);
    std::vector<char> done(n, 0);
    Time now = 0;
    report.lmax_edd = std::numeric_limits<Time>::min();
    while (report.order.size() < n) {
        std::optional<std::size_t> pick;
        Time next_release = std::numeric_limits<Time>::max();
        for (std::size_t j = 0; j < n; ++j) {
            if (done[j] || pending[j] != 0) continue;
            if (inst.jobs[j].release <= now) {
                if (!pick || before(j, *pick)) pick = j;
            } else {
                next_release = std::min(next_release, inst.jobs[j].release);
            }
        }
        if (!pick) {
            now = next_release;
            continue;
        }
        const std::size_t j = *pick;
        done[j] = 1;
        starts[j] = now;
        now += inst.jobs[j].processing;
        report.order.push_back(j);
        report.lmax_edd = std::max(report.lmax_edd, now - inst.jobs[j].deadline);
        for (std::size_t s : succ[j]) --pending[s];
    }
    if (n == 0) report.lmax_edd = 0;
    report.cmax = n == 0 ? 0 : now;
    report.schedule = schedule_from_starts(inst, starts);
    return report;
}

EddReport edd_schedule(const Instance& inst, Time lmax_opt) {
    EddReport report = edd_schedule(inst);
    report.bound_gap_certificate = report.lmax_edd - lmax_opt;
    return report;
}

SolveResult solve_single_window(const Instance& inst) {
    const auto stats = instance_stats(inst);
    if (stats.num_window_sizes > 1) fail(ErrorCode::PreconditionViolated, "instance has more than one window size");
    if (!stats.prec_consistent) fail(ErrorCode::PreconditionViolated, "time windows are not prec-consistent");

    const EddReport edd = edd_schedule(inst);
    SolveResult result;
    result.algorithm = "single-window";
    result.states_explored = inst.jobs.size();
    result.lmax = edd.lmax_edd;
    result.feasible = edd.lmax_edd <= 0;
    if (result.feasible) {
        result.cmax = edd.cmax;
        result.schedule = edd.schedule;
    }
    return result;
}

}  // namespace rpasched
