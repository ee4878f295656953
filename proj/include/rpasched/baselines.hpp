#ifndef RPASCHED_BASELINES_HPP
#define RPASCHED_BASELINES_HPP

#include <cstddef>
#include <optional>
#include <vector>

#include "rpasched/model.hpp"
#include "rpasched/solver.hpp"

namespace rpasched {

struct EddReport {
    Schedule schedule;
    std::vector<std::size_t> order;  // dispatch order, job positions
    Time lmax_edd = 0;
    Time cmax = 0;
    std::optional<Time> bound_gap_certificate;  // lmax_edd - lmax_opt
};

/// Non-preemptive earliest-due-date list dispatch. Among released jobs whose
/// closure predecessors are complete, start the one minimising
/// (deadline, release, id); idle until the next release otherwise. Deadlines
/// are not enforced while building.
EddReport edd_schedule(const Instance& inst);
EddReport edd_schedule(const Instance& inst, Time lmax_opt);

/// EDD as an exact procedure for instances with a single window length and
/// prec-consistent windows. Throws PreconditionViolated otherwise.
SolveResult solve_single_window(const Instance& inst);

/// Removes all precedence from a chain-uniform instance. Throws NotChainUniform.
Instance drop_precedence_if_chain_uniform(const Instance& inst);

/// Reassigns the start times of each chain of `original` so that the chain's
/// jobs take its occupied slots in chain order. Identical jobs make this a
/// relabelling that keeps feasibility.
Schedule canonicalize_chain_order(const Instance& original, const Schedule& sched);

struct OracleResult {
    bool feasible = false;
    std::optional<Time> cmax;
    std::optional<Schedule> schedule;  // a makespan-optimal feasible schedule
    Time lmax_opt = 0;                 // over all precedence-respecting orders, deadlines relaxed
    std::optional<Schedule> lmax_schedule;
    std::size_t optimal_orders = 0;  // feasible orders reaching the optimal makespan
    std::size_t nodes = 0;
};

/// SCHED_ORACLE_CAP from the environment, else 10.
std::size_t default_oracle_cap();

/// Exhaustive search over precedence-respecting dispatch orders with
/// earliest-start timing. Throws InstanceTooLarge when n exceeds `cap`.
OracleResult oracle_solve(const Instance& inst, std::size_t cap = default_oracle_cap());

/// Scales every time by (ties + 1) and staggers equal releases within a queue
/// by 0, 1, 2, ... in queue order, shifting deadlines alike. Queues are the
/// declared chains, else a minimum chain decomposition. Throws TooManyTies
/// when more than ties + 1 jobs of one queue share a release.
Instance rescale_simultaneous_releases(const Instance& inst, std::size_t ties);

/// Maps a schedule of the rescaled instance back by dividing by (ties + 1).
Schedule unscale_schedule(const Schedule& sched, std::size_t ties);

}  // namespace rpasched

#endif
