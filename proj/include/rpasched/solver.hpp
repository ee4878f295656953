#ifndef RPASCHED_SOLVER_HPP
#define RPASCHED_SOLVER_HPP

#include <cstddef>
#include <cstdint>
#include <optional>
#include <string>
#include <unordered_map>
#include <vector>

#include "rpasched/decompose.hpp"
#include "rpasched/model.hpp"

namespace rpasched {

struct SolveResult {
    bool feasible = false;
    std::optional<Time> cmax;
    std::optional<Schedule> schedule;
    std::optional<Time> lmax;
    std::size_t states_explored = 0;
    std::string algorithm;
};

/// Memo of the chain dynamic program. A state is the number of jobs already
/// taken from each chain; only states with a finite value are stored, an
/// absent state stands for "no feasible partial schedule".
class DpTable {
   public:
    struct Entry {
        Time value;          // minimum makespan of the prefix set
        std::uint32_t last;  // chain whose job is scheduled last
        Time start;          // start time of that job
    };
    using Progress = std::vector<std::uint32_t>;

    DpTable() = default;
    explicit DpTable(ChainDecomposition chains);

    const ChainDecomposition& chains() const { return chains_; }
    std::size_t size() const { return entries_.size(); }

    std::uint64_t key(const Progress& progress) const;
    Progress decode(std::uint64_t key) const;
    Progress full() const;

    /// Empty means infinity.
    std::optional<Time> value(const Progress& progress) const;
    const Entry* find(std::uint64_t key) const;
    const std::unordered_map<std::uint64_t, Entry>& entries() const { return entries_; }

    /// Keeps the smaller value; on equal values the lower chain index wins.
    void offer(std::uint64_t key, const Entry& entry);

   private:
    ChainDecomposition chains_;
    std::vector<std::uint64_t> stride_;
    std::unordered_map<std::uint64_t, Entry> entries_;
};

/// Fills the DP over `chains`, admitting a job only once all its closure
/// predecessors have been counted.
DpTable build_dp_table(const Instance& inst, const ClosureMatrix& closure, const ChainDecomposition& chains);

/// Walks the argmin transitions back from the full state. Throws
/// InfeasibleNoSchedule when the full state is infinite.
Schedule reconstruct_schedule(const DpTable& table, const Instance& inst);

/// Exact minimum makespan for a precedence that is a disjoint union of the
/// given chains. Throws NotAChainPartition / CrossChainEdge.
SolveResult solve_chain_dp(const Instance& inst, const ChainDecomposition& chains);

/// Exact minimum makespan for an arbitrary precedence DAG, running the DP
/// over a minimum chain decomposition.
SolveResult solve_width_dp(const Instance& inst);

}  // namespace rpasched

#endif
