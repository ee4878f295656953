#include "rpasched/solver.hpp"

#include <algorithm>
#include <limits>

namespace rpasched {

namespace {
constexpr std::uint32_t kNoChain = std::numeric_limits<std::uint32_t>::max();
}

DpTable::DpTable(ChainDecomposition chains) : chains_(std::move(chains)) {
    unsigned __int128 stride = 1;
    for (const auto& chain : chains_.chains) {
        stride_.push_back(static_cast<std::uint64_t>(stride));
        stride *= chain.size() + 1;
        if (stride > std::numeric_limits<std::uint64_t>::max())
            fail(ErrorCode::TooLarge, "DP state space exceeds 2^64 progress tuples");
    }
}

std::uint64_t DpTable::key(const Progress& progress) const {
    std::uint64_t k = 0;
    for (std::size_t c = 0; c < progress.size(); ++c) k += progress[c] * stride_[c];
    return k;
}

DpTable::Progress DpTable::decode(std::uint64_t key) const {
    Progress progress(chains_.size());
    for (std::size_t c = 0; c < chains_.size(); ++c) {
        progress[c] = static_cast<std::uint32_t>(key / stride_[c] % (chains_.chains[c].size() + 1));
    }
    return progress;
}

DpTable::Progress DpTable::full() const {
    Progress progress;
    for (const auto& chain : chains_.chains) progress.push_back(static_cast<std::uint32_t>(chain.size()));
    return progress;
}

std::optional<Time> DpTable::value(const Progress& progress) const {
    if (const Entry* e = find(key(progress))) return e->value;
    return std::nullopt;
}

const DpTable::Entry* DpTable::find(std::uint64_t key) const {
    auto it = entries_.find(key);
    return it == entries_.end() ? nullptr : &it->second;
}

void DpTable::offer(std::uint64_t key, const Entry& entry) {
    auto [it, inserted] = entries_.try_emplace(key, entry);
    if (inserted) return;
    Entry& cur = it->second;
    if (entry.value < cur.value || (entry.value == cur.value && entry.last < cur.last)) cur = entry;
}

DpTable build_dp_table(const Instance& inst, const ClosureMatrix& closure, const ChainDecomposition& chains) {
    DpTable table(chains);
    const std::size_t k = chains.size();
    const std::size_t n = inst.jobs.size();

    // need[x * k + c]: how many jobs of chain c precede job x. Predecessors of
    // x inside a chain always form a prefix of that chain.
    std::vector<std::uint32_t> need(n * k, 0);
    for (std::size_t x = 0; x < n; ++x) {
        for (std::size_t c = 0; c < k; ++c) {
            const auto& chain = chains.chains[c];
            for (std::size_t pos = chain.size(); pos > 0; --pos) {
                if (closure.reaches(chain[pos - 1], x)) {
                    need[x * k + c] = static_cast<std::uint32_t>(pos);
                    break;
                }
            }
        }
    }
    std::vector<std::uint64_t> stride(k);
    {
        DpTable::Progress unit(k, 0);
        for (std::size_t c = 0; c < k; ++c) {
            unit[c] = 1;
            stride[c] = table.key(unit);
            unit[c] = 0;
        }
    }

    table.offer(0, {0, kNoChain, 0});
    std::vector<std::uint64_t> layer{0}, next;
    for (std::size_t taken = 0; taken < n && !layer.empty(); ++taken) {
        next.clear();
        for (std::uint64_t key : layer) {
            const Time value = table.find(key)->value;
            const auto progress = table.decode(key);
            for (std::size_t i = 0; i < k; ++i) {
                const auto& chain = chains.chains[i];
                if (progress[i] == chain.size()) continue;
                const std::size_t x = chain[progress[i]];
                bool eligible = true;
                for (std::size_t c = 0; c < k && eligible; ++c) eligible = progress[c] >= need[x * k + c];
                if (!eligible) continue;
                const Job& job = inst.jobs[x];
                const Time start = std::max(value, job.release);
                if (start + job.processing > job.deadline) continue;
                const std::uint64_t target = key + stride[i];
                const bool fresh = table.find(target) == nullptr;
                table.offer(target, {start + job.processing, static_cast<std::uint32_t>(i), start});
                if (fresh) next.push_back(target);
            }
        }
        layer.swap(next);
    }
    return table;
}

Schedule reconstruct_schedule(const DpTable& table, const Instance& inst) {
    std::uint64_t key = table.key(table.full());
    if (!table.find(key)) fail(ErrorCode::InfeasibleNoSchedule, "final DP state is infinite");

    std::vector<Time> starts(inst.jobs.size(), 0);
    auto progress = table.full();
    while (key != 0) {
        const DpTable::Entry* e = table.find(key);
        const std::uint32_t i = e->last;
        const std::size_t job = table.chains().chains[i][progress[i] - 1];
        starts[job] = e->start;
        --progress[i];
        key = table.key(progress);
    }
    return schedule_from_starts(inst, starts);
}

namespace {

SolveResult finish(const Instance& inst, const DpTable& table, std::string algorithm) {
    SolveResult result;
    result.algorithm = std::move(algorithm);
    result.states_explored = table.size();
    if (auto value = table.value(table.full())) {
        result.feasible = true;
        result.cmax = *value;
        result.schedule = reconstruct_schedule(table, inst);
    }
    return result;
}

}  // namespace

SolveResult solve_chain_dp(const Instance& inst, const ChainDecomposition& chains) {
    const auto closure = transitive_closure(inst);
    check_pure_chains(closure, chains);
    return finish(inst, build_dp_table(inst, closure, chains), "chain-dp");
}

SolveResult solve_width_dp(const Instance& inst) {
    const auto closure = transitive_closure(inst);
    return finish(inst, build_dp_table(inst, closure, min_chain_decomposition(inst)), "width-dp");
}

}  // namespace rpasched
