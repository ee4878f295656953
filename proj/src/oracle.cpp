#include <algorithm>
#include <cstdlib>
#include <limits>

#include "rpasched/baselines.hpp"

namespace rpasched {

std::size_t default_oracle_cap() {
    if (const char* env = std::getenv("SCHED_ORACLE_CAP")) {
        char* end = nullptr;
        const unsigned long value = std::strtoul(env, &end, 10);
        if (end != env && *end == '\0') return static_cast<std::size_t>(value);
    }
    return 10;
}

namespace {

// Deliberately shares nothing with the DP: direct predecessor masks instead
// of the closure, orders instead of progress tuples.
class OrderSearch {
   public:
    explicit OrderSearch(const Instance& inst) : inst_(inst), n_(inst.jobs.size()), pred_(n_, 0) {
        for (const auto& [from, to] : edge_indices(inst)) pred_[to] |= std::uint64_t{1} << from;
        starts_.resize(n_);
        order_.reserve(n_);
    }

    OracleResult run() {
        dfs(0, 0, std::numeric_limits<Time>::min(), true);
        OracleResult out;
        out.nodes = nodes_;
        out.feasible = best_cmax_.has_value();
        if (out.feasible) {
            out.cmax = best_cmax_;
            out.schedule = schedule_from_starts(inst_, best_cmax_starts_);
            out.optimal_orders = optimal_orders_;
        }
        out.lmax_opt = n_ == 0 ? 0 : *best_lmax_;
        out.lmax_schedule = schedule_from_starts(inst_, best_lmax_starts_);
        return out;
    }

   private:
    void dfs(std::uint64_t placed, Time now, Time lmax, bool on_time) {
        ++nodes_;
        if (order_.size() == n_) {
            if (on_time) {
                if (!best_cmax_ || now < *best_cmax_) {
                    best_cmax_ = now;
                    best_cmax_starts_ = starts_;
                    optimal_orders_ = 1;
                } else if (now == *best_cmax_) {
                    ++optimal_orders_;
                }
            }
            if (n_ == 0 || !best_lmax_ || lmax < *best_lmax_) {
                best_lmax_ = lmax;
                best_lmax_starts_ = starts_;
            }
            return;
        }

        Time work = 0, tail = 0, lmax_bound = lmax;
        bool can_meet = on_time;
        for (std::size_t j = 0; j < n_; ++j) {
            if (placed >> j & 1U) continue;
            const Job& job = inst_.jobs[j];
            work += job.processing;
            tail = std::max(tail, job.release + job.processing);
            const Time earliest_completion = std::max(now, job.release) + job.processing;
            lmax_bound = std::max(lmax_bound, earliest_completion - job.deadline);
            if (earliest_completion > job.deadline) can_meet = false;
        }
        const Time cmax_bound = std::max(now + work, tail);
        const bool cmax_alive = can_meet && (!best_cmax_ || cmax_bound <= *best_cmax_);
        const bool lmax_alive = !best_lmax_ || lmax_bound < *best_lmax_;
        if (!cmax_alive && !lmax_alive) return;

        for (std::size_t j = 0; j < n_; ++j) {
            if ((placed >> j & 1U) || (pred_[j] & ~placed) != 0) continue;
            const Job& job = inst_.jobs[j];
            const Time start = std::max(now, job.release);
            const Time completion = start + job.processing;
            starts_[j] = start;
            order_.push_back(j);
            dfs(placed | std::uint64_t{1} << j, completion, std::max(lmax, completion - job.deadline),
                cmax_alive && completion <= job.deadline);
            order_.pop_back();
        }
    }

    const Instance& inst_;
    std::size_t n_;
    std::vector<std::uint64_t> pred_;
    std::vector<Time> starts_;
    std::vector<std::size_t> order_;

    std::optional<Time> best_cmax_;
    std::vector<Time> best_cmax_starts_;
    std::size_t optimal_orders_ = 0;
    std::optional<Time> best_lmax_;
    std::vector<Time> best_lmax_starts_;
    std::size_t nodes_ = 0;
};

}  // namespace

OracleResult oracle_solve(const Instance& inst, std::size_t cap) {
    const std::size_t limit = std::min<std::size_t>(cap, 63);
    if (inst.jobs.size() > limit)
        fail(ErrorCode::InstanceTooLarge,
             std::to_string(inst.jobs.size()) + " jobs exceed the oracle cap of " + std::to_string(limit));
    return OrderSearch(inst).run();
}

}  // namespace rpasched
