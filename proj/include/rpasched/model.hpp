#ifndef RPASCHED_MODEL_HPP
#define RPASCHED_MODEL_HPP

#include <cstddef>
#include <cstdint>
#include <map>
#include <optional>
#include <stdexcept>
#include <string>
#include <string_view>
#include <unordered_map>
#include <utility>
#include <vector>

namespace rpasched {

/// Integer time. Inputs whose horizon exceeds kMaxHorizon are rejected.
using Time = std::int64_t;
inline constexpr Time kMaxHorizon = Time{1} << 61;

enum class ErrorCode {
    DuplicateId,
    UnknownIdReference,
    CyclicPrecedence,
    BadChainPartition,
    NegativeTime,
    ZeroProcessing,
    HorizonTooLarge,
    JobSetMismatch,
    NotAChainPartition,
    CrossChainEdge,
    InfeasibleNoSchedule,
    PreconditionViolated,
    NotChainUniform,
    InstanceTooLarge,
    TooManyTies,
    NonBinaryAlphabet,
    TooLarge,
    BadAlphabetValues,
    EquivalenceViolated,
    ParseError,
};

std::string_view to_string(ErrorCode code);

class Error : public std::runtime_error {
   public:
    Error(ErrorCode code, const std::string& what)
        : std::runtime_error(what), code_(code) {}

    ErrorCode code() const noexcept { return code_; }

   private:
    ErrorCode code_;
};

[[noreturn]] void fail(ErrorCode code, const std::string& what);

struct Job {
    std::string id;
    Time release = 0;
    Time processing = 1;
    Time deadline = 0;

    Time window() const { return deadline - release; }
    Time slack() const { return deadline - release - processing; }

    friend bool operator==(const Job&, const Job&) = default;
};

enum class Objective { Feasibility, MinMakespan };

using IdPair = std::pair<std::string, std::string>;

/// A single-machine instance: jobs, a generating set of precedence edges
/// (semantics always use the transitive closure) and optionally a declared
/// partition of the jobs into chains.
struct Instance {
    std::vector<Job> jobs;
    std::vector<IdPair> prec_edges;
    std::optional<std::vector<std::vector<std::string>>> declared_chains;
    Objective objective = Objective::MinMakespan;

    std::size_t size() const { return jobs.size(); }
    bool empty() const { return jobs.empty(); }
};

/// Job id -> position in Instance::jobs. Throws DuplicateId.
std::unordered_map<std::string, std::size_t> index_map(const Instance& inst);

/// Precedence edges translated to job positions. Throws UnknownIdReference.
std::vector<std::pair<std::size_t, std::size_t>> edge_indices(const Instance& inst);

/// Checks every instance invariant and returns the instance unchanged.
Instance validate_instance(Instance raw);

struct Schedule {
    std::map<std::string, Time> starts;

    friend bool operator==(const Schedule&, const Schedule&) = default;
};

/// Builds a Schedule from start times aligned with inst.jobs.
Schedule schedule_from_starts(const Instance& inst, const std::vector<Time>& starts);

enum class ViolationKind { Release, Deadline, Overlap, Precedence };

std::string_view to_string(ViolationKind kind);

struct Violation {
    ViolationKind kind;
    std::vector<std::string> jobs;
};

struct FeasibilityReport {
    std::vector<Violation> violations;
    Time cmax = 0;
    std::optional<Time> lmax;  // empty for the empty schedule

    bool feasible() const { return violations.empty(); }
};

/// Checks release, deadline, non-overlap and precedence (start-to-start,
/// under the closure). Throws JobSetMismatch if the schedule does not cover
/// exactly the instance's jobs.
FeasibilityReport validate_schedule(const Instance& inst, const Schedule& sched);

struct Rational {
    std::int64_t num = 0;
    std::int64_t den = 1;

    double value() const { return static_cast<double>(num) / static_cast<double>(den); }
    friend bool operator==(const Rational&, const Rational&) = default;
};

struct InstanceStats {
    std::size_t n = 0;
    std::size_t num_window_sizes = 0;
    std::size_t num_processing_times = 0;
    std::size_t num_job_types = 0;
    Time max_slack = 0;
    Time max_processing = 0;
    Rational max_flexibility;
    std::size_t width = 0;
    std::size_t min_chain_count = 0;
    bool prec_consistent = true;
    bool chain_uniform = true;
    std::size_t proper_level = 0;
};

InstanceStats instance_stats(const Instance& inst);

}  // namespace rpasched

#endif
