#ifndef RPASCHED_IO_HPP
#define RPASCHED_IO_HPP

#include <optional>
#include <string>
#include <string_view>

#include "rpasched/model.hpp"
#include "rpasched/reduction.hpp"
#include "rpasched/solver.hpp"

namespace rpasched {

/// Instance file grammar (JSON):
///
///   {
///     "chains": [["a", "b"], ["c"]],          optional
///     "jobs": [{"d": 4, "id": "a", "p": 2, "r": 0}, ...],
///     "objective": "cmax",                    "cmax" | "feasible", default "cmax"
///     "prec": [["a", "b"], ...]               may be empty or absent
///   }
///
/// Errors are reported as ParseError with a "<source>:<line>: " prefix.
Instance parse_instance(std::string_view text, std::string_view source = "<input>");

/// Canonical form: sorted keys, jobs sorted by id, edges sorted, one entry
/// per line. Chains keep their order.
std::string serialize_instance(const Instance& inst);

/// Result document; cmax and schedule appear only for feasible results of a
/// makespan objective.
std::string serialize_result(const SolveResult& result, Objective objective, std::optional<double> wall_ms = std::nullopt);

std::string serialize_stats(const InstanceStats& stats);

std::string serialize_witness(const ShuffleInstance& si, const ShuffleAnswer& answer);

/// 1-based line of byte `offset` in `text`.
std::size_t line_of_offset(std::string_view text, std::size_t offset);

}  // namespace rpasched

#endif
