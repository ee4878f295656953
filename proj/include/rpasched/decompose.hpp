#ifndef RPASCHED_DECOMPOSE_HPP
#define RPASCHED_DECOMPOSE_HPP

#include <cstddef>
#include <cstdint>
#include <string>
#include <vector>

#include "rpasched/model.hpp"

namespace rpasched {

/// Strict-order reachability between job positions, stored as one bit row
/// per job.
class ClosureMatrix {
   public:
    ClosureMatrix() = default;
    explicit ClosureMatrix(std::size_t n);

    std::size_t size() const { return n_; }

    bool reaches(std::size_t from, std::size_t to) const {
        return (rows_[from * words_ + to / 64] >> (to % 64)) & 1U;
    }
    bool comparable(std::size_t a, std::size_t b) const { return reaches(a, b) || reaches(b, a); }

    void set(std::size_t from, std::size_t to) { rows_[from * words_ + to / 64] |= std::uint64_t{1} << (to % 64); }

    /// rows[into] |= rows[from]
    void merge_row(std::size_t into, std::size_t from);

    std::size_t pair_count() const;

    friend bool operator==(const ClosureMatrix&, const ClosureMatrix&) = default;

   private:
    std::size_t n_ = 0;
    std::size_t words_ = 0;
    std::vector<std::uint64_t> rows_;
};

/// Throws CyclicPrecedence on a cycle (including self-loops).
ClosureMatrix transitive_closure(std::size_t n, const std::vector<std::pair<std::size_t, std::size_t>>& edges);
ClosureMatrix transitive_closure(const Instance& inst);

/// Job positions in topological order, ties by position. Throws CyclicPrecedence.
std::vector<std::size_t> topological_order(std::size_t n, const std::vector<std::pair<std::size_t, std::size_t>>& edges);

/// Chains of job positions; every chain is totally ordered by the closure,
/// listed from first to last.
struct ChainDecomposition {
    std::vector<std::vector<std::size_t>> chains;

    std::size_t size() const { return chains.size(); }
    std::vector<std::vector<std::string>> ids(const Instance& inst) const;
};

std::size_t width(const Instance& inst);
std::size_t width(const ClosureMatrix& closure, const std::vector<std::string>& ids);

/// Minimum chain cover via maximum bipartite matching on the closure.
/// A declared partition of minimum size is returned unchanged.
ChainDecomposition min_chain_decomposition(const Instance& inst);
ChainDecomposition min_chain_decomposition(const ClosureMatrix& closure, const std::vector<std::string>& ids);

/// The declared chains as positions. Throws UnknownIdReference.
ChainDecomposition declared_decomposition(const Instance& inst);

/// Throws NotAChainPartition when `dec` is not a partition into closure
/// chains and CrossChainEdge when a closure pair spans two chains.
void check_pure_chains(const ClosureMatrix& closure, const ChainDecomposition& dec);

bool prec_consistent(const Instance& inst);
bool prec_consistent(const Instance& inst, const ClosureMatrix& closure);

std::size_t proper_level(const Instance& inst);

/// True iff the precedence is a disjoint union of chains (declared chains
/// when present, otherwise the minimum decomposition) and every chain has
/// constant (r, d, p).
bool chain_uniform(const Instance& inst);

}  // namespace rpasched

#endif
