#include "rpasched/decompose.hpp"

#include <algorithm>
#include <bit>
#include <numeric>
#include <queue>
#include <tuple>

namespace rpasched {

ClosureMatrix::ClosureMatrix(std::size_t n) : n_(n), words_((n + 63) / 64), rows_(n * ((n + 63) / 64), 0) {}

void ClosureMatrix::merge_row(std::size_t into, std::size_t from) {
    for (std::size_t w = 0; w < words_; ++w) rows_[into * words_ + w] |= rows_[from * words_ + w];
}

std::size_t ClosureMatrix::pair_count() const {
    std::size_t count = 0;
    for (std::uint64_t word : rows_) count += static_cast<std::size_t>(std::popcount(word));
    return count;
}

std::vector<std::size_t> topological_order(std::size_t n, const std::vector<std::pair<std::size_t, std::size_t>>& edges) {
    std::vector<std::vector<std::size_t>> succ(n);
    std::vector<std::size_t> indegree(n, 0);
    for (const auto& [from, to] : edges) {
        if (from == to) fail(ErrorCode::CyclicPrecedence, "self-loop on job #" + std::to_string(from));
        succ[from].push_back(to);
        ++indegree[to];
    }
    std::priority_queue<std::size_t, std::vector<std::size_t>, std::greater<>> ready;
    for (std::size_t j = 0; j < n; ++j)
        if (indegree[j] == 0) ready.push(j);
    std::vector<std::size_t> order;
    order.reserve(n);
    while (!ready.empty()) {
        const std::size_t j = ready.top();
        ready.pop();
        order.push_back(j);
        for (std::size_t s : succ[j])
            if (--indegree[s] == 0) ready.push(s);
    }
    if (order.size() != n) fail(ErrorCode::CyclicPrecedence, "precedence edges contain a cycle");
    return order;
}

ClosureMatrix transitive_closure(std::size_t n, const std::vector<std::pair<std::size_t, std::size_t>>& edges) {
    const auto order = topological_order(n, edges);
    std::vector<std::vector<std::size_t>> succ(n);
    for (const auto& [from, to] : edges) succ[from].push_back(to);

    ClosureMatrix closure(n);
    for (auto it = order.rbegin(); it != order.rend(); ++it) {
        for (std::size_t s : succ[*it]) {
            closure.set(*it, s);
            closure.merge_row(*it, s);
        }
    }
    return closure;
}

ClosureMatrix transitive_closure(const Instance& inst) { return transitive_closure(inst.jobs.size(), edge_indices(inst)); }

std::vector<std::vector<std::string>> ChainDecomposition::ids(const Instance& inst) const {
    std::vector<std::vector<std::string>> out;
    for (const auto& chain : chains) {
        auto& ids = out.emplace_back();
        for (std::size_t j : chain) ids.push_back(inst.jobs[j].id);
    }
    return out;
}

namespace {

// Maximum matching in the bipartite graph (left copy of jobs) -> (right copy)
// with an arc a -> b whenever a precedes b in the closure. Vertices are
// visited in lexicographic id order.
struct PathCoverMatching {
    std::vector<int> succ_of;  // left  -> matched right, -1 if free
    std::vector<int> pred_of;  // right -> matched left, -1 if free
    std::size_t size = 0;
};

PathCoverMatching match_path_cover(const ClosureMatrix& closure, const std::vector<std::string>& ids) {
    const std::size_t n = closure.size();
    std::vector<std::size_t> by_id(n);
    std::iota(by_id.begin(), by_id.end(), 0);
    std::sort(by_id.begin(), by_id.end(), [&](std::size_t a, std::size_t b) { return ids[a] < ids[b]; });

    std::vector<std::vector<std::size_t>> adj(n);
    for (std::size_t a : by_id)
        for (std::size_t b : by_id)
            if (closure.reaches(a, b)) adj[a].push_back(b);

    PathCoverMatching m{std::vector<int>(n, -1), std::vector<int>(n, -1), 0};
    std::vector<char> visited(n);
    // Augmenting path search, iterative to stay clear of deep recursion.
    for (std::size_t root : by_id) {
        std::fill(visited.begin(), visited.end(), 0);
        struct Frame {
            std::size_t left;
            std::size_t next_arc;
        };
        std::vector<Frame> stack{{root, 0}};
        std::vector<std::size_t> via;  // right vertex taken from each frame
        bool augmented = false;
        while (!stack.empty() && !augmented) {
            Frame& top = stack.back();
            if (top.next_arc == adj[top.left].size()) {
                stack.pop_back();
                if (!via.empty()) via.pop_back();
                continue;
            }
            const std::size_t right = adj[top.left][top.next_arc++];
            if (visited[right]) continue;
            visited[right] = 1;
            via.push_back(right);
            if (m.pred_of[right] == -1) {
                augmented = true;
            } else {
                stack.push_back({static_cast<std::size_t>(m.pred_of[right]), 0});
            }
        }
        if (!augmented) continue;
        for (std::size_t level = 0; level < stack.size(); ++level) {
            const std::size_t left = stack[level].left, right = via[level];
            m.succ_of[left] = static_cast<int>(right);
            m.pred_of[right] = static_cast<int>(left);
        }
        ++m.size;
    }
    return m;
}

}  // namespace

std::size_t width(const ClosureMatrix& closure, const std::vector<std::string>& ids) {
    return closure.size() - match_path_cover(closure, ids).size;
}

std::size_t width(const Instance& inst) { return min_chain_decomposition(inst).size(); }

ChainDecomposition min_chain_decomposition(const ClosureMatrix& closure, const std::vector<std::string>& ids) {
    const auto m = match_path_cover(closure, ids);
    std::vector<std::size_t> by_id(closure.size());
    std::iota(by_id.begin(), by_id.end(), 0);
    std::sort(by_id.begin(), by_id.end(), [&](std::size_t a, std::size_t b) { return ids[a] < ids[b]; });

    ChainDecomposition dec;
    for (std::size_t start : by_id) {
        if (m.pred_of[start] != -1) continue;
        auto& chain = dec.chains.emplace_back();
        for (int j = static_cast<int>(start); j != -1; j = m.succ_of[static_cast<std::size_t>(j)])
            chain.push_back(static_cast<std::size_t>(j));
    }
    return dec;
}

ChainDecomposition declared_decomposition(const Instance& inst) {
    ChainDecomposition dec;
    if (!inst.declared_chains) return dec;
    const auto index = index_map(inst);
    for (const auto& chain : *inst.declared_chains) {
        auto& out = dec.chains.emplace_back();
        for (const auto& id : chain) {
            auto it = index.find(id);
            if (it == index.end()) fail(ErrorCode::UnknownIdReference, "no job with id '" + id + "'");
            out.push_back(it->second);
        }
    }
    return dec;
}

ChainDecomposition min_chain_decomposition(const Instance& inst) {
    const auto closure = transitive_closure(inst);
    std::vector<std::string> ids;
    for (const Job& job : inst.jobs) ids.push_back(job.id);
    auto computed = min_chain_decomposition(closure, ids);
    if (inst.declared_chains) {
        auto declared = declared_decomposition(inst);
        std::erase_if(declared.chains, [](const auto& chain) { return chain.empty(); });
        if (declared.size() == computed.size()) return declared;
    }
    return computed;
}

void check_pure_chains(const ClosureMatrix& closure, const ChainDecomposition& dec) {
    const std::size_t n = closure.size();
    std::vector<std::size_t> owner(n, dec.size());
    for (std::size_t c = 0; c < dec.size(); ++c) {
        for (std::size_t k = 0; k < dec.chains[c].size(); ++k) {
            const std::size_t j = dec.chains[c][k];
            if (j >= n || owner[j] != dec.size())
                fail(ErrorCode::NotAChainPartition, "job #" + std::to_string(j) + " is repeated or out of range");
            owner[j] = c;
            if (k > 0 && !closure.reaches(dec.chains[c][k - 1], j))
                fail(ErrorCode::NotAChainPartition, "chain " + std::to_string(c) + " is not ordered by precedence");
        }
    }
    for (std::size_t j = 0; j < n; ++j)
        if (owner[j] == dec.size()) fail(ErrorCode::NotAChainPartition, "job #" + std::to_string(j) + " is in no chain");
    for (std::size_t a = 0; a < n; ++a)
        for (std::size_t b = 0; b < n; ++b)
            if (closure.reaches(a, b) && owner[a] != owner[b])
                fail(ErrorCode::CrossChainEdge, "job #" + std::to_string(a) + " precedes job #" + std::to_string(b) +
                                                    " in another chain");
}

bool prec_consistent(const Instance& inst, const ClosureMatrix& closure) {
    const std::size_t n = inst.jobs.size();
    for (std::size_t a = 0; a < n; ++a) {
        for (std::size_t b = 0; b < n; ++b) {
            if (!closure.reaches(a, b)) continue;
            const Job& ja = inst.jobs[a];
            const Job& jb = inst.jobs[b];
            if (jb.release < ja.release + ja.processing || ja.deadline > jb.deadline - jb.processing) return false;
        }
    }
    return true;
}

bool prec_consistent(const Instance& inst) { return prec_consistent(inst, transitive_closure(inst)); }

std::size_t proper_level(const Instance& inst) {
    std::size_t level = 0;
    for (const Job& inner : inst.jobs) {
        std::size_t containing = 0;
        for (const Job& outer : inst.jobs)
            if (outer.release < inner.release && inner.deadline < outer.deadline) ++containing;
        level = std::max(level, containing);
    }
    return level;
}

bool chain_uniform(const Instance& inst) {
    const auto closure = transitive_closure(inst);
    ChainDecomposition dec = inst.declared_chains ? declared_decomposition(inst) : min_chain_decomposition(inst);
    try {
        check_pure_chains(closure, dec);
    } catch (const Error&) {
        return false;
    }
    for (const auto& chain : dec.chains) {
        for (std::size_t j : chain) {
            const Job& a = inst.jobs[chain.front()];
            const Job& b = inst.jobs[j];
            if (std::tie(a.release, a.deadline, a.processing) != std::tie(b.release, b.deadline, b.processing)) return false;
        }
    }
    return true;
}

}  // namespace rpasched
