#include "rpasched/generate.hpp"

#include <algorithm>
#include <numeric>
#include <set>

#include "rpasched/decompose.hpp"

namespace rpasched {

std::optional<Profile> parse_profile(std::string_view name) {
    if (name == "general") return Profile::General;
    if (name == "chain-uniform") return Profile::ChainUniform;
    if (name == "single-window") return Profile::SingleWindow;
    if (name == "agreeable-queues") return Profile::AgreeableQueues;
    return std::nullopt;
}

std::string_view to_string(Profile profile) {
    switch (profile) {
        case Profile::General: return "general";
        case Profile::ChainUniform: return "chain-uniform";
        case Profile::SingleWindow: return "single-window";
        case Profile::AgreeableQueues: return "agreeable-queues";
    }
    return "general";
}

namespace {

std::string job_id(std::size_t j, std::size_t n) {
    std::string digits = std::to_string(j);
    const std::size_t pad = std::to_string(n > 0 ? n - 1 : 0).size();
    return "j" + std::string(pad - digits.size(), '0') + digits;
}

/// Chain sizes summing to n, every chain non-empty.
std::vector<std::size_t> chain_sizes(Rng& rng, std::size_t n, std::size_t k) {
    std::vector<std::size_t> sizes(k, 1);
    for (std::size_t extra = k; extra < n; ++extra) ++sizes[static_cast<std::size_t>(rng.between(0, static_cast<std::int64_t>(k) - 1))];
    return sizes;
}

std::vector<Time> window_pool(Rng& rng, std::size_t count, Time lo, Time hi) {
    std::set<Time> pool;
    count = std::min<std::size_t>(std::max<std::size_t>(count, 1), static_cast<std::size_t>(std::max<Time>(hi - lo + 1, 1)));
    while (pool.size() < count) pool.insert(rng.between(lo, hi));
    return {pool.begin(), pool.end()};
}

Time pick(Rng& rng, const std::vector<Time>& values) {
    return values[static_cast<std::size_t>(rng.between(0, static_cast<std::int64_t>(values.size()) - 1))];
}

void link_chains(Instance& inst, const std::vector<std::vector<std::size_t>>& chains, bool declare) {
    if (declare) inst.declared_chains.emplace();
    for (const auto& chain : chains) {
        for (std::size_t k = 1; k < chain.size(); ++k) inst.prec_edges.emplace_back(inst.jobs[chain[k - 1]].id, inst.jobs[chain[k]].id);
        if (declare) {
            auto& ids = inst.declared_chains->emplace_back();
            for (std::size_t j : chain) ids.push_back(inst.jobs[j].id);
        }
    }
}

Instance general(Rng& rng, const GenOptions& o, std::size_t k) {
    const std::size_t n = o.n;
    const auto pool = window_pool(rng, o.window_sizes, 2, std::max<Time>(o.horizon / 2, 2));
    Instance inst;
    std::vector<std::uint64_t> tiebreak(n);
    for (std::size_t j = 0; j < n; ++j) {
        const Time window = pick(rng, pool);
        const Time release = rng.between(0, o.horizon - window);
        const Time processing = rng.between(1, std::min(o.max_processing, window));
        inst.jobs.push_back({job_id(j, n), release, processing, release + window});
        tiebreak[j] = rng.raw();
    }
    // A global order by release; chains and cross edges follow it, which
    // keeps the graph acyclic.
    std::vector<std::size_t> order(n);
    std::iota(order.begin(), order.end(), 0);
    std::sort(order.begin(), order.end(), [&](std::size_t a, std::size_t b) {
        return std::tie(inst.jobs[a].release, tiebreak[a]) < std::tie(inst.jobs[b].release, tiebreak[b]);
    });
    std::vector<std::size_t> owner(n);
    {
        const auto sizes = chain_sizes(rng, n, k);
        std::vector<std::size_t> labels;
        for (std::size_t c = 0; c < k; ++c) labels.insert(labels.end(), sizes[c], c);
        for (std::size_t i = labels.size(); i > 1; --i) std::swap(labels[i - 1], labels[static_cast<std::size_t>(rng.between(0, static_cast<std::int64_t>(i) - 1))]);
        for (std::size_t pos = 0; pos < n; ++pos) owner[order[pos]] = labels[pos];
    }
    std::vector<std::vector<std::size_t>> chains(k);
    for (std::size_t j : order) chains[owner[j]].push_back(j);
    link_chains(inst, chains, false);
    for (std::size_t a = 0; a < n; ++a)
        for (std::size_t b = a + 1; b < n; ++b)
            if (owner[order[a]] != owner[order[b]] && rng.chance(o.cross_edge_percent))
                inst.prec_edges.emplace_back(inst.jobs[order[a]].id, inst.jobs[order[b]].id);
    return inst;
}

Instance single_window(Rng& rng, const GenOptions& o, std::size_t k) {
    const std::size_t n = o.n;
    const Time window = rng.between(o.max_processing, o.max_processing + std::max<Time>(o.horizon / 6, 1));
    const auto sizes = chain_sizes(rng, n, k);
    Instance inst;
    std::vector<std::vector<std::size_t>> chains(k);
    for (std::size_t c = 0; c < k; ++c) {
        Time release = rng.between(0, std::max<Time>(o.horizon / 3, 0));
        Time prev_p = 0;
        for (std::size_t m = 0; m < sizes[c]; ++m) {
            const Time p = rng.between(1, o.max_processing);
            if (m > 0) release += std::max(prev_p, p) + rng.between(0, 2);
            chains[c].push_back(inst.jobs.size());
            inst.jobs.push_back({job_id(inst.jobs.size(), n), release, p, release + window});
            prev_p = p;
        }
    }
    link_chains(inst, chains, false);
    // Cross edges only where the windows already force the order.
    for (std::size_t a = 0; a < n; ++a) {
        for (std::size_t b = 0; b < n; ++b) {
            const Job& x = inst.jobs[a];
            const Job& y = inst.jobs[b];
            if (a != b && y.release >= x.release + std::max(x.processing, y.processing) && rng.chance(o.cross_edge_percent / 2))
                inst.prec_edges.emplace_back(x.id, y.id);
        }
    }
    return inst;
}

Instance chain_uniform_instance(Rng& rng, const GenOptions& o, std::size_t k) {
    const auto sizes = chain_sizes(rng, o.n, k);
    const auto pool = window_pool(rng, o.window_sizes, o.max_processing, o.horizon);
    Instance inst;
    std::vector<std::vector<std::size_t>> chains(k);
    for (std::size_t c = 0; c < k; ++c) {
        const Time p = rng.between(1, o.max_processing);
        const Time window = pick(rng, pool);
        const Time release = rng.between(0, std::max<Time>(o.horizon - window, 0));
        for (std::size_t m = 0; m < sizes[c]; ++m) {
            chains[c].push_back(inst.jobs.size());
            inst.jobs.push_back({job_id(inst.jobs.size(), o.n), release, p, release + window});
        }
    }
    link_chains(inst, chains, true);
    return inst;
}

Instance agreeable_queues(Rng& rng, const GenOptions& o, std::size_t k) {
    const auto sizes = chain_sizes(rng, o.n, k);
    const auto pool = window_pool(rng, o.window_sizes, o.max_processing, o.max_processing + std::max<Time>(o.horizon / 2, 1));
    Instance inst;
    std::vector<std::vector<std::size_t>> chains(k);
    for (std::size_t c = 0; c < k; ++c) {
        const Time p = rng.between(1, o.max_processing);
        const Time window = pick(rng, pool);
        Time release = rng.between(0, std::max<Time>(o.horizon / 3, 0));
        for (std::size_t m = 0; m < sizes[c]; ++m) {
            if (m > 0) release += rng.between(0, 3);
            chains[c].push_back(inst.jobs.size());
            inst.jobs.push_back({job_id(inst.jobs.size(), o.n), release, p, release + window});
        }
    }
    link_chains(inst, chains, true);
    return inst;
}

}  // namespace

Instance generate_instance(const GenOptions& options) {
    Rng rng(options.seed);
    const std::size_t k = options.n == 0 ? 0 : std::clamp<std::size_t>(options.width, 1, options.n);
    Instance inst;
    switch (options.profile) {
        case Profile::General: inst = general(rng, options, k); break;
        case Profile::SingleWindow: inst = single_window(rng, options, k); break;
        case Profile::ChainUniform: inst = chain_uniform_instance(rng, options, k); break;
        case Profile::AgreeableQueues: inst = agreeable_queues(rng, options, k); break;
    }
    return validate_instance(std::move(inst));
}

bool satisfies_profile(const Instance& inst, const GenOptions& options, std::string* why) {
    auto reject = [&](const char* reason) {
        if (why) *why = reason;
        return false;
    };
    if (inst.jobs.size() != options.n) return reject("job count differs from --n");
    const InstanceStats stats = instance_stats(inst);
    if (stats.width > std::max<std::size_t>(options.width, 1) && options.n > 0) return reject("width exceeds --width");
    switch (options.profile) {
        case Profile::General:
            if (stats.num_window_sizes > std::max<std::size_t>(options.window_sizes, 1)) return reject("too many window sizes");
            return true;
        case Profile::SingleWindow:
            if (stats.num_window_sizes > 1) return reject("more than one window size");
            if (!stats.prec_consistent) return reject("windows are not prec-consistent");
            return true;
        case Profile::ChainUniform:
            if (!stats.chain_uniform) return reject("chains are not uniform");
            return true;
        case Profile::AgreeableQueues: {
            const auto closure = transitive_closure(inst);
            const auto queues = declared_decomposition(inst);
            try {
                check_pure_chains(closure, queues);
            } catch (const Error&) {
                return reject("queues are not independent chains");
            }
            for (const auto& queue : queues.chains) {
                for (std::size_t m = 1; m < queue.size(); ++m) {
                    const Job& a = inst.jobs[queue[m - 1]];
                    const Job& b = inst.jobs[queue[m]];
                    if (a.processing != b.processing) return reject("processing time varies within a queue");
                    if (a.release > b.release || a.deadline > b.deadline) return reject("queue order is not agreeable");
                }
            }
            return true;
        }
    }
    return true;
}

Instance loose_chains_instance(std::size_t chains, std::size_t length, std::uint64_t seed) {
    Rng rng(seed);
    const std::size_t n = chains * length;
    Instance inst;
    std::vector<std::vector<std::size_t>> order(chains);
    Time total = 0;
    for (std::size_t c = 0; c < chains; ++c) {
        for (std::size_t m = 0; m < length; ++m) {
            const Time p = rng.between(1, 3);
            order[c].push_back(inst.jobs.size());
            inst.jobs.push_back({job_id(inst.jobs.size(), n), rng.between(0, static_cast<Time>(m)), p, 0});
            total += p;
        }
    }
    for (Job& job : inst.jobs) job.deadline = total + static_cast<Time>(length) + 1;
    link_chains(inst, order, true);
    return validate_instance(std::move(inst));
}

ShuffleInstance random_shuffle_instance(std::uint64_t seed, std::size_t max_words, std::size_t max_v) {
    Rng rng(seed);
    ShuffleInstance si;
    const std::size_t words = static_cast<std::size_t>(rng.between(1, static_cast<std::int64_t>(std::max<std::size_t>(max_words, 1))));
    const std::size_t length = static_cast<std::size_t>(rng.between(0, static_cast<std::int64_t>(max_v)));
    for (std::size_t k = 0; k < length; ++k) si.v_word.push_back(rng.chance(50) ? '1' : '0');
    si.u_words.assign(words, "");

    const auto mode = rng.between(0, 3);
    if (mode <= 2) {
        for (char c : si.v_word) si.u_words[static_cast<std::size_t>(rng.between(0, static_cast<std::int64_t>(words) - 1))].push_back(c);
        if (mode == 2) {
            // Swap two differing letters inside one word: counts survive,
            // membership usually does not.
            auto& w = si.u_words[static_cast<std::size_t>(rng.between(0, static_cast<std::int64_t>(words) - 1))];
            for (std::size_t tries = 0; tries < 8 && w.size() >= 2; ++tries) {
                const auto a = static_cast<std::size_t>(rng.between(0, static_cast<std::int64_t>(w.size()) - 1));
                const auto b = static_cast<std::size_t>(rng.between(0, static_cast<std::int64_t>(w.size()) - 1));
                if (w[a] != w[b]) {
                    std::swap(w[a], w[b]);
                    break;
                }
            }
        }
    } else {
        for (std::size_t k = 0; k < length; ++k)
            si.u_words[static_cast<std::size_t>(rng.between(0, static_cast<std::int64_t>(words) - 1))].push_back(rng.chance(50) ? '1' : '0');
    }
    return si;
}

}  // namespace rpasched
