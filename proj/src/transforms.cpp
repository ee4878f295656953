#include <algorithm>
#include <map>

#include "rpasched/baselines.hpp"
#include "rpasched/decompose.hpp"

namespace rpasched {

Instance drop_precedence_if_chain_uniform(const Instance& inst) {
    if (!chain_uniform(inst)) fail(ErrorCode::NotChainUniform, "some chain mixes job types or chains share edges");
    Instance out = inst;
    out.prec_edges.clear();
    out.declared_chains.reset();
    return out;
}

Schedule canonicalize_chain_order(const Instance& original, const Schedule& sched) {
    const ChainDecomposition dec =
        original.declared_chains ? declared_decomposition(original) : min_chain_decomposition(original);
    Schedule out = sched;
    for (const auto& chain : dec.chains) {
        std::vector<Time> slots;
        for (std::size_t j : chain) slots.push_back(sched.starts.at(original.jobs[j].id));
        std::sort(slots.begin(), slots.end());
        for (std::size_t k = 0; k < chain.size(); ++k) out.starts[original.jobs[chain[k]].id] = slots[k];
    }
    return out;
}

Instance rescale_simultaneous_releases(const Instance& inst, std::size_t ties) {
    const Time scale = static_cast<Time>(ties) + 1;
    const ChainDecomposition queues =
        inst.declared_chains ? declared_decomposition(inst) : min_chain_decomposition(inst);

    std::vector<Time> offset(inst.jobs.size(), 0);
    for (const auto& queue : queues.chains) {
        std::map<Time, Time> arrivals;  // release -> jobs seen so far
        for (std::size_t j : queue) {
            Time& seen = arrivals[inst.jobs[j].release];
            if (seen > static_cast<Time>(ties))
                fail(ErrorCode::TooManyTies, "more than " + std::to_string(ties + 1) + " jobs of one queue arrive at " +
                                                 std::to_string(inst.jobs[j].release));
            offset[j] = seen++;
        }
    }

    Instance out = inst;
    for (std::size_t j = 0; j < out.jobs.size(); ++j) {
        Job& job = out.jobs[j];
        if (job.deadline > kMaxHorizon / scale || job.release > kMaxHorizon / scale || job.processing > kMaxHorizon / scale)
            fail(ErrorCode::HorizonTooLarge, "rescaling job '" + job.id + "' overflows the horizon");
        job.release = job.release * scale + offset[j];
        job.deadline = job.deadline * scale + offset[j];
        job.processing *= scale;
    }
    return out;
}

Schedule unscale_schedule(const Schedule& sched, std::size_t ties) {
    const Time scale = static_cast<Time>(ties) + 1;
    Schedule out;
    for (const auto& [id, start] : sched.starts) out.starts.emplace(id, start / scale);  // starts are >= 0
    return out;
}

}  // namespace rpasched
