#ifndef RPASCHED_GENERATE_HPP
#define RPASCHED_GENERATE_HPP

#include <cstddef>
#include <cstdint>
#include <optional>
#include <random>
#include <string>
#include <string_view>

#include "rpasched/model.hpp"
#include "rpasched/reduction.hpp"

namespace rpasched {

/// mt19937_64 with a modulo-based bounded draw, so that a seed produces the
/// same instance with every standard library.
class Rng {
   public:
    explicit Rng(std::uint64_t seed) : engine_(seed) {}

    /// Uniform-ish integer in [lo, hi].
    std::int64_t between(std::int64_t lo, std::int64_t hi) {
        if (hi <= lo) return lo;
        return lo + static_cast<std::int64_t>(engine_() % static_cast<std::uint64_t>(hi - lo + 1));
    }
    bool chance(unsigned percent) { return engine_() % 100 < percent; }
    std::uint64_t raw() { return engine_(); }

   private:
    std::mt19937_64 engine_;
};

enum class Profile {
    General,          // random DAG covered by `width` chains plus cross edges
    ChainUniform,     // independent chains, constant (r, d, p) per chain
    SingleWindow,     // one window length, prec-consistent
    AgreeableQueues,  // independent queues, constant p per queue, agreeable (r, d)
};

std::optional<Profile> parse_profile(std::string_view name);
std::string_view to_string(Profile profile);

struct GenOptions {
    std::size_t n = 8;
    std::size_t width = 3;
    std::uint64_t seed = 0;
    std::size_t window_sizes = 2;
    Profile profile = Profile::General;
    Time horizon = 30;
    Time max_processing = 4;
    unsigned cross_edge_percent = 15;
};

Instance generate_instance(const GenOptions& options);

/// Structural check of the profile's promises; `why` receives the reason on
/// failure.
bool satisfies_profile(const Instance& inst, const GenOptions& options, std::string* why = nullptr);

/// `chains` independent chains of `length` jobs each with windows loose
/// enough that every progress tuple is reachable.
Instance loose_chains_instance(std::size_t chains, std::size_t length, std::uint64_t seed);

/// Roughly half the draws are yes-instances by construction; the rest permute
/// letters of a yes-instance or draw fresh words.
ShuffleInstance random_shuffle_instance(std::uint64_t seed, std::size_t max_words, std::size_t max_v);

}  // namespace rpasched

#endif
