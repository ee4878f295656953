#ifndef RPASCHED_REDUCTION_HPP
#define RPASCHED_REDUCTION_HPP

#include <cstddef>
#include <optional>
#include <set>
#include <string>
#include <string_view>
#include <vector>

#include "rpasched/model.hpp"

namespace rpasched {

/// Words over {'0','1'}; in the scheduling constructions '0' stands for the
/// short length p and '1' for the long length q.
struct ShuffleInstance {
    std::vector<std::string> u_words;
    std::string v_word;
};

/// maps[i][x] is the 0-based position in v taken by letter x of u_i.
struct ShuffleWitness {
    std::vector<std::vector<std::size_t>> maps;

    friend bool operator==(const ShuffleWitness&, const ShuffleWitness&) = default;
};

struct ShuffleAnswer {
    bool member = false;
    std::optional<ShuffleWitness> witness;
    std::string reason;  // why the answer is no, when known early
    std::size_t states = 0;
};

/// Decides membership of v in the shuffle of u_1..u_l over any alphabet.
ShuffleAnswer shuffle_member_words(const std::vector<std::string>& u_words, std::string_view v);

/// Binary variant. Throws NonBinaryAlphabet.
ShuffleAnswer shuffle_member(const ShuffleInstance& si);

/// Strictly increasing maps whose images partition the positions of v and
/// whose letters agree.
bool is_valid_witness(const std::vector<std::string>& u_words, std::string_view v, const ShuffleWitness& witness);

/// All distinct interleavings. Throws TooLarge when the total length exceeds
/// 12 or the result would exceed `cap` words.
std::set<std::string> enumerate_shuffle(const std::vector<std::string>& u_words, std::size_t cap = 1U << 20);

/// A constructed scheduling instance plus the job positions needed to read
/// shuffle witnesses back out of schedules.
struct Construction {
    Instance instance;
    std::vector<std::size_t> guards;               // g_0 .. g_|v|
    std::vector<std::vector<std::size_t>> x_jobs;  // x_jobs[i][j] for letter j of u_i
    bool trivial_no = false;
};

/// Rigid guards of length p separating |v| slots of lengths v[1..]; one
/// chain per word with release 0 and a common deadline. Letter counts that
/// cannot match yield the single job (r=0, p=2, d=1). Throws
/// BadAlphabetValues unless 0 < p < q, NonBinaryAlphabet on other letters.
Construction construct_1(const ShuffleInstance& si, Time p, Time q);

/// Prec-consistent variant with guards of length q, staggered x-job
/// releases and a final guard that fills the rest of the horizon.
Construction construct_2(const ShuffleInstance& si, Time p, Time q);

/// Places letter j of u_i into the slot after guard maps[i][j].
Schedule witness_to_schedule(const Construction& c, const ShuffleWitness& witness);

/// Position of each x-job among all non-guard jobs in start order.
ShuffleWitness witness_from_schedule(const Construction& c, const Schedule& sched);

struct CertReport {
    bool shuffle_member = false;
    bool schedule_feasible = false;
    std::optional<ShuffleWitness> extracted;  // from the scheduling side
    std::size_t dp_states = 0;
};

/// Solves both sides independently (shuffle DP vs. width DP on the
/// construction) and checks that they agree. Throws EquivalenceViolated.
CertReport certify_reduction(const ShuffleInstance& si, int which, Time p, Time q);

}  // namespace rpasched

#endif
