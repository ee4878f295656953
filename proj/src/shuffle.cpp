#include <algorithm>
#include <limits>
#include <map>
#include <unordered_map>

#include "rpasched/reduction.hpp"

namespace rpasched {

ShuffleAnswer shuffle_member_words(const std::vector<std::string>& u_words, std::string_view v) {
    ShuffleAnswer answer;

    std::map<char, std::ptrdiff_t> balance;
    for (char c : v) ++balance[c];
    for (const auto& u : u_words)
        for (char c : u) --balance[c];
    for (const auto& [letter, diff] : balance) {
        if (diff != 0) {
            answer.reason = std::string("letter '") + letter + "' occurs " + (diff > 0 ? "more" : "less") +
                            " often in v than in the words";
            return answer;
        }
    }

    // Progress tuples (letters consumed per word) in mixed radix; the sum of
    // the tuple is the position reached in v.
    const std::size_t l = u_words.size();
    std::vector<std::uint64_t> stride(l);
    unsigned __int128 total = 1;
    for (std::size_t i = 0; i < l; ++i) {
        stride[i] = static_cast<std::uint64_t>(total);
        total *= u_words[i].size() + 1;
        if (total > std::numeric_limits<std::uint64_t>::max()) fail(ErrorCode::TooLarge, "shuffle state space too large");
    }
    struct Parent {
        std::uint64_t from;
        std::size_t word;
    };
    std::unordered_map<std::uint64_t, Parent> parent{{0, {0, l}}};
    std::vector<std::uint64_t> layer{0}, next;
    for (std::size_t pos = 0; pos < v.size() && !layer.empty(); ++pos) {
        next.clear();
        for (std::uint64_t key : layer) {
            for (std::size_t i = 0; i < l; ++i) {
                const std::size_t taken = key / stride[i] % (u_words[i].size() + 1);
                if (taken == u_words[i].size() || u_words[i][taken] != v[pos]) continue;
                const std::uint64_t target = key + stride[i];
                if (parent.try_emplace(target, Parent{key, i}).second) next.push_back(target);
            }
        }
        layer.swap(next);
    }
    answer.states = parent.size();

    std::uint64_t full = 0;
    for (std::size_t i = 0; i < l; ++i) full += u_words[i].size() * stride[i];
    if (!parent.contains(full)) {
        answer.reason = "no interleaving reaches the end of v";
        return answer;
    }

    answer.member = true;
    ShuffleWitness witness;
    for (const auto& u : u_words) witness.maps.emplace_back(u.size());
    std::vector<std::size_t> taken;
    for (const auto& u : u_words) taken.push_back(u.size());
    std::size_t pos = v.size();
    for (std::uint64_t key = full; key != 0;) {
        const Parent& step = parent.at(key);
        witness.maps[step.word][--taken[step.word]] = --pos;
        key = step.from;
    }
    answer.witness = std::move(witness);
    return answer;
}

namespace {

void require_binary(std::string_view word) {
    for (char c : word)
        if (c != '0' && c != '1') fail(ErrorCode::NonBinaryAlphabet, "word '" + std::string(word) + "' is not over {0,1}");
}

}  // namespace

ShuffleAnswer shuffle_member(const ShuffleInstance& si) {
    require_binary(si.v_word);
    for (const auto& u : si.u_words) require_binary(u);
    return shuffle_member_words(si.u_words, si.v_word);
}

bool is_valid_witness(const std::vector<std::string>& u_words, std::string_view v, const ShuffleWitness& witness) {
    if (witness.maps.size() != u_words.size()) return false;
    std::vector<char> hit(v.size(), 0);
    std::size_t covered = 0;
    for (std::size_t i = 0; i < u_words.size(); ++i) {
        const auto& f = witness.maps[i];
        if (f.size() != u_words[i].size()) return false;
        for (std::size_t x = 0; x < f.size(); ++x) {
            if (f[x] >= v.size() || hit[f[x]] || v[f[x]] != u_words[i][x]) return false;
            if (x > 0 && f[x] <= f[x - 1]) return false;
            hit[f[x]] = 1;
            ++covered;
        }
    }
    return covered == v.size();
}

namespace {

void interleave(const std::vector<std::string>& words, std::vector<std::size_t>& taken, std::string& prefix,
                std::size_t total, std::size_t cap, std::set<std::string>& out) {
    if (prefix.size() == total) {
        out.insert(prefix);
        if (out.size() > cap) fail(ErrorCode::TooLarge, "more than " + std::to_string(cap) + " interleavings");
        return;
    }
    for (std::size_t i = 0; i < words.size(); ++i) {
        if (taken[i] == words[i].size()) continue;
        prefix.push_back(words[i][taken[i]++]);
        interleave(words, taken, prefix, total, cap, out);
        --taken[i];
        prefix.pop_back();
    }
}

}  // namespace

std::set<std::string> enumerate_shuffle(const std::vector<std::string>& u_words, std::size_t cap) {
    std::size_t total = 0;
    for (const auto& u : u_words) total += u.size();
    if (total > 12) fail(ErrorCode::TooLarge, "total length " + std::to_string(total) + " exceeds 12");
    std::set<std::string> out;
    std::vector<std::size_t> taken(u_words.size(), 0);
    std::string prefix;
    interleave(u_words, taken, prefix, total, cap, out);
    return out;
}

}  // namespace rpasched
