#pragma once

#include <cstdint>
#include <string>
#include <unordered_map>
#include <vector>

#include "greenwalk/relation.hpp"

namespace greenwalk {

// Normal form of a group element: central exponent t plus the reduced letter
// sequence a_{i1}^{e1} ... a_{ik}^{ek} with 1 <= e_j <= m_{i_j} - 1 and
// adjacent factor indices distinct.
struct GroupWord {
    std::int64_t t = 0;
    std::vector<std::pair<std::uint8_t, std::uint8_t>> letters; // (factor index 1..N, exponent)

    bool is_identity() const { return t == 0 && letters.empty(); }
    bool operator==(const GroupWord& o) const { return t == o.t && letters == o.letters; }

    std::string key() const; // canonical packed encoding for hashing
    GroupWord inverse(const WalkSpec& spec) const;
};

// Right-multiplication by a_j^{sign} with normal-form rewriting.
GroupWord word_mul_generator(const GroupWord& w, int j, int sign, const WalkSpec& spec);

// Path counts per group element after a number of steps.
using StateMap = std::unordered_map<std::string, Int>;

struct OracleOptions {
    std::size_t state_limit = 50'000'000;
    int threads = 1;
};

struct OracleResult {
    std::vector<Rat> p;          // p_0 .. p_n
    std::vector<Int> counts;     // identity path counts
    std::size_t peak_states = 0;
};

// Exact return probabilities of the standard random walk by dynamic
// programming over normal forms; aborts with resource_limit when the state
// count exceeds the guard (the error message reports the last completed n).
OracleResult exact_return_probabilities(const WalkSpec& spec, int n_max,
                                        const OracleOptions& opts = {});

} // namespace greenwalk
