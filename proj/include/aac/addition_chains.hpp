#pragma once

#include <cstdint>
#include <optional>
#include <vector>

namespace aac {

using Chain = std::vector<std::uint64_t>;

// Number of additions in a shortest addition chain for n (n >= 1).
// A chain is a strictly increasing sequence 1 = a_0 < a_1 < ... < a_r = n
// where every a_t (t >= 1) is a_i + a_j for some i, j < t. The returned
// value is r, the number of additions performed; see
// shortest_chain_elements() for the element count r + 1.
int shortest_length(std::uint64_t n);

// Element count of a shortest chain: shortest_length(n) + 1.
int shortest_chain_elements(std::uint64_t n);

// One shortest chain for n, deterministic (lexicographically least among
// the optimal chains).
Chain shortest_chain(std::uint64_t n);

// All strictly increasing addition chains ending at n (n >= 2) with at
// most max_steps additions (all of them when max_steps is absent), sorted
// lexicographically. Finite because elements are distinct values <= n.
// Throws BudgetExceeded if more than node_budget search nodes are expanded.
std::vector<Chain> enumerate_chains(std::uint64_t n,
                                    std::optional<int> max_steps = std::nullopt,
                                    std::uint64_t node_budget = 50'000'000);

// The chains of minimal length: enumerate_chains(n, shortest_length(n)).
std::vector<Chain> optimal_chains(std::uint64_t n,
                                  std::uint64_t node_budget = 50'000'000);

// Population count of the binary expansion (number of 1 bits).
int hamming_weight(std::uint64_t n);

// floor(log2(n)) for n >= 1.
int binary_length(std::uint64_t n);

// n = sum of 2^p over powers, with powers strictly decreasing and
// hamming_weight = number of powers.
struct BinaryDecomposition {
    std::uint64_t target;
    std::vector<int> powers;
    int hamming_weight;
};
BinaryDecomposition binary_powers(std::uint64_t n);

// Real-valued bracket on shortest_length(n):
//   log2(n) + log2(hamming_weight(n)) - 2.13  <=  l(n)  <=  log2(n) + hamming_weight(n) - 1
struct RealBracket {
    double lower;
    double upper;
};
RealBracket schonhage_bracket(std::uint64_t n);

// Integer bracket on shortest_length(n) for n >= 3: with m the largest
// exponent such that 2^m < n (so 2^m + 1 <= n <= 2^(m+1)), the shortest
// length lies in [m + 1, 2m].
struct IntBracket {
    int lower;
    int upper;
};
IntBracket scholz_bracket(std::uint64_t n);

}  // namespace aac
