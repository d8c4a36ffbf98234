#include "aac/addition_chains.hpp"

#include <algorithm>
#include <bit>
#include <cmath>
#include <stdexcept>

#include "aac/errors.hpp"

namespace aac {
namespace {

// True when last * 2^remaining >= n, i.e. the target is still reachable
// by pure doublings within the remaining additions.
bool reachable(std::uint64_t last, int remaining, std::uint64_t n) {
    if (remaining >= 64) return true;
    std::uint64_t need = (n + ((std::uint64_t{1} << remaining) - 1)) >> remaining;
    return last >= need;
}

// Candidate next elements: pairwise sums of chain elements that keep the
// chain strictly increasing and do not overshoot n, ascending.
std::vector<std::uint64_t> next_candidates(const Chain& chain, std::uint64_t n) {
    std::vector<std::uint64_t> out;
    std::uint64_t last = chain.back();
    for (std::size_t i = 0; i < chain.size(); ++i) {
        for (std::size_t j = i; j < chain.size(); ++j) {
            std::uint64_t s = chain[i] + chain[j];
            if (s > last && s <= n) out.push_back(s);
        }
    }
    std::sort(out.begin(), out.end());
    out.erase(std::unique(out.begin(), out.end()), out.end());
    return out;
}

// Depth-limited search for n within `limit` additions, restricted to
// chains in which every new element adds the current maximum to an earlier
// element. Sums are tried in decreasing order (doubling first), and the
// loop stops at the first sum too small for doublings to recover.
bool star_found_within(Chain& chain, std::uint64_t n, int limit) {
    std::uint64_t last = chain.back();
    if (last == n) return true;
    int used = static_cast<int>(chain.size()) - 1;
    int remaining = limit - used;
    if (remaining <= 0 || !reachable(last, remaining, n)) return false;
    for (std::size_t k = chain.size(); k-- > 0;) {
        std::uint64_t s = last + chain[k];
        if (s > n) continue;
        if (!reachable(s, remaining - 1, n)) break;  // sums only shrink from here
        chain.push_back(s);
        bool ok = star_found_within(chain, n, limit);
        chain.pop_back();
        if (ok) return true;
    }
    return false;
}

// Depth-limited search over general chains (any pairwise sum may extend the
// chain). Slower than the restricted search but complete for every n.
bool found_within(Chain& chain, std::uint64_t n, int limit) {
    std::uint64_t last = chain.back();
    if (last == n) return true;
    int used = static_cast<int>(chain.size()) - 1;
    int remaining = limit - used;
    if (remaining <= 0 || !reachable(last, remaining, n)) return false;
    std::vector<std::uint64_t> cand = next_candidates(chain, n);
    for (auto it = cand.rbegin(); it != cand.rend(); ++it) {
        if (!reachable(*it, remaining - 1, n)) break;
        chain.push_back(*it);
        bool ok = found_within(chain, n, limit);
        chain.pop_back();
        if (ok) return true;
    }
    return false;
}

// Below this value every n has a minimal-length chain in which each element
// adds the current maximum to an earlier element, so the restricted search
// is exact. 12509 is the smallest n all of whose minimal chains violate
// that shape; at and above it the general search runs instead.
constexpr std::uint64_t kMaxRestrictedExact = 12509;

// Enumerates every strictly increasing chain extending `chain` that ends at
// n using at most `limit` additions, in lexicographic order.
void collect_chains(Chain& chain, std::uint64_t n, int limit,
                    std::vector<Chain>& out, std::uint64_t node_budget,
                    std::uint64_t& nodes) {
    if (++nodes > node_budget) {
        throw BudgetExceeded("chain enumeration exceeded node budget",
                             out.size());
    }
    std::uint64_t last = chain.back();
    if (last == n) {
        out.push_back(chain);
        return;
    }
    int used = static_cast<int>(chain.size()) - 1;
    int remaining = limit - used;
    if (remaining <= 0 || !reachable(last, remaining, n)) return;
    for (std::uint64_t s : next_candidates(chain, n)) {
        chain.push_back(s);
        collect_chains(chain, n, limit, out, node_budget, nodes);
        chain.pop_back();
    }
}

void check_positive(std::uint64_t n) {
    if (n == 0) throw std::invalid_argument("n must be a positive integer");
}

}  // namespace

int shortest_length(std::uint64_t n) {
    check_positive(n);
    if (n == 1) return 0;
    int start = binary_length(n) + (hamming_weight(n) > 1 ? 1 : 0);
    double lo = std::log2(static_cast<double>(n)) +
                std::log2(static_cast<double>(hamming_weight(n))) - 2.13;
    start = std::max(start, static_cast<int>(std::ceil(lo - 1e-9)));
    Chain chain{1};
    bool restricted = n < kMaxRestrictedExact;
    for (int limit = start;; ++limit) {
        bool hit = restricted ? star_found_within(chain, n, limit)
                              : found_within(chain, n, limit);
        if (hit) return limit;
    }
}

int shortest_chain_elements(std::uint64_t n) { return shortest_length(n) + 1; }

Chain shortest_chain(std::uint64_t n) {
    if (n == 1) return {1};
    std::vector<Chain> best = optimal_chains(n);
    return best.front();
}

std::vector<Chain> enumerate_chains(std::uint64_t n,
                                    std::optional<int> max_steps,
                                    std::uint64_t node_budget) {
    if (n < 2) throw std::invalid_argument("chain enumeration requires n >= 2");
    // Without a step limit, the strictly increasing chain can still hold at
    // most n distinct values, so n - 1 additions always suffice.
    int limit = max_steps ? *max_steps : static_cast<int>(std::min(
                                             n - 1, std::uint64_t{1} << 20));
    std::vector<Chain> out;
    Chain chain{1};
    std::uint64_t nodes = 0;
    collect_chains(chain, n, limit, out, node_budget, nodes);
    std::sort(out.begin(), out.end());
    return out;
}

std::vector<Chain> optimal_chains(std::uint64_t n, std::uint64_t node_budget) {
    return enumerate_chains(n, shortest_length(n), node_budget);
}

int hamming_weight(std::uint64_t n) { return std::popcount(n); }

int binary_length(std::uint64_t n) {
    check_positive(n);
    return std::bit_width(n) - 1;
}

BinaryDecomposition binary_powers(std::uint64_t n) {
    check_positive(n);
    BinaryDecomposition d{n, {}, hamming_weight(n)};
    for (int p = binary_length(n); p >= 0; --p) {
        if ((n >> p) & 1) d.powers.push_back(p);
    }
    return d;
}

RealBracket schonhage_bracket(std::uint64_t n) {
    check_positive(n);
    double lg = std::log2(static_cast<double>(n));
    double h = static_cast<double>(hamming_weight(n));
    return {lg + std::log2(h) - 2.13, lg + h - 1.0};
}

IntBracket scholz_bracket(std::uint64_t n) {
    if (n < 3) throw std::invalid_argument("scholz_bracket requires n >= 3");
    int m = binary_length(n - 1);  // largest m with 2^m < n
    return {m + 1, 2 * m};
}

}  // namespace aac
