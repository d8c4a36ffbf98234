#pragma once

#include <cstdint>
#include <optional>
#include <string>
#include <unordered_map>

#include "aac/chain.hpp"
#include "aac/space.hpp"

namespace aac {

// Persistent canonical_code -> assembly-index cache. The backing file
// holds newline-delimited records `canonical_code,size,index`; codes may
// themselves contain commas, so records are parsed from the right. The
// file is read once on construction and appended to on record().
class MemoCache {
public:
    explicit MemoCache(std::string path);

    std::optional<std::uint64_t> lookup(const std::string& code) const;
    void record(const std::string& code, std::uint64_t size, std::uint64_t index);
    std::size_t size() const { return entries_.size(); }

private:
    std::string path_;
    std::unordered_map<std::string, std::uint64_t> entries_;
};

struct SolveOptions {
    std::uint64_t node_budget = 100'000'000;
    MemoCache* memo = nullptr;  // optional read-through/append cache
};

struct SolveResult {
    std::uint64_t index = 0;
    AssemblyChain witness;           // optimal chain ending at the target
    bool witness_available = false;  // false when answered from the cache
    std::uint64_t nodes = 0;
};

// The minimum length over all assembly chains for the target: 0 with an
// empty witness for a building block, otherwise found by iterative
// deepening from the addition-chain lower bound ℓ(size). The search runs
// top-down over the target's decomposition closure — every object of a
// minimal chain is reachable from the target by repeated decomposition,
// so picking a decomposition for each needed object explores exactly the
// chains a bottom-up gluing search would, in goal-directed order.
// Deterministic: objects and decompositions are expanded in (size,
// canonical code) order. Throws BudgetExceeded (carrying the coarse
// upper bound size−1) when node_budget is exhausted.
SolveResult assembly_index(const Space& space, const Obj& target,
                           const SolveOptions& options = {});

}  // namespace aac
