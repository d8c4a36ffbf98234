#pragma once

#include <cstdint>
#include <map>
#include <string>
#include <vector>

#include "aac/space.hpp"

namespace aac {

// A parent of a chain step: either an earlier step (1-based index) or a
// building block given by its canonical code.
struct ParentRef {
    int step = 0;             // >= 1 when referring to an earlier step
    std::string block;        // building-block code when step == 0

    static ParentRef of_step(int index) { return {index, {}}; }
    static ParentRef of_block(std::string code) { return {0, std::move(code)}; }
    bool is_step() const { return step >= 1; }
    friend bool operator==(const ParentRef&, const ParentRef&) = default;
};

struct ChainStep {
    Obj object;
    ParentRef left_parent;
    ParentRef right_parent;
};

// An assembly addition chain: a duplicate-free sequence of objects, each
// glued from two earlier objects or building blocks, ending at the
// target. The first step's parents are necessarily building blocks.
struct AssemblyChain {
    std::string space_id;
    std::vector<ChainStep> steps;

    std::size_t length() const { return steps.size(); }
    const Obj& target() const { return steps.back().object; }
};

struct VerifyResult {
    bool ok = false;
    std::string diagnostic;   // names the first violated step when !ok
};

// Checks every chain invariant: parents resolve to earlier steps or
// building blocks, sizes add, each object is a gluing of its parents,
// and no object repeats. Throws ParseError for an unknown space id.
VerifyResult verify_chain(const AssemblyChain& chain);

// Same, against an already-constructed space (id is not re-parsed).
VerifyResult verify_chain(const Space& space, const AssemblyChain& chain);

// The size projection: step sizes sorted ascending, deduplicated, with 1
// prepended (building blocks have size 1). The result is an addition
// chain for the target's size, never longer than the assembly chain.
std::vector<std::uint64_t> project_F(const AssemblyChain& chain);

// The multiset of building blocks an object decomposes into, keyed by
// canonical code. Well-defined independently of the decomposition chosen;
// the multiplicities sum to the object's size.
std::map<std::string, std::uint64_t> building_block_multiset(const Space& space,
                                                             const Obj& target);

// All duplicate-free chains of at most max_len steps whose last object is
// target. Steps not feeding the target are allowed (the definition only
// constrains how each object is built), so the search space grows fast;
// keep max_len small. Throws BudgetExceeded when node_budget expansions
// are exhausted.
std::vector<AssemblyChain> enumerate_chains(const Space& space, const Obj& target,
                                            int max_len,
                                            std::uint64_t node_budget = 10'000'000);

}  // namespace aac
