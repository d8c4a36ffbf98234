#include "aac/chain.hpp"

#include <algorithm>
#include <optional>
#include <set>
#include <stdexcept>
#include <unordered_map>

#include "aac/errors.hpp"

namespace aac {
namespace {

std::string step_phrase(std::size_t i) { return "at step " + std::to_string(i + 1); }

// Resolves a parent to its object; empty optional when the reference is
// invalid (forward/self index, or a code that is not a building block).
std::optional<Obj> resolve(const Space& space, const AssemblyChain& chain,
                           const ParentRef& ref, std::size_t step_index) {
    if (ref.is_step()) {
        if (ref.step < 1 || static_cast<std::size_t>(ref.step) > step_index)
            return std::nullopt;
        return chain.steps[ref.step - 1].object;
    }
    for (const Obj& b : space.building_blocks()) {
        if (b.code == ref.block) return b;
    }
    return std::nullopt;
}

}  // namespace

VerifyResult verify_chain(const AssemblyChain& chain) {
    auto space = make_space(chain.space_id);
    return verify_chain(*space, chain);
}

VerifyResult verify_chain(const Space& space, const AssemblyChain& chain) {
    std::set<std::string> seen;
    for (std::size_t i = 0; i < chain.steps.size(); ++i) {
        const ChainStep& st = chain.steps[i];
        std::optional<Obj> left = resolve(space, chain, st.left_parent, i);
        std::optional<Obj> right = resolve(space, chain, st.right_parent, i);
        if (!left || !right) {
            return {false, "unresolvable parent " + step_phrase(i)};
        }
        if (left->size + right->size != st.object.size) {
            return {false, "size additivity violated " + step_phrase(i)};
        }
        auto products = space.glue(*left, *right);
        if (std::find_if(products.begin(), products.end(), [&](const Obj& o) {
                return o.code == st.object.code;
            }) == products.end()) {
            return {false, "object is not a gluing of its parents " + step_phrase(i)};
        }
        if (!seen.insert(st.object.code).second) {
            return {false, "duplicate object " + step_phrase(i)};
        }
    }
    return {true, ""};
}

std::vector<std::uint64_t> project_F(const AssemblyChain& chain) {
    std::set<std::uint64_t> sizes{1};
    for (const ChainStep& st : chain.steps) sizes.insert(st.object.size);
    return {sizes.begin(), sizes.end()};
}

std::map<std::string, std::uint64_t> building_block_multiset(const Space& space,
                                                             const Obj& target) {
    std::map<std::string, std::uint64_t> out;
    std::unordered_map<std::string, std::uint64_t> pending;  // code -> multiplicity
    std::unordered_map<std::string, Obj> objects;
    pending[target.code] = 1;
    objects[target.code] = target;
    // Objects decompose into strictly smaller parts, so repeatedly
    // expanding any largest pending object terminates.
    while (!pending.empty()) {
        auto it = std::max_element(pending.begin(), pending.end(),
                                   [&](const auto& a, const auto& b) {
                                       const Obj& oa = objects[a.first];
                                       const Obj& ob = objects[b.first];
                                       return oa < ob;
                                   });
        Obj obj = objects[it->first];
        std::uint64_t mult = it->second;
        pending.erase(it);
        if (obj.size == 1) {
            out[obj.code] += mult;
            continue;
        }
        auto decs = space.decompositions(obj);
        if (decs.empty()) {
            throw std::invalid_argument("object of size " +
                                        std::to_string(obj.size) +
                                        " admits no decomposition");
        }
        for (const Obj& part : {decs.front().first, decs.front().second}) {
            pending[part.code] += mult;
            objects.emplace(part.code, part);
        }
    }
    return out;
}

std::vector<AssemblyChain> enumerate_chains(const Space& space, const Obj& target,
                                            int max_len,
                                            std::uint64_t node_budget) {
    if (max_len < 1) throw std::invalid_argument("max_len must be >= 1");
    std::vector<AssemblyChain> out;
    std::set<std::vector<std::string>> seen_sequences;
    std::vector<Obj> bbs = space.building_blocks();
    AssemblyChain current{space.id(), {}};
    std::uint64_t nodes = 0;

    // Depth-first over duplicate-free sequences. At each step every pair
    // of available objects (building blocks and earlier steps) is glued;
    // gluings repeating an earlier object are skipped.
    auto rec = [&](auto&& self) -> void {
        if (!current.steps.empty() &&
            current.steps.back().object.code == target.code) {
            std::vector<std::string> sequence;
            for (const ChainStep& st : current.steps)
                sequence.push_back(st.object.code);
            if (seen_sequences.insert(std::move(sequence)).second)
                out.push_back(current);
            // A longer chain would repeat the target or trail junk past
            // it; either way it no longer ends at the target.
            return;
        }
        if (static_cast<int>(current.steps.size()) == max_len) return;
        if (++nodes > node_budget) {
            throw BudgetExceeded("chain enumeration budget exhausted",
                                 static_cast<std::uint64_t>(out.size()));
        }
        std::set<std::string> used;
        for (const ChainStep& st : current.steps) used.insert(st.object.code);

        std::vector<std::pair<ParentRef, Obj>> avail;
        for (const Obj& b : bbs) avail.emplace_back(ParentRef::of_block(b.code), b);
        for (std::size_t i = 0; i < current.steps.size(); ++i)
            avail.emplace_back(ParentRef::of_step(static_cast<int>(i + 1)),
                               current.steps[i].object);

        // The remaining steps can at most double the largest size; stop
        // exploring branches that cannot reach the target any more.
        std::uint64_t max_size = 1;
        for (const auto& [ref, obj] : avail) max_size = std::max(max_size, obj.size);
        int remaining = max_len - static_cast<int>(current.steps.size());
        if (remaining < 64 && (max_size << remaining) < target.size) return;

        std::set<std::string> tried_here;
        for (std::size_t a = 0; a < avail.size(); ++a) {
            for (std::size_t b = a; b < avail.size(); ++b) {
                for (const Obj& prod : space.glue(avail[a].second, avail[b].second)) {
                    if (used.count(prod.code)) continue;
                    if (!tried_here.insert(prod.code).second) continue;
                    current.steps.push_back(
                        {prod, avail[a].first, avail[b].first});
                    self(self);
                    current.steps.pop_back();
                }
            }
        }
    };
    rec(rec);

    std::sort(out.begin(), out.end(), [](const AssemblyChain& x, const AssemblyChain& y) {
        if (x.steps.size() != y.steps.size())
            return x.steps.size() < y.steps.size();
        for (std::size_t i = 0; i < x.steps.size(); ++i) {
            if (!(x.steps[i].object == y.steps[i].object))
                return x.steps[i].object < y.steps[i].object;
        }
        return false;
    });
    return out;
}

}  // namespace aac
