#pragma once

// Independent reference for the assembly index: an exhaustive forward
// breadth-first search over gluing products. Shares nothing with the
// production solver, which runs top-down over decompositions — this
// oracle only ever calls glue() and embeds().
//
// State = the set of intermediate objects built so far (order within a
// chain never affects what can be built next, so sets suffice). From a
// state, every gluing of two available objects (building blocks or set
// members) that embeds in the target spawns a successor. The first layer
// containing the target gives the index. Restricting to sub-objects of
// the target loses nothing: removing any step whose object does not
// embed in the target, together with all steps depending on it, leaves a
// shorter chain that still ends at the target.

#include <algorithm>
#include <cstdint>
#include <map>
#include <set>
#include <stdexcept>
#include <string>
#include <vector>

#include "aac/space.hpp"

namespace aac_test {

inline std::uint64_t oracle_index(const aac::Space& space, const aac::Obj& target,
                                  std::uint64_t max_states = 20'000'000) {
    using aac::Obj;
    for (const Obj& b : space.building_blocks()) {
        if (b.code == target.code) return 0;
    }
    if (target.size <= 1) {
        throw std::invalid_argument("target is not an object of this space");
    }

    // Objects are interned so states are small vectors of ids; products
    // of id pairs are memoized since glue() dominates the cost.
    std::vector<Obj> interned;
    std::map<std::string, int> ids;
    auto intern = [&](const Obj& o) {
        auto [it, fresh] = ids.emplace(o.code, static_cast<int>(interned.size()));
        if (fresh) interned.push_back(o);
        return it->second;
    };
    std::vector<int> blocks;
    for (const Obj& b : space.building_blocks()) blocks.push_back(intern(b));
    const int target_id = intern(target);

    std::map<std::pair<int, int>, std::vector<int>> products;
    auto glue_ids = [&](int a, int b) -> const std::vector<int>& {
        if (a > b) std::swap(a, b);
        auto it = products.find({a, b});
        if (it != products.end()) return it->second;
        std::vector<int> out;
        for (const Obj& z : space.glue(interned[a], interned[b])) {
            if (z.code == target.code || space.embeds(z, target)) {
                out.push_back(intern(z));
            }
        }
        return products.emplace(std::pair{a, b}, std::move(out)).first->second;
    };

    using State = std::vector<int>;  // sorted object ids
    std::set<State> visited;
    std::vector<State> frontier{State{}};
    visited.insert(frontier.front());
    std::uint64_t states = 1;

    for (std::uint64_t depth = 1; depth <= target.size - 1; ++depth) {
        std::vector<State> next;
        for (const State& st : frontier) {
            std::vector<int> avail = blocks;
            avail.insert(avail.end(), st.begin(), st.end());
            for (std::size_t i = 0; i < avail.size(); ++i) {
                for (std::size_t j = i; j < avail.size(); ++j) {
                    for (int z : glue_ids(avail[i], avail[j])) {
                        if (z == target_id) return depth;
                        State succ = st;
                        auto pos = std::lower_bound(succ.begin(), succ.end(), z);
                        if (pos != succ.end() && *pos == z) continue;
                        succ.insert(pos, z);
                        if (visited.insert(succ).second) {
                            if (++states > max_states) {
                                throw std::runtime_error("oracle state budget exhausted");
                            }
                            next.push_back(std::move(succ));
                        }
                    }
                }
            }
        }
        frontier = std::move(next);
        if (frontier.empty()) break;
    }
    throw std::logic_error("oracle found no chain within the size bound");
}

}  // namespace aac_test
