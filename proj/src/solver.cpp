#include "aac/solver.hpp"

#include <algorithm>
#include <bit>
#include <fstream>
#include <stdexcept>

#include "aac/addition_chains.hpp"
#include "aac/errors.hpp"

namespace aac {

MemoCache::MemoCache(std::string path) : path_(std::move(path)) {
    std::ifstream in(path_);
    std::string line;
    std::size_t lineno = 0;
    while (std::getline(in, line)) {
        ++lineno;
        if (line.empty()) continue;
        auto p2 = line.rfind(',');
        auto p1 = p2 == std::string::npos ? std::string::npos
                                          : line.rfind(',', p2 - 1);
        if (p1 == std::string::npos || p1 == 0) {
            throw ParseError("malformed memo record at line " +
                             std::to_string(lineno));
        }
        try {
            std::uint64_t index = std::stoull(line.substr(p2 + 1));
            entries_[line.substr(0, p1)] = index;
        } catch (const std::exception&) {
            throw ParseError("malformed memo record at line " +
                             std::to_string(lineno));
        }
    }
}

std::optional<std::uint64_t> MemoCache::lookup(const std::string& code) const {
    auto it = entries_.find(code);
    if (it == entries_.end()) return std::nullopt;
    return it->second;
}

void MemoCache::record(const std::string& code, std::uint64_t size,
                       std::uint64_t index) {
    if (!entries_.emplace(code, index).second) return;
    std::ofstream out(path_, std::ios::app);
    out << code << ',' << size << ',' << index << '\n';
}

namespace {

using Mask = std::vector<std::uint64_t>;

// The target's decomposition closure: every object reachable from the
// target by repeatedly splitting, sorted by (size, code). Any chain
// without unused steps stays inside this set, because each step is a
// decomposition part of some later step (ultimately of the target).
struct Universe {
    std::vector<Obj> objs;
    std::vector<std::vector<std::pair<int, int>>> splits;  // id pairs, i <= j
    std::vector<char> is_bb;
    std::vector<int> band;        // floor(log2(size)) per object
    std::vector<int> band_first;  // lowest id with the same size
    int words = 0;
};

Universe build_universe(const Space& space, const Obj& target) {
    std::unordered_map<std::string, Obj> seen;
    std::unordered_map<std::string, std::vector<std::pair<Obj, Obj>>> raw;
    std::vector<Obj> stack{target};
    seen.emplace(target.code, target);
    while (!stack.empty()) {
        Obj cur = stack.back();
        stack.pop_back();
        if (cur.size == 1) continue;
        auto decs = space.decompositions(cur);
        for (const auto& [p, q] : decs) {
            for (const Obj& part : {p, q}) {
                if (seen.emplace(part.code, part).second) stack.push_back(part);
            }
        }
        raw.emplace(cur.code, std::move(decs));
    }

    Universe u;
    for (const auto& [code, obj] : seen) u.objs.push_back(obj);
    std::sort(u.objs.begin(), u.objs.end());
    std::unordered_map<std::string, int> id;
    for (std::size_t i = 0; i < u.objs.size(); ++i)
        id[u.objs[i].code] = static_cast<int>(i);

    int n = static_cast<int>(u.objs.size());
    u.splits.resize(n);
    u.is_bb.resize(n);
    u.band.resize(n);
    u.band_first.resize(n);
    for (int i = 0; i < n; ++i) {
        const Obj& o = u.objs[i];
        u.is_bb[i] = (o.size == 1);
        u.band[i] = 63 - std::countl_zero(o.size);
        u.band_first[i] =
            (i > 0 && u.objs[i - 1].size == o.size) ? u.band_first[i - 1] : i;
        auto it = raw.find(o.code);
        if (it != raw.end()) {
            for (const auto& [p, q] : it->second) {
                int a = id.at(p.code), b = id.at(q.code);
                if (a > b) std::swap(a, b);
                u.splits[i].emplace_back(a, b);
            }
            std::sort(u.splits[i].begin(), u.splits[i].end());
            u.splits[i].erase(
                std::unique(u.splits[i].begin(), u.splits[i].end()),
                u.splits[i].end());
        }
    }
    u.words = (n + 63) / 64;
    return u;
}

bool get_bit(const Mask& m, int i) { return (m[i / 64] >> (i % 64)) & 1; }
void set_bit(Mask& m, int i) { m[i / 64] |= std::uint64_t{1} << (i % 64); }

struct Searcher {
    const Universe& u;
    std::uint64_t node_budget;
    std::uint64_t target_size;
    std::uint64_t nodes = 0;
    int depth = 0;
    // (have-set, justified-set) -> largest remaining budget that failed.
    std::unordered_map<std::string, int> failed;
    std::vector<int> chosen;  // per object: picked split, -1 = none
    Mask solution;

    explicit Searcher(const Universe& universe, std::uint64_t budget,
                      std::uint64_t tsize)
        : u(universe), node_budget(budget), target_size(tsize),
          chosen(universe.objs.size(), -1) {}

    // Largest-size unjustified object, lowest code within that size.
    int pick(const Mask& have, const Mask& justified) const {
        for (int w = u.words - 1; w >= 0; --w) {
            std::uint64_t open = have[w] & ~justified[w];
            if (!open) continue;
            int hi = w * 64 + 63 - std::countl_zero(open);
            int first = u.band_first[hi];
            for (int i = first; i <= hi; ++i) {
                if (get_bit(have, i) && !get_bit(justified, i)) return i;
            }
        }
        return -1;
    }

    // Any completion must hold, for every power-of-two band below its
    // largest unjustified object, at least one non-block object (the
    // halving ladder of that object passes through each band). Bands
    // not yet represented in the have-set each cost one more object.
    int missing_bands(const Mask& have, int top_band) const {
        if (top_band <= 1) return 0;
        std::uint64_t present = 0;
        for (int w = 0; w < u.words; ++w) {
            std::uint64_t bits = have[w];
            while (bits) {
                int i = w * 64 + std::countr_zero(bits);
                bits &= bits - 1;
                if (!u.is_bb[i]) present |= std::uint64_t{1} << u.band[i];
            }
        }
        int missing = 0;
        for (int k = 1; k < top_band; ++k) {
            if (!((present >> k) & 1)) ++missing;
        }
        return missing;
    }

    bool dfs(const Mask& have, const Mask& justified, int count) {
        int x = pick(have, justified);
        if (x < 0) {
            solution = have;
            return true;
        }
        if (++nodes > node_budget) {
            throw BudgetExceeded("assembly-index search budget exhausted",
                                 target_size - 1);
        }
        int rem = depth - count;
        if (count + missing_bands(have, u.band[x] + (u.objs[x].size ==
                                                     (std::uint64_t{1} << u.band[x])
                                                         ? 0
                                                         : 1)) > depth) {
            return false;
        }
        std::string key(reinterpret_cast<const char*>(have.data()),
                        have.size() * sizeof(std::uint64_t));
        key.append(reinterpret_cast<const char*>(justified.data()),
                   justified.size() * sizeof(std::uint64_t));
        auto it = failed.find(key);
        if (it != failed.end() && it->second >= rem) return false;

        Mask next_justified = justified;
        set_bit(next_justified, x);
        for (std::size_t s = 0; s < u.splits[x].size(); ++s) {
            auto [a, b] = u.splits[x][s];
            int added = 0;
            if (!get_bit(have, a) && !u.is_bb[a]) ++added;
            if (b != a && !get_bit(have, b) && !u.is_bb[b]) ++added;
            if (count + added > depth) continue;
            Mask next_have = have;
            if (!u.is_bb[a]) set_bit(next_have, a);
            if (!u.is_bb[b]) set_bit(next_have, b);
            chosen[x] = static_cast<int>(s);
            if (dfs(next_have, next_justified, count + added)) return true;
        }
        chosen[x] = -1;
        auto [slot, fresh] = failed.emplace(std::move(key), rem);
        if (!fresh && slot->second < rem) slot->second = rem;
        return false;
    }
};

AssemblyChain build_witness(const std::string& space_id, const Universe& u,
                            const Mask& solution, const std::vector<int>& chosen) {
    AssemblyChain chain{space_id, {}};
    std::vector<int> step_of(u.objs.size(), 0);
    int n = static_cast<int>(u.objs.size());
    for (int i = 0; i < n; ++i) {
        if (!get_bit(solution, i) || u.is_bb[i]) continue;
        auto [a, b] = u.splits[i][chosen[i]];
        auto ref = [&](int part) {
            return u.is_bb[part] ? ParentRef::of_block(u.objs[part].code)
                                 : ParentRef::of_step(step_of[part]);
        };
        chain.steps.push_back({u.objs[i], ref(a), ref(b)});
        step_of[i] = static_cast<int>(chain.steps.size());
    }
    return chain;
}

}  // namespace

SolveResult assembly_index(const Space& space, const Obj& target,
                           const SolveOptions& options) {
    for (const Obj& b : space.building_blocks()) {
        if (b.code == target.code) {
            return {0, AssemblyChain{space.id(), {}}, true, 0};
        }
    }
    if (target.size <= 1) {
        throw std::invalid_argument(
            "size-1 object is not a building block of this space");
    }
    if (options.memo) {
        if (auto hit = options.memo->lookup(target.code)) {
            return {*hit, AssemblyChain{space.id(), {}}, false, 0};
        }
    }

    Universe u = build_universe(space, target);
    int target_id = -1;
    for (std::size_t i = 0; i < u.objs.size(); ++i) {
        if (u.objs[i].code == target.code) target_id = static_cast<int>(i);
    }

    Searcher searcher(u, options.node_budget, target.size);
    Mask have(u.words, 0), justified(u.words, 0);
    set_bit(have, target_id);
    int lower = shortest_length(target.size);
    for (int d = std::max(1, lower);
         d <= static_cast<int>(target.size) - 1; ++d) {
        searcher.depth = d;
        if (searcher.dfs(have, justified, 1)) {
            SolveResult result;
            result.index = static_cast<std::uint64_t>(d);
            result.witness =
                build_witness(space.id(), u, searcher.solution, searcher.chosen);
            result.witness_available = true;
            result.nodes = searcher.nodes;
            if (options.memo) {
                options.memo->record(target.code, target.size, result.index);
            }
            return result;
        }
    }
    throw std::logic_error("no assembly chain found within the size bound");
}

}  // namespace aac
