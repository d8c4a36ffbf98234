#include "aac/bounds.hpp"

#include <algorithm>
#include <bit>
#include <stdexcept>

#include "aac/addition_chains.hpp"
#include "aac/errors.hpp"
#include "aac/graphs.hpp"
#include "aac/polyominoes.hpp"

namespace aac {
namespace {

// Σ_j ⌊2^{n_j − i}⌋ over the binary exponents of s, with terms past the
// exponent contributing nothing (2 to a negative power floors to 0).
std::uint64_t halved_pieces(const std::vector<int>& powers, int i) {
    std::uint64_t sum = 0;
    for (int p : powers) {
        if (p >= i) sum += std::uint64_t{1} << (p - i);
    }
    return sum;
}

// min of a piece count against a level cardinality; saturated or unknown
// counts never cap (the sum only grows, so the bound stays valid).
std::uint64_t capped(std::uint64_t pieces, Card level) {
    if (level.is_exact() && level.value() < pieces) return level.value();
    return pieces;
}

std::uint64_t binom2(std::uint64_t n) { return n * (n - 1) / 2; }

void require_size(std::uint64_t s) {
    if (s < 2) throw std::invalid_argument("bound formulas need size >= 2");
}

}  // namespace

LevelProfile string_profile(int colors, bool directed) {
    if (colors < 1) throw std::invalid_argument("alphabet needs >= 1 symbol");
    std::string id = (directed ? "sd:" : "su:") + std::to_string(colors);
    std::uint64_t j = static_cast<std::uint64_t>(colors);
    if (directed) {
        // Card(S(2^k)) = j^(2^k): every symbol sequence is distinct.
        return {id, [j](int k) { return Card::pow(j, std::uint64_t{1} << k); }};
    }
    // Reversal pairs strings up: (j^(2^k) + j^(2^(k-1))) / 2, the second
    // term counting palindromes once more so each survives the halving.
    return {id, [j](int k) {
                if (k == 0) return Card::exact(j);
                Card all = Card::pow(j, std::uint64_t{1} << k);
                Card pal = Card::pow(j, std::uint64_t{1} << (k - 1));
                return (all + pal).half();
            }};
}

LevelProfile counted_profile(const Space& space) {
    const Space* sp = &space;
    return {space.id(),
            [sp](int k) { return sp->level_cardinality(std::uint64_t{1} << k); }};
}

CriticalLevel critical_level(int n, const LevelProfile& profile) {
    if (n < 1) throw std::invalid_argument("critical level needs n >= 1");
    for (int i = 0; i < n; ++i) {
        Card level = profile.card_pow2(n - i);
        if (!level.is_unknown() && covers(std::uint64_t{1} << i, level)) {
            return {n, i, true};
        }
    }
    return {n, n, false};
}

std::pair<std::uint64_t, std::uint64_t> coarse_bounds(std::uint64_t s) {
    if (s < 1) throw std::invalid_argument("size must be positive");
    std::uint64_t lower = std::bit_width(s - 1);  // ⌈log₂ s⌉
    return {lower, s - 1};
}

std::uint64_t universal_lower(std::uint64_t s) {
    return static_cast<std::uint64_t>(shortest_length(s));
}

std::uint64_t ma_bd(std::uint64_t s, const LevelProfile& profile) {
    require_size(s);
    BinaryDecomposition bd = binary_powers(s);
    std::uint64_t g = static_cast<std::uint64_t>(bd.hamming_weight) - 1;
    int n1 = bd.powers.front();
    for (int i = 1; i <= n1; ++i) {
        g += capped(halved_pieces(bd.powers, i), profile.card_pow2(i));
    }
    return std::min(s - 1, g);
}

std::uint64_t ma_bd_split(std::uint64_t s, const LevelProfile& profile) {
    require_size(s);
    BinaryDecomposition bd = binary_powers(s);
    std::uint64_t g = static_cast<std::uint64_t>(bd.hamming_weight) - 1;
    int n1 = bd.powers.front();
    int c = critical_level(n1, profile).c;
    // Below the critical level every term is capped by the level count
    // (Card(S(2^i)) ≤ 2^{n1−i} there, so the counts are exact numbers).
    for (int i = 1; i <= n1 - c; ++i) {
        Card level = profile.card_pow2(i);
        if (!level.is_exact()) {
            throw std::logic_error(
                "level counts below the critical level must be exact");
        }
        g += level.value();
    }
    for (int k = 1; k <= c; ++k) {
        int i = n1 - c + k;
        g += capped(halved_pieces(bd.powers, i), profile.card_pow2(i));
    }
    return std::min(s - 1, g);
}

std::uint64_t ma_strings(std::uint64_t s, int colors, bool directed) {
    LevelProfile profile = string_profile(colors, directed);
    std::uint64_t direct = ma_bd(s, profile);
    std::uint64_t split = ma_bd_split(s, profile);
    if (direct != split) {
        throw std::logic_error("critical-level rearrangement diverged");
    }
    return direct;
}

std::uint64_t ma_2pd(std::uint64_t s, std::uint64_t card_s2) {
    require_size(s);
    if (card_s2 == 0) {
        throw std::domain_error(
            "no size-2 objects: the 2-piece construction is undefined");
    }
    return std::min(s / 2, card_s2) + (s + 1) / 2 - 1;
}

std::uint64_t ma_ccg(std::uint64_t s, int colors, BoundVariant variant) {
    require_size(s);
    if (colors < 1) throw std::invalid_argument("graphs need >= 1 color");
    if (variant == BoundVariant::paper_literal) {
        std::uint64_t published = binom2(static_cast<std::uint64_t>(colors));
        if (published == 0) {
            throw std::domain_error(
                "published 2-edge count C(colors,2) vanishes at one color; "
                "use the derived-count variant");
        }
        return ma_2pd(s, published);
    }
    return ma_2pd(s, level2_count(colors));
}

std::uint64_t ma_poly(std::uint64_t s, int colors, BoundVariant variant) {
    require_size(s);
    if (colors < 1) throw std::invalid_argument("polyominoes need >= 1 color");
    std::uint64_t c = static_cast<std::uint64_t>(colors);
    std::uint64_t pieces;
    if (variant == BoundVariant::paper_literal) {
        pieces = 2 * (c + binom2(c));
    } else {
        HookedBlockCounts counts = hooked_block_counts(colors);
        pieces = counts.type_a + counts.type_b;
    }
    std::uint64_t edges = s - 1;
    return std::min(edges / 2, pieces) + (edges + 1) / 2 - 1 + 1;
}

BoundBracket bracket_for(const std::string& space_id, std::uint64_t size) {
    auto space = make_space(space_id);  // validates the id
    auto colon = space_id.find(':');
    std::string family = space_id.substr(0, colon);
    int param = std::stoi(space_id.substr(colon + 1));

    BoundBracket b;
    b.size = size;
    auto [lo, hi] = coarse_bounds(size);
    b.coarse_lower = lo;
    b.coarse_upper = hi;
    b.ell = universal_lower(size);
    if (size < 2) return b;  // the ma formulas start at size 2

    if (family == "sd" || family == "su") {
        std::uint64_t v = ma_strings(size, param, family == "sd");
        b.ma_literal = v;
        b.ma_derived = v;
    } else if (family == "g") {
        try {
            b.ma_literal = ma_ccg(size, param, BoundVariant::paper_literal);
        } catch (const std::domain_error&) {
            // one-color degeneracy: leave the literal column empty
        }
        b.ma_derived = ma_ccg(size, param, BoundVariant::derived_count);
    } else {
        b.ma_literal = ma_poly(size, param, BoundVariant::paper_literal);
        b.ma_derived = ma_poly(size, param, BoundVariant::derived_count);
    }
    return b;
}

}  // namespace aac
