#pragma once

#include <cstdint>
#include <functional>
#include <optional>
#include <string>
#include <utility>

#include "aac/card.hpp"
#include "aac/space.hpp"

namespace aac {

// Level-set cardinality provider for one space: k ↦ Card(S(2^k)), the
// number of distinct objects of size 2^k. Values are ≥ 1 and monotone
// non-decreasing in k for strings, graphs, and polyominoes.
struct LevelProfile {
    std::string space_id;
    std::function<Card(int)> card_pow2;
};

// Exact closed-form profile for j-color strings (directed or undirected).
LevelProfile string_profile(int colors, bool directed);

// Generic profile backed by the space's own level counter. The space must
// outlive the profile; counts beyond the enumeration budget come back
// unknown.
LevelProfile counted_profile(const Space& space);

// The least i with 2^i ≥ Card(S(2^{n−i})): the level in a halving
// hierarchy of a size-2^n object below which duplicates are forced.
// Once attained it stays attained for larger i because the level counts
// grow with size. When no i in [0, n−1] qualifies, c == n and attained
// is false (the formulas then keep every min term).
struct CriticalLevel {
    int n = 0;
    int c = 0;
    bool attained = false;
};
CriticalLevel critical_level(int n, const LevelProfile& profile);

// Coarse bracket on the assembly index of any size-s object:
// ⌈log₂ s⌉ ≤ a ≤ s − 1.
std::pair<std::uint64_t, std::uint64_t> coarse_bounds(std::uint64_t s);

// The universal lower bound: the shortest addition-chain length ℓ(s),
// since projecting any assembly chain to sizes yields an addition chain.
std::uint64_t universal_lower(std::uint64_t s);

// Upper bound on the assembly index of any binary-decomposable object of
// size s: writing s = 2^{n₁} + … + 2^{n_H} (n₁ > … > n_H),
//   min{ s−1, (H−1) + Σ_{i=1}^{n₁} min( Σ_j ⌊2^{n_j−i}⌋, Card(S(2^i)) ) }
// where ⌊2^{n_j−i}⌋ = 0 whenever i > n_j. Saturated or unknown level
// counts simply never cap their term (the result stays a valid bound).
std::uint64_t ma_bd(std::uint64_t s, const LevelProfile& profile);

// The same bound evaluated through the critical level of n₁: the terms
// below it collapse to Σ Card(S(2^i)). Equal to ma_bd on every profile
// with monotone level counts; kept separate so the collapse can be
// checked. Requires the collapsed counts to be exact (they are, being
// bounded by 2^{n₁−i}).
std::uint64_t ma_bd_split(std::uint64_t s, const LevelProfile& profile);

// String specialization of ma_bd: evaluates both forms on the exact
// closed-form profile, asserts they agree, and returns the value.
std::uint64_t ma_strings(std::uint64_t s, int colors, bool directed);

// Upper bound on the assembly index of any 2-piece-decomposable object:
//   min{ ⌊s/2⌋, Card(S(2)) } + ⌈s/2⌉ − 1.
// Throws std::domain_error when card_s2 is 0 (no size-2 objects would
// make the construction impossible).
std::uint64_t ma_2pd(std::uint64_t s, std::uint64_t card_s2);

// Which published constant a formula variant uses: the paper-literal
// one, or the count derived from the space's actual level sets when the
// two disagree. Values are always labeled, never silently corrected.
enum class BoundVariant { paper_literal, derived_count };

// ma_2pd specialization for edge-colored connected graphs (size = edge
// count). paper_literal uses C(colors, 2) as the size-2 count and is
// degenerate at one color (throws std::domain_error); derived_count uses
// the true count colors + C(colors, 2).
std::uint64_t ma_ccg(std::uint64_t s, int colors, BoundVariant variant);

// Upper bound for colored polyominoes of s cells via their skeleton
// (s − 1 tree edges assembled from 2-edge pieces), plus one step fixing
// the first cell color:
//   min{ ⌊(s−1)/2⌋, pieces } + ⌈(s−1)/2⌉ − 1 + 1.
// paper_literal uses pieces = 2(colors + C(colors, 2)); derived_count
// uses the two tabulated attachment-piece counts summed.
std::uint64_t ma_poly(std::uint64_t s, int colors, BoundVariant variant);

// Everything known about one object size in one space, as reported by
// the sweep tooling. Absent ma values mean the formula is degenerate
// there (e.g. the paper-literal graph bound at one color).
struct BoundBracket {
    std::uint64_t size = 0;
    std::uint64_t coarse_lower = 0;
    std::uint64_t ell = 0;
    std::optional<std::uint64_t> ma_literal;
    std::optional<std::uint64_t> ma_derived;
    std::uint64_t coarse_upper = 0;
};

// Assembles the bracket for one size of the space named by id ("sd:j",
// "su:j", "g:c", "p:c"): strings report ma_strings under both variant
// labels; graphs and polyominoes report their literal/derived pair, with
// a missing literal value where the formula degenerates. Throws
// ParseError for unknown ids.
BoundBracket bracket_for(const std::string& space_id, std::uint64_t size);

}  // namespace aac
