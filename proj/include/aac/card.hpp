#pragma once

#include <cstdint>
#include <string>

namespace aac {

// Saturating, possibly-unknown cardinality. Level cardinalities such as
// j^(2^i) overflow 64-bit arithmetic quickly, so counts at or above kCap
// are represented as "saturated": the true value is known to be at least
// kCap. Counts a space cannot feasibly produce (e.g. graph level counts
// beyond the enumeration budget) are "unknown". Arithmetic propagates
// saturation and unknownness; min() against a small exact value stays
// exact for saturated (but not unknown) counts.
class Card {
public:
    static constexpr std::uint64_t kCap = std::uint64_t{1} << 62;

    Card() : v_(0) {}
    static Card exact(std::uint64_t v);
    static Card saturated() { return Card(kCap); }
    static Card unknown() { return Card(kUnknownTag); }

    bool is_unknown() const { return v_ == kUnknownTag; }
    bool is_saturated() const { return !is_unknown() && v_ >= kCap; }
    bool is_exact() const { return v_ < kCap; }
    // Exact value; only meaningful when is_exact().
    std::uint64_t value() const { return v_; }

    Card operator+(Card o) const;
    Card operator*(Card o) const;
    // Halves an exact even value; saturated/unknown pass through.
    Card half() const;
    // base^exp with saturation.
    static Card pow(std::uint64_t base, std::uint64_t exp);

    // min(a, c) as a plain integer, for a < kCap: correct because a
    // saturated true value is at least kCap. Throws std::invalid_argument
    // when c is unknown.
    friend std::uint64_t min_with(std::uint64_t a, Card c);

    // a >= c? Saturated counts exceed any exact a < kCap. Throws
    // std::invalid_argument when c is unknown.
    friend bool covers(std::uint64_t a, Card c);

    friend bool operator==(Card a, Card b) { return a.v_ == b.v_; }

    // "123", ">=4611686018427387904", or "unknown".
    std::string to_string() const;

private:
    static constexpr std::uint64_t kUnknownTag = ~std::uint64_t{0};
    explicit Card(std::uint64_t raw) : v_(raw) {}

    std::uint64_t v_;
};

}  // namespace aac
