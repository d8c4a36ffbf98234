#pragma once

#include <compare>
#include <cstdint>
#include <memory>
#include <string>
#include <utility>
#include <vector>

#include "aac/card.hpp"

namespace aac {

// An object in an assembly space: canonical code plus size. Codes are
// canonical (two equal objects always carry identical codes) and unique
// within one space. They may contain commas but never newlines.
struct Obj {
    std::string code;
    std::uint64_t size = 0;

    friend bool operator==(const Obj& a, const Obj& b) {
        return a.code == b.code;
    }
    friend std::strong_ordering operator<=>(const Obj& a, const Obj& b) {
        if (auto c = a.size <=> b.size; c != 0) return c;
        return a.code <=> b.code;
    }
};

struct ObjHash {
    std::size_t operator()(const Obj& o) const {
        return std::hash<std::string>{}(o.code);
    }
};

// An assembly space: a set of objects with irreducible building blocks of
// size 1 and a gluing operation that combines two objects into one or more
// results whose size is the sum of the inputs' sizes.
class Space {
public:
    virtual ~Space() = default;

    // Stable identifier, also accepted by make_space (e.g. "sd:2" for
    // directed 2-color strings, "su:3", "g:2", "p:1").
    virtual std::string id() const = 0;

    // The size-1 objects, sorted by code.
    virtual std::vector<Obj> building_blocks() const = 0;

    // Every result of gluing a and b, deduplicated and sorted. Symmetric:
    // glue(a, b) == glue(b, a).
    virtual std::vector<Obj> glue(const Obj& a, const Obj& b) const = 0;

    // Every unordered pair {p, q} with x among glue(p, q), each pair with
    // p <= q, deduplicated and sorted. Parts are strictly smaller than x.
    virtual std::vector<std::pair<Obj, Obj>> decompositions(
        const Obj& x) const = 0;

    // Whether sub occurs inside host (as substring, subgraph with matching
    // colors, or sub-polyomino respectively).
    virtual bool embeds(const Obj& sub, const Obj& host) const = 0;

    // Number of distinct objects of the given size.
    virtual Card level_cardinality(std::uint64_t size) const = 0;

    // All objects of the given size, sorted by code. Intended for small
    // sizes; throws BudgetExceeded when more than max_count objects exist.
    virtual std::vector<Obj> enumerate(std::uint64_t size,
                                       std::uint64_t max_count) const = 0;

    // Parses user text into a canonical object; throws ParseError on
    // malformed input.
    virtual Obj parse(const std::string& text) const = 0;

    // Size of the object encoded by text, without full canonicalization.
    virtual std::uint64_t size_of(const std::string& text) const;

    // Human-readable rendering of an object.
    virtual std::string display(const Obj& o) const = 0;
};

// Builds the space named by id: "sd:<j>" directed j-color strings,
// "su:<j>" undirected j-color strings, "g:<c>" connected graphs with
// c edge colors, "p:<c>" free polyominoes with c cell colors.
// Throws ParseError for unknown ids or out-of-range parameters.
std::unique_ptr<Space> make_space(const std::string& id);

}  // namespace aac
