#pragma once

#include "aac/space.hpp"

namespace aac {

// Strings over an alphabet of `colors` symbols. In the directed space two
// strings are equal only if identical; in the undirected space a string and
// its reversal are the same object (codes use the lexicographically smaller
// of the two readings).
//
// Gluing is concatenation (in both orders, and against both readings when
// undirected); a decomposition is a cut into two nonempty pieces; size is
// the length. Symbols serialize as decimal digits for alphabets up to 10
// and as comma-separated integers beyond that.
class StringSpace : public Space {
public:
    explicit StringSpace(int colors, bool directed);

    std::string id() const override;
    std::vector<Obj> building_blocks() const override;
    std::vector<Obj> glue(const Obj& a, const Obj& b) const override;
    std::vector<std::pair<Obj, Obj>> decompositions(const Obj& x) const override;
    bool embeds(const Obj& sub, const Obj& host) const override;
    Card level_cardinality(std::uint64_t size) const override;
    std::vector<Obj> enumerate(std::uint64_t size,
                               std::uint64_t max_count) const override;
    Obj parse(const std::string& text) const override;
    std::uint64_t size_of(const std::string& text) const override;
    std::string display(const Obj& o) const override;

    int colors() const { return colors_; }
    bool directed() const { return directed_; }

private:
    std::string canonical(std::string s) const;

    int colors_;
    bool directed_;
};

// Number of distinct directed strings of the given length over j symbols:
// j^length.
Card directed_string_count(int j, std::uint64_t length);

// Number of distinct undirected strings (up to reversal) of the given
// length over j symbols: (j^length + j^ceil(length/2)) / 2.
Card undirected_string_count(int j, std::uint64_t length);

}  // namespace aac
