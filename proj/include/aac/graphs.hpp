#pragma once

#include <array>

#include "aac/space.hpp"

namespace aac {

// Edge-colored simple connected graphs. Building blocks are the
// single-edge graphs, one per color. Two graphs are the same object when a
// vertex bijection maps edges onto edges preserving colors.
//
// Gluing g1 with g2 identifies a non-empty subset of g1's vertices with
// distinct vertices of g2 and keeps both edge sets; overlaps that would
// merge two edges into one (parallel edges) are discarded so that the edge
// count stays additive. A decomposition splits the edge set into two parts
// that each induce a connected graph. Size is the edge count.
struct GraphData {
    int vertices = 0;
    // (u, v, color) with u < v, sorted.
    std::vector<std::array<int, 3>> edges;
};

class GraphSpace : public Space {
public:
    explicit GraphSpace(int colors);

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

    // Canonical relabeling of any valid graph data (need not be connected
    // when used internally on decomposition parts before the connectivity
    // check). Exposed for tests.
    static std::string canonical_code(const GraphData& g);
    static GraphData decode(const std::string& code);

private:
    Obj make_obj(const GraphData& g) const;

    int colors_;
};

// Number of distinct connected 2-edge graphs on `colors` edge colors: an
// unordered pair of colors on a 3-vertex path, colors + C(colors, 2).
std::uint64_t level2_count(int colors);

}  // namespace aac
