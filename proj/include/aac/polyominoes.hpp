#pragma once

#include <array>

#include "aac/space.hpp"

namespace aac {

// Colored free polyominoes: edge-connected sets of colored unit cells,
// identified up to translation, rotation, and reflection. Building blocks
// are the single cells, one per color.
//
// Gluing places any of the 8 orientations of one piece at any translation
// so that cells are disjoint and the union is edge-connected. A
// decomposition splits the cells into two parts that are each
// edge-connected. Size is the cell count.
struct Cell {
    int x = 0;
    int y = 0;
    int color = 0;
    friend auto operator<=>(const Cell&, const Cell&) = default;
};

using CellSet = std::vector<Cell>;  // sorted, distinct coordinates

class PolyominoSpace : public Space {
public:
    explicit PolyominoSpace(int colors);

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

    // Canonical form: of the 8 symmetry images, translated so min x =
    // min y = 0, the lexicographically least sorted cell sequence.
    static CellSet canonical_cells(const CellSet& cells);
    static std::string encode(const CellSet& cells);
    static CellSet decode(const std::string& code);

private:
    Obj make_obj(const CellSet& canonical) const;

    int colors_;
};

// All distinct colored free polyominoes with n cells.
std::vector<Obj> enumerate_free(std::uint64_t n, int colors,
                                std::uint64_t max_count = 5'000'000);

// The cell-adjacency graph of a polyomino: one vertex per cell carrying the
// cell's color, one edge per pair of side-sharing cells.
struct Skeleton {
    std::vector<int> vertex_colors;
    std::vector<std::array<int, 2>> edges;  // (u, v) with u < v, sorted
};

Skeleton to_skeleton(const CellSet& cells);

// Reconstructs a polyomino whose cell-adjacency graph is sk. Distinct
// polyominoes can share a skeleton (a straight bar and an S-piece are both
// paths), so the canonically least realization is returned; it always
// satisfies to_skeleton(from_skeleton(sk)) ≅ sk. Throws
// std::invalid_argument when sk did not arise from a polyomino (not
// realizable on the grid with exactly the given adjacencies).
CellSet from_skeleton(const Skeleton& sk);

// The two vertex-colored 2-edge attachment-piece counts, exactly as used
// by the polyomino bound: an end-attachment piece has colors + C(colors,2)
// colorings and a middle-attachment piece colors + colors*(colors-1).
struct HookedBlockCounts {
    std::uint64_t type_a;
    std::uint64_t type_b;
};
HookedBlockCounts hooked_block_counts(int colors);

}  // namespace aac
