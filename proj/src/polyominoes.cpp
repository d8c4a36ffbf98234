#include "aac/polyominoes.hpp"

#include <algorithm>
#include <cstdio>
#include <map>
#include <set>
#include <stdexcept>

#include <json.hpp>

#include "aac/errors.hpp"

namespace aac {
namespace {

CellSet translated_to_origin(CellSet cells) {
    int mx = cells.front().x, my = cells.front().y;
    for (const Cell& c : cells) {
        mx = std::min(mx, c.x);
        my = std::min(my, c.y);
    }
    for (Cell& c : cells) {
        c.x -= mx;
        c.y -= my;
    }
    std::sort(cells.begin(), cells.end());
    return cells;
}

bool cells_connected(const CellSet& cells) {
    if (cells.empty()) return false;
    std::set<std::pair<int, int>> todo;
    for (const Cell& c : cells) todo.insert({c.x, c.y});
    std::vector<std::pair<int, int>> stack{*todo.begin()};
    todo.erase(todo.begin());
    while (!stack.empty()) {
        auto [x, y] = stack.back();
        stack.pop_back();
        for (auto [dx, dy] :
             {std::pair{1, 0}, std::pair{-1, 0}, std::pair{0, 1}, std::pair{0, -1}}) {
            auto it = todo.find({x + dx, y + dy});
            if (it != todo.end()) {
                stack.push_back(*it);
                todo.erase(it);
            }
        }
    }
    return todo.empty();
}

// The 8 symmetries of the square lattice.
Cell transform(const Cell& c, int t) {
    int x = c.x, y = c.y;
    if (t & 4) x = -x;                     // reflect
    switch (t & 3) {                       // rotate
        case 0: return {x, y, c.color};
        case 1: return {y, -x, c.color};
        case 2: return {-x, -y, c.color};
        default: return {-y, x, c.color};
    }
}

}  // namespace

CellSet PolyominoSpace::canonical_cells(const CellSet& cells) {
    CellSet best;
    for (int t = 0; t < 8; ++t) {
        CellSet img;
        img.reserve(cells.size());
        for (const Cell& c : cells) img.push_back(transform(c, t));
        img = translated_to_origin(std::move(img));
        if (best.empty() || img < best) best = std::move(img);
    }
    return best;
}

std::string PolyominoSpace::encode(const CellSet& cells) {
    std::string out;
    for (std::size_t i = 0; i < cells.size(); ++i) {
        if (i) out.push_back(';');
        out += std::to_string(cells[i].x) + "." + std::to_string(cells[i].y) +
               "." + std::to_string(cells[i].color);
    }
    return out;
}

CellSet PolyominoSpace::decode(const std::string& code) {
    CellSet out;
    std::size_t pos = 0;
    while (pos < code.size()) {
        auto semi = code.find(';', pos);
        std::string tok = code.substr(
            pos, semi == std::string::npos ? std::string::npos : semi - pos);
        Cell c;
        if (sscanf(tok.c_str(), "%d.%d.%d", &c.x, &c.y, &c.color) != 3)
            throw ParseError("malformed polyomino cell token: " + tok);
        out.push_back(c);
        if (semi == std::string::npos) break;
        pos = semi + 1;
    }
    if (out.empty()) throw ParseError("empty polyomino code");
    std::sort(out.begin(), out.end());
    return out;
}

PolyominoSpace::PolyominoSpace(int colors) : colors_(colors) {
    if (colors < 1) throw std::invalid_argument("palette needs >= 1 color");
}

std::string PolyominoSpace::id() const { return "p:" + std::to_string(colors_); }

Obj PolyominoSpace::make_obj(const CellSet& canonical) const {
    return Obj{encode(canonical), canonical.size()};
}

std::vector<Obj> PolyominoSpace::building_blocks() const {
    std::vector<Obj> out;
    for (int c = 0; c < colors_; ++c) {
        out.push_back(make_obj({{0, 0, c}}));
    }
    std::sort(out.begin(), out.end());
    return out;
}

std::vector<Obj> PolyominoSpace::glue(const Obj& a, const Obj& b) const {
    CellSet ca = decode(a.code);
    CellSet cb = decode(b.code);
    int axmax = 0, aymax = 0;
    for (const Cell& c : ca) {
        axmax = std::max(axmax, c.x);
        aymax = std::max(aymax, c.y);
    }
    std::set<std::string> seen;
    std::vector<Obj> out;
    for (int t = 0; t < 8; ++t) {
        CellSet img;
        img.reserve(cb.size());
        for (const Cell& c : cb) img.push_back(transform(c, t));
        img = translated_to_origin(std::move(img));
        int bxmax = 0, bymax = 0;
        for (const Cell& c : img) {
            bxmax = std::max(bxmax, c.x);
            bymax = std::max(bymax, c.y);
        }
        for (int dx = -bxmax - 1; dx <= axmax + 1; ++dx) {
            for (int dy = -bymax - 1; dy <= aymax + 1; ++dy) {
                CellSet merged = ca;
                std::set<std::pair<int, int>> occupied;
                for (const Cell& c : ca) occupied.insert({c.x, c.y});
                bool overlap = false;
                for (const Cell& c : img) {
                    if (!occupied.insert({c.x + dx, c.y + dy}).second) {
                        overlap = true;
                        break;
                    }
                    merged.push_back({c.x + dx, c.y + dy, c.color});
                }
                if (overlap || !cells_connected(merged)) continue;
                CellSet canon = canonical_cells(merged);
                std::string code = encode(canon);
                if (seen.insert(code).second) {
                    out.push_back(Obj{code, canon.size()});
                }
            }
        }
    }
    std::sort(out.begin(), out.end());
    return out;
}

std::vector<std::pair<Obj, Obj>> PolyominoSpace::decompositions(
    const Obj& x) const {
    CellSet cells = decode(x.code);
    int n = static_cast<int>(cells.size());
    if (n < 2) return {};
    std::set<std::pair<Obj, Obj>> out;
    // Split the cells two ways; fixing cell 0 on one side halves the work.
    for (int mask = 0; mask < (1 << (n - 1)); ++mask) {
        CellSet p1{cells[0]}, p2;
        for (int i = 1; i < n; ++i) {
            if (mask & (1 << (i - 1))) {
                p1.push_back(cells[i]);
            } else {
                p2.push_back(cells[i]);
            }
        }
        if (p2.empty()) continue;
        if (!cells_connected(p1) || !cells_connected(p2)) continue;
        Obj o1 = make_obj(canonical_cells(p1));
        Obj o2 = make_obj(canonical_cells(p2));
        if (o2 < o1) std::swap(o1, o2);
        out.emplace(std::move(o1), std::move(o2));
    }
    return {out.begin(), out.end()};
}

bool PolyominoSpace::embeds(const Obj& sub, const Obj& host) const {
    CellSet s = decode(sub.code);
    CellSet h = decode(host.code);
    if (s.size() > h.size()) return false;
    std::map<std::pair<int, int>, int> hmap;
    int hxmax = 0, hymax = 0;
    for (const Cell& c : h) {
        hmap[{c.x, c.y}] = c.color;
        hxmax = std::max(hxmax, c.x);
        hymax = std::max(hymax, c.y);
    }
    for (int t = 0; t < 8; ++t) {
        CellSet img;
        img.reserve(s.size());
        for (const Cell& c : s) img.push_back(transform(c, t));
        img = translated_to_origin(std::move(img));
        for (int dx = 0; dx <= hxmax; ++dx) {
            for (int dy = 0; dy <= hymax; ++dy) {
                bool ok = true;
                for (const Cell& c : img) {
                    auto it = hmap.find({c.x + dx, c.y + dy});
                    if (it == hmap.end() || it->second != c.color) {
                        ok = false;
                        break;
                    }
                }
                if (ok) return true;
            }
        }
    }
    return false;
}

Card PolyominoSpace::level_cardinality(std::uint64_t size) const {
    if (size == 0) return Card::exact(0);
    if (size == 1) return Card::exact(static_cast<std::uint64_t>(colors_));
    try {
        return Card::exact(enumerate(size, 2'000'000).size());
    } catch (const BudgetExceeded&) {
        return Card::unknown();
    }
}

std::vector<Obj> PolyominoSpace::enumerate(std::uint64_t size,
                                           std::uint64_t max_count) const {
    return enumerate_free(size, colors_, max_count);
}

Obj PolyominoSpace::parse(const std::string& text) const {
    nlohmann::json j;
    try {
        j = nlohmann::json::parse(text);
    } catch (const nlohmann::json::exception& e) {
        throw ParseError(std::string("polyomino JSON: ") + e.what());
    }
    if (!j.is_object() || !j.contains("cells"))
        throw ParseError("polyomino JSON needs {\"cells\": [[x,y,color],...]}");
    CellSet cells;
    try {
        for (const auto& e : j.at("cells")) {
            if (!e.is_array() || e.size() != 3)
                throw ParseError("each cell must be [x, y, color]");
            cells.push_back({e[0].get<int>(), e[1].get<int>(), e[2].get<int>()});
        }
    } catch (const nlohmann::json::exception& e) {
        throw ParseError(std::string("polyomino JSON: ") + e.what());
    }
    if (cells.empty()) throw ParseError("a polyomino needs >= 1 cell");
    std::set<std::pair<int, int>> coords;
    for (const Cell& c : cells) {
        if (c.color < 0 || c.color >= colors_)
            throw ParseError("cell color out of range for " +
                             std::to_string(colors_) + " colors");
        if (!coords.insert({c.x, c.y}).second)
            throw ParseError("duplicate cell coordinates");
    }
    if (!cells_connected(cells))
        throw ParseError("polyomino must be edge-connected");
    return make_obj(canonical_cells(cells));
}

std::uint64_t PolyominoSpace::size_of(const std::string& text) const {
    return parse(text).size;
}

std::string PolyominoSpace::display(const Obj& o) const {
    CellSet cells = decode(o.code);
    nlohmann::json j;
    j["cells"] = nlohmann::json::array();
    for (const Cell& c : cells) {
        j["cells"].push_back({c.x, c.y, c.color});
    }
    return j.dump();
}

std::vector<Obj> enumerate_free(std::uint64_t n, int colors,
                                std::uint64_t max_count) {
    PolyominoSpace space(colors);
    if (n == 0) throw std::invalid_argument("size must be >= 1");
    std::vector<CellSet> layer;
    for (int c = 0; c < colors; ++c) layer.push_back({{0, 0, c}});
    for (std::uint64_t k = 2; k <= n; ++k) {
        std::set<CellSet> next;
        for (const CellSet& p : layer) {
            std::set<std::pair<int, int>> occupied;
            for (const Cell& c : p) occupied.insert({c.x, c.y});
            std::set<std::pair<int, int>> grow;
            for (const Cell& c : p) {
                for (auto [dx, dy] : {std::pair{1, 0}, std::pair{-1, 0},
                                      std::pair{0, 1}, std::pair{0, -1}}) {
                    if (!occupied.count({c.x + dx, c.y + dy}))
                        grow.insert({c.x + dx, c.y + dy});
                }
            }
            for (auto [x, y] : grow) {
                for (int col = 0; col < colors; ++col) {
                    CellSet bigger = p;
                    bigger.push_back({x, y, col});
                    next.insert(PolyominoSpace::canonical_cells(bigger));
                    if (next.size() > max_count) {
                        throw BudgetExceeded("polyomino enumeration at size " +
                                                 std::to_string(k) +
                                                 " exceeds budget",
                                             0);
                    }
                }
            }
        }
        layer.assign(next.begin(), next.end());
    }
    std::vector<Obj> out;
    for (const CellSet& p : layer) {
        out.push_back(Obj{PolyominoSpace::encode(p), p.size()});
    }
    std::sort(out.begin(), out.end());
    return out;
}

Skeleton to_skeleton(const CellSet& cells) {
    Skeleton sk;
    CellSet sorted = cells;
    std::sort(sorted.begin(), sorted.end());
    std::map<std::pair<int, int>, int> index;
    for (std::size_t i = 0; i < sorted.size(); ++i) {
        index[{sorted[i].x, sorted[i].y}] = static_cast<int>(i);
        sk.vertex_colors.push_back(sorted[i].color);
    }
    for (std::size_t i = 0; i < sorted.size(); ++i) {
        for (auto [dx, dy] : {std::pair{1, 0}, std::pair{0, 1}}) {
            auto it = index.find({sorted[i].x + dx, sorted[i].y + dy});
            if (it != index.end()) {
                int u = static_cast<int>(i), v = it->second;
                if (u > v) std::swap(u, v);
                sk.edges.push_back({u, v});
            }
        }
    }
    std::sort(sk.edges.begin(), sk.edges.end());
    return sk;
}

namespace {

// Places skeleton vertices on the grid so that grid adjacency matches the
// skeleton's edge set exactly, keeping the least canonical realization.
// Distinct polyominoes can share a skeleton (a bar and an S-piece are both
// paths), so the least realization makes the choice deterministic.
void place_vertices(const Skeleton& sk,
                    const std::vector<std::vector<int>>& adj,
                    const std::vector<int>& order, std::size_t at,
                    std::map<std::pair<int, int>, int>& grid,
                    std::vector<std::pair<int, int>>& pos,
                    std::vector<char>& placed, CellSet& best) {
    int n = static_cast<int>(sk.vertex_colors.size());
    if (at == order.size()) {
        CellSet out;
        for (int v = 0; v < n; ++v) {
            out.push_back({pos[v].first, pos[v].second, sk.vertex_colors[v]});
        }
        out = PolyominoSpace::canonical_cells(out);
        if (best.empty() || out < best) best = std::move(out);
        return;
    }
    int v = order[at];
    // v is adjacent to at least one placed vertex; try the free neighbors
    // of each such anchor.
    std::set<std::pair<int, int>> candidates;
    for (int u : adj[v]) {
        if (!placed[u]) continue;
        for (auto [dx, dy] : {std::pair{1, 0}, std::pair{-1, 0},
                              std::pair{0, 1}, std::pair{0, -1}}) {
            std::pair<int, int> p{pos[u].first + dx, pos[u].second + dy};
            if (!grid.count(p)) candidates.insert(p);
        }
    }
    std::set<int> v_adj(adj[v].begin(), adj[v].end());
    for (const auto& p : candidates) {
        // Grid adjacency at p must agree with skeleton adjacency of v,
        // over the already-placed vertices.
        bool ok = true;
        for (auto [dx, dy] : {std::pair{1, 0}, std::pair{-1, 0},
                              std::pair{0, 1}, std::pair{0, -1}}) {
            auto it = grid.find({p.first + dx, p.second + dy});
            if (it != grid.end() && !v_adj.count(it->second)) {
                ok = false;
                break;
            }
        }
        if (!ok) continue;
        // Every placed skeleton-neighbor of v must be grid-adjacent to p.
        for (int u : adj[v]) {
            if (!placed[u]) continue;
            int manhattan = std::abs(pos[u].first - p.first) +
                            std::abs(pos[u].second - p.second);
            if (manhattan != 1) {
                ok = false;
                break;
            }
        }
        if (!ok) continue;
        grid[p] = v;
        pos[v] = p;
        placed[v] = 1;
        place_vertices(sk, adj, order, at + 1, grid, pos, placed, best);
        placed[v] = 0;
        grid.erase(p);
    }
}

}  // namespace

CellSet from_skeleton(const Skeleton& sk) {
    int n = static_cast<int>(sk.vertex_colors.size());
    if (n == 0) throw std::invalid_argument("skeleton has no vertices");
    std::vector<std::vector<int>> adj(n);
    for (const auto& e : sk.edges) {
        if (e[0] < 0 || e[0] >= n || e[1] < 0 || e[1] >= n || e[0] == e[1])
            throw std::invalid_argument("skeleton edge out of range");
        adj[e[0]].push_back(e[1]);
        adj[e[1]].push_back(e[0]);
    }
    // BFS order so each vertex after the first touches a placed one.
    std::vector<int> order{0};
    std::vector<char> seen(n, 0);
    seen[0] = 1;
    for (std::size_t i = 0; i < order.size(); ++i) {
        for (int u : adj[order[i]]) {
            if (!seen[u]) {
                seen[u] = 1;
                order.push_back(u);
            }
        }
    }
    if (static_cast<int>(order.size()) != n)
        throw std::invalid_argument("skeleton must be connected");
    std::map<std::pair<int, int>, int> grid;
    grid[{0, 0}] = 0;
    std::vector<std::pair<int, int>> pos(n, {0, 0});
    std::vector<char> placed(n, 0);
    placed[0] = 1;
    CellSet best;
    place_vertices(sk, adj, order, 1, grid, pos, placed, best);
    if (best.empty())
        throw std::invalid_argument(
            "skeleton is not realizable as a polyomino adjacency graph");
    return best;
}

HookedBlockCounts hooked_block_counts(int colors) {
    std::uint64_t c = static_cast<std::uint64_t>(colors);
    return {c + c * (c - 1) / 2, c + c * (c - 1)};
}

}  // namespace aac
