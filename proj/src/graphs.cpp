#include "aac/graphs.hpp"

#include <algorithm>
#include <cstdio>
#include <map>
#include <set>
#include <stdexcept>

#include <json.hpp>

#include "aac/errors.hpp"

namespace aac {
namespace {

using Edge = std::array<int, 3>;  // u < v, color

void normalize_edges(std::vector<Edge>& edges) {
    for (auto& e : edges) {
        if (e[0] > e[1]) std::swap(e[0], e[1]);
    }
    std::sort(edges.begin(), edges.end());
}

bool is_connected(const GraphData& g) {
    if (g.vertices == 0) return false;
    std::vector<std::vector<int>> adj(g.vertices);
    for (const auto& e : g.edges) {
        adj[e[0]].push_back(e[1]);
        adj[e[1]].push_back(e[0]);
    }
    std::vector<char> seen(g.vertices, 0);
    std::vector<int> stack{0};
    seen[0] = 1;
    int count = 1;
    while (!stack.empty()) {
        int v = stack.back();
        stack.pop_back();
        for (int u : adj[v]) {
            if (!seen[u]) {
                seen[u] = 1;
                ++count;
                stack.push_back(u);
            }
        }
    }
    return count == g.vertices;
}

// Relabels vertices by `perm` (perm[v] = new label) and serializes.
std::string code_under(const GraphData& g, const std::vector<int>& perm) {
    std::vector<Edge> edges = g.edges;
    for (auto& e : edges) {
        e[0] = perm[e[0]];
        e[1] = perm[e[1]];
    }
    normalize_edges(edges);
    std::string out = std::to_string(g.vertices) + ":";
    for (std::size_t i = 0; i < edges.size(); ++i) {
        if (i) out.push_back('.');
        out += std::to_string(edges[i][0]) + "-" + std::to_string(edges[i][1]) +
               "-" + std::to_string(edges[i][2]);
    }
    return out;
}

// Repeated color refinement until stable: vertices get new colors ordered
// by (old color, sorted multiset of (edge color, neighbor color)). The
// ordering makes the refinement isomorphism-invariant.
std::vector<int> refine(const GraphData& g, std::vector<int> color) {
    int n = g.vertices;
    int old_classes =
        static_cast<int>(std::set<int>(color.begin(), color.end()).size());
    for (;;) {
        std::vector<std::vector<std::pair<int, int>>> nbr(n);
        for (const auto& e : g.edges) {
            nbr[e[0]].emplace_back(e[2], color[e[1]]);
            nbr[e[1]].emplace_back(e[2], color[e[0]]);
        }
        std::vector<std::pair<std::pair<int, std::vector<std::pair<int, int>>>, int>>
            sig(n);
        for (int v = 0; v < n; ++v) {
            std::sort(nbr[v].begin(), nbr[v].end());
            sig[v] = {{color[v], std::move(nbr[v])}, v};
        }
        std::sort(sig.begin(), sig.end());
        std::vector<int> next(n);
        int classes = 0;
        for (int i = 0; i < n; ++i) {
            if (i > 0 && sig[i].first != sig[i - 1].first) ++classes;
            next[sig[i].second] = classes;
        }
        ++classes;
        if (classes == old_classes) return next;
        old_classes = classes;
        color = std::move(next);
    }
}

// Exact canonical search: refine, and while some color class holds several
// vertices, individualize each of its members in turn. The code is the
// minimum serialization over all discrete labelings reached.
void canonical_search(const GraphData& g, std::vector<int> color,
                      std::string& best, bool& have) {
    color = refine(g, color);
    int n = g.vertices;
    // First class with more than one vertex, by color id.
    std::vector<std::vector<int>> members(n);
    for (int v = 0; v < n; ++v) members[color[v]].push_back(v);
    int split = -1;
    for (int c = 0; c < n; ++c) {
        if (members[c].size() > 1) {
            split = c;
            break;
        }
    }
    if (split < 0) {
        std::string code = code_under(g, color);
        if (!have || code < best) {
            best = std::move(code);
            have = true;
        }
        return;
    }
    for (int v : members[split]) {
        std::vector<int> next = color;
        // Individualize v: pull it below the rest of its class.
        for (int u = 0; u < n; ++u) {
            next[u] = 2 * next[u] + (u == v ? 0 : 1);
        }
        canonical_search(g, std::move(next), best, have);
    }
}

GraphData parts_graph(const std::vector<Edge>& edges) {
    GraphData part;
    std::map<int, int> remap;
    for (const auto& e : edges) {
        for (int end : {e[0], e[1]}) {
            if (!remap.count(end)) {
                int id = static_cast<int>(remap.size());
                remap[end] = id;
            }
        }
    }
    part.vertices = static_cast<int>(remap.size());
    for (const auto& e : edges) {
        part.edges.push_back({remap[e[0]], remap[e[1]], e[2]});
    }
    normalize_edges(part.edges);
    return part;
}

// All injective placements of `chosen` (vertices of g1) onto vertices of
// g2, extending `map_to`; calls sink for each complete placement.
template <typename Sink>
void each_injection(const std::vector<int>& chosen, std::size_t at, int n2,
                    std::vector<int>& map_to, std::vector<char>& used,
                    Sink&& sink) {
    if (at == chosen.size()) {
        sink();
        return;
    }
    for (int w = 0; w < n2; ++w) {
        if (used[w]) continue;
        used[w] = 1;
        map_to[chosen[at]] = w;
        each_injection(chosen, at + 1, n2, map_to, used, sink);
        used[w] = 0;
    }
    map_to[chosen[at]] = -1;
}

}  // namespace

GraphSpace::GraphSpace(int colors) : colors_(colors) {
    if (colors < 1) throw std::invalid_argument("palette needs >= 1 color");
}

std::string GraphSpace::id() const { return "g:" + std::to_string(colors_); }

std::string GraphSpace::canonical_code(const GraphData& g) {
    std::string best;
    bool have = false;
    canonical_search(g, std::vector<int>(g.vertices, 0), best, have);
    return best;
}

GraphData GraphSpace::decode(const std::string& code) {
    GraphData g;
    auto colon = code.find(':');
    if (colon == std::string::npos)
        throw ParseError("malformed graph code: " + code);
    g.vertices = std::stoi(code.substr(0, colon));
    std::size_t pos = colon + 1;
    while (pos < code.size()) {
        auto dot = code.find('.', pos);
        std::string tok =
            code.substr(pos, dot == std::string::npos ? std::string::npos
                                                      : dot - pos);
        int u, v, c;
        if (sscanf(tok.c_str(), "%d-%d-%d", &u, &v, &c) != 3)
            throw ParseError("malformed graph edge token: " + tok);
        g.edges.push_back({u, v, c});
        if (dot == std::string::npos) break;
        pos = dot + 1;
    }
    normalize_edges(g.edges);
    return g;
}

Obj GraphSpace::make_obj(const GraphData& g) const {
    return Obj{canonical_code(g), g.edges.size()};
}

std::vector<Obj> GraphSpace::building_blocks() const {
    std::vector<Obj> out;
    for (int c = 0; c < colors_; ++c) {
        GraphData g;
        g.vertices = 2;
        g.edges.push_back({0, 1, c});
        out.push_back(make_obj(g));
    }
    std::sort(out.begin(), out.end());
    return out;
}

std::vector<Obj> GraphSpace::glue(const Obj& a, const Obj& b) const {
    GraphData g1 = decode(a.code);
    GraphData g2 = decode(b.code);
    // Overlap the smaller vertex set into the larger.
    if (g1.vertices > g2.vertices) std::swap(g1, g2);
    int n1 = g1.vertices, n2 = g2.vertices;
    std::set<std::string> seen;
    std::vector<Obj> out;

    std::set<std::pair<int, int>> pairs2;
    for (const auto& e : g2.edges) pairs2.insert({e[0], e[1]});

    for (int mask = 1; mask < (1 << n1); ++mask) {
        std::vector<int> chosen;
        for (int v = 0; v < n1; ++v) {
            if (mask & (1 << v)) chosen.push_back(v);
        }
        std::vector<int> map_to(n1, -1);
        std::vector<char> used(n2, 0);
        each_injection(chosen, 0, n2, map_to, used, [&]() {
            // Identified vertices take g2 ids; the rest get fresh ids.
            GraphData merged;
            merged.vertices = n2;
            std::vector<int> full(n1, -1);
            for (int v = 0; v < n1; ++v) {
                full[v] = map_to[v] >= 0 ? map_to[v] : merged.vertices++;
            }
            merged.edges = g2.edges;
            std::set<std::pair<int, int>> pairs = pairs2;
            for (const auto& e : g1.edges) {
                int u = full[e[0]], v = full[e[1]];
                if (u > v) std::swap(u, v);
                if (!pairs.insert({u, v}).second) return;  // parallel edge
                merged.edges.push_back({u, v, e[2]});
            }
            normalize_edges(merged.edges);
            std::string code = canonical_code(merged);
            if (seen.insert(code).second) {
                out.push_back(Obj{code, merged.edges.size()});
            }
        });
    }
    std::sort(out.begin(), out.end());
    return out;
}

std::vector<std::pair<Obj, Obj>> GraphSpace::decompositions(
    const Obj& x) const {
    GraphData g = decode(x.code);
    int m = static_cast<int>(g.edges.size());
    std::set<std::pair<Obj, Obj>> out;
    if (m < 2) return {};
    // Split the edge set two ways; fixing edge 0 on one side halves the
    // work without losing unordered pairs.
    for (int mask = 0; mask < (1 << (m - 1)); ++mask) {
        std::vector<Edge> e1, e2;
        e1.push_back(g.edges[0]);
        for (int i = 1; i < m; ++i) {
            if (mask & (1 << (i - 1))) {
                e1.push_back(g.edges[i]);
            } else {
                e2.push_back(g.edges[i]);
            }
        }
        if (e2.empty()) continue;
        GraphData p1 = parts_graph(e1);
        GraphData p2 = parts_graph(e2);
        if (!is_connected(p1) || !is_connected(p2)) continue;
        Obj o1 = make_obj(p1);
        Obj o2 = make_obj(p2);
        if (o2 < o1) std::swap(o1, o2);
        out.emplace(std::move(o1), std::move(o2));
    }
    return {out.begin(), out.end()};
}

bool GraphSpace::embeds(const Obj& sub, const Obj& host) const {
    GraphData s = decode(sub.code);
    GraphData h = decode(host.code);
    if (s.edges.size() > h.edges.size() || s.vertices > h.vertices)
        return false;
    std::set<std::array<int, 3>> host_edges(h.edges.begin(), h.edges.end());
    auto has_edge = [&](int u, int v, int c) {
        if (u > v) std::swap(u, v);
        return host_edges.count({u, v, c}) > 0;
    };
    // Map sub vertices one at a time (sub is connected, so BFS order keeps
    // each new vertex adjacent to a mapped one).
    std::vector<int> order;
    {
        std::vector<std::vector<std::pair<int, int>>> adj(s.vertices);
        for (const auto& e : s.edges) {
            adj[e[0]].emplace_back(e[1], e[2]);
            adj[e[1]].emplace_back(e[0], e[2]);
        }
        std::vector<char> seen(s.vertices, 0);
        order.push_back(0);
        seen[0] = 1;
        for (std::size_t i = 0; i < order.size(); ++i) {
            for (auto [u, c] : adj[order[i]]) {
                if (!seen[u]) {
                    seen[u] = 1;
                    order.push_back(u);
                }
            }
        }
    }
    std::vector<int> map_to(s.vertices, -1);
    std::vector<char> used(h.vertices, 0);
    auto rec = [&](auto&& self, std::size_t at) -> bool {
        if (at == order.size()) return true;
        int v = order[at];
        for (int w = 0; w < h.vertices; ++w) {
            if (used[w]) continue;
            map_to[v] = w;
            bool ok = true;
            for (const auto& e : s.edges) {
                int a = e[0], b = e[1];
                if (a != v && b != v) continue;
                int other = a == v ? b : a;
                if (map_to[other] < 0) continue;
                if (!has_edge(w, map_to[other], e[2])) {
                    ok = false;
                    break;
                }
            }
            if (ok) {
                used[w] = 1;
                if (self(self, at + 1)) return true;
                used[w] = 0;
            }
            map_to[v] = -1;
        }
        return false;
    };
    return rec(rec, 0);
}

Card GraphSpace::level_cardinality(std::uint64_t size) const {
    if (size == 0) return Card::exact(0);
    if (size == 1) return Card::exact(static_cast<std::uint64_t>(colors_));
    if (size == 2) return Card::exact(level2_count(colors_));
    try {
        return Card::exact(enumerate(size, 2'000'000).size());
    } catch (const BudgetExceeded&) {
        return Card::unknown();
    }
}

std::vector<Obj> GraphSpace::enumerate(std::uint64_t size,
                                       std::uint64_t max_count) const {
    if (size == 0) throw std::invalid_argument("size must be >= 1");
    std::vector<Obj> layer = building_blocks();
    std::vector<Obj> blocks = layer;
    for (std::uint64_t k = 2; k <= size; ++k) {
        std::set<Obj> next;
        for (const Obj& g : layer) {
            for (const Obj& bb : blocks) {
                for (Obj& r : glue(g, bb)) {
                    next.insert(std::move(r));
                    if (next.size() > max_count) {
                        throw BudgetExceeded(
                            "graph enumeration at size " + std::to_string(k) +
                                " exceeds budget",
                            0);
                    }
                }
            }
        }
        layer.assign(next.begin(), next.end());
    }
    return layer;
}

Obj GraphSpace::parse(const std::string& text) const {
    nlohmann::json j;
    try {
        j = nlohmann::json::parse(text);
    } catch (const nlohmann::json::exception& e) {
        throw ParseError(std::string("graph JSON: ") + e.what());
    }
    if (!j.is_object() || !j.contains("vertices") || !j.contains("edges"))
        throw ParseError("graph JSON needs {\"vertices\": n, \"edges\": [[u,v,color],...]}");
    GraphData g;
    try {
        g.vertices = j.at("vertices").get<int>();
        for (const auto& e : j.at("edges")) {
            if (!e.is_array() || e.size() != 3)
                throw ParseError("each edge must be [u, v, color]");
            g.edges.push_back({e[0].get<int>(), e[1].get<int>(), e[2].get<int>()});
        }
    } catch (const nlohmann::json::exception& e) {
        throw ParseError(std::string("graph JSON: ") + e.what());
    }
    if (g.vertices < 2) throw ParseError("a graph object needs >= 2 vertices");
    std::set<std::pair<int, int>> pairs;
    std::vector<char> touched(g.vertices, 0);
    for (auto& e : g.edges) {
        if (e[0] < 0 || e[0] >= g.vertices || e[1] < 0 || e[1] >= g.vertices)
            throw ParseError("edge endpoint out of range");
        if (e[0] == e[1]) throw ParseError("loops are not allowed");
        if (e[2] < 0 || e[2] >= colors_)
            throw ParseError("edge color out of range for " +
                             std::to_string(colors_) + " colors");
        int u = std::min(e[0], e[1]), v = std::max(e[0], e[1]);
        if (!pairs.insert({u, v}).second)
            throw ParseError("parallel edges are not allowed");
        touched[e[0]] = touched[e[1]] = 1;
    }
    if (g.edges.empty()) throw ParseError("a graph object needs >= 1 edge");
    for (int v = 0; v < g.vertices; ++v) {
        if (!touched[v])
            throw ParseError("vertex " + std::to_string(v) + " touches no edge");
    }
    normalize_edges(g.edges);
    if (!is_connected(g)) throw ParseError("graph must be connected");
    return make_obj(g);
}

std::uint64_t GraphSpace::size_of(const std::string& text) const {
    return parse(text).size;
}

std::string GraphSpace::display(const Obj& o) const {
    GraphData g = decode(o.code);
    nlohmann::json j;
    j["vertices"] = g.vertices;
    j["edges"] = nlohmann::json::array();
    for (const auto& e : g.edges) {
        j["edges"].push_back({e[0], e[1], e[2]});
    }
    return j.dump();
}

std::uint64_t level2_count(int colors) {
    std::uint64_t c = static_cast<std::uint64_t>(colors);
    return c + c * (c - 1) / 2;
}

}  // namespace aac
