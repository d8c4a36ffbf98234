#include "aac/dag.hpp"

#include <map>

namespace aac {

PathwayDag to_dag(const AssemblyChain& chain) {
    PathwayDag dag;
    std::map<std::string, int> block_vertex;
    // Building blocks first, in order of first reference.
    for (const ChainStep& st : chain.steps) {
        for (const ParentRef* ref : {&st.left_parent, &st.right_parent}) {
            if (ref->is_step()) continue;
            if (block_vertex.emplace(ref->block, static_cast<int>(dag.vertices.size()))
                    .second) {
                dag.vertices.push_back({ref->block, 1, true});
            }
        }
    }
    int step_base = static_cast<int>(dag.vertices.size());
    for (const ChainStep& st : chain.steps) {
        dag.vertices.push_back({st.object.code, st.object.size, false});
    }
    for (std::size_t i = 0; i < chain.steps.size(); ++i) {
        const ChainStep& st = chain.steps[i];
        for (const ParentRef* ref : {&st.left_parent, &st.right_parent}) {
            int from = ref->is_step() ? step_base + ref->step - 1
                                      : block_vertex.at(ref->block);
            dag.edges.emplace_back(from, step_base + static_cast<int>(i));
        }
    }
    if (!chain.steps.empty())
        dag.target = step_base + static_cast<int>(chain.steps.size()) - 1;
    return dag;
}

int e_plus(const PathwayDag& dag) {
    std::vector<int> indegree(dag.vertices.size(), 0);
    for (const auto& [from, to] : dag.edges) ++indegree[to];
    int count = 0;
    for (int d : indegree) count += (d > 0);
    return count;
}

std::string to_dot(const PathwayDag& dag) {
    std::string out = "digraph pathway {\n  rankdir=BT;\n";
    for (std::size_t i = 0; i < dag.vertices.size(); ++i) {
        const DagVertex& v = dag.vertices[i];
        std::string label = v.code;
        // Escape for the DOT string literal.
        std::string escaped;
        for (char c : label) {
            if (c == '"' || c == '\\') escaped.push_back('\\');
            escaped.push_back(c);
        }
        out += "  n" + std::to_string(i) + " [label=\"" + escaped + "\"" +
               (v.building_block ? ", shape=box" : "") +
               (static_cast<int>(i) == dag.target ? ", penwidth=2" : "") + "];\n";
    }
    for (const auto& [from, to] : dag.edges) {
        out += "  n" + std::to_string(from) + " -> n" + std::to_string(to) + ";\n";
    }
    out += "}\n";
    return out;
}

}  // namespace aac
