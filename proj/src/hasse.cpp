#include "asmlat/hasse.hpp"

#include <sstream>
#include <stdexcept>
#include <unordered_map>

#include "asmlat/poset.hpp"

namespace asmlat {

HasseGraph build_hasse(int n, std::uint64_t guard) {
    HasseGraph g;
    g.n = n;
    std::unordered_map<Asm, std::size_t, AsmHash> index;
    for (auto& a : enumerate_asms(n, guard)) {
        index.emplace(a, g.nodes.size());
        auto stats = stat_record(a);
        g.nodes.push_back(HasseNode{std::move(a), stats, false});
    }
    std::vector<int> lower_covers(g.nodes.size(), 0);
    for (std::size_t i = 0; i < g.nodes.size(); ++i) {
        for (const auto& e : covers_up(g.nodes[i].matrix)) {
            const auto it = index.find(e.upper);
            if (it == index.end()) {
                throw std::logic_error("cover leaves the enumerated set: " + flat_string(e.upper));
            }
            g.edges.push_back(HasseEdge{i, it->second, e.r, e.s, e.type, e.deltas});
            ++lower_covers[it->second];
        }
    }
    for (std::size_t i = 0; i < g.nodes.size(); ++i) {
        g.nodes[i].join_irreducible = lower_covers[i] == 1;
    }
    return g;
}

std::string node_label(const Asm& a) {
    return is_permutation_matrix(a) ? to_permutation(a).to_string() : flat_string(a);
}

std::string to_dot(const HasseGraph& g, bool highlight_ji) {
    std::ostringstream os;
    os << "digraph asm" << g.n << " {\n";
    os << "  rankdir=BT;\n";
    os << "  node [shape=box];\n";
    for (std::size_t i = 0; i < g.nodes.size(); ++i) {
        os << "  n" << i << " [label=\"" << node_label(g.nodes[i].matrix) << "\"";
        if (highlight_ji && g.nodes[i].join_irreducible) {
            os << ", style=filled";
        }
        os << "];\n";
    }
    for (const auto& e : g.edges) {
        os << "  n" << e.lower << " -> n" << e.upper << " [label=\"t" << e.type << "\"];\n";
    }
    os << "}\n";
    return os.str();
}

}  // namespace asmlat
