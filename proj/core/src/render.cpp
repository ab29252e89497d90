#include "mulli/render.hpp"

#include <map>

#include "mulli/rim.hpp"

namespace mulli {

std::vector<NodeSet> layers(const Partition& lambda, Modulus p, LayerKind kind) {
    std::vector<NodeSet> out;
    Partition cur = lambda;
    while (!cur.empty()) {
        NodeSet nodes = kind == LayerKind::p_rim ? p_rim(cur, p).node_set()
                                                 : p_rim_star(cur, p).node_set();
        cur = remove_cells(cur, nodes);
        out.push_back(std::move(nodes));
    }
    return out;
}

std::string render_highlight(const Partition& lambda, const NodeSet& highlighted) {
    std::string out;
    for (int i = 1; i <= lambda.length(); ++i) {
        for (int j = 1; j <= lambda.part(i); ++j) {
            out += highlighted.contains({i, j}) ? "[#]" : "[ ]";
        }
        out += '\n';
    }
    return out;
}

std::string render_layers(const Partition& lambda, Modulus p, LayerKind kind) {
    std::map<Cell, std::size_t> label;
    const auto all = layers(lambda, p, kind);
    for (std::size_t i = 0; i < all.size(); ++i) {
        for (Cell c : all[i]) label[c] = i;
    }
    const std::size_t width = all.empty() ? 1 : std::to_string(all.size() - 1).size();

    std::string out;
    for (int i = 1; i <= lambda.length(); ++i) {
        for (int j = 1; j <= lambda.part(i); ++j) {
            const std::string text = std::to_string(label.at({i, j}));
            out += '[' + std::string(width - text.size(), ' ') + text + ']';
        }
        out += '\n';
    }
    return out;
}

}  // namespace mulli
