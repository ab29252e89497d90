#include "mulli/bg_symbol.hpp"

#include <map>
#include <string>

#include "mulli/error.hpp"
#include "mulli/mullineux.hpp"
#include "mulli/rim.hpp"

namespace mulli {

namespace {

void require_self_conjugate(const Partition& lambda) {
    if (!is_self_conjugate(lambda)) {
        throw Error(ErrorKind::not_self_conjugate, "partition is not self-conjugate");
    }
}

int mod(int x, int p) { return ((x % p) + p) % p; }

// Builds a partition from a node set, insisting every row is 1..len.
Partition partition_from_nodes(const NodeSet& nodes) {
    std::map<int, int> count;
    std::map<int, int> widest;
    for (Cell c : nodes) {
        ++count[c.row];
        widest[c.row] = std::max(widest[c.row], c.col);
    }
    std::vector<int> rows;
    for (const auto& [row, width] : widest) {
        if (row != static_cast<int>(rows.size()) + 1 || count[row] != width) {
            throw Error(ErrorKind::malformed_growth, "added layer leaves a gap in the diagram");
        }
        rows.push_back(width);
    }
    try {
        return Partition(std::move(rows));
    } catch (const Error&) {
        throw Error(ErrorKind::malformed_growth, "added layer breaks the partition shape");
    }
}

}  // namespace

std::vector<Partition> p_rim_star_chain(const Partition& lambda, Modulus p) {
    require_self_conjugate(lambda);
    std::vector<Partition> chain;
    for (Partition cur = lambda; !cur.empty(); cur = remove_p_rim_star(cur, p)) {
        chain.push_back(cur);
    }
    return chain;
}

Symbol compute_bg_symbol(const Partition& lambda, Modulus p) {
    require_self_conjugate(lambda);
    std::vector<SymbolColumn> columns;
    Partition cur = lambda;
    while (!cur.empty()) {
        const PRimStar star = p_rim_star(cur, p);
        columns.push_back({star.a_star, star.r_star});
        cur = remove_cells(cur, star.node_set());
    }
    return Symbol(p, std::move(columns), SymbolKind::bg);
}

Partition extend_by_rim_star(const Partition& base, int eps, int residue, Modulus p) {
    if (eps != 0 && eps != 1) {
        throw Error(ErrorKind::precondition, "eps must be 0 or 1");
    }
    if (residue < 0 || residue >= p.value()) {
        throw Error(ErrorKind::precondition, "residue must lie in [0, p)");
    }
    if (eps == 0 && residue != 0) {
        throw Error(ErrorKind::precondition, "residue must be 0 when eps is 0");
    }
    if (eps == 0 && base.empty()) {
        throw Error(ErrorKind::precondition, "a layer over the empty partition needs eps = 1");
    }
    require_self_conjugate(base);

    NodeSet added;
    auto occupied = [&](Cell c) { return base.contains(c) || added.contains(c); };
    auto first_vacant = [&](int row) {
        Cell c{row, 1};
        while (occupied(c)) ++c.col;
        return c;
    };

    // Only nodes on or above the diagonal are grown; the rest is the mirror.
    const int d = durfee_length(base);
    Cell cur = eps == 0 ? Cell{d, base.part(d) + 1} : Cell{d + 1, d + 1};
    int group = eps == 0 ? p.value() - 1 : residue;
    added.insert(cur);
    while (true) {
        for (; group > 0; --group) {
            const Cell above{cur.row - 1, cur.col};
            cur = above.row >= 1 && !occupied(above) ? above : Cell{cur.row, cur.col + 1};
            added.insert(cur);
        }
        if (cur.row == 1) break;
        cur = first_vacant(cur.row - 1);
        added.insert(cur);
        group = p.value() - 1;
    }

    NodeSet nodes = base.cells();
    for (Cell c : added) {
        nodes.insert(c);
        nodes.insert(transpose(c));
    }
    Partition result = partition_from_nodes(nodes);
    if (!is_self_conjugate(result)) {
        throw Error(ErrorKind::malformed_growth, "added layer is not symmetric");
    }
    return result;
}

Partition bg_to_mullineux(const Partition& lambda, Modulus p) {
    if (!is_bg_partition(lambda, p)) {
        throw Error(ErrorKind::not_bg_partition,
                    "partition is not a BG-partition for p = " + std::to_string(p.value()));
    }
    return reconstruct(compute_bg_symbol(lambda, p).retagged(SymbolKind::mullineux));
}

Partition mullineux_to_bg(const Partition& lambda, Modulus p) {
    if (!is_p_regular(lambda, p) || !is_self_mullineux_symbol(compute_symbol(lambda, p))) {
        throw Error(ErrorKind::not_self_mullineux,
                    "partition is not self-Mullineux for p = " + std::to_string(p.value()));
    }
    const Symbol g = compute_symbol(lambda, p);
    if (g.empty()) return {};

    const std::size_t l = g.size() - 1;
    if (g.epsilon(l) != 1 || g[l].a != 2 * g[l].r - 1) {
        throw Error(ErrorKind::invariant_violation, "last symbol column is not an odd hook");
    }
    Partition mu = Partition::hook(g[l].r, g[l].r);
    for (std::size_t i = l; i-- > 0;) {
        const int eps = g.epsilon(i);
        const int residue = mod(g[i].r - eps, p.value());
        Partition next = extend_by_rim_star(mu, eps, residue, p);

        const PRimStar star = p_rim_star(next, p);
        const bool layer_ok = star.a_star % 2 == eps &&
                              mod(star.r_star - star.eps_star, p.value()) == residue &&
                              remove_cells(next, star.node_set()) == mu;
        if (!layer_ok) {
            throw Error(ErrorKind::invariant_violation,
                        "added p-rim* layer " + std::to_string(i) + " has the wrong statistics");
        }
        if (!is_bg_partition(next, p)) {
            throw Error(ErrorKind::invariant_violation,
                        "intermediate partition at column " + std::to_string(i) +
                            " is not a BG-partition");
        }
        mu = std::move(next);
    }
    return mu;
}

}  // namespace mulli
