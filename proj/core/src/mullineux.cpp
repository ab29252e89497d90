#include "mulli/mullineux.hpp"

#include <sstream>

#include "mulli/error.hpp"
#include "mulli/rim.hpp"

namespace mulli {

namespace {

void require_p_regular(const Partition& lambda, Modulus p) {
    if (!is_p_regular(lambda, p)) {
        throw Error(ErrorKind::not_p_regular,
                    "partition is not " + std::to_string(p.value()) + "-regular");
    }
}

// Row lengths of a diagram under construction; rows are 1-based and the
// vector grows on demand.
class GrowingDiagram {
public:
    explicit GrowingDiagram(const Partition& start)
        : rows_(start.parts().begin(), start.parts().end()) {}

    int row_length(int row) const {
        return row >= 1 && row <= static_cast<int>(rows_.size())
                   ? rows_[static_cast<std::size_t>(row - 1)]
                   : 0;
    }

    bool vacant(Cell c) const { return c.row >= 1 && c.col > row_length(c.row); }

    void place(Cell c) {
        if (c.row < 1 || row_length(c.row) != c.col - 1) {
            throw Error(ErrorKind::malformed_growth, "node placed away from the end of its row");
        }
        if (c.row > static_cast<int>(rows_.size())) rows_.resize(static_cast<std::size_t>(c.row), 0);
        rows_[static_cast<std::size_t>(c.row - 1)] = c.col;
    }

    Partition to_partition() && {
        try {
            return Partition::from_row_lengths(std::move(rows_));
        } catch (const Error&) {
            throw Error(ErrorKind::malformed_growth, "growth did not produce a partition");
        }
    }

private:
    std::vector<int> rows_;
};

// Adds one p-rim of `count` nodes whose bottom node sits in row `bottom_row`.
void grow_p_rim(GrowingDiagram& diagram, int count, int bottom_row, Modulus p) {
    const int full = p.value();
    int group = count % full == 0 ? full : count % full;
    int remaining = count;

    Cell cur{bottom_row, diagram.row_length(bottom_row) + 1};
    diagram.place(cur);
    --group;
    --remaining;
    while (true) {
        for (; group > 0; --group, --remaining) {
            const Cell above{cur.row - 1, cur.col};
            cur = diagram.vacant(above) ? above : Cell{cur.row, cur.col + 1};
            diagram.place(cur);
        }
        if (cur.row == 1 || remaining == 0) break;
        cur = {cur.row - 1, diagram.row_length(cur.row - 1) + 1};
        diagram.place(cur);
        group = full - 1;
        --remaining;
    }
    if (remaining != 0 || cur.row != 1) {
        throw Error(ErrorKind::malformed_growth, "p-rim growth did not end in row 1");
    }
}

}  // namespace

std::vector<Partition> p_rim_chain(const Partition& lambda, Modulus p) {
    std::vector<Partition> chain;
    for (Partition cur = lambda; !cur.empty(); cur = remove_p_rim(cur, p)) chain.push_back(cur);
    return chain;
}

Symbol compute_symbol(const Partition& lambda, Modulus p) {
    require_p_regular(lambda, p);
    std::vector<SymbolColumn> columns;
    Partition cur = lambda;
    while (!cur.empty()) {
        const PRim layer = p_rim(cur, p);
        columns.push_back({layer.size(), cur.length()});
        cur = remove_cells(cur, layer.node_set());
    }
    return Symbol(p, std::move(columns), SymbolKind::mullineux);
}

SymbolCheck validate_symbol(const Symbol& symbol) {
    const int p = symbol.p().value();
    auto fail = [](int condition, std::size_t i, const std::string& what) {
        std::ostringstream msg;
        msg << "condition (" << condition << ") fails at column " << i << ": " << what;
        return SymbolCheck{false, condition, msg.str()};
    };
    if (symbol.empty()) return {};

    const std::size_t l = symbol.size() - 1;
    auto eps = [&](std::size_t i) { return mullineux_epsilon(symbol[i].a, symbol.p()); };

    for (std::size_t i = 0; i < l; ++i) {
        const int dr = symbol[i].r - symbol[i + 1].r;
        if (!(eps(i) <= dr && dr < p + eps(i))) {
            return fail(1, i, "r_i - r_{i+1} = " + std::to_string(dr) + " out of range");
        }
    }
    {
        const int r = symbol[l].r;
        if (!(1 <= r && r < p + eps(l))) {
            return fail(2, l, "r_l = " + std::to_string(r) + " not in [1, " +
                                  std::to_string(p + eps(l)) + ")");
        }
    }
    for (std::size_t i = 0; i < l; ++i) {
        const int dr = symbol[i].r - symbol[i + 1].r;
        const int da = symbol[i].a - symbol[i + 1].a;
        const int low = dr + eps(i + 1);
        if (!(low <= da && da < p + low)) {
            return fail(3, i, "a_i - a_{i+1} = " + std::to_string(da) + " out of range");
        }
    }
    {
        const int a = symbol[l].a;
        const int r = symbol[l].r;
        if (!(r <= a && a < p + r)) {
            return fail(4, l, "a_l = " + std::to_string(a) + " not in [r_l, p + r_l)");
        }
    }
    return {};
}

Partition reconstruct(const Symbol& symbol) {
    if (const SymbolCheck check = validate_symbol(symbol); !check) {
        throw Error(ErrorKind::invalid_symbol, check.diagnostic);
    }
    if (symbol.empty()) return {};

    const std::size_t l = symbol.size() - 1;
    const SymbolColumn last = symbol[l];
    GrowingDiagram diagram(Partition::hook(last.a - last.r + 1, last.r));
    for (std::size_t i = l; i-- > 0;) {
        grow_p_rim(diagram, symbol[i].a, symbol[i].r, symbol.p());
    }
    return std::move(diagram).to_partition();
}

Partition mullineux_map(const Partition& lambda, Modulus p) {
    const Symbol g = compute_symbol(lambda, p);
    std::vector<SymbolColumn> image;
    image.reserve(g.size());
    for (std::size_t i = 0; i < g.size(); ++i) {
        image.push_back({g[i].a, g[i].a + g.epsilon(i) - g[i].r});
    }
    return reconstruct(Symbol(p, std::move(image)));
}

bool is_self_mullineux_symbol(const Symbol& symbol) {
    for (std::size_t i = 0; i < symbol.size(); ++i) {
        const int eps = mullineux_epsilon(symbol[i].a, symbol.p());
        if (symbol[i].a != 2 * symbol[i].r - eps) return false;
    }
    return true;
}

bool is_self_mullineux(const Partition& lambda, Modulus p) {
    return is_self_mullineux_symbol(compute_symbol(lambda, p));
}

}  // namespace mulli
