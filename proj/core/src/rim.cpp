#include "mulli/rim.hpp"

#include <algorithm>
#include <string>

#include "mulli/error.hpp"

namespace mulli {

std::span<const Cell> PRim::segment(std::size_t s) const {
    const std::size_t begin = segment_starts.at(s);
    const std::size_t end = s + 1 < segment_starts.size() ? segment_starts[s + 1] : cells.size();
    return std::span<const Cell>(cells).subspan(begin, end - begin);
}

NodeSet PRimStar::node_set() const {
    NodeSet out = upper;
    out.insert(lower.begin(), lower.end());
    return out;
}

namespace {

void require_nonempty(const Partition& lambda, const char* what) {
    if (lambda.empty()) {
        throw Error(ErrorKind::empty_partition, std::string(what) + " of the empty partition");
    }
}

void require_self_conjugate(const Partition& lambda) {
    if (!is_self_conjugate(lambda)) {
        throw Error(ErrorKind::not_self_conjugate, "p-rim* needs a self-conjugate partition");
    }
}

}  // namespace

RimPath rim(const Partition& lambda) {
    require_nonempty(lambda, "rim");
    RimPath path;
    for (int i = 1; i <= lambda.length(); ++i) {
        const int leftmost = std::max(1, lambda.part(i + 1));
        for (int j = lambda.part(i); j >= leftmost; --j) path.push_back({i, j});
    }
    return path;
}

PRim p_rim(const Partition& lambda, Modulus p) {
    const RimPath path = rim(lambda);
    const int last_row = lambda.length();

    // row_start[i] = position of the smallest rim label on row i.
    std::vector<std::size_t> row_start(static_cast<std::size_t>(last_row) + 2, path.size());
    for (std::size_t k = path.size(); k-- > 0;) {
        row_start[static_cast<std::size_t>(path[k].row)] = k;
    }

    PRim out;
    std::size_t pos = 0;
    while (true) {
        const std::size_t end = std::min(pos + static_cast<std::size_t>(p.value()), path.size());
        out.segment_starts.push_back(out.cells.size());
        out.cells.insert(out.cells.end(), path.begin() + static_cast<std::ptrdiff_t>(pos),
                         path.begin() + static_cast<std::ptrdiff_t>(end));
        const Cell last = path[end - 1];
        if (last.row == last_row) break;
        pos = row_start[static_cast<std::size_t>(last.row) + 1];
    }
    return out;
}

Partition remove_cells(const Partition& lambda, const NodeSet& cells) {
    std::vector<int> rows(lambda.parts().begin(), lambda.parts().end());
    // NodeSet iterates row by row, columns ascending within a row.
    for (auto it = cells.begin(); it != cells.end();) {
        const int row = it->row;
        int count = 0;
        int first_col = it->col;
        for (; it != cells.end() && it->row == row; ++it) {
            if (it->col != first_col + count || !lambda.contains(*it)) {
                throw Error(ErrorKind::malformed_growth, "removed cells are not a row suffix");
            }
            ++count;
        }
        if (first_col + count - 1 != lambda.part(row)) {
            throw Error(ErrorKind::malformed_growth, "removed cells are not a row suffix");
        }
        rows[static_cast<std::size_t>(row - 1)] -= count;
    }
    try {
        return Partition::from_row_lengths(std::move(rows));
    } catch (const Error&) {
        throw Error(ErrorKind::malformed_growth, "removing cells leaves a non-partition");
    }
}

Partition remove_p_rim(const Partition& lambda, Modulus p) {
    return remove_cells(lambda, p_rim(lambda, p).node_set());
}

PRimStar p_rim_star(const Partition& lambda, Modulus p) {
    require_nonempty(lambda, "p-rim*");
    require_self_conjugate(lambda);
    PRimStar star;
    for (Cell c : p_rim(lambda, p).cells) {
        if (c.row <= c.col) {
            star.upper.insert(c);
            star.lower.insert(transpose(c));
        }
    }
    star.r_star = static_cast<int>(star.upper.size());
    star.a_star = static_cast<int>(star.node_set().size());
    star.eps_star = star.a_star % 2;
    return star;
}

Partition remove_p_rim_star(const Partition& lambda, Modulus p) {
    return remove_cells(lambda, p_rim_star(lambda, p).node_set());
}

}  // namespace mulli
