#include "mulli/enumeration.hpp"

#include <algorithm>
#include <string>

#include "mulli/bg_symbol.hpp"
#include "mulli/error.hpp"
#include "mulli/mullineux.hpp"

namespace mulli {

void for_each_partition(int n, const std::function<void(const Partition&)>& visit) {
    if (n < 0) throw Error(ErrorKind::precondition, "n must be non-negative");
    if (n > kMaxPartitionSize) throw Error(ErrorKind::precondition, "n is too large");
    if (n == 0) {
        visit(Partition{});
        return;
    }
    std::vector<int> parts{n};
    while (true) {
        visit(Partition(parts));
        int ones = 0;
        while (!parts.empty() && parts.back() == 1) {
            ++ones;
            parts.pop_back();
        }
        if (parts.empty()) return;
        const int x = --parts.back();
        int rest = ones + 1;
        while (rest > x) {
            parts.push_back(x);
            rest -= x;
        }
        if (rest > 0) parts.push_back(rest);
    }
}

std::vector<Partition> partitions_of(int n) {
    std::vector<Partition> out;
    for_each_partition(n, [&](const Partition& lambda) { out.push_back(lambda); });
    return out;
}

bool is_distinct_odd_nondivisible(const Partition& lambda, Modulus p) {
    auto parts = lambda.parts();
    for (std::size_t i = 0; i < parts.size(); ++i) {
        if (parts[i] % 2 == 0 || p.divides(parts[i])) return false;
        if (i > 0 && parts[i] == parts[i - 1]) return false;
    }
    return true;
}

Partition diagonal_hook_partition(const Partition& lambda) {
    if (!is_self_conjugate(lambda)) {
        throw Error(ErrorKind::not_self_conjugate, "diagonal hooks need a self-conjugate partition");
    }
    return Partition(diagonal_hook_lengths(lambda));
}

Partition self_conjugate_from_hooks(const Partition& hooks) {
    auto h = hooks.parts();
    for (std::size_t i = 0; i < h.size(); ++i) {
        if (h[i] % 2 == 0 || (i > 0 && h[i] == h[i - 1])) {
            throw Error(ErrorKind::invalid_partition, "diagonal hooks must be distinct odd numbers");
        }
    }
    const int k = hooks.length();
    // h_ii = 2 (lambda_i - i) + 1 on the diagonal; the rows below the Durfee
    // square are the column lengths of the top k rows.
    std::vector<int> rows;
    for (int i = 1; i <= k; ++i) rows.push_back((hooks.part(i) - 1) / 2 + i);
    const int height = k == 0 ? 0 : rows.front();
    for (int j = k + 1; j <= height; ++j) {
        rows.push_back(static_cast<int>(
            std::count_if(rows.begin(), rows.begin() + k, [j](int r) { return r >= j; })));
    }
    return Partition::from_row_lengths(std::move(rows));
}

CensusReport census(Modulus p, int n) {
    CensusReport report;
    report.p = p;
    report.n = n;
    for_each_partition(n, [&](const Partition& lambda) {
        ++report.all_count;
        if (is_distinct_odd_nondivisible(lambda, p)) report.distinct_odd_nondiv.push_back(lambda);
        if (is_self_conjugate(lambda)) {
            report.self_conjugate.push_back(lambda);
            const bool bg = is_bg_partition(lambda, p);
            const Partition hooks = diagonal_hook_partition(lambda);
            if (bg != is_distinct_odd_nondivisible(hooks, p)) {
                throw Error(ErrorKind::invariant_violation,
                            "BG test disagrees with the diagonal-hook description");
            }
            if (bg) report.bg.push_back(lambda);
        }
        if (is_p_regular(lambda, p)) {
            ++report.p_regular_count;
            if (is_self_mullineux(lambda, p)) report.self_mullineux.push_back(lambda);
        }
    });
    for (const Partition& lambda : report.bg) {
        report.pairs.push_back({lambda, bg_to_mullineux(lambda, p)});
    }
    return report;
}

std::vector<std::int64_t> bg_count_via_gf(Modulus p, int n_max) {
    if (n_max < 0) throw Error(ErrorKind::precondition, "n_max must be non-negative");
    std::vector<std::int64_t> coef(static_cast<std::size_t>(n_max) + 1, 0);
    coef[0] = 1;
    for (int k = 1; k <= n_max; k += 2) {
        if (p.divides(k)) continue;
        for (int j = n_max; j >= k; --j) {
            auto& c = coef[static_cast<std::size_t>(j)];
            if (__builtin_add_overflow(c, coef[static_cast<std::size_t>(j - k)], &c)) {
                throw Error(ErrorKind::overflow,
                            "coefficient of t^" + std::to_string(j) + " exceeds 64 bits");
            }
        }
    }
    return coef;
}

}  // namespace mulli
