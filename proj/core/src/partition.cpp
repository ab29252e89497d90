#include "mulli/partition.hpp"

#include <algorithm>
#include <string>

#include "mulli/error.hpp"

namespace mulli {

Partition::Partition(std::vector<int> parts) : parts_(std::move(parts)) {
    long long total = 0;
    for (std::size_t i = 0; i < parts_.size(); ++i) {
        if (parts_[i] < 1) {
            throw Error(ErrorKind::invalid_partition,
                        "partition parts must be positive, got " + std::to_string(parts_[i]));
        }
        if (i > 0 && parts_[i] > parts_[i - 1]) {
            throw Error(ErrorKind::invalid_partition, "partition parts must be weakly decreasing");
        }
        total += parts_[i];
        if (total > kMaxPartitionSize) {
            throw Error(ErrorKind::invalid_partition,
                        "partition size exceeds " + std::to_string(kMaxPartitionSize));
        }
    }
    size_ = static_cast<int>(total);
}

Partition Partition::from_row_lengths(std::vector<int> rows) {
    while (!rows.empty() && rows.back() == 0) rows.pop_back();
    return Partition(std::move(rows));
}

Partition Partition::hook(int first_row, int rows) {
    if (first_row < 1 || rows < 1) {
        throw Error(ErrorKind::invalid_partition, "hook dimensions must be positive");
    }
    std::vector<int> parts(static_cast<std::size_t>(rows), 1);
    parts[0] = first_row;
    return Partition(std::move(parts));
}

NodeSet Partition::cells() const {
    NodeSet out;
    for (int i = 1; i <= length(); ++i) {
        for (int j = 1; j <= part(i); ++j) out.insert({i, j});
    }
    return out;
}

Partition conjugate(const Partition& lambda) {
    if (lambda.empty()) return {};
    std::vector<int> conj(static_cast<std::size_t>(lambda.part(1)), 0);
    for (int part : lambda.parts()) {
        for (int j = 0; j < part; ++j) ++conj[static_cast<std::size_t>(j)];
    }
    return Partition(std::move(conj));
}

namespace {

// lambda'_j without materializing the conjugate.
int column_length(const Partition& lambda, int j) {
    auto parts = lambda.parts();
    return static_cast<int>(std::count_if(parts.begin(), parts.end(),
                                          [j](int part) { return part >= j; }));
}

}  // namespace

int hook_length(const Partition& lambda, Cell c) {
    if (!lambda.contains(c)) {
        throw Error(ErrorKind::cell_outside_diagram,
                    "cell (" + std::to_string(c.row) + "," + std::to_string(c.col) +
                        ") is not in the diagram");
    }
    return lambda.part(c.row) + column_length(lambda, c.col) - c.row - c.col + 1;
}

int durfee_length(const Partition& lambda) noexcept {
    int k = 0;
    while (lambda.part(k + 1) >= k + 1) ++k;
    return k;
}

std::vector<int> diagonal_hook_lengths(const Partition& lambda) {
    const int k = durfee_length(lambda);
    std::vector<int> hooks;
    hooks.reserve(static_cast<std::size_t>(k));
    for (int i = 1; i <= k; ++i) hooks.push_back(hook_length(lambda, {i, i}));
    return hooks;
}

bool is_p_regular(const Partition& lambda, Modulus p) {
    auto parts = lambda.parts();
    for (std::size_t i = 0; i < parts.size();) {
        std::size_t j = i;
        while (j < parts.size() && parts[j] == parts[i]) ++j;
        if (static_cast<int>(j - i) >= p.value()) return false;
        i = j;
    }
    return true;
}

bool is_self_conjugate(const Partition& lambda) { return lambda == conjugate(lambda); }

bool is_bg_partition(const Partition& lambda, Modulus p) {
    if (!is_self_conjugate(lambda)) return false;
    for (int h : diagonal_hook_lengths(lambda)) {
        if (p.divides(h)) return false;
    }
    return true;
}

Partition truncate_to_k(const Partition& lambda) {
    if (lambda.empty()) {
        throw Error(ErrorKind::empty_partition, "truncation needs a nonempty partition");
    }
    auto parts = lambda.parts();
    return Partition(std::vector<int>(parts.begin(), parts.begin() + durfee_length(lambda)));
}

}  // namespace mulli
