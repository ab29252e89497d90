#include "mulli/symbol.hpp"

#include <string>

#include "mulli/error.hpp"

namespace mulli {

Symbol::Symbol(Modulus p, std::vector<SymbolColumn> columns, SymbolKind kind)
    : p_(p), columns_(std::move(columns)), kind_(kind) {
    for (std::size_t i = 0; i < columns_.size(); ++i) {
        if (columns_[i].a < 1 || columns_[i].r < 1) {
            throw Error(ErrorKind::invalid_symbol,
                        "symbol entries must be positive (column " + std::to_string(i) + ")");
        }
    }
}

std::vector<int> Symbol::a_row() const {
    std::vector<int> out;
    out.reserve(columns_.size());
    for (const auto& c : columns_) out.push_back(c.a);
    return out;
}

std::vector<int> Symbol::r_row() const {
    std::vector<int> out;
    out.reserve(columns_.size());
    for (const auto& c : columns_) out.push_back(c.r);
    return out;
}

long long Symbol::total() const noexcept {
    long long n = 0;
    for (const auto& c : columns_) n += c.a;
    return n;
}

int Symbol::epsilon(std::size_t i) const {
    const int a = columns_.at(i).a;
    return kind_ == SymbolKind::bg ? a % 2 : mullineux_epsilon(a, p_);
}

}  // namespace mulli
