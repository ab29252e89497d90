#pragma once

#include <cstddef>
#include <span>
#include <vector>

#include "mulli/modulus.hpp"

namespace mulli {

/// Which construction a two-row symbol came from. The two kinds share one
/// representation; only the meaning of epsilon differs.
enum class SymbolKind { mullineux, bg };

/// One column (a_i ; r_i) of a symbol.
struct SymbolColumn {
    int a = 0;
    int r = 0;

    friend auto operator<=>(const SymbolColumn&, const SymbolColumn&) = default;
};

/// A two-row array
///
///     a_0  a_1  ...  a_l
///     r_0  r_1  ...  r_l
///
/// tagged with its modulus p. The empty symbol (no columns) belongs to the
/// empty partition. Entries must be positive; construction throws
/// Error(invalid_symbol) otherwise.
class Symbol {
public:
    Symbol(Modulus p, std::vector<SymbolColumn> columns, SymbolKind kind = SymbolKind::mullineux);

    Modulus p() const noexcept { return p_; }
    SymbolKind kind() const noexcept { return kind_; }
    std::span<const SymbolColumn> columns() const noexcept { return columns_; }
    std::size_t size() const noexcept { return columns_.size(); }
    bool empty() const noexcept { return columns_.empty(); }
    const SymbolColumn& operator[](std::size_t i) const { return columns_.at(i); }

    std::vector<int> a_row() const;
    std::vector<int> r_row() const;

    /// Sum of the a row.
    long long total() const noexcept;

    /// For a Mullineux symbol: 0 if p | a_i, else 1.
    /// For a BG-symbol: a_i mod 2.
    int epsilon(std::size_t i) const;

    /// Same entries, different role.
    Symbol retagged(SymbolKind kind) const { return Symbol(p_, columns_, kind); }

    /// Compares entries only; the tag and p are compared by operator==.
    bool same_entries(const Symbol& other) const { return columns_ == other.columns_; }

    friend bool operator==(const Symbol& x, const Symbol& y) {
        return x.p_ == y.p_ && x.kind_ == y.kind_ && x.columns_ == y.columns_;
    }

private:
    Modulus p_;
    std::vector<SymbolColumn> columns_;
    SymbolKind kind_;
};

/// 0 if p | a, else 1.
inline int mullineux_epsilon(int a, Modulus p) noexcept { return p.divides(a) ? 0 : 1; }

}  // namespace mulli
