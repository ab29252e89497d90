#pragma once

#include <compare>

namespace mulli {

/// The characteristic p: an odd integer >= 3.
///
/// Primality is not required here. Every construction in the library is
/// well-defined for odd p, but the counting and bijection theorems are only
/// known to hold for primes; callers that care check is_prime().
class Modulus {
public:
    /// Throws Error(invalid_p) unless p is odd and at least 3.
    explicit Modulus(int p);

    int value() const noexcept { return p_; }
    bool is_prime() const noexcept;
    bool divides(long long x) const noexcept { return x % p_ == 0; }

    friend auto operator<=>(const Modulus&, const Modulus&) = default;

private:
    int p_;
};

}  // namespace mulli
