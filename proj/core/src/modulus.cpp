#include "mulli/modulus.hpp"

#include <string>

#include "mulli/error.hpp"

namespace mulli {

Modulus::Modulus(int p) : p_(p) {
    if (p < 3 || p % 2 == 0) {
        throw Error(ErrorKind::invalid_p,
                    "p must be an odd integer >= 3, got " + std::to_string(p));
    }
}

bool Modulus::is_prime() const noexcept {
    for (int d = 3; d * d <= p_; d += 2) {
        if (p_ % d == 0) return false;
    }
    return true;
}

}  // namespace mulli
