#pragma once

#include <cstdint>
#include <stdexcept>
#include <string>

namespace edgeideals {

/**
 * Coefficient field: characteristic 0 (exact rationals) or a prime p.
 * Primes are capped below 2^31 so that modular products fit in 64 bits.
 */
struct FieldSpec {
    std::uint32_t characteristic = 0;

    constexpr bool is_rational() const { return characteristic == 0; }

    bool operator==(const FieldSpec&) const = default;
};

inline bool is_prime(std::uint64_t p) {
    if (p < 2) return false;
    for (std::uint64_t d = 2; d * d <= p; ++d)
        if (p % d == 0) return false;
    return true;
}

inline FieldSpec rationals() { return FieldSpec{0}; }

inline FieldSpec prime_field(std::uint32_t p) {
    if (p >= (std::uint32_t{1} << 31) || !is_prime(p))
        throw std::invalid_argument("characteristic must be a prime below 2^31");
    return FieldSpec{p};
}

inline FieldSpec make_field(std::uint32_t characteristic) {
    return characteristic == 0 ? rationals() : prime_field(characteristic);
}

inline std::string field_name(FieldSpec f) {
    if (f.is_rational()) return "Q";
    if (f.characteristic == 2) return "F2";
    return "Fp:" + std::to_string(f.characteristic);
}

} // namespace edgeideals
