#pragma once

#include <optional>
#include <string>
#include <utility>

#include "weilzeta/abelian/smith.hpp"

namespace weilzeta::abelian {

/// Square integer matrix with entries in [0, m), m = p^s.
class ModMatrix {
public:
    ModMatrix(IntMatrix entries, BigInt modulus);
    static ModMatrix identity(std::size_t n, const BigInt& modulus);
    static ModMatrix scalar(const BigInt& a, const BigInt& modulus) { return ModMatrix(IntMatrix{{0}}, modulus) + a; }

    std::size_t size() const { return m_.rows(); }
    const BigInt& modulus() const { return mod_; }
    const IntMatrix& entries() const { return m_; }
    const BigInt& operator()(std::size_t i, std::size_t j) const { return m_(i, j); }

    /// Same matrix reduced modulo a divisor of the modulus.
    ModMatrix reduced(const BigInt& divisor) const;
    bool is_zero() const;
    ModMatrix pow(unsigned long e) const;

    friend ModMatrix operator+(const ModMatrix& x, const ModMatrix& y);
    friend ModMatrix operator-(const ModMatrix& x, const ModMatrix& y);
    friend ModMatrix operator*(const ModMatrix& x, const ModMatrix& y);
    /// Adds a times the identity.
    friend ModMatrix operator+(const ModMatrix& x, const BigInt& a);
    friend bool operator==(const ModMatrix&, const ModMatrix&) = default;

    std::string to_string() const { return m_.to_string() + " mod " + mod_.get_str(); }

private:
    IntMatrix m_;
    BigInt mod_;
};

/// Writes a prime-power modulus as p^s; InvalidArgument otherwise.
std::pair<unsigned long, unsigned> prime_power_modulus(const BigInt& m);

struct IdempotentLift {
    ModMatrix value;
    unsigned long exponent_n;  // least N with (a - a^2)^N = 0
};

/// a' = (1 - (1 - a)^N)^N for a idempotent modulo p. NotIdempotentModP otherwise.
IdempotentLift lift_idempotent(const ModMatrix& a);

/// Inverse modulo p^s of a matrix invertible modulo p, via the geometric series
/// 1 + (1-u) + ... + (1-u)^{N-1} after scaling to u = 1 mod p. NotUnitModP otherwise.
ModMatrix lift_unit(const ModMatrix& a);

/// Inverse over F_p (Gauss-Jordan); nullopt when singular.
std::optional<IntMatrix> inverse_mod_prime(const IntMatrix& a, unsigned long p);

}  // namespace weilzeta::abelian
