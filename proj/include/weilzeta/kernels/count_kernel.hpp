#pragma once

#include <cstdint>
#include <memory>
#include <span>
#include <string_view>
#include <vector>

#include "weilzeta/finite_field.hpp"

namespace weilzeta::kernels {

/// Zech-logarithm encoding of F_Q: a nonzero element g^k is the code k in
/// [0, Q-2]; zero is the code Q-1. Multiplication adds codes modulo Q-1 and
/// addition uses zech[d] = log(1 + g^d).
using Code = std::int32_t;

/// Largest field order the tables accept (codes and their sums stay in int32).
inline constexpr std::uint64_t kMaxTableOrder = std::uint64_t{1} << 26;

struct LogTables {
    std::uint64_t order = 0;          // Q
    Code group_order = 0;             // Q - 1, also the zero code
    std::vector<Code> log;            // element index -> code
    std::vector<std::uint32_t> exp;   // code in [0, Q-2] -> element index
    std::vector<Code> zech;           // size Q; zech[Q-1] is unused padding

    Code zero() const { return group_order; }
    Code one() const { return 0; }

    Code mul(Code a, Code b) const {
        if (a == group_order || b == group_order) return group_order;
        Code s = a + b;
        return s >= group_order ? s - group_order : s;
    }
    Code add(Code a, Code b) const {
        if (a == group_order) return b;
        if (b == group_order) return a;
        Code d = b - a;
        if (d < 0) d += group_order;
        Code z = zech[static_cast<std::size_t>(d)];
        if (z == group_order) return group_order;
        Code s = a + z;
        return s >= group_order ? s - group_order : s;
    }
    Code neg(Code a) const;
    Code pow(Code a, std::uint64_t e) const {
        if (a == group_order) return e == 0 ? 0 : group_order;
        return static_cast<Code>((static_cast<std::uint64_t>(a) * (e % static_cast<std::uint64_t>(group_order))) %
                                 static_cast<std::uint64_t>(group_order));
    }
    /// Code of the prime-field element v mod p.
    Code from_integer(long long v) const { return log[residue_index(v)]; }

    std::uint64_t characteristic = 0;

private:
    std::size_t residue_index(long long v) const {
        long long p = static_cast<long long>(characteristic);
        long long r = v % p;
        if (r < 0) r += p;
        return static_cast<std::size_t>(r);
    }
};

/// Builds the tables from a primitive element found by scanning elements in
/// index order. SizeExceeded above kMaxTableOrder.
LogTables build_log_tables(const Field& field);

/// Number of x in F_Q with sum_e coeffs[e] x^e = 0 (coeffs low degree first).
std::uint64_t count_roots_scalar(std::span<const Code> coeffs, const LogTables& t);
std::uint64_t count_roots_avx2(std::span<const Code> coeffs, const LogTables& t);

enum class Isa { Scalar, Avx2 };

/// Best instruction set available at runtime; the environment variable
/// WEILZETA_ISA=scalar forces the reference kernel.
Isa detected_isa();
bool isa_available(Isa isa);
std::string_view to_string(Isa isa);

std::uint64_t count_roots(std::span<const Code> coeffs, const LogTables& t, Isa isa);
inline std::uint64_t count_roots(std::span<const Code> coeffs, const LogTables& t) {
    return count_roots(coeffs, t, detected_isa());
}

}  // namespace weilzeta::kernels

namespace weilzeta::kernels {

/// Process-wide cache of tables keyed by (p, degree); thread-safe.
std::shared_ptr<const LogTables> cached_log_tables(const Field& field);

}  // namespace weilzeta::kernels
