#pragma once

#include <cstdint>
#include <map>
#include <string>
#include <vector>

#include "weilzeta/abelian/smith.hpp"
#include "weilzeta/arith.hpp"

namespace weilzeta::abelian {

/// Z^a + Q^b + (Z/n_1 + ... + Z/n_k) + sum over l of (Q_l/Z_l)^{c_l}.
struct AbGroup {
    unsigned free_rank = 0;
    unsigned rational_rank = 0;
    std::vector<BigInt> invariant_factors;         // n_1 | n_2 | ..., each >= 2
    std::map<std::uint64_t, unsigned> cofinite;     // l -> c_l, zero entries omitted

    /// Normalizes arbitrary cyclic orders into an invariant-factor chain.
    static AbGroup make(unsigned a, unsigned b, const std::vector<BigInt>& cyclic,
                        const std::map<std::uint64_t, unsigned>& c = {});
    static AbGroup finite(const std::vector<BigInt>& cyclic) { return make(0, 0, cyclic); }
    static AbGroup trivial() { return {}; }

    bool is_finitely_generated() const { return rational_rank == 0 && cofinite.empty(); }
    bool is_finite() const { return free_rank == 0 && is_finitely_generated(); }
    bool is_trivial() const { return is_finite() && invariant_factors.empty(); }
    bool is_divisible() const { return free_rank == 0 && invariant_factors.empty(); }
    bool is_torsion_free() const { return invariant_factors.empty() && cofinite.empty(); }
    /// Order of a finite group.
    BigInt order() const;
    /// Number of generators of the finitely generated part Z^a + sum Z/n_i.
    std::size_t fg_generators() const { return free_rank + invariant_factors.size(); }

    /// e.g. "Z^2+Q+Z/6+Q_2/Z_2"; "0" for the trivial group.
    std::string to_string() const;
    static AbGroup parse(const std::string& text);

    friend bool operator==(const AbGroup&, const AbGroup&) = default;
};

/// Invariant factors (each >= 2) of a finite group with the given cyclic orders.
std::vector<BigInt> normalize_invariants(const std::vector<BigInt>& cyclic);

/// Map between finitely generated groups: column j is the image of the j-th
/// source generator (free generators first, then torsion generators).
struct GroupHom {
    AbGroup source, target;
    IntMatrix matrix;

    /// Validates shapes and well-definedness; reduces entries mod target torsion.
    GroupHom(AbGroup source, AbGroup target, IntMatrix matrix);
};

struct KernelCokernel {
    bool kernel_finite = false, cokernel_finite = false;
    BigInt kernel_order, cokernel_order;  // valid when finite
    std::vector<BigInt> cokernel_invariants;
    unsigned cokernel_free_rank = 0;
};
KernelCokernel kernel_cokernel(const GroupHom& f);

/// [Ker f]/[Coker f]. NotFinite unless both are finite.
Rational z_value(const GroupHom& f);

/// G/nG.
AbGroup quotient_mod_n(const AbGroup& g, const BigInt& n);

/// Tate module: ranks of Z_l per prime.
std::map<std::uint64_t, unsigned> torsion_T(const AbGroup& g);
std::string tate_to_string(const std::map<std::uint64_t, unsigned>& t);

struct UlmReport {
    AbGroup ulm;        // intersection of nG
    AbGroup divisible;  // largest divisible subgroup
    bool ulm_equals_divisible = false;
    bool quotients_finite = false;
    bool tate_trivial = false;
    bool uniquely_divisible = false;  // meaningful when tate_trivial
    bool tate_trivial_implies_torsion_free = false;
};

/// U(G) from the intersection of the subgroups nG, n = 1..; G_div from divisibility.
UlmReport ulm_and_divisible(const AbGroup& g);

struct Completion {
    unsigned free_rank = 0;            // Z_l-free rank
    std::vector<BigInt> finite_part;   // cyclic l-power orders
    std::string to_string(std::uint64_t l) const;
    friend bool operator==(const Completion&, const Completion&) = default;
};
Completion l_adic_completion(const AbGroup& g, std::uint64_t l);

/// Rows of `relations` are relations among the column generators.
std::vector<BigInt> cyclic_decomposition(const IntMatrix& relations);

struct PairingEmbedding {
    IntMatrix embedding;  // rows(M) x r: x -> (phi(x, y_i))_i
    bool injective = false;
};
/// phi(x, y) = x^T Phi y on Z^a x Z^b with y_i the standard basis of Z^b.
PairingEmbedding pairing_embedding(const IntMatrix& phi);

}  // namespace weilzeta::abelian
