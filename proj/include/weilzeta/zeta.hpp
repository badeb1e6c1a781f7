#pragma once

#include <string>
#include <vector>

#include "weilzeta/arith.hpp"
#include "weilzeta/finite_field.hpp"
#include "weilzeta/poly.hpp"

namespace weilzeta {

/// Relative tolerance for matching |alpha| against q^{i/2}.
inline constexpr double kWeightTolerance = 1e-6;

/// Z(X,t) = prod_i P_i(t)^{(-1)^{i+1}}, P_0..P_{2d} integer polynomials with
/// constant term 1.
struct ZetaFunction {
    unsigned d = 0;
    PrimePower q{2, 1};
    std::vector<ZPoly> factors;

    std::vector<long> betti() const;
    /// Product of odd-index factors.
    ZPoly numerator() const;
    /// Product of even-index factors.
    ZPoly denominator() const;

    friend bool operator==(const ZetaFunction&, const ZetaFunction&) = default;
};

/// Power series coefficients of exp(sum_m N_m t^m / m) up to t^M.
std::vector<Rational> zeta_series(const std::vector<BigInt>& counts);

/// Reconstructs the Weil factorization from N_1..N_M and the Betti numbers.
/// Errors: InsufficientCounts (M < sum b_i), NoRationalFit, WeightAmbiguous.
ZetaFunction zeta_from_counts(const PrimePower& q, const std::vector<BigInt>& counts, const std::vector<long>& betti);

/// s_m = sum alpha^m over the inverse roots of P, m = 1..M (Newton's identities).
std::vector<BigInt> power_sums(const ZPoly& P, unsigned M);

/// N_m = sum_i (-1)^i s_m(P_i), m = 1..M.
std::vector<BigInt> expand_counts(const ZetaFunction& z, unsigned M);

struct FunctionalEquation {
    bool holds = false;
    int sign = 0;
    long chi_top = 0;
    std::string detail;
};

/// Checks Z(1/(q^d t)) = sign * q^{d chi/2} t^chi Z(t) exactly.
FunctionalEquation functional_equation_check(const ZetaFunction& z);

struct WeightReport {
    unsigned index = 0;          // i in P_i
    std::vector<double> moduli;  // |alpha| per inverse root, with multiplicity
    double max_relative_deviation = 0;
    bool ok = true;
};

struct RiemannHypothesisReport {
    std::vector<WeightReport> factors;
    bool holds() const;
};

/// Locates every inverse root of P (high precision) and compares |alpha| with q^{weight/2}.
WeightReport check_weight(const ZPoly& P, std::uint64_t q, unsigned weight, double tolerance = kWeightTolerance);
RiemannHypothesisReport riemann_hypothesis_check(const ZetaFunction& z, double tolerance = kWeightTolerance);

}  // namespace weilzeta
