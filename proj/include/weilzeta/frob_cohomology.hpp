#pragma once

#include <optional>
#include <string>
#include <vector>

#include "weilzeta/arith.hpp"
#include "weilzeta/finite_field.hpp"
#include "weilzeta/poly.hpp"
#include "weilzeta/zeta.hpp"

namespace weilzeta {

/// Characteristic polynomials det(1 - F t | H^i) of geometric Frobenius,
/// i = 0..2d, either taken from a reconstructed zeta function or entered
/// directly.
struct FrobData {
    unsigned d = 0;
    PrimePower q{2, 1};
    std::vector<ZPoly> polys;

    /// Validates constant terms and odd length; weights are checked with
    /// check_weight and reported through `weights_ok`.
    static FrobData from_polys(const PrimePower& q, std::vector<ZPoly> polys);
    static FrobData from_zeta(const ZetaFunction& z);

    bool weights_ok() const;
};

/// Order of a Gamma_0-cohomology group: finite with a (rational, product
/// formula) order, or of positive rank.
struct CohomologyOrder {
    bool finite = true;
    Rational order{1};
    long rank = 0;

    static CohomologyOrder finite_order(Rational o) { return {true, std::move(o), 0}; }
    static CohomologyOrder infinite(long rank) { return {false, Rational(0), rank}; }
    std::string to_string() const;
};

/// H^j(Gamma_0, H^i(Xbar)(r)): invariants, coinvariants, and zero above.
struct Gamma0Cohomology {
    unsigned degree = 0;
    long r = 0;
    long rho = 0;             // multiplicity of q^r as an inverse root of P_i
    CohomologyOrder h0;       // M^{Gamma_0}
    CohomologyOrder h1;       // M_{Gamma_0}
    Rational residual;        // |P_i*(q^{-r})| with (1 - q^r t)^rho removed

    /// H^j for any j; zero (order 1) for j >= 2.
    CohomologyOrder h(unsigned j) const;
};

Gamma0Cohomology gamma0_cohomology(const ZPoly& P, unsigned degree, std::uint64_t q, long r);

struct PrimePart {
    std::string prime;  // decimal, or "rest" for an unfactored cofactor
    long exponent;      // signed: numerator positive, denominator negative
};

/// l-primary breakdown of a positive rational (trial division below 10^6).
std::vector<PrimePart> prime_breakdown(const Rational& x);

/// H^i(X_Wet) sits in 0 -> H^{i-1}(Xbar)_{Gamma_0} -> H^i(X_Wet) -> H^i(Xbar)^{Gamma_0} -> 0.
struct WeilEtaleDegree {
    unsigned i = 0;
    CohomologyOrder coinvariants;  // from H^{i-1}
    CohomologyOrder invariants;    // from H^i
    long rank() const { return coinvariants.rank + invariants.rank; }
    bool rank_positive() const { return rank() > 0; }
};

struct WeilEtaleReport {
    long r = 0;
    std::vector<Gamma0Cohomology> gamma0;  // per P_i
    std::vector<WeilEtaleDegree> degrees;  // i = 0..2d+1
    std::vector<unsigned> rank_degrees() const;
};

WeilEtaleReport weil_etale_orders(const FrobData& fd, long r);

struct CrossCheck {
    bool match = false;
    Rational cohomological;  // prod |P_i*(q^{-r})|^{(-1)^{i+1}}
    Rational analytic;       // |leading_coefficient(z, r)|
};

CrossCheck crosscheck_special_value(const FrobData& fd, const ZetaFunction& z, long r);

enum class Semisimplicity { Semisimple, NotSemisimple, Unknown };
std::string to_string(Semisimplicity s);

/// `minimal_poly`, when given, uses the same 1 - ... t convention as P.
/// MinPolyInconsistent if it does not divide P.
Semisimplicity semisimplicity_verdict(const ZPoly& P2r, std::uint64_t q, long r,
                                      const std::optional<ZPoly>& minimal_poly = std::nullopt);

}  // namespace weilzeta
