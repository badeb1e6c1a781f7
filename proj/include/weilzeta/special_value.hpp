#pragma once

#include <optional>
#include <string>

#include "weilzeta/arith.hpp"
#include "weilzeta/hodge_diamond.hpp"
#include "weilzeta/zeta.hpp"

namespace weilzeta {

/// Order of the pole of Z(X,t) at t = q^{-r}: multiplicity of (1 - q^r t) in
/// the even factors minus that in the odd factors.
long pole_order(const ZetaFunction& z, long r);

/// Signed nonzero rational lim_{t -> q^{-r}} Z(X,t) (1 - q^r t)^rho.
/// InternalZero if a remaining factor vanishes at q^{-r}.
Rational leading_coefficient(const ZetaFunction& z, long r);

struct HypothesisFlags {
    std::string smoothness = "not-run";  // ProbablySmooth / SingularPointFound / not-run
    bool weights_ok = false;
    bool functional_equation_ok = false;
    bool hodge_char_caveat = false;

    bool verified() const { return smoothness == "ProbablySmooth" && weights_ok && functional_equation_ok; }
};

struct SpecialValueReport {
    long r = 0;
    long rho = 0;
    Rational leading;       // signed
    int sign = 0;
    BigInt chi_O;
    Rational predicted_chi_prime;  // |leading| / q^{chi_O}, positive
    HypothesisFlags hypotheses;
};

/// Predicted Weil-etale Euler characteristic |leading| / q^{chi(X,O_X,r)}.
/// The sign of the identity is reported, never asserted.
SpecialValueReport predict_chi_prime(const ZetaFunction& z, const HodgeDiamond& hd, long r);

enum class TateVerdictKind { Consistent, PoleMismatch, NoClaim };

struct TateVerdict {
    TateVerdictKind kind;
    long rho;
    std::optional<long> claimed;
    std::string to_string() const;
};

TateVerdict tate_verdict(const ZetaFunction& z, long r, std::optional<long> claimed_cycle_rank);

}  // namespace weilzeta
