#include "weilzeta/special_value.hpp"

#include "weilzeta/error.hpp"
#include "weilzeta/hodge.hpp"
#include "weilzeta/poly.hpp"

namespace weilzeta {

namespace {

BigInt q_power(const ZetaFunction& z, long r) { return ipow(BigInt(static_cast<unsigned long>(z.q.q())), static_cast<unsigned long>(r)); }

void require_nonnegative(long r) {
    if (r < 0) throw Error(ErrorKind::InvalidArgument, "r must be non-negative");
}

}  // namespace

long pole_order(const ZetaFunction& z, long r) {
    require_nonnegative(r);
    const BigInt qr = q_power(z, r);
    long rho = 0;
    for (std::size_t i = 0; i < z.factors.size(); ++i) {
        const int mult = strip_linear_factor(z.factors[i], qr).first;
        rho += (i % 2 == 0) ? mult : -mult;
    }
    return rho;
}

Rational leading_coefficient(const ZetaFunction& z, long r) {
    require_nonnegative(r);
    const BigInt qr = q_power(z, r);
    const Rational t0(BigInt(1), qr);
    Rational value = 1;
    for (std::size_t i = 0; i < z.factors.size(); ++i) {
        const ZPoly rest = strip_linear_factor(z.factors[i], qr).second;
        Rational v = eval_exact(rest, t0);
        if (v == 0)
            throw Error(ErrorKind::InternalZero, "P_" + std::to_string(i) + " vanishes at q^{-r} after removing the pole");
        if (i % 2 == 0) value /= v;
        else value *= v;
        value.canonicalize();
    }
    return value;
}

SpecialValueReport predict_chi_prime(const ZetaFunction& z, const HodgeDiamond& hd, long r) {
    SpecialValueReport rep;
    rep.r = r;
    rep.rho = pole_order(z, r);
    rep.leading = leading_coefficient(z, r);
    rep.sign = sgn(rep.leading);
    rep.chi_O = chi_O(hd, r);
    const Rational qpow = rpow(Rational(static_cast<long>(z.q.q())), rep.chi_O.get_si());
    rep.predicted_chi_prime = canonical(abs(rep.leading) / qpow);
    return rep;
}

std::string TateVerdict::to_string() const {
    switch (kind) {
        case TateVerdictKind::Consistent: return "Consistent";
        case TateVerdictKind::PoleMismatch: return "PoleMismatch";
        case TateVerdictKind::NoClaim: return "NoClaim";
    }
    return "";
}

TateVerdict tate_verdict(const ZetaFunction& z, long r, std::optional<long> claimed) {
    const long rho = pole_order(z, r);
    if (!claimed) return {TateVerdictKind::NoClaim, rho, std::nullopt};
    return {*claimed == rho ? TateVerdictKind::Consistent : TateVerdictKind::PoleMismatch, rho, claimed};
}

}  // namespace weilzeta
