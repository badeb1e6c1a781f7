#include "weilzeta/frob_cohomology.hpp"

#include "weilzeta/error.hpp"
#include "weilzeta/special_value.hpp"

namespace weilzeta {

FrobData FrobData::from_polys(const PrimePower& q, std::vector<ZPoly> polys) {
    if (polys.empty() || polys.size() % 2 == 0)
        throw Error(ErrorKind::InvalidArgument, "Frobenius data needs P_0..P_2d");
    for (std::size_t i = 0; i < polys.size(); ++i)
        if (polys[i].coeff(0) != 1)
            throw Error(ErrorKind::InvalidArgument, "P_" + std::to_string(i) + " must have constant term 1");
    FrobData fd;
    fd.d = static_cast<unsigned>(polys.size() / 2);
    fd.q = q;
    fd.polys = std::move(polys);
    return fd;
}

FrobData FrobData::from_zeta(const ZetaFunction& z) { return from_polys(z.q, z.factors); }

bool FrobData::weights_ok() const {
    for (std::size_t i = 0; i < polys.size(); ++i)
        if (!check_weight(polys[i], q.q(), static_cast<unsigned>(i)).ok) return false;
    return true;
}

std::string CohomologyOrder::to_string() const {
    if (finite) return "Finite(" + weilzeta::to_string(order) + ")";
    return "InfiniteRank(" + std::to_string(rank) + ")";
}

CohomologyOrder Gamma0Cohomology::h(unsigned j) const {
    if (j == 0) return h0;
    if (j == 1) return h1;
    return CohomologyOrder::finite_order(Rational(1));
}

Gamma0Cohomology gamma0_cohomology(const ZPoly& P, unsigned degree, std::uint64_t q, long r) {
    if (r < 0) throw Error(ErrorKind::InvalidArgument, "r must be non-negative");
    const BigInt qr = ipow(BigInt(static_cast<unsigned long>(q)), static_cast<unsigned long>(r));
    auto [rho, rest] = strip_linear_factor(P, qr);
    Gamma0Cohomology g;
    g.degree = degree;
    g.r = r;
    g.rho = rho;
    g.residual = canonical(abs(eval_exact(rest, Rational(BigInt(1), qr))));
    if (rho > 0) {
        g.h0 = CohomologyOrder::infinite(rho);
        g.h1 = CohomologyOrder::infinite(rho);
    } else {
        // No eigenvalue 1 on the twisted lattice: invariants vanish and the
        // coinvariants have global order |det(1 - F q^{-r})| = |P(q^{-r})|.
        g.h0 = CohomologyOrder::finite_order(Rational(1));
        g.h1 = CohomologyOrder::finite_order(g.residual);
    }
    return g;
}

std::vector<PrimePart> prime_breakdown(const Rational& x) {
    std::vector<PrimePart> out;
    Rational c = canonical(abs(x));
    if (c == 0) return out;
    auto split = [&out](BigInt n, long sign) {
        for (unsigned long p = 2; p < 1000000 && n > 1; ++p) {
            if (p > 2 && p % 2 == 0) continue;
            if (BigInt(p) * p > n) break;
            long e = 0;
            while (mpz_divisible_ui_p(n.get_mpz_t(), p)) {
                n /= p;
                ++e;
            }
            if (e) out.push_back({std::to_string(p), sign * e});
        }
        if (n > 1) {
            // Cofactor is prime when it fell below the trial bound squared.
            if (n < BigInt(1000000) * 1000000) out.push_back({n.get_str(), sign});
            else out.push_back({"rest:" + n.get_str(), sign});
        }
    };
    split(c.get_num(), 1);
    split(c.get_den(), -1);
    return out;
}

std::vector<unsigned> WeilEtaleReport::rank_degrees() const {
    std::vector<unsigned> out;
    for (const auto& d : degrees)
        if (d.rank_positive()) out.push_back(d.i);
    return out;
}

WeilEtaleReport weil_etale_orders(const FrobData& fd, long r) {
    WeilEtaleReport rep;
    rep.r = r;
    for (std::size_t i = 0; i < fd.polys.size(); ++i)
        rep.gamma0.push_back(gamma0_cohomology(fd.polys[i], static_cast<unsigned>(i), fd.q.q(), r));
    const unsigned top = 2 * fd.d + 1;
    for (unsigned i = 0; i <= top; ++i) {
        WeilEtaleDegree deg;
        deg.i = i;
        deg.invariants = i < rep.gamma0.size() ? rep.gamma0[i].h(0) : CohomologyOrder::finite_order(Rational(1));
        deg.coinvariants = i >= 1 ? rep.gamma0[i - 1].h(1) : CohomologyOrder::finite_order(Rational(1));
        rep.degrees.push_back(deg);
    }
    return rep;
}

CrossCheck crosscheck_special_value(const FrobData& fd, const ZetaFunction& z, long r) {
    CrossCheck cc;
    const WeilEtaleReport we = weil_etale_orders(fd, r);
    Rational prod = 1;
    for (const auto& g : we.gamma0) {
        if (g.residual == 0) {
            cc.cohomological = 0;
            return cc;
        }
        // Even degrees sit in the denominator of Z.
        if (g.degree % 2 == 0) prod /= g.residual;
        else prod *= g.residual;
        prod.canonicalize();
    }
    cc.cohomological = prod;
    cc.analytic = canonical(abs(leading_coefficient(z, r)));
    cc.match = cc.cohomological == cc.analytic;
    return cc;
}

std::string to_string(Semisimplicity s) {
    switch (s) {
        case Semisimplicity::Semisimple: return "Semisimple";
        case Semisimplicity::NotSemisimple: return "NotSemisimple";
        case Semisimplicity::Unknown: return "Unknown";
    }
    return "";
}

Semisimplicity semisimplicity_verdict(const ZPoly& P2r, std::uint64_t q, long r, const std::optional<ZPoly>& minimal_poly) {
    const BigInt qr = ipow(BigInt(static_cast<unsigned long>(q)), static_cast<unsigned long>(r));
    const long rho = strip_linear_factor(P2r, qr).first;
    if (minimal_poly) {
        if (minimal_poly->is_zero() || !divides_exactly(*minimal_poly, P2r))
            throw Error(ErrorKind::MinPolyInconsistent, "minimal polynomial does not divide the characteristic polynomial");
        const long mult = strip_linear_factor(*minimal_poly, qr).first;
        return mult <= 1 ? Semisimplicity::Semisimple : Semisimplicity::NotSemisimple;
    }
    return rho <= 1 ? Semisimplicity::Semisimple : Semisimplicity::Unknown;
}

}  // namespace weilzeta
