#include "weilzeta/hodge.hpp"

#include "weilzeta/error.hpp"

namespace weilzeta {

std::vector<long> HodgeDiamond::betti() const {
    std::vector<long> b(2 * d + 1, 0);
    for (unsigned j = 0; j <= d; ++j)
        for (unsigned i = 0; i <= d; ++i) b[i + j] += h[j][i];
    return b;
}

bool HodgeDiamond::serre_symmetric() const {
    for (unsigned j = 0; j <= d; ++j)
        for (unsigned i = 0; i <= d; ++i)
            if (h[j][i] != h[d - j][d - i]) return false;
    return true;
}

BigInt chi_O(const HodgeDiamond& hd, long r) {
    BigInt total = 0;
    for (long i = 0; i <= r && i <= static_cast<long>(hd.d); ++i) {
        for (unsigned j = 0; j <= hd.d; ++j) {
            long sign = ((i + static_cast<long>(j)) % 2 == 0) ? 1 : -1;
            total += BigInt(sign * (r - i)) * hd.h[j][static_cast<std::size_t>(i)];
        }
    }
    return total;
}

HodgeDiamond kunneth(const HodgeDiamond& x, const HodgeDiamond& y) {
    HodgeDiamond out = HodgeDiamond::zero(x.d + y.d);
    for (unsigned j1 = 0; j1 <= x.d; ++j1)
        for (unsigned i1 = 0; i1 <= x.d; ++i1)
            for (unsigned j2 = 0; j2 <= y.d; ++j2)
                for (unsigned i2 = 0; i2 <= y.d; ++i2) out.h[j1 + j2][i1 + i2] += x.h[j1][i1] * y.h[j2][i2];
    return out;
}

std::vector<long> betti_convolution(const std::vector<long>& a, const std::vector<long>& b) {
    std::vector<long> out(a.size() + b.size() - 1, 0);
    for (std::size_t i = 0; i < a.size(); ++i)
        for (std::size_t j = 0; j < b.size(); ++j) out[i + j] += a[i] * b[j];
    return out;
}

std::vector<long> primitive_middle_hodge(unsigned n, unsigned e) {
    const unsigned d = n - 1;
    // (1 + t + ... + t^{e-2})^{n+1}
    std::vector<long> series{1};
    for (unsigned k = 0; k <= n; ++k) {
        std::vector<long> next(series.size() + (e >= 2 ? e - 2 : 0), 0);
        if (e < 2) {
            next.assign(1, 0);  // e = 1: Jacobian ring is zero
            series = next;
            continue;
        }
        for (std::size_t i = 0; i < series.size(); ++i)
            for (unsigned s = 0; s + 1 < e; ++s) next[i + s] += series[i];
        series = std::move(next);
    }
    std::vector<long> prim(d + 1, 0);
    for (unsigned q = 0; q <= d; ++q) {
        long idx = static_cast<long>((q + 1) * e) - static_cast<long>(n + 1);
        if (idx >= 0 && static_cast<std::size_t>(idx) < series.size()) prim[q] = series[static_cast<std::size_t>(idx)];
    }
    return prim;
}

namespace {

HodgeDiamond hypersurface_diamond(unsigned n, unsigned e) {
    const unsigned d = n - 1;
    HodgeDiamond hd = HodgeDiamond::zero(d);
    for (unsigned k = 0; k <= d; ++k) hd.h[k][k] = 1;
    auto prim = primitive_middle_hodge(n, e);
    // h^{p,q} with p + q = d lives at h[q][p].
    for (unsigned q = 0; q <= d; ++q) hd.h[q][d - q] += prim[q];
    return hd;
}

}  // namespace

HodgeDiamond hodge_of(const VarietyExpr& v) {
    return std::visit(
        [](const auto& n) -> HodgeDiamond {
            using T = std::decay_t<decltype(n)>;
            if constexpr (std::is_same_v<T, ProjectiveSpace>) {
                HodgeDiamond hd = HodgeDiamond::zero(n.n);
                for (unsigned i = 0; i <= n.n; ++i) hd.h[i][i] = 1;
                return hd;
            } else if constexpr (std::is_same_v<T, PlaneCurve>) {
                const long e = n.f.degree();
                const long g = (e - 1) * (e - 2) / 2;
                HodgeDiamond hd = HodgeDiamond::zero(1);
                hd.h[0][0] = hd.h[1][1] = 1;
                hd.h[0][1] = hd.h[1][0] = g;
                return hd;
            } else if constexpr (std::is_same_v<T, Hypersurface>) {
                if (n.n < 2) throw Error(ErrorKind::UnsupportedVariety, "zero-dimensional hypersurface");
                return hypersurface_diamond(n.n, n.f.degree());
            } else {
                return kunneth(hodge_of(*n.left), hodge_of(*n.right));
            }
        },
        v.node());
}

bool hodge_characteristic_caveat(const VarietyExpr& v, std::uint64_t p) {
    return std::visit(
        [p](const auto& n) -> bool {
            using T = std::decay_t<decltype(n)>;
            if constexpr (std::is_same_v<T, ProjectiveSpace>) return false;
            else if constexpr (std::is_same_v<T, Product>)
                return hodge_characteristic_caveat(*n.left, p) || hodge_characteristic_caveat(*n.right, p);
            else return n.f.degree() % p == 0;
        },
        v.node());
}

}  // namespace weilzeta
