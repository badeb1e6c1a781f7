#include "weilzeta/roots.hpp"

#include <algorithm>

#include "weilzeta/error.hpp"

namespace weilzeta {

namespace {

HighFloat to_high(const Rational& r) {
    return HighFloat(r.get_num().get_str()) / HighFloat(r.get_den().get_str());
}

}  // namespace

std::vector<Complex> squarefree_roots(const QPoly& p) {
    const long n = p.degree();
    if (n <= 0) return {};
    std::vector<HighFloat> c;
    const Rational lead = p.lead();
    for (const auto& x : p.coeffs()) c.push_back(to_high(x / lead));

    if (n == 1) return {Complex{-c[0], 0}};

    // Cauchy bound for the initial circle.
    HighFloat radius = 0;
    for (long i = 0; i < n; ++i) radius = std::max(radius, boost::multiprecision::abs(c[static_cast<std::size_t>(i)]));
    radius += 1;

    auto eval = [&](const Complex& z, Complex& value, Complex& deriv) {
        value = Complex{c[static_cast<std::size_t>(n)], 0};
        deriv = Complex{0, 0};
        for (long i = n - 1; i >= 0; --i) {
            deriv = deriv * z + value;
            value = value * z + Complex{c[static_cast<std::size_t>(i)], 0};
        }
    };

    std::vector<Complex> z(static_cast<std::size_t>(n));
    const HighFloat pi = boost::math::constants::pi<HighFloat>();
    for (long k = 0; k < n; ++k) {
        HighFloat theta = 2 * pi * k / n + HighFloat(0.4);
        z[static_cast<std::size_t>(k)] = {radius * boost::multiprecision::cos(theta) / 2,
                                          radius * boost::multiprecision::sin(theta) / 2};
    }

    const HighFloat tol("1e-90");
    for (int iter = 0; iter < 5000; ++iter) {
        HighFloat worst = 0;
        for (long k = 0; k < n; ++k) {
            auto& zk = z[static_cast<std::size_t>(k)];
            Complex v, d;
            eval(zk, v, d);
            if (v.re == 0 && v.im == 0) continue;
            Complex ratio = v / d;
            Complex sum{0, 0};
            for (long j = 0; j < n; ++j)
                if (j != k) sum = sum + Complex{1, 0} / (zk - z[static_cast<std::size_t>(j)]);
            Complex w = ratio / (Complex{1, 0} - ratio * sum);
            zk = zk - w;
            HighFloat scale = std::max(HighFloat(1), zk.abs());
            worst = std::max(worst, w.abs() / scale);
        }
        if (worst < tol) break;
    }
    return z;
}

std::vector<InverseRoot> inverse_roots(const ZPoly& p) {
    if (p.is_zero() || p.coeff(0) == 0)
        throw Error(ErrorKind::InvalidArgument, "inverse roots need a nonzero constant term");
    std::vector<BigInt> rev(p.coeffs().rbegin(), p.coeffs().rend());
    QPoly reversed = to_rational(ZPoly(std::move(rev)));
    std::vector<InverseRoot> out;
    for (const auto& [factor, mult] : squarefree_decomposition(reversed)) {
        for (auto& z : squarefree_roots(factor)) out.push_back({z, mult});
    }
    return out;
}

}  // namespace weilzeta
