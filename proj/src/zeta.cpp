#include "weilzeta/zeta.hpp"

#include <boost/multiprecision/cpp_int.hpp>
#include <cmath>
#include <map>

#include "weilzeta/error.hpp"
#include "weilzeta/roots.hpp"

namespace weilzeta {

std::vector<long> ZetaFunction::betti() const {
    std::vector<long> b;
    for (const auto& p : factors) b.push_back(p.degree());
    return b;
}

ZPoly ZetaFunction::numerator() const {
    ZPoly r{BigInt(1)};
    for (std::size_t i = 1; i < factors.size(); i += 2) r = r * factors[i];
    return r;
}

ZPoly ZetaFunction::denominator() const {
    ZPoly r{BigInt(1)};
    for (std::size_t i = 0; i < factors.size(); i += 2) r = r * factors[i];
    return r;
}

std::vector<Rational> zeta_series(const std::vector<BigInt>& counts) {
    const std::size_t M = counts.size();
    std::vector<Rational> z(M + 1, Rational(0));
    z[0] = 1;
    // Z' = Z * sum_m N_m t^{m-1}  =>  k z_k = sum_{m=1}^{k} N_m z_{k-m}.
    for (std::size_t k = 1; k <= M; ++k) {
        Rational acc = 0;
        for (std::size_t m = 1; m <= k; ++m) acc += Rational(counts[m - 1]) * z[k - m];
        acc /= static_cast<long>(k);
        acc.canonicalize();
        z[k] = acc;
    }
    return z;
}

namespace {

/// Solves A x = rhs exactly; returns false when inconsistent, sets `unique`.
bool solve_exact(std::vector<std::vector<Rational>> a, std::vector<Rational> rhs, std::vector<Rational>& x,
                 bool& unique) {
    const std::size_t rows = a.size();
    const std::size_t cols = rows ? a[0].size() : 0;
    std::vector<std::size_t> pivot_col;
    std::size_t r = 0;
    for (std::size_t c = 0; c < cols && r < rows; ++c) {
        std::size_t piv = r;
        while (piv < rows && a[piv][c] == 0) ++piv;
        if (piv == rows) continue;
        std::swap(a[piv], a[r]);
        std::swap(rhs[piv], rhs[r]);
        for (std::size_t i = 0; i < rows; ++i) {
            if (i == r || a[i][c] == 0) continue;
            Rational f = a[i][c] / a[r][c];
            for (std::size_t j = c; j < cols; ++j) {
                a[i][j] -= f * a[r][j];
                a[i][j].canonicalize();
            }
            rhs[i] -= f * rhs[r];
            rhs[i].canonicalize();
        }
        pivot_col.push_back(c);
        ++r;
    }
    for (std::size_t i = r; i < rows; ++i)
        if (rhs[i] != 0) return false;
    unique = (r == cols);
    x.assign(cols, Rational(0));
    for (std::size_t i = 0; i < r; ++i) {
        x[pivot_col[i]] = rhs[i] / a[i][pivot_col[i]];
        x[pivot_col[i]].canonicalize();
    }
    return true;
}

BigInt round_to_bigint(const HighFloat& v) {
    boost::multiprecision::cpp_int ci = static_cast<boost::multiprecision::cpp_int>(boost::multiprecision::round(v));
    return BigInt(ci.str());
}

/// prod (1 - alpha t) over the given roots, rounded to integers.
ZPoly integer_product(const std::vector<Complex>& roots) {
    std::vector<Complex> c{Complex{1, 0}};
    for (const auto& a : roots) {
        std::vector<Complex> next(c.size() + 1, Complex{0, 0});
        for (std::size_t i = 0; i < c.size(); ++i) {
            next[i] = next[i] + c[i];
            next[i + 1] = next[i + 1] - c[i] * a;
        }
        c = std::move(next);
    }
    std::vector<BigInt> out;
    for (const auto& x : c) out.push_back(round_to_bigint(x.re));
    return ZPoly(std::move(out));
}

/// Groups inverse roots of P by weight; parity selects odd or even weights.
void assign_weights(const ZPoly& P, std::uint64_t q, unsigned d, int parity, std::map<unsigned, std::vector<Complex>>& out) {
    if (P.degree() <= 0) return;
    const double logq = std::log(static_cast<double>(q));
    for (const auto& root : inverse_roots(P)) {
        const double mod = static_cast<double>(root.value.abs());
        const double w = 2.0 * std::log(mod) / logq;
        const long wi = std::lround(w);
        if (wi < 0 || wi > static_cast<long>(2 * d) || (wi % 2) != parity)
            throw Error(ErrorKind::WeightAmbiguous, "inverse root of modulus " + std::to_string(mod) +
                                                        " has no admissible weight");
        const double target = std::pow(static_cast<double>(q), static_cast<double>(wi) / 2.0);
        if (std::abs(mod - target) / target > kWeightTolerance)
            throw Error(ErrorKind::WeightAmbiguous, "inverse root of modulus " + std::to_string(mod) +
                                                        " matches no weight within tolerance");
        for (int k = 0; k < root.multiplicity; ++k) out[static_cast<unsigned>(wi)].push_back(root.value);
    }
}

}  // namespace

ZetaFunction zeta_from_counts(const PrimePower& q, const std::vector<BigInt>& counts, const std::vector<long>& betti) {
    if (betti.empty() || betti.size() % 2 == 0)
        throw Error(ErrorKind::InvalidArgument, "Betti vector must have odd length 2d+1");
    const unsigned d = static_cast<unsigned>(betti.size() / 2);
    if (betti.front() != 1 || betti.back() != 1)
        throw Error(ErrorKind::InvalidArgument, "b_0 and b_2d must equal 1");
    long num_deg = 0, den_deg = 0;
    for (std::size_t i = 0; i < betti.size(); ++i) {
        if (betti[i] < 0) throw Error(ErrorKind::InvalidArgument, "negative Betti number");
        (i % 2 ? num_deg : den_deg) += betti[i];
    }
    const std::size_t total = static_cast<std::size_t>(num_deg + den_deg);
    if (counts.size() < total)
        throw Error(ErrorKind::InsufficientCounts, "need " + std::to_string(total) + " counts, have " +
                                                       std::to_string(counts.size()));

    const auto z = zeta_series(counts);
    const std::size_t M = counts.size();
    const std::size_t a = static_cast<std::size_t>(num_deg), b = static_cast<std::size_t>(den_deg);
    // Unknowns: d_1..d_b then n_1..n_a. Row k: sum_{j=1}^{b} d_j z_{k-j} - n_k = -z_k.
    std::vector<std::vector<Rational>> A(M, std::vector<Rational>(a + b, Rational(0)));
    std::vector<Rational> rhs(M);
    for (std::size_t k = 1; k <= M; ++k) {
        for (std::size_t j = 1; j <= b && j <= k; ++j) A[k - 1][j - 1] = z[k - j];
        if (k <= a) A[k - 1][b + k - 1] = -1;
        rhs[k - 1] = -z[k];
    }
    std::vector<Rational> x;
    bool unique = false;
    if (!solve_exact(A, rhs, x, unique))
        throw Error(ErrorKind::NoRationalFit, "counts are inconsistent with the declared degrees");
    if (!unique) throw Error(ErrorKind::NoRationalFit, "counts do not determine a unique rational function");

    std::vector<Rational> dc{Rational(1)}, nc{Rational(1)};
    for (std::size_t j = 0; j < b; ++j) dc.push_back(x[j]);
    for (std::size_t k = 0; k < a; ++k) nc.push_back(x[b + k]);
    QPoly Dq(dc), Nq(nc);
    if (Dq.degree() != static_cast<long>(b) || Nq.degree() != static_cast<long>(a))
        throw Error(ErrorKind::NoRationalFit, "fitted rational function has lower degree than declared");
    if (!has_integer_coeffs(Dq) || !has_integer_coeffs(Nq))
        throw Error(ErrorKind::NoRationalFit, "fitted rational function has non-integer coefficients");
    const ZPoly D = to_integer(Dq), N = to_integer(Nq);

    std::map<unsigned, std::vector<Complex>> groups;
    assign_weights(D, q.q(), d, 0, groups);
    assign_weights(N, q.q(), d, 1, groups);

    ZetaFunction zf;
    zf.d = d;
    zf.q = q;
    zf.factors.assign(2 * d + 1, ZPoly{BigInt(1)});
    for (const auto& [w, roots] : groups) zf.factors[w] = integer_product(roots);

    if (zf.denominator() != D || zf.numerator() != N)
        throw Error(ErrorKind::WeightAmbiguous, "weight classes do not split over the integers");
    for (std::size_t i = 0; i < betti.size(); ++i)
        if (zf.factors[i].degree() != betti[i])
            throw Error(ErrorKind::NoRationalFit, "deg P_" + std::to_string(i) + " = " +
                                                      std::to_string(zf.factors[i].degree()) + " but b_" +
                                                      std::to_string(i) + " = " + std::to_string(betti[i]));
    const BigInt qd = ipow(BigInt(static_cast<unsigned long>(q.q())), d);
    if (zf.factors.front() != ZPoly{BigInt(1), BigInt(-1)} || zf.factors.back() != ZPoly{BigInt(1), BigInt(-qd)})
        throw Error(ErrorKind::NoRationalFit, "P_0 or P_2d is not of the form 1 - t, 1 - q^d t");
    return zf;
}

std::vector<BigInt> power_sums(const ZPoly& P, unsigned M) {
    std::vector<BigInt> s(M + 1, BigInt(0));
    for (unsigned m = 1; m <= M; ++m) {
        BigInt acc = BigInt(m) * P.coeff(m);
        for (unsigned k = 1; k < m; ++k) acc += P.coeff(k) * s[m - k];
        s[m] = -acc;
    }
    s.erase(s.begin());
    return s;
}

std::vector<BigInt> expand_counts(const ZetaFunction& z, unsigned M) {
    std::vector<BigInt> out(M, BigInt(0));
    for (std::size_t i = 0; i < z.factors.size(); ++i) {
        auto s = power_sums(z.factors[i], M);
        for (unsigned m = 0; m < M; ++m) {
            if (i % 2) out[m] -= s[m];
            else out[m] += s[m];
        }
    }
    return out;
}

namespace {

/// t^{deg} P(1/(c t)) for rational c.
QPoly dual(const ZPoly& P, const Rational& c) {
    const long n = P.degree();
    std::vector<Rational> out(static_cast<std::size_t>(n + 1), Rational(0));
    Rational scale = 1;
    for (long k = 0; k <= n; ++k) {
        out[static_cast<std::size_t>(n - k)] = Rational(P.coeff(static_cast<std::size_t>(k))) / scale;
        out[static_cast<std::size_t>(n - k)].canonicalize();
        scale *= c;
    }
    return QPoly(std::move(out));
}

}  // namespace

FunctionalEquation functional_equation_check(const ZetaFunction& z) {
    FunctionalEquation fe;
    for (std::size_t i = 0; i < z.factors.size(); ++i) fe.chi_top += (i % 2 ? -1 : 1) * z.factors[i].degree();
    const Rational qd(ipow(BigInt(static_cast<unsigned long>(z.q.q())), z.d));
    const ZPoly N = z.numerator(), D = z.denominator();
    const QPoly lhs = dual(N, qd) * to_rational(D);
    const QPoly rhs = to_rational(N) * dual(D, qd);
    if (lhs.degree() != rhs.degree() || rhs.is_zero()) {
        fe.detail = "degree mismatch after substitution";
        return fe;
    }
    Rational c = lhs.lead() / rhs.lead();
    c.canonicalize();
    if (!(lhs == c * rhs)) {
        fe.detail = "Z(1/(q^d t)) is not a constant multiple of t^chi Z(t)";
        return fe;
    }
    // c^2 must equal q^{d chi}.
    const long e = static_cast<long>(z.d) * fe.chi_top;
    if (canonical(c * c) != rpow(Rational(static_cast<long>(z.q.q())), e)) {
        fe.detail = "constant " + to_string(c) + " is not +-q^{d chi/2}";
        return fe;
    }
    fe.holds = true;
    fe.sign = c > 0 ? 1 : -1;
    return fe;
}

bool RiemannHypothesisReport::holds() const {
    for (const auto& f : factors)
        if (!f.ok) return false;
    return true;
}

WeightReport check_weight(const ZPoly& P, std::uint64_t q, unsigned weight, double tolerance) {
    WeightReport wr;
    wr.index = weight;
    if (P.degree() <= 0) return wr;
    const HighFloat target = boost::multiprecision::pow(HighFloat(q), HighFloat(weight) / 2);
    for (const auto& root : inverse_roots(P)) {
        HighFloat mod = root.value.abs();
        double dev = static_cast<double>(boost::multiprecision::abs(mod - target) / target);
        for (int k = 0; k < root.multiplicity; ++k) wr.moduli.push_back(static_cast<double>(mod));
        wr.max_relative_deviation = std::max(wr.max_relative_deviation, dev);
    }
    wr.ok = wr.max_relative_deviation <= tolerance;
    return wr;
}

RiemannHypothesisReport riemann_hypothesis_check(const ZetaFunction& z, double tolerance) {
    RiemannHypothesisReport r;
    for (std::size_t i = 0; i < z.factors.size(); ++i)
        r.factors.push_back(check_weight(z.factors[i], z.q.q(), static_cast<unsigned>(i), tolerance));
    return r;
}

}  // namespace weilzeta
