#include "weilzeta/poly.hpp"

#include <sstream>

#include "weilzeta/error.hpp"

namespace weilzeta {

QPoly to_rational(const ZPoly& p) {
    std::vector<Rational> c;
    c.reserve(p.size());
    for (const auto& x : p.coeffs()) c.emplace_back(x);
    return QPoly(std::move(c));
}

bool has_integer_coeffs(const QPoly& p) {
    for (const auto& x : p.coeffs())
        if (canonical(x).get_den() != 1) return false;
    return true;
}

ZPoly to_integer(const QPoly& p) {
    std::vector<BigInt> c;
    c.reserve(p.size());
    for (const auto& x : p.coeffs()) {
        Rational r = canonical(x);
        if (r.get_den() != 1) throw Error(ErrorKind::InvalidArgument, "non-integer coefficient " + to_string(r));
        c.push_back(r.get_num());
    }
    return ZPoly(std::move(c));
}

Rational eval_exact(const ZPoly& p, const Rational& x) {
    Rational acc = 0;
    for (auto it = p.coeffs().rbegin(); it != p.coeffs().rend(); ++it) {
        acc = acc * x + Rational(*it);
        acc.canonicalize();
    }
    return acc;
}

std::pair<QPoly, QPoly> divmod(const QPoly& a, const QPoly& b) {
    if (b.is_zero()) throw Error(ErrorKind::DivisionByZero, "polynomial division by zero");
    std::vector<Rational> r(a.coeffs());
    if (a.degree() < b.degree()) return {QPoly{}, a};
    const long db = b.degree();
    std::vector<Rational> q(static_cast<std::size_t>(a.degree() - db + 1), Rational(0));
    const Rational lb = b.lead();
    for (long i = a.degree(); i >= db; --i) {
        Rational f = r[static_cast<std::size_t>(i)] / lb;
        f.canonicalize();
        q[static_cast<std::size_t>(i - db)] = f;
        if (f == 0) continue;
        for (long j = 0; j <= db; ++j) {
            auto& slot = r[static_cast<std::size_t>(i - db + j)];
            slot -= f * b.coeffs()[static_cast<std::size_t>(j)];
            slot.canonicalize();
        }
    }
    r.resize(static_cast<std::size_t>(db));
    return {QPoly(std::move(q)), QPoly(std::move(r))};
}

QPoly monic(const QPoly& p) {
    if (p.is_zero()) return p;
    Rational inv = 1 / p.lead();
    std::vector<Rational> c(p.coeffs());
    for (auto& x : c) {
        x *= inv;
        x.canonicalize();
    }
    return QPoly(std::move(c));
}

QPoly gcd(QPoly a, QPoly b) {
    while (!b.is_zero()) {
        auto r = divmod(a, b).second;
        a = std::move(b);
        b = std::move(r);
    }
    return monic(a);
}

QPoly derivative(const QPoly& p) {
    if (p.degree() <= 0) return {};
    std::vector<Rational> c(p.size() - 1);
    for (std::size_t i = 1; i < p.size(); ++i) c[i - 1] = p.coeffs()[i] * static_cast<long>(i);
    return QPoly(std::move(c));
}

std::vector<std::pair<QPoly, int>> squarefree_decomposition(const QPoly& p) {
    std::vector<std::pair<QPoly, int>> out;
    if (p.degree() <= 0) return out;
    QPoly f = monic(p);
    QPoly df = derivative(f);
    QPoly a = gcd(f, df);
    QPoly b = divmod(f, a).first;
    QPoly c = divmod(df, a).first;
    QPoly d = c - derivative(b);
    for (int k = 1; b.degree() > 0; ++k) {
        QPoly g = gcd(b, d);
        if (g.degree() > 0) out.emplace_back(g, k);
        b = divmod(b, g).first;
        c = divmod(d, g).first;
        d = c - derivative(b);
    }
    return out;
}

bool divides_exactly(const ZPoly& divisor, const ZPoly& dividend, ZPoly* quotient) {
    if (divisor.is_zero()) throw Error(ErrorKind::DivisionByZero, "polynomial division by zero");
    auto [q, r] = divmod(to_rational(dividend), to_rational(divisor));
    if (!r.is_zero() || !has_integer_coeffs(q)) return false;
    if (quotient) *quotient = to_integer(q);
    return true;
}

std::pair<int, ZPoly> strip_linear_factor(const ZPoly& p, const BigInt& c) {
    const ZPoly lin{BigInt(1), BigInt(-c)};
    int mult = 0;
    ZPoly cur = p;
    ZPoly q;
    while (cur.degree() >= 1 && divides_exactly(lin, cur, &q)) {
        cur = q;
        ++mult;
    }
    return {mult, cur};
}

ZPoly from_inverse_roots_linear(const BigInt& a, int multiplicity) {
    ZPoly r{BigInt(1)};
    const ZPoly lin{BigInt(1), BigInt(-a)};
    for (int i = 0; i < multiplicity; ++i) r = r * lin;
    return r;
}

std::string to_string(const ZPoly& p, char var) {
    if (p.is_zero()) return "0";
    std::ostringstream os;
    bool first = true;
    for (std::size_t i = 0; i < p.size(); ++i) {
        const BigInt& c = p.coeffs()[i];
        if (c == 0) continue;
        BigInt mag = abs(c);
        if (first) {
            if (c < 0) os << "-";
        } else {
            os << (c < 0 ? " - " : " + ");
        }
        first = false;
        if (i == 0 || mag != 1) os << mag.get_str();
        if (i >= 1) os << var;
        if (i >= 2) os << "^" << i;
    }
    return os.str();
}

}  // namespace weilzeta
