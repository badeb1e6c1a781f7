#pragma once

#include <initializer_list>
#include <string>
#include <utility>
#include <vector>

#include "weilzeta/arith.hpp"

namespace weilzeta {

/// Dense univariate polynomial, coefficients stored low degree first and
/// kept trimmed (no trailing zeros; the zero polynomial has no coefficients).
template <class T>
class Poly {
public:
    Poly() = default;
    Poly(std::initializer_list<T> c) : c_(c) { trim(); }
    explicit Poly(std::vector<T> c) : c_(std::move(c)) { trim(); }

    static Poly constant(const T& v) { return Poly(std::vector<T>{v}); }
    static Poly monomial(const T& v, std::size_t deg) {
        std::vector<T> c(deg + 1, T(0));
        c[deg] = v;
        return Poly(std::move(c));
    }

    bool is_zero() const { return c_.empty(); }
    /// Degree; -1 for the zero polynomial.
    long degree() const { return static_cast<long>(c_.size()) - 1; }
    T coeff(std::size_t i) const { return i < c_.size() ? c_[i] : T(0); }
    const T& lead() const { return c_.back(); }
    const std::vector<T>& coeffs() const { return c_; }
    std::size_t size() const { return c_.size(); }

    friend bool operator==(const Poly& a, const Poly& b) { return a.c_ == b.c_; }

    friend Poly operator+(const Poly& a, const Poly& b) {
        std::vector<T> r(std::max(a.size(), b.size()), T(0));
        for (std::size_t i = 0; i < a.size(); ++i) r[i] += a.c_[i];
        for (std::size_t i = 0; i < b.size(); ++i) r[i] += b.c_[i];
        return Poly(std::move(r));
    }
    friend Poly operator-(const Poly& a, const Poly& b) {
        std::vector<T> r(std::max(a.size(), b.size()), T(0));
        for (std::size_t i = 0; i < a.size(); ++i) r[i] += a.c_[i];
        for (std::size_t i = 0; i < b.size(); ++i) r[i] -= b.c_[i];
        return Poly(std::move(r));
    }
    friend Poly operator*(const Poly& a, const Poly& b) {
        if (a.is_zero() || b.is_zero()) return {};
        std::vector<T> r(a.size() + b.size() - 1, T(0));
        for (std::size_t i = 0; i < a.size(); ++i)
            for (std::size_t j = 0; j < b.size(); ++j) r[i + j] += a.c_[i] * b.c_[j];
        return Poly(std::move(r));
    }
    friend Poly operator*(const T& s, const Poly& a) {
        std::vector<T> r(a.c_);
        for (auto& x : r) x *= s;
        return Poly(std::move(r));
    }

    /// Horner evaluation.
    template <class V>
    V eval(const V& x) const {
        V acc(0);
        for (auto it = c_.rbegin(); it != c_.rend(); ++it) acc = acc * x + V(*it);
        return acc;
    }

private:
    void trim() {
        while (!c_.empty() && c_.back() == 0) c_.pop_back();
    }

    std::vector<T> c_;
};

using ZPoly = Poly<BigInt>;
using QPoly = Poly<Rational>;

QPoly to_rational(const ZPoly& p);
/// Clears denominators only if every coefficient is an integer; throws otherwise.
ZPoly to_integer(const QPoly& p);
bool has_integer_coeffs(const QPoly& p);

Rational eval_exact(const ZPoly& p, const Rational& x);

/// Euclidean division over Q; `b` must be nonzero.
std::pair<QPoly, QPoly> divmod(const QPoly& a, const QPoly& b);
QPoly monic(const QPoly& p);
QPoly gcd(QPoly a, QPoly b);
QPoly derivative(const QPoly& p);

/// Yun's square-free decomposition: p = c * prod_k f_k^k with f_k square-free
/// and pairwise coprime; returns (f_k, k) for the nonconstant f_k.
std::vector<std::pair<QPoly, int>> squarefree_decomposition(const QPoly& p);

/// Exact division in Z[t]; returns nullopt-like flag via bool when it does not divide.
bool divides_exactly(const ZPoly& divisor, const ZPoly& dividend, ZPoly* quotient = nullptr);

/// Number of times (1 - c t) divides p, and the cofactor.
std::pair<int, ZPoly> strip_linear_factor(const ZPoly& p, const BigInt& c);

/// Product of (1 - a t) for the given inverse roots.
ZPoly from_inverse_roots_linear(const BigInt& a, int multiplicity);

std::string to_string(const ZPoly& p, char var = 't');

}  // namespace weilzeta
