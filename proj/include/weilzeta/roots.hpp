#pragma once

#include <vector>

#include <boost/multiprecision/cpp_bin_float.hpp>

#include "weilzeta/poly.hpp"

namespace weilzeta {

using HighFloat = boost::multiprecision::cpp_bin_float_100;

struct Complex {
    HighFloat re{0};
    HighFloat im{0};

    friend Complex operator+(const Complex& a, const Complex& b) { return {a.re + b.re, a.im + b.im}; }
    friend Complex operator-(const Complex& a, const Complex& b) { return {a.re - b.re, a.im - b.im}; }
    friend Complex operator*(const Complex& a, const Complex& b) {
        return {a.re * b.re - a.im * b.im, a.re * b.im + a.im * b.re};
    }
    friend Complex operator/(const Complex& a, const Complex& b) {
        HighFloat den = b.re * b.re + b.im * b.im;
        return {(a.re * b.re + a.im * b.im) / den, (a.im * b.re - a.re * b.im) / den};
    }
    HighFloat abs() const { return boost::multiprecision::sqrt(re * re + im * im); }
};

/// Roots of a square-free polynomial with rational coefficients, by Aberth
/// iteration in 100-digit arithmetic.
std::vector<Complex> squarefree_roots(const QPoly& p);

struct InverseRoot {
    Complex value;
    int multiplicity;
};

/// Inverse roots of p (constant term nonzero), i.e. the alpha with
/// p(t) = p(0) * prod (1 - alpha t), with exact multiplicities.
std::vector<InverseRoot> inverse_roots(const ZPoly& p);

}  // namespace weilzeta
