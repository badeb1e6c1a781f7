#pragma once

#include <string>
#include <vector>

#include "weilzeta/arith.hpp"

namespace weilzeta {

struct Term {
    BigInt coeff;
    std::vector<unsigned> exps;  // one exponent per variable x0..x_{n}

    unsigned degree() const {
        unsigned d = 0;
        for (auto e : exps) d += e;
        return d;
    }
};

/// Polynomial with integer coefficients in the variables x0..x_{nvars-1}.
/// Like terms are merged, zero terms dropped, and terms kept in descending
/// lexicographic exponent order.
class Form {
public:
    Form() = default;
    Form(unsigned nvars, std::vector<Term> terms);

    unsigned nvars() const { return nvars_; }
    const std::vector<Term>& terms() const { return terms_; }
    bool is_zero() const { return terms_.empty(); }
    bool is_homogeneous() const;
    /// Total degree of the first term; only meaningful when homogeneous.
    unsigned degree() const;
    /// Largest variable index that appears, or -1 for constants.
    int max_variable() const;

    Form derivative(unsigned var) const;
    /// Re-index into a ring with more variables.
    Form widened(unsigned nvars) const;

    std::string to_string() const;

    friend bool operator==(const Form& a, const Form& b) { return a.to_string() == b.to_string(); }

private:
    unsigned nvars_ = 0;
    std::vector<Term> terms_;
};

}  // namespace weilzeta
