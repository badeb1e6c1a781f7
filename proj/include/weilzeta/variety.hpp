#pragma once

#include <cstdint>
#include <functional>
#include <memory>
#include <string>
#include <variant>
#include <vector>

#include "weilzeta/arith.hpp"
#include "weilzeta/finite_field.hpp"
#include "weilzeta/form.hpp"
#include "weilzeta/hodge_diamond.hpp"

namespace weilzeta {

class VarietyExpr;

struct ProjectiveSpace {
    unsigned n;
};
struct Hypersurface {
    unsigned n;  // ambient P^n
    Form f;      // in x0..xn
};
struct PlaneCurve {
    Form f;  // in x0..x2
};
struct Product {
    std::shared_ptr<const VarietyExpr> left;
    std::shared_ptr<const VarietyExpr> right;
};

/// Symbolic smooth projective variety. Constructors validate homogeneity
/// (InhomogeneousPolynomial) and degree >= 1.
class VarietyExpr {
public:
    using Node = std::variant<ProjectiveSpace, Hypersurface, PlaneCurve, Product>;

    static VarietyExpr projective_space(unsigned n);
    static VarietyExpr hypersurface(unsigned n, Form f);
    static VarietyExpr plane_curve(Form f);
    static VarietyExpr product(VarietyExpr left, VarietyExpr right);

    const Node& node() const { return node_; }
    unsigned dimension() const;
    std::string to_string() const;

    template <class T>
    const T* as() const {
        return std::get_if<T>(&node_);
    }

private:
    explicit VarietyExpr(Node n) : node_(std::move(n)) {}
    Node node_;
};

/// Exact #X(F_{q^m}). Projective spaces use the closed form, products
/// multiply, hypersurfaces enumerate normalized projective representatives
/// through the count kernel. SizeExceeded when the extension's point space
/// Q^n exceeds limits.max_points.
BigInt count_points(const VarietyExpr& v, const Field& field, unsigned m, const Limits& limits = {});

/// Counts for m = 1..M.
std::vector<BigInt> count_vector(const VarietyExpr& v, const Field& field, unsigned M, const Limits& limits = {});

/// Point count of a hypersurface f = 0 in P^n over F_Q (Q = order of `ext`).
std::uint64_t count_hypersurface(unsigned n, const Form& f, const Field& ext, const Limits& limits = {});

struct SmoothnessProbe {
    bool singular = false;
    unsigned extension = 0;               // m at which the witness was found
    std::vector<std::uint64_t> witness;   // coordinates as element indices of F_{q^m}

    std::string verdict() const { return singular ? "SingularPointFound" : "ProbablySmooth"; }
};

/// Searches for a common projective zero of f and all its partials over
/// F_{q^m}, m = 1..depth. ProbablySmooth is not a proof of smoothness.
SmoothnessProbe smoothness_probe(unsigned n, const Form& f, const Field& field, unsigned depth, const Limits& limits = {});
/// For P^n: always ProbablySmooth; for products, the first singular factor.
SmoothnessProbe smoothness_probe(const VarietyExpr& v, const Field& field, unsigned depth, const Limits& limits = {});

using HodgeProvider = std::function<HodgeDiamond(const VarietyExpr&)>;

/// b_0..b_{2d}; products use Kunneth convolution of the factors' vectors.
std::vector<long> betti_degrees(const VarietyExpr& v, const HodgeProvider& hodge);

}  // namespace weilzeta
