#pragma once

#include <cstdint>
#include <iterator>
#include <vector>

namespace weilzeta {

/// Size guard shared by every enumeration: searches whose point space is
/// larger than `max_points` are refused with SizeExceeded.
struct Limits {
    std::uint64_t max_points = 100'000'000;
    /// Worker threads for point counting; 0 picks hardware concurrency.
    unsigned threads = 1;
};

class PrimePower {
public:
    /// Throws NotPrime for composite p and InvalidArgument for k == 0.
    PrimePower(std::uint64_t p, unsigned k);

    std::uint64_t p() const { return p_; }
    unsigned k() const { return k_; }
    std::uint64_t q() const { return q_; }

    friend bool operator==(const PrimePower&, const PrimePower&) = default;

private:
    std::uint64_t p_;
    unsigned k_;
    std::uint64_t q_;
};

struct FieldElement {
    /// Residues mod p of the representative polynomial, low degree first.
    std::vector<std::uint64_t> coeffs;

    friend bool operator==(const FieldElement&, const FieldElement&) = default;
};

enum class FieldOp { Add, Sub, Mul, Inv, Pow };

/// F_{p^n} realized as F_p[x]/(m(x)) with m the lexicographically least monic
/// irreducible polynomial of degree n (coefficients compared low degree first).
class Field {
public:
    Field(std::uint64_t p, unsigned degree);

    std::uint64_t characteristic() const { return p_; }
    unsigned degree() const { return degree_; }
    std::uint64_t order() const { return order_; }
    /// Monic modulus, low degree first, length degree() + 1.
    const std::vector<std::uint64_t>& modulus() const { return modulus_; }

    FieldElement zero() const;
    FieldElement one() const;
    FieldElement from_integer(long long v) const;
    bool is_zero(const FieldElement& a) const;

    /// Elements are numbered by their base-p digit expansion, coefficient of
    /// x^0 least significant.
    FieldElement element_at(std::uint64_t index) const;
    std::uint64_t index_of(const FieldElement& a) const;

    FieldElement add(const FieldElement& a, const FieldElement& b) const;
    FieldElement sub(const FieldElement& a, const FieldElement& b) const;
    FieldElement neg(const FieldElement& a) const;
    FieldElement mul(const FieldElement& a, const FieldElement& b) const;
    /// Throws DivisionByZero on zero.
    FieldElement inv(const FieldElement& a) const;
    FieldElement pow(const FieldElement& a, std::uint64_t e) const;
    FieldElement frobenius(const FieldElement& a) const { return pow(a, p_); }

    /// Binary ops ignore `b` for Inv; Pow takes the exponent separately.
    FieldElement arith(const FieldElement& a, const FieldElement& b, FieldOp op, std::uint64_t exponent = 0) const;

    /// F_{q^m} built directly as a degree (degree()*m) field over F_p.
    Field extension(unsigned m) const { return Field(p_, degree_ * m); }

    friend bool operator==(const Field& a, const Field& b) { return a.p_ == b.p_ && a.degree_ == b.degree_; }

private:
    void check(const FieldElement& a) const;

    std::uint64_t p_;
    unsigned degree_;
    std::uint64_t order_;
    std::vector<std::uint64_t> modulus_;
};

/// Throws NotPrime, or SizeExceeded when p^k > limits.max_points.
Field make_field(std::uint64_t p, unsigned k, const Limits& limits = {});

/// Monic irreducibility over F_p (Ben-Or), coefficients low degree first.
bool is_irreducible(const std::vector<std::uint64_t>& monic_poly, std::uint64_t p);
std::vector<std::uint64_t> least_irreducible(std::uint64_t p, unsigned degree);

/// Lazy range over all elements of a field, in index order.
class ElementRange {
public:
    class iterator {
    public:
        using iterator_category = std::input_iterator_tag;
        using value_type = FieldElement;
        using difference_type = std::ptrdiff_t;
        using pointer = const FieldElement*;
        using reference = const FieldElement&;

        iterator() = default;
        iterator(const Field* f, std::uint64_t i) : field_(f), index_(i) { load(); }
        reference operator*() const { return current_; }
        iterator& operator++() {
            ++index_;
            load();
            return *this;
        }
        void operator++(int) { ++*this; }
        friend bool operator==(const iterator& a, const iterator& b) { return a.index_ == b.index_; }

    private:
        void load() {
            if (field_ && index_ < field_->order()) current_ = field_->element_at(index_);
        }
        const Field* field_ = nullptr;
        std::uint64_t index_ = 0;
        FieldElement current_;
    };

    explicit ElementRange(Field f) : field_(std::move(f)) {}
    iterator begin() const { return iterator(&field_, 0); }
    iterator end() const { return iterator(&field_, field_.order()); }
    std::uint64_t size() const { return field_.order(); }
    const Field& field() const { return field_; }

private:
    Field field_;
};

/// Elements of F_{q^m}; SizeExceeded when q^m > limits.max_points.
ElementRange enumerate(const Field& field, unsigned m, const Limits& limits = {});

}  // namespace weilzeta
