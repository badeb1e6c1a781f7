#pragma once

#include <cstdint>
#include <string>
#include <vector>

#include "weilzeta/error.hpp"

namespace weilzeta::abelian {

using Element = std::vector<std::uint64_t>;

/// Z/o_1 + ... + Z/o_k with elements as coordinate vectors, indexed in mixed radix
/// (first coordinate least significant).
class FiniteGroup {
public:
    explicit FiniteGroup(std::vector<std::uint64_t> orders, std::uint64_t max_order = 1u << 12);

    const std::vector<std::uint64_t>& orders() const { return orders_; }
    std::uint64_t size() const { return size_; }
    std::size_t rank() const { return orders_.size(); }

    std::uint64_t index(const Element& x) const;
    Element element(std::uint64_t index) const;
    Element reduce(const Element& x) const;
    Element add(const Element& x, const Element& y) const;
    Element scale(const Element& x, std::uint64_t k) const;
    Element zero() const { return Element(orders_.size(), 0); }
    std::uint64_t order_of(const Element& x) const;

    /// Membership mask of the subgroup generated by `gens`.
    std::vector<bool> span(const std::vector<Element>& gens) const;
    /// Membership mask of k*N.
    std::vector<bool> multiples(std::uint64_t k) const;

    static std::string to_string(const Element& x);

private:
    std::vector<std::uint64_t> orders_;
    std::uint64_t size_ = 1;
};

/// Raised when M meets l^n N or is not maximal; carries the offending element.
class HypothesisError : public Error {
public:
    HypothesisError(const std::string& what, Element witness)
        : Error(ErrorKind::HypothesisFailed, what + " (witness " + FiniteGroup::to_string(witness) + ")"),
          witness_(std::move(witness)) {}
    const Element& witness() const { return witness_; }

private:
    Element witness_;
};

struct Complement {
    std::vector<Element> generators;
    std::vector<std::uint64_t> generator_orders;
    std::uint64_t m_size = 0, c_size = 0;
};

/// Complement C with N = M + C, M and C meeting in 0, for M maximal among the
/// subgroups meeting l^n N trivially. Result is checked by enumeration.
Complement summand_complement(const FiniteGroup& n, const std::vector<Element>& m_gens,
                              std::uint64_t l, unsigned exp_n);

}  // namespace weilzeta::abelian
