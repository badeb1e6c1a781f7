#pragma once

#include <vector>

#include "weilzeta/arith.hpp"

namespace weilzeta {

/// h[j][i] = dim H^j(X, Omega^i) for a variety of dimension d.
struct HodgeDiamond {
    unsigned d = 0;
    std::vector<std::vector<long>> h;

    static HodgeDiamond zero(unsigned d) {
        return HodgeDiamond{d, std::vector<std::vector<long>>(d + 1, std::vector<long>(d + 1, 0))};
    }

    long at(unsigned j, unsigned i) const { return h[j][i]; }

    /// b_m = sum_{i+j=m} h[j][i], m = 0..2d.
    std::vector<long> betti() const;
    bool serre_symmetric() const;

    friend bool operator==(const HodgeDiamond&, const HodgeDiamond&) = default;
};

/// sum over i <= r and all j of (-1)^{i+j} (r-i) h[j][i].
BigInt chi_O(const HodgeDiamond& hd, long r);

/// Kunneth: h_{XxY}[j][i] = sum h_X[j1][i1] h_Y[j2][i2] over j1+j2=j, i1+i2=i.
HodgeDiamond kunneth(const HodgeDiamond& x, const HodgeDiamond& y);

std::vector<long> betti_convolution(const std::vector<long>& a, const std::vector<long>& b);

}  // namespace weilzeta
