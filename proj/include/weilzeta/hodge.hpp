#pragma once

#include <vector>

#include "weilzeta/hodge_diamond.hpp"
#include "weilzeta/variety.hpp"

namespace weilzeta {

/// Hodge diamond of a supported variety:
///  - P^n: h[i][i] = 1.
///  - plane curve of degree e: genus (e-1)(e-2)/2.
///  - smooth degree-e hypersurface in P^n: ambient classes h[k][k] = 1 plus the
///    primitive middle part h[q][d-q] = coefficient of t^{(q+1)e-(n+1)} in
///    ((1 - t^{e-1}) / (1 - t))^{n+1}, the Hilbert series of the Jacobian
///    ring of a Fermat-type equation.
///  - products: Kunneth.
/// Throws UnsupportedVariety for anything else.
HodgeDiamond hodge_of(const VarietyExpr& v);

/// Primitive middle Hodge numbers h^{d-q,q}_prim, q = 0..d, of a smooth
/// degree-e hypersurface in P^n.
std::vector<long> primitive_middle_hodge(unsigned n, unsigned e);

/// True when p divides some hypersurface degree in v; the lifted Hodge
/// numbers may then disagree with the coherent ones over F_q.
bool hodge_characteristic_caveat(const VarietyExpr& v, std::uint64_t p);

}  // namespace weilzeta
