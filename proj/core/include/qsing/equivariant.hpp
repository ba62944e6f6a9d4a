#pragma once

#include "qsing/poly.hpp"

#include <string>

namespace qsing {

// The cyclic action zeta.(x, y) = (zeta x, zeta^d y) of order n, d reduced
// mod n and coprime to n.
struct GroupAction {
    Int n;
    Int d;
    GroupAction(Int n_, Int d_);
};

// A polynomial self-map of the plane, (x, y) -> (f, g). Construction is
// permissive; every predicate below copes with arbitrary input.
struct PolyEndomorphism {
    SparsePoly f;
    SparsePoly g;
};

SparsePoly jacobian(const SparsePoly& f, const SparsePoly& g);

// Jacobian determinant is a nonzero constant.
bool is_keller(const PolyEndomorphism& m);

// Every monomial x^i y^j of p satisfies i + d j = w (mod n): p transforms
// with character w under the action.
bool weight_compatible(const SparsePoly& p, const GroupAction& a, const Int& w);

// t -> (c + d t) / (a + b t) on the exceptional line, induced by the linear
// part (a x + b y, c x + d y) of an endomorphism.
struct MoebiusMap {
    Rat a, b, c, d;
    Rat det() const { return a * d - b * c; }
    Rat apply(const Rat& t) const;
};

// Throws std::domain_error when the linear part is singular (the map then
// collapses the exceptional line).
MoebiusMap induced_boundary_map(const PolyEndomorphism& m);

// Verdict on whether f = g = 0 defines exactly the origin. `exact` is
// cleared when the decision would need roots that cannot be certified by
// rational arithmetic; the verdict is then conservatively negative.
struct FiberCheck {
    bool origin_only = false;
    bool exact = true;
    std::string detail;
};

FiberCheck origin_fiber_check(const PolyEndomorphism& m);
inline bool origin_fiber_is_origin(const PolyEndomorphism& m) {
    return origin_fiber_check(m).origin_only;
}

// Gates, in order: Keller condition, equivariance of f with weight 1 and of
// g with weight d, origin fiber, and the parity of the group order. For
// even n every gate passing certifies the map as an automorphism (the
// theorem only needs the order-2 subgroup, which acts by (-x, -y) because d
// must be odd); for odd n the criterion does not apply and `reason` says so.
struct CertifyVerdict {
    bool keller = false;
    bool equivariant = false;
    bool origin_fiber = false;
    bool certified = false;
    bool exact = true;
    std::string reason;    // empty when certified: "not_keller", "equivariance",
                           // "origin_fiber" or "group_order_odd" otherwise
    std::string detail;
};

CertifyVerdict certify(const PolyEndomorphism& m, const GroupAction& a);

} // namespace qsing
