#include "qsing/equivariant.hpp"

#include <boost/multiprecision/cpp_int.hpp>

namespace qsing {

using boost::multiprecision::gcd;

GroupAction::GroupAction(Int n_, Int d_) : n(std::move(n_)), d(std::move(d_)) {
    if (n < 1) throw std::invalid_argument("GroupAction: order must be positive");
    d %= n;
    if (d < 0) d += n;
    if (gcd(n, d) != 1) throw std::invalid_argument("GroupAction: weight must be coprime to the order");
}

SparsePoly jacobian(const SparsePoly& f, const SparsePoly& g) {
    return f.dx() * g.dy() - f.dy() * g.dx();
}

bool is_keller(const PolyEndomorphism& m) {
    SparsePoly j = jacobian(m.f, m.g);
    return j.is_constant() && !j.is_zero();
}

bool weight_compatible(const SparsePoly& p, const GroupAction& a, const Int& w) {
    for (const auto& [e, c] : p.terms()) {
        Int r = (Int(e.first) + a.d * Int(e.second) - w) % a.n;
        if (r != 0) return false;
    }
    return true;
}

Rat MoebiusMap::apply(const Rat& t) const {
    Rat den = a + b * t;
    if (den == 0) throw std::domain_error("MoebiusMap: pole");
    return (c + d * t) / den;
}

MoebiusMap induced_boundary_map(const PolyEndomorphism& m) {
    MoebiusMap mo{m.f.coeff(1, 0), m.f.coeff(0, 1), m.g.coeff(1, 0), m.g.coeff(0, 1)};
    if (mo.det() == 0)
        throw std::domain_error("induced_boundary_map: singular linear part collapses the exceptional line");
    return mo;
}

namespace {

UPoly strip_zero_root(const UPoly& p) {
    const std::vector<Rat>& c = p.coeffs();
    std::size_t v = 0;
    while (v < c.size() && c[v] == 0) ++v;
    return UPoly(std::vector<Rat>(c.begin() + static_cast<std::ptrdiff_t>(v), c.end()));
}

// Checks one coordinate direction: every nonzero rational root r of the
// stripped resultant must specialize f, g to coprime univariate
// polynomials; a nontrivial common factor there is an honest common zero
// away from the origin.
bool side_clean(const SparsePoly& f, const SparsePoly& g, const UPoly& res, bool x_side,
                FiberCheck& out) {
    UPoly h = strip_zero_root(res);
    RootSearch rsch = rational_roots(h);
    for (const Rat& r : rsch.roots) {
        if (r == 0) continue;
        UPoly fa = x_side ? specialize_x(f, r) : specialize_y(f, r);
        UPoly ga = x_side ? specialize_x(g, r) : specialize_y(g, r);
        UPoly cg = UPoly::gcd(fa, ga);
        if (cg.is_zero() || cg.degree() >= 1) {
            out.origin_only = false;
            out.exact = true;
            out.detail = std::string("common zero on the line ") + (x_side ? "x" : "y") + " = " +
                         to_string(r);
            return false;
        }
    }
    if (!rsch.candidates_complete || !rsch.all_roots_rational) {
        out.origin_only = false;
        out.exact = false;
        out.detail = std::string("the resultant in ") + (x_side ? "x" : "y") +
                     " has roots that rational arithmetic cannot certify";
        return false;
    }
    return true;
}

} // namespace

FiberCheck origin_fiber_check(const PolyEndomorphism& m) {
    FiberCheck out;
    if (m.f.is_zero() || m.g.is_zero()) {
        out.detail = "a coordinate of the map is identically zero";
        return out;
    }
    if (m.f.coeff(0, 0) != 0 || m.g.coeff(0, 0) != 0) {
        out.detail = "the origin is not in the fiber";
        return out;
    }
    UPoly r1 = resultant_y(m.f, m.g);   // in x
    UPoly r2 = resultant_x(m.f, m.g);   // in y
    if (r1.is_zero() || r2.is_zero()) {
        out.detail = "f and g share a curve";
        return out;
    }
    // On each axis the common zeros are the roots of a one-variable gcd,
    // which must be a pure power of the coordinate.
    UPoly fy = specialize_x(m.f, Rat(0));
    UPoly gy = specialize_x(m.g, Rat(0));
    UPoly ax = UPoly::gcd(fy, gy);
    if (ax.is_zero() || !ax.is_monomial() || ax.degree() < 1) {
        out.detail = "common zeros on the axis x = 0 away from the origin";
        return out;
    }
    UPoly fx = specialize_y(m.f, Rat(0));
    UPoly gx = specialize_y(m.g, Rat(0));
    UPoly ay = UPoly::gcd(fx, gx);
    if (ay.is_zero() || !ay.is_monomial() || ay.degree() < 1) {
        out.detail = "common zeros on the axis y = 0 away from the origin";
        return out;
    }
    if (!side_clean(m.f, m.g, r1, true, out)) return out;
    if (!side_clean(m.f, m.g, r2, false, out)) return out;
    out.origin_only = true;
    out.exact = true;
    out.detail.clear();
    return out;
}

CertifyVerdict certify(const PolyEndomorphism& m, const GroupAction& a) {
    CertifyVerdict v;
    v.keller = is_keller(m);
    if (!v.keller) {
        v.reason = "not_keller";
        v.detail = "the Jacobian determinant is not a nonzero constant";
        return v;
    }
    v.equivariant = weight_compatible(m.f, a, Int(1)) && weight_compatible(m.g, a, a.d);
    if (!v.equivariant) {
        v.reason = "equivariance";
        v.detail = "a coordinate has a monomial outside its character";
        return v;
    }
    FiberCheck fc = origin_fiber_check(m);
    v.origin_fiber = fc.origin_only;
    v.exact = fc.exact;
    if (!v.origin_fiber) {
        v.reason = "origin_fiber";
        v.detail = fc.detail;
        return v;
    }
    if (a.n % 2 != 0) {
        v.reason = "group_order_odd";
        v.detail = "all gates pass but the criterion needs an even group order";
        return v;
    }
    v.certified = true;
    v.detail = "automorphism_by_theorem";
    return v;
}

} // namespace qsing
