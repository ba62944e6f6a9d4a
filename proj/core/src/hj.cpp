#include "qsing/hj.hpp"

#include <stdexcept>

namespace qsing {

Fraction::Fraction(Int n, Int d) : num(std::move(n)), den(std::move(d)) {
    if (num == 1 && den == 1) return;
    if (num <= 0 || den <= 0 || den >= num)
        throw std::invalid_argument("Fraction: need 0 < d < n, got " + num.str() + "/" + den.str());
    if (gcd(num, den) != 1)
        throw std::invalid_argument("Fraction: " + num.str() + "/" + den.str() + " is not reduced");
}

HJChain hj_expand(const Fraction& f) {
    if (f.is_degenerate())
        throw std::invalid_argument("hj_expand: degenerate fraction 1/1 has no chain");
    HJChain chain;
    Int n = f.num, d = f.den;
    while (d > 0) {
        Int a = ceil_div(n, d);
        chain.push_back(a);
        // n/d = a - 1/(n'/d') with n' = d, d' = a*d - n.
        Int d2 = a * d - n;
        n = d;
        d = d2;
    }
    return chain;
}

HJChain hj_expand(const Int& n, const Int& d) { return hj_expand(Fraction(n, d)); }

Fraction hj_evaluate(const HJChain& c) {
    if (c.empty()) return Fraction::degenerate();
    // Continuant recursion p_i = a_i p_{i-1} - p_{i-2}; the value is
    // p_r / q_r with q the continuant of the tail a_2..a_r.
    Int p_prev = 1, p = 0;
    Int q_prev = 0, q = 0;
    bool first = true;
    for (const Int& a : c) {
        if (a < 2) throw std::invalid_argument("hj_evaluate: chain entry " + a.str() + " < 2");
        if (first) {
            p = a;
            q = 1;
            first = false;
            continue;
        }
        Int p_next = a * p - p_prev;
        Int q_next = a * q - q_prev;
        p_prev = p; p = p_next;
        q_prev = q; q = q_next;
    }
    return Fraction(p, q);
}

Int chain_determinant(const HJChain& c) {
    if (c.empty()) return 1;
    return hj_evaluate(c).num;
}

Int mod_inverse(const Int& a, const Int& n) {
    if (n < 2) throw std::invalid_argument("mod_inverse: modulus must be >= 2");
    // Extended Euclid on (a mod n, n).
    Int r0 = ((a % n) + n) % n, r1 = n;
    Int s0 = 1, s1 = 0;
    while (r1 != 0) {
        Int q = r0 / r1;
        Int r2 = r0 - q * r1;
        Int s2 = s0 - q * s1;
        r0 = r1; r1 = r2;
        s0 = s1; s1 = s2;
    }
    if (r0 != 1)
        throw std::invalid_argument("mod_inverse: gcd(" + a.str() + ", " + n.str() + ") != 1");
    return ((s0 % n) + n) % n;
}

MultiplicitySequence multiplicity_sequence(const Int& p, const Int& q) {
    if (p <= 0 || q <= 0 || q > p)
        throw std::invalid_argument("multiplicity_sequence: need 0 < q <= p");
    if (p == q) {
        if (p != 1) throw std::invalid_argument("multiplicity_sequence: gcd(p, q) != 1");
        return {Int(1)};
    }
    if (gcd(p, q) != 1)
        throw std::invalid_argument("multiplicity_sequence: gcd(p, q) != 1");
    MultiplicitySequence seq;
    Int a = p, b = q;
    while (b > 0) {
        Int k = a / b;
        for (Int i = 0; i < k; ++i) seq.push_back(b);
        Int r = a % b;
        a = b;
        b = r;
    }
    return seq;
}

Int delta_invariant(const Int& p, const Int& q) {
    if (p <= 0 || q <= 0 || gcd(p, q) != 1)
        throw std::invalid_argument("delta_invariant: need coprime positive (p, q)");
    return (p - 1) * (q - 1) / 2;
}

} // namespace qsing
