#pragma once

#include "qsing/numeric.hpp"

#include <vector>

namespace qsing {

// A reduced positive fraction n/d with 0 < d < n, plus the degenerate
// encoding 1/1 used for the "empty chain" case (a smooth point).
struct Fraction {
    Int num;
    Int den;

    Fraction(Int n, Int d);
    static Fraction degenerate() { return Fraction(1, 1); }
    bool is_degenerate() const { return num == 1 && den == 1; }

    friend bool operator==(const Fraction&, const Fraction&) = default;
};

// Entries of a Hirzebruch-Jung continued fraction; every entry is >= 2.
// The chain [a1,...,ar] encodes n/d = a1 - 1/(a2 - 1/(... - 1/ar)) and
// doubles as a linear dual graph with weights -a1,...,-ar.
using HJChain = std::vector<Int>;

// Multiplicity sequence of a one-branch cusp, non-increasing, ending in 1.
using MultiplicitySequence = std::vector<Int>;

// Expansion of n/d into its Hirzebruch-Jung chain. Rejects the degenerate
// fraction and invalid (non-coprime, out-of-range) input.
HJChain hj_expand(const Fraction& f);
HJChain hj_expand(const Int& n, const Int& d);

// Exact evaluation of a chain back into a fraction; the empty chain
// evaluates to the degenerate 1/1.
Fraction hj_evaluate(const HJChain& c);

// Determinant of the chain's sign-normalized intersection matrix
// (the tridiagonal matrix with a_i on the diagonal and -1 off it).
// Empty chain -> 1. Equals the numerator of hj_evaluate(c).
Int chain_determinant(const HJChain& c);

// Inverse of a modulo n, returned in (0, n). Requires n >= 2 and
// gcd(a, n) = 1.
Int mod_inverse(const Int& a, const Int& n);

// Euclidean multiplicity sequence of the one-branch cusp with
// characteristic pair (p, q): each remainder of the Euclidean algorithm
// repeated according to its quotient. (p, 1) yields p ones.
MultiplicitySequence multiplicity_sequence(const Int& p, const Int& q);

// delta invariant (p-1)(q-1)/2 of the (p, q) cusp; always an integer
// for coprime p, q.
Int delta_invariant(const Int& p, const Int& q);

} // namespace qsing
