#pragma once

#include "qsing/numeric.hpp"

#include <map>
#include <stdexcept>
#include <string>
#include <utility>
#include <vector>

namespace qsing {

struct parse_error : std::runtime_error {
    std::size_t position;   // 1-based character offset into the input
    parse_error(std::size_t pos, const std::string& msg)
        : std::runtime_error(msg + " at position " + std::to_string(pos)), position(pos) {}
};

// Bivariate polynomial over the rationals, stored sparsely by exponent pair.
class SparsePoly {
public:
    using Exp = std::pair<long long, long long>;   // (x power, y power)

    SparsePoly() = default;
    static SparsePoly constant(const Rat& c);
    static SparsePoly variable_x();
    static SparsePoly variable_y();
    static SparsePoly monomial(long long i, long long j, const Rat& c);

    bool is_zero() const { return c_.empty(); }
    bool is_constant() const;
    const std::map<Exp, Rat>& terms() const { return c_; }
    Rat coeff(long long i, long long j) const;
    void add_term(long long i, long long j, const Rat& v);

    long long degree() const;      // total degree; -1 for the zero polynomial
    long long degree_x() const;
    long long degree_y() const;

    SparsePoly operator+(const SparsePoly& o) const;
    SparsePoly operator-(const SparsePoly& o) const;
    SparsePoly operator-() const;
    SparsePoly operator*(const SparsePoly& o) const;
    SparsePoly operator*(const Rat& c) const;
    SparsePoly pow(long long e) const;
    bool operator==(const SparsePoly& o) const { return c_ == o.c_; }
    bool operator!=(const SparsePoly& o) const { return c_ != o.c_; }

    SparsePoly dx() const;
    SparsePoly dy() const;

    Rat evaluate(const Rat& x, const Rat& y) const;
    // p(q, r) for polynomial arguments
    SparsePoly compose(const SparsePoly& q, const SparsePoly& r) const;

    std::string to_string() const;

private:
    std::map<Exp, Rat> c_;
};

// Grammar: expr := term (('+'|'-') term)*, term := factor (('*'|'/') factor
// | factor)*, factor := '-' factor | base ('^' digits)?, base := digits |
// 'x' | 'y' | '(' expr ')'. Division requires a nonzero constant divisor;
// juxtaposition multiplies. Errors carry a 1-based position.
SparsePoly parse_poly(const std::string& text);

// Dense univariate polynomial over the rationals.
class UPoly {
public:
    UPoly() = default;
    explicit UPoly(std::vector<Rat> coeffs);
    static UPoly zero() { return UPoly(); }
    static UPoly one() { return UPoly({Rat(1)}); }

    bool is_zero() const { return c_.empty(); }
    long long degree() const { return static_cast<long long>(c_.size()) - 1; }
    Rat coeff(long long k) const;
    const std::vector<Rat>& coeffs() const { return c_; }
    Rat lead() const;
    bool is_monomial() const;   // exactly one nonzero coefficient

    UPoly operator+(const UPoly& o) const;
    UPoly operator-(const UPoly& o) const;
    UPoly operator*(const UPoly& o) const;
    UPoly operator*(const Rat& c) const;
    bool operator==(const UPoly& o) const { return c_ == o.c_; }
    bool operator!=(const UPoly& o) const { return c_ != o.c_; }
    UPoly pow(long long e) const;

    // Euclidean division by a nonzero divisor; both parts exact.
    std::pair<UPoly, UPoly> divmod(const UPoly& d) const;
    UPoly derivative() const;
    Rat evaluate(const Rat& t) const;
    UPoly monic() const;

    static UPoly gcd(UPoly a, UPoly b);     // monic, gcd(0, 0) = 0
    UPoly squarefree_part() const;          // p / gcd(p, p')

private:
    void trim();
    std::vector<Rat> c_;
};

// Distinct rational roots of p. `candidates_complete` reports whether the
// divisor enumeration behind the rational root theorem was exhaustive (it
// may be cut off by a huge unfactorable coefficient); `all_roots_rational`
// reports whether deflating the found roots from the squarefree part leaves
// a constant.
struct RootSearch {
    std::vector<Rat> roots;
    bool candidates_complete = true;
    bool all_roots_rational = true;
};
RootSearch rational_roots(const UPoly& p);

// p(x0, y) as a polynomial in y, and p(x, y0) as a polynomial in x.
UPoly specialize_x(const SparsePoly& p, const Rat& x0);
UPoly specialize_y(const SparsePoly& p, const Rat& y0);

// Resultants with respect to one variable, exact, via evaluation of the
// Sylvester determinant and interpolation. Conventions: 0 if either input
// is 0; 1 if neither involves the eliminated variable; f^deg(g) if only f
// is free of it.
UPoly resultant_y(const SparsePoly& f, const SparsePoly& g);   // in x
UPoly resultant_x(const SparsePoly& f, const SparsePoly& g);   // in y

} // namespace qsing
