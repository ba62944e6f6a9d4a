#pragma once

#include "qsing/dual_graph.hpp"
#include "qsing/hj.hpp"

#include <array>
#include <map>
#include <stdexcept>
#include <string>
#include <utility>
#include <vector>

namespace qsing {

// Cyclic quotient type (n, d): the action zeta.(x, y) = (zeta x, zeta^d y)
// with zeta a primitive n-th root of unity, gcd(n, d) = 1, 0 < d < n.
struct CyclicQuotientType {
    Int n;
    Int d;
    CyclicQuotientType(Int n_, Int d_);
};

enum class AttachEnd { front, back };

inline HJChain oriented(const HJChain& c, AttachEnd first_at) {
    if (first_at == AttachEnd::front) return c;
    return HJChain(c.rbegin(), c.rend());
}

// One arm of a fork; `attach` names the end adjacent to the central curve.
struct ForkArm {
    HJChain chain;
    AttachEnd attach = AttachEnd::front;
};

struct ForkSpec {
    Int central_weight;
    std::array<ForkArm, 3> arms;
};

struct ForkReport {
    bool negative_definite = false;
    std::array<Int, 3> determinants{};
    bool platonic = false;
};

// A degenerate fiber completed from one resolution arm T: the unique linear
// chain R making T + F + R contract to a smooth fiber, with the exact
// multiplicities and the multiplicity of the -1 curve F.
struct FiberData {
    HJChain t_chain;                 // as passed in
    AttachEnd attach;                // end of t_chain that meets F
    HJChain r_chain;                 // F-adjacent entry first
    std::vector<Int> t_mults;        // aligned with t_chain
    std::vector<Int> r_mults;        // aligned with r_chain
    Int f_mult;                      // = chain_determinant(t_chain)
    Int f_weight;                    // -1, or 0 for the empty arm
    DualGraph fiber_graph;           // names T1..Tr, F, R1..Rs
    Divisor multiplicities;          // over fiber_graph
};

struct CompletionFiber {
    std::string tag;
    std::vector<std::string> chain_order;  // S0-side tip ... F ... S1-side tip
    std::string f_name;
    Int f_mult;
};

enum class CompletionKind { cyclic_minimal, cyclic, noncyclic };

// P^1-fibered completion of the smooth part of a quotient: two disjoint
// boundary sections S0, S1 and at most three degenerate fibers T + F + R,
// with F the only component off the boundary.
struct StandardCompletion {
    CompletionKind kind = CompletionKind::cyclic_minimal;
    DualGraph graph;
    std::string s0 = "S0";
    std::string s1 = "S1";
    std::vector<CompletionFiber> fibers;
    std::map<std::string, Int> multiplicities;   // fiber components only
};

struct SectionWeightWitness {
    Int weight;
    AttachEnd t0_s0_end;      // end of the T0 chain adjacent to S0
    AttachEnd tinf_s0_end;
    int blowdowns = 0;
};

struct LogCanonicalReport {
    Rat fiber_coefficient;    // multiple of the general fiber class
    Divisor components;       // curve part of the right-hand side
    bool verified = false;
    std::string failing_curve;  // first offender; "ell" for the fiber-class row
};

struct FreenessDefect {
    Rat scalar;
    Divisor l_part;
    bool effective = false;
};

// Raised when the bounded refinement search behind section_weight either
// finds two distinct admissible weights or runs out of budget.
struct section_weight_error : std::runtime_error {
    enum class Kind { ambiguous, exhausted };
    Kind kind;
    section_weight_error(Kind k, const std::string& msg) : std::runtime_error(msg), kind(k) {}
};

// Minimal resolution of the cyclic singularity: the linear chain E1..Er
// with weights -a_i from the Hirzebruch-Jung expansion of n/d.
DualGraph resolution_chain(const CyclicQuotientType& t);

// Whether {d1, d2, d3} is one of {2,2,n>=2}, {2,3,3}, {2,3,4}, {2,3,5};
// cross-checked against 1/d1 + 1/d2 + 1/d3 > 1 with all entries >= 2.
bool is_platonic(const Int& d1, const Int& d2, const Int& d3);

// Realizes a fork spec as a dual graph (central curve S0 plus three arms).
DualGraph realize_fork(const ForkSpec& f);

// Negative definiteness, arm determinants (in arm order) and the Platonic
// verdict for a fork spec.
ForkReport validate_fork(const ForkSpec& f);

// Types of the two cyclic singularities lying over the fixed points on the
// exceptional line of the quotient, for d > 1: (n/g, (d-1)/g) with
// g = gcd(n, d-1), and (n/g', e/g') with d e = n - d + 1 (mod n),
// g' = gcd(n, e). Degenerate entries become 1/1.
std::pair<Fraction, Fraction> infinity_types(const CyclicQuotientType& t);

// Completes a resolution arm T to a full degenerate fiber T + F + R. The
// multiplicities solve the fiber conditions with minimal positive tips, and
// the multiplicity of F equals chain_determinant(T). Empty T yields the
// smooth fiber: a single 0-curve.
FiberData complete_fiber(const HJChain& t, AttachEnd attach);

// Self-intersection of the section S0 in the standard completion, found by
// bounded search: rev(T0) + [S0] + Tinf must contract back to the minimal
// resolution chain through interior -1 contractions only (the inverse of
// subdivisional blow-ups), trying both orientations of each arm. Unique by
// construction or a section_weight_error is raised.
Int section_weight(const CyclicQuotientType& t);
SectionWeightWitness section_weight_witness(const CyclicQuotientType& t);

StandardCompletion build_standard_completion(const CyclicQuotientType& t);
StandardCompletion build_standard_completion(const ForkSpec& f);

// The log canonical divisor D + K of a standard completion, expressed
// against the general fiber class and verified curve by curve through
// adjunction (K.C = -C.C - 2, K.ell = -2).
LogCanonicalReport log_canonical_class(const StandardCompletion& sc);

// Writes D + K as scalar * ell + L with L effective, reporting the scalar
// (negative exactly when the log canonical class obstructs freeness) and L.
FreenessDefect freeness_defect(const StandardCompletion& sc);

} // namespace qsing
