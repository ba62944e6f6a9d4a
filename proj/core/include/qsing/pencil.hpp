#pragma once

#include "qsing/dual_graph.hpp"
#include "qsing/hj.hpp"

#include <stdexcept>
#include <string>
#include <vector>

namespace qsing {

// Divisor class alpha * S0 + beta * f on the ruled surface with a section of
// self-intersection -n, written against the basis (S0, fiber).
struct RuledClass {
    Int s0;
    Int fiber;
};

// Intersection pairing on that surface: S0.S0 = -n, S0.f = 1, f.f = 0.
Int ruled_pairing(const Int& n, const RuledClass& x, const RuledClass& y);

// Numerical data of the pencil member C = a S1 + f, where S1 ~ S0 + n f is
// the disjoint section: class (a, a n + 1), C.C = a^2 n + 2a, C.S0 = 1,
// C.S1 = a n + 1, arithmetic genus a n (a - 1) / 2.
struct PencilMemberClass {
    RuledClass cls;
    Int self_intersection;
    Int dot_s0;
    Int dot_s1;
    Int arithmetic_genus;
};
PencilMemberClass pencil_member_class(const Int& n, const Int& a);

struct PencilStep {
    BlowupStep step;
    Int mult_on_member;   // multiplicity of the moving member at the centre
};

// The pencil spanned by C and the degenerate member a S1 + l0, blown up
// until base-point free. The final graph carries the degenerate fiber
// (special_member) and two disjoint sections: S0 and the last exceptional
// curve F.
struct PencilResolution {
    Int n;
    Int a;
    DualGraph graph;
    Divisor special_member;
    std::string section = "F";
    std::vector<PencilStep> steps;
};
PencilResolution resolve_pencil(const Int& n, const Int& a);

// The singularity of the member at the base point: one cusp of type
// (a n + 1, a), smooth exactly when a = 1; its delta invariant equals the
// arithmetic genus of the member, so every member is rational.
struct CuspData {
    Fraction type;
    MultiplicitySequence mults;
    Int delta;
    bool smooth;
};
CuspData cusp_data(const Int& n, const Int& a);

struct contraction_error : std::runtime_error {
    std::size_t step_index;
    contraction_error(std::size_t i, const std::string& msg)
        : std::runtime_error(msg), step_index(i) {}
};

// Contracts the resolved pencil back to a minimal ruled surface by blowing
// down S1, the A-chain, the B-chain and the E-chain in that order; each step
// is validated and the result must be the chain S0(-n) - l0(0) - F(+n).
struct HirzebruchContraction {
    std::vector<std::string> schedule;
    DualGraph final_graph;
};
HirzebruchContraction contract_to_hirzebruch(const PencilResolution& pr);

} // namespace qsing
