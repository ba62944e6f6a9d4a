#include "qsing/pencil.hpp"

#include "qsing/numeric.hpp"

namespace qsing {

Int ruled_pairing(const Int& n, const RuledClass& x, const RuledClass& y) {
    return -n * x.s0 * y.s0 + x.s0 * y.fiber + x.fiber * y.s0;
}

PencilMemberClass pencil_member_class(const Int& n, const Int& a) {
    if (n < 1 || a < 1)
        throw std::invalid_argument("pencil_member_class: need n >= 1 and a >= 1");
    PencilMemberClass pm;
    pm.cls = RuledClass{a, a * n + 1};
    pm.self_intersection = ruled_pairing(n, pm.cls, pm.cls);
    pm.dot_s0 = ruled_pairing(n, pm.cls, RuledClass{1, 0});
    pm.dot_s1 = ruled_pairing(n, pm.cls, RuledClass{1, n});
    // adjunction against K = -2 S0 - (n + 2) f
    Int kc = ruled_pairing(n, pm.cls, RuledClass{-2, -(n + 2)});
    pm.arithmetic_genus = (pm.self_intersection + kc) / 2 + 1;
    if (pm.arithmetic_genus != a * n * (a - 1) / 2)
        throw std::logic_error("pencil_member_class: adjunction disagrees with the closed form");
    return pm;
}

PencilResolution resolve_pencil(const Int& n, const Int& a) {
    if (n < 1 || a < 1)
        throw std::invalid_argument("resolve_pencil: need n >= 1 and a >= 1");
    PencilResolution pr;
    pr.n = n;
    pr.a = a;

    DualGraph g;
    g.add_vertex("S0", -n, false);
    g.add_vertex("S1", n, false);
    g.add_vertex("l0", 0, false);
    g.add_edge("S0", "l0");
    g.add_edge("S1", "l0");

    long long nn = to_int64(n);
    long long aa = to_int64(a);
    auto apply = [&](const BlowupStep& s, const Int& mult) {
        g = blow_up(g, s);
        pr.steps.push_back(PencilStep{s, mult});
    };

    // First the cusp itself: n infinitely near points of multiplicity a on
    // the S1 side, then a more of multiplicity one, matching the Euclid
    // sequence of (a n + 1, a).
    std::string prev = "l0";
    for (long long k = 1; k <= nn; ++k) {
        std::string name = "E" + std::to_string(k);
        apply(BlowupStep::at_edge("S1", prev, name), a);
        prev = name;
    }
    std::string last_a;
    for (long long k = 1; k <= aa; ++k) {
        std::string name = "A" + std::to_string(k);
        if (k == 1)
            apply(BlowupStep::at_edge("S1", prev, name), 1);
        else
            apply(BlowupStep::at_edge(prev, last_a, name), 1);
        last_a = name;
    }
    // Then separate the members, now smooth, from each other: a free points
    // of multiplicity one; the last exceptional curve is the section F.
    std::string carrier = last_a;
    for (long long k = 1; k <= aa; ++k) {
        std::string name = (k == aa) ? "F" : "B" + std::to_string(k);
        apply(BlowupStep::at_curve(carrier, name), 1);
        carrier = name;
    }
    pr.graph = g;

    Divisor d;
    d.set("l0", Rat(1));
    for (long long k = 1; k <= nn; ++k) d.set("E" + std::to_string(k), Rat(1));
    for (long long k = 1; k <= aa; ++k) d.set("A" + std::to_string(k), Rat(a));
    d.set("S1", Rat(a));
    for (long long k = 1; k + 1 <= aa; ++k) d.set("B" + std::to_string(k), Rat(a - k));
    pr.special_member = d;

    if (!verify_fiber(g, d))
        throw std::logic_error("resolve_pencil: special member fails the fiber conditions");
    if (intersection_number(g, d, Divisor::unit("S0")) != Rat(1) ||
        intersection_number(g, d, Divisor::unit("F")) != Rat(1))
        throw std::logic_error("resolve_pencil: sections do not meet the member once");

    // The blow-up multiplicities must absorb the whole self-intersection of
    // the moving member.
    Int spent = 0;
    for (const auto& s : pr.steps) spent += s.mult_on_member * s.mult_on_member;
    if (spent != pencil_member_class(n, a).self_intersection)
        throw std::logic_error("resolve_pencil: base multiplicities do not exhaust C.C");
    return pr;
}

CuspData cusp_data(const Int& n, const Int& a) {
    if (n < 1 || a < 1)
        throw std::invalid_argument("cusp_data: need n >= 1 and a >= 1");
    CuspData c{Fraction(a * n + 1, a), multiplicity_sequence(a * n + 1, a),
               delta_invariant(a * n + 1, a), a == 1};
    return c;
}

HirzebruchContraction contract_to_hirzebruch(const PencilResolution& pr) {
    long long nn = to_int64(pr.n);
    long long aa = to_int64(pr.a);
    std::vector<std::string> sched;
    sched.push_back("S1");
    for (long long k = 1; k <= aa; ++k) sched.push_back("A" + std::to_string(k));
    for (long long k = 1; k + 1 <= aa; ++k) sched.push_back("B" + std::to_string(k));
    for (long long k = nn; k >= 1; --k) sched.push_back("E" + std::to_string(k));

    DualGraph g = pr.graph;
    for (std::size_t i = 0; i < sched.size(); ++i) {
        try {
            g = blow_down(g, sched[i]);
        } catch (const std::exception& e) {
            throw contraction_error(i, "contraction stalls at " + sched[i] + ": " + e.what());
        }
    }
    bool shape = g.size() == 3 && g.has_vertex("S0") && g.has_vertex("l0") && g.has_vertex("F") &&
                 g.weight("S0") == -pr.n && g.weight("l0") == 0 && g.weight("F") == pr.n &&
                 g.has_edge("S0", "l0") && g.has_edge("l0", "F") && !g.has_edge("S0", "F");
    if (!shape)
        throw contraction_error(sched.size(),
                                "contraction does not end on the expected minimal ruled chain");
    return HirzebruchContraction{sched, g};
}

} // namespace qsing
