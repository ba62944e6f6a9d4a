#include "qsing/quotient.hpp"

#include <algorithm>
#include <set>

#include <boost/multiprecision/cpp_int.hpp>

namespace qsing {

namespace {

using boost::multiprecision::gcd;

// Contracts interior -1 entries of a weight chain (merging the two
// neighbours, each gaining +1) until the chain has the target length, then
// compares against the target up to reversal. Depth-first with memoization;
// every step shortens the chain by one, so the depth is fixed.
bool contracts_to(const std::vector<Int>& seq,
                  const std::vector<Int>& target,
                  const std::vector<Int>& target_rev,
                  std::set<std::vector<Int>>& seen) {
    if (seq.size() == target.size())
        return seq == target || seq == target_rev;
    if (seq.size() < target.size()) return false;
    if (!seen.insert(seq).second) return false;
    for (std::size_t i = 1; i + 1 < seq.size(); ++i) {
        if (seq[i] != -1) continue;
        std::vector<Int> next;
        next.reserve(seq.size() - 1);
        for (std::size_t j = 0; j < seq.size(); ++j) {
            if (j == i) continue;
            Int w = seq[j];
            if (j + 1 == i || j == i + 1) w += 1;
            next.push_back(w);
        }
        if (contracts_to(next, target, target_rev, seen)) return true;
    }
    return false;
}

HJChain arm_or_empty(const Fraction& f) {
    if (f.is_degenerate()) return {};
    return hj_expand(f);
}

} // namespace

CyclicQuotientType::CyclicQuotientType(Int n_, Int d_) : n(std::move(n_)), d(std::move(d_)) {
    if (n < 2) throw std::invalid_argument("CyclicQuotientType: n must be at least 2");
    if (d <= 0 || d >= n) throw std::invalid_argument("CyclicQuotientType: need 0 < d < n");
    if (gcd(n, d) != 1) throw std::invalid_argument("CyclicQuotientType: n and d must be coprime");
}

DualGraph resolution_chain(const CyclicQuotientType& t) {
    HJChain c = hj_expand(t.n, t.d);
    DualGraph g;
    std::string prev;
    for (std::size_t i = 0; i < c.size(); ++i) {
        std::string name = "E" + std::to_string(i + 1);
        g.add_vertex(name, -c[i], true);
        if (!prev.empty()) g.add_edge(prev, name);
        prev = name;
    }
    return g;
}

bool is_platonic(const Int& d1, const Int& d2, const Int& d3) {
    std::array<Int, 3> s{d1, d2, d3};
    std::sort(s.begin(), s.end());
    bool table = (s[0] == 2 && s[1] == 2 && s[2] >= 2) ||
                 (s[0] == 2 && s[1] == 3 && (s[2] == 3 || s[2] == 4 || s[2] == 5));
    bool angular = s[0] >= 2 &&
                   Rat(1) / Rat(s[0]) + Rat(1) / Rat(s[1]) + Rat(1) / Rat(s[2]) > Rat(1);
    if (table != angular)
        throw std::logic_error("is_platonic: table and angle-sum test disagree");
    return table;
}

DualGraph realize_fork(const ForkSpec& f) {
    DualGraph g;
    g.add_vertex("S0", f.central_weight, true);
    for (std::size_t i = 0; i < 3; ++i) {
        const ForkArm& arm = f.arms[i];
        if (arm.chain.empty())
            throw std::invalid_argument("realize_fork: every arm must be nonempty");
        HJChain from_center = oriented(arm.chain, arm.attach);
        std::string prev = "S0";
        for (std::size_t j = 0; j < from_center.size(); ++j) {
            if (from_center[j] < 2)
                throw std::invalid_argument("realize_fork: arm entries must be at least 2");
            std::string name = "T" + std::to_string(i + 1) + "_" + std::to_string(j + 1);
            g.add_vertex(name, -from_center[j], true);
            g.add_edge(prev, name);
            prev = name;
        }
    }
    return g;
}

ForkReport validate_fork(const ForkSpec& f) {
    DualGraph g = realize_fork(f);
    ForkReport rep;
    rep.negative_definite = is_negative_definite(g);
    for (std::size_t i = 0; i < 3; ++i)
        rep.determinants[i] = chain_determinant(f.arms[i].chain);
    rep.platonic = is_platonic(rep.determinants[0], rep.determinants[1], rep.determinants[2]);
    return rep;
}

std::pair<Fraction, Fraction> infinity_types(const CyclicQuotientType& t) {
    if (t.d == 1)
        throw std::invalid_argument("infinity_types: type (n, 1) is already fibered without extra arms");
    auto make = [](const Int& num, const Int& den) {
        if (num == 1) return Fraction::degenerate();
        return Fraction(num, den);
    };
    Int g1 = gcd(t.n, t.d - 1);
    Fraction at_zero = make(t.n / g1, (t.d - 1) / g1);
    Int e = mod_inverse(t.d, t.n) * ((t.n - t.d + 1) % t.n) % t.n;
    if (e == 0)
        throw std::logic_error("infinity_types: unexpected smooth point over the second fixed point");
    Int g2 = gcd(t.n, e);
    Fraction at_inf = make(t.n / g2, e / g2);
    return {at_zero, at_inf};
}

FiberData complete_fiber(const HJChain& t, AttachEnd attach) {
    FiberData fd;
    fd.t_chain = t;
    fd.attach = attach;
    if (t.empty()) {
        fd.f_mult = 1;
        fd.f_weight = 0;
        fd.fiber_graph.add_vertex("F", 0, false);
        fd.multiplicities.set("F", 1);
        return fd;
    }

    HJChain from_f = oriented(t, attach);
    const std::size_t r = from_f.size();

    // Multiplicities from the far tip inward: the fiber condition at each
    // component determines the next one toward F.
    std::vector<Int> m(r);
    m[r - 1] = 1;
    for (std::size_t i = r - 1; i >= 1; --i) {
        Int outward = (i + 1 < r) ? m[i + 1] : Int(0);
        m[i - 1] = from_f[i] * m[i] - outward;
    }
    Int mf = from_f[0] * m[0] - (r >= 2 ? m[1] : Int(0));
    if (mf != chain_determinant(t))
        throw std::logic_error("complete_fiber: tip recursion disagrees with the chain determinant");

    Int mu1 = mf - m[0];
    fd.r_chain = hj_expand(Fraction(mf, mu1));
    std::vector<Int> rm;
    Int prev = mf, cur = mu1;
    for (const Int& b : fd.r_chain) {
        rm.push_back(cur);
        Int nxt = b * cur - prev;
        prev = cur;
        cur = nxt;
    }
    if (cur != 0 || rm.back() != 1)
        throw std::logic_error("complete_fiber: completing chain does not taper to multiplicity one");

    fd.f_mult = mf;
    fd.f_weight = -1;
    fd.t_mults = m;
    if (attach == AttachEnd::back) std::reverse(fd.t_mults.begin(), fd.t_mults.end());
    fd.r_mults = rm;

    DualGraph& g = fd.fiber_graph;
    std::string prev_name;
    for (std::size_t i = 0; i < t.size(); ++i) {
        std::string name = "T" + std::to_string(i + 1);
        g.add_vertex(name, -t[i], true);
        if (!prev_name.empty()) g.add_edge(prev_name, name);
        fd.multiplicities.set(name, Rat(fd.t_mults[i]));
        prev_name = name;
    }
    g.add_vertex("F", -1, false);
    g.add_edge("F", attach == AttachEnd::front ? "T1" : "T" + std::to_string(t.size()));
    fd.multiplicities.set("F", Rat(mf));
    prev_name = "F";
    for (std::size_t i = 0; i < fd.r_chain.size(); ++i) {
        std::string name = "R" + std::to_string(i + 1);
        g.add_vertex(name, -fd.r_chain[i], true);
        g.add_edge(prev_name, name);
        fd.multiplicities.set(name, Rat(rm[i]));
        prev_name = name;
    }
    if (!verify_fiber(g, fd.multiplicities))
        throw std::logic_error("complete_fiber: assembled chain fails the fiber conditions");
    return fd;
}

SectionWeightWitness section_weight_witness(const CyclicQuotientType& t) {
    HJChain res = hj_expand(t.n, t.d);
    std::vector<Int> target;
    target.reserve(res.size());
    for (const Int& a : res) target.push_back(-a);
    std::vector<Int> target_rev(target.rbegin(), target.rend());

    if (t.d == 1) {
        SectionWeightWitness w;
        w.weight = -t.n;
        w.t0_s0_end = AttachEnd::front;
        w.tinf_s0_end = AttachEnd::front;
        w.blowdowns = 0;
        return w;
    }

    auto [p0, pinf] = infinity_types(t);
    HJChain t0 = arm_or_empty(p0);
    HJChain ti = arm_or_empty(pinf);

    const AttachEnd ends[2] = {AttachEnd::front, AttachEnd::back};
    std::vector<SectionWeightWitness> found;
    for (Int w = -1; w >= -(t.n + 1); --w) {
        bool hit_this_weight = false;
        for (AttachEnd e0 : ends) {
            for (AttachEnd ei : ends) {
                if (hit_this_weight) break;
                std::vector<Int> seq;
                HJChain left = oriented(t0, e0);   // center-adjacent entry first
                for (auto it = left.rbegin(); it != left.rend(); ++it) seq.push_back(-*it);
                seq.push_back(w);
                HJChain right = oriented(ti, ei);
                for (const Int& a : right) seq.push_back(-a);
                if (seq.size() < target.size()) continue;
                std::set<std::vector<Int>> seen;
                if (contracts_to(seq, target, target_rev, seen)) {
                    SectionWeightWitness sw;
                    sw.weight = w;
                    sw.t0_s0_end = e0;
                    sw.tinf_s0_end = ei;
                    sw.blowdowns = static_cast<int>(seq.size() - target.size());
                    found.push_back(sw);
                    hit_this_weight = true;
                }
            }
            if (hit_this_weight) break;
        }
    }
    if (found.empty())
        throw section_weight_error(section_weight_error::Kind::exhausted,
                                   "section_weight: no admissible weight in the search range");
    if (found.size() > 1)
        throw section_weight_error(section_weight_error::Kind::ambiguous,
                                   "section_weight: two distinct weights admit a contraction");
    return found.front();
}

Int section_weight(const CyclicQuotientType& t) {
    return section_weight_witness(t).weight;
}

namespace {

void assemble_completion(StandardCompletion& sc, const Int& s0_weight,
                         const std::vector<std::pair<std::string, HJChain>>& arms) {
    DualGraph& g = sc.graph;
    g.add_vertex(sc.s0, s0_weight, true);
    g.add_vertex(sc.s1, 0, true);
    for (const auto& [tag, chain] : arms) {
        FiberData fd = complete_fiber(chain, AttachEnd::back);
        CompletionFiber cf;
        cf.tag = tag;
        cf.f_name = "F" + tag;
        cf.f_mult = fd.f_mult;
        std::string prev = sc.s0;
        for (std::size_t i = 0; i < chain.size(); ++i) {
            std::string name = "T" + tag + "_" + std::to_string(i + 1);
            g.add_vertex(name, -chain[i], true);
            g.add_edge(prev, name);
            sc.multiplicities[name] = fd.t_mults[i];
            cf.chain_order.push_back(name);
            prev = name;
        }
        g.add_vertex(cf.f_name, fd.f_weight, false);
        g.add_edge(prev, cf.f_name);
        sc.multiplicities[cf.f_name] = fd.f_mult;
        cf.chain_order.push_back(cf.f_name);
        prev = cf.f_name;
        for (std::size_t i = 0; i < fd.r_chain.size(); ++i) {
            std::string name = "R" + tag + "_" + std::to_string(i + 1);
            g.add_vertex(name, -fd.r_chain[i], true);
            g.add_edge(prev, name);
            sc.multiplicities[name] = fd.r_mults[i];
            cf.chain_order.push_back(name);
            prev = name;
        }
        g.add_edge(prev, sc.s1);
        sc.fibers.push_back(cf);
    }

    // Fix the weight of S1 by bookkeeping: contracting every fiber to a
    // 0-curve lands on a minimal ruled surface, where the two disjoint
    // sections have opposite self-intersections.
    DualGraph sim = g;
    bool progress = true;
    while (progress) {
        progress = false;
        for (const std::string& v : sim.names()) {
            if (v == sc.s0 || v == sc.s1) continue;
            if (sim.weight(v) != -1 || sim.degree(v) > 2) continue;
            const auto& nb = sim.neighbors(v);
            if (nb.size() == 2 && sim.has_edge(*nb.begin(), *std::next(nb.begin()))) continue;
            sim = blow_down(sim, v);
            progress = true;
            break;
        }
    }
    if (sim.size() != 2 + sc.fibers.size())
        throw std::logic_error("standard completion: fibers do not contract to single curves");
    for (const std::string& v : sim.names()) {
        if (v == sc.s0 || v == sc.s1) continue;
        if (sim.weight(v) != 0 || !sim.has_edge(v, sc.s0) || !sim.has_edge(v, sc.s1))
            throw std::logic_error("standard completion: contracted fiber is not a 0-curve joining the sections");
    }
    Int s1_weight = -sim.weight(sc.s0) - sim.weight(sc.s1);
    g.set_weight(sc.s1, s1_weight);
}

} // namespace

StandardCompletion build_standard_completion(const CyclicQuotientType& t) {
    StandardCompletion sc;
    if (t.d == 1) {
        sc.kind = CompletionKind::cyclic_minimal;
        sc.graph.add_vertex(sc.s0, -t.n, true);
        sc.graph.add_vertex(sc.s1, t.n, true);
        return sc;
    }
    sc.kind = CompletionKind::cyclic;
    SectionWeightWitness w = section_weight_witness(t);
    auto [p0, pinf] = infinity_types(t);
    std::vector<std::pair<std::string, HJChain>> arms = {
        {"0", oriented(arm_or_empty(p0), w.t0_s0_end)},
        {"inf", oriented(arm_or_empty(pinf), w.tinf_s0_end)},
    };
    assemble_completion(sc, w.weight, arms);
    return sc;
}

StandardCompletion build_standard_completion(const ForkSpec& f) {
    ForkReport rep = validate_fork(f);
    if (!rep.negative_definite)
        throw std::invalid_argument("build_standard_completion: fork is not negative definite");
    if (!rep.platonic)
        throw std::invalid_argument("build_standard_completion: arm determinants are not a Platonic triple");
    StandardCompletion sc;
    sc.kind = CompletionKind::noncyclic;
    std::vector<std::pair<std::string, HJChain>> arms;
    for (std::size_t i = 0; i < 3; ++i)
        arms.emplace_back(std::to_string(i + 1), oriented(f.arms[i].chain, f.arms[i].attach));
    assemble_completion(sc, f.central_weight, arms);
    return sc;
}

LogCanonicalReport log_canonical_class(const StandardCompletion& sc) {
    LogCanonicalReport rep;
    switch (sc.kind) {
        case CompletionKind::cyclic_minimal:
            rep.fiber_coefficient = Rat(-2);
            break;
        case CompletionKind::cyclic:
            rep.fiber_coefficient = Rat(0);
            break;
        case CompletionKind::noncyclic:
            rep.fiber_coefficient = Rat(1);
            break;
    }
    if (sc.kind != CompletionKind::cyclic_minimal)
        for (const auto& f : sc.fibers) rep.components.add(f.f_name, Rat(-1));

    Divisor dred;
    for (const auto& v : sc.graph.names())
        if (sc.graph.boundary(v)) dred.set(v, Rat(1));

    auto ell_dot = [&](const std::string& v) {
        return (v == sc.s0 || v == sc.s1) ? Rat(1) : Rat(0);
    };
    rep.verified = true;
    for (const auto& v : sc.graph.names()) {
        Divisor unit = Divisor::unit(v);
        Rat lhs = intersection_number(sc.graph, dred, unit) + Rat(-sc.graph.weight(v) - 2);
        Rat rhs = intersection_number(sc.graph, rep.components, unit) +
                  rep.fiber_coefficient * ell_dot(v);
        if (lhs != rhs) {
            rep.verified = false;
            rep.failing_curve = v;
            return rep;
        }
    }
    // Row for the fiber class itself: D.ell = 2 and K.ell = -2, while the
    // right side meets ell only through the sections.
    Rat lhs_ell = Rat(0);
    Rat rhs_ell = Rat(0);
    for (const auto& [name, c] : rep.components.entries()) rhs_ell += c * ell_dot(name);
    if (lhs_ell != rhs_ell) {
        rep.verified = false;
        rep.failing_curve = "ell";
    }
    return rep;
}

FreenessDefect freeness_defect(const StandardCompletion& sc) {
    FreenessDefect fd;
    Divisor L;
    Rat scalar;
    switch (sc.kind) {
        case CompletionKind::cyclic_minimal:
            scalar = Rat(-2);
            break;
        case CompletionKind::cyclic:
            scalar = Rat(0);
            break;
        case CompletionKind::noncyclic:
            scalar = Rat(1);
            break;
    }
    for (const auto& f : sc.fibers) {
        Rat inv = Rat(1) / Rat(f.f_mult);
        scalar -= inv;
        for (const auto& name : f.chain_order) {
            if (name == f.f_name) continue;   // its coefficient cancels exactly
            L.add(name, inv * Rat(sc.multiplicities.at(name)));
        }
    }
    fd.scalar = scalar;
    fd.l_part = L;
    fd.effective = L.is_effective();

    // Cross-check the decomposition D + K = scalar * ell + L row by row.
    Divisor dred;
    for (const auto& v : sc.graph.names())
        if (sc.graph.boundary(v)) dred.set(v, Rat(1));
    auto ell_dot = [&](const std::string& v) {
        return (v == sc.s0 || v == sc.s1) ? Rat(1) : Rat(0);
    };
    for (const auto& v : sc.graph.names()) {
        Divisor unit = Divisor::unit(v);
        Rat lhs = intersection_number(sc.graph, dred, unit) + Rat(-sc.graph.weight(v) - 2);
        Rat rhs = scalar * ell_dot(v) + intersection_number(sc.graph, L, unit);
        if (lhs != rhs)
            throw std::logic_error("freeness_defect: decomposition fails against " + v);
    }
    Rat l_dot_ell = Rat(0);
    for (const auto& [name, c] : L.entries()) l_dot_ell += c * ell_dot(name);
    if (l_dot_ell != Rat(0))
        throw std::logic_error("freeness_defect: vertical part meets the fiber class");
    return fd;
}

} // namespace qsing
