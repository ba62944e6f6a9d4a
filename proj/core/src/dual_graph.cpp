#include "qsing/dual_graph.hpp"

#include "qsing/hj.hpp"

#include <algorithm>
#include <stdexcept>

namespace qsing {

Divisor Divisor::unit(const std::string& name) {
    Divisor d;
    d.set(name, 1);
    return d;
}

void Divisor::set(const std::string& name, const Rat& value) {
    if (value == 0)
        coeffs_.erase(name);
    else
        coeffs_[name] = value;
}

void Divisor::add(const std::string& name, const Rat& value) {
    set(name, coeff(name) + value);
}

Rat Divisor::coeff(const std::string& name) const {
    auto it = coeffs_.find(name);
    return it == coeffs_.end() ? Rat(0) : it->second;
}

bool Divisor::is_effective() const {
    for (const auto& [name, c] : coeffs_)
        if (c < 0) return false;
    return true;
}

bool Divisor::is_integral() const {
    for (const auto& [name, c] : coeffs_)
        if (!is_integer(c)) return false;
    return true;
}

Int Divisor::coefficient_gcd() const {
    Int g = 0;
    for (const auto& [name, c] : coeffs_) {
        if (!is_integer(c))
            throw std::domain_error("coefficient_gcd: divisor is not integral");
        g = gcd(g, numerator(c));
    }
    return abs(g);
}

std::vector<std::string> Divisor::support() const {
    std::vector<std::string> out;
    out.reserve(coeffs_.size());
    for (const auto& [name, c] : coeffs_) out.push_back(name);
    return out;
}

Divisor& Divisor::operator+=(const Divisor& o) {
    for (const auto& [name, c] : o.coeffs_) add(name, c);
    return *this;
}

Divisor& Divisor::operator-=(const Divisor& o) {
    for (const auto& [name, c] : o.coeffs_) add(name, -c);
    return *this;
}

Divisor& Divisor::operator*=(const Rat& s) {
    if (s == 0) {
        coeffs_.clear();
        return *this;
    }
    for (auto& [name, c] : coeffs_) c *= s;
    return *this;
}

const DualGraph::Vertex& DualGraph::at(const std::string& name) const {
    auto it = verts_.find(name);
    if (it == verts_.end()) throw std::invalid_argument("unknown curve: " + name);
    return it->second;
}

DualGraph::Vertex& DualGraph::at(const std::string& name) {
    auto it = verts_.find(name);
    if (it == verts_.end()) throw std::invalid_argument("unknown curve: " + name);
    return it->second;
}

void DualGraph::add_vertex(const std::string& name, Int weight, bool boundary) {
    if (name.empty()) throw std::invalid_argument("vertex name must be nonempty");
    if (verts_.count(name)) throw std::invalid_argument("duplicate curve: " + name);
    verts_[name] = Vertex{std::move(weight), boundary};
    adj_[name];
}

void DualGraph::remove_vertex(const std::string& name) {
    at(name);
    for (const auto& nb : adj_[name]) adj_[nb].erase(name);
    adj_.erase(name);
    verts_.erase(name);
}

void DualGraph::add_edge(const std::string& a, const std::string& b) {
    at(a);
    at(b);
    if (a == b) throw std::invalid_argument("self-edge on " + a);
    if (adj_[a].count(b)) throw std::invalid_argument("duplicate edge " + a + " -- " + b);
    adj_[a].insert(b);
    adj_[b].insert(a);
}

void DualGraph::remove_edge(const std::string& a, const std::string& b) {
    if (!has_edge(a, b)) throw std::invalid_argument("no edge " + a + " -- " + b);
    adj_[a].erase(b);
    adj_[b].erase(a);
}

bool DualGraph::has_vertex(const std::string& name) const { return verts_.count(name) > 0; }

bool DualGraph::has_edge(const std::string& a, const std::string& b) const {
    auto it = adj_.find(a);
    return it != adj_.end() && it->second.count(b) > 0;
}

const Int& DualGraph::weight(const std::string& name) const { return at(name).weight; }
void DualGraph::set_weight(const std::string& name, Int w) { at(name).weight = std::move(w); }
bool DualGraph::boundary(const std::string& name) const { return at(name).boundary; }
void DualGraph::set_boundary(const std::string& name, bool b) { at(name).boundary = b; }

std::vector<std::string> DualGraph::names() const {
    std::vector<std::string> out;
    out.reserve(verts_.size());
    for (const auto& [name, v] : verts_) out.push_back(name);
    return out;
}

const std::set<std::string>& DualGraph::neighbors(const std::string& name) const {
    at(name);
    return adj_.at(name);
}

std::size_t DualGraph::degree(const std::string& name) const { return neighbors(name).size(); }

std::vector<std::pair<std::string, std::string>> DualGraph::edges() const {
    std::vector<std::pair<std::string, std::string>> out;
    for (const auto& [a, nbs] : adj_)
        for (const auto& b : nbs)
            if (a < b) out.emplace_back(a, b);
    return out;
}

bool DualGraph::is_connected() const {
    if (verts_.empty()) return true;
    std::set<std::string> all;
    for (const auto& [name, v] : verts_) all.insert(name);
    return is_connected_subset(all);
}

bool DualGraph::is_connected_subset(const std::set<std::string>& sub) const {
    if (sub.empty()) return true;
    for (const auto& name : sub) at(name);
    std::set<std::string> seen;
    std::vector<std::string> stack{*sub.begin()};
    seen.insert(*sub.begin());
    while (!stack.empty()) {
        std::string cur = stack.back();
        stack.pop_back();
        for (const auto& nb : adj_.at(cur)) {
            if (sub.count(nb) && !seen.count(nb)) {
                seen.insert(nb);
                stack.push_back(nb);
            }
        }
    }
    return seen.size() == sub.size();
}

DualGraph DualGraph::induced(const std::set<std::string>& sub) const {
    DualGraph out;
    for (const auto& name : sub) {
        const Vertex& v = at(name);
        out.add_vertex(name, v.weight, v.boundary);
    }
    for (const auto& name : sub)
        for (const auto& nb : adj_.at(name))
            if (sub.count(nb) && name < nb) out.add_edge(name, nb);
    return out;
}

BlowupStep BlowupStep::interior_at(std::string new_name, bool into_boundary) {
    BlowupStep s;
    s.kind = Kind::interior;
    s.new_name = std::move(new_name);
    s.into_boundary = into_boundary;
    return s;
}

BlowupStep BlowupStep::at_curve(std::string c, std::string new_name, bool into_boundary) {
    BlowupStep s;
    s.kind = Kind::on_curve;
    s.c1 = std::move(c);
    s.new_name = std::move(new_name);
    s.into_boundary = into_boundary;
    return s;
}

BlowupStep BlowupStep::at_edge(std::string c1, std::string c2, std::string new_name,
                               bool into_boundary) {
    BlowupStep s;
    s.kind = Kind::on_edge;
    s.c1 = std::move(c1);
    s.c2 = std::move(c2);
    s.new_name = std::move(new_name);
    s.into_boundary = into_boundary;
    return s;
}

Rat intersection_number(const DualGraph& g, const Divisor& d1, const Divisor& d2) {
    Rat total = 0;
    for (const auto& [name, c1] : d1.entries()) {
        if (!g.has_vertex(name)) throw std::invalid_argument("unknown curve: " + name);
        Rat row = Rat(g.weight(name)) * d2.coeff(name);
        for (const auto& nb : g.neighbors(name)) row += d2.coeff(nb);
        total += c1 * row;
    }
    for (const auto& [name, c2] : d2.entries())
        if (!g.has_vertex(name)) throw std::invalid_argument("unknown curve: " + name);
    return total;
}

bool is_negative_definite(const DualGraph& g) {
    std::vector<std::string> order = g.names();
    const std::size_t n = order.size();
    if (n == 0) return true;
    // Negate the intersection matrix; positive definiteness of the result is
    // checked through its leading principal minors (Sylvester), produced
    // exactly by fraction-free elimination.
    std::vector<std::vector<Int>> m(n, std::vector<Int>(n, 0));
    for (std::size_t i = 0; i < n; ++i) {
        m[i][i] = -g.weight(order[i]);
        for (const auto& nb : g.neighbors(order[i])) {
            auto j = std::lower_bound(order.begin(), order.end(), nb) - order.begin();
            m[i][static_cast<std::size_t>(j)] = -1;
        }
    }
    Int prev = 1;
    for (std::size_t k = 0; k < n; ++k) {
        if (m[k][k] <= 0) return false;   // k-th leading minor
        for (std::size_t i = k + 1; i < n; ++i)
            for (std::size_t j = k + 1; j < n; ++j)
                m[i][j] = (m[k][k] * m[i][j] - m[i][k] * m[k][j]) / prev;
        prev = m[k][k];
    }
    return true;
}

namespace {

// Walks a degree-<=2 arm away from `from`, starting at `start`, and returns
// the |weight| entries in walk order.
std::vector<Int> walk_arm(const DualGraph& g, const std::string& from, const std::string& start) {
    std::vector<Int> entries;
    std::string prev = from, cur = start;
    while (true) {
        entries.push_back(-g.weight(cur));
        std::string next;
        for (const auto& nb : g.neighbors(cur))
            if (nb != prev) next = nb;
        if (next.empty()) break;
        prev = cur;
        cur = next;
    }
    return entries;
}

} // namespace

ExceptionalClass classify_exceptional(const DualGraph& g) {
    ExceptionalClass out;
    if (g.size() == 0 || !g.is_connected()) return out;
    for (const auto& name : g.names())
        if (g.weight(name) > -2) return out;

    std::size_t edge_count = g.edges().size();
    if (edge_count != g.size() - 1) return out;   // a cycle hides somewhere

    std::vector<std::string> centers;
    for (const auto& name : g.names()) {
        std::size_t d = g.degree(name);
        if (d > 3) return out;
        if (d == 3) centers.push_back(name);
    }

    if (centers.empty()) {
        if (!is_negative_definite(g)) return out;
        out.shape = GraphShape::rod;
        return out;
    }
    if (centers.size() != 1) return out;

    if (!is_negative_definite(g)) return out;
    const std::string& center = centers.front();
    std::vector<Int> dets;
    for (const auto& nb : g.neighbors(center))
        dets.push_back(chain_determinant(walk_arm(g, center, nb)));
    std::sort(dets.begin(), dets.end());
    out.shape = GraphShape::fork;
    out.arm_determinants = std::move(dets);
    return out;
}

Divisor fundamental_cycle(const DualGraph& g) {
    if (g.size() == 0 || !g.is_connected())
        throw std::invalid_argument("fundamental_cycle: graph must be nonempty and connected");
    if (!is_negative_definite(g))
        throw std::domain_error("fundamental_cycle: graph is not negative definite");

    std::vector<std::string> order = g.names();
    Divisor z;
    for (const auto& name : order) z.set(name, 1);
    while (true) {
        bool bumped = false;
        for (const auto& name : order) {
            if (intersection_number(g, z, Divisor::unit(name)) > 0) {
                z.add(name, 1);
                bumped = true;
                break;        // restart at the lowest name
            }
        }
        if (!bumped) return z;
    }
}

DualGraph blow_up(const DualGraph& g, const BlowupStep& s) {
    if (s.new_name.empty() || g.has_vertex(s.new_name))
        throw std::invalid_argument("blow_up: bad new curve name '" + s.new_name + "'");
    DualGraph out = g;
    switch (s.kind) {
    case BlowupStep::Kind::interior:
        out.add_vertex(s.new_name, -1, s.into_boundary);
        break;
    case BlowupStep::Kind::on_curve:
        out.set_weight(s.c1, g.weight(s.c1) - 1);
        out.add_vertex(s.new_name, -1, s.into_boundary);
        out.add_edge(s.c1, s.new_name);
        break;
    case BlowupStep::Kind::on_edge:
        if (!g.has_edge(s.c1, s.c2))
            throw std::invalid_argument("blow_up: no edge " + s.c1 + " -- " + s.c2);
        out.set_weight(s.c1, g.weight(s.c1) - 1);
        out.set_weight(s.c2, g.weight(s.c2) - 1);
        out.remove_edge(s.c1, s.c2);
        out.add_vertex(s.new_name, -1, s.into_boundary);
        out.add_edge(s.c1, s.new_name);
        out.add_edge(s.c2, s.new_name);
        break;
    }
    return out;
}

DualGraph blow_down(const DualGraph& g, const std::string& name) {
    if (g.weight(name) != -1)
        throw std::domain_error("blow_down: " + name + " is not a -1 curve");
    if (g.degree(name) > 2)
        throw std::domain_error("blow_down: " + name + " meets more than two curves");
    DualGraph out = g;
    std::vector<std::string> nbs(g.neighbors(name).begin(), g.neighbors(name).end());
    if (nbs.size() == 2) {
        if (g.has_edge(nbs[0], nbs[1]))
            throw std::domain_error("blow_down: contracting " + name +
                                    " would create a tangency between " + nbs[0] + " and " + nbs[1]);
        out.add_edge(nbs[0], nbs[1]);
    }
    for (const auto& nb : nbs) out.set_weight(nb, g.weight(nb) + 1);
    out.remove_vertex(name);
    return out;
}

Int lc_correction(const BlowupStep& s, bool center_on_boundary) {
    switch (s.kind) {
    case BlowupStep::Kind::interior:
        if (center_on_boundary)
            throw std::invalid_argument("lc_correction: interior blow-up cannot sit on the boundary");
        if (!s.into_boundary)
            throw std::domain_error(
                "lc_correction: interior blow-up with the new curve off the boundary is unsupported");
        return 2;
    case BlowupStep::Kind::on_edge:
        if (!center_on_boundary)
            throw std::invalid_argument("lc_correction: subdivisional blow-up requires a boundary node");
        return s.into_boundary ? Int(0) : Int(-1);
    case BlowupStep::Kind::on_curve:
        if (!center_on_boundary)
            throw std::invalid_argument("lc_correction: sprouting blow-up requires a boundary center");
        return s.into_boundary ? Int(1) : Int(0);
    }
    throw std::logic_error("lc_correction: unreachable");
}

TrackedCorrection track_log_canonical(const DualGraph& g, const std::vector<BlowupStep>& steps) {
    DualGraph cur = g;
    Divisor correction;
    for (const auto& s : steps) {
        int boundary_count = 0;
        Rat mult = 0;
        switch (s.kind) {
        case BlowupStep::Kind::interior:
            break;
        case BlowupStep::Kind::on_curve:
            boundary_count = cur.boundary(s.c1) ? 1 : 0;
            mult = correction.coeff(s.c1);
            break;
        case BlowupStep::Kind::on_edge:
            if (!cur.has_edge(s.c1, s.c2))
                throw std::invalid_argument("track_log_canonical: no edge " + s.c1 + " -- " + s.c2);
            boundary_count = (cur.boundary(s.c1) ? 1 : 0) + (cur.boundary(s.c2) ? 1 : 0);
            mult = correction.coeff(s.c1) + correction.coeff(s.c2);
            break;
        }
        Int c;
        if (boundary_count == 0) {
            if (!s.into_boundary)
                throw std::domain_error(
                    "track_log_canonical: blow-up away from the boundary must send the new curve "
                    "into the boundary");
            c = 2;
        } else if (boundary_count == 1) {
            c = s.into_boundary ? 1 : 0;
        } else {
            c = s.into_boundary ? 0 : -1;
        }
        correction = total_transform(cur, s, correction, mult);
        correction.add(s.new_name, Rat(c));
        cur = blow_up(cur, s);
    }
    return TrackedCorrection{std::move(cur), std::move(correction)};
}

Divisor total_transform(const DualGraph& g_before, const BlowupStep& s, const Divisor& d,
                        const Rat& mult_at_center) {
    switch (s.kind) {
    case BlowupStep::Kind::interior:
        break;
    case BlowupStep::Kind::on_curve:
        if (!g_before.has_vertex(s.c1))
            throw std::invalid_argument("total_transform: unknown curve: " + s.c1);
        break;
    case BlowupStep::Kind::on_edge:
        if (!g_before.has_edge(s.c1, s.c2))
            throw std::invalid_argument("total_transform: no edge " + s.c1 + " -- " + s.c2);
        break;
    }
    if (g_before.has_vertex(s.new_name))
        throw std::invalid_argument("total_transform: curve name already used: " + s.new_name);
    Divisor out = d;
    out.set(s.new_name, mult_at_center);
    return out;
}

bool verify_fiber(const DualGraph& g, const Divisor& d) {
    if (d.is_zero() || !d.is_integral()) return false;
    for (const auto& [name, c] : d.entries()) {
        if (!g.has_vertex(name)) return false;
        if (c <= 0) return false;
    }
    std::set<std::string> support;
    for (const auto& name : d.support()) support.insert(name);
    if (!g.is_connected_subset(support)) return false;

    for (const auto& name : support)
        if (intersection_number(g, d, Divisor::unit(name)) != 0) return false;
    if (intersection_number(g, d, d) != 0) return false;
    if (d.coefficient_gcd() != 1) return false;

    // The supported curves must contract to one 0-curve: the combinatorial
    // shadow of blowing down to a smooth fiber.
    DualGraph fiber = g.induced(support);
    while (fiber.size() > 1) {
        std::string pick;
        for (const auto& name : fiber.names()) {
            if (fiber.weight(name) == -1 && fiber.degree(name) <= 2) {
                pick = name;
                break;
            }
        }
        if (pick.empty()) return false;
        std::vector<std::string> nbs(fiber.neighbors(pick).begin(), fiber.neighbors(pick).end());
        if (nbs.size() == 2 && fiber.has_edge(nbs[0], nbs[1])) return false;
        fiber = blow_down(fiber, pick);
    }
    const std::string last = fiber.names().front();
    return fiber.weight(last) == 0 && d.coeff(last) == 1;
}

} // namespace qsing
