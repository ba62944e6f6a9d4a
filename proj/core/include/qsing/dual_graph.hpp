#pragma once

#include "qsing/numeric.hpp"

#include <map>
#include <set>
#include <string>
#include <vector>

namespace qsing {

// Exact rational divisor supported on named curves. Zero coefficients are
// never stored.
class Divisor {
public:
    Divisor() = default;

    static Divisor unit(const std::string& name);

    void set(const std::string& name, const Rat& value);
    void add(const std::string& name, const Rat& value);
    Rat coeff(const std::string& name) const;

    bool is_zero() const { return coeffs_.empty(); }
    bool is_effective() const;          // all coefficients > 0 (support only)
    bool is_integral() const;           // all coefficients have denominator 1
    Int coefficient_gcd() const;        // gcd over an integral divisor's support

    std::vector<std::string> support() const;
    const std::map<std::string, Rat>& entries() const { return coeffs_; }

    Divisor& operator+=(const Divisor& o);
    Divisor& operator-=(const Divisor& o);
    Divisor& operator*=(const Rat& s);
    friend Divisor operator+(Divisor a, const Divisor& b) { return a += b; }
    friend Divisor operator-(Divisor a, const Divisor& b) { return a -= b; }
    friend Divisor operator*(const Rat& s, Divisor d) { return d *= s; }
    friend bool operator==(const Divisor&, const Divisor&) = default;

private:
    std::map<std::string, Rat> coeffs_;
};

// Weighted dual graph: named rational curves with exact self-intersection
// weights, simple edges for transversal intersections, and a boundary mark
// used by the log-canonical bookkeeping.
class DualGraph {
public:
    struct Vertex {
        Int weight;
        bool boundary = false;
        friend bool operator==(const Vertex&, const Vertex&) = default;
    };

    void add_vertex(const std::string& name, Int weight, bool boundary = false);
    void remove_vertex(const std::string& name);
    void add_edge(const std::string& a, const std::string& b);
    void remove_edge(const std::string& a, const std::string& b);

    bool has_vertex(const std::string& name) const;
    bool has_edge(const std::string& a, const std::string& b) const;

    const Int& weight(const std::string& name) const;
    void set_weight(const std::string& name, Int w);
    bool boundary(const std::string& name) const;
    void set_boundary(const std::string& name, bool b);

    std::size_t size() const { return verts_.size(); }
    std::vector<std::string> names() const;                       // sorted
    const std::set<std::string>& neighbors(const std::string& name) const;
    std::size_t degree(const std::string& name) const;
    std::vector<std::pair<std::string, std::string>> edges() const; // sorted pairs

    bool is_connected() const;
    bool is_connected_subset(const std::set<std::string>& sub) const;
    DualGraph induced(const std::set<std::string>& sub) const;

    friend bool operator==(const DualGraph& a, const DualGraph& b) {
        return a.verts_ == b.verts_ && a.adj_ == b.adj_;
    }

private:
    const Vertex& at(const std::string& name) const;
    Vertex& at(const std::string& name);

    std::map<std::string, Vertex> verts_;
    std::map<std::string, std::set<std::string>> adj_;
};

// One monoidal transformation, described against the graph it is applied to.
struct BlowupStep {
    enum class Kind { interior, on_curve, on_edge };

    Kind kind = Kind::interior;
    std::string c1;          // on_curve: the curve; on_edge: first curve
    std::string c2;          // on_edge: second curve
    std::string new_name;
    bool into_boundary = false;

    static BlowupStep interior_at(std::string new_name, bool into_boundary = false);
    static BlowupStep at_curve(std::string c, std::string new_name, bool into_boundary = false);
    static BlowupStep at_edge(std::string c1, std::string c2, std::string new_name,
                              bool into_boundary = false);
};

enum class GraphShape { rod, fork, neither };

struct ExceptionalClass {
    GraphShape shape = GraphShape::neither;
    std::vector<Int> arm_determinants;   // three values, ascending, for forks
    friend bool operator==(const ExceptionalClass&, const ExceptionalClass&) = default;
};

// Exact intersection number d1 . d2 via the pairing C.C = weight,
// C.C' = 1 or 0. Throws on curves missing from the graph.
Rat intersection_number(const DualGraph& g, const Divisor& d1, const Divisor& d2);

// Exact negative-definiteness verdict: every leading principal minor of the
// negated intersection matrix must be positive (fraction-free elimination,
// vertices in name order). The empty graph counts as negative definite.
bool is_negative_definite(const DualGraph& g);

// Classifies a connected graph as an admissible rod (linear chain, all
// weights <= -2, negative definite), an admissible fork (one central vertex
// with three such arms) with its arm determinants, or neither.
ExceptionalClass classify_exceptional(const DualGraph& g);

// Artin's fundamental cycle: start from the reduced sum of all curves and
// add any curve with positive pairing (lowest name first) until Z.E <= 0
// everywhere. Requires a connected, negative-definite graph.
Divisor fundamental_cycle(const DualGraph& g);

// Blow-up of a point: interior (new isolated -1 curve), on a curve (curve
// drops by 1, new -1 curve attached), or on an edge (both curves drop by 1,
// the edge is replaced by the new -1 curve joining them).
DualGraph blow_up(const DualGraph& g, const BlowupStep& s);

// Inverse operation: contract a -1 vertex of degree <= 2. Its neighbors
// gain +1 and, for degree 2, become adjacent (rejected if they already are:
// the resulting tangency is not representable here).
DualGraph blow_down(const DualGraph& g, const std::string& name);

// Per-blow-up correction coefficient for the log canonical divisor
// D + K: the new curve enters with this multiple. Supported cases:
//   interior center, curve joins boundary        -> +2
//   subdivisional (on_edge), curve joins boundary -> 0
//   subdivisional, curve stays off boundary       -> -1
//   sprouting (on_curve), curve stays off         -> 0
//   sprouting, curve joins boundary               -> +1
// Other combinations are rejected.
Int lc_correction(const BlowupStep& s, bool center_on_boundary);

struct TrackedCorrection {
    DualGraph final_graph;
    Divisor correction;      // total correction divisor on the final graph
};

// Folds lc_correction over a blow-up sequence, pulling the accumulated
// correction through each step as a total transform. Steps are classified
// by the number of boundary curves through the center on the current graph.
TrackedCorrection track_log_canonical(const DualGraph& g, const std::vector<BlowupStep>& steps);

// Pullback bookkeeping for one blow-up: coefficients are kept and the new
// curve receives the supplied multiplicity of the divisor at the center
// (the pairing cannot see embedded tangency, so the caller provides it).
Divisor total_transform(const DualGraph& g_before, const BlowupStep& s, const Divisor& d,
                        const Rat& mult_at_center);

// True iff d is a degenerate fiber of a ruling: effective and integral with
// connected support, d.C = 0 for every supported curve, coefficient gcd 1,
// and the support contracts to a single 0-curve by iterated -1 blow-downs.
bool verify_fiber(const DualGraph& g, const Divisor& d);

} // namespace qsing
