#include "qsing/serialize.hpp"

#include <algorithm>
#include <limits>

namespace qsing {

using nlohmann::json;

namespace {

bool fits_int64(const Int& v) {
    static const Int lo = std::numeric_limits<long long>::min();
    static const Int hi = std::numeric_limits<long long>::max();
    return v >= lo && v <= hi;
}

Int int_from_string(const std::string& s, const std::string& what) {
    if (s.empty()) throw std::invalid_argument(what + " must not be empty");
    std::size_t start = (s[0] == '-' || s[0] == '+') ? 1 : 0;
    if (start == s.size()) throw std::invalid_argument(what + " must be an integer");
    for (std::size_t i = start; i < s.size(); ++i)
        if (s[i] < '0' || s[i] > '9')
            throw std::invalid_argument(what + " must be an integer, got \"" + s + "\"");
    return Int(s);
}

} // namespace

json int_to_json(const Int& v) {
    if (fits_int64(v)) return json(to_int64(v));
    return json(to_string(v));
}

Int int_from_json(const json& j, const std::string& what) {
    if (j.is_number_integer()) return Int(j.get<long long>());
    if (j.is_number_unsigned()) return Int(j.get<unsigned long long>());
    if (j.is_string()) return int_from_string(j.get<std::string>(), what);
    throw std::invalid_argument(what + " must be an integer");
}

json rat_to_json(const Rat& r) {
    if (is_integer(r)) return int_to_json(numerator(r));
    return json(to_string(r));
}

Rat rat_from_json(const json& j, const std::string& what) {
    if (j.is_number_integer() || j.is_number_unsigned()) return Rat(int_from_json(j, what));
    if (j.is_string()) {
        const std::string s = j.get<std::string>();
        std::size_t slash = s.find('/');
        if (slash == std::string::npos) return Rat(int_from_string(s, what));
        Int num = int_from_string(s.substr(0, slash), what + " numerator");
        Int den = int_from_string(s.substr(slash + 1), what + " denominator");
        if (den == 0) throw std::invalid_argument(what + " has denominator zero");
        return Rat(num, den);
    }
    throw std::invalid_argument(what + " must be an integer or a \"p/q\" string");
}

json graph_to_json(const DualGraph& g) {
    json vertices = json::array();
    for (const std::string& name : g.names()) {
        json v;
        v["name"] = name;
        v["weight"] = int_to_json(g.weight(name));
        v["boundary"] = g.boundary(name);
        vertices.push_back(v);
    }
    json edges = json::array();
    for (const auto& [a, b] : g.edges()) edges.push_back(json::array({a, b}));
    json out;
    out["vertices"] = vertices;
    out["edges"] = edges;
    return out;
}

DualGraph graph_from_json(const json& j) {
    if (!j.is_object()) throw std::invalid_argument("graph must be a JSON object");
    if (!j.contains("vertices") || !j["vertices"].is_array())
        throw std::invalid_argument("graph needs a \"vertices\" array");
    if (!j.contains("edges") || !j["edges"].is_array())
        throw std::invalid_argument("graph needs an \"edges\" array");
    DualGraph g;
    std::size_t i = 0;
    for (const json& v : j["vertices"]) {
        const std::string at = "vertices[" + std::to_string(i) + "]";
        if (!v.is_object() || !v.contains("name") || !v["name"].is_string())
            throw std::invalid_argument(at + " needs a string \"name\"");
        std::string name = v["name"].get<std::string>();
        if (name.empty()) throw std::invalid_argument(at + " has an empty name");
        if (!v.contains("weight")) throw std::invalid_argument(at + " needs a \"weight\"");
        Int w = int_from_json(v["weight"], at + ".weight");
        bool boundary = false;
        if (v.contains("boundary")) {
            if (!v["boundary"].is_boolean())
                throw std::invalid_argument(at + ".boundary must be a boolean");
            boundary = v["boundary"].get<bool>();
        }
        if (g.has_vertex(name)) throw std::invalid_argument("duplicate vertex \"" + name + "\"");
        g.add_vertex(name, w, boundary);
        ++i;
    }
    i = 0;
    for (const json& e : j["edges"]) {
        const std::string at = "edges[" + std::to_string(i) + "]";
        if (!e.is_array() || e.size() != 2 || !e[0].is_string() || !e[1].is_string())
            throw std::invalid_argument(at + " must be a pair of vertex names");
        std::string a = e[0].get<std::string>(), b = e[1].get<std::string>();
        if (!g.has_vertex(a)) throw std::invalid_argument(at + " references unknown vertex \"" + a + "\"");
        if (!g.has_vertex(b)) throw std::invalid_argument(at + " references unknown vertex \"" + b + "\"");
        if (a == b) throw std::invalid_argument(at + " is a loop");
        if (g.has_edge(a, b)) throw std::invalid_argument(at + " repeats an edge");
        g.add_edge(a, b);
        ++i;
    }
    return g;
}

std::string graph_to_dot(const DualGraph& g) {
    std::string out = "graph G {\n";
    for (const std::string& name : g.names())
        out += "  \"" + name + "\" [label=\"" + name + " (" + to_string(g.weight(name)) + ")\"];\n";
    for (const auto& [a, b] : g.edges()) out += "  \"" + a + "\" -- \"" + b + "\";\n";
    out += "}\n";
    return out;
}

json divisor_to_json(const Divisor& d) {
    json out = json::object();
    for (const auto& [name, c] : d.entries()) out[name] = rat_to_json(c);
    return out;
}

Divisor divisor_from_json(const json& j) {
    if (!j.is_object()) throw std::invalid_argument("divisor must be a JSON object");
    Divisor d;
    for (auto it = j.begin(); it != j.end(); ++it)
        d.set(it.key(), rat_from_json(it.value(), "coefficient of " + it.key()));
    return d;
}

std::string completion_kind_name(CompletionKind k) {
    switch (k) {
        case CompletionKind::cyclic_minimal: return "cyclic_minimal";
        case CompletionKind::cyclic: return "cyclic";
        case CompletionKind::noncyclic: return "noncyclic";
    }
    throw std::logic_error("completion_kind_name: unknown kind");
}

json completion_to_json(const StandardCompletion& sc) {
    json out = graph_to_json(sc.graph);
    out["kind"] = completion_kind_name(sc.kind);
    out["sections"] = json::array({sc.s0, sc.s1});
    json fibers = json::array();
    for (const auto& f : sc.fibers) {
        json names = json::array();
        for (const std::string& n : f.chain_order) names.push_back(n);
        fibers.push_back(names);
    }
    out["fibers"] = fibers;
    json mult = json::object();
    for (const auto& [name, m] : sc.multiplicities) mult[name] = int_to_json(m);
    out["multiplicities"] = mult;
    return out;
}

json fork_to_json(const ForkSpec& f) {
    json arms = json::array();
    for (const ForkArm& arm : f.arms) {
        json chain = json::array();
        for (const Int& a : arm.chain) chain.push_back(int_to_json(a));
        json o;
        o["chain"] = chain;
        o["attach"] = arm.attach == AttachEnd::front ? "front" : "back";
        arms.push_back(o);
    }
    json out;
    out["central_weight"] = int_to_json(f.central_weight);
    out["arms"] = arms;
    return out;
}

ForkSpec fork_from_json(const json& j) {
    if (!j.is_object()) throw std::invalid_argument("fork must be a JSON object");
    if (!j.contains("central_weight"))
        throw std::invalid_argument("fork needs a \"central_weight\"");
    if (!j.contains("arms") || !j["arms"].is_array() || j["arms"].size() != 3)
        throw std::invalid_argument("fork needs an \"arms\" array with exactly three entries");
    ForkSpec f;
    f.central_weight = int_from_json(j["central_weight"], "central_weight");
    for (std::size_t i = 0; i < 3; ++i) {
        const json& a = j["arms"][i];
        const std::string at = "arms[" + std::to_string(i) + "]";
        if (!a.is_object() || !a.contains("chain") || !a["chain"].is_array())
            throw std::invalid_argument(at + " needs a \"chain\" array");
        for (const json& c : a["chain"])
            f.arms[i].chain.push_back(int_from_json(c, at + ".chain entry"));
        if (a.contains("attach")) {
            std::string s = a["attach"].is_string() ? a["attach"].get<std::string>() : "";
            if (s == "front") f.arms[i].attach = AttachEnd::front;
            else if (s == "back") f.arms[i].attach = AttachEnd::back;
            else throw std::invalid_argument(at + ".attach must be \"front\" or \"back\"");
        }
    }
    return f;
}

json pencil_to_json(const PencilResolution& pr) {
    json out = graph_to_json(pr.graph);
    out["n"] = int_to_json(pr.n);
    out["a"] = int_to_json(pr.a);
    out["section"] = pr.section;
    out["special_member"] = divisor_to_json(pr.special_member);
    PencilMemberClass pm = pencil_member_class(pr.n, pr.a);
    json member;
    member["class"] = json::array({int_to_json(pm.cls.s0), int_to_json(pm.cls.fiber)});
    member["self_intersection"] = int_to_json(pm.self_intersection);
    member["dot_s0"] = int_to_json(pm.dot_s0);
    member["dot_s1"] = int_to_json(pm.dot_s1);
    member["arithmetic_genus"] = int_to_json(pm.arithmetic_genus);
    out["member"] = member;
    CuspData cd = cusp_data(pr.n, pr.a);
    json cusp;
    cusp["type"] = json::array({int_to_json(cd.type.num), int_to_json(cd.type.den)});
    json mults = json::array();
    for (const Int& m : cd.mults) mults.push_back(int_to_json(m));
    cusp["multiplicities"] = mults;
    cusp["delta"] = int_to_json(cd.delta);
    cusp["smooth"] = cd.smooth;
    out["cusp"] = cusp;
    json steps = json::array();
    for (const PencilStep& s : pr.steps) {
        json st;
        switch (s.step.kind) {
            case BlowupStep::Kind::interior:
                st["kind"] = "interior";
                st["curves"] = json::array();
                break;
            case BlowupStep::Kind::on_curve:
                st["kind"] = "on_curve";
                st["curves"] = json::array({s.step.c1});
                break;
            case BlowupStep::Kind::on_edge:
                st["kind"] = "on_edge";
                st["curves"] = json::array({s.step.c1, s.step.c2});
                break;
        }
        st["new_name"] = s.step.new_name;
        st["mult"] = int_to_json(s.mult_on_member);
        steps.push_back(st);
    }
    out["steps"] = steps;
    return out;
}

std::string pencil_to_dot(const PencilResolution& pr) {
    std::string out = "graph G {\n  rankdir=LR;\n";
    const DualGraph& g = pr.graph;
    for (const std::string& name : g.names())
        out += "  \"" + name + "\" [label=\"" + name + " (" + to_string(g.weight(name)) + ")\"];\n";
    long long aa = to_int64(pr.a);
    out += "  { rank=same; \"A" + std::to_string(aa) + "\";";
    for (long long k = 1; k + 1 <= aa; ++k) out += " \"B" + std::to_string(k) + "\";";
    out += " \"F\"; }\n";
    for (const auto& [a, b] : g.edges()) out += "  \"" + a + "\" -- \"" + b + "\";\n";
    out += "}\n";
    return out;
}

json parse_json_text(const std::string& text) {
    try {
        return json::parse(text);
    } catch (const json::parse_error& e) {
        std::size_t byte = e.byte > 0 ? e.byte - 1 : 0;
        if (byte > text.size()) byte = text.size();
        std::size_t line = 1, col = 1;
        for (std::size_t i = 0; i < byte; ++i) {
            if (text[i] == '\n') {
                ++line;
                col = 1;
            } else {
                ++col;
            }
        }
        throw std::invalid_argument("malformed JSON at line " + std::to_string(line) +
                                    ", column " + std::to_string(col));
    }
}

} // namespace qsing
