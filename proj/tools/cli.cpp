#include "cli.hpp"

#include "CLI11.hpp"

#include "qsing/dual_graph.hpp"
#include "qsing/equivariant.hpp"
#include "qsing/hj.hpp"
#include "qsing/pencil.hpp"
#include "qsing/poly.hpp"
#include "qsing/quotient.hpp"
#include "qsing/serialize.hpp"

#include <fstream>
#include <iostream>
#include <sstream>

namespace qsing::cli {

namespace {

using nlohmann::json;

Int parse_int_arg(const std::string& s, const std::string& what) {
    std::size_t start = (!s.empty() && (s[0] == '-' || s[0] == '+')) ? 1 : 0;
    if (s.size() == start) throw std::invalid_argument(what + " must be an integer");
    for (std::size_t i = start; i < s.size(); ++i)
        if (s[i] < '0' || s[i] > '9')
            throw std::invalid_argument(what + " must be an integer, got \"" + s + "\"");
    return Int(s);
}

std::string read_input(const std::string& path) {
    std::ostringstream ss;
    if (path == "-") {
        ss << std::cin.rdbuf();
        return ss.str();
    }
    std::ifstream in(path);
    if (!in) throw std::invalid_argument("cannot open \"" + path + "\"");
    ss << in.rdbuf();
    return ss.str();
}

std::string graph_text(const DualGraph& g) {
    std::string out = "vertices:\n";
    for (const std::string& name : g.names()) {
        out += "  " + name + "  weight " + to_string(g.weight(name));
        if (g.boundary(name)) out += "  boundary";
        out += "\n";
    }
    out += "edges:\n";
    for (const auto& [a, b] : g.edges()) out += "  " + a + " -- " + b + "\n";
    return out;
}

std::string divisor_text(const Divisor& d) {
    std::string out;
    for (const auto& [name, c] : d.entries()) out += name + ": " + to_string(c) + "\n";
    return out;
}

json chain_json(const HJChain& c) {
    json a = json::array();
    for (const Int& v : c) a.push_back(int_to_json(v));
    return a;
}

std::string chain_text(const HJChain& c) {
    std::string out;
    for (std::size_t i = 0; i < c.size(); ++i) {
        if (i) out += " ";
        out += to_string(c[i]);
    }
    return out;
}

[[noreturn]] void no_dot() {
    throw std::invalid_argument("dot output is not available for this command");
}

const char* yesno(bool b) { return b ? "yes" : "no"; }

int do_hj(const std::string& ns, const std::string& ds, const std::string& format,
          std::ostream& out) {
    Int n = parse_int_arg(ns, "n"), d = parse_int_arg(ds, "d");
    HJChain c = hj_expand(n, d);
    if (format == "json") {
        json j;
        j["n"] = int_to_json(n);
        j["d"] = int_to_json(d);
        j["chain"] = chain_json(c);
        out << j.dump(2) << "\n";
    } else if (format == "dot") {
        no_dot();
    } else {
        out << chain_text(c) << "\n";
    }
    return 0;
}

int do_resolve(const std::string& ns, const std::string& ds, const std::string& format,
               std::ostream& out) {
    CyclicQuotientType t(parse_int_arg(ns, "n"), parse_int_arg(ds, "d"));
    DualGraph g = resolution_chain(t);
    if (format == "json") out << graph_to_json(g).dump(2) << "\n";
    else if (format == "dot") out << graph_to_dot(g);
    else out << graph_text(g);
    return 0;
}

int do_fork(const std::string& file, const std::string& format, std::ostream& out) {
    ForkSpec f = fork_from_json(parse_json_text(read_input(file)));
    ForkReport rep = validate_fork(f);
    if (format == "dot") {
        out << graph_to_dot(realize_fork(f));
    } else if (format == "json") {
        json j;
        j["negative_definite"] = rep.negative_definite;
        j["determinants"] = json::array({int_to_json(rep.determinants[0]),
                                         int_to_json(rep.determinants[1]),
                                         int_to_json(rep.determinants[2])});
        j["platonic"] = rep.platonic;
        out << j.dump(2) << "\n";
    } else {
        out << "negative definite: " << yesno(rep.negative_definite) << "\n";
        out << "arm determinants: " << to_string(rep.determinants[0]) << " "
            << to_string(rep.determinants[1]) << " " << to_string(rep.determinants[2]) << "\n";
        out << "platonic: " << yesno(rep.platonic) << "\n";
    }
    return rep.negative_definite && rep.platonic ? 0 : 1;
}

int do_fundcycle(const std::string& file, const std::string& format, std::ostream& out,
                 std::ostream& err) {
    DualGraph g = graph_from_json(parse_json_text(read_input(file)));
    Divisor z;
    try {
        z = fundamental_cycle(g);
    } catch (const std::domain_error& e) {
        err << e.what() << "\n";
        return 1;
    } catch (const std::invalid_argument& e) {
        err << e.what() << "\n";
        return 1;
    }
    if (format == "json") out << divisor_to_json(z).dump(2) << "\n";
    else if (format == "dot") no_dot();
    else out << divisor_text(z);
    return 0;
}

int do_complete_fiber(const std::vector<std::string>& entries, const std::string& attach,
                      const std::string& format, std::ostream& out) {
    HJChain t;
    for (const std::string& e : entries) t.push_back(parse_int_arg(e, "arm entry"));
    FiberData fd = complete_fiber(t, attach == "back" ? AttachEnd::back : AttachEnd::front);
    if (format == "json") {
        json j = graph_to_json(fd.fiber_graph);
        j["multiplicities"] = divisor_to_json(fd.multiplicities);
        j["completing_chain"] = chain_json(fd.r_chain);
        j["f_mult"] = int_to_json(fd.f_mult);
        out << j.dump(2) << "\n";
    } else if (format == "dot") {
        out << graph_to_dot(fd.fiber_graph);
    } else {
        auto line = [&](const std::string& name) {
            out << "  " << name << "  weight " << to_string(fd.fiber_graph.weight(name))
                << "  multiplicity " << to_string(fd.multiplicities.coeff(name)) << "\n";
        };
        for (std::size_t i = 1; i <= fd.t_chain.size(); ++i) line("T" + std::to_string(i));
        line("F");
        for (std::size_t i = 1; i <= fd.r_chain.size(); ++i) line("R" + std::to_string(i));
    }
    return 0;
}

int do_completion(const StandardCompletion& sc, const std::string& format, std::ostream& out) {
    LogCanonicalReport lr = log_canonical_class(sc);
    FreenessDefect fd = freeness_defect(sc);
    if (format == "json") {
        json j = completion_to_json(sc);
        json lc;
        lc["fiber_coefficient"] = rat_to_json(lr.fiber_coefficient);
        lc["components"] = divisor_to_json(lr.components);
        lc["verified"] = lr.verified;
        j["log_canonical"] = lc;
        json fr;
        fr["scalar"] = rat_to_json(fd.scalar);
        fr["vertical_part"] = divisor_to_json(fd.l_part);
        fr["effective"] = fd.effective;
        j["freeness"] = fr;
        out << j.dump(2) << "\n";
    } else if (format == "dot") {
        out << graph_to_dot(sc.graph);
    } else {
        out << "kind: " << completion_kind_name(sc.kind) << "\n";
        out << "sections: " << sc.s0 << " (" << to_string(sc.graph.weight(sc.s0)) << "), "
            << sc.s1 << " (" << to_string(sc.graph.weight(sc.s1)) << ")\n";
        for (const auto& f : sc.fibers) {
            out << "fiber " << f.tag << " (multiplicity " << to_string(f.f_mult) << "):";
            for (const std::string& name : f.chain_order) {
                out << " " << name << "(" << to_string(sc.graph.weight(name)) << ")x"
                    << to_string(sc.multiplicities.at(name));
            }
            out << "\n";
        }
        out << "log canonical verified: " << yesno(lr.verified) << "\n";
        out << "freeness scalar: " << to_string(fd.scalar)
            << (fd.effective ? " (vertical part effective)" : "") << "\n";
    }
    return lr.verified ? 0 : 1;
}

int do_pencil(const std::string& ns, const std::string& as, bool contract,
              const std::string& format, std::ostream& out) {
    Int n = parse_int_arg(ns, "n"), a = parse_int_arg(as, "a");
    PencilResolution pr = resolve_pencil(n, a);
    if (format == "dot") {
        out << pencil_to_dot(pr);
        return 0;
    }
    if (format == "json") {
        json j = pencil_to_json(pr);
        if (contract) {
            HirzebruchContraction hc = contract_to_hirzebruch(pr);
            json c;
            c["schedule"] = json(hc.schedule);
            c["final"] = graph_to_json(hc.final_graph);
            j["contraction"] = c;
        }
        out << j.dump(2) << "\n";
        return 0;
    }
    PencilMemberClass pm = pencil_member_class(n, a);
    CuspData cd = cusp_data(n, a);
    out << graph_text(pr.graph);
    out << "special member:\n" << divisor_text(pr.special_member);
    out << "member: C.C = " << to_string(pm.self_intersection) << ", C.S0 = "
        << to_string(pm.dot_s0) << ", C.S1 = " << to_string(pm.dot_s1) << ", genus "
        << to_string(pm.arithmetic_genus) << "\n";
    out << "cusp: type (" << to_string(cd.type.num) << ", " << to_string(cd.type.den)
        << "), delta " << to_string(cd.delta) << (cd.smooth ? ", smooth" : "") << "\n";
    if (contract) {
        HirzebruchContraction hc = contract_to_hirzebruch(pr);
        out << "contraction:";
        for (const std::string& s : hc.schedule) out << " " << s;
        out << "\n";
        out << "final model:\n" << graph_text(hc.final_graph);
    }
    return 0;
}

int do_keller(const std::string& fs, const std::string& gs, const std::string& action,
              const std::string& format, std::ostream& out) {
    std::size_t comma = action.find(',');
    if (comma == std::string::npos)
        throw std::invalid_argument("--action expects n,d");
    GroupAction a(parse_int_arg(action.substr(0, comma), "action order"),
                  parse_int_arg(action.substr(comma + 1), "action weight"));
    PolyEndomorphism m;
    try {
        m.f = parse_poly(fs);
    } catch (const parse_error& e) {
        throw std::invalid_argument(std::string("f: ") + e.what());
    }
    try {
        m.g = parse_poly(gs);
    } catch (const parse_error& e) {
        throw std::invalid_argument(std::string("g: ") + e.what());
    }
    CertifyVerdict v = certify(m, a);
    bool have_bmap = false;
    MoebiusMap bmap{Rat(0), Rat(0), Rat(0), Rat(0)};
    try {
        bmap = induced_boundary_map(m);
        have_bmap = true;
    } catch (const std::domain_error&) {
    }
    if (format == "json") {
        json j;
        j["keller"] = v.keller;
        j["equivariant"] = v.equivariant;
        j["origin_fiber"] = v.origin_fiber;
        j["certified"] = v.certified;
        j["exact"] = v.exact;
        j["reason"] = v.reason;
        j["detail"] = v.detail;
        if (have_bmap) {
            json b;
            b["a"] = rat_to_json(bmap.a);
            b["b"] = rat_to_json(bmap.b);
            b["c"] = rat_to_json(bmap.c);
            b["d"] = rat_to_json(bmap.d);
            j["boundary_map"] = b;
        }
        out << j.dump(2) << "\n";
    } else if (format == "dot") {
        no_dot();
    } else {
        out << "keller: " << yesno(v.keller) << "\n";
        out << "equivariant: " << yesno(v.equivariant) << "\n";
        out << "origin fiber trivial: " << yesno(v.origin_fiber)
            << (v.exact ? "" : " (undecided, reported conservatively)") << "\n";
        out << "certified: " << yesno(v.certified);
        if (v.certified) out << " (" << v.detail << ")";
        else out << " (" << v.reason << ")";
        out << "\n";
        if (have_bmap)
            out << "boundary map: t -> (" << to_string(bmap.c) << " + " << to_string(bmap.d)
                << "t) / (" << to_string(bmap.a) << " + " << to_string(bmap.b) << "t)\n";
    }
    return v.certified ? 0 : 1;
}

} // namespace

int run(std::vector<std::string> args, std::ostream& out, std::ostream& err) {
    CLI::App app{"exact calculus of plane quotient boundary graphs, pencils and equivariant maps"};
    app.name("qsing");
    app.require_subcommand(0, 1);
    app.fallthrough();
    std::string format = "text";
    app.add_option("--format", format, "output format: text, json or dot")
        ->check(CLI::IsMember({"text", "json", "dot"}));

    auto* hj_cmd = app.add_subcommand("hj", "continued fraction expansion of n/d");
    std::string hj_n, hj_d;
    hj_cmd->add_option("n", hj_n, "numerator")->required();
    hj_cmd->add_option("d", hj_d, "denominator, coprime to n")->required();

    auto* res_cmd = app.add_subcommand("resolve", "minimal resolution chain of the cyclic point (n, d)");
    std::string res_n, res_d;
    res_cmd->add_option("n", res_n, "order")->required();
    res_cmd->add_option("d", res_d, "weight")->required();

    auto* fork_cmd = app.add_subcommand("fork", "validate a three-armed resolution graph");
    std::string fork_file;
    fork_cmd->add_option("file", fork_file, "fork JSON ('-' for stdin)")->required();

    auto* fund_cmd = app.add_subcommand("fundcycle", "fundamental cycle of a weighted graph");
    std::string fund_file;
    fund_cmd->add_option("file", fund_file, "graph JSON ('-' for stdin)")->required();

    auto* fiber_cmd = app.add_subcommand("complete-fiber", "complete a resolution arm to a full degenerate fiber");
    std::vector<std::string> fiber_entries;
    std::string attach = "front";
    fiber_cmd->add_option("entries", fiber_entries, "arm entries, each at least 2");
    fiber_cmd->add_option("--attach", attach, "arm end meeting the -1 curve")
        ->check(CLI::IsMember({"front", "back"}));

    auto* comp_cmd = app.add_subcommand("completion", "fibered completion of the quotient surface");
    std::string comp_n, comp_d, comp_fork;
    comp_cmd->add_option("n", comp_n, "order of the cyclic point");
    comp_cmd->add_option("d", comp_d, "weight of the cyclic point");
    comp_cmd->add_option("--fork", comp_fork, "fork JSON file instead of a cyclic type");

    auto* pen_cmd = app.add_subcommand("pencil", "resolve the rational pencil of type (n, a)");
    std::string pen_n, pen_a;
    bool contract = false;
    pen_cmd->add_option("n", pen_n, "negative section weight of the ruled surface")->required();
    pen_cmd->add_option("a", pen_a, "coefficient of the disjoint section in the member class")->required();
    pen_cmd->add_flag("--contract", contract, "also contract back to the minimal model");

    auto* kel_cmd = app.add_subcommand("keller", "certify an equivariant polynomial self-map");
    std::string kel_f, kel_g, kel_action;
    kel_cmd->add_option("f", kel_f, "image of x")->required();
    kel_cmd->add_option("g", kel_g, "image of y")->required();
    kel_cmd->add_option("--action", kel_action, "cyclic action as n,d")->required();

    try {
        std::vector<std::string> rev(args.rbegin(), args.rend());
        app.parse(rev);
    } catch (const CLI::ParseError& e) {
        int code = app.exit(e, out, err);
        return code == 0 ? 0 : 2;
    }

    try {
        if (*hj_cmd) return do_hj(hj_n, hj_d, format, out);
        if (*res_cmd) return do_resolve(res_n, res_d, format, out);
        if (*fork_cmd) return do_fork(fork_file, format, out);
        if (*fund_cmd) return do_fundcycle(fund_file, format, out, err);
        if (*fiber_cmd) return do_complete_fiber(fiber_entries, attach, format, out);
        if (*comp_cmd) {
            StandardCompletion sc;
            if (!comp_fork.empty()) {
                if (!comp_n.empty() || !comp_d.empty())
                    throw std::invalid_argument("give either a cyclic type n d or --fork, not both");
                sc = build_standard_completion(fork_from_json(parse_json_text(read_input(comp_fork))));
            } else {
                if (comp_n.empty() || comp_d.empty())
                    throw std::invalid_argument("completion needs n and d, or --fork FILE");
                sc = build_standard_completion(
                    CyclicQuotientType(parse_int_arg(comp_n, "n"), parse_int_arg(comp_d, "d")));
            }
            return do_completion(sc, format, out);
        }
        if (*pen_cmd) return do_pencil(pen_n, pen_a, contract, format, out);
        if (*kel_cmd) return do_keller(kel_f, kel_g, kel_action, format, out);
        err << app.help();
        return 2;
    } catch (const std::exception& e) {
        err << e.what() << "\n";
        return 2;
    }
}

} // namespace qsing::cli
