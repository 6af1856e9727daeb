#include "qgentle/cli.hpp"

#include <fstream>
#include <iostream>
#include <sstream>

#include <CLI11.hpp>
#include <json.hpp>

#include "qgentle/ag_invariant.hpp"
#include "qgentle/atilde.hpp"
#include "qgentle/gerstenhaber.hpp"
#include "qgentle/hochschild.hpp"
#include "qgentle/quiver.hpp"
#include "qgentle/threads.hpp"

namespace qgentle {

namespace {

using nlohmann::json;

BoundQuiver load_quiver(const std::string& path) {
    std::ifstream in(path);
    if (!in) throw ParseError(1, 1, "cannot open '" + path + "'");
    std::ostringstream buffer;
    buffer << in.rdbuf();
    return parse_bound_quiver(buffer.str());
}

json phi_json(const AGInvariant& phi) {
    json pairs = json::array();
    for (const auto& [n, m] : phi.pairs) pairs.push_back({n, m});
    return {{"pairs", pairs}, {"formatted", format_ag(phi)}};
}

json params_json(const BranchParams& p) {
    return {{"m", p.m}, {"s1", p.s1}, {"k1", p.k1}, {"s2", p.s2}, {"k2", p.k2}, {"r", p.r}};
}

json report_json(const ClassificationReport& r) {
    json conditions = json::array();
    for (const auto& c : r.conditions)
        conditions.push_back({{"code", c.code},
                              {"holds", c.holds},
                              {"applicable", c.applicable},
                              {"detail", c.detail}});
    return {{"verdict", r.verdict}, {"conditions", conditions}};
}

void print_report(std::ostream& out, const std::string& title, const ClassificationReport& r) {
    out << title << ": " << (r.verdict ? "yes" : "no") << "\n";
    for (const auto& c : r.conditions) {
        out << "  " << c.code << ": " << (c.holds ? "pass" : "fail");
        if (!c.applicable) out << " (not applicable)";
        if (!c.detail.empty()) out << " — " << c.detail;
        out << "\n";
    }
}

int cmd_validate(const std::string& file, bool as_json, std::ostream& out) {
    BoundQuiver bq = load_quiver(file);
    GentleReport g = is_gentle(bq);
    bool admissible = is_admissible(bq);
    bool connected = is_connected(bq);
    if (as_json) {
        json violations = json::array();
        for (const auto& v : g.violations)
            violations.push_back({{"condition", v.condition}, {"where", v.where},
                                  {"detail", v.detail}});
        json doc = {{"verdicts",
                     {{"gentle", g.gentle},
                      {"admissible", admissible},
                      {"connected", connected},
                      {"violations", violations}}}};
        out << doc.dump(2) << "\n";
    } else {
        out << "quiver " << bq.name() << ": " << bq.num_vertices() << " vertices, "
            << bq.num_arrows() << " arrows, " << bq.relations().size() << " relations\n";
        out << "gentle: " << (g.gentle ? "yes" : "no") << "\n";
        for (const auto& v : g.violations)
            out << "  " << v.condition << " at " << v.where << ": " << v.detail << "\n";
        out << "admissible: " << (admissible ? "yes" : "no") << "\n";
        out << "connected: " << (connected ? "yes" : "no") << "\n";
    }
    return (g.gentle && admissible) ? 0 : 1;
}

int cmd_ag(const std::string& file, unsigned seed, bool as_json, std::ostream& out) {
    BoundQuiver bq = load_quiver(file);
    AGInvariant phi = ag_invariant(bq, seed);
    if (as_json)
        out << json{{"phi", phi_json(phi)}}.dump(2) << "\n";
    else
        out << format_ag(phi) << "\n";
    return 0;
}

int cmd_hh(const std::string& file, int characteristic, std::int64_t max_n, bool as_json,
           std::ostream& out) {
    BoundQuiver bq = load_quiver(file);
    FieldSpec k{characteristic};
    AGInvariant phi = ag_invariant(bq, 0);
    HHResult hh = hh_sequence(phi, static_cast<std::int64_t>(bq.num_vertices()),
                              static_cast<std::int64_t>(bq.num_arrows()), max_n, k);
    if (as_json) {
        json doc = {{"phi", phi_json(phi)},
                    {"hh", {{"characteristic", characteristic}, {"dims", hh.dims}}}};
        out << doc.dump(2) << "\n";
    } else {
        out << "characteristic " << characteristic << "\n";
        for (std::size_t n = 0; n < hh.dims.size(); ++n)
            out << "HH^" << n << " = " << hh.dims[n] << "\n";
    }
    return 0;
}

int cmd_params(const std::string& file, int m, bool as_json, std::ostream& out) {
    BoundQuiver bq = load_quiver(file);
    RootDecomposition d = decompose(bq, m);
    BranchParams p = extract_params(bq, m);
    FreeArrowCount f = free_arrows(bq, m, d);
    if (as_json) {
        json root = json::array();
        for (const auto& a : d.root)
            root.push_back({{"arrow", a.name},
                            {"orientation", a.clockwise ? "cw" : "ccw"},
                            {"saturated", a.saturated}});
        json sat = json::array();
        for (const auto& s : d.saturated) {
            std::string kind = s.kind == AttachmentKind::SharedArrowCW    ? "shared-arrow-cw"
                               : s.kind == AttachmentKind::SharedArrowCCW ? "shared-arrow-ccw"
                               : s.kind == AttachmentKind::OnRay          ? "on-ray"
                                                                          : "unsupported";
            sat.push_back({{"cycle", s.cycle}, {"kind", kind}, {"shared_arrow", s.shared_arrow}});
        }
        json doc = {{"params", params_json(p)},
                    {"decomposition",
                     {{"root", root},
                      {"saturated", sat},
                      {"rays", d.rays.size()},
                      {"free_arrows", {{"cw", f.cw}, {"ccw", f.ccw}}}}}};
        out << doc.dump(2) << "\n";
    } else {
        out << "params: " << to_string(p) << "\n";
        out << "root cycle:";
        for (const auto& a : d.root)
            out << " " << a.name << "(" << (a.clockwise ? "cw" : "ccw")
                << (a.saturated ? ",saturated" : "") << ")";
        out << "\n";
        for (const auto& s : d.saturated) {
            out << "saturated cycle:";
            for (const auto& a : s.cycle) out << " " << a;
            if (s.kind == AttachmentKind::SharedArrowCW ||
                s.kind == AttachmentKind::SharedArrowCCW)
                out << " (shares arrow " << s.shared_arrow << ")";
            else if (s.kind == AttachmentKind::OnRay)
                out << " (on a ray)";
            else
                out << " (unsupported attachment)";
            out << "\n";
        }
        out << "rays: " << d.rays.size() << "\n";
        out << "free arrows: cw " << f.cw << ", ccw " << f.ccw << "\n";
    }
    return 0;
}

int cmd_classify(const std::string& file, int m, bool as_json, std::ostream& out) {
    BoundQuiver bq = load_quiver(file);
    ClassificationReport tilted = is_m_cluster_tilted_atilde(bq, m);
    ClassificationReport branched = is_atilde_branched(bq, m);
    if (as_json) {
        json doc = {{"verdicts",
                     {{"m_cluster_tilted_atilde", report_json(tilted)},
                      {"atilde_branched", report_json(branched)}}}};
        out << doc.dump(2) << "\n";
    } else {
        print_report(out, "m-cluster tilted of type A-tilde (m=" + std::to_string(m) + ")",
                     tilted);
        print_report(out, "A-tilde-branched (m=" + std::to_string(m) + ")", branched);
    }
    return 0;
}

int cmd_generate(const BranchParams& p, const std::string& out_file, bool as_json,
                 std::ostream& out) {
    BoundQuiver bq = generate_normal_form(p);
    std::string text = serialize_bound_quiver(bq);
    if (!out_file.empty()) {
        std::ofstream f(out_file);
        if (!f) throw DomainError("cannot write '" + out_file + "'");
        f << text;
        out << "wrote " << out_file << "\n";
    } else if (as_json) {
        json doc = {{"params", params_json(p.canonical())}, {"quiver", text}};
        out << doc.dump(2) << "\n";
    } else {
        out << text;
    }
    return 0;
}

int cmd_compare(const std::string& file1, const std::string& file2, std::int64_t max_n,
                bool as_json, std::ostream& out) {
    BoundQuiver a = load_quiver(file1);
    BoundQuiver b = load_quiver(file2);
    AGInvariant phi_a = ag_invariant(a, 0);
    AGInvariant phi_b = ag_invariant(b, 0);
    bool phi_eq = ag_equal(phi_a, phi_b);
    bool q0_eq = a.num_vertices() == b.num_vertices();

    const int chars[] = {0, 2, 3};
    bool hh_all_equal = true;
    std::map<int, bool> hh_eq;
    for (int c : chars) {
        FieldSpec k{c};
        HHResult ha = hh_sequence(phi_a, a.num_vertices(), a.num_arrows(), max_n, k);
        HHResult hb = hh_sequence(phi_b, b.num_vertices(), b.num_arrows(), max_n, k);
        hh_eq[c] = ha.dims == hb.dims;
        hh_all_equal = hh_all_equal && hh_eq[c];
    }

    std::string verdict;
    if (!phi_eq && hh_all_equal && q0_eq)
        verdict = "same Hochschild data, different AG-invariant: not derived equivalent";
    else if (!phi_eq)
        verdict = "different AG-invariant: not derived equivalent";
    else if (q0_eq)
        verdict = "AG-invariant and vertex count match (derived equivalence not decided by "
                  "this tool alone)";
    else
        verdict = "AG-invariant matches but vertex counts differ";

    if (as_json) {
        json doc = {{"phi", {{a.name(), phi_json(phi_a)}, {b.name(), phi_json(phi_b)},
                             {"equal", phi_eq}}},
                    {"hh",
                     {{"max_n", max_n},
                      {"equal_char0", hh_eq[0]},
                      {"equal_char2", hh_eq[2]},
                      {"equal_char3", hh_eq[3]}}},
                    {"verdicts",
                     {{"vertex_count_equal", q0_eq}, {"verdict", verdict}}}};
        out << doc.dump(2) << "\n";
    } else {
        out << "phi(" << a.name() << ") = " << format_ag(phi_a) << "\n";
        out << "phi(" << b.name() << ") = " << format_ag(phi_b) << "\n";
        out << "phi equal: " << (phi_eq ? "yes" : "no") << "\n";
        out << "|Q0|: " << a.num_vertices() << " vs " << b.num_vertices() << " ("
            << (q0_eq ? "equal" : "different") << ")\n";
        for (int c : chars)
            out << "HH equal (char " << c << ", n <= " << max_n << "): "
                << (hh_eq[c] ? "yes" : "no") << "\n";
        out << "verdict: " << verdict << "\n";
    }
    return 0;
}

int cmd_gerstenhaber(const std::string& file, int characteristic, int bound, bool as_json,
                     std::ostream& out) {
    BoundQuiver bq = load_quiver(file);
    FieldSpec k{characteristic};
    int longest = 2;
    for (const auto& c : relation_cycles(bq))
        longest = std::max(longest, static_cast<int>(c.size()));
    int n_bound = bound > 0 ? bound : longest;
    GerstenhaberVerdict v = gerstenhaber_nontrivial(bq, k, n_bound);
    if (as_json) {
        json witness;
        if (v.witness)
            witness = {{"arrows", v.witness->path.arrows}, {"base", v.witness->base}};
        json doc = {{"verdicts",
                     {{"cup_nontrivial", v.cup_nontrivial},
                      {"bracket_nontrivial", v.bracket_nontrivial},
                      {"witness", witness}}}};
        out << doc.dump(2) << "\n";
    } else {
        out << "cup product nontrivial: " << (v.cup_nontrivial ? "yes" : "no") << "\n";
        out << "Lie bracket nontrivial: " << (v.bracket_nontrivial ? "yes" : "no")
            << " (characteristic " << characteristic << ")\n";
        if (v.witness) {
            out << "witness: (";
            for (std::size_t i = 0; i < v.witness->path.arrows.size(); ++i)
                out << (i ? " " : "") << v.witness->path.arrows[i];
            out << ") based at " << v.witness->base << "\n";
        }
    }
    return 0;
}

int cmd_saturated(const std::string& file, int m, bool as_json, std::ostream& out) {
    BoundQuiver bq = load_quiver(file);
    auto cycles = find_saturated_cycles(bq, m);
    if (as_json) {
        out << json{{"saturated", cycles}}.dump(2) << "\n";
    } else {
        out << m << "-saturated cycles: " << cycles.size() << "\n";
        for (const auto& c : cycles) {
            for (std::size_t i = 0; i < c.size(); ++i) out << (i ? " " : "") << c[i];
            out << "\n";
        }
    }
    return 0;
}

}  // namespace

int run_cli(const std::vector<std::string>& args, std::ostream& out, std::ostream& err) {
    CLI::App app{"gentle bound quiver toolkit: derived invariants, Hochschild dimensions, "
                 "type A-tilde structure"};
    app.require_subcommand(1);

    std::string file, file2, out_file;
    unsigned seed = 0;
    int characteristic = 0;
    std::int64_t max_n = 24;
    int m = 1;
    int bound = 0;
    bool as_json = false;
    BranchParams params_in;
    std::int64_t g_s1 = 0, g_s2 = 0, g_k1 = 0, g_k2 = 0, g_r = 0;
    int g_m = 1;

    auto add_json = [&](CLI::App* cmd) { cmd->add_flag("--json", as_json, "JSON output"); };

    CLI::App* validate = app.add_subcommand("validate", "gentleness and admissibility report");
    validate->add_option("file", file)->required();
    add_json(validate);

    CLI::App* ag = app.add_subcommand("ag", "AG-invariant in (a,b)* notation");
    ag->add_option("file", file)->required();
    ag->add_option("--seed", seed, "sign-assignment seed (output independent)");
    add_json(ag);

    CLI::App* hh = app.add_subcommand("hh", "Hochschild dimension table");
    hh->add_option("file", file)->required();
    hh->add_option("--char", characteristic, "field characteristic (0 or a prime)");
    hh->add_option("--max", max_n, "largest degree");
    add_json(hh);

    CLI::App* params = app.add_subcommand("params", "branch parameters and decomposition");
    params->add_option("file", file)->required();
    params->add_option("--m", m)->required();
    add_json(params);

    CLI::App* classify = app.add_subcommand("classify", "recognition verdicts");
    classify->add_option("file", file)->required();
    classify->add_option("--m", m)->required();
    add_json(classify);

    CLI::App* generate = app.add_subcommand("generate", "normal-form quiver from parameters");
    generate->add_option("--m", g_m)->required();
    generate->add_option("--s1", g_s1);
    generate->add_option("--s2", g_s2);
    generate->add_option("--k1", g_k1);
    generate->add_option("--k2", g_k2);
    generate->add_option("--r", g_r);
    generate->add_option("-o,--output", out_file, "write to a file instead of stdout");
    add_json(generate);

    CLI::App* compare = app.add_subcommand("compare", "AG/Hochschild comparison of two quivers");
    compare->add_option("file1", file)->required();
    compare->add_option("file2", file2)->required();
    compare->add_option("--m", m, "accepted for symmetry with other verbs");
    compare->add_option("--max", max_n, "largest degree");
    add_json(compare);

    CLI::App* gerst = app.add_subcommand("gerstenhaber", "cup/bracket nontriviality");
    gerst->add_option("file", file)->required();
    gerst->add_option("--m", m, "accepted for symmetry with other verbs");
    gerst->add_option("--char", characteristic, "field characteristic (0 or a prime)");
    gerst->add_option("--bound", bound, "search bound (default: exact)");
    add_json(gerst);

    CLI::App* saturated = app.add_subcommand("saturated", "m-saturated cycle list");
    saturated->add_option("file", file)->required();
    saturated->add_option("--m", m)->required();
    add_json(saturated);

    std::vector<std::string> argv(args.rbegin(), args.rend());  // CLI11 wants reversed args
    try {
        app.parse(argv);
    } catch (const CLI::CallForHelp& e) {
        out << app.help();
        return 0;
    } catch (const CLI::ParseError& e) {
        err << "usage error: " << e.what() << "\n";
        return 2;
    }

    try {
        if (!is_valid_characteristic(characteristic)) {
            err << "usage error: characteristic must be 0 or a prime\n";
            return 2;
        }
        if (validate->parsed()) return cmd_validate(file, as_json, out);
        if (ag->parsed()) return cmd_ag(file, seed, as_json, out);
        if (hh->parsed()) return cmd_hh(file, characteristic, max_n, as_json, out);
        if (params->parsed()) return cmd_params(file, m, as_json, out);
        if (classify->parsed()) return cmd_classify(file, m, as_json, out);
        if (generate->parsed())
            return cmd_generate(BranchParams(g_m, g_s1, g_k1, g_s2, g_k2, g_r), out_file,
                                as_json, out);
        if (compare->parsed()) return cmd_compare(file, file2, max_n, as_json, out);
        if (gerst->parsed()) return cmd_gerstenhaber(file, characteristic, bound, as_json, out);
        if (saturated->parsed()) return cmd_saturated(file, m, as_json, out);
    } catch (const ParseError& e) {
        err << e.what() << "\n";
        return 2;
    } catch (const DomainError& e) {
        err << "error: " << e.what() << "\n";
        return 1;
    } catch (const ValidationError& e) {
        err << "error: " << e.what() << "\n";
        return 1;
    }
    err << "usage error: no command\n";
    return 2;
}

}  // namespace qgentle
