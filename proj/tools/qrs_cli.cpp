#include <CLI11.hpp>
#include <iostream>
#include <json.hpp>

#include "qrs/audit.hpp"
#include "qrs/normality.hpp"
#include "qrs/parser.hpp"

using json = nlohmann::ordered_json;
using namespace qrs;

namespace {

constexpr const char* kVersion = "1.0.0";

struct Options {
    std::string algebra;
    std::string weight = "0,0";
    int max_degree = 8;
    int grid = -1;
    bool as_json = false;
};

Weight parse_weight(const std::string& s) {
    size_t comma = s.find(',');
    if (comma == std::string::npos)
        throw CLI::ValidationError("--weight", "expected a,b");
    try {
        return Weight{std::stoi(s.substr(0, comma)), std::stoi(s.substr(comma + 1))};
    } catch (const std::exception&) {
        throw CLI::ValidationError("--weight", "expected integers a,b");
    }
}

Laurent scalar_of(const std::string& text, const Presentation& p) {
    FreeElement q = parse(text, p);
    if (q.is_zero()) return Laurent();
    if (q.terms().size() == 1 && q.terms().begin()->first.empty())
        return q.terms().begin()->second;
    throw ParseError("expected a scalar expression", 0);
}

std::string cert_text(const std::array<std::pair<int, int>, 2>& e) {
    NormalityCertificate c;
    c.central = true;
    c.exponents = e;
    return c.str();
}

json entry_json(const CheckEntry& e) {
    json j;
    j["check"] = e.check;
    j["citation"] = e.citation;
    j["status"] = to_string(e.status);
    j["residual_text"] = e.residual_text;
    if (!e.correction_text.empty()) j["correction_text"] = e.correction_text;
    return j;
}

void print_entries(const CheckReport& rep, bool as_json) {
    if (as_json) {
        json j = json::array();
        for (const auto& e : rep.entries) j.push_back(entry_json(e));
        std::cout << j.dump(2) << "\n";
        return;
    }
    for (const auto& e : rep.entries) {
        std::cout << "[" << to_string(e.status) << "] " << e.check;
        if (!e.residual_text.empty() && e.residual_text != "0")
            std::cout << "  (" << e.residual_text << ")";
        if (!e.correction_text.empty()) std::cout << "\n    " << e.correction_text;
        std::cout << "\n";
    }
}

int cmd_nf(const Options& o, const std::string& expr) {
    const Presentation& p = build_presentation(algebra_from_string(o.algebra));
    PBWElement x = normal_form(parse(expr, p), p);
    if (o.as_json)
        std::cout << json{{"algebra", p.id()}, {"input", expr},
                          {"normal_form", x.str(p)}}.dump(2)
                  << "\n";
    else
        std::cout << x.str(p) << "\n";
    return 0;
}

int cmd_comm(const Options& o, const std::string& a, const std::string& b,
             const std::string& q) {
    const Presentation& p = build_presentation(algebra_from_string(o.algebra));
    FreeElement fa = parse(a, p);
    FreeElement fb = parse(b, p);
    Laurent lq = scalar_of(q, p);
    PBWElement x = normal_form(fa * fb - (fb * fa).scaled(lq), p);
    if (o.as_json)
        std::cout << json{{"algebra", p.id()}, {"result", x.str(p)}}.dump(2) << "\n";
    else
        std::cout << x.str(p) << "\n";
    return 0;
}

int cmd_central(const Options& o, const std::string& expr) {
    const Presentation& p = build_presentation(algebra_from_string(o.algebra));
    PBWElement x = normal_form(parse(expr, p), p);
    Weight w = x.is_zero() ? Weight{0, 0} : weight_of(x.terms().begin()->first, p);
    int g = o.grid < 0 ? default_grid_bound(w) : o.grid;
    NormalityCertificate c = is_rs_central(x, p, g);
    if (o.as_json) {
        json j;
        j["algebra"] = p.id();
        j["element"] = x.str(p);
        j["central"] = c.central;
        if (c.central) {
            j["certificate"] = c.str();
            j["on_grid_boundary"] = c.on_grid_boundary;
        } else {
            j["refuting_generator"] = "e" + std::to_string(c.refuting_generator + 1);
            j["residual"] = c.residual.str(p);
        }
        std::cout << j.dump(2) << "\n";
    } else if (c.central) {
        std::cout << c.str() << "\n";
        if (c.on_grid_boundary)
            std::cout << "warning: certificate lies on the grid boundary\n";
    } else {
        std::cout << "not (r,s)-central: refuted by e" << c.refuting_generator + 1
                  << ", residual " << c.residual.str(p) << "\n";
    }
    return 0;
}

int cmd_find_normal(const Options& o) {
    const Presentation& p = build_presentation(algebra_from_string(o.algebra));
    Weight w = parse_weight(o.weight);
    auto found = find_normal(w, p, o.grid);
    if (o.as_json) {
        json j = json::array();
        for (const auto& f : found)
            j.push_back({{"element", f.element.str(p)},
                         {"certificate", cert_text(f.exponents)},
                         {"on_grid_boundary", f.on_grid_boundary}});
        std::cout << j.dump(2) << "\n";
    } else if (found.empty()) {
        std::cout << "no (r,s)-central elements at weight (" << w[0] << "," << w[1]
                  << ")\n";
    } else {
        for (const auto& f : found)
            std::cout << cert_text(f.exponents) << "  " << f.element.str(p) << "\n";
    }
    return 0;
}

int cmd_center(const Options& o) {
    const Presentation& p = build_presentation(algebra_from_string(o.algebra));
    auto basis = center_basis(o.max_degree, p, o.grid);
    if (o.as_json) {
        json j;
        j["dimension"] = basis.size();
        j["basis"] = json::array();
        for (const auto& b : basis) j["basis"].push_back(b.str(p));
        std::cout << j.dump(2) << "\n";
    } else {
        std::cout << "dimension " << basis.size() << ": {";
        for (size_t i = 0; i < basis.size(); ++i)
            std::cout << (i ? ", " : "") << basis[i].str(p);
        std::cout << "}\n";
    }
    return 0;
}

int cmd_audit(const Options& o, bool list_only) {
    const Presentation& p = build_presentation(algebra_from_string(o.algebra));
    auto records = run_identity_audit(p);
    if (list_only) {
        for (const auto& r : records)
            std::cout << r.id << "  [" << r.citation << "]\n";
        return 0;
    }
    bool failed = false;
    if (o.as_json) {
        json j = json::array();
        for (const auto& r : records) {
            failed = failed || r.status == CheckStatus::failed;
            json e;
            e["id"] = r.id;
            e["citation"] = r.citation;
            e["status"] = to_string(r.status);
            e["residual_text"] = r.residual_text;
            e["correction_text"] = r.correction_text;
            j.push_back(std::move(e));
        }
        std::cout << j.dump(2) << "\n";
    } else {
        for (const auto& r : records) {
            failed = failed || r.status == CheckStatus::failed;
            std::cout << "[" << to_string(r.status) << "] " << r.id << "  ("
                      << r.citation << ")";
            if (r.status != CheckStatus::verified || r.residual_text != "0")
                std::cout << "\n    residual: " << r.residual_text;
            if (!r.correction_text.empty())
                std::cout << "\n    " << r.correction_text;
            std::cout << "\n";
        }
        CheckReport tower = skew_tower_check(p, published_tower(algebra_from_string(o.algebra)), 16);
        std::cout << "-- skew tower --\n";
        print_entries(tower, false);
        TorusReport torus = verify_torus(p);
        std::cout << "-- torus action --\n";
        print_entries(torus.entries, false);
    }
    return failed ? 1 : 0;
}

int cmd_confluence(const Options& o) {
    const Presentation& p = build_presentation(algebra_from_string(o.algebra));
    ConfluenceReport rep = confluence_check(p);
    size_t bad = 0;
    for (const auto& c : rep.pairs)
        if (!c.resolved) ++bad;
    if (o.as_json) {
        json j;
        j["pairs"] = rep.pairs.size();
        j["all_resolved"] = rep.all_resolved();
        json u = json::array();
        for (const auto& c : rep.pairs)
            if (!c.resolved)
                u.push_back({{"triple", {c.triple[0], c.triple[1], c.triple[2]}},
                             {"difference", c.difference.str(p)}});
        j["unresolved"] = u;
        std::cout << j.dump(2) << "\n";
    } else {
        std::cout << rep.pairs.size() << " overlap triples, "
                  << (rep.all_resolved() ? "all resolved" : std::to_string(bad) + " unresolved")
                  << "\n";
        for (const auto& c : rep.pairs)
            if (!c.resolved)
                std::cout << "  (" << c.triple[0] << "," << c.triple[1] << ","
                          << c.triple[2] << "): " << c.difference.str(p) << "\n";
    }
    return rep.all_resolved() ? 0 : 1;
}

int cmd_serre(const Options& o) {
    const Presentation& p = build_presentation(algebra_from_string(o.algebra));
    CheckReport rep = serre_check(p);
    print_entries(rep, o.as_json);
    return rep.any_failed() ? 1 : 0;
}

int cmd_quotient(const Options& o, const std::string& gen_name) {
    const Presentation& p = build_presentation(algebra_from_string(o.algebra));
    int g = -1;
    for (size_t i = 0; i < p.ngens(); ++i)
        if (p.names()[i] == gen_name) g = static_cast<int>(i);
    if (g < 0) throw CLI::ValidationError("--generator", "unknown generator " + gen_name);
    auto [q, cls] = quotient_by_pbw_generator(p, g);
    if (o.as_json) {
        json j;
        j["quotient"] = q.id();
        j["generators"] = q.names();
        j["confluent"] = cls.confluent;
        j["matching_pairs"] = json::array();
        for (const auto& [a, b] : cls.matching_pairs)
            j["matching_pairs"].push_back({a.str(), b.str()});
        std::cout << j.dump(2) << "\n";
    } else {
        std::cout << "quotient " << q.id() << " on generators";
        for (const auto& n : q.names()) std::cout << " " << n;
        std::cout << "\nconfluent: " << (cls.confluent ? "yes" : "no") << "\n";
        std::cout << "sl3-type Serre parameter pairs:";
        if (cls.matching_pairs.empty()) std::cout << " none";
        for (const auto& [a, b] : cls.matching_pairs)
            std::cout << " (" << a.str() << ", " << b.str() << ")";
        std::cout << "\n";
    }
    return cls.confluent ? 0 : 1;
}

int cmd_catalog(const Options& o) {
    CatalogReport rep = stratification_catalog(algebra_from_string(o.algebra));
    auto kind = [](StratumKind k) {
        return k == StratumKind::both ? "prime+primitive"
               : k == StratumKind::prime ? "prime" : "primitive";
    };
    if (o.as_json) {
        json j;
        j["weyl_order"] = rep.weyl_order;
        j["strata"] = json::array();
        for (const auto& st : rep.strata) {
            json e;
            e["h_prime"] = st.h_prime;
            e["members"] = st.members;
            e["kind"] = kind(st.kind);
            e["citation"] = st.citation;
            j["strata"].push_back(std::move(e));
        }
        j["checks"] = json::array();
        for (const auto& e : rep.checks.entries) j["checks"].push_back(entry_json(e));
        std::cout << j.dump(2) << "\n";
    } else {
        std::cout << rep.strata.size() << " H-strata (Weyl order " << rep.weyl_order
                  << ")\n";
        for (const auto& st : rep.strata) {
            std::cout << "  (";
            for (size_t i = 0; i < st.h_prime.size(); ++i)
                std::cout << (i ? ", " : "") << st.h_prime[i];
            if (st.h_prime.empty()) std::cout << "0";
            std::cout << "): " << st.members << "  [" << kind(st.kind) << "]\n";
        }
        print_entries(rep.checks, false);
    }
    return rep.checks.any_failed() ? 1 : 0;
}

}  // namespace

int main(int argc, char** argv) {
    CLI::App app{"Exact PBW-rewriting kernel for the two-parameter quantized "
                 "enveloping algebras U+_{r,s}(sl3) and U+_{r,s}(B2)"};
    app.set_version_flag("--version", kVersion);
    app.require_subcommand(1);

    Options o;
    std::string expr, expr_b, expr_q, gen_name;
    bool list_identities = false;

    auto add_common = [&](CLI::App* sub) {
        sub->add_option("-a,--algebra", o.algebra, "algebra: U or V")->required();
        sub->add_flag("--json", o.as_json, "JSON output");
        return sub;
    };

    auto* nf = add_common(app.add_subcommand("nf", "normal form of an expression"));
    nf->add_option("expr", expr)->required();
    auto* comm = add_common(app.add_subcommand("comm", "print nf(A*B - Q*B*A)"));
    comm->add_option("A", expr)->required();
    comm->add_option("B", expr_b)->required();
    comm->add_option("Q", expr_q)->required();
    auto* central = add_common(app.add_subcommand("central", "(r,s)-centrality certificate"));
    central->add_option("expr", expr)->required();
    central->add_option("--grid", o.grid);
    auto* fnorm = add_common(app.add_subcommand("find-normal", "central elements at a weight"));
    fnorm->add_option("--weight", o.weight)->required();
    fnorm->add_option("--grid", o.grid);
    auto* center = add_common(app.add_subcommand("center", "center basis up to a degree"));
    center->add_option("--max-degree", o.max_degree);
    center->add_option("--grid", o.grid);
    auto* audit = add_common(app.add_subcommand("audit", "identity audit"));
    audit->add_flag("--list-identities", list_identities, "list catalogued identities");
    auto* confl = add_common(app.add_subcommand("confluence", "critical-pair check"));
    auto* serre = add_common(app.add_subcommand("serre", "defining-relation check"));
    auto* quot = add_common(app.add_subcommand("quotient", "quotient by a PBW generator"));
    quot->add_option("--generator", gen_name, "generator name (default X3)");
    auto* cat = add_common(app.add_subcommand("catalog", "stratification catalog"));

    try {
        app.parse(argc, argv);
    } catch (const CLI::ParseError& e) {
        int code = app.exit(e);
        return code == 0 ? 0 : 2;
    }

    try {
        if (nf->parsed()) return cmd_nf(o, expr);
        if (comm->parsed()) return cmd_comm(o, expr, expr_b, expr_q);
        if (central->parsed()) return cmd_central(o, expr);
        if (fnorm->parsed()) return cmd_find_normal(o);
        if (center->parsed()) return cmd_center(o);
        if (audit->parsed()) return cmd_audit(o, list_identities);
        if (confl->parsed()) return cmd_confluence(o);
        if (serre->parsed()) return cmd_serre(o);
        if (quot->parsed())
            return cmd_quotient(o, gen_name.empty() ? "X3" : gen_name);
        if (cat->parsed()) return cmd_catalog(o);
    } catch (const ParseError& e) {
        std::cerr << "parse error: " << e.what() << "\n";
        return 2;
    } catch (const std::exception& e) {
        std::cerr << "error: " << e.what() << "\n";
        return 2;
    }
    return 2;
}
