/*
   Copyright 2025 The skeinpres authors

   Licensed under the Apache License, Version 2.0 (the "License");
   you may not use this file except in compliance with the License.
   You may obtain a copy of the License at

        http://www.apache.org/licenses/LICENSE-2.0

   Unless required by applicable law or agreed to in writing, software
   distributed under the License is distributed on an "AS IS" BASIS,
   WITHOUT WARRANTIES OR CONDITIONS OF ANY KIND, either express or implied.
   See the License for the specific language governing permissions and
   limitations under the License.
*/

// Command line front end. Every command reads a graph or presentation JSON file.

#include <iostream>
#include <sstream>

#include "CLI11.hpp"
#include "json.hpp"
#include "skein/classical.hpp"
#include "skein/elimination.hpp"
#include "skein/error.hpp"
#include "skein/expression.hpp"
#include "skein/gauge.hpp"
#include "skein/io.hpp"

using json = nlohmann::ordered_json;
using namespace skein;

namespace {

struct Options {
    std::string input, order_file, points_file, omega = "1", oracle_omega = "3/2", spin;
    std::vector<std::string> exprs;
    size_t degree = 2;
    size_t guard = default_guard;
    bool json = false;
};

struct Failure {
    std::string message;
};

LoadedInput load(const Options& o) {
    std::vector<std::string> order;
    if (!o.order_file.empty()) order = order_from_json(read_file(o.order_file));
    return load_input(read_file(o.input), order);
}

mpq_class rational(const std::string& s) {
    try {
        mpq_class q(s);
        q.canonicalize();
        if (q.get_den() == 0) throw std::invalid_argument(s);
        return q;
    } catch (const std::invalid_argument&) {
        throw Error(ErrorCode::parse, "not a rational number", s);
    }
}

const char* type_name(ArcType t) {
    static const char* names[] = {"a", "b", "c", "d", "e"};
    return names[static_cast<char>(t) - 'a'];
}

const char* height_name(Height h) {
    switch (h) {
        case Height::source_above: return "source_above";
        case Height::target_above: return "target_above";
        default: return "none";
    }
}

json generators_json(const Presentation& p) {
    json out = json::array();
    for (const auto& g : p.generators)
        out.push_back({{"id", g.id},
                       {"type", type_name(g.type)},
                       {"source", {g.source.arc, g.source.pos}},
                       {"target", {g.target.arc, g.target.pos}},
                       {"height", height_name(g.height)},
                       {"reversed", g.reversed}});
    return out;
}

std::string relation_text(const Presentation& p, const std::vector<RelLetter>& r) {
    std::string out;
    for (const auto& l : r) out += (out.empty() ? "" : "*") + p.generators[l.gen].id + (l.inverse ? "^-1" : "");
    return out;
}

std::vector<RelLetter> letters_from(const Presentation& p, const std::vector<std::string>& tokens) {
    std::vector<RelLetter> word;
    for (std::string t : tokens) {
        bool inv = t.ends_with("^-1");
        if (inv) t.resize(t.size() - 3);
        word.push_back({p.index_of(t), inv});
    }
    return word;
}

SpinFunction spin_of(const Presentation& p, const std::string& text) {
    std::map<std::string, int> w;
    std::stringstream ss(text);
    for (std::string item; std::getline(ss, item, ',');) {
        if (item.empty()) continue;
        const auto eq = item.find('=');
        if (eq == std::string::npos) throw Error(ErrorCode::parse, "spin entries look like id=0 or id=1", item);
        const std::string v = item.substr(eq + 1);
        if (v != "0" && v != "1") throw Error(ErrorCode::parse, "spin values are 0 or 1", item);
        w[item.substr(0, eq)] = v == "1";
    }
    return spin_from_map(p, w);
}

void emit(const Options& o, const json& j, const std::string& text) {
    if (o.json)
        std::cout << j.dump(2) << "\n";
    else
        std::cout << text;
}

int cmd_info(const Options& o) {
    const LoadedInput in = load(o);
    const Presentation& p = in.presentation;
    json j{{"generators", p.generators.size()}, {"boundary_arcs", p.boundary_arcs}, {"relations", p.relations.size()}};
    std::ostringstream t;
    t << "generators " << p.generators.size() << "\nboundary_arcs " << p.boundary_arcs.size() << "\nrelations "
      << p.relations.size() << "\n";
    if (in.from_graph) {
        const SurfaceInvariants s = surface_invariants(in.graph);
        j["genus"] = s.genus;
        j["fattening_boundary"] = s.boundary_components_of_fattening;
        j["punctures_closed"] = s.punctures_closed;
        j["boundary_arcs_open"] = s.boundary_arcs_open;
        j["inner_punctures_open"] = s.inner_punctures_open;
        j["boundary_cycles"] = trace_boundary(in.graph);
        t << "genus " << s.genus << "\nfattening_boundary " << s.boundary_components_of_fattening
          << "\npunctures_closed " << s.punctures_closed << "\nboundary_arcs_open " << s.boundary_arcs_open
          << "\ninner_punctures_open " << s.inner_punctures_open << "\n";
    }
    emit(o, j, t.str());
    return 0;
}

int cmd_present(const Options& o) {
    const Presentation p = load(o).presentation;
    json rels = json::array();
    std::ostringstream t;
    for (const auto& g : p.generators)
        t << g.id << " type " << type_name(g.type) << " " << g.source.arc << ":" << g.source.pos << " -> "
          << g.target.arc << ":" << g.target.pos << " " << height_name(g.height) << (g.reversed ? " reversed" : "")
          << "\n";
    for (const auto& r : p.relations) {
        rels.push_back(relation_text(p, r));
        t << "relation " << relation_text(p, r) << "\n";
    }
    const Alphabet ab = p.alphabet();
    t << "order";
    for (size_t l = 0; l < p.letters(); ++l) t << " " << ab.names[l];
    t << "\n";
    emit(o, {{"generators", generators_json(p)}, {"relations", rels}, {"letters", ab.names}}, t.str());
    return 0;
}

Presentation free_part(const Presentation& p) {
    Presentation q = p;
    q.relations.clear();
    return q;
}

int cmd_relators(const Options& o) {
    const Presentation p = free_part(load(o).presentation);
    const NCSystem rs = build_rewrite_system(p);
    json j = json::array();
    std::ostringstream t;
    for (const auto& r : rs.rules()) {
        const std::string lead = word_text(r.lead, rs.alphabet()), rhs = poly_text(r.rhs, rs.alphabet());
        j.push_back({{"lead", lead}, {"rhs", rhs}});
        t << lead << " -> " << rhs << "\n";
    }
    emit(o, j, t.str());
    return 0;
}

int cmd_certify(const Options& o) {
    const NCSystem rs = build_rewrite_system(free_part(load(o).presentation));
    const ConfluenceReport rep = certify_confluence(rs, o.guard);
    json failures = json::array();
    for (const auto& f : rep.failures)
        failures.push_back({{"triple", word_text(f.triple, rs.alphabet())}, {"left", f.left}, {"right", f.right}});
    std::cout << json{{"generators", rep.generators},
                      {"relators", rep.relators},
                      {"critical_triples", rep.critical_triples},
                      {"failures", failures}}
                     .dump()
              << "\n";
    return rep.failures.empty() ? 0 : static_cast<int>(ErrorCode::certification);
}

int cmd_nf(const Options& o) {
    if (o.exprs.size() != 1) throw Error(ErrorCode::validation, "nf takes one expression");
    const NCSystem rs = build_rewrite_system(free_part(load(o).presentation));
    const std::string out = poly_text(rs.normal_form(parse_expression(o.exprs[0], rs.alphabet()), o.guard), rs.alphabet());
    emit(o, {{"normal_form", out}}, out + "\n");
    return 0;
}

int cmd_mul(const Options& o) {
    if (o.exprs.size() < 2) throw Error(ErrorCode::validation, "mul takes two or more expressions");
    const NCSystem rs = build_rewrite_system(free_part(load(o).presentation));
    NCPoly acc(1);
    for (const auto& e : o.exprs) acc = rs.multiply(acc, parse_expression(e, rs.alphabet()), o.guard);
    const std::string out = poly_text(acc, rs.alphabet());
    emit(o, {{"product", out}}, out + "\n");
    return 0;
}

int cmd_coact(const Options& o) {
    if (o.exprs.size() != 1) throw Error(ErrorCode::validation, "coact takes one expression");
    const GaugeCoaction g(load(o).presentation);
    const NCTensor t = g.apply(parse_expression(o.exprs[0], g.system().alphabet()));
    const std::string text = g.text(t);
    emit(o, {{"terms", t.terms().size()}, {"text", text}}, text.empty() ? "0\n" : text);
    return 0;
}

int cmd_coinv(const Options& o) {
    const GaugeCoaction g(load(o).presentation);
    const auto basis = coinvariants(g, o.degree);
    json j{{"degree", o.degree}, {"dimension", basis.size()}};
    std::ostringstream t;
    json items = json::array();
    for (const auto& b : basis) {
        items.push_back(poly_text(b, g.system().alphabet()));
        t << poly_text(b, g.system().alphabet()) << "\n";
    }
    j["basis"] = items;
    t << "dimension " << basis.size() << "\n";
    // Independent count at a rational w.
    const mpq_class w0 = rational(o.oracle_omega);
    const size_t oracle = coinvariant_dimension_at(g, o.degree, w0);
    j["oracle_omega"] = w0.get_str();
    j["oracle_dimension"] = oracle;
    t << "oracle_dimension " << oracle << " at w = " << w0.get_str() << "\n";
    emit(o, j, t.str());
    return oracle == basis.size() ? 0 : static_cast<int>(ErrorCode::certification);
}

int cmd_hilbert(const Options& o) {
    const Presentation p = free_part(load(o).presentation);
    const NCSystem rs = build_rewrite_system(p);
    json rows = json::array();
    std::ostringstream t;
    int code = 0;
    for (size_t n = 0; n <= o.degree; ++n) {
        const mpz_class count = rs.graded_dimension(n), conv = convolution_dimension(p.generators.size(), n);
        rows.push_back({{"degree", n}, {"count", count.get_str()}, {"convolution", conv.get_str()}});
        t << n << " " << count.get_str() << " " << conv.get_str() << "\n";
        if (count != conv) code = static_cast<int>(ErrorCode::certification);
    }
    emit(o, rows, t.str());
    return code;
}

int cmd_loop_check(const Options& o) {
    const Presentation p = load(o).presentation;
    json rows = json::array();
    std::ostringstream t;
    bool all = true;
    auto report = [&](const std::string& word, bool ok, const std::string& how) {
        rows.push_back({{"word", word}, {"pass", ok}, {"system", how}});
        t << word << " " << (ok ? "pass" : "fail") << " (" << how << ")\n";
        all = all && ok;
    };
    if (!o.exprs.empty()) {
        const auto word = letters_from(p, o.exprs);
        report(relation_text(p, word), loop_identity_check(p, word, build_rewrite_system(free_part(p))), "free");
    } else {
        if (p.relations.empty()) throw Error(ErrorCode::validation, "no relations and no word given");
        // Check each relation after eliminating one of its letters.
        for (const auto& r : p.relations) {
            std::optional<Elimination> e;
            Presentation single = p;
            single.relations = {r};
            for (auto it = r.rbegin(); it != r.rend() && !e; ++it) {
                try {
                    e = eliminate_generators(single, {p.generators[it->gen].id});
                } catch (const Error&) {
                }
            }
            if (!e) throw Error(ErrorCode::validation, "unsupported elimination for relation", relation_text(p, r));
            const NCSystem small = build_rewrite_system(e->reduced);
            const PMat m = trivial_loop_matrix(p, r);
            bool ok = true;
            for (int i = 0; i < 2; ++i)
                for (int j = 0; j < 2; ++j)
                    ok = ok && small.normal_form(transport(*e, m(i, j) - (i == j ? NCPoly(1) : NCPoly()))).is_zero();
            report(relation_text(p, r), ok, "eliminated " + e->removed[0]);
        }
    }
    emit(o, rows, t.str());
    return all ? 0 : static_cast<int>(ErrorCode::certification);
}

int cmd_specialize(const Options& o) {
    const Presentation p = free_part(load(o).presentation);
    const mpq_class w0 = rational(o.omega);
    const QSystem qs = specialize(build_rewrite_system(p), w0);
    json rules = json::array();
    std::ostringstream t;
    for (const auto& r : qs.rules()) {
        const std::string lead = word_text(r.lead, qs.alphabet()), rhs = poly_text(r.rhs, qs.alphabet());
        rules.push_back({{"lead", lead}, {"rhs", rhs}});
        t << lead << " -> " << rhs << "\n";
    }
    const auto bad = non_commutator_exchange_rules(p, qs);
    t << "non_commutator_exchange " << bad.size() << "\n";
    emit(o, {{"omega", w0.get_str()}, {"rules", rules}, {"non_commutator_exchange", bad}}, t.str());
    return 0;
}

int cmd_eval(const Options& o) {
    if (o.points_file.empty()) throw Error(ErrorCode::validation, "eval needs --points");
    const Presentation p = free_part(load(o).presentation);
    const SL2Point pt = points_from_json(read_file(o.points_file));
    validate_point(p, pt);
    const UForm u(p, o.spin.empty() ? SpinFunction(p.generators.size(), 0) : spin_of(p, o.spin));
    if (!o.exprs.empty()) {
        // Expressions are read in U-entries.
        json vals = json::array();
        std::ostringstream t;
        for (const auto& e : o.exprs) {
            const mpq_class v = evaluate_at_point(specialize(parse_expression(e, p.alphabet()), 1), p, pt);
            vals.push_back(v.get_str());
            t << v.get_str() << "\n";
        }
        emit(o, vals, t.str());
        return 0;
    }
    const NCSystem rs = build_rewrite_system(p);
    std::vector<std::string> nonzero;
    size_t count = 0;
    auto check = [&](const NCPoly& x_in_u, const std::string& name) {
        ++count;
        if (evaluate_at_point(specialize(x_in_u, 1), p, pt) != 0) nonzero.push_back(name);
    };
    for (const auto& r : rs.rules()) check(u.to_u(r.relator()), word_text(r.lead, rs.alphabet()));
    for (size_t g = 0; g < p.generators.size(); ++g) check(u.qdet(g), "qdet " + p.generators[g].id);
    std::ostringstream t;
    t << "relators " << count << "\nnonzero " << nonzero.size() << "\n";
    for (const auto& n : nonzero) t << "  " << n << "\n";
    emit(o, {{"relators", count}, {"nonzero", nonzero}}, t.str());
    return nonzero.empty() ? 0 : static_cast<int>(ErrorCode::certification);
}

int cmd_spin_check(const Options& o) {
    const Presentation p = load(o).presentation;
    const SpinFunction w = spin_of(p, o.spin);
    const bool ok = validate_spin(p, w);
    emit(o, {{"pass", ok}}, std::string(ok ? "pass" : "fail") + "\n");
    return ok ? 0 : static_cast<int>(ErrorCode::certification);
}

void print_error(const std::string& code, const std::string& message, const std::string& context) {
    std::cerr << json{{"code", code}, {"message", message}, {"context", context}}.dump() << "\n";
}

}  // namespace

int main(int argc, char** argv) {
    CLI::App app{"Stated skein algebras from ciliated graphs and groupoid presentations"};
    app.require_subcommand(1);
    Options o;
    app.add_flag("--json", o.json, "machine readable output");
    app.add_option("--order", o.order_file, "JSON file with the generator order");
    app.add_option("--guard", o.guard, "rewrite step limit per polynomial");

    using Handler = int (*)(const Options&);
    std::vector<std::pair<CLI::App*, Handler>> commands;
    auto add = [&](const char* name, const char* help, Handler h) {
        CLI::App* c = app.add_subcommand(name, help);
        c->add_option("input", o.input, "graph or presentation JSON")->required();
        commands.emplace_back(c, h);
        return c;
    };
    add("info", "surface invariants and sizes", cmd_info);
    add("present", "typed generators and letter order", cmd_present);
    add("relators", "the relator table, one rule per line", cmd_relators);
    add("certify", "machine confluence check (JSON report)", cmd_certify);
    add("nf", "normal form of an expression", cmd_nf)->add_option("expr", o.exprs)->required();
    add("mul", "reduced product of expressions", cmd_mul)->add_option("expr", o.exprs)->required();
    add("coact", "gauge coaction of an expression", cmd_coact)->add_option("expr", o.exprs)->required();
    auto* coinv = add("coinv", "coinvariants up to a degree", cmd_coinv);
    coinv->add_option("--degree", o.degree);
    coinv->add_option("--omega", o.oracle_omega, "rational w for the dimension oracle (default 3/2)");
    add("hilbert", "normal word counts per degree", cmd_hilbert)->add_option("--degree", o.degree);
    add("loop-check", "trivial loop identities", cmd_loop_check)->add_option("word", o.exprs, "letters, id or id^-1");
    add("specialize", "relators at a rational w", cmd_specialize)->add_option("--omega", o.omega);
    auto* ev = add("eval", "evaluate at an SL2 point (w = 1, U-entries)", cmd_eval);
    ev->add_option("--points", o.points_file)->required();
    ev->add_option("--spin", o.spin, "id=0|1,...");
    ev->add_option("expr", o.exprs);
    add("spin-check", "parity of relation words", cmd_spin_check)->add_option("--spin", o.spin, "id=0|1,...");

    try {
        app.parse(argc, argv);
    } catch (const CLI::CallForHelp& e) {
        return app.exit(e);
    } catch (const CLI::CallForAllHelp& e) {
        return app.exit(e);
    } catch (const CLI::ParseError& e) {
        print_error("parse", e.what(), "command line");
        return static_cast<int>(ErrorCode::parse);
    }
    try {
        for (const auto& [c, h] : commands)
            if (c->parsed()) return h(o);
    } catch (const Error& e) {
        print_error(code_name(e.code()), e.what(), e.context());
        return static_cast<int>(e.code());
    } catch (const std::exception& e) {
        print_error("internal", e.what(), "");
        return 1;
    }
    return 0;
}
