#include "l2b/cli.hpp"

#include "l2b/examples.hpp"

#include <CLI11.hpp>
#include <json.hpp>

#include <fstream>
#include <iostream>
#include <sstream>

namespace l2b {

namespace {

// ---- element expression grammar ---------------------------------------------------

struct Lexer {
    const std::string& s;
    size_t pos = 0;

    void skip_ws() {
        while (pos < s.size() && (s[pos] == ' ' || s[pos] == '\t' || s[pos] == '\n')) ++pos;
    }
    bool eof() {
        skip_ws();
        return pos >= s.size();
    }
    char peek() {
        skip_ws();
        return pos < s.size() ? s[pos] : '\0';
    }
    [[noreturn]] void fail(const std::string& msg) const {
        throw ParseError("element expression, position " + std::to_string(pos) + ": " + msg);
    }
    bool consume(char c) {
        skip_ws();
        if (pos < s.size() && s[pos] == c) {
            ++pos;
            return true;
        }
        return false;
    }
    // the product sign: '*' or the circled-dot used by the renderer
    bool consume_product_sign() {
        skip_ws();
        if (consume('*')) return true;
        const std::string odot = "⊙";
        if (s.compare(pos, odot.size(), odot) == 0) {
            pos += odot.size();
            return true;
        }
        return false;
    }
};

SymElement named_element(const std::string& name, const StructureFile* file, Lexer& lex) {
    if (!file) lex.fail("no structure file context for named element '" + name + "'");
    SymElement l = algebra_to_element(algebra_from_file(*file));
    SymElement c = coalgebra_to_element(coalgebra_from_file(*file));
    if (name == "l") return l;
    if (name == "c") return c;
    if (name == "eps") return l + c - c.component(1, 0, 0, 1);
    lex.fail("unknown name '" + name + "' (expected eps, l or c)");
}

SymElement parse_term(const SpaceSpec& sp, Lexer& lex, const StructureFile* file) {
    SymElement acc = SymElement::one(sp);
    bool saw_factor = false;
    for (;;) {
        lex.skip_ws();
        if (lex.pos >= lex.s.size()) break;
        char ch = lex.s[lex.pos];
        if (ch == '+' || ch == '-') break;
        if (ch >= '0' && ch <= '9') {
            size_t start = lex.pos;
            while (lex.pos < lex.s.size() &&
                   ((lex.s[lex.pos] >= '0' && lex.s[lex.pos] <= '9') || lex.s[lex.pos] == '/'))
                ++lex.pos;
            Rational r;
            try {
                r = Rational::parse(lex.s.substr(start, lex.pos - start));
            } catch (const std::exception& e) {
                lex.pos = start;
                lex.fail(e.what());
            }
            acc = r * acc;
        } else if (ch >= 'a' && ch <= 'z') {
            size_t start = lex.pos;
            while (lex.pos < lex.s.size() && lex.s[lex.pos] >= 'a' && lex.s[lex.pos] <= 'z')
                ++lex.pos;
            std::string word = lex.s.substr(start, lex.pos - start);
            bool has_index = lex.pos < lex.s.size() && lex.s[lex.pos] >= '0' && lex.s[lex.pos] <= '9';
            if (has_index) {
                size_t istart = lex.pos;
                while (lex.pos < lex.s.size() && lex.s[lex.pos] >= '0' && lex.s[lex.pos] <= '9')
                    ++lex.pos;
                int index = std::stoi(lex.s.substr(istart, lex.pos - istart));
                Role role;
                if (word == "gs") role = Role::GStar;
                else if (word == "ts") role = Role::ThetaStar;
                else if (word == "t") role = Role::Theta;
                else if (word == "g") role = Role::G;
                else {
                    lex.pos = start;
                    lex.fail("unknown generator prefix '" + word + "'");
                }
                if (index >= sp.dim_of(role)) {
                    lex.pos = start;
                    lex.fail("generator " + word + std::to_string(index) + " out of range");
                }
                acc = sym_product(acc, SymElement::generator(sp, {role, index}));
            } else {
                acc = sym_product(acc, named_element(word, file, lex));
            }
        } else {
            lex.fail(std::string("unexpected character '") + ch + "'");
        }
        saw_factor = true;
        lex.consume_product_sign();  // optional between factors
    }
    if (!saw_factor) lex.fail("expected a term");
    return acc;
}

SymElement parse_expr(const SpaceSpec& sp, Lexer& lex, const StructureFile* file) {
    SymElement acc(sp);
    bool first = true;
    for (;;) {
        int sign = 1;
        if (lex.consume('-')) sign = -1;
        else if (lex.consume('+')) sign = 1;
        else if (!first) lex.fail("expected '+' or '-'");
        if (lex.eof()) lex.fail("expected a term");
        SymElement term = parse_term(sp, lex, file);
        acc += sign == 1 ? term : -term;
        first = false;
        if (lex.eof()) break;
    }
    return acc;
}

}  // namespace

SymElement parse_element_expr(const SpaceSpec& sp, const std::string& text,
                              const StructureFile* file) {
    Lexer lex{text};
    if (lex.eof()) throw ParseError("element expression: empty input");
    return parse_expr(sp, lex, file);
}

// ---- file -> structure data --------------------------------------------------------

Lie2AlgebraData algebra_from_file(const StructureFile& f) {
    Lie2AlgebraData d = Lie2AlgebraData::zero(f.space);
    if (f.phi) d.phi = *f.phi;
    if (f.bracket) d.bracket = *f.bracket;
    if (f.action) d.action = *f.action;
    if (f.homotopy_h) d.homotopy = *f.homotopy_h;
    return d;
}

Lie2CoalgebraData coalgebra_from_file(const StructureFile& f) {
    Lie2CoalgebraData d = Lie2CoalgebraData::zero(f.space);
    if (f.phi) d.phi = *f.phi;
    if (f.delta) d.delta = *f.delta;
    if (f.omega) d.omega = *f.omega;
    if (f.eta) d.eta = eta_from_tensor(f.space, *f.eta);
    return d;
}

InducedCrossedModule primal_cm_from_file(const StructureFile& f) {
    int g = f.space.dim_g, t = f.space.dim_theta;
    LieAlgebraConstants target(g);
    if (f.bracket) target.c = *f.bracket;
    Tensor3 action = f.action ? *f.action : Tensor3(g, t, t);
    RatMat phi = f.phi ? *f.phi : zero_matrix(g, t);
    return induce_source_bracket(target, action, phi);
}

InducedCrossedModule dual_cm_from_file(const StructureFile& f) {
    int g = f.space.dim_g, t = f.space.dim_theta;
    LieAlgebraConstants target(t);
    if (f.dual_bracket) target.c = *f.dual_bracket;
    Tensor3 action = f.dual_action ? *f.dual_action : Tensor3(t, g, g);
    RatMat phi = f.phi ? *f.phi : zero_matrix(g, t);
    RatMat phi_dual = zero_matrix(t, g);
    for (int a = 0; a < t; ++a)
        for (int p = 0; p < g; ++p) phi_dual[a][p] = -phi[p][a];
    return induce_source_bracket(target, action, phi_dual);
}

namespace {

// ---- command plumbing ---------------------------------------------------------------

using ojson = nlohmann::ordered_json;

std::string read_file(const std::string& path) {
    std::ifstream in(path, std::ios::binary);
    if (!in) throw ParseError("cannot open file '" + path + "'");
    std::ostringstream ss;
    ss << in.rdbuf();
    return ss.str();
}

void write_output(const std::string& out_path, const std::string& content) {
    if (out_path.empty()) {
        std::cout << content;
        if (!content.empty() && content.back() != '\n') std::cout << "\n";
        return;
    }
    std::ofstream out(out_path, std::ios::binary);
    if (!out) throw ParseError("cannot write file '" + out_path + "'");
    out << content;
}

ojson report_to_json(const VerificationReport& rep) {
    ojson checks = ojson::array();
    for (const auto& c : rep.checks) {
        ojson witnesses = ojson::array();
        for (const auto& w : c.witnesses) witnesses.push_back({{"where", w.where}, {"defect", w.defect}});
        checks.push_back({{"id", c.id}, {"pass", c.pass()}, {"witnesses", witnesses}});
    }
    return {{"pass", rep.pass()}, {"elapsed_ms", rep.elapsed_ms}, {"checks", checks}};
}

const std::vector<std::string>& mode_tensors(const std::string& mode) {
    static const std::map<std::string, std::vector<std::string>> table = {
        {"algebra", {"phi", "bracket", "action", "homotopy_h"}},
        {"coalgebra", {"phi", "delta", "omega", "eta"}},
        {"bialgebra", {"phi", "bracket", "action", "homotopy_h", "delta", "omega", "eta"}},
        {"crossed-module", {"phi", "bracket", "action"}},
        {"bialgebra-cm", {"phi", "bracket", "action", "dual_bracket", "dual_action"}},
        {"matched-pair", {"phi", "bracket", "dual_bracket", "action", "dual_action"}},
    };
    auto it = table.find(mode);
    if (it == table.end()) throw ParseError("unknown mode '" + mode + "'");
    return it->second;
}

void require_tensors_relevant(const StructureFile& f, const std::string& mode) {
    auto& allowed = mode_tensors(mode);
    auto check = [&](bool present, const char* name) {
        if (!present) return;
        for (const auto& a : allowed)
            if (a == name) return;
        throw ParseError(std::string("tensor '") + name + "' is not used by mode '" + mode +
                         "'; pick the matching --mode");
    };
    check(f.phi.has_value(), "phi");
    check(f.bracket.has_value(), "bracket");
    check(f.action.has_value(), "action");
    check(f.homotopy_h.has_value(), "homotopy_h");
    check(f.delta.has_value(), "delta");
    check(f.omega.has_value(), "omega");
    check(f.eta.has_value(), "eta");
    check(f.dual_bracket.has_value(), "dual_bracket");
    check(f.dual_action.has_value(), "dual_action");
    if (f.element) throw ParseError("'element' is not used by verify; use convert");
}

BialgebraCrossedModule bcm_from_file(const StructureFile& f, VerificationReport& pre) {
    InducedCrossedModule primal = primal_cm_from_file(f);
    InducedCrossedModule dual = dual_cm_from_file(f);
    pre.merge(primal.preconditions, "cm-build/");
    pre.merge(dual.preconditions, "dual-cm-build/");
    return {primal.cm, dual.cm};
}

int cmd_verify(const std::string& path, const std::string& mode, const std::string& format,
               const std::string& out) {
    StructureFile f = parse_structure_file(read_file(path));
    require_tensors_relevant(f, mode);
    VerificationReport rep;
    if (mode == "algebra") {
        rep = verify_weak_lie2_algebra(algebra_from_file(f));
    } else if (mode == "coalgebra") {
        rep = verify_weak_lie2_coalgebra(coalgebra_from_file(f));
    } else if (mode == "bialgebra") {
        rep = verify_bialgebra(assemble_bialgebra(algebra_from_file(f), coalgebra_from_file(f)));
    } else if (mode == "crossed-module") {
        InducedCrossedModule r = primal_cm_from_file(f);
        rep = r.preconditions;
        if (r.preconditions.pass()) rep.merge(verify_crossed_module(r.cm));
    } else if (mode == "bialgebra-cm") {
        VerificationReport pre;
        BialgebraCrossedModule bcm = bcm_from_file(f, pre);
        rep = pre;
        if (pre.pass()) rep.merge(verify_bialgebra_cm(bcm));
    } else if (mode == "matched-pair") {
        VerificationReport pre;
        BialgebraCrossedModule bcm = bcm_from_file(f, pre);
        rep = matched_pair_defects(matched_pair_from_bcm(bcm));
    } else {
        throw ParseError("unknown mode '" + mode + "'");
    }

    std::string rendered;
    if (format == "machine") {
        ojson j = report_to_json(rep);
        j["command"] = "verify";
        j["mode"] = mode;
        rendered = j.dump(2) + "\n";
    } else {
        rendered = rep.to_text() + (rep.pass() ? "PASS\n" : "FAIL\n");
    }
    write_output(out, rendered);
    return rep.pass() ? 0 : 1;
}

StructureFile bcm_to_file(const SpaceSpec& sp, const BialgebraCrossedModule& bcm) {
    StructureFile out;
    out.space = sp;
    out.phi = bcm.cm.phi;
    out.bracket = bcm.cm.target.c;
    out.action = bcm.cm.action;
    out.dual_bracket = bcm.dual_cm.target.c;
    out.dual_action = bcm.dual_cm.action;
    return out;
}

StructureFile maps_to_file(const SpaceSpec& sp, const Lie2AlgebraData& alg,
                           const Lie2CoalgebraData& co) {
    StructureFile out;
    out.space = sp;
    out.phi = alg.phi;
    out.bracket = alg.bracket;
    out.action = alg.action;
    out.homotopy_h = alg.homotopy;
    out.delta = co.delta;
    out.omega = co.omega;
    out.eta = eta_to_tensor(co.eta);
    return out;
}

int cmd_convert(const std::string& path, const std::string& direction, const std::string& out) {
    StructureFile f = parse_structure_file(read_file(path));
    if (direction == "maps-to-element") {
        BialgebraElement eps = assemble_bialgebra(algebra_from_file(f), coalgebra_from_file(f));
        StructureFile result;
        result.space = f.space;
        result.element = eps.eps.to_string();
        write_output(out, serialize_structure_file(result));
        return 0;
    }
    if (direction == "element-to-maps") {
        if (!f.element) throw ParseError("element-to-maps: file has no 'element'");
        SymElement e = parse_element_expr(f.space, *f.element);
        BialgebraElement eps = BialgebraElement::from_element(e);
        StructureFile result = maps_to_file(f.space, project_algebra(eps), project_coalgebra(eps));
        write_output(out, serialize_structure_file(result));
        return 0;
    }
    if (direction == "cm-to-epsilon") {
        VerificationReport pre;
        BialgebraCrossedModule bcm = bcm_from_file(f, pre);
        if (!pre.pass())
            throw ParseError("cm-to-epsilon: file does not define crossed modules:\n" + pre.to_text());
        BialgebraElement eps = bcm_to_lie2bialgebra(bcm);  // verifies, rejects invalid input
        StructureFile result = maps_to_file(f.space, project_algebra(eps), project_coalgebra(eps));
        write_output(out, serialize_structure_file(result));
        return 0;
    }
    if (direction == "epsilon-to-cm") {
        BialgebraElement eps;
        if (f.element)
            eps = BialgebraElement::from_element(parse_element_expr(f.space, *f.element));
        else
            eps = assemble_bialgebra(algebra_from_file(f), coalgebra_from_file(f));
        if (!eps.is_strict)
            throw ParseError("epsilon-to-cm: element is not strict (homotopy components present)");
        BialgebraCrossedModule bcm = lie2bialgebra_to_bcm(eps);
        write_output(out, serialize_structure_file(bcm_to_file(f.space, bcm)));
        return 0;
    }
    throw ParseError("unknown direction '" + direction + "'");
}

int cmd_example(const std::string& name, const std::string& hbar, int n, const std::string& seed,
                const std::string& out) {
    if (name == "string") {
        LieAlgebraConstants so3 = LieAlgebraConstants::so3();
        RatVec x(3);
        x[0] = Rational(1);
        BialgebraElement eps = string_lie2_bialgebra(so3, x, Rational::parse(hbar));
        StructureFile result =
            maps_to_file(SpaceSpec(3, 1), project_algebra(eps), project_coalgebra(eps));
        write_output(out, serialize_structure_file(result));
        return 0;
    }
    if (name == "matrix") {
        if (n != 2 && n != 3) throw ParseError("example matrix: --n must be 2 or 3");
        BialgebraCrossedModule bcm = matrix_example(n);
        write_output(out, serialize_structure_file(bcm_to_file(bcm.space(), bcm)));
        return 0;
    }
    if (name == "trivial") {
        if (seed.empty()) throw ParseError("example trivial: --seed <file> is required");
        StructureFile sf = parse_structure_file(read_file(seed));
        if (sf.space.dim_g != sf.space.dim_theta)
            throw ParseError("example trivial: seed needs dim_g == dim_theta (the bialgebra "
                             "bracket sits on the g slot, its dual on the theta* slot)");
        int dim = sf.space.dim_g;
        LieAlgebraConstants theta(dim), dual(dim);
        if (sf.bracket) theta.c = *sf.bracket;
        if (sf.dual_bracket) dual.c = *sf.dual_bracket;
        BialgebraCrossedModule bcm = trivial_bcm(theta, dual);
        write_output(out, serialize_structure_file(bcm_to_file(bcm.space(), bcm)));
        return 0;
    }
    throw ParseError("unknown example '" + name + "' (expected string, trivial or matrix)");
}

int cmd_bracket(const std::string& path, const std::string& e1, const std::string& e2,
                const std::string& format, const std::string& out) {
    StructureFile f = parse_structure_file(read_file(path));
    SymElement a = parse_element_expr(f.space, e1, &f);
    SymElement b = parse_element_expr(f.space, e2, &f);
    SymElement r = big_bracket(a, b);
    if (format == "machine") {
        ojson j{{"command", "bracket"}, {"result", r.to_string()}};
        write_output(out, j.dump(2) + "\n");
    } else {
        write_output(out, r.to_string() + "\n");
    }
    return 0;
}

}  // namespace

int run_cli(int argc, const char* const* argv) {
    CLI::App app{"exact computations with 2-term graded symmetric algebras, the degree-3 "
                 "bracket, weak Lie 2-bialgebras and Lie bialgebra crossed modules"};
    app.require_subcommand(1);

    std::string file, mode = "bialgebra", format = "text", out, direction;
    std::string example_name, hbar = "1", seed;
    std::string expr1, expr2;
    int n = 2;

    CLI::App* verify = app.add_subcommand("verify", "run a verifier on a structure file");
    verify->add_option("file", file, "structure file")->required();
    verify->add_option("--mode", mode,
                       "algebra|coalgebra|bialgebra|crossed-module|bialgebra-cm|matched-pair");
    verify->add_option("--format", format, "text|machine");
    verify->add_option("--out", out, "write the report to a file");

    CLI::App* convert = app.add_subcommand("convert", "convert between maps, elements and crossed modules");
    convert->add_option("file", file, "structure file")->required();
    convert->add_option("--direction", direction,
                        "cm-to-epsilon|epsilon-to-cm|maps-to-element|element-to-maps")
        ->required();
    convert->add_option("--out", out, "write the converted file");

    CLI::App* example = app.add_subcommand("example", "emit a built-in example as a structure file");
    example->add_option("name", example_name, "string|trivial|matrix")->required();
    example->add_option("--hbar", hbar, "rational constant for the string example");
    example->add_option("--n", n, "matrix size for the matrix example (2 or 3)");
    example->add_option("--seed", seed, "seed bialgebra file for the trivial example");
    example->add_option("--out", out, "write the example file");

    CLI::App* bracket = app.add_subcommand("bracket", "evaluate the bracket of two expressions");
    bracket->add_option("file", file, "structure file fixing the space")->required();
    bracket->add_option("expr1", expr1, "first expression")->required();
    bracket->add_option("expr2", expr2, "second expression")->required();
    bracket->add_option("--format", format, "text|machine");
    bracket->add_option("--out", out, "write the result to a file");

    try {
        app.parse(argc, argv);
    } catch (const CLI::ParseError& e) {
        return app.exit(e) == 0 ? 0 : 2;
    }

    try {
        if (verify->parsed()) return cmd_verify(file, mode, format, out);
        if (convert->parsed()) return cmd_convert(file, direction, out);
        if (example->parsed()) return cmd_example(example_name, hbar, n, seed, out);
        if (bracket->parsed()) return cmd_bracket(file, expr1, expr2, format, out);
    } catch (const std::exception& e) {
        std::cerr << "error: " << e.what() << "\n";
        return 2;
    }
    return 2;
}

} // namespace l2b
