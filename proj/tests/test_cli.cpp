#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include "l2b/cli.hpp"
#include "l2b/examples.hpp"
#include "testutil.hpp"

#include <json.hpp>

#include <cstdio>
#include <fstream>
#include <sstream>

using namespace l2b;
using namespace l2b::testutil;

namespace {

std::string slurp(const std::string& path) {
    std::ifstream in(path, std::ios::binary);
    REQUIRE(in.good());
    std::ostringstream ss;
    ss << in.rdbuf();
    return ss.str();
}

std::string golden_dir() {
#ifdef L2B_GOLDEN_DIR
    return L2B_GOLDEN_DIR;
#else
    return "tests/golden";
#endif
}

int run(std::vector<std::string> args) {
    std::vector<const char*> argv{"l2b"};
    for (auto& a : args) argv.push_back(a.c_str());
    return run_cli(static_cast<int>(argv.size()), argv.data());
}

std::string temp_path(const std::string& name) {
    return std::string("/tmp/l2b_test_") + name;
}

}  // namespace

TEST_CASE("parse/serialize roundtrip is the identity on canonical files") {
    for (const char* name : {"string_so3.json", "matrix_u2.json"}) {
        std::string text = slurp(golden_dir() + "/" + name);
        StructureFile f = parse_structure_file(text);
        CHECK(serialize_structure_file(f) == text);
        // a second trip through the parser stays fixed
        CHECK(serialize_structure_file(parse_structure_file(serialize_structure_file(f))) == text);
    }
}

TEST_CASE("minimal file parses to the all-zero structure") {
    StructureFile f = parse_structure_file(R"({"version":"1","space":{"dim_g":2,"dim_theta":1}})");
    CHECK(f.space.dim_g == 2);
    CHECK_FALSE(f.has_any_tensor());
    CHECK(algebra_from_file(f) == Lie2AlgebraData::zero(f.space));
}

TEST_CASE("schema violations carry diagnostics") {
    // unknown key
    CHECK_THROWS_WITH_AS(
        parse_structure_file(R"({"version":"1","space":{"dim_g":1,"dim_theta":0},"oops":1})"),
        doctest::Contains("unknown key 'oops'"), ParseError);
    // unknown tensor
    CHECK_THROWS_WITH_AS(
        parse_structure_file(
            R"({"version":"1","space":{"dim_g":1,"dim_theta":0},"tensors":{"brackett":[]}})"),
        doctest::Contains("unknown key 'brackett'"), ParseError);
    // shape mismatch
    CHECK_THROWS_WITH_AS(
        parse_structure_file(
            R"({"version":"1","space":{"dim_g":1,"dim_theta":1},"tensors":{"phi":[["1","2"]]}})"),
        doctest::Contains("tensors.phi[0]"), ParseError);
    // floats are rejected
    CHECK_THROWS_WITH_AS(
        parse_structure_file(
            R"({"version":"1","space":{"dim_g":1,"dim_theta":1},"tensors":{"phi":[[0.5]]}})"),
        doctest::Contains("rational string"), ParseError);
    // non-skew bracket: diagonal entry
    CHECK_THROWS_WITH_AS(
        parse_structure_file(
            R"({"version":"1","space":{"dim_g":1,"dim_theta":0},"tensors":{"bracket":[[["1"]]]}})"),
        doctest::Contains("skew"), ParseError);
    // bad version
    CHECK_THROWS_AS(
        parse_structure_file(R"({"version":"2","space":{"dim_g":1,"dim_theta":0}})"), ParseError);
    // duplicate labels
    CHECK_THROWS_AS(parse_structure_file(
                        R"({"version":"1","space":{"dim_g":2,"dim_theta":0,"labels_g":["a","a"]}})"),
                    ParseError);
}

TEST_CASE("expression grammar") {
    SpaceSpec sp(2, 2);
    SymElement x0 = SymElement::generator(sp, {Role::G, 0});
    SymElement u1 = SymElement::generator(sp, {Role::Theta, 1});

    CHECK(parse_element_expr(sp, "g0") == x0);
    CHECK(parse_element_expr(sp, "-g0") == -x0);
    CHECK(parse_element_expr(sp, "3/2 g0") == Rational(3, 2) * x0);
    CHECK(parse_element_expr(sp, "2*g0*t1") == Rational(2) * sym_product(x0, u1));
    CHECK(parse_element_expr(sp, "g0 + t1 - t1") == x0);
    CHECK(parse_element_expr(sp, "t1*t1").is_zero());  // odd square
    CHECK(parse_element_expr(sp, "1/2 ts0⊙g0") ==
          Rational(1, 2) * SymElement::monomial(sp, {{Role::ThetaStar, 0}, {Role::G, 0}}));

    CHECK_THROWS_WITH_AS(parse_element_expr(sp, "g9"), doctest::Contains("out of range"), ParseError);
    CHECK_THROWS_WITH_AS(parse_element_expr(sp, "g0 + "), doctest::Contains("position"), ParseError);
    CHECK_THROWS_WITH_AS(parse_element_expr(sp, "q0"), doctest::Contains("unknown"), ParseError);
    CHECK_THROWS_AS(parse_element_expr(sp, ""), ParseError);

    // parse(render(e)) == e on random elements
    Rng rng(601);
    for (int i = 0; i < 60; ++i) {
        SymElement e = rand_homogeneous(rng, sp) + rand_homogeneous(rng, sp);
        CHECK(parse_element_expr(sp, e.to_string()) == e);
    }
}

TEST_CASE("golden examples regenerate byte-identically and verify") {
    std::string out = temp_path("string.json");
    REQUIRE(run({"example", "string", "--hbar", "1", "--out", out}) == 0);
    CHECK(slurp(out) == slurp(golden_dir() + "/string_so3.json"));
    CHECK(run({"verify", out, "--mode", "bialgebra"}) == 0);

    std::string out2 = temp_path("u2.json");
    REQUIRE(run({"example", "matrix", "--n", "2", "--out", out2}) == 0);
    CHECK(slurp(out2) == slurp(golden_dir() + "/matrix_u2.json"));
    CHECK(run({"verify", out2, "--mode", "bialgebra-cm"}) == 0);
    CHECK(run({"verify", out2, "--mode", "matched-pair"}) == 0);
}

TEST_CASE("canonical element rendering matches the golden transcript") {
    StructureFile f = parse_structure_file(slurp(golden_dir() + "/string_so3.json"));
    BialgebraElement eps = assemble_bialgebra(algebra_from_file(f), coalgebra_from_file(f));
    std::string golden = slurp(golden_dir() + "/string_element.txt");
    while (!golden.empty() && golden.back() == '\n') golden.pop_back();
    CHECK(eps.eps.to_string() == golden);
}

TEST_CASE("exit codes: pass 0, verification failure 1, input error 2") {
    std::string good = temp_path("good.json");
    REQUIRE(run({"example", "string", "--hbar", "1/2", "--out", good}) == 0);
    CHECK(run({"verify", good, "--mode", "bialgebra"}) == 0);

    // break the cobracket: a non-coadjoint delta makes the mixed part nonzero
    StructureFile f = parse_structure_file(slurp(good));
    f.delta->at(0, 1, 0) += Rational(1);
    std::string bad = temp_path("bad.json");
    std::ofstream(bad) << serialize_structure_file(f);
    CHECK(run({"verify", bad, "--mode", "bialgebra"}) == 1);

    CHECK(run({"verify", "/nonexistent/file.json", "--mode", "algebra"}) == 2);
    std::string junk = temp_path("junk.json");
    std::ofstream(junk) << "{]";
    CHECK(run({"verify", junk, "--mode", "algebra"}) == 2);
    // tensors foreign to the mode are an input error
    CHECK(run({"verify", good, "--mode", "crossed-module"}) == 2);
    // CLI misuse
    CHECK(run({"verify"}) == 2);
    CHECK(run({"frobnicate", "x"}) == 2);
}

TEST_CASE("convert roundtrips byte-identically") {
    std::string u2 = temp_path("conv_u2.json");
    REQUIRE(run({"example", "matrix", "--n", "2", "--out", u2}) == 0);
    std::string eps = temp_path("conv_eps.json");
    REQUIRE(run({"convert", u2, "--direction", "cm-to-epsilon", "--out", eps}) == 0);
    std::string back = temp_path("conv_back.json");
    REQUIRE(run({"convert", eps, "--direction", "epsilon-to-cm", "--out", back}) == 0);
    CHECK(slurp(back) == slurp(u2));

    std::string el = temp_path("conv_el.json");
    REQUIRE(run({"convert", eps, "--direction", "maps-to-element", "--out", el}) == 0);
    std::string maps = temp_path("conv_maps.json");
    REQUIRE(run({"convert", el, "--direction", "element-to-maps", "--out", maps}) == 0);
    CHECK(slurp(maps) == slurp(eps));

    // non-strict input is rejected for the cm direction
    std::string weak = temp_path("conv_weak.json");
    REQUIRE(run({"example", "string", "--hbar", "1", "--out", weak}) == 0);
    CHECK(run({"convert", weak, "--direction", "epsilon-to-cm"}) == 2);
}

TEST_CASE("bracket command") {
    std::string f = temp_path("brk.json");
    REQUIRE(run({"example", "string", "--hbar", "1", "--out", f}) == 0);
    std::string out = temp_path("brk_out.txt");
    REQUIRE(run({"bracket", f, "g0", "gs0", "--out", out}) == 0);
    CHECK(slurp(out) == "1\n");
    REQUIRE(run({"bracket", f, "gs0", "g0", "--out", out}) == 0);
    CHECK(slurp(out) == "-1\n");
    REQUIRE(run({"bracket", f, "eps", "eps", "--out", out}) == 0);
    CHECK(slurp(out) == "0\n");
    CHECK(run({"bracket", f, "g0 +", "g0"}) == 2);  // parse error
}

TEST_CASE("machine-format report is well-formed JSON with a pass verdict") {
    std::string f = temp_path("machine.json");
    REQUIRE(run({"example", "string", "--hbar", "1", "--out", f}) == 0);
    std::string rep = temp_path("machine_rep.json");
    REQUIRE(run({"verify", f, "--mode", "bialgebra", "--format", "machine", "--out", rep}) == 0);
    auto j = nlohmann::json::parse(slurp(rep));
    CHECK(j["command"] == "verify");
    CHECK(j["mode"] == "bialgebra");
    CHECK(j["pass"] == true);
    CHECK(j["checks"].is_array());
    CHECK(j["checks"].size() >= 4);
    CHECK(j.contains("elapsed_ms"));
}

TEST_CASE("coalgebra mode verifies the coalgebra tensors alone") {
    std::string f = temp_path("coalg_src.json");
    REQUIRE(run({"example", "string", "--hbar", "1", "--out", f}) == 0);
    StructureFile full = parse_structure_file(slurp(f));
    StructureFile co;
    co.space = full.space;
    co.delta = full.delta;
    std::string cf = temp_path("coalg.json");
    std::ofstream(cf) << serialize_structure_file(co);
    CHECK(run({"verify", cf, "--mode", "coalgebra"}) == 0);
    // an omega dual to a non-Jacobi bracket fails the co-master equation
    StructureFile badco;
    badco.space = SpaceSpec(0, 3);
    Tensor3 om(3, 3, 3);
    om.at(2, 0, 1) = Rational(-1);  // dual bracket [f0,f1] = f2
    om.at(2, 1, 0) = Rational(1);
    om.at(0, 0, 2) = Rational(-1);  // dual bracket [f0,f2] = f0, breaking Jacobi
    om.at(0, 2, 0) = Rational(1);
    badco.omega = om;
    std::ofstream(cf) << serialize_structure_file(badco);
    CHECK(run({"verify", cf, "--mode", "coalgebra", "--out", temp_path("co_rep.txt")}) == 1);
}

TEST_CASE("basis labels survive the file roundtrip") {
    StructureFile f;
    f.space = SpaceSpec(2, 1, {"E", "F"}, {"H"});
    StructureFile g = parse_structure_file(serialize_structure_file(f));
    CHECK(g.space.labels_g == std::vector<std::string>{"E", "F"});
    CHECK(g.space.labels_theta == std::vector<std::string>{"H"});
    CHECK(serialize_structure_file(g) == serialize_structure_file(f));
}

TEST_CASE("eta tensor codec roundtrips through files") {
    Rng rng(607);
    SpaceSpec sp(2, 3);
    Tensor4 eta(3, 3, 3, 2);
    for (int i = 0; i < 2; ++i) {
        Rational v = rand_nonzero_rational(rng);
        int perm[6][3] = {{0, 1, 2}, {1, 2, 0}, {2, 0, 1}, {1, 0, 2}, {0, 2, 1}, {2, 1, 0}};
        for (int p = 0; p < 6; ++p)
            eta.at(perm[p][0], perm[p][1], perm[p][2], i) = p < 3 ? v : -v;
    }
    SymElement el = eta_from_tensor(sp, eta);
    CHECK_FALSE(el.is_zero());
    CHECK(eta_to_tensor(el) == eta);

    StructureFile f;
    f.space = sp;
    f.eta = eta;
    StructureFile g = parse_structure_file(serialize_structure_file(f));
    REQUIRE(g.eta.has_value());
    CHECK(*g.eta == eta);
}
