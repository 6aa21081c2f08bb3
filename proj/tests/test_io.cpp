#include "doctest.h"

#include "supercoho/io.hpp"

#include <fstream>
#include <filesystem>

using namespace supercoho;

TEST_CASE("rationals and matrices") {
    CHECK(to_json(Rat(-3, 6)) == "-1/2");
    CHECK(to_json(Rat(4)) == "4");
    CHECK(rat_from_json("6/4") == Rat(3, 2));
    CHECK(rat_from_json(7) == Rat(7));
    CHECK_THROWS_AS(rat_from_json("1/0"), ParseError);
    CHECK_THROWS_AS(rat_from_json(1.5), ParseError);

    Mat m = Mat::from_dense({{1, 0, -2}, {0, 0, 3}});
    m.set(0, 1, Rat(1, 3));
    Json j = to_json(m);
    CHECK(j["rows"] == 2);
    CHECK(j["entries"][1] == Json::array({0, 1, "1/3"}));
    CHECK(mat_from_json(j) == m);
    CHECK(mat_from_json(Json::parse(j.dump())) == m);
    CHECK_THROWS_AS(mat_from_json(Json{{"rows", 1}, {"cols", 1}, {"entries", {{3, 0, "1"}}}}), ParseError);
}

TEST_CASE("algebra round trip") {
    for (auto g : {build_gl(1, 1), build_gl(2, 1), build_W(2), build_S(2).own()}) {
        Json j = algebra_to_json(*g);
        auto back = algebra_from_json(Json::parse(j.dump()));
        CHECK(same_algebra(*g, *back));
        CHECK(back->tag() == g->tag());
        CHECK(algebra_to_json(*back) == j);
    }
    CHECK(parse_algebra_ref("gl:2,2")->dim() == 16);
    CHECK(parse_algebra_ref(" w:3 ")->dim() == 24);
    CHECK(parse_algebra_ref("s:3")->dim() == 17);
    CHECK_THROWS_AS(parse_algebra_ref("sp:4"), ParseError);
    CHECK_THROWS_AS(parse_algebra_ref("gl:2"), ParseError);
    CHECK_THROWS_AS(parse_algebra_ref("gl:0,1"), ParseError);
    CHECK_THROWS_AS(parse_algebra_ref("gl:a,1"), ParseError);
    // a bracket table violating Jacobi-free checks (parity) is rejected by the constructor
    Json bad = algebra_to_json(*build_gl(1, 1));
    bad["basis"][0]["parity"] = "odd";
    CHECK_THROWS(algebra_from_json(bad));
}

TEST_CASE("module round trip and expressions") {
    auto g = build_gl(1, 1);
    for (const char* expr : {"trivial", "natural", "dual", "adjoint", "kac:-1,1", "dualkac:-1|1", "one:2,-2",
                             "natural*dual", "natural+trivial", "natural*dual+kac:0,0"}) {
        Supermodule m = parse_module_expr(expr, g);
        Json j = module_to_json(m);
        Supermodule back = module_from_json(Json::parse(j.dump()), g);
        CHECK(back.algebra() == g);
        CHECK(back.space() == m.space());
        CHECK(back.actions() == m.actions());
        CHECK(back.weights() == m.weights());
        CHECK(module_to_json(back) == j);
    }
    CHECK(parse_module_expr("natural*dual", g).dim() == 4);
    CHECK(parse_module_expr("natural+natural*natural", g).dim() == 6);
    CHECK_THROWS_AS(parse_module_expr("kac", g), ParseError);
    CHECK_THROWS_AS(parse_module_expr("kac:1,2,3", g), ParseError);
    CHECK_THROWS_AS(parse_module_expr("spinor", g), ParseError);
    CHECK_THROWS_AS(parse_module_expr("natural*", g), ParseError);

    // modules over a non-builtin algebra carry it inline
    auto s = build_S(2).own();
    Json sj = module_to_json(natural_module(build_gl(1, 1)));
    CHECK(sj["algebra"] == "gl:1,1");
    Json tj = module_to_json(trivial_module(s));
    CHECK(tj["algebra"].is_object());
    CHECK(module_from_json(tj).dim() == 1);

    // attaching to the wrong algebra is refused
    CHECK_THROWS_AS(module_from_json(sj, build_gl(2, 1)), ParseError);
    // invalid action is rejected by module verification
    Json broken = module_to_json(natural_module(g));
    broken["action"]["E12"]["entries"] = Json::array({Json::array({0, 1, "2"})});
    CHECK_THROWS(module_from_json(broken, g));
}

TEST_CASE("files") {
    auto dir = std::filesystem::temp_directory_path() / "supercoho_io_test";
    std::filesystem::create_directories(dir);
    auto g = build_gl(1, 1);
    auto path = (dir / "k.json").string();
    write_json_file(path, module_to_json(parse_module_expr("dualkac:-1,1", g)));
    auto m = parse_module_expr("@" + path + "*natural", g);
    CHECK(m.dim() == 4);
    CHECK_THROWS_AS(parse_module_expr("@" + (dir / "missing.json").string(), g), ParseError);
    {
        std::ofstream out(dir / "bad.json");
        out << "{ not json";
    }
    CHECK_THROWS_AS(read_json_file((dir / "bad.json").string()), ParseError);
    std::filesystem::remove_all(dir);
}
