#include <doctest.h>

#include <json.hpp>

#include "bruhat/json_io.hpp"
#include "bruhat/suites.hpp"

using namespace bruhat;
using nlohmann::json;

TEST_CASE("padic json round trip") {
    PAdic a = PAdic::from_rational(9, 2, 3, 4);
    json j = padic_to_json(a);
    CHECK(j["val"] == 2);
    CHECK(j["digits"] == json::array({2, 1, 1, 1}));
    PAdic back = padic_from_json(j, 3, 4);
    CHECK(eq_to_precision(a, back));
    CHECK(back.valuation() == 2);

    PAdic z = PAdic::zero(5, 8);
    json jz = padic_to_json(z);
    CHECK(padic_from_json(jz, 5, 8).is_zero());

    PAdic r = padic_from_json(json("9/2"), 3, 4);
    CHECK(eq_to_precision(r, a));
}

TEST_CASE("matrix json accepts rational strings") {
    json j = json::parse(R"([["9","0","1"],["1","0","0"],["3","1","0"]])");
    PMatrix z = matrix_from_json(j, 3, 32);
    CHECK(z.at(0, 0).valuation() == 2);
    CHECK(z.at(2, 0).valuation() == 1);
    json out = matrix_to_json(z);
    PMatrix back = matrix_from_json(out, 3, 32);
    CHECK(mat_eq(z, back));

    RBDecomposition d = rb_decompose(z);
    json dj = decomposition_to_json(d, 32);
    CHECK(dj["w"] == "2,3,1");
    CHECK(dj["precision"] == 32);
    CHECK(dj.contains("r"));
    CHECK(dj.contains("b"));
}

TEST_CASE("character json round trip") {
    json j = json::parse(
        R"({"p":3, "m":1, "chi":[{"c":"1","e":0},{"c":"1","e":1},{"c":"1","e":0}]})");
    Character chi = character_from_json(j);
    CHECK(chi.p() == 3);
    CHECK(chi.n() == 3);
    CHECK(chi.e[1] == 1);
    Character back = character_from_json(character_to_json(chi));
    CHECK(back.e == chi.e);
    for (int i = 0; i < 3; ++i) CHECK(back.c[i] == chi.c[i]);
}

TEST_CASE("RunConfig round trip") {
    RunConfig cfg;
    cfg.p = 5;
    cfg.n = 4;
    cfg.precision = 32;
    cfg.seed = 99;
    cfg.trials = 7;
    cfg.preset = OrderingPreset::PaperN3;
    cfg.chi = default_character(5, 4);
    cfg.bounds.val_window = 3;
    cfg.level = 2;
    RunConfig back = RunConfig::from_json(cfg.to_json());
    CHECK(back.to_json() == cfg.to_json());
    CHECK(back.p == 5);
    CHECK(back.preset == OrderingPreset::PaperN3);
    CHECK(back.level == 2);
}
