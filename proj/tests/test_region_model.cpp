#include "dstrat/curves.hpp"
#include "dstrat/region_model.hpp"
#include "dstrat/theory_config.hpp"

#include <doctest.h>

#include <cstdio>
#include <filesystem>
#include <fstream>
#include <random>

using namespace dstrat;
using cd = std::complex<double>;

namespace {

constexpr StratumKind S = StratumKind::Stable, SS = StratumKind::Semistable, UN = StratumKind::Unstable;

}  // namespace

TEST_CASE("built-in classification") {
    const auto h = builtin_theory("hurwitz");
    CHECK(classify_point(h, cd(-1, 0)) == S);
    CHECK(classify_point(h, cd(0, 3)) == SS);
    CHECK(classify_point(h, cd(1e-12, 3)) == SS);
    CHECK(classify_point(h, cd(0.5, -2)) == UN);
    CHECK(classify_point(h, SpherePoint::infinity()) == SS);

    // Far out along the negative reals the theory is stable and along the positive
    // reals unstable, so infinity lies on the boundary of both.
    for (double r : {1e3, 1e6, 1e9}) {
        CHECK(classify_point(h, cd(-r, 0)) == S);
        CHECK(classify_point(h, cd(r, 0)) == UN);
        CHECK(classify_point(h, cd(0, r)) == SS);
    }

    const auto monic = builtin_theory("hurwitz", {}, TheoryMode::Monic);
    CHECK_THROWS_AS(classify_point(monic, SpherePoint::infinity()), std::invalid_argument);

    const auto schur = builtin_theory("schur");
    CHECK(classify_point(schur, cd(0.3, 0.4)) == S);
    CHECK(classify_point(schur, cd(0.6, 0.8)) == SS);
    CHECK(classify_point(schur, cd(2, 0)) == UN);
    CHECK(classify_point(schur, SpherePoint::infinity()) == UN);

    const auto hyp = builtin_theory("hyperbolicity");
    CHECK(classify_point(hyp, cd(5, 0)) == SS);
    CHECK(classify_point(hyp, cd(5, -1)) == S);

    const auto ap = builtin_theory("aperiodicity");
    CHECK(classify_point(ap, cd(-2, 0)) == S);
    CHECK(classify_point(ap, cd(0, 0)) == SS);
    CHECK(classify_point(ap, cd(2, 0)) == UN);
    CHECK(classify_point(ap, cd(-2, 0.1)) == UN);

    const auto fen = builtin_theory("fenichel");
    CHECK(fen.region.kind() == RegionExpr::Kind::Or);
    CHECK(classify_point(fen, cd(1, 1)) == S);
    CHECK(classify_point(fen, cd(-1, 1)) == S);
    CHECK(classify_point(fen, cd(0, 1)) == SS);

    const auto poles = builtin_theory("poles", {1, 1, 2, 0});
    CHECK(classify_point(poles, cd(1, 1)) == S);
    CHECK(classify_point(poles, cd(2, 0)) == S);
    CHECK(classify_point(poles, cd(0, 0)) == UN);
    CHECK(poles.topology.s.b0 == 2);

    const auto ring = builtin_theory("annulus", {0.5, 1});
    CHECK(classify_point(ring, cd(0.75, 0)) == S);
    CHECK(classify_point(ring, cd(0.5, 0)) == SS);
    CHECK(classify_point(ring, cd(0.1, 0)) == UN);

    const auto ride = builtin_theory("ride_quality");
    CHECK(classify_point(ride, cd(-0.9, 0)) == S);
    CHECK(classify_point(ride, cd(0.9, 0)) == UN);
    CHECK(classify_point(ride, cd(-0.9, 0.45)) == UN);

    const auto diamond = builtin_theory("schur_diamond");
    CHECK(classify_point(diamond, cd(0.4, 0.4)) == S);
    CHECK(classify_point(diamond, cd(0.5, 0.5)) == SS);
    CHECK(classify_point(diamond, cd(0.6, 0.6)) == UN);

    const auto sector = builtin_theory("hurwitz_sector");
    CHECK(classify_point(sector, cd(-2, 1)) == S);
    CHECK(classify_point(sector, cd(-1, 1)) == SS);
    CHECK(classify_point(sector, cd(-1, 2)) == UN);
}

TEST_CASE("built-in errors") {
    CHECK_THROWS_AS(builtin_theory("nope"), std::invalid_argument);
    CHECK_THROWS_AS(builtin_theory("annulus", {1, 0.5}), std::invalid_argument);
    CHECK_THROWS_AS(builtin_theory("annulus", {1, 1}), std::invalid_argument);
    CHECK_THROWS_AS(builtin_theory("poles", {}), std::invalid_argument);
    CHECK_THROWS_AS(builtin_theory("poles", {1, 0, 1, 0}), std::invalid_argument);
    CHECK_THROWS_AS(builtin_theory("schur", {1}), std::invalid_argument);
}

TEST_CASE("relaxed membership under negation is the closure of the complement") {
    // not {x^2+y^2-1 <= 0}: the open exterior; its closure includes the circle.
    const auto inside = RegionExpr::leaf(BivarPoly::rho() - BivarPoly::constant(1), Relation::LessEq);
    const auto outside = RegionExpr::negation(inside);
    CHECK_FALSE(eval_membership(outside, 1, 0, false, 1e-9));
    CHECK(eval_membership(outside, 1, 0, true, 1e-9));
    CHECK_FALSE(eval_membership(outside, 0.5, 0, true, 1e-9));
    CHECK(eval_membership(outside, 2, 0, false, 1e-9));
    // not {y = 0}: its closure is the whole plane.
    const auto off_axis = RegionExpr::negation(RegionExpr::leaf(BivarPoly::y(), Relation::Equal));
    CHECK_FALSE(eval_membership(off_axis, 3, 0, false, 1e-9));
    CHECK(eval_membership(off_axis, 3, 0, true, 1e-9));
}

TEST_CASE("dualization") {
    const auto h = dualize(builtin_theory("hurwitz"));
    CHECK(h.mode == TheoryMode::Monic);
    REQUIRE(h.region.kind() == RegionExpr::Kind::Leaf);
    CHECK(h.region.leaf_data().poly.is_proportional_to(BivarPoly::x()));

    const auto s = dualize(builtin_theory("schur"));
    CHECK(classify_point(s, cd(2, 0)) == S);
    CHECK(classify_point(s, cd(0, 0.5)) == UN);
    CHECK(classify_point(s, cd(0, 0)) == UN);

    const auto p = dualize(builtin_theory("poles", {2, 0}));
    REQUIRE(p.region.kind() == RegionExpr::Kind::Leaf);
    const BivarPoly half = parse_bivar_poly("(x - 1/2)^2 + y^2");
    CHECK(p.region.leaf_data().poly.is_proportional_to(half));
    CHECK(classify_point(p, cd(0.5, 0)) == S);
    CHECK(classify_point(p, cd(0, 0)) == UN);

    const auto back = dualize(builtin_theory("hurwitz", {}, TheoryMode::Monic));
    CHECK(back.mode == TheoryMode::Projective);
    CHECK(back.infinity_stratum == SS);

    std::mt19937 rng(3);
    std::uniform_real_distribution<double> u(-3, 3);
    for (const auto& name : builtin_theory_names()) {
        std::vector<double> params;
        if (name == "annulus") params = {0.5, 1.5};
        if (name == "poles") params = {1, 1, -0.5, 0};
        const auto t = builtin_theory(name, params);
        const auto dd = dualize(dualize(t));
        CHECK(dd.mode == t.mode);
        for (int k = 0; k < 200; ++k) {
            const cd z(u(rng), u(rng));
            CHECK(classify_point(dd, z) == classify_point(t, z));
        }
    }
}

TEST_CASE("topology estimates of reference shapes") {
    const auto schur = builtin_theory("schur");
    const auto ring = builtin_theory("annulus", {0.5, 1});
    const auto fen = builtin_theory("fenichel");
    for (int res : {128, 256, 512}) {
        auto e = estimate_stratum_topology(schur, S, schur.window, res);
        CHECK(e.b0 == 1);
        CHECK(e.b1 == 0);
        e = estimate_stratum_topology(ring, S, ring.window, res);
        CHECK(e.b0 == 1);
        CHECK(e.b1 == 1);
        e = estimate_stratum_topology(schur, SS, schur.window, res);
        CHECK(e.b0 == 1);
        CHECK(e.b1 == 1);
        e = estimate_stratum_topology(fen, S, fen.window, res);
        CHECK(e.b0 == 2);
        e = estimate_stratum_topology(fen, UN, fen.window, res);
        CHECK(e.b0 == 0);
    }
    CHECK_THROWS_AS(estimate_stratum_topology(schur, S, schur.window, 8), std::invalid_argument);
}

TEST_CASE("declared topology of full-dimensional built-ins matches the estimator") {
    for (auto mode : {TheoryMode::Projective, TheoryMode::Monic})
        for (const auto& name : builtin_theory_names()) {
            std::vector<double> params;
            if (name == "annulus") params = {0.5, 1};
            if (name == "poles") params = {1, 0};
            const auto t = builtin_theory(name, params, mode);
            if (t.region.has_equality_leaf()) continue;
            for (int res : {128, 256, 512})
                for (StratumKind k : kAllStrata) {
                    const auto e = estimate_stratum_topology(t, k, t.window, res);
                    INFO(name << " " << to_string(mode) << " " << short_name(k) << " res " << res);
                    CHECK(e.b0 == t.topology[k].b0);
                    CHECK(e.b1 == t.topology[k].b1);
                }
        }
}

TEST_CASE("validation") {
    auto t = builtin_theory("schur");
    CHECK(validate_theory(t).warnings.empty());
    t.topology.s.b0 = 2;
    t.topology.s.component_b1 = std::vector<int>{0, 0};
    const auto rep = validate_theory(t);
    REQUIRE(rep.warnings.size() == 1);
    CHECK(rep.warnings[0].find("estimator found 1") != std::string::npos);

    t = builtin_theory("schur");
    t.topology.s.component_b1 = std::vector<int>{0, 0};
    CHECK_THROWS_AS(validate_theory(t), std::invalid_argument);

    t = builtin_theory("schur");
    t.infinity_stratum.reset();
    CHECK_THROWS_AS(validate_theory(t), std::invalid_argument);

    const auto poles = builtin_theory("poles", {1, 0});
    const auto prep = validate_theory(poles);
    CHECK(prep.warnings.empty());
    REQUIRE(prep.checks.size() == 1);
    CHECK(prep.checks[0].find("skipped") != std::string::npos);
}

TEST_CASE("config round trip") {
    for (const auto& name : builtin_theory_names()) {
        std::vector<double> params;
        if (name == "annulus") params = {0.6, 1.2};
        if (name == "poles") params = {1, 1, 2, 0};
        const auto t = builtin_theory(name, params);
        const auto j = theory_to_json(t);
        const auto u = theory_from_json(j);
        CHECK(theory_to_json(u).dump() == j.dump());
        CHECK(u.topology == t.topology);
    }
    const auto j = nlohmann::json::parse(R"({
        "mode": "projective", "infinity_stratum": "un",
        "region": {"op": "leaf", "poly": {"2,0": "1", "0,2": "1", "0,0": "-4"}, "rel": "<"},
        "topology": {"s": [1, 0], "ss": [1, 1], "un": [1, 0]}})");
    const auto t = theory_from_json(j);
    CHECK(classify_point(t, cd(1.9, 0)) == S);
    CHECK(classify_point(t, cd(2, 0)) == SS);
    CHECK(t.boundary_tolerance == 1e-9);

    const auto g = theory_from_json(nlohmann::json::parse(R"({
        "mode": "monic", "region": {"op": "leaf", "poly": "x", "rel": ">"},
        "topology": {"s": [1, 0], "ss": [1, 0], "un": [1, 0]}})"));
    CHECK(classify_point(g, cd(1, 0)) == S);

    CHECK_THROWS_AS(theory_from_json(nlohmann::json::parse(R"({"mode": "projective",
        "region": {"op": "leaf", "poly": "x", "rel": "<"}, "topology": {"s": [1,0]}})")),
                    std::invalid_argument);
    CHECK_THROWS_AS(theory_from_json(nlohmann::json::parse(R"({"mode": "monic",
        "region": {"op": "xor", "children": []}, "topology": {}})")),
                    std::invalid_argument);
}

TEST_CASE("theory lookup") {
    std::vector<std::string> warn;
    const auto a = load_theory("annulus:0.5,1", TheoryMode::Projective, &warn);
    CHECK(a.topology.s.b1 == 1);
    const auto p = load_theory("poles:1+1i,2", TheoryMode::Monic, &warn);
    CHECK(p.mode == TheoryMode::Monic);
    CHECK(classify_point(p, cd(1, 1)) == S);
    CHECK(warn.empty());
    CHECK_THROWS_AS(load_theory("nothing-here", TheoryMode::Projective, &warn), std::invalid_argument);

    const auto dir = std::filesystem::temp_directory_path() / "dstrat_lookup";
    std::filesystem::create_directories(dir);
    const auto old = std::filesystem::current_path();
    std::filesystem::current_path(dir);
    {
        std::ofstream f("schur");
        f << theory_to_json(builtin_theory("hurwitz")).dump();
    }
    const auto shadow = load_theory("schur", TheoryMode::Projective, &warn);
    CHECK(classify_point(shadow, cd(-5, 0)) == S);
    CHECK(warn.size() == 1);
    std::filesystem::remove("schur");
    std::filesystem::current_path(old);
}
