#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include <cmath>
#include <cstdio>
#include <fstream>
#include <random>
#include <sstream>

#include "core/csv.hpp"
#include "core/surface.hpp"

using namespace fracdim;

static const Domain kUnit{0, 1, 0, 1};

TEST_CASE("domain and grid validation") {
    CHECK_THROWS_AS((Domain{1, 1, 0, 1}.validate()), error);
    CHECK_THROWS_AS((Domain{0, 1, 2, 1}.validate()), error);
    CHECK_NOTHROW((Domain{-1, 1, 0, 1}.validate()));
    CHECK_THROWS_AS((Domain{-1, 1, 0, 1}.validate_for_integration()), error);
    CHECK_NOTHROW((Domain{0, 1, 0, 1}.validate_for_integration()));
    CHECK_THROWS_AS((GridSpec{1, 5}.validate()), error);
    CHECK_THROWS_AS((GridSpec{5, 1}.validate()), error);
    CHECK_NOTHROW((GridSpec{2, 2}.validate()));
    CHECK_THROWS_AS((FracOrder{0, 1}.validate()), error);
    CHECK_THROWS_AS((FracOrder{0.5, -2}.validate()), error);
    try {
        FracOrder{0, 1}.validate();
    } catch (const error& e) {
        CHECK(e.code() == errc::domain_error);
    }
}

TEST_CASE("make_grid examples") {
    auto corners = make_grid(kUnit, {2, 2});
    REQUIRE(corners.size() == 4);
    CHECK((corners[0] == std::pair{0.0, 0.0}));
    CHECK((corners[1] == std::pair{1.0, 0.0}));
    CHECK((corners[2] == std::pair{0.0, 1.0}));
    CHECK((corners[3] == std::pair{1.0, 1.0}));

    auto g32 = make_grid(kUnit, {3, 2});
    CHECK(g32[0].first == 0.0);
    CHECK(g32[1].first == 0.5);
    CHECK(g32[2].first == 1.0);

    auto g33 = make_grid({1, 2, 3, 5}, {3, 3});
    CHECK(g33[0].second == 3.0);
    CHECK(g33[3].second == 4.0);
    CHECK(g33[6].second == 5.0);
}

TEST_CASE("theta examples and domain") {
    CHECK(eval_theta(0.0, 0.3) == 0.0);
    CHECK(eval_theta(0.5, 0.9) == 0.0);
    CHECK(eval_theta(0.25, 1.0) == doctest::Approx(-0.0625).epsilon(1e-15));
    CHECK_THROWS_AS(eval_theta(0.6, 0.5), error);
    CHECK_THROWS_AS(eval_theta(0.25, 1.5), error);
}

TEST_CASE("branch_index examples and boundary behavior") {
    CHECK(branch_index(0.25) == 1);
    CHECK(branch_index(0.5) == 2);
    CHECK(branch_index(0.8125) == 3);
    CHECK(branch_index(0.0) == 1);
    CHECK_THROWS_AS(branch_index(1.0), error);
    CHECK_THROWS_AS(branch_index(-0.1), error);
    for (int n = 1; n <= 40; ++n) {
        const double an = 1.0 - std::ldexp(1.0, -n);
        CHECK(branch_index(an) == n + 1);  // a_n opens piece n+1
        CHECK(branch_index(std::nextafter(an, 0.0)) == n);
    }
    // a_{n-1} <= x < a_n always holds for the returned n
    std::mt19937 rng(7u);
    for (int t = 0; t < 2000; ++t) {
        const double x = rng() * (1.0 / 4294967296.0);
        const int n = branch_index(x);
        CHECK(1.0 - std::ldexp(1.0, -(n - 1)) <= x);
        CHECK(x < 1.0 - std::ldexp(1.0, -n));
    }
}

TEST_CASE("M examples") {
    CHECK(eval_uv_m(0.25, 1.0) == doctest::Approx(-0.0625).epsilon(1e-15));
    CHECK(eval_uv_m(0.625, 1.0) == doctest::Approx(-0.03125).epsilon(1e-15));
    CHECK(eval_uv_m(1.0, 0.7) == 0.0);
    CHECK_THROWS_AS(eval_uv_m(1.2, 0.5), error);
    CHECK_THROWS_AS(eval_uv_m(0.5, -0.1), error);
}

TEST_CASE("M vanishes at every piece boundary") {
    for (int n = 0; n <= 20; ++n) {
        const double an = n == 0 ? 0.0 : 1.0 - std::ldexp(1.0, -n);
        for (double y : {0.0, 0.25, 0.5, 1.0}) CHECK(eval_uv_m(an, y) == 0.0);
    }
}

TEST_CASE("M is continuous across piece boundaries") {
    // The piece slope grows like 2^n/n, so a fixed-eps probe must stop
    // before the slope eats the tolerance; n <= 12 keeps the jump under
    // 1e-6 at eps = 1e-8, and the gap scales with the local slope after.
    const double eps = 1e-8;
    for (int n = 1; n <= 12; ++n) {
        const double an = 1.0 - std::ldexp(1.0, -n);
        const double gap = std::abs(eval_uv_m(an - eps, 1.0) - eval_uv_m(an + eps, 1.0));
        CHECK(gap <= 1e-6);
    }
    for (int n = 13; n <= 18; ++n) {
        const double an = 1.0 - std::ldexp(1.0, -n);
        const double gap = std::abs(eval_uv_m(an - eps, 1.0) - eval_uv_m(an + eps, 1.0));
        CHECK(gap <= eps * std::ldexp(1.0, n));  // slope-limited
    }
}

TEST_CASE("M is bounded by 1/16") {
    std::mt19937 rng(11u);
    for (int t = 0; t < 5000; ++t) {
        const double x = rng() * (1.0 / 4294967296.0);
        const double y = rng() * (1.0 / 4294967296.0);
        CHECK(std::abs(eval_uv_m(x, y)) <= 0.0625);
    }
    const SampledSurface m = sample(UVFunctionM{}, kUnit, {257, 257});
    double sup = 0.0;
    for (double v : m.values()) sup = std::max(sup, std::abs(v));
    CHECK(sup <= 0.0625);
    CHECK(sup == doctest::Approx(0.0625).epsilon(1e-12));  // attained at (0.25, 1)
}

TEST_CASE("sample examples") {
    const SampledSurface c = sample(Constant{3}, kUnit, {5, 7});
    for (double v : c.values()) CHECK(v == 3.0);

    const SampledSurface xy = sample(Monomial{1, 1}, kUnit, {3, 3});
    CHECK(xy.at(1, 1) == 0.25);

    const SampledSurface m = sample(UVFunctionM{}, kUnit, {5, 5});
    CHECK(m.at(1, 4) == doctest::Approx(-0.0625).epsilon(1e-15));

    CHECK_THROWS_AS(sample(UVFunctionM{}, {0, 2, 0, 1}, {5, 5}), error);
    CHECK_THROWS_AS(sample(Monomial{-1, 0}, kUnit, {5, 5}), error);
    CHECK_THROWS_AS(sample(Weierstrass{0.5, 0.5, 5}, kUnit, {5, 5}), error);
    CHECK_THROWS_AS(sample(Weierstrass{3, 1.5, 5}, kUnit, {5, 5}), error);
    CHECK_THROWS_AS(sample(Weierstrass{3, 0.5, 0}, kUnit, {5, 5}), error);
}

TEST_CASE("sampling is deterministic") {
    const SampledSurface a = sample(Weierstrass{3, 0.5, 12}, kUnit, {33, 33});
    const SampledSurface b = sample(Weierstrass{3, 0.5, 12}, kUnit, {33, 33});
    REQUIRE(a.values().size() == b.values().size());
    for (std::size_t i = 0; i < a.values().size(); ++i) CHECK(a.values()[i] == b.values()[i]);
}

TEST_CASE("surface construction rejects bad value blocks") {
    CHECK_THROWS_AS(SampledSurface(kUnit, {3, 3}, std::vector<double>(8, 0.0)), error);
    std::vector<double> with_nan(9, 0.0);
    with_nan[4] = std::nan("");
    CHECK_THROWS_AS(SampledSurface(kUnit, {3, 3}, std::move(with_nan)), error);
}

TEST_CASE("generator shorthand parses and round-trips") {
    CHECK(std::holds_alternative<Constant>(parse_generator("constant:3")));
    CHECK(std::get<Constant>(parse_generator("constant:3")).value == 3.0);
    const auto mono = std::get<Monomial>(parse_generator("monomial:1,2"));
    CHECK(mono.p == 1.0);
    CHECK(mono.q == 2.0);
    const auto wei = std::get<Weierstrass>(parse_generator("weierstrass:3,0.5,12"));
    CHECK(wei.lambda == 3.0);
    CHECK(wei.mu == 0.5);
    CHECK(wei.terms == 12);
    CHECK(std::holds_alternative<UVFunctionM>(parse_generator("uv-m")));

    for (const char* text : {"constant:3", "monomial:1,2", "separable-sine:6.2831853,6.2831853",
                             "weierstrass:3,0.5,12", "uv-m"}) {
        const GeneratorSpec spec = parse_generator(text);
        const GeneratorSpec again = parse_generator(describe_generator(spec));
        CHECK(eval_generator(spec, 0.375, 0.625) == eval_generator(again, 0.375, 0.625));
    }

    CHECK_THROWS_AS(parse_generator("nope:1"), error);
    CHECK_THROWS_AS(parse_generator("constant"), error);
    CHECK_THROWS_AS(parse_generator("constant:a"), error);
    CHECK_THROWS_AS(parse_generator("monomial:1"), error);
    CHECK_THROWS_AS(parse_generator("weierstrass:3,0.5,2.7"), error);
    CHECK_THROWS_AS(parse_generator("uv-m:1"), error);
}

TEST_CASE("csv round trip is bitwise exact") {
    const SampledSurface w = sample(Weierstrass{3, 0.5, 10}, {0, 1, 0.25, 2}, {17, 9});
    std::stringstream buf;
    write_surface_csv(buf, w);
    const SampledSurface back = read_surface_csv(buf);
    CHECK(back.nx() == w.nx());
    CHECK(back.ny() == w.ny());
    CHECK(back.domain().b == w.domain().b);
    CHECK(back.domain().c == w.domain().c);
    for (std::size_t i = 0; i < w.values().size(); ++i) CHECK(back.values()[i] == w.values()[i]);
}

TEST_CASE("csv rejects malformed input") {
    auto reject = [](const char* text) {
        std::stringstream in(text);
        try {
            read_surface_csv(in);
            return false;
        } catch (const error& e) {
            return e.code() == errc::format_error;
        }
    };
    CHECK(reject(""));
    CHECK(reject("0,0,1\n"));
    CHECK(reject("# 0,1,0,1,2\n"));
    CHECK(reject("# 0,1,0,1,2,2\n0,0,1\n"));                              // short
    CHECK(reject("# 0,1,0,1,2,2\n0,0,1\n1,0,x\n0,1,1\n1,1,1\n"));         // bad number
    CHECK(reject("# 0,1,0,1,2,2\n0,0\n1,0,1\n0,1,1\n1,1,1\n"));           // bad column count
    CHECK(reject("# 0,1,0,1,2,2\n0,0,1\n1,0,1\n0,1,1\n1,1,1\n2,2,2\n"));  // trailing rows
    CHECK(reject("# 1,0,0,1,2,2\n0,0,1\n1,0,1\n0,1,1\n1,1,1\n"));         // a >= b
    CHECK(reject("# 0,1,0,1,2.5,2\n0,0,1\n1,0,1\n0,1,1\n1,1,1\n"));       // fractional nx
}

TEST_CASE("csv file write is atomic and readable back") {
    const std::string path = "surface_test_tmp.csv";
    const SampledSurface s = sample(Monomial{1, 0}, kUnit, {3, 3});
    write_surface_csv_file(path, s);
    std::ifstream probe(path + ".tmp");
    CHECK_FALSE(probe.good());  // temp renamed away
    const SampledSurface back = read_surface_csv_file(path);
    for (std::size_t i = 0; i < s.values().size(); ++i) CHECK(back.values()[i] == s.values()[i]);
    std::remove(path.c_str());
    CHECK_THROWS_AS(read_surface_csv_file("no_such_file.csv"), error);
}
