#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include <cmath>
#include <json.hpp>
#include <random>

#include "zml/runge.hpp"

using zml::cplx;

namespace {
zml::RegionParams desk_params() { return {}; }  // V=2.0, c0=0.982, 0.5/0.45
}  // namespace

TEST_CASE("region construction and membership") {
    auto reg = zml::build_region(desk_params());
    CHECK(reg.contains(cplx(0.0, 0.0)));
    CHECK(!reg.contains(cplx(-reg.c0, 0.0)));
    CHECK(reg.contains(cplx(2.0, 2.0)));
    CHECK(!reg.contains(cplx(2.5, 0.0)));  // outside the square

    // unrotated vertices match the set-builder description directly
    double a = 2.0, V = 2.0, c = 0.982, e0 = 0.5, e1 = 0.45;
    REQUIRE(reg.vertices.size() == 12);
    CHECK(std::abs(reg.vertices[0] - cplx(-a, -a)) < 1e-15);
    CHECK(std::abs(reg.vertices[1] - cplx(-a, -e1 * V)) < 1e-12);
    CHECK(std::abs(reg.vertices[2] - cplx(-c - e0 * V, -e1 * V)) < 1e-15);
    CHECK(std::abs(reg.vertices[4] - cplx(-c + e1 * V, -e0 * V)) < 1e-15);
    CHECK(std::abs(reg.vertices[5] - cplx(-c + e1 * V, e0 * V)) < 1e-15);
    CHECK(std::abs(reg.vertices[8] - cplx(-a, e1 * V)) < 1e-12);

    // degenerate notches
    zml::RegionParams bad = desk_params();
    bad.eps1 = 0.6;  // eps1 > eps0
    CHECK_THROWS(zml::build_region(bad));
    zml::RegionParams bad2 = desk_params();
    bad2.eps0 = 0.8;  // c0 + eps0 V >= V
    CHECK_THROWS(zml::build_region(bad2));

    // boundary points classify as on-boundary and inside the closed region
    for (cplx z : reg.boundary_samples(500)) {
        CHECK(reg.on_boundary(z, 1e-9));
    }
}

TEST_CASE("membership agrees with the set-builder under rotation") {
    zml::RegionParams p = desk_params();
    // a rotated wide notch would poke through the square; shrink it
    p.eps0 = 0.3;
    p.eps1 = 0.2;
    p.rotation_angle = 0.3;
    auto reg = zml::build_region(p);
    double V = p.V_half, c = p.c0;
    std::mt19937 rng(7);
    std::uniform_real_distribution<double> u(-2.6, 2.6);
    for (int i = 0; i < 10000; ++i) {
        cplx z(u(rng), u(rng));
        bool in_square =
            std::max(std::abs(z.real()), std::abs(z.imag())) <= V;
        cplx w = cplx(-c, 0.0) +
                 std::polar(1.0, -p.rotation_angle) * (z - cplx(-c, 0.0));
        bool in_box = -c - p.eps0 * V < w.real() && w.real() < -c + p.eps1 * V &&
                      std::abs(w.imag()) < p.eps0 * V;
        bool in_channel = -V <= w.real() && w.real() <= -c - p.eps0 * V &&
                          std::abs(w.imag()) < p.eps1 * V;
        CHECK(reg.contains(z) == (in_square && !(in_box || in_channel)));
    }
}

TEST_CASE("leja points") {
    // nearly unnotched square: first two points are opposite corners
    zml::RegionParams p = desk_params();
    p.eps0 = 1e-4;
    p.eps1 = 1e-4;
    auto sq = zml::build_region(p);
    auto two = zml::leja_points(sq, 2);
    REQUIRE(two.nodes.size() == 2);
    CHECK(std::abs(two.nodes[0] - cplx(-2.0, -2.0)) < 1e-12);
    CHECK(std::abs(std::abs(two.nodes[1] - two.nodes[0]) -
                   2.0 * std::sqrt(2.0) * 2.0) < 1e-6);

    // n = 1: max-|z| sample, ties broken by first index
    auto one = zml::leja_points(sq, 1);
    CHECK(std::abs(one.nodes[0]) == doctest::Approx(2.0 * std::sqrt(2.0)));

    // separation on the default region at n = 50
    auto reg = zml::build_region(desk_params());
    auto set = zml::leja_points(reg, 50);
    double min_d = 1e300;
    for (size_t i = 0; i < set.nodes.size(); ++i)
        for (size_t j = i + 1; j < set.nodes.size(); ++j)
            min_d = std::min(min_d, std::abs(set.nodes[i] - set.nodes[j]));
    CHECK(min_d > 0.0);
}

TEST_CASE("interpolation of M~/(c0+w)") {
    auto reg = zml::build_region(desk_params());
    double c0 = reg.c0, Mt = 1.0;

    auto p80 = zml::interpolate_L(reg, 80, c0, Mt);
    for (size_t i = 0; i < p80.nodes.size(); ++i)
        CHECK(std::abs(p80.eval_raw(p80.nodes[i]) - Mt / (c0 + p80.nodes[i])) <
              1e-12);

    // the pole -c0 sits in the notch, so the Green's-function rate
    // exp(-n G(-c0)) is slow; degrees are scaled to reach it
    double e40, e80, e160;
    zml::interpolate_L(reg, 40, c0, Mt, &e40);
    zml::interpolate_L(reg, 80, c0, Mt, &e80);
    zml::interpolate_L(reg, 160, c0, Mt, &e160);
    CHECK(e80 < e40);
    CHECK(e160 < e80);
    CHECK(e160 < 0.25 * e40);

    // shifted normalization L(0) = M~/c0
    CHECK(std::abs(p80(cplx(0.0)) * c0 / Mt - 1.0) < 1e-10);
    CHECK(std::abs(p80.shift) <= reg.eps1 * reg.V_half);
    // same contract with a non-unit M~
    auto q = zml::interpolate_L(reg, 40, c0, 2.5);
    CHECK(std::abs(q(cplx(0.0)) - 2.5 / c0) < 1e-10 * (2.5 / c0));

    // constant polynomial cannot be shifted onto the target
    CHECK_THROWS(zml::interpolate_L(reg, 0, c0, Mt));

    auto j = nlohmann::json::parse(p80.to_json());
    CHECK(j["nodes"].size() == 81);
    CHECK(j["coeffs"].size() == 81);
    auto jr = nlohmann::json::parse(reg.to_json());
    CHECK(jr["vertices"].size() == 12);

    auto csv = zml::error_sweep_csv(reg, c0, Mt, {40, 80});
    CHECK(csv.rfind("n,sup_error\n40,", 0) == 0);
}

TEST_CASE("conrey P profile") {
    double alpha = 8.0, R = 1.0, theta = 0.5;
    auto P = zml::conrey_P_optimal(alpha, R, theta);
    CHECK(P(0.0) == doctest::Approx(1.0).epsilon(1e-14));
    CHECK(P(theta) == doctest::Approx(0.0));
    // the paper's unreflected form has P(theta) = 1: normalization conflict
    CHECK(P.raw(1.0) == doctest::Approx(1.0).epsilon(1e-14));
    CHECK(P.cheb_sup_error < 1e-10);
    for (int i = 0; i <= 20; ++i) {
        double x = theta * i / 20.0;
        CHECK(std::abs(P.cheb(x) - P(x)) < 1e-10);
    }
    CHECK_THROWS(zml::conrey_P_optimal(1.0, 2.0, theta));
}

TEST_CASE("mollifier coefficients") {
    zml::MollifierParams mp;  // T=1e4, theta=0.5, R=1, alpha=8
    auto M = zml::mollifier_M(mp);
    REQUIRE(M.coeffs.size() == 100);  // T^theta = 100
    CHECK(M.coeffs[0] == cplx(1.0));  // mu(1) P(0)
    CHECK(M.coeffs[3] == cplx(0.0));  // mu(4) = 0
    // m = 100: P(log 100/log T) = P(theta) = 0 exactly
    CHECK(std::abs(M.coeffs[99]) < 1e-12);
    CHECK(M.sigma_shift == doctest::Approx(1.0 / std::log(1e4)));
    // spot check m = 6: mu = 1, damped profile in (0,1)
    double x6 = std::log(6.0) / std::log(1e4);
    auto P = zml::conrey_P_optimal(8.0, 1.0, 0.5);
    CHECK(M.coeffs[5].real() == doctest::Approx(P(x6)).epsilon(1e-14));
}

TEST_CASE("conrey mean-square constant") {
    CHECK(std::exp(-2.0) == doctest::Approx(std::exp(-1.0 * 2.0)));  // w(1) at R=2
    // closed form vs the five-quantity definition
    CHECK(zml::conrey_c1R(1.0, 0.5) ==
          doctest::Approx(zml::conrey_c1R_defn(1.0, 0.5)).epsilon(1e-12));
    CHECK(zml::conrey_c1R(8.0, 0.55) ==
          doctest::Approx(zml::conrey_c1R_defn(8.0, 0.55)).epsilon(1e-12));
    // large R-bar limit is 1
    CHECK(zml::conrey_c1R(50.0, 0.5) == doctest::Approx(1.0).epsilon(1e-8));
    // strictly decreasing toward the limit on a grid
    double prev = 1e300;
    for (double R = 0.5; R <= 10.0; R += 0.25) {
        double c = zml::conrey_c1R(R, 0.5);
        CHECK(c < prev);
        CHECK(c > 1.0);
        prev = c;
    }
    CHECK_THROWS(zml::conrey_c1R(1.0, 0.6));
}
