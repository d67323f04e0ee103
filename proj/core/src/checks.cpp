#include "zml/checks.hpp"

#include <cmath>
#include <random>
#include <stdexcept>

#include "zml/gfunction.hpp"
#include "zml/runge.hpp"
#include "zml/selberg.hpp"
#include "zml/tanh_approx.hpp"
#include "zml/zeta.hpp"

namespace zml {

namespace {

CheckResult gate_leq(std::string name, double measured, double gate) {
    CheckResult r;
    r.name = std::move(name);
    r.measured = measured;
    r.gate = gate;
    r.pass = measured <= gate;
    return r;
}

std::vector<CheckResult> suite_functional_equation() {
    std::mt19937 rng(11);
    std::uniform_real_distribution<double> us(-1.0, 2.0), ut(10.0, 1e3);
    double worst = 0.0;
    for (int i = 0; i < 200; ++i) {
        double sg = (i % 2) ? 1.0 : -1.0;
        cplx s(us(rng), sg * ut(rng));
        double rel = std::abs(1.0 - std::exp(xi_log(1.0 - s) - xi_log(s)));
        worst = std::max(worst, rel);
    }
    return {gate_leq("xi reflection symmetry, 200 random points", worst,
                     1e-9)};
}

std::vector<CheckResult> suite_translation() {
    const double T = 1e3;
    std::mt19937 rng(2024);
    std::uniform_real_distribution<double> us(1.2, 3.0), ut(1.0, 500.0);
    const double alphas[] = {1.0, 3.0, 6.0};
    double worst_series = 0.0;
    for (int i = 0; i < 100; ++i) {
        cplx s(us(rng), ut(rng));
        cplx r = translation_residual(alphas[i % 3], T, s);
        worst_series = std::max(worst_series,
                                std::abs(r) / (1.0 + std::abs(zeta(s))));
    }
    std::uniform_real_distribution<double> uc(0.35, 0.95), utc(5.0, 300.0);
    double worst_cont = 0.0;
    for (int i = 0; i < 20; ++i) {
        cplx s(uc(rng), utc(rng));
        cplx r = translation_residual(alphas[i % 3], T, s);
        worst_cont = std::max(worst_cont,
                              std::abs(r) / (1.0 + std::abs(zeta(s))));
    }
    return {gate_leq("translation identity, series route, 100 points",
                     worst_series, 1e-8),
            gate_leq("translation identity, continuation route, 20 points",
                     worst_cont, 1e-6)};
}

std::vector<CheckResult> suite_tanh() {
    const double pi = 3.14159265358979323846;
    double sup_b = 0.0;
    for (int i = 0; i <= 200; ++i) {
        double x = i / 200.0;
        double target = -std::tanh(0.5 * pi * (0.5 - x));
        sup_b = std::max(sup_b,
                         std::abs(bernoulli_tanh_series(pi, x, 61) - target));
    }
    std::vector<CheckResult> out;
    out.push_back(gate_leq(
        "Bernoulli series for tanh, K = 61, alpha = pi", sup_b, 1e-6));

    // Laguerre partial sums s_{K-1} vs 1 + tanh on [0, alpha/2]
    const double alpha = 12.0, R = 1.0;
    double prev = 1e300, last = 0.0;
    bool monotone = true;
    // the sup error decays like exp(-c sqrt(K)); 1e-3 needs K ~ 48
    for (int K : {3, 6, 12, 48}) {
        double sup = 0.0;
        for (int i = 0; i <= 300; ++i) {
            double x = 0.5 * alpha * i / 300.0;
            double target =
                1.0 + std::tanh(alpha * x / (2.0 * (alpha - R)) - alpha / 4.0);
            sup = std::max(sup, std::abs(s_partial(alpha, R, K, x) - target));
        }
        if (sup > prev + 1e-15) monotone = false;
        prev = sup;
        last = sup;
    }
    out.push_back(gate_leq("Laguerre sup error monotone over K in {3,6,12,48}",
                           monotone ? 0.0 : 1.0, 0.5));
    out.push_back(
        gate_leq("Laguerre sup error at K = 48", last, 1e-3));
    return out;
}

std::vector<CheckResult> suite_selberg() {
    std::mt19937 rng(5);
    std::uniform_real_distribution<double> us(1.5, 3.0), ut(0.0, 20.0);
    double worst = 0.0;
    for (int i = 0; i < 10; ++i) {
        cplx s(us(rng), ut(rng));
        for (int k = 1; k <= 5; ++k) {
            cplx direct = zeta_deriv(k, s) / zeta(s);
            double rel = std::abs(faa_di_bruno_ratio(k, s) - direct) /
                         std::abs(direct);
            worst = std::max(worst, rel);
        }
    }
    std::vector<CheckResult> out;
    out.push_back(gate_leq(
        "partition expansion of zeta^(k)/zeta, k <= 5, 10 points", worst,
        1e-5));

    cplx s(2.0, 0.0);
    cplx target = -zeta_deriv(1, s) / zeta(s);
    double prev = 1e300, last = 0.0;
    bool monotone = true;
    for (double x : {20.0, 50.0, 200.0}) {
        double err = std::abs(selberg_poly(x, s) - target);
        if (err > prev) monotone = false;
        prev = err;
        last = err;
    }
    out.push_back(gate_leq("Selberg polynomial error monotone in x",
                           monotone ? 0.0 : 1.0, 0.5));
    out.push_back(gate_leq("Selberg polynomial error at x = 200", last, 0.02));
    return out;
}

std::vector<CheckResult> suite_runge() {
    auto reg = build_region(RegionParams{});
    double e40 = 0.0, e80 = 0.0, e160 = 0.0;
    interpolate_L(reg, 40, reg.c0, 1.0, &e40);
    auto p = interpolate_L(reg, 80, reg.c0, 1.0, &e80);
    interpolate_L(reg, 160, reg.c0, 1.0, &e160);
    std::vector<CheckResult> out;
    bool monotone = e80 < e40 && e160 < e80;
    out.push_back(gate_leq("Leja interpolation error monotone over n doubling",
                           monotone ? 0.0 : 1.0, 0.5));
    out.push_back(gate_leq("Leja error 4x decay from n = 40 to n = 160",
                           e160 / e40, 0.25));
    out.push_back(gate_leq("shifted normalization L(0) c0 = M~",
                           std::abs(p(cplx(0.0)) * reg.c0 - 1.0), 1e-10));
    out.push_back(gate_leq("shift stays within the eps1 budget",
                           std::abs(p.shift), reg.eps1 * reg.V_half));
    return out;
}

}  // namespace

std::vector<std::string> check_suite_names() {
    return {"functional-equation", "translation", "tanh",
            "selberg",             "runge",       "all"};
}

std::vector<CheckResult> check_suite(const std::string& suite) {
    if (suite == "functional-equation") return suite_functional_equation();
    if (suite == "translation") return suite_translation();
    if (suite == "tanh") return suite_tanh();
    if (suite == "selberg") return suite_selberg();
    if (suite == "runge") return suite_runge();
    if (suite == "all") {
        std::vector<CheckResult> out;
        for (const auto& name : check_suite_names()) {
            if (name == "all") continue;
            auto part = check_suite(name);
            out.insert(out.end(), part.begin(), part.end());
        }
        return out;
    }
    throw std::invalid_argument("unknown check suite: " + suite);
}

}  // namespace zml
