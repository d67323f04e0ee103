#include "zml/tanh_approx.hpp"

#include <algorithm>
#include <cmath>
#include <json.hpp>
#include <map>
#include <mutex>
#include <numbers>
#include <stdexcept>

namespace zml {

namespace {

constexpr double kPi = std::numbers::pi;

double binom(int n, int k) {
    double r = 1.0;
    for (int j = 1; j <= k; ++j) r *= static_cast<double>(n - k + j) / j;
    return r;
}

}  // namespace

double RealPoly::operator()(double x) const {
    double z = x - center, r = 0.0;
    for (size_t i = coeffs.size(); i-- > 0;) r = r * z + coeffs[i];
    return r;
}

double RealPoly::eval_monomials(double x) const {
    double z = x - center, r = 0.0, p = 1.0;
    for (double c : coeffs) {
        r += c * p;
        p *= z;
    }
    return r;
}

void RealPoly::trim(double tol) {
    while (!coeffs.empty() && std::abs(coeffs.back()) <= tol) coeffs.pop_back();
}

std::string TanhExpansion::to_json() const {
    nlohmann::json j;
    j["alpha"] = alpha;
    j["kind"] = kind == Kind::fourier ? "fourier"
               : kind == Kind::laguerre ? "laguerre" : "bernoulli";
    j["coeffs"] = coeffs;
    j["measured_sup_error"] = measured_sup_error;
    return j.dump(2);
}

double g_k_coeff(int k, double delta_sigma) {
    if (k < 1 || k % 2 == 0 || k > 199)
        throw std::domain_error("g_k_coeff: k must be odd, 1 <= k <= 199");
    if (delta_sigma == 0.0) return 0.0;
    // -(ds/2)^k (2^{k+1} - 4^{k+1}) B_{k+1}/(k+1)!  computed in log magnitude:
    // 4^{k+1} B_{k+1} alone overflows near k = 199.
    double B = bernoulli(k + 1);
    double log24 = (k + 1) * std::log(4.0) + std::log1p(-std::pow(2.0, -(k + 1)));
    double logmag = k * std::log(std::abs(delta_sigma) / 2.0) + log24 +
                    std::log(std::abs(B)) - std::lgamma(k + 2.0);
    // sign: -(sign ds)^k * sign(2^{k+1}-4^{k+1}) * sign B = (sign ds) * sign B
    double sign = (delta_sigma > 0 ? 1.0 : -1.0) * (B > 0 ? 1.0 : -1.0);
    return sign * std::exp(logmag);
}

double bernoulli_tanh_series(double alpha, double x, int K_max) {
    if (std::abs(alpha) > 2.0 * kPi - 0.1)
        throw std::domain_error("bernoulli_tanh_series: needs |alpha| <= 2pi - 0.1");
    if (x < 0.0 || x > 1.0)
        throw std::domain_error("bernoulli_tanh_series: x in [0,1]");
    const double logT = std::log(1e4);
    double dsig = alpha / logT;
    double z = logT * (0.5 - x);
    double sum = 0.0;
    for (int k = 1; k <= K_max; k += 2)
        sum -= g_k_coeff(k, dsig) * std::pow(z, k);
    return sum;
}

double fourier_b_k(double alpha, int k) {
    if (alpha <= 0.0) throw std::domain_error("fourier_b_k: alpha > 0");
    if (k < 1 || k > std::max(200, static_cast<int>(10.0 * alpha) + 100))
        throw std::domain_error("fourier_b_k: k out of range");
    if (k > 8.0 * alpha) {
        // beta route oscillates like u^{-ik/alpha}; resolve the defining
        // integral directly once the frequency outruns the fixed node budget
        cplx I = integrate_gl(
            [&](double x) {
                return cplx(std::sin(k * x) / (std::exp(alpha * x) + 1.0));
            },
            0.0, kPi, 16, std::max(64, 2 * k));
        return -4.0 / kPi * I.real();
    }
    cplx a(1.0, -static_cast<double>(k) / alpha);
    cplx b(0.0, static_cast<double>(k) / alpha);
    double u1 = 1.0 / (std::exp(alpha * kPi) + 1.0);
    cplx diff = incomplete_beta(0.5, a, b);
    if (u1 > 0.0) diff -= incomplete_beta(u1, a, b);
    return -4.0 / (kPi * alpha) * diff.imag();
}

double fourier_sine_coeff(double alpha, int k) {
    double square = (k % 2 == 1) ? 4.0 / (kPi * k) : 0.0;
    return fourier_b_k(alpha, k) + square;
}

RealPoly build_q(double alpha, int K, int M, double* sup_remainder) {
    if (K < 1 || M < 1 || K > 64 || M > 64)
        throw std::domain_error("build_q: need 1 <= K, M <= 64");
    std::vector<double> a(K + 1);
    for (int k = 1; k <= K; ++k) a[k] = fourier_sine_coeff(alpha, k);
    RealPoly q;
    q.center = 0.5;
    q.coeffs.assign(2 * M, 0.0);
    for (int k = 1; k <= K; ++k) {
        // t_m = (-1)^{m-1} k^{2m-1}/(2m-1)!, advanced by -k^2/((2m)(2m+1))
        double t = static_cast<double>(k);
        for (int m = 1; m <= M; ++m) {
            q.coeffs[2 * m - 1] += -0.5 * a[k] * t;
            t *= -static_cast<double>(k) * k / ((2.0 * m) * (2.0 * m + 1.0));
        }
    }
    if (sup_remainder) {
        double sup = 0.0;
        const int G = 10000;
        for (int i = 0; i <= G; ++i) {
            double x = static_cast<double>(i) / G;
            double r = std::tanh(0.5 * alpha * (x - 0.5)) + 2.0 * q(x);
            sup = std::max(sup, std::abs(r));
        }
        *sup_remainder = sup;
    }
    return q;
}

namespace {

// Composite Gauss-Legendre with the e^{-x} weight folded in.  Plain
// Gauss-Laguerre of moderate order loses digits here: tanh has poles at
// distance 2(alpha-R)pi/(2 alpha) from the axis and L_k oscillates, so the
// integrand is resolved panel by panel instead.
double b_tilde_quad(double alpha, double R, int k, int panels_per_unit) {
    if (alpha == 0.0) return k == 0 ? 1.0 : 0.0;
    double half = 0.5 * alpha / (alpha - R), c = 0.25 * alpha;
    double X = std::max(60.0, 6.0 * k + 40.0);  // |L_k e^{-x}| ~ e^{-x/2}
    int panels = static_cast<int>(X) * panels_per_unit;
    cplx I = integrate_gl(
        [&](double x) {
            return cplx((1.0 + std::tanh(half * x - c)) * laguerre(k, x) *
                        std::exp(-x));
        },
        0.0, X, 16, panels);
    return I.real();
}

// write-once table of b~_0 .. b~_{count-1} per (alpha, R)
const std::vector<double>& b_tilde_table(double alpha, double R, int count) {
    static std::map<std::pair<double, double>, std::vector<double>> cache;
    static std::mutex mu;
    std::lock_guard<std::mutex> lk(mu);
    auto& tab = cache[{alpha, R}];
    while (static_cast<int>(tab.size()) < count)
        tab.push_back(laguerre_b_tilde(alpha, R, static_cast<int>(tab.size())));
    return tab;
}

}  // namespace

double laguerre_b_tilde(double alpha, double R, int k, bool* converged) {
    if (alpha != 0.0 && !(R < alpha))
        throw std::domain_error("laguerre_b_tilde: needs R < alpha");
    if (k < 0 || k > 64) throw std::domain_error("laguerre_b_tilde: 0 <= k <= 64");
    double lo = b_tilde_quad(alpha, R, k, 1);
    double hi = b_tilde_quad(alpha, R, k, 2);
    if (converged) *converged = std::abs(hi - lo) <= 1e-7;
    return hi;
}

double laguerre_b_tilde_f21(double alpha, double R, int k) {
    if (!(R > 0.0 && R < alpha))
        throw std::domain_error("laguerre_b_tilde_f21: needs 0 < R < alpha");
    double b = (alpha - R) / alpha;
    double ea = std::exp(0.5 * alpha);
    double sum = 0.0, bpow = b;
    double inv_fact = 1.0;
    for (int nu = 0; nu <= k; ++nu) {
        if (nu > 0) inv_fact /= nu;
        cplx I = tanh_sinh_01([&](double t) {
            double lg = std::log(t);
            return cplx(std::pow(lg, nu) * std::pow(t, b - 1.0) / (1.0 + ea * t));
        });
        sum += inv_fact * binom(k, nu) * bpow * I.real();
        bpow *= b;
    }
    return 2.0 * sum;
}

double s_partial(double alpha, double R, int K_cal, double x) {
    const auto& tab = b_tilde_table(alpha, R, K_cal);
    double acc = 0.0;
    for (int nu = 0; nu < K_cal; ++nu) acc += tab[nu] * laguerre(nu, x);
    return acc;
}

RealPoly build_q_tilde(double alpha, double R, int K_cal, double log_T,
                       double* sup_error) {
    if (K_cal < 1 || K_cal > 65) throw std::domain_error("build_q_tilde: bad K_cal");
    (void)log_T;  // the variable is y = log l / log T; coefficients don't depend on it
    const auto& tab = b_tilde_table(alpha, R, K_cal);
    // L_nu(x) = sum_k C(nu,k)(-1)^k x^k / k!, x = (alpha - R) y
    RealPoly qt;
    qt.coeffs.assign(K_cal, 0.0);
    double scale = alpha - R;
    for (int k = 0; k < K_cal; ++k) {
        double acc = 0.0;
        for (int nu = k; nu < K_cal; ++nu) acc += tab[nu] * binom(nu, k);
        double sk = (k % 2 ? -1.0 : 1.0) * std::pow(scale, k) / std::tgamma(k + 1.0);
        qt.coeffs[k] = -0.5 * sk * acc;
    }
    qt.coeffs[0] += 0.5;  // -1/2 (s - 1)
    if (sup_error) {
        double sup = 0.0;
        const int G = 2000;
        double half = 0.5 * alpha / (alpha - R), c = 0.25 * alpha;
        for (int i = 0; i <= G; ++i) {
            double x = 0.5 * alpha * i / G;
            double target = 1.0 + std::tanh(half * x - c);
            sup = std::max(sup, std::abs(s_partial(alpha, R, K_cal, x) - target));
        }
        *sup_error = sup;
    }
    return qt;
}

double c_k_alpha(double alpha, double R, int k, int K_cal) {
    if (k < 0 || k > K_cal) throw std::domain_error("c_k_alpha: 0 <= k <= K_cal");
    if (!(R < alpha)) throw std::domain_error("c_k_alpha: needs R < alpha");
    const auto& tab = b_tilde_table(alpha, R, K_cal + 1);
    double acc = 0.0;
    for (int nu = k; nu <= K_cal; ++nu) acc += tab[nu] * binom(nu, k);
    return 0.5 * std::exp(0.5 * alpha) * std::pow(alpha - R, k) /
           std::tgamma(k + 1.0) * acc;
}

}  // namespace zml
