#pragma once
// Self-contained special-function kernel: complex Gamma, 2F1(1,1;c;z),
// incomplete beta, Bernoulli numbers, Laguerre polynomials, Gauss quadrature,
// Riemann-Siegel theta.

#include <complex>
#include <functional>
#include <string>
#include <vector>

namespace zml {

using cplx = std::complex<double>;

// log Gamma(s), principal branch.  Lanczos for moderate |Im s|, Stirling with
// upward recursion otherwise; accurate to ~1e-13 relative across the strip.
cplx log_gamma(cplx s);
cplx gamma_complex(cplx s);

// 2F1(1,1;c;z) by power series; requires |z| < 1, c not a non-positive integer.
cplx hyp2f1_11(cplx c, cplx z);

// B_x(a,b) = int_0^x t^{a-1} (1-t)^{b-1} dt, x in (0,1], Re a > 0.
cplx incomplete_beta(double x, cplx a, cplx b);

// Exact Bernoulli number B_n (recurrence over rationals, cached), n <= 200.
double bernoulli(int n);

// Laguerre polynomial L_n(x) by the three-term recurrence, n <= 500.
double laguerre(int n, double x);

struct QuadratureRule {
    enum class Kind { GaussLegendre, GaussLaguerre };
    std::vector<double> nodes;
    std::vector<double> weights;
    Kind kind;
};

// Golub-Welsch rules; cached per order.
const QuadratureRule& gauss_laguerre(int n);
const QuadratureRule& gauss_legendre(int n);

// Riemann-Siegel theta(t) = Im log Gamma(1/4 + it/2) - (t/2) log pi.
double rs_theta(double t);

// Tanh-sinh quadrature of f over (0,1); handles integrable endpoint
// singularities.  abs_tol is a target for the level-doubling stop rule.
cplx tanh_sinh_01(const std::function<cplx(double)>& f, double abs_tol = 1e-14);

// Adaptive Gauss-Legendre of f over [a,b] (real line, complex values).
cplx integrate_gl(const std::function<cplx(double)>& f, double a, double b,
                  int points_per_panel = 16, int panels = 64);

}  // namespace zml
