#pragma once
// Polynomial approximations of tanh: Bernoulli series g_k, Fourier sine
// coefficients b_k and the polynomial q, Laguerre coefficients b~_k, the
// polynomial q~, and the derived c_k.

#include <string>
#include <vector>

#include "zml/special.hpp"

namespace zml {

struct RealPoly {
    std::vector<double> coeffs;  // coeffs[k] * (x - center)^k
    double center = 0.0;

    double operator()(double x) const;        // Horner
    double eval_monomials(double x) const;    // naive sum, for cross-checks
    int degree() const { return static_cast<int>(coeffs.size()) - 1; }
    void trim(double tol = 0.0);              // drop trailing ~zero coeffs
};

struct TanhExpansion {
    enum class Kind { fourier, laguerre, bernoulli };
    double alpha = 0.0;
    Kind kind = Kind::fourier;
    std::vector<double> coeffs;
    int K = 0, M = 0, K_cal = 0;
    double measured_sup_error = 0.0;
    std::string to_json() const;
};

// g_k(dsigma) = -(dsigma/2)^k (2^{k+1} - 4^{k+1}) B_{k+1} / (k+1)!, k odd.
double g_k_coeff(int k, double delta_sigma);

// Partial sum sum_{k odd <= K_max} (-g_k)(log T)^k (1/2 - x)^k with
// dsigma log T = alpha; converges to -tanh(alpha(1/2-x)/2) for |alpha| < 2pi.
double bernoulli_tanh_series(double alpha, double x, int K_max);

// b_k(alpha) = -(4/pi) int_0^pi sin(kx)/(e^{alpha x}+1) dx, evaluated through
// the incomplete-beta representation.
double fourier_b_k(double alpha, int k);

// True sine coefficient of tanh(alpha x/2) on (0, pi):
// a_k = b_k + (2/(pi k))(1 - (-1)^k).  b_k alone reproduces tanh minus the
// odd square wave; the correction restores the square-wave component.
double fourier_sine_coeff(double alpha, int k);

// q: odd polynomial in (x - 1/2) of degree 2M-1 built from the sine
// coefficients and the Taylor expansion of sin(kx).  Q = 1/2 + q.
// sup_remainder (optional) receives max |tanh(alpha(x-1/2)/2) + 2q(x)| over a
// 10^4 grid on [0,1].
RealPoly build_q(double alpha, int K, int M, double* sup_remainder = nullptr);

// b~_k = int_0^inf (1 + tanh(alpha x/(2(alpha-R)) - alpha/4)) L_k(x) e^{-x} dx
// by Gauss-Laguerre of order >= 4k+64; converged (optional) is cleared when
// two consecutive orders disagree by more than 1e-7.
double laguerre_b_tilde(double alpha, double R, int k, bool* converged = nullptr);

// Same coefficient through the hypergeometric route, written with Euler's
// integral so no numerical parameter derivatives are needed:
// b~_k = 2 sum_nu C(k,nu)/nu! b^{nu+1} int_0^1 log^nu(t) t^{b-1}/(1+e^{a/2}t) dt,
// b = (alpha-R)/alpha.  Cross-check only.
double laguerre_b_tilde_f21(double alpha, double R, int k);

// s_{K-1}(alpha, x) = sum_{nu < K_cal} b~_nu L_nu(x).
double s_partial(double alpha, double R, int K_cal, double x);

// q~(y) = -1/2 (s_{K-1}(alpha, (alpha-R) y) - 1) expanded into monomials in y.
// sup_error (optional) receives max |s_{K-1}(x) - (1 + tanh(...))| over a grid
// on x in [0, alpha/2].  log_T only labels the variable y = log l / log T.
RealPoly build_q_tilde(double alpha, double R, int K_cal, double log_T,
                       double* sup_error = nullptr);

// c_k(alpha) = (e^{alpha/2}/2) (alpha-R)^k / k! sum_{nu=k}^{K_cal} b~_nu C(nu,k).
double c_k_alpha(double alpha, double R, int k, int K_cal);

}  // namespace zml
