#pragma once
// g_{alpha,T}(s): Dirichlet series, analytic continuation, approximate
// equation, the translation functional equation, and the assembled G, G*,
// lambda.

#include <cstdint>
#include <iosfwd>
#include <string>
#include <vector>

#include "zml/tanh_approx.hpp"
#include "zml/zeta.hpp"

namespace zml {

struct DirichletPoly {
    std::vector<cplx> coeffs;   // coeffs[i] multiplies (i+1)^{-(s+shift)}
    double sigma_shift = 0.0;

    cplx eval(cplx s) const;
    // data-parallel evaluation along a vertical grid sigma + i t_j
    std::vector<cplx> eval_grid(double sigma, const std::vector<double>& ts) const;
    double abs_bound(double sigma) const;  // sum |c(n)| n^{-sigma-shift}
    size_t support() const;                // number of nonzero terms

    // binary table of (n: u64 LE, re, im: f64 LE) for nonzero terms
    void write_binary(std::ostream& os) const;
    static DirichletPoly read_binary(std::istream& is, double sigma_shift = 0.0);
    std::string to_json() const;
    static DirichletPoly from_json(const std::string& text);
};

struct GContinuationParams {
    long long N = 0;   // 0: use ceil(T); must be >= T
    int depth = 0;     // extra terms added to the geometric j-series
};

// -1/2 sum_{l<=N} tanh(alpha/2 (log l/log T - 1/2)) l^{-s}, Re s > 1, plus an
// analytic tail compensation built from absolutely convergent series (see
// notes in the implementation); tail_bound receives the certified bound of
// the raw truncation that the compensation replaces.
cplx g_series(double alpha, double T, cplx s, long long N_trunc,
              double* tail_bound = nullptr);

// Analytic continuation to sigma > 0, 0 < |t| <= 2T.
cplx g_continued(double alpha, double T, cplx s,
                 const GContinuationParams& params = {},
                 bool* converged = nullptr);

// Three explicit terms (sum to T, hypergeometric, T^{1-s}/(s-1)); the dropped
// remainder is O(T^{-sigma}).
cplx g_approx_eq(double alpha, double T, cplx s);

// LHS - RHS of  2 e^{a/2}(zeta(s+ds)/2 - g(s+ds)) = 2(zeta(s)/2 + g(s)),
// ds = alpha/log T.
cplx translation_residual(double alpha, double T, cplx s);

// G(s) = sum_{l<=T} Q(log l/log T) l^{-s}, Q = 1/2 + q from build_q.
DirichletPoly build_G(double alpha, double T, int K, int M);
// G*(s+ds) = e^{a/2} sum_{l<=T} (1/2 - q~(log l/log T)) l^{-(s+ds)}.
DirichletPoly build_G_star(double alpha, double T, double R, int K_cal);

// G evaluated with the delta(s) = log(2 pi T/s)/(2 log T) argument shift
// applied inside Q; evaluation-time option for A/B comparison.
cplx eval_with_delta(const RealPoly& q, double T, cplx s);

// lambda = sum_{k=1}^{K_cal} c_k(alpha) (log T)^{-k} zeta^{(k)}/zeta at
// s_shifted; throws when |zeta| <= 1e-8.
cplx lambda_exact(double alpha, double T, double R, cplx s_shifted, int K_cal);

// xi^{(k)}(s) by Cauchy-circle quadrature on the entire function xi.
cplx xi_deriv(int k, cplx s, double radius = 0.5);

}  // namespace zml
