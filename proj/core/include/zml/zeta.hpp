#pragma once
// Complex zeta, derivatives, xi / H, Hardy Z, zero counting.

#include <string>
#include <utility>
#include <vector>

#include "zml/special.hpp"

namespace zml {

// Euler-Maclaurin evaluation; relative error ~1e-12 for moderate |Im s|,
// < 1e-10 through |Im s| <= 1e4.  Throws at the pole s = 1.
cplx zeta(cplx s);

// zeta^{(k)}(s) by Cauchy-circle quadrature of zeta on |w-s| = r.
cplx zeta_deriv(int k, cplx s);
// All derivatives 0..K at once, sharing one circle of zeta evaluations.
std::vector<cplx> zeta_derivs_upto(int K, cplx s);

// H(s) = 1/2 s(1-s) pi^{-s/2} Gamma(s/2), xi = H zeta (patched at s=0,1).
std::pair<cplx, cplx> xi_and_H(cplx s);
cplx log_H(cplx s);
// log xi(s); use for large |Im s| where xi itself underflows.
cplx xi_log(cplx s);

// Z(t) = e^{i theta(t)} zeta(1/2 + it); real up to roundoff.
double hardy_Z(double t);

// Riemann-von Mangoldt main term (T/2pi) log(T/2pi) - T/2pi + 7/8.
double rvm_count(double T);

// N(T) by the argument principle: theta(T)/pi + 1 + S(T), with S tracked
// continuously along 2 -> 2+iT -> 1/2+iT.
double argument_count(double T);

struct ZeroList {
    double t_lo = 0.0, t_hi = 0.0;
    std::vector<double> ordinates;  // strictly increasing
    std::string method = "sign-change";
    bool count_warning = false;  // set when |count - rvm prediction| > 2
};

ZeroList find_zeros(double t_lo, double t_hi, double grid_step = 0.05);

// One ordinate per line, 10 significant digits.
std::string zero_list_csv(const ZeroList& zl);

}  // namespace zml
