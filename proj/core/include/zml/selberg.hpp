#pragma once
// Prime-side machinery: Lambda / mu sieves, Selberg's Lambda_x weights,
// sigma_{x,t}, the Faa di Bruno partition expansion of zeta^{(k)}/zeta, and
// the A_j / A(s) assembly.

#include <boost/multiprecision/cpp_int.hpp>
#include <cstdint>
#include <utility>
#include <vector>

#include "zml/gfunction.hpp"

namespace zml {

// Exact arithmetic functions; n <= 1e8.
double von_mangoldt(uint64_t n);
int moebius(uint64_t n);
// mu(0..N) by linear sieve; mu[0] = 0.
std::vector<int8_t> moebius_table(uint64_t N);

// Selberg weight: Lambda(n) for n <= x, the two damped branches up to x^3.
double lambda_x(double x, uint64_t n);

struct SelbergWeightTable {
    double x = 0.0;
    // nonzero entries (prime powers n <= x^3) sorted by n
    std::vector<std::pair<uint64_t, double>> weights;
};
// Block-sieved and cached per x; requires x^3 <= 1e8.
const SelbergWeightTable& selberg_table(double x);

cplx selberg_poly(double x, cplx s);      // sum_{n<=x^3} Lambda_x(n) n^{-s}
cplx selberg_poly_log(double x, cplx s);  // same with 1/log n folded in

// Dense-coefficient export; keep x^3 modest (coeffs array has x^3 slots).
DirichletPoly to_dirichlet(const SelbergWeightTable& tab);

struct ZetaZero {
    double beta = 0.5;
    double gamma = 0.0;
};
// sigma_{x,t} = 1/2 + 2 max_{rho*}(beta*-1/2, 2/log x), the max over zeros
// with |gamma*-t| <= x^{3|beta*-1/2|}/log x; [cover_lo, cover_hi] must span
// the widest possible window t -+ x^{3/2}/log x or the call throws.
double sigma_x_t(double x, double t, const std::vector<ZetaZero>& zeros,
                 double cover_lo, double cover_hi);
// all-on-line list from zeta_core; coverage taken from the list bounds
double sigma_x_t(double x, double t, const ZeroList& zl);

struct PartitionTerm {
    int k = 0;
    std::vector<int> mult;  // R_j stored at index j-1, sum j R_j = k
    boost::multiprecision::cpp_int coeff;  // k! / prod R_j! (j!)^{R_j}
    double coeff_d() const { return coeff.convert_to<double>(); }
};
// All partitions of k in multiplicity form, k <= 40.
std::vector<PartitionTerm> partitions_of(int k);

// zeta^{(k)}/zeta via the partition expansion, with derivatives of
// zeta'/zeta taken by Cauchy-circle quadrature; independent of zeta_deriv(k).
cplx faa_di_bruno_ratio(int k, cplx s);

struct SelbergParams {
    double alpha = 8.0, R = 1.0, C = 1.0, T = 1e4;
    // desk-scale overrides of x = T^{1/alpha^{1+C/2}} etc.; x1 < x < x0
    double x = 50.0, x0 = 100.0, x1 = 25.0;
    int K = 3;  // polynomial order of the assembly

    double log_T() const;
    double sigma_shifted() const;  // sigma + dsigma = 1/2 + (alpha-R)/log T
    void validate() const;
};

// A_j at s_1 = sigma + dsigma + it: three weighted Dirichlet-polynomial
// blocks plus the closed-form log-integral derivative.
cplx a_j_term(int j, const SelbergParams& p, double t, double omega_j);
cplx assemble_A(const SelbergParams& p, double t,
                const std::vector<double>& omegas);
std::vector<cplx> assemble_A_grid(const SelbergParams& p,
                                  const std::vector<double>& ts,
                                  const std::vector<double>& omegas);

}  // namespace zml
