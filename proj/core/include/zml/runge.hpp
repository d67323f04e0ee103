#pragma once
// The notched-square Jordan region, Leja interpolation of f(w) = M~/(c0+w),
// the shifted polynomial L with L(0) = M~/c0, the mollifier M(s), and
// Conrey's mean-square constant c(1, R-bar).

#include <string>
#include <vector>

#include "zml/gfunction.hpp"

namespace zml {

struct RegionParams {
    double V_half = 2.0;   // V~^{1/2}, half-side of the square U
    double c0 = 0.982;     // notch surrounds -c0
    // Wide-notch defaults: the interpolation rate is exp(-n G(-c0)) with G the
    // Green's function of the complement, and a narrow notch (eps1 << 1) makes
    // G(-c0) too small for any computable degree. eps1 V_half < c0 keeps 0 in
    // the region.
    double eps0 = 0.5, eps1 = 0.45;
    double rotation_angle = 0.0;  // notch orientation about -c0
};

struct JordanRegion {
    double V_half = 0.0, c0 = 0.0, eps0 = 0.0, eps1 = 0.0, rotation_angle = 0.0;
    std::vector<cplx> vertices;  // closed boundary polygon, CCW

    bool contains(cplx z) const;  // closed region: square minus open notch
    bool on_boundary(cplx z, double tol = 1e-9) const;
    // >= m points walked uniformly along the polygon, starting at vertices[0]
    std::vector<cplx> boundary_samples(int m) const;
    std::string to_json() const;
};

// square U of half-side V_half minus the keyhole notch (box around -c0 plus
// the channel to the left edge), rotated about -c0 by rotation_angle
JordanRegion build_region(const RegionParams& p);

struct InterpolationSet {
    std::vector<cplx> nodes;  // Leja-ordered boundary points
    int degree = 0;           // nodes.size() == degree + 1
};

// Greedy Leja points over a dense boundary sample set (Fekete surrogate);
// deterministic: first node maximizes |z|, ties by sample index.
InterpolationSet leja_points(const JordanRegion& region, int n);

// Newton-form polynomial with an evaluation shift: L(z) = p(z + shift).
struct NewtonPoly {
    std::vector<cplx> nodes;   // interpolation nodes zeta_0 .. zeta_{n}
    std::vector<cplx> coeffs;  // divided differences d_0 .. d_n
    cplx shift = 0.0;
    cplx eval_raw(cplx w) const;  // p(w), no shift
    cplx operator()(cplx z) const { return eval_raw(z + shift); }
    int degree() const { return static_cast<int>(coeffs.size()) - 1; }
    std::string to_json() const;
};

// Interpolate f(w) = M_tilde/(c0+w) at n+1 Leja nodes, then find the shift
// z0 (complex Newton from 0, |z0| <= eps1 V_half) with L(0) = M_tilde/c0.
// sup_error receives the measured boundary-grid max of |f - p|.
NewtonPoly interpolate_L(const JordanRegion& region, int n, double c0,
                         double M_tilde, double* sup_error = nullptr);

// CSV "n,sup_error" sweep of the boundary-grid interpolation error.
std::string error_sweep_csv(const JordanRegion& region, double c0,
                            double M_tilde, const std::vector<int>& degrees);

// Reflected Conrey-optimal mollifier profile: P^(x) =
// sinh((alpha-R)(theta-x))/sinh((alpha-R)theta), so P^(0)=1, P^(theta)=0;
// raw() keeps the paper's unreflected sinh((alpha-R) x theta) form.
struct ConreyP {
    double alpha = 0.0, R = 0.0, theta = 0.0;
    double operator()(double x) const;
    double raw(double x) const;
    RealPoly cheb;  // degree-16 Chebyshev fit of the reflected form on [0, theta]
    double cheb_sup_error = 0.0;
};
ConreyP conrey_P_optimal(double alpha, double R, double theta);

struct MollifierParams {
    double T = 1e4, theta = 0.5, R = 1.0, alpha = 8.0;
};
// M(s) = sum_{m <= T^theta} mu(m) P^(log m/log T) m^{-(s + R/log T)}
DirichletPoly mollifier_M(const MollifierParams& p);

// c(1, R-bar) closed form 1/2 + e^{-2R}/2 + (1-e^{-2R})/2 coth(theta R)
double conrey_c1R(double R_bar, double theta);
// the unsimplified five-quantity route (w, A, C, alpha-bar with quadrature)
double conrey_c1R_defn(double R_bar, double theta);

}  // namespace zml
