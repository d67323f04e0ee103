#pragma once
// Tunables for the Levinson-Conrey desk experiments.

#include <cmath>
#include <stdexcept>

namespace zml {

struct ExperimentParams {
    double alpha = 8.0;       // translation scale; Delta_sigma = alpha / log T
    double T = 1e4;           // height parameter; coefficient cutoffs are in terms of T
    double R = 1.0;           // mollifier shift, a = 1/2 - R/log T
    double theta = 0.45;      // mollifier length exponent, M has T^theta terms
    int K = 16;               // degree parameter of the Fourier polynomial q
    int K_cal = 16;           // "script K": Laguerre degree of q~ and the c_k sum
    double C = 2.0;           // Selberg exponent parameter of Theorem-3-style lengths
    double eps_prime = 0.1;   // M~ = alpha^{eps'}
    double eps0 = 0.15;       // notch half-width (relative to V~^{1/2})
    double eps1 = 0.05;       // notch half-height (relative to V~^{1/2}); eps0 >= eps1
    double V_half = 3.0;      // V~^{1/2}, half-side of the square U
    double delta_T = 0.0;     // extra shift of Theorem "exceptional set"; default off
    double rotation = 0.0;    // rotation angle of the notch about -c0
    // Selberg Dirichlet-polynomial lengths (desk-scale; the asymptotic
    // prescriptions x = T^{1/alpha^{1+C/2}} etc. degenerate at desk T).
    double x = 50.0;
    double x0 = 100.0;
    double x1 = 25.0;

    double log_T() const { return std::log(T); }
    double delta_sigma() const { return alpha / log_T(); }
    double a_line() const { return 0.5 - (R - delta_T) / log_T(); }

    void validate() const {
        if (T < 10.0) throw std::invalid_argument("T too small");
        if (eps1 <= 0 || eps0 < eps1) throw std::invalid_argument("need eps0 >= eps1 > 0");
        if (theta <= 0 || theta >= 4.0 / 7.0) throw std::invalid_argument("theta out of (0,4/7)");
        if (K < 1 || K_cal < 0) throw std::invalid_argument("bad degree parameters");
    }
};

}  // namespace zml
