#pragma once
// Numerical harness: window grids, the principal-inequality integrals
// (I, I_E, L_E), the kappa lower bound, exceptional-set measurement,
// value-distribution histograms, the mollified mean-square experiment, and
// zero-proportion checks.

#include <functional>
#include <string>
#include <vector>

#include "zml/runge.hpp"
#include "zml/selberg.hpp"

namespace zml {

// Uniform t-grid on [t_lo, t_hi] with a boolean exceptional mask per node.
// Discrete measures: each node carries measure `step`, the window measure is
// step * size(), so an all-masked grid has exceptional fraction exactly 1.
struct WindowGrid {
    double t_lo = 0.0, t_hi = 0.0, step = 0.0;
    std::vector<uint8_t> mask;  // 1 = exceptional

    static WindowGrid make(double t_lo, double t_hi, double step);
    size_t size() const { return mask.size(); }
    double node(size_t i) const { return t_lo + static_cast<double>(i) * step; }
    std::vector<double> nodes() const;
    double window_measure() const { return step * static_cast<double>(size()); }
    double exceptional_measure() const;  // step * (masked count)
    double eps_E() const;                // masked fraction of nodes
    // maximal runs of masked nodes as [t_start, t_end] intervals
    std::vector<std::pair<double, double>> exceptional_intervals() const;
};

using RealEval = std::function<double(double)>;
using CplxEval = std::function<cplx(double)>;

struct IntegralSplit {
    double I = 1.0;    // mean of |F| over the unmasked nodes
    double I_E = 0.0;  // mean of |F|/|L(A)| over the masked nodes
    double L_E = 0.0;  // (1/|W|) integral over E of log|L(A)|
    double log_mean_F = 0.0;  // (1/|W|) integral over W of log|F|
    double I_halfstep_delta = 0.0;  // Richardson |I_h - I_2h|/3
    double excluded_measure = 0.0;  // nodes with |L(A)| < 1e-12
    bool near_zero_flag = false;
};

// Node-mean quadrature of the three split integrals; evaluators are called
// once per node (data-parallel), accumulation is serial and deterministic.
// Masked nodes with |L(A)| < 1e-12 are excluded from I_E / L_E and their
// measure reported separately.
IntegralSplit integrate_abs_F(const WindowGrid& g, const RealEval& abs_F,
                              const RealEval& abs_LA);

struct KappaBound {
    double raw = 0.0;      // 1 - (2/R)(log I + eps_E log I_E + L_E)
    double clamped = 0.0;  // min(raw, 1)
};
KappaBound kappa_bound(double R, double I, double I_E, double L_E,
                       double eps_E);

struct MaskMeasure {
    double eps_E = 0.0;           // masked fraction
    double outside_square = 0.0;  // fraction with A outside the square U
    double in_notch = 0.0;        // fraction with A inside the removed notch
};
// Marks the nodes where A(t) leaves the region; overwrites g.mask.
MaskMeasure exceptional_mask(WindowGrid& g, const CplxEval& A,
                             const JordanRegion& region);

struct Histogram {
    std::vector<double> edges;   // bins+1 ascending edges
    std::vector<double> counts;  // node counts per bin
    double sup_cdf_distance = 0.0;  // vs the disk law 1 - exp(-r^2/2)
    std::string to_csv() const;     // "lo,hi,count" rows
};

// V(sigma) = 1/2 sum Lambda(n)^2 n^{-2 sigma}, truncated when the integral
// tail bound drops below 1e-15 of the accumulated value.
double lester_variance(double sigma, double* tail_bound = nullptr);

// Histogram of |f(t)|/sqrt(V) over the grid and the sup distance between the
// empirical CDF and the radial Gaussian law 1 - exp(-r^2/2).
Histogram value_histogram(const WindowGrid& g, const CplxEval& f, double V,
                          int bins = 40);

struct MeanSquareParams {
    double R_bar = 4.0, theta = 0.4, T = 1e4;
    double window = 5000.0, step = 0.1;
    bool use_mollifier = true;
    double alpha = 8.0;  // profile parameter of the mollifier
};
struct MeanSquareResult {
    double integral = 0.0;  // (1/window) int |zeta|^2 |M|^2 dt
    double c1R = 0.0;       // closed-form c(1, R-bar) (0 when M == 1)
    double ratio = 0.0;     // integral / c1R (or integral itself when M == 1)
};
// (1/W) int_T^{T+W} |zeta(1/2 + R/log T + it)|^2 |M(a+it)|^2 dt vs c(1,R).
MeanSquareResult mean_square_experiment(const MeanSquareParams& p);

struct ZeroProportion {
    double N = 0.0;     // argument-principle count over the window
    long long N0 = 0;   // Hardy Z sign changes
    double ratio = 1.0; // N0 / N, 1 for an empty window
    bool warning = false;
};
ZeroProportion zero_proportion_check(double t_lo, double t_hi);

struct ExperimentParams {
    std::string mode = "levinson";  // or "meansquare"
    // levinson pipeline
    double alpha = 8.0, R = 1.2, C = 1.0, T = 1e4, theta = 0.45;
    double M_tilde = 1.0, delta_T = 0.0;
    double x = 50.0, x0 = 100.0, x1 = 25.0;
    // desk normalization of the assembled A before the region test; the
    // asymptotic scaling (A = O(V~^{1/2}) a.e.) has no desk analogue
    double A_scale = -0.04;
    int K = 3, K_cal = 8, interp_degree = 80;
    RegionParams region;
    // grid
    double t_lo = 1e4, t_hi = 1.2e4, step = 1.0;
    // mean-square block
    double ms_R_bar = 4.0, ms_theta = 0.4, ms_window = 5000.0, ms_step = 0.1;
    bool use_mollifier = true;
    // toggles
    bool histogram = false;
    int histogram_bins = 40;

    std::string to_json() const;
    void validate() const;
};

// Parse the config layout emitted by ExperimentParams::to_json (top-level
// scalars plus "region"/"grid"/"meansquare"/"toggles" blocks, all optional).
// Unknown keys anywhere raise std::invalid_argument; the result is validated.
ExperimentParams from_config_json(const std::string& text);

struct RunReport {
    ExperimentParams params;
    double I = 0.0, I_E = 0.0, L_E = 0.0, eps_E = 0.0;
    double kappa_raw = 0.0, kappa = 0.0;
    double splitting_gap = 0.0;  // rhs - lhs of the splitting inequality
    double N_window = 0.0, N00_estimate = 0.0;
    double I_halfstep_delta = 0.0, excluded_measure = 0.0;
    bool near_zero_flag = false;
    double ms_ratio = 0.0, ms_c1R = 0.0, ms_integral = 0.0;
    Histogram hist;
    double timing_ms = 0.0;

    std::string to_json() const;  // deterministic apart from "timing_ms"
};

// Full pipeline: F = G * M at a = 1/2 - R/log T, A from the Selberg assembly,
// L(A) from the Leja interpolant, masked integrals, kappa, zero counts.
RunReport run_levinson(const ExperimentParams& p);
RunReport run_meansquare(const ExperimentParams& p);
RunReport run_experiment(const ExperimentParams& p);  // dispatch on mode

}  // namespace zml
