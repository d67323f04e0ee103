#include "zml/zeta.hpp"

#include <algorithm>
#include <cmath>
#include <numbers>
#include <sstream>
#include <stdexcept>

namespace zml {

namespace {

constexpr double kPi = std::numbers::pi;
constexpr double kTwoPi = 2.0 * std::numbers::pi;

// Stieltjes constants for the Laurent expansion of zeta about s = 1.
constexpr double kGamma0 = 0.57721566490153286;
constexpr double kGamma1 = -0.072815845483676725;
constexpr double kGamma2 = -0.0096903631928723184;

}  // namespace

cplx zeta(cplx s) {
    if (s == cplx(1.0, 0.0)) throw std::domain_error("zeta: pole at s = 1");
    double t = std::abs(s.imag());
    int N = std::max(24, static_cast<int>(std::ceil(0.6 * t)) + 8);
    const int M = 14;  // tail terms B_2 .. B_28
    cplx sum = 0.0;
    for (int n = 1; n < N; ++n) sum += std::exp(-s * std::log(static_cast<double>(n)));
    double logN = std::log(static_cast<double>(N));
    cplx Npow = std::exp(-s * logN);  // N^{-s}
    sum += 0.5 * Npow;
    sum += Npow * static_cast<double>(N) / (s - 1.0);  // N^{1-s}/(s-1)
    // sum_k B_{2k}/(2k)! * s(s+1)...(s+2k-2) * N^{-s-2k+1}
    cplx rising = s;                       // s(s+1)...(s+2k-2), k=1 term = s
    cplx Nfac = Npow / static_cast<double>(N);  // N^{-s-1}
    double inv_fact = 1.0;
    for (int k = 1; k <= M; ++k) {
        double b2k = bernoulli(2 * k);
        inv_fact = 1.0;
        for (int j = 1; j <= 2 * k; ++j) inv_fact /= j;
        sum += b2k * inv_fact * rising * Nfac;
        // advance rising to s(s+1)...(s+2k) and Nfac to N^{-s-2k-1}
        rising *= (s + static_cast<double>(2 * k - 1)) * (s + static_cast<double>(2 * k));
        Nfac /= static_cast<double>(N) * static_cast<double>(N);
    }
    return sum;
}

std::vector<cplx> zeta_derivs_upto(int K, cplx s) {
    if (K < 0 || K > 64) throw std::domain_error("zeta_derivs_upto: bad K");
    double dist1 = std::abs(s - cplx(1.0, 0.0));
    if (dist1 < 1e-3) throw std::domain_error("zeta_deriv: too close to the pole");
    double r = std::min(0.45 * dist1, 1.5);
    int M = std::max(96, 8 * K);
    std::vector<cplx> circle(M);
    for (int j = 0; j < M; ++j) {
        double th = kTwoPi * j / M;
        circle[j] = zeta(s + r * cplx(std::cos(th), std::sin(th)));
    }
    std::vector<cplx> out(K + 1);
    double kfac = 1.0;
    for (int k = 0; k <= K; ++k) {
        if (k > 0) kfac *= k;
        cplx acc = 0.0;
        for (int j = 0; j < M; ++j) {
            double th = kTwoPi * j / M;
            acc += circle[j] * cplx(std::cos(k * th), -std::sin(k * th));
        }
        out[k] = acc * kfac / (static_cast<double>(M) * std::pow(r, k));
    }
    return out;
}

cplx zeta_deriv(int k, cplx s) {
    if (k == 0) return zeta(s);
    return zeta_derivs_upto(k, s)[k];
}

cplx log_H(cplx s) {
    // H(s) = (1-s) pi^{-s/2} Gamma(s/2 + 1)
    return std::log(1.0 - s) - 0.5 * s * std::log(cplx(kPi)) + log_gamma(0.5 * s + 1.0);
}

std::pair<cplx, cplx> xi_and_H(cplx s) {
    // H(s) = 1/2 s(1-s) pi^{-s/2} Gamma(s/2) = (1-s) pi^{-s/2} Gamma(s/2+1);
    // the second form is regular at s = 0.
    cplx stirling = std::exp(-0.5 * s * std::log(cplx(kPi)) + log_gamma(0.5 * s + 1.0));
    cplx H = (1.0 - s) * stirling;
    if (std::abs(s - 1.0) < 1e-5) {
        // (1-s) zeta(s) = -(1 + g0 (s-1) - g1 (s-1)^2 + g2/2 (s-1)^3 + ...)
        cplx e = s - 1.0;
        cplx one_minus_s_zeta =
            -(1.0 + kGamma0 * e - kGamma1 * e * e + 0.5 * kGamma2 * e * e * e);
        return {one_minus_s_zeta * stirling, H};
    }
    return {H * zeta(s), H};
}

cplx xi_log(cplx s) {
    if (std::abs(s - 1.0) < 1e-5 || std::abs(s) < 1e-5)
        throw std::domain_error("xi_log: use xi_and_H near s = 0, 1");
    return log_H(s) + std::log(zeta(s));
}

double hardy_Z(double t) {
    cplx z = zeta(cplx(0.5, t));
    cplx rotated = std::exp(cplx(0.0, rs_theta(t))) * z;
    return rotated.real();
}

double rvm_count(double T) {
    if (T < 2.0) throw std::domain_error("rvm_count: T >= 2 required");
    double x = T / kTwoPi;
    return x * std::log(x) - x + 7.0 / 8.0;
}

namespace {

// Continuous Im log zeta increment along the straight segment [s0, s1].
double arg_increment(cplx s0, cplx s1, int depth = 0) {
    cplx ratio = zeta(s1) / zeta(s0);
    if (depth >= 42 || std::abs(ratio - 1.0) < 0.5) return std::arg(ratio);
    cplx mid = 0.5 * (s0 + s1);
    return arg_increment(s0, mid, depth + 1) + arg_increment(mid, s1, depth + 1);
}

}  // namespace

double argument_count(double T) {
    // S(T) = (1/pi) * continuous arg of zeta along 2 -> 2+iT -> 1/2+iT
    double arg = 0.0;
    int vsteps = std::max(8, static_cast<int>(T / 2.0));
    cplx prev(2.0, 0.0);
    for (int j = 1; j <= vsteps; ++j) {
        cplx next(2.0, T * j / vsteps);
        arg += arg_increment(prev, next);
        prev = next;
    }
    const int hsteps = 24;
    for (int j = 1; j <= hsteps; ++j) {
        cplx next(2.0 - 1.5 * j / hsteps, T);
        arg += arg_increment(prev, next);
        prev = next;
    }
    double S = arg / kPi;
    return rs_theta(T) / kPi + 1.0 + S;
}

ZeroList find_zeros(double t_lo, double t_hi, double grid_step) {
    if (t_hi < t_lo) throw std::domain_error("find_zeros: inverted window");
    if (t_hi > 1e5) throw std::domain_error("find_zeros: t_hi above desk range 1e5");
    if (grid_step > 0.05) grid_step = 0.05;
    ZeroList zl;
    zl.t_lo = t_lo;
    zl.t_hi = t_hi;
    double start = std::max(t_lo, 1.0);  // no zeros below t = 14.1
    if (start >= t_hi) return zl;
    int n = static_cast<int>(std::ceil((t_hi - start) / grid_step));
    double prev_t = start, prev_z = hardy_Z(start);
    for (int i = 1; i <= n; ++i) {
        double t = std::min(t_hi, start + i * grid_step);
        double z = hardy_Z(t);
        if ((prev_z < 0.0) != (z < 0.0)) {
            double a = prev_t, b = t, fa = prev_z;
            for (int it = 0; it < 64 && b - a > 1e-9; ++it) {
                double m = 0.5 * (a + b), fm = hardy_Z(m);
                if ((fa < 0.0) != (fm < 0.0)) b = m;
                else { a = m; fa = fm; }
            }
            zl.ordinates.push_back(0.5 * (a + b));
        }
        prev_t = t;
        prev_z = z;
    }
    if (t_hi > 2.5 && t_lo < t_hi) {
        double expected = rvm_count(std::max(t_hi, 2.5)) -
                          (t_lo > 2.5 ? rvm_count(t_lo) : 0.0);
        if (std::abs(expected - static_cast<double>(zl.ordinates.size())) > 2.0)
            zl.count_warning = true;
    }
    return zl;
}

std::string zero_list_csv(const ZeroList& zl) {
    std::ostringstream os;
    os.precision(10);
    for (double g : zl.ordinates) os << g << "\n";
    return os.str();
}

}  // namespace zml
