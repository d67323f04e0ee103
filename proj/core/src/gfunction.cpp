#include "zml/gfunction.hpp"

#include <algorithm>
#include <array>
#include <cmath>
#include <cstring>
#include <istream>
#include <json.hpp>
#include <ostream>
#include <sstream>
#include <stdexcept>

#include "zml/parallel.hpp"

namespace zml {

namespace {

constexpr double kPi = std::numbers::pi;

// Shared precomputation for the truncated tanh-Dirichlet sum and the
// geometric expansion  tanh(..) - 1 = -2 sum_j (-1)^{j+1} e^{j a/2} u^{-j ds},
// valid for u >= sqrt(T) with ratio <= e^{-a/2} on [T, inf).
struct TanhSum {
    double alpha, T, log_T, dsig;
    long long N;

    TanhSum(double alpha_, double T_, long long N_)
        : alpha(alpha_), T(T_), log_T(std::log(T_)), dsig(alpha_ / std::log(T_)),
          N(N_) {}

    cplx tanh_partial(cplx s) const {
        cplx acc = 0.0;
        for (long long n = 1; n <= N; ++n) {
            double ln = std::log(static_cast<double>(n));
            acc += std::tanh(0.5 * alpha * (ln / log_T - 0.5)) * std::exp(-s * ln);
        }
        return acc;
    }
};

// sum_{n>N} n^{-s} - A^{1-s}/(s-1), A = N + 1/2, by the midpoint
// Euler-Maclaurin expansion -sum_k (1-2^{1-2k}) B_2k/(2k)! (s)_{2k-1}
// A^{-s-2k+1}; cancellation-free, good while |s| stays well under 2 pi A.
cplx em_tail_corr(cplx s, double A) {
    static const std::array<double, 17> mid = [] {
        std::array<double, 17> c{};
        double fact = 1.0;
        for (int k = 1; k <= 16; ++k) {
            fact *= (2.0 * k - 1.0) * (2.0 * k);
            c[k] = -(1.0 - std::ldexp(1.0, 1 - 2 * k)) * bernoulli(2 * k) / fact;
        }
        return c;
    }();
    cplx poch = s;                            // (s)_{2k-1}
    cplx Af = std::exp(-(s + 1.0) * std::log(A));  // A^{-s-2k+1}
    double A2 = 1.0 / (A * A);
    cplx acc = 0.0;
    for (int k = 1; k <= 16; ++k) {
        cplx term = mid[k] * poch * Af;
        acc += term;
        if (std::abs(term) < 1e-18 * (1.0 + std::abs(acc))) break;
        poch *= (s + cplx(2.0 * k - 1.0)) * (s + cplx(2.0 * k));
        Af *= A2;
    }
    return acc;
}

}  // namespace

cplx g_series(double alpha, double T, cplx s, long long N_trunc,
              double* tail_bound) {
    if (s.real() <= 1.0) throw std::domain_error("g_series: Re s > 1 required");
    if (alpha == 0.0) {
        if (tail_bound) *tail_bound = 0.0;
        return 0.0;
    }
    if (static_cast<double>(N_trunc) < T)
        throw std::domain_error("g_series: insufficient truncation (N_trunc < T)");
    TanhSum ts(alpha, T, N_trunc);
    if (tail_bound) {
        // raw bound of the dropped |tanh| <= 1 tail, before compensation
        double sig = s.real();
        *tail_bound =
            0.5 * std::pow(static_cast<double>(N_trunc), 1.0 - sig) / (sig - 1.0);
    }
    // tail: sum_{l>N} tanh l^{-s}
    //     = tail_zeta(s) - 2 sum_j (-1)^{j+1} e^{j a/2} tail_zeta(s + j dsig)
    // from tanh - 1 = -2 sum_j (-1)^{j+1} e^{j a/2} l^{-j dsig}  (l > sqrt T)
    double A = static_cast<double>(N_trunc) + 0.5;
    double lnA = std::log(A);
    auto tail_zeta = [&](cplx w) {
        return std::exp((1.0 - w) * lnA) / (w - 1.0) + em_tail_corr(w, A);
    };
    cplx tail = tail_zeta(s);
    double ea = std::exp(0.5 * alpha);
    double coef = 1.0;
    for (int j = 1; j <= 400 && coef < 1e280; ++j) {
        coef *= ea;
        double sj = (j % 2 == 1) ? 1.0 : -1.0;  // (-1)^{j+1}
        cplx term = -2.0 * sj * coef * tail_zeta(s + j * ts.dsig);
        tail += term;
        if (std::abs(term) < 1e-16 * (1.0 + std::abs(tail)) && j > 2) break;
    }
    return -0.5 * (ts.tanh_partial(s) + tail);
}

namespace {

cplx hyp_term(double alpha, double T, cplx s) {
    double log_T = std::log(T);
    double ea1 = std::exp(0.5 * alpha) + 1.0;
    cplx w = (1.0 - s) * log_T / alpha;
    cplx F = hyp2f1_11(2.0 - w, cplx(1.0 / ea1));
    cplx T1ms = std::exp((1.0 - s) * log_T);
    return -2.0 * T1ms * log_T / (alpha * ea1 * (1.0 - w)) * F;
}

}  // namespace

cplx g_continued(double alpha, double T, cplx s,
                 const GContinuationParams& params, bool* converged) {
    if (alpha == 0.0) {
        if (converged) *converged = true;
        return 0.0;
    }
    if (s.real() <= 0.0) throw std::domain_error("g_continued: sigma > 0 required");
    double t = std::abs(s.imag());
    if (t < 1e-6 || t > 2.0 * T + 1.0)
        throw std::domain_error("g_continued: needs 0 < |t| <= 2T");
    long long N = params.N > 0 ? params.N
                               : static_cast<long long>(std::ceil(T));
    if (static_cast<double>(N) < T)
        throw std::domain_error("g_continued: N >= T required");

    TanhSum ts(alpha, T, N);
    double A = static_cast<double>(N) + 0.5;
    double lnA = std::log(A), log_T = ts.log_T, dsig = ts.dsig;
    cplx one_ms = 1.0 - s;

    cplx term1 = ts.tanh_partial(s);
    cplx term2 = hyp_term(alpha, T, s);
    cplx term3 = std::exp(one_ms * log_T) / (s - 1.0);
    // smooth integral over [T, A]: plain part in closed form, tanh-1 part by
    // the geometric expansion (also closed form per j)
    cplx term4 = -(std::exp(one_ms * lnA) - std::exp(one_ms * log_T)) / one_ms;
    // psi-part: int_A^inf psi(u) d(tanh u^{-s}); the plain piece is the
    // midpoint Euler-Maclaurin correction at A, the rest again goes through
    // the geometric expansion with s -> s + j dsig.
    cplx psi = em_tail_corr(s, A);

    double ea = std::exp(0.5 * alpha);
    double coef = 1.0;
    double last_rel = 1.0;
    int j_used = 0;
    for (int j = 1; j <= 400 + params.depth && coef < 1e280; ++j) {
        coef *= ea;
        double sj = (j % 2 == 1) ? 1.0 : -1.0;  // (-1)^{j+1}
        cplx e_jm = 1.0 - s - cplx(j * dsig);  // exponent 1 - s - j dsig
        cplx A_pow = std::exp(e_jm * lnA);
        cplx T_pow = std::exp(e_jm * log_T);
        cplx t4 = 2.0 * sj * coef * (A_pow - T_pow) / e_jm;
        cplx ps = -2.0 * sj * coef * em_tail_corr(s + j * dsig, A);
        term4 += t4;
        psi += ps;
        j_used = j;
        double scale = 1.0 + std::abs(term1) + std::abs(psi);
        last_rel = (std::abs(t4) + std::abs(ps)) / scale;
        if (last_rel < 1e-16 && j > 2) break;
    }
    if (converged) *converged = last_rel < 1e-10 && j_used < 400 + params.depth;
    return -0.5 * (term1 + term2 + term3 + term4 + psi);
}

cplx g_approx_eq(double alpha, double T, cplx s) {
    if (alpha == 0.0) return 0.0;
    if (s.real() <= 0.0) throw std::domain_error("g_approx_eq: sigma > 0 required");
    double log_T = std::log(T);
    long long NT = static_cast<long long>(std::floor(T));
    cplx sum = 0.0;
    for (long long n = 1; n <= NT; ++n) {
        double ln = std::log(static_cast<double>(n));
        sum += std::tanh(0.5 * alpha * (ln / log_T - 0.5)) * std::exp(-s * ln);
    }
    cplx term3 = std::exp((1.0 - s) * log_T) / (s - 1.0);
    return -0.5 * (sum + hyp_term(alpha, T, s) + term3);
}

cplx translation_residual(double alpha, double T, cplx s) {
    if (alpha == 0.0) return 0.0;
    double dsig = alpha / std::log(T);
    auto g_at = [&](cplx w) {
        if (w.real() > 1.05)
            return g_series(alpha, T, w, static_cast<long long>(std::ceil(T)) + 8);
        return g_continued(alpha, T, w);
    };
    double ea = std::exp(0.5 * alpha);
    cplx lhs = ea * zeta(s + dsig) - 2.0 * ea * g_at(s + dsig);
    cplx rhs = zeta(s) + 2.0 * g_at(s);
    return lhs - rhs;
}

DirichletPoly build_G(double alpha, double T, int K, int M) {
    if (T > 1e5) throw std::domain_error("build_G: T capped at 1e5");
    RealPoly q;
    if (alpha != 0.0) q = build_q(alpha, K, M);
    double log_T = std::log(T);
    DirichletPoly G;
    long long NT = static_cast<long long>(std::floor(T));
    G.coeffs.resize(NT);
    for (long long l = 1; l <= NT; ++l) {
        double x = std::log(static_cast<double>(l)) / log_T;
        G.coeffs[l - 1] = 0.5 + (alpha != 0.0 ? q(x) : 0.0);
    }
    return G;
}

DirichletPoly build_G_star(double alpha, double T, double R, int K_cal) {
    if (T > 1e5) throw std::domain_error("build_G_star: T capped at 1e5");
    double log_T = std::log(T);
    RealPoly qt = build_q_tilde(alpha, R, K_cal, log_T);
    DirichletPoly G;
    G.sigma_shift = alpha / log_T;
    long long NT = static_cast<long long>(std::floor(T));
    G.coeffs.resize(NT);
    double ea = std::exp(0.5 * alpha);
    for (long long l = 1; l <= NT; ++l) {
        double x = std::log(static_cast<double>(l)) / log_T;
        G.coeffs[l - 1] = ea * (0.5 - qt(x));
    }
    return G;
}

cplx eval_with_delta(const RealPoly& q, double T, cplx s) {
    double log_T = std::log(T);
    cplx delta = std::log(2.0 * kPi * T / s) / (2.0 * log_T);
    long long NT = static_cast<long long>(std::floor(T));
    cplx acc = 0.0;
    for (long long l = 1; l <= NT; ++l) {
        double ln = std::log(static_cast<double>(l));
        cplx z = cplx(ln / log_T) + delta - q.center;
        cplx qv = 0.0;
        for (size_t i = q.coeffs.size(); i-- > 0;) qv = qv * z + q.coeffs[i];
        acc += (0.5 + qv) * std::exp(-s * ln);
    }
    return acc;
}

cplx lambda_exact(double alpha, double T, double R, cplx s_shifted, int K_cal) {
    if (K_cal == 0) return 0.0;
    auto d = zeta_derivs_upto(K_cal, s_shifted);
    if (std::abs(d[0]) <= 1e-8)
        throw std::domain_error("lambda_exact: too close to a zero of zeta");
    double log_T = std::log(T);
    cplx acc = 0.0;
    double lpow = 1.0;
    for (int k = 1; k <= K_cal; ++k) {
        lpow /= log_T;
        acc += c_k_alpha(alpha, R, k, K_cal) * lpow * d[k] / d[0];
    }
    return acc;
}

cplx xi_deriv(int k, cplx s, double radius) {
    if (k < 0 || k > 64) throw std::domain_error("xi_deriv: 0 <= k <= 64");
    int M = std::max(64, 8 * k);
    cplx acc = 0.0;
    for (int j = 0; j < M; ++j) {
        double th = 2.0 * kPi * j / M;
        cplx w = s + radius * cplx(std::cos(th), std::sin(th));
        acc += xi_and_H(w).first * cplx(std::cos(k * th), -std::sin(k * th));
    }
    double kfac = 1.0;
    for (int j = 2; j <= k; ++j) kfac *= j;
    return acc * kfac / (static_cast<double>(M) * std::pow(radius, k));
}

cplx DirichletPoly::eval(cplx s) const {
    cplx w = s + sigma_shift;
    cplx acc = 0.0;
    for (size_t i = 0; i < coeffs.size(); ++i) {
        if (coeffs[i] == cplx(0.0)) continue;
        acc += coeffs[i] * std::exp(-w * std::log(static_cast<double>(i + 1)));
    }
    return acc;
}

std::vector<cplx> DirichletPoly::eval_grid(double sigma,
                                           const std::vector<double>& ts) const {
    // cache n^{-sigma-shift} and log n once; grid points are independent
    size_t m = coeffs.size();
    std::vector<double> ln(m), mag(m);
    double sig = sigma + sigma_shift;
    for (size_t i = 0; i < m; ++i) {
        ln[i] = std::log(static_cast<double>(i + 1));
        mag[i] = std::exp(-sig * ln[i]);
    }
    std::vector<cplx> out(ts.size());
    parallel_for(ts.size(), [&](size_t j) {
        cplx acc = 0.0;
        for (size_t i = 0; i < m; ++i) {
            if (coeffs[i] == cplx(0.0)) continue;
            double ph = -ts[j] * ln[i];
            acc += coeffs[i] * mag[i] * cplx(std::cos(ph), std::sin(ph));
        }
        out[j] = acc;
    });
    return out;
}

double DirichletPoly::abs_bound(double sigma) const {
    double acc = 0.0;
    for (size_t i = 0; i < coeffs.size(); ++i)
        acc += std::abs(coeffs[i]) *
               std::pow(static_cast<double>(i + 1), -sigma - sigma_shift);
    return acc;
}

size_t DirichletPoly::support() const {
    size_t c = 0;
    for (const cplx& v : coeffs)
        if (v != cplx(0.0)) ++c;
    return c;
}

void DirichletPoly::write_binary(std::ostream& os) const {
    for (size_t i = 0; i < coeffs.size(); ++i) {
        if (coeffs[i] == cplx(0.0)) continue;
        uint64_t n = i + 1;
        double re = coeffs[i].real(), im = coeffs[i].imag();
        os.write(reinterpret_cast<const char*>(&n), 8);
        os.write(reinterpret_cast<const char*>(&re), 8);
        os.write(reinterpret_cast<const char*>(&im), 8);
    }
}

DirichletPoly DirichletPoly::read_binary(std::istream& is, double sigma_shift) {
    DirichletPoly p;
    p.sigma_shift = sigma_shift;
    char buf[24];
    while (is.read(buf, 24)) {
        uint64_t n;
        double re, im;
        std::memcpy(&n, buf, 8);
        std::memcpy(&re, buf + 8, 8);
        std::memcpy(&im, buf + 16, 8);
        if (n == 0) throw std::runtime_error("DirichletPoly: bad index 0");
        if (p.coeffs.size() < n) p.coeffs.resize(n);
        p.coeffs[n - 1] = cplx(re, im);
    }
    return p;
}

std::string DirichletPoly::to_json() const {
    nlohmann::json j;
    j["sigma_shift"] = sigma_shift;
    auto& terms = j["terms"] = nlohmann::json::array();
    for (size_t i = 0; i < coeffs.size(); ++i) {
        if (coeffs[i] == cplx(0.0)) continue;
        terms.push_back({i + 1, coeffs[i].real(), coeffs[i].imag()});
    }
    return j.dump();
}

DirichletPoly DirichletPoly::from_json(const std::string& text) {
    auto j = nlohmann::json::parse(text);
    DirichletPoly p;
    p.sigma_shift = j.value("sigma_shift", 0.0);
    for (const auto& t : j["terms"]) {
        uint64_t n = t[0].get<uint64_t>();
        if (n == 0) throw std::runtime_error("DirichletPoly: bad index 0");
        if (p.coeffs.size() < n) p.coeffs.resize(n);
        p.coeffs[n - 1] = cplx(t[1].get<double>(), t[2].get<double>());
    }
    return p;
}

}  // namespace zml
