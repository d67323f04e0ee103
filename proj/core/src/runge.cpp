#include "zml/runge.hpp"

#include <algorithm>
#include <cmath>
#include <json.hpp>
#include <numbers>
#include <limits>
#include <sstream>
#include <stdexcept>

#include "zml/selberg.hpp"

namespace zml {

namespace {

cplx rotate_about(cplx z, cplx center, double angle) {
    return center + std::polar(1.0, angle) * (z - center);
}

// first exit of the ray p + t d (t > 0) through the square [-a,a]^2
cplx ray_box_exit(cplx p, cplx d, double a) {
    double best = std::numeric_limits<double>::infinity();
    if (d.real() != 0.0)
        for (double e : {-a, a}) {
            double t = (e - p.real()) / d.real();
            if (t > 0.0 && std::abs(p.imag() + t * d.imag()) <= a + 1e-12)
                best = std::min(best, t);
        }
    if (d.imag() != 0.0)
        for (double e : {-a, a}) {
            double t = (e - p.imag()) / d.imag();
            if (t > 0.0 && std::abs(p.real() + t * d.real()) <= a + 1e-12)
                best = std::min(best, t);
        }
    if (!std::isfinite(best))
        throw std::runtime_error("build_region: channel does not reach the square");
    return p + best * d;
}

double seg_dist(cplx z, cplx a, cplx b) {
    cplx ab = b - a;
    double L2 = std::norm(ab);
    double t = L2 > 0.0 ? std::clamp(((z - a) * std::conj(ab)).real() / L2, 0.0, 1.0)
                        : 0.0;
    return std::abs(z - (a + t * ab));
}

}  // namespace

JordanRegion build_region(const RegionParams& p) {
    if (!(p.eps0 >= p.eps1 && p.eps1 > 0.0))
        throw std::domain_error("build_region: need eps0 >= eps1 > 0");
    if (!(p.c0 + p.eps0 * p.V_half < p.V_half))
        throw std::domain_error("build_region: notch leaves the square");
    JordanRegion r;
    r.V_half = p.V_half;
    r.c0 = p.c0;
    r.eps0 = p.eps0;
    r.eps1 = p.eps1;
    r.rotation_angle = p.rotation_angle;

    double a = p.V_half, V = p.V_half, c = p.c0;
    cplx nc(-c, 0.0);
    // slot corners around -c0, box part then channel lips, in CCW order of C
    cplx P2(-c - p.eps0 * V, -p.eps1 * V), P3(-c - p.eps0 * V, -p.eps0 * V);
    cplx P4(-c + p.eps1 * V, -p.eps0 * V), P5(-c + p.eps1 * V, p.eps0 * V);
    cplx P6(-c - p.eps0 * V, p.eps0 * V), P7(-c - p.eps0 * V, p.eps1 * V);
    for (cplx* q : {&P2, &P3, &P4, &P5, &P6, &P7})
        *q = rotate_about(*q, nc, p.rotation_angle);
    cplx dir = -std::polar(1.0, p.rotation_angle);  // channel direction
    cplx B_bot = ray_box_exit(P2, dir, a);
    cplx B_top = ray_box_exit(P7, dir, a);

    r.vertices = {cplx(-a, -a), B_bot, P2,  P3,          P4,
                  P5,           P6,    P7,  B_top,       cplx(-a, a),
                  cplx(a, a),   cplx(a, -a)};
    return r;
}

bool JordanRegion::contains(cplx z) const {
    double a = V_half;
    if (std::max(std::abs(z.real()), std::abs(z.imag())) > a) return false;
    // notch test in the frame rotated back about -c0; the removed set is open
    cplx w = rotate_about(z, cplx(-c0, 0.0), -rotation_angle);
    double V = V_half;
    bool box = -c0 - eps0 * V < w.real() && w.real() < -c0 + eps1 * V &&
               -eps0 * V < w.imag() && w.imag() < eps0 * V;
    bool channel = -V <= w.real() && w.real() <= -c0 - eps0 * V &&
                   -eps1 * V < w.imag() && w.imag() < eps1 * V;
    return !(box || channel);
}

bool JordanRegion::on_boundary(cplx z, double tol) const {
    size_t n = vertices.size();
    for (size_t i = 0; i < n; ++i)
        if (seg_dist(z, vertices[i], vertices[(i + 1) % n]) < tol) return true;
    return false;
}

std::vector<cplx> JordanRegion::boundary_samples(int m) const {
    size_t n = vertices.size();
    double perim = 0.0;
    for (size_t i = 0; i < n; ++i)
        perim += std::abs(vertices[(i + 1) % n] - vertices[i]);
    double step = perim / m;
    std::vector<cplx> out;
    out.reserve(m);
    size_t edge = 0;
    double edge_start = 0.0;
    double edge_len = std::abs(vertices[1 % n] - vertices[0]);
    for (int k = 0; k < m; ++k) {
        double pos = k * step;
        while (pos > edge_start + edge_len && edge + 1 < n) {
            edge_start += edge_len;
            ++edge;
            edge_len = std::abs(vertices[(edge + 1) % n] - vertices[edge]);
        }
        cplx a = vertices[edge], b = vertices[(edge + 1) % n];
        double u = edge_len > 0.0 ? (pos - edge_start) / edge_len : 0.0;
        out.push_back(a + (b - a) * std::min(u, 1.0));
    }
    return out;
}

std::string JordanRegion::to_json() const {
    nlohmann::json j;
    j["V_half"] = V_half;
    j["c0"] = c0;
    j["eps0"] = eps0;
    j["eps1"] = eps1;
    j["rotation_angle"] = rotation_angle;
    auto& v = j["vertices"] = nlohmann::json::array();
    for (const cplx& z : vertices) v.push_back({z.real(), z.imag()});
    return j.dump();
}

InterpolationSet leja_points(const JordanRegion& region, int n) {
    if (n < 1 || n > 200) throw std::domain_error("leja_points: 1 <= n <= 200");
    auto samples = region.boundary_samples(std::max(10000, 64 * n));
    samples.insert(samples.end(), region.vertices.begin(), region.vertices.end());

    InterpolationSet set;
    set.degree = n - 1;
    size_t first = 0;
    for (size_t i = 1; i < samples.size(); ++i)
        if (std::abs(samples[i]) > std::abs(samples[first])) first = i;
    set.nodes.push_back(samples[first]);

    // log-product greedy; -inf marks coincidence with a chosen node
    std::vector<double> logprod(samples.size(), 0.0);
    for (int k = 1; k < n; ++k) {
        cplx last = set.nodes.back();
        size_t best = 0;
        double best_val = -std::numeric_limits<double>::infinity();
        for (size_t i = 0; i < samples.size(); ++i) {
            double d = std::abs(samples[i] - last);
            logprod[i] = d > 0.0 ? logprod[i] + std::log(d)
                                 : -std::numeric_limits<double>::infinity();
            if (logprod[i] > best_val) {
                best_val = logprod[i];
                best = i;
            }
        }
        set.nodes.push_back(samples[best]);
    }
    return set;
}

cplx NewtonPoly::eval_raw(cplx w) const {
    cplx acc = coeffs.back();
    for (size_t i = coeffs.size() - 1; i-- > 0;)
        acc = acc * (w - nodes[i]) + coeffs[i];
    return acc;
}

std::string NewtonPoly::to_json() const {
    nlohmann::json j;
    auto put = [](nlohmann::json& arr, const std::vector<cplx>& v) {
        for (const cplx& z : v) arr.push_back({z.real(), z.imag()});
    };
    j["nodes"] = nlohmann::json::array();
    j["coeffs"] = nlohmann::json::array();
    put(j["nodes"], nodes);
    put(j["coeffs"], coeffs);
    j["shift"] = {shift.real(), shift.imag()};
    return j.dump();
}

NewtonPoly interpolate_L(const JordanRegion& region, int n, double c0,
                         double M_tilde, double* sup_error) {
    auto f = [&](cplx w) { return M_tilde / (c0 + w); };
    auto set = leja_points(region, n + 1);
    NewtonPoly p;
    p.nodes = set.nodes;
    p.coeffs.resize(n + 1);
    for (int i = 0; i <= n; ++i) p.coeffs[i] = f(p.nodes[i]);
    for (int j = 1; j <= n; ++j)
        for (int i = n; i >= j; --i)
            p.coeffs[i] = (p.coeffs[i] - p.coeffs[i - 1]) / (p.nodes[i] - p.nodes[i - j]);

    if (sup_error) {
        double sup = 0.0;
        for (cplx z : region.boundary_samples(1000))
            sup = std::max(sup, std::abs(f(z) - p.eval_raw(z)));
        *sup_error = sup;
    }

    // complex Newton for the shift: p(z0) = M_tilde/c0, starting at 0
    cplx target(M_tilde / c0, 0.0);
    cplx z0 = 0.0;
    bool done = false;
    for (int it = 0; it < 60; ++it) {
        // simultaneous value/derivative evaluation of the Newton form
        cplx v = p.coeffs[n], dv = 0.0;
        for (int i = n - 1; i >= 0; --i) {
            dv = dv * (z0 - p.nodes[i]) + v;
            v = v * (z0 - p.nodes[i]) + p.coeffs[i];
        }
        cplx g = v - target;
        if (std::abs(g) < 1e-14 * (1.0 + std::abs(target))) {
            done = true;
            break;
        }
        if (std::abs(dv) < 1e-300) break;
        z0 -= g / dv;
        if (std::abs(z0) > 10.0 * region.eps1 * region.V_half) break;
    }
    if (!done || std::abs(z0) > region.eps1 * region.V_half)
        throw std::runtime_error("interpolate_L: no admissible shift z0");
    p.shift = z0;
    return p;
}

std::string error_sweep_csv(const JordanRegion& region, double c0,
                            double M_tilde, const std::vector<int>& degrees) {
    std::ostringstream os;
    os << "n,sup_error\n";
    os.setf(std::ios::scientific);
    os.precision(6);
    for (int n : degrees) {
        double sup = 0.0;
        interpolate_L(region, n, c0, M_tilde, &sup);
        os << n << "," << sup << "\n";
    }
    return os.str();
}

double ConreyP::operator()(double x) const {
    return std::sinh((alpha - R) * (theta - x)) / std::sinh((alpha - R) * theta);
}
double ConreyP::raw(double x) const {
    return std::sinh((alpha - R) * x * theta) / std::sinh((alpha - R) * theta);
}

ConreyP conrey_P_optimal(double alpha, double R, double theta) {
    if (!(alpha > R)) throw std::domain_error("conrey_P_optimal: alpha > R");
    ConreyP P;
    P.alpha = alpha;
    P.R = R;
    P.theta = theta;

    // degree-16 Chebyshev interpolant of the reflected form on [0, theta]
    constexpr int N = 17;
    double mid = 0.5 * theta, rad = 0.5 * theta;
    double fx[N], cc[N];
    for (int j = 0; j < N; ++j)
        fx[j] = P(mid + rad * std::cos(std::numbers::pi * (j + 0.5) / N));
    for (int k = 0; k < N; ++k) {
        double s = 0.0;
        for (int j = 0; j < N; ++j)
            s += fx[j] * std::cos(std::numbers::pi * k * (j + 0.5) / N);
        cc[k] = 2.0 * s / N;
    }
    cc[0] *= 0.5;

    // accumulate T_k((x-mid)/rad) into monomials of u = x - mid
    std::vector<double> prev = {1.0}, cur = {0.0, 1.0 / rad}, acc(N, 0.0);
    acc[0] = cc[0];
    for (size_t i = 0; i < cur.size(); ++i) acc[i] += cc[1] * cur[i];
    for (int k = 2; k < N; ++k) {
        std::vector<double> next(cur.size() + 1, 0.0);
        for (size_t i = 0; i < cur.size(); ++i) next[i + 1] = 2.0 / rad * cur[i];
        for (size_t i = 0; i < prev.size(); ++i) next[i] -= prev[i];
        for (size_t i = 0; i < next.size(); ++i) acc[i] += cc[k] * next[i];
        prev = std::move(cur);
        cur = std::move(next);
    }
    P.cheb.coeffs = acc;
    P.cheb.center = mid;

    double sup = 0.0;
    for (int i = 0; i <= 1000; ++i) {
        double x = theta * i / 1000.0;
        sup = std::max(sup, std::abs(P.cheb(x) - P(x)));
    }
    P.cheb_sup_error = sup;
    return P;
}

DirichletPoly mollifier_M(const MollifierParams& p) {
    double M_real = std::pow(p.T, p.theta);
    if (M_real > 1e7) throw std::domain_error("mollifier_M: T^theta > 1e7");
    uint64_t M = static_cast<uint64_t>(M_real * (1.0 + 1e-12));
    auto P = conrey_P_optimal(p.alpha, p.R, p.theta);
    auto mu = moebius_table(M);
    double log_T = std::log(p.T);
    DirichletPoly out;
    out.sigma_shift = p.R / log_T;
    out.coeffs.resize(M);
    for (uint64_t m = 1; m <= M; ++m) {
        if (mu[m] == 0) continue;
        out.coeffs[m - 1] =
            static_cast<double>(mu[m]) * P(std::log(static_cast<double>(m)) / log_T);
    }
    return out;
}

double conrey_c1R(double R_bar, double theta) {
    if (!(R_bar > 0.0 && theta > 0.0 && theta < 4.0 / 7.0))
        throw std::domain_error("conrey_c1R: R_bar > 0, theta in (0, 4/7)");
    double e2 = std::exp(-2.0 * R_bar);
    return 0.5 + 0.5 * e2 + 0.5 * (1.0 - e2) / std::tanh(theta * R_bar);
}

double conrey_c1R_defn(double R_bar, double theta) {
    double w0 = 1.0, w1 = std::exp(-R_bar);
    double A = integrate_gl([&](double y) { return cplx(std::exp(-2.0 * R_bar * y)); },
                            0.0, 1.0, 16, 16)
                   .real();
    double C = theta * theta *
               integrate_gl(
                   [&](double y) {
                       return cplx(R_bar * R_bar * std::exp(-2.0 * R_bar * y));
                   },
                   0.0, 1.0, 16, 16)
                   .real();
    double alpha_bar = std::sqrt(C / A);
    return 0.5 * (w0 * w0 + w1 * w1) + A * alpha_bar / (theta * std::tanh(alpha_bar));
}

}  // namespace zml
