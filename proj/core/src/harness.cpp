#include "zml/harness.hpp"

#include <algorithm>
#include <chrono>
#include <cmath>
#include <json.hpp>
#include <stdexcept>

#include "zml/parallel.hpp"

namespace zml {

namespace {

// mask-split node-mean quadrature on precomputed |F|, |L(A)| arrays
IntegralSplit integrate_values(const WindowGrid& g,
                               const std::vector<double>& Fv,
                               const std::vector<double>& LAv) {
    const size_t n = g.size();
    IntegralSplit r;
    double sumF = 0.0, sumFE = 0.0, sumLog = 0.0, sumLogF = 0.0;
    size_t nW = 0, nE = 0, excluded = 0;
    for (size_t i = 0; i < n; ++i) {
        if (Fv[i] > 0.0) sumLogF += std::log(Fv[i]);
        if (!g.mask[i]) {
            sumF += Fv[i];
            ++nW;
        } else if (LAv[i] < 1e-12) {
            ++excluded;
            r.near_zero_flag = true;
        } else {
            sumFE += Fv[i] / LAv[i];
            sumLog += std::log(LAv[i]);
            ++nE;
        }
    }
    r.I = nW ? sumF / static_cast<double>(nW) : 1.0;
    r.I_E = nE ? sumFE / static_cast<double>(nE) : 0.0;
    r.L_E = n ? sumLog / static_cast<double>(n) : 0.0;
    r.log_mean_F = n ? sumLogF / static_cast<double>(n) : 0.0;
    r.excluded_measure = g.step * static_cast<double>(excluded);

    // Richardson gauge: the same mean on the every-other-node subgrid
    double sumF2 = 0.0;
    size_t nW2 = 0;
    for (size_t i = 0; i < n; i += 2)
        if (!g.mask[i]) {
            sumF2 += Fv[i];
            ++nW2;
        }
    double I2 = nW2 ? sumF2 / static_cast<double>(nW2) : r.I;
    r.I_halfstep_delta = std::abs(r.I - I2) / 3.0;
    return r;
}

MaskMeasure mask_from_values(WindowGrid& g, const std::vector<cplx>& Av,
                             const JordanRegion& region) {
    MaskMeasure m;
    const size_t n = g.size();
    size_t out_sq = 0, in_notch = 0;
    for (size_t i = 0; i < n; ++i) {
        bool in = region.contains(Av[i]);
        g.mask[i] = in ? 0 : 1;
        if (!in) {
            if (std::max(std::abs(Av[i].real()), std::abs(Av[i].imag())) >
                region.V_half)
                ++out_sq;
            else
                ++in_notch;
        }
    }
    double dn = static_cast<double>(n ? n : 1);
    m.eps_E = static_cast<double>(out_sq + in_notch) / dn;
    m.outside_square = static_cast<double>(out_sq) / dn;
    m.in_notch = static_cast<double>(in_notch) / dn;
    return m;
}

}  // namespace

WindowGrid WindowGrid::make(double t_lo, double t_hi, double step) {
    if (!(step > 0.0) || !(t_hi >= t_lo))
        throw std::domain_error("WindowGrid: need step > 0 and t_hi >= t_lo");
    WindowGrid g;
    g.t_lo = t_lo;
    g.t_hi = t_hi;
    g.step = step;
    auto count = static_cast<size_t>(std::floor((t_hi - t_lo) / step)) + 1;
    g.mask.assign(count, 0);
    return g;
}

std::vector<double> WindowGrid::nodes() const {
    std::vector<double> ts(size());
    for (size_t i = 0; i < ts.size(); ++i) ts[i] = node(i);
    return ts;
}

double WindowGrid::exceptional_measure() const {
    size_t c = 0;
    for (uint8_t m : mask) c += m ? 1 : 0;
    return step * static_cast<double>(c);
}

double WindowGrid::eps_E() const {
    return size() ? exceptional_measure() / window_measure() : 0.0;
}

std::vector<std::pair<double, double>> WindowGrid::exceptional_intervals()
    const {
    std::vector<std::pair<double, double>> runs;
    size_t i = 0, n = size();
    while (i < n) {
        if (!mask[i]) {
            ++i;
            continue;
        }
        size_t j = i;
        while (j + 1 < n && mask[j + 1]) ++j;
        runs.emplace_back(node(i), node(j));
        i = j + 1;
    }
    return runs;
}

IntegralSplit integrate_abs_F(const WindowGrid& g, const RealEval& abs_F,
                              const RealEval& abs_LA) {
    const size_t n = g.size();
    std::vector<double> Fv(n), LAv(n);
    parallel_for(n, [&](size_t i) {
        double t = g.node(i);
        Fv[i] = abs_F(t);
        LAv[i] = g.mask[i] ? abs_LA(t) : 0.0;
    });
    return integrate_values(g, Fv, LAv);
}

KappaBound kappa_bound(double R, double I, double I_E, double L_E,
                       double eps_E) {
    if (!(R > 0.0)) throw std::domain_error("kappa_bound: R > 0");
    double deficit = std::log(I) + (eps_E > 0.0 && I_E > 0.0
                                        ? eps_E * std::log(I_E)
                                        : 0.0) +
                     L_E;
    KappaBound kb;
    kb.raw = 1.0 - (2.0 / R) * deficit;
    kb.clamped = std::min(kb.raw, 1.0);
    return kb;
}

MaskMeasure exceptional_mask(WindowGrid& g, const CplxEval& A,
                             const JordanRegion& region) {
    std::vector<cplx> Av(g.size());
    parallel_for(g.size(), [&](size_t i) { Av[i] = A(g.node(i)); });
    return mask_from_values(g, Av, region);
}

std::string Histogram::to_csv() const {
    std::string out = "lo,hi,count\n";
    char buf[96];
    for (size_t b = 0; b + 1 < edges.size(); ++b) {
        std::snprintf(buf, sizeof buf, "%.12g,%.12g,%.12g\n", edges[b],
                      edges[b + 1], counts[b]);
        out += buf;
    }
    return out;
}

double lester_variance(double sigma, double* tail_bound) {
    if (!(sigma > 0.5)) throw std::domain_error("lester_variance: sigma > 1/2");
    const uint64_t N = 1'000'000;
    // Lambda is supported on prime powers; sieve the primes once
    static const std::vector<uint64_t> primes = [] {
        std::vector<uint8_t> comp(1'000'001, 0);
        std::vector<uint64_t> ps;
        for (uint64_t p = 2; p <= 1'000'000; ++p) {
            if (comp[p]) continue;
            ps.push_back(p);
            for (uint64_t q = p * p; q <= 1'000'000; q += p) comp[q] = 1;
        }
        return ps;
    }();
    double acc = parallel_reduce<double>(
        primes.size(), [&](size_t lo, size_t hi) {
            double s = 0.0;
            for (size_t i = lo; i < hi; ++i) {
                double lp = std::log(static_cast<double>(primes[i]));
                for (double pk = static_cast<double>(primes[i]); pk <= 1e6;
                     pk *= static_cast<double>(primes[i]))
                    s += lp * lp * std::pow(pk, -2.0 * sigma);
            }
            return s;
        });
    // tail: sum_{n>N} log^2(n) n^{-2 sigma} <= int_N^inf log^2 x x^{-2s} dx
    double a = 2.0 * sigma - 1.0, u = std::log(static_cast<double>(N));
    double tail =
        std::exp(-a * u) * (u * u / a + 2.0 * u / (a * a) + 2.0 / (a * a * a));
    if (tail_bound) *tail_bound = 0.5 * tail;
    return 0.5 * acc;
}

Histogram value_histogram(const WindowGrid& g, const CplxEval& f, double V,
                          int bins) {
    if (bins < 1 || !(V > 0.0))
        throw std::domain_error("value_histogram: bins >= 1, V > 0");
    const size_t n = g.size();
    std::vector<double> r(n);
    double sv = std::sqrt(V);
    parallel_for(n, [&](size_t i) { r[i] = std::abs(f(g.node(i))) / sv; });

    Histogram h;
    double rmax = n ? *std::max_element(r.begin(), r.end()) : 1.0;
    if (rmax <= 0.0) rmax = 1.0;
    h.edges.resize(bins + 1);
    h.counts.assign(bins, 0.0);
    for (int b = 0; b <= bins; ++b) h.edges[b] = rmax * b / bins;
    for (double v : r) {
        int b = std::min(bins - 1, static_cast<int>(v / rmax * bins));
        h.counts[b] += 1.0;
    }

    std::vector<double> sorted = r;
    std::sort(sorted.begin(), sorted.end());
    double sup = 0.0;
    for (size_t i = 0; i < sorted.size(); ++i) {
        double law = 1.0 - std::exp(-0.5 * sorted[i] * sorted[i]);
        double hi = static_cast<double>(i + 1) / static_cast<double>(n);
        double lo = static_cast<double>(i) / static_cast<double>(n);
        sup = std::max({sup, std::abs(hi - law), std::abs(lo - law)});
    }
    h.sup_cdf_distance = sup;
    return h;
}

MeanSquareResult mean_square_experiment(const MeanSquareParams& p) {
    if (!(p.window >= 1e3))
        throw std::domain_error("mean_square: window >= 1e3");
    if (p.use_mollifier && std::pow(p.T, p.theta) > 1e7)
        throw std::domain_error("mean_square: T^theta <= 1e7");
    double lT = std::log(p.T);
    double a = 0.5 + p.R_bar / lT;
    auto n = static_cast<size_t>(std::llround(p.window / p.step));
    std::vector<double> ts(n);
    for (size_t i = 0; i < n; ++i)
        ts[i] = p.T + static_cast<double>(i) * p.step;

    std::vector<double> m2(n, 1.0);
    if (p.use_mollifier) {
        DirichletPoly M =
            mollifier_M({p.T, p.theta, p.R_bar, p.alpha});
        auto Mv = M.eval_grid(a, ts);
        for (size_t i = 0; i < n; ++i) m2[i] = std::norm(Mv[i]);
    }
    double total = parallel_reduce<double>(n, [&](size_t lo, size_t hi) {
        double s = 0.0;
        for (size_t i = lo; i < hi; ++i)
            s += std::norm(zeta(cplx(a, ts[i]))) * m2[i];
        return s;
    });

    MeanSquareResult r;
    r.integral = total / static_cast<double>(n);
    if (p.use_mollifier) {
        r.c1R = conrey_c1R(p.R_bar, p.theta);
        r.ratio = r.integral / r.c1R;
    } else {
        r.ratio = r.integral;
    }
    return r;
}

ZeroProportion zero_proportion_check(double t_lo, double t_hi) {
    ZeroProportion zp;
    if (!(t_hi > t_lo)) return zp;  // empty window: ratio 1 by convention
    double lo_count = t_lo > 14.0 ? argument_count(t_lo) : 0.0;
    zp.N = argument_count(t_hi) - lo_count;
    auto zl = find_zeros(t_lo, t_hi);
    zp.N0 = static_cast<long long>(zl.ordinates.size());
    zp.ratio = zp.N > 0.5 ? static_cast<double>(zp.N0) / zp.N : 1.0;
    zp.warning = std::abs(zp.N - static_cast<double>(zp.N0)) > 0.5;
    return zp;
}

void ExperimentParams::validate() const {
    if (mode != "levinson" && mode != "meansquare")
        throw std::domain_error("params: mode is levinson or meansquare");
    if (!(T > 1.0) || !(alpha > 0.0) || !(R > 0.0))
        throw std::domain_error("params: need T > 1, alpha > 0, R > 0");
    if (!(step > 0.0) || !(t_hi > t_lo))
        throw std::domain_error("params: need step > 0, t_hi > t_lo");
    if (interp_degree < 1 || interp_degree > 200)
        throw std::domain_error("params: 1 <= interp_degree <= 200");
    if (!(theta > 0.0) || !(theta < 1.0))
        throw std::domain_error("params: theta in (0,1)");
}

std::string ExperimentParams::to_json() const {
    nlohmann::json j;
    j["mode"] = mode;
    j["alpha"] = alpha;
    j["R"] = R;
    j["C"] = C;
    j["T"] = T;
    j["theta"] = theta;
    j["M_tilde"] = M_tilde;
    j["delta_T"] = delta_T;
    j["x"] = x;
    j["x0"] = x0;
    j["x1"] = x1;
    j["A_scale"] = A_scale;
    j["K"] = K;
    j["K_cal"] = K_cal;
    j["interp_degree"] = interp_degree;
    j["region"] = {{"V_half", region.V_half}, {"c0", region.c0},
                   {"eps0", region.eps0},     {"eps1", region.eps1},
                   {"rotation_angle", region.rotation_angle}};
    j["grid"] = {{"t_lo", t_lo}, {"t_hi", t_hi}, {"step", step}};
    j["meansquare"] = {{"R_bar", ms_R_bar},
                       {"theta", ms_theta},
                       {"window", ms_window},
                       {"step", ms_step},
                       {"use_mollifier", use_mollifier}};
    j["toggles"] = {{"histogram", histogram},
                    {"histogram_bins", histogram_bins}};
    return j.dump(2);
}

namespace {

// read-and-erase helpers so leftover keys can be rejected
template <class T>
void take(nlohmann::json& j, const char* key, T& dst) {
    if (auto it = j.find(key); it != j.end()) {
        dst = it->get<T>();
        j.erase(it);
    }
}

void reject_leftovers(const nlohmann::json& j, const std::string& where) {
    if (!j.empty())
        throw std::invalid_argument("config: unknown key \"" +
                                    j.begin().key() + "\" in " + where);
}

}  // namespace

ExperimentParams from_config_json(const std::string& text) {
    nlohmann::json j = nlohmann::json::parse(text);
    if (!j.is_object()) throw std::invalid_argument("config: not an object");
    ExperimentParams p;
    take(j, "mode", p.mode);
    take(j, "alpha", p.alpha);
    take(j, "R", p.R);
    take(j, "C", p.C);
    take(j, "T", p.T);
    take(j, "theta", p.theta);
    take(j, "M_tilde", p.M_tilde);
    take(j, "delta_T", p.delta_T);
    take(j, "x", p.x);
    take(j, "x0", p.x0);
    take(j, "x1", p.x1);
    take(j, "A_scale", p.A_scale);
    take(j, "K", p.K);
    take(j, "K_cal", p.K_cal);
    take(j, "interp_degree", p.interp_degree);
    if (auto it = j.find("region"); it != j.end()) {
        nlohmann::json b = *it;
        j.erase(it);
        take(b, "V_half", p.region.V_half);
        take(b, "c0", p.region.c0);
        take(b, "eps0", p.region.eps0);
        take(b, "eps1", p.region.eps1);
        take(b, "rotation_angle", p.region.rotation_angle);
        reject_leftovers(b, "region");
    }
    if (auto it = j.find("grid"); it != j.end()) {
        nlohmann::json b = *it;
        j.erase(it);
        take(b, "t_lo", p.t_lo);
        take(b, "t_hi", p.t_hi);
        take(b, "step", p.step);
        reject_leftovers(b, "grid");
    }
    if (auto it = j.find("meansquare"); it != j.end()) {
        nlohmann::json b = *it;
        j.erase(it);
        take(b, "R_bar", p.ms_R_bar);
        take(b, "theta", p.ms_theta);
        take(b, "window", p.ms_window);
        take(b, "step", p.ms_step);
        take(b, "use_mollifier", p.use_mollifier);
        reject_leftovers(b, "meansquare");
    }
    if (auto it = j.find("toggles"); it != j.end()) {
        nlohmann::json b = *it;
        j.erase(it);
        take(b, "histogram", p.histogram);
        take(b, "histogram_bins", p.histogram_bins);
        reject_leftovers(b, "toggles");
    }
    reject_leftovers(j, "top level");
    p.validate();
    return p;
}

std::string RunReport::to_json() const {
    nlohmann::json j;
    j["params"] = nlohmann::json::parse(params.to_json());
    j["I"] = I;
    j["I_E"] = I_E;
    j["L_E"] = L_E;
    j["eps_E"] = eps_E;
    j["kappa_raw"] = kappa_raw;
    j["kappa_bound"] = kappa;
    j["splitting_gap"] = splitting_gap;
    j["N_window"] = N_window;
    j["N00_estimate"] = N00_estimate;
    j["I_halfstep_delta"] = I_halfstep_delta;
    j["excluded_measure"] = excluded_measure;
    j["near_zero_flag"] = near_zero_flag;
    j["ms_ratio"] = ms_ratio;
    j["ms_c1R"] = ms_c1R;
    j["ms_integral"] = ms_integral;
    if (!hist.edges.empty()) {
        j["histogram"] = {{"edges", hist.edges},
                          {"counts", hist.counts},
                          {"sup_cdf_distance", hist.sup_cdf_distance}};
    }
    j["timing_ms"] = timing_ms;
    return j.dump(2);
}

RunReport run_levinson(const ExperimentParams& p) {
    p.validate();
    auto t_start = std::chrono::steady_clock::now();
    RunReport rep;
    rep.params = p;

    double lT = std::log(p.T);
    double a = 0.5 - p.R / lT;
    WindowGrid grid = WindowGrid::make(p.t_lo, p.t_hi, p.step);
    auto ts = grid.nodes();
    const size_t n = ts.size();

    // F = G * M on the a-line
    DirichletPoly G = build_G(p.alpha, p.T, 16, 16);
    DirichletPoly M = mollifier_M({p.T, p.theta, p.R, p.alpha});
    auto Gv = G.eval_grid(a, ts);
    auto Mv = M.eval_grid(a, ts);
    std::vector<double> Fv(n);
    for (size_t i = 0; i < n; ++i) Fv[i] = std::abs(Gv[i] * Mv[i]);

    // A from the Selberg assembly, L(A) from the Leja interpolant
    SelbergParams sp;
    sp.alpha = p.alpha;
    sp.R = p.R;
    sp.C = p.C;
    sp.T = p.T;
    sp.x = p.x;
    sp.x0 = p.x0;
    sp.x1 = p.x1;
    sp.K = p.K;
    std::vector<double> omegas(static_cast<size_t>(p.K), 1.0);
    auto Av = assemble_A_grid(sp, ts, omegas);
    for (auto& v : Av) v *= p.A_scale;

    JordanRegion region = build_region(p.region);
    NewtonPoly L =
        interpolate_L(region, p.interp_degree, region.c0, p.M_tilde);
    std::vector<double> LAv(n);
    parallel_for(n, [&](size_t i) { LAv[i] = std::abs(L(Av[i])); });

    MaskMeasure mm = mask_from_values(grid, Av, region);
    IntegralSplit split = integrate_values(grid, Fv, LAv);

    rep.I = split.I;
    rep.I_E = split.I_E;
    rep.L_E = split.L_E;
    rep.eps_E = mm.eps_E;
    rep.I_halfstep_delta = split.I_halfstep_delta;
    rep.excluded_measure = split.excluded_measure;
    rep.near_zero_flag = split.near_zero_flag;
    KappaBound kb = kappa_bound(p.R, split.I, split.I_E, split.L_E, mm.eps_E);
    rep.kappa_raw = kb.raw;
    rep.kappa = kb.clamped;
    double rhs = std::log(split.I) +
                 (mm.eps_E > 0.0 && split.I_E > 0.0
                      ? mm.eps_E * std::log(split.I_E)
                      : 0.0) +
                 split.L_E;
    rep.splitting_gap = rhs - split.log_mean_F;
    rep.N_window = argument_count(p.t_hi) - argument_count(p.t_lo);
    rep.N00_estimate = std::max(0.0, kb.clamped) * rep.N_window;

    if (p.histogram) {
        double sigma = 0.5 + 3.0 / lT;
        double V = lester_variance(sigma);
        rep.hist = value_histogram(
            grid,
            [&](double t) {
                auto d = zeta_derivs_upto(1, cplx(sigma, t));
                return d[1] / d[0];
            },
            V, p.histogram_bins);
    }

    rep.timing_ms = std::chrono::duration<double, std::milli>(
                        std::chrono::steady_clock::now() - t_start)
                        .count();
    return rep;
}

RunReport run_meansquare(const ExperimentParams& p) {
    p.validate();
    auto t_start = std::chrono::steady_clock::now();
    RunReport rep;
    rep.params = p;
    MeanSquareParams mp;
    mp.R_bar = p.ms_R_bar;
    mp.theta = p.ms_theta;
    mp.T = p.T;
    mp.window = p.ms_window;
    mp.step = p.ms_step;
    mp.use_mollifier = p.use_mollifier;
    mp.alpha = p.alpha;
    auto r = mean_square_experiment(mp);
    rep.ms_ratio = r.ratio;
    rep.ms_c1R = r.c1R;
    rep.ms_integral = r.integral;
    rep.timing_ms = std::chrono::duration<double, std::milli>(
                        std::chrono::steady_clock::now() - t_start)
                        .count();
    return rep;
}

RunReport run_experiment(const ExperimentParams& p) {
    return p.mode == "meansquare" ? run_meansquare(p) : run_levinson(p);
}

}  // namespace zml
