#include "zml/selberg.hpp"

#include <algorithm>
#include <cmath>
#include <map>
#include <mutex>
#include <stdexcept>

#include "zml/parallel.hpp"

namespace zml {

namespace {

constexpr uint64_t kSieveMax = 100000000;  // 1e8
constexpr uint64_t kBlock = 1 << 20;

// smallest prime factor by trial division; n <= 1e8 so sqrt(n) <= 1e4
uint64_t smallest_factor(uint64_t n) {
    if (n % 2 == 0) return 2;
    for (uint64_t d = 3; d * d <= n; d += 2)
        if (n % d == 0) return d;
    return n;
}

// odd-only base sieve up to lim (inclusive)
std::vector<uint64_t> primes_upto(uint64_t lim) {
    std::vector<bool> comp(lim + 1, false);
    std::vector<uint64_t> out;
    for (uint64_t p = 2; p <= lim; ++p) {
        if (comp[p]) continue;
        out.push_back(p);
        for (uint64_t q = p * p; q <= lim; q += p) comp[q] = true;
    }
    return out;
}

// segmented sieve in 2^20 blocks, calling f(p) for each prime p <= limit
template <class F>
void for_each_prime(uint64_t limit, F&& f) {
    if (limit < 2) return;
    uint64_t root = static_cast<uint64_t>(std::sqrt(static_cast<double>(limit))) + 1;
    auto base = primes_upto(root);
    for (uint64_t p : base)
        if (p <= limit) f(p);
    std::vector<bool> comp(kBlock);
    for (uint64_t lo = root + 1; lo <= limit; lo += kBlock) {
        uint64_t hi = std::min(limit, lo + kBlock - 1);
        std::fill(comp.begin(), comp.end(), false);
        for (uint64_t p : base) {
            uint64_t start = ((lo + p - 1) / p) * p;
            for (uint64_t q = start; q <= hi; q += p) comp[q - lo] = true;
        }
        for (uint64_t n = lo; n <= hi; ++n)
            if (!comp[n - lo]) f(n);
    }
}

// the piecewise damping factor Lambda_x(n)/Lambda(n), via logs
double selberg_factor(double x, double ln_n) {
    double L = std::log(x);
    if (ln_n <= L) return 1.0;
    double a = 3.0 * L - ln_n;  // log(x^3/n)
    if (ln_n <= 2.0 * L) {
        double b = a - L;  // log(x^2/n)
        return (a * a - 2.0 * b * b) / (2.0 * L * L);
    }
    return a * a / (2.0 * L * L);
}

std::map<long long, SelbergWeightTable>& table_cache() {
    static std::map<long long, SelbergWeightTable> c;
    return c;
}
std::mutex table_mutex;

}  // namespace

double von_mangoldt(uint64_t n) {
    if (n > kSieveMax) throw std::domain_error("von_mangoldt: n > 1e8");
    if (n < 2) return 0.0;
    uint64_t p = smallest_factor(n);
    while (n % p == 0) n /= p;
    return n == 1 ? std::log(static_cast<double>(p)) : 0.0;
}

int moebius(uint64_t n) {
    if (n > kSieveMax) throw std::domain_error("moebius: n > 1e8");
    if (n == 0) return 0;
    int sign = 1;
    while (n > 1) {
        uint64_t p = smallest_factor(n);
        n /= p;
        if (n % p == 0) return 0;
        sign = -sign;
    }
    return sign;
}

std::vector<int8_t> moebius_table(uint64_t N) {
    if (N > kSieveMax) throw std::domain_error("moebius_table: N > 1e8");
    std::vector<int8_t> mu(N + 1, 0);
    if (N >= 1) mu[1] = 1;
    std::vector<bool> comp(N + 1, false);
    std::vector<uint64_t> primes;
    for (uint64_t i = 2; i <= N; ++i) {
        if (!comp[i]) {
            primes.push_back(i);
            mu[i] = -1;
        }
        for (uint64_t p : primes) {
            if (i * p > N) break;
            comp[i * p] = true;
            if (i % p == 0) {
                mu[i * p] = 0;
                break;
            }
            mu[i * p] = -mu[i];
        }
    }
    return mu;
}

double lambda_x(double x, uint64_t n) {
    if (x < 2.0) throw std::domain_error("lambda_x: x >= 2 required");
    double X3 = x * x * x;
    if (n < 2 || static_cast<double>(n) > X3 * (1.0 + 1e-12))
        throw std::domain_error("lambda_x: need 2 <= n <= x^3");
    double lam = von_mangoldt(n);
    if (lam == 0.0) return 0.0;
    return lam * selberg_factor(x, std::log(static_cast<double>(n)));
}

const SelbergWeightTable& selberg_table(double x) {
    if (x < 2.0 || x * x * x > static_cast<double>(kSieveMax))
        throw std::domain_error("selberg_table: need 2 <= x, x^3 <= 1e8");
    long long key = llround(x * 1e6);
    std::lock_guard<std::mutex> lock(table_mutex);
    auto it = table_cache().find(key);
    if (it != table_cache().end()) return it->second;

    SelbergWeightTable tab;
    tab.x = x;
    uint64_t X = static_cast<uint64_t>(x * x * x * (1.0 + 1e-12));
    for_each_prime(X, [&](uint64_t p) {
        double lp = std::log(static_cast<double>(p));
        for (uint64_t q = p;; q *= p) {
            double w = lp * selberg_factor(x, std::log(static_cast<double>(q)));
            if (w > 0.0) tab.weights.emplace_back(q, w);
            if (q > X / p) break;
        }
    });
    std::sort(tab.weights.begin(), tab.weights.end());
    return table_cache().emplace(key, std::move(tab)).first->second;
}

namespace {

cplx table_sum(const SelbergWeightTable& tab, cplx s, bool over_log) {
    const auto& w = tab.weights;
    return parallel_reduce<cplx>(w.size(), [&](size_t lo, size_t hi) {
        cplx acc = 0.0;
        for (size_t i = lo; i < hi; ++i) {
            double ln = std::log(static_cast<double>(w[i].first));
            double c = over_log ? w[i].second / ln : w[i].second;
            acc += c * std::exp(-s * ln);
        }
        return acc;
    });
}

}  // namespace

cplx selberg_poly(double x, cplx s) { return table_sum(selberg_table(x), s, false); }
cplx selberg_poly_log(double x, cplx s) {
    return table_sum(selberg_table(x), s, true);
}

DirichletPoly to_dirichlet(const SelbergWeightTable& tab) {
    DirichletPoly p;
    if (tab.weights.empty()) return p;
    p.coeffs.resize(tab.weights.back().first);
    for (const auto& [n, w] : tab.weights) p.coeffs[n - 1] = w;
    return p;
}

double sigma_x_t(double x, double t, const std::vector<ZetaZero>& zeros,
                 double cover_lo, double cover_hi) {
    if (x < 2.0) throw std::domain_error("sigma_x_t: x >= 2 required");
    double L = std::log(x);
    double margin = std::pow(x, 1.5) / L;
    if (t - margin < cover_lo || t + margin > cover_hi)
        throw std::runtime_error("sigma_x_t: zero list does not cover the window");
    double m = 2.0 / L;
    for (const auto& z : zeros) {
        double dev = std::abs(z.beta - 0.5);
        if (std::abs(z.gamma - t) <= std::pow(x, 3.0 * dev) / L)
            m = std::max(m, z.beta - 0.5);
    }
    return 0.5 + 2.0 * m;
}

double sigma_x_t(double x, double t, const ZeroList& zl) {
    std::vector<ZetaZero> zeros;
    zeros.reserve(zl.ordinates.size());
    for (double g : zl.ordinates) zeros.push_back({0.5, g});
    return sigma_x_t(x, t, zeros, zl.t_lo, zl.t_hi);
}

std::vector<PartitionTerm> partitions_of(int k) {
    if (k < 1 || k > 40) throw std::domain_error("partitions_of: 1 <= k <= 40");
    using boost::multiprecision::cpp_int;
    std::vector<cpp_int> fact(k + 1);
    fact[0] = 1;
    for (int i = 1; i <= k; ++i) fact[i] = fact[i - 1] * i;

    std::vector<PartitionTerm> out;
    std::vector<int> R(k, 0);
    // choose R_j for j = k down to 1 with the remaining weight
    auto rec = [&](auto&& self, int j, int rem) -> void {
        if (j == 0) {
            if (rem != 0) return;
            PartitionTerm pt;
            pt.k = k;
            pt.mult = R;
            cpp_int den = 1;
            for (int i = 1; i <= k; ++i) {
                den *= fact[R[i - 1]];
                for (int r = 0; r < R[i - 1]; ++r) den *= fact[i];
            }
            pt.coeff = fact[k] / den;
            out.push_back(std::move(pt));
            return;
        }
        for (int r = 0; j * r <= rem; ++r) {
            R[j - 1] = r;
            self(self, j - 1, rem - j * r);
        }
        R[j - 1] = 0;
    };
    rec(rec, k, k);
    return out;
}

cplx faa_di_bruno_ratio(int k, cplx s) {
    if (k < 1 || k > 20) throw std::domain_error("faa_di_bruno_ratio: 1 <= k <= 20");
    cplx z0 = zeta(s);
    if (std::abs(z0) <= 1e-8)
        throw std::domain_error("faa_di_bruno_ratio: too close to a zero of zeta");
    cplx f0 = zeta_deriv(1, s) / z0;
    if (k == 1) return f0;

    // derivatives of f = zeta'/zeta up to order k-1 on one Cauchy circle
    int M = std::max(64, 8 * k);
    double r = std::min(0.25, 0.45 * std::abs(s - 1.0));
    std::vector<cplx> fv(M);
    for (int i = 0; i < M; ++i) {
        double th = 2.0 * std::numbers::pi * i / M;
        cplx w = s + r * cplx(std::cos(th), std::sin(th));
        auto d = zeta_derivs_upto(1, w);
        fv[i] = d[1] / d[0];
    }
    std::vector<cplx> fd(k);  // fd[m] = f^{(m)}(s)
    fd[0] = f0;
    double mfac = 1.0, rp = 1.0;
    for (int m = 1; m < k; ++m) {
        mfac *= m;
        rp *= r;
        cplx acc = 0.0;
        for (int i = 0; i < M; ++i) {
            double th = 2.0 * std::numbers::pi * i * m / M;
            acc += fv[i] * cplx(std::cos(th), -std::sin(th));
        }
        fd[m] = acc * mfac / (static_cast<double>(M) * rp);
    }

    cplx total = 0.0;
    for (const auto& pt : partitions_of(k)) {
        cplx prod = pt.coeff_d();
        for (int j = 1; j <= k; ++j)
            for (int rseq = 0; rseq < pt.mult[j - 1]; ++rseq) prod *= fd[j - 1];
        total += prod;
    }
    return total;
}

double SelbergParams::log_T() const { return std::log(T); }
double SelbergParams::sigma_shifted() const {
    return 0.5 + (alpha - R) / log_T();
}

void SelbergParams::validate() const {
    if (!(x1 < x && x < x0))
        throw std::domain_error("SelbergParams: need x1 < x < x0");
    if (x0 * x0 * x0 > static_cast<double>(kSieveMax) || x1 < 2.0)
        throw std::domain_error("SelbergParams: cube out of sieve range");
    if (alpha - R - C * std::log(alpha) <= 0.0)
        throw std::domain_error("SelbergParams: alpha - R - C log alpha <= 0");
    if (K < 1 || K > 16) throw std::domain_error("SelbergParams: 1 <= K <= 16");
}

namespace {

// shared A_j pieces at one t; the j-dependence is only the prefactor
// j! (log T)^j / (alpha - R - C log alpha)^j and the log-integral derivative
struct AjBlocks {
    cplx line1, line23;  // line1: /log n difference block; line23: plain blocks
    cplx s1;
    double h;  // (alpha^{1+C} - alpha + R)/log T
};

AjBlocks a_blocks(const SelbergParams& p, double t) {
    p.validate();
    double lT = p.log_T();
    double shiftA = (std::pow(p.alpha, 1.0 + p.C / 2.0) - p.alpha + p.R) / lT;
    double shiftB = (std::pow(p.alpha, 1.0 + p.C) - p.alpha + p.R) / lT;
    cplx s1(p.sigma_shifted(), t);
    AjBlocks b;
    b.s1 = s1;
    b.h = shiftB;
    b.line1 = selberg_poly_log(p.x0, s1 + shiftA) - selberg_poly_log(p.x0, s1 + shiftB);
    cplx l2 = selberg_poly(p.x, s1 + shiftA) + selberg_poly(p.x0, s1 + shiftA) +
              selberg_poly(p.x0, s1 + shiftB);
    cplx l3 = selberg_poly(p.x1, s1 + shiftB);
    b.line23 = std::pow(p.alpha, 1.0 + p.C / 2.0) / lT * l2 +
               std::pow(p.alpha, 1.0 + p.C) / lT * l3;
    return b;
}

// (d/ds1)^j of int_{s1}^{s1+h} log s ds, via s log s - s
cplx log_integral_deriv(int j, cplx s1, double h) {
    if (j == 1) return std::log(s1 + h) - std::log(s1);
    int m = j - 1;  // d^m log s = (-1)^{m-1} (m-1)! s^{-m}
    double fm = 1.0;
    for (int i = 2; i < m; ++i) fm *= i;
    double sign = (m % 2 == 1) ? 1.0 : -1.0;
    return sign * fm * (std::pow(s1 + h, -m) - std::pow(s1, -m));
}

cplx a_j_from_blocks(int j, const SelbergParams& p, const AjBlocks& b,
                     double omega_j) {
    if (j < 1) throw std::domain_error("a_j_term: j >= 1");
    double lT = p.log_T();
    double denom = p.alpha - p.R - p.C * std::log(p.alpha);
    double pref = 1.0;
    for (int i = 1; i <= j; ++i) pref *= i * lT / denom;  // j! (log T / denom)^j
    return omega_j * (pref * (b.line1 + b.line23) + log_integral_deriv(j, b.s1, b.h));
}

cplx assemble_from_blocks(const SelbergParams& p, const AjBlocks& b,
                          const std::vector<double>& omegas) {
    if (static_cast<int>(omegas.size()) < p.K)
        throw std::domain_error("assemble_A: need K omega values");
    std::vector<cplx> A(p.K + 1);
    for (int j = 1; j <= p.K; ++j) A[j] = a_j_from_blocks(j, p, b, omegas[j - 1]);
    double lT = p.log_T();
    cplx total = 0.0;
    double lpow = 1.0;
    for (int k = 1; k <= p.K; ++k) {
        lpow /= lT;
        cplx inner = 0.0;
        for (const auto& pt : partitions_of(k)) {
            cplx prod = pt.coeff_d();
            for (int j = 1; j <= k; ++j)
                for (int r = 0; r < pt.mult[j - 1]; ++r) prod *= A[j];
            inner += prod;
        }
        total += c_k_alpha(p.alpha, p.R, k, p.K) * lpow * inner;
    }
    return total;
}

}  // namespace

cplx a_j_term(int j, const SelbergParams& p, double t, double omega_j) {
    return a_j_from_blocks(j, p, a_blocks(p, t), omega_j);
}

cplx assemble_A(const SelbergParams& p, double t,
                const std::vector<double>& omegas) {
    return assemble_from_blocks(p, a_blocks(p, t), omegas);
}

std::vector<cplx> assemble_A_grid(const SelbergParams& p,
                                  const std::vector<double>& ts,
                                  const std::vector<double>& omegas) {
    p.validate();
    selberg_table(p.x);  // warm caches before the parallel region
    selberg_table(p.x0);
    selberg_table(p.x1);
    std::vector<cplx> out(ts.size());
    parallel_for(ts.size(), [&](size_t i) {
        out[i] = assemble_from_blocks(p, a_blocks(p, ts[i]), omegas);
    });
    return out;
}

}  // namespace zml
