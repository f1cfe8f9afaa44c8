#include "apme/barrier.hpp"

#include <algorithm>
#include <cmath>
#include <limits>
#include <stdexcept>

namespace apme {

namespace {

// |y|^p via exp(p ln|y|), 0 at y = 0.
double abs_pow(double y, double p) {
    const double a = std::abs(y);
    if (a == 0.0) return 0.0;
    return std::exp(p * std::log(a));
}

void require_dim(const BarrierSpec& spec, const std::vector<double>& y) {
    if (static_cast<int>(y.size()) != spec.exponents.n) {
        throw std::invalid_argument("barrier: point dimension mismatch");
    }
}

}  // namespace

ProfileParams choose_profile_params(const ExponentSet& e) {
    const auto verdict = check_admissible(e);
    if (!verdict.admissible) {
        std::string msg = "choose_profile_params: inadmissible exponents:";
        for (const auto& name : verdict.violations()) msg += " [" + name + "]";
        throw std::domain_error(msg);
    }
    const int n = e.n;
    std::vector<double> g(n);
    double gmax = 0.0;
    for (int i = 0; i < n; ++i) {
        const double mu = (1.0 - e.m[i]) / 2.0;
        g[i] = (std::max(mu, 0.0) + e.alpha[i]) / 2.0;
        gmax = std::max(gmax, g[i]);
    }
    ProfileParams p;
    p.alpha_exp = 1.0 / (3.0 * gmax);
    p.theta.resize(n);
    for (int i = 0; i < n; ++i) {
        p.theta[i] = 1.0 / (p.alpha_exp * g[i]);
        // Re-verify the strict band (1-m_i)/2 < 1/(a theta_i) < alpha_i
        // and theta_i > 2 before returning.
        const double mid = 1.0 / (p.alpha_exp * p.theta[i]);
        const double mu = (1.0 - e.m[i]) / 2.0;
        if (!(p.theta[i] > 2.0) || !(mid > mu) || !(mid < e.alpha[i])) {
            throw std::domain_error("choose_profile_params: band (3.1) not met");
        }
    }
    return p;
}

double compute_R0(const BarrierSpec& spec) {
    const int n = spec.exponents.n;
    const double a = spec.alpha_exp;
    double num = 0.0;
    double den = std::numeric_limits<double>::infinity();
    double expa = 0.0;
    for (int i = 0; i < n; ++i) {
        const double mi = spec.exponents.m[i];
        const double th = spec.theta[i];
        num = std::max(num, mi * a * (mi * a + 1.0) * th * th);
        den = std::min(den, spec.exponents.alpha[i] * a * th);
        expa = std::max(expa, 1.0 / (th * a) - spec.mu[i]);
    }
    den -= 1.0;
    if (!(den > 0.0)) {
        throw std::domain_error("compute_R0: min_i(alpha_i a theta_i) <= 1, band (3.1) violated");
    }
    const double base = n * num / den;
    const double expo = 1.0 / (2.0 * a * expa);
    return std::max(1.0, std::pow(base, expo));
}

double compute_lambda(const BarrierSpec& spec, double C0, double A, double T) {
    if (!(C0 > 0.0) || !(A > 0.0) || !(T >= 0.0)) {
        throw std::invalid_argument("compute_lambda: C0, A must be positive, T >= 0");
    }
    const int n = spec.exponents.n;
    const double a = spec.alpha_exp;
    const double beta = spec.exponents.beta;
    const double half_nb = n * beta / 2.0;
    const double term1 =
        std::pow(C0 * std::pow(1.0 + beta * T, 1.0 / beta) * std::pow(spec.R0, a), half_nb);
    double max_factor = 0.0;
    for (int i = 0; i < n; ++i) {
        const double d = 1.0 / a - spec.mu[i] * spec.theta[i];
        if (!(d > 0.0)) {
            throw std::domain_error("compute_lambda: a^{-1} - mu_i theta_i <= 0, band (3.1) violated");
        }
        max_factor = std::max(max_factor, 1.0 / d);
    }
    const double term2 = std::pow(C0 * std::pow(A, a), half_nb) * max_factor;
    return std::max(term1, term2);
}

double plateau_lambda_bound(const BarrierSpec& spec, double C0, double A) {
    const int n = spec.exponents.n;
    const double a = spec.alpha_exp;
    const double beta = spec.exponents.beta;
    const double base = std::pow(static_cast<double>(n), a) * C0 * std::pow(A, a);
    double best = 0.0;
    for (int i = 0; i < n; ++i) {
        const double denom = 1.0 - a * spec.mu[i] * spec.theta[i];
        best = std::max(best, std::pow(base, n * beta / (2.0 * denom)));
    }
    return best;
}

BarrierSpec make_barrier(const ExponentSet& e, double C0, double A, double T) {
    BarrierSpec spec;
    spec.exponents = e;
    const ProfileParams p = choose_profile_params(e);
    spec.theta = p.theta;
    spec.alpha_exp = p.alpha_exp;
    spec.mu.resize(e.n);
    for (int i = 0; i < e.n; ++i) spec.mu[i] = (1.0 - e.m[i]) / 2.0;
    spec.R0 = compute_R0(spec);
    spec.C0 = C0;
    spec.A = A;
    spec.T = T;
    spec.lambda = std::max(compute_lambda(spec, C0, A, T),
                           plateau_lambda_bound(spec, C0, A));

    // The self-similar branch must dominate C0 on the plateau box; by
    // monotonicity along each axis it suffices to check the box corner
    // over a time grid.
    std::vector<double> corner(e.n);
    for (int i = 0; i < e.n; ++i) {
        corner[i] = std::exp(std::log(A) / spec.theta[i]);
    }
    const int steps = 200;
    for (int k = 0; k <= steps; ++k) {
        const double t = T * k / steps;
        const double h = std::pow(1.0 + e.beta * t, 1.0 / e.beta);
        std::vector<double> xi(e.n);
        for (int i = 0; i < e.n; ++i) xi[i] = corner[i] * std::pow(h, -e.alpha[i]);
        const double branch = eval_scaled_profile(spec, spec.lambda, xi) / h;
        if (!(branch >= C0 * (1.0 - 1e-9))) {
            throw std::domain_error("make_barrier: plateau condition failed at t=" +
                                    std::to_string(t));
        }
    }
    return spec;
}

BarrierSpec barrier_for_data(const ExponentSet& e, double sup_u0,
                             const std::vector<double>& support_half_widths,
                             double T) {
    if (!(sup_u0 > 0.0)) {
        throw std::invalid_argument("barrier_for_data: sup_u0 must be positive");
    }
    if (static_cast<int>(support_half_widths.size()) != e.n) {
        throw std::invalid_argument("barrier_for_data: support dimension mismatch");
    }
    const ProfileParams p = choose_profile_params(e);
    const double C0 = 2.0 * sup_u0;
    // Plateau box twice the support box: A^{1/theta_i} >= 2 w_i for all i.
    double A = 0.0;
    for (int i = 0; i < e.n; ++i) {
        A = std::max(A, std::pow(2.0 * support_half_widths[i], p.theta[i]));
    }
    return make_barrier(e, C0, A, T);
}

double scaled_sum(const BarrierSpec& spec, double lambda,
                  const std::vector<double>& y) {
    require_dim(spec, y);
    const int n = spec.exponents.n;
    const double log_lam = std::log(lambda);
    const double nb = n * spec.exponents.beta;
    double s = 0.0;
    for (int i = 0; i < n; ++i) {
        const double ay = std::abs(y[i]);
        if (ay == 0.0) continue;
        // |y_i|^{theta_i} lambda^{2 mu_i theta_i / (n beta)} in log space
        s += std::exp(spec.theta[i] * std::log(ay) +
                      2.0 * spec.mu[i] * spec.theta[i] * log_lam / nb);
    }
    return s;
}

bool contains(const BarrierSpec& spec, const BarrierDomain& dom,
              const std::vector<double>& y) {
    switch (dom.kind) {
        case BarrierDomainKind::omega_R0: {
            double s = 0.0;
            for (int i = 0; i < spec.exponents.n; ++i) s += abs_pow(y[i], spec.theta[i]);
            return s > dom.radius;
        }
        case BarrierDomainKind::omega_R0_lambda:
            return scaled_sum(spec, dom.lambda, y) > dom.radius;
        case BarrierDomainKind::plateau_box: {
            for (int i = 0; i < spec.exponents.n; ++i) {
                const double a = std::exp(std::log(dom.radius) / spec.theta[i]);
                if (std::abs(y[i]) > a) return false;
            }
            return true;
        }
    }
    return false;
}

double eval_profile(const BarrierSpec& spec, const std::vector<double>& y) {
    return eval_scaled_profile(spec, 1.0, y);
}

double eval_scaled_profile(const BarrierSpec& spec, double lambda,
                           const std::vector<double>& y) {
    require_dim(spec, y);
    if (!(lambda > 0.0)) throw std::invalid_argument("eval_scaled_profile: lambda must be positive");
    const double s = scaled_sum(spec, lambda, y);
    if (s == 0.0) throw std::domain_error("eval_scaled_profile: singular at the origin");
    const double nb = spec.exponents.n * spec.exponents.beta;
    return std::exp(2.0 * std::log(lambda) / nb - spec.alpha_exp * std::log(s));
}

double eval_supersolution(const BarrierSpec& spec, const std::vector<double>& x,
                          double t) {
    require_dim(spec, x);
    if (!(t >= 0.0) || !(t <= spec.T)) {
        throw std::invalid_argument("eval_supersolution: t outside [0, T]");
    }
    const auto& e = spec.exponents;
    const double h = std::pow(1.0 + e.beta * t, 1.0 / e.beta);
    std::vector<double> xi(e.n);
    for (int i = 0; i < e.n; ++i) xi[i] = x[i] * std::pow(h, -e.alpha[i]);
    const double s = scaled_sum(spec, spec.lambda, xi);
    if (s == 0.0) return spec.C0;  // branch is +inf at the origin
    const double nb = e.n * e.beta;
    const double branch =
        std::exp(2.0 * std::log(spec.lambda) / nb - spec.alpha_exp * std::log(s)) / h;
    return std::min(branch, spec.C0);
}

double stationary_residual(const BarrierSpec& spec, double lambda,
                           const std::vector<double>& y) {
    require_dim(spec, y);
    const auto& e = spec.exponents;
    const int n = e.n;
    for (int i = 0; i < n; ++i) {
        if (y[i] == 0.0) {
            throw std::domain_error("stationary_residual: point on a coordinate hyperplane");
        }
    }
    const double a = spec.alpha_exp;
    const double nb = n * e.beta;
    const double log_lam = std::log(lambda);
    const double log_kappa = 2.0 * log_lam / nb;  // kappa = lambda^{2/(n beta)}

    // S = sum c_i |y_i|^{theta_i}, c_i = kappa^{mu_i theta_i}
    std::vector<double> log_cy(n);  // log of c_i |y_i|^{theta_i}
    double S = 0.0;
    for (int i = 0; i < n; ++i) {
        log_cy[i] = spec.mu[i] * spec.theta[i] * log_kappa +
                    spec.theta[i] * std::log(std::abs(y[i]));
        S += std::exp(log_cy[i]);
    }
    const double logS = std::log(S);

    double res = 0.0;
    for (int i = 0; i < n; ++i) {
        const double th = spec.theta[i];
        const double mi = e.m[i];
        const double p = a * mi;
        // S_i = c_i th |y_i|^{th-1} sgn(y_i);  S_ii = c_i th (th-1) |y_i|^{th-2}
        const double log_Si_abs = log_cy[i] + std::log(th) - std::log(std::abs(y[i]));
        const double log_Sii = log_Si_abs + std::log(th - 1.0) - std::log(std::abs(y[i]));
        // (g^{m_i})_{y_i y_i} = kappa^{m_i} [p(p+1) S^{-p-2} S_i^2 - p S^{-p-1} S_ii]
        const double t1 = p * (p + 1.0) *
                          std::exp(mi * log_kappa - (p + 2.0) * logS + 2.0 * log_Si_abs);
        const double t2 = p * std::exp(mi * log_kappa - (p + 1.0) * logS + log_Sii);
        // alpha_i (y_i g)_{y_i} = alpha_i kappa [S^{-a} - a S^{-a-1} |y_i| |S_i|]
        // (y_i S_i = |y_i| |S_i| since S_i carries sgn(y_i))
        const double t3 = e.alpha[i] * std::exp(log_kappa - a * logS);
        const double t4 = e.alpha[i] * a *
                          std::exp(log_kappa - (a + 1.0) * logS + log_Si_abs +
                                   std::log(std::abs(y[i])));
        res += t1 - t2 + t3 - t4;
    }
    return res;
}

Envelope make_envelope(const BarrierSpec& spec, double C1, double R1) {
    if (!(C1 > 0.0)) throw std::invalid_argument("make_envelope: C1 must be positive");
    if (!(R1 >= spec.R0)) throw std::invalid_argument("make_envelope: R1 must be >= R0");
    Envelope env;
    env.spec = spec;
    env.C1 = C1;
    env.R1 = R1;
    // Matching f^{(lambda1)} = C1 on the boundary S_{lambda1} = R1:
    const double nb = spec.exponents.n * spec.exponents.beta;
    env.lambda1 = std::exp(nb / 2.0 * (std::log(C1) + spec.alpha_exp * std::log(R1)));
    if (!(env.lambda1 > 0.0) || !std::isfinite(env.lambda1)) {
        throw std::domain_error("make_envelope: inconsistent (C1, R1)");
    }
    return env;
}

double eval_envelope(const Envelope& env, const std::vector<double>& y) {
    const double s = scaled_sum(env.spec, env.lambda1, y);
    if (s <= env.R1) return env.C1;
    return eval_scaled_profile(env.spec, env.lambda1, y);
}

std::vector<std::vector<double>> sample_omega(const BarrierSpec& spec,
                                              double lambda, int count,
                                              std::uint64_t seed) {
    const auto& e = spec.exponents;
    const int n = e.n;
    // Halton points drive (a) the log-radial shell position R0 * 10^[0,4],
    // (b) the split of S across axes, (c) octant signs. The seed offsets the
    // sequence start; the sample set is deterministic.
    static const int primes[4] = {2, 3, 5, 7};
    auto halton = [](std::uint64_t idx, int base) {
        double f = 1.0, r = 0.0;
        while (idx > 0) {
            f /= base;
            r += f * static_cast<double>(idx % base);
            idx /= base;
        }
        return r;
    };
    auto splitmix = [](std::uint64_t x) {
        x += 0x9e3779b97f4a7c15ULL;
        x = (x ^ (x >> 30)) * 0xbf58476d1ce4e5b9ULL;
        x = (x ^ (x >> 27)) * 0x94d049bb133111ebULL;
        return x ^ (x >> 31);
    };
    const double nb = n * e.beta;
    const double log_lam = std::log(lambda);
    std::vector<std::vector<double>> pts;
    pts.reserve(count);
    std::uint64_t idx = seed % 100003 + 1;
    while (static_cast<int>(pts.size()) < count) {
        ++idx;
        const double shell = spec.R0 * std::pow(10.0, 4.0 * halton(idx, primes[0]));
        // Positive split weights, bounded away from 0 to keep all y_i off the
        // coordinate hyperplanes.
        std::vector<double> w(n);
        double wsum = 0.0;
        for (int i = 0; i < n; ++i) {
            w[i] = 0.05 + halton(idx, primes[1 + i]);
            wsum += w[i];
        }
        std::vector<double> y(n);
        for (int i = 0; i < n; ++i) {
            // c_i |y_i|^{theta_i} = shell * w_i / wsum
            const double log_c =
                2.0 * spec.mu[i] * spec.theta[i] * log_lam / nb;
            const double log_target = std::log(shell * w[i] / wsum);
            y[i] = std::exp((log_target - log_c) / spec.theta[i]);
            if (splitmix(idx * 4 + static_cast<std::uint64_t>(i)) & 1ULL) y[i] = -y[i];
        }
        if (scaled_sum(spec, lambda, y) <= spec.R0) continue;
        pts.push_back(std::move(y));
    }
    return pts;
}

ResidualCertificate residual_certificate(const BarrierSpec& spec, double lambda,
                                         int count, std::uint64_t seed) {
    ResidualCertificate cert;
    cert.samples = count;
    cert.seed = seed;
    cert.min_residual = std::numeric_limits<double>::infinity();
    cert.max_residual = -std::numeric_limits<double>::infinity();
    for (const auto& y : sample_omega(spec, lambda, count, seed)) {
        const double r = stationary_residual(spec, lambda, y);
        cert.min_residual = std::min(cert.min_residual, r);
        cert.max_residual = std::max(cert.max_residual, r);
    }
    return cert;
}

}  // namespace apme
