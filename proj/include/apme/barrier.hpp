#pragma once

#include <array>
#include <cstdint>
#include <vector>

#include "apme/exponents.hpp"

namespace apme {

// Constructive parameters of the explicit super-solution family
//   f(y)        = (sum_i |y_i|^{theta_i})^{-alpha_exp}
//   f_lambda(y) = lambda^{2/(n beta)} (sum_i |y_i|^{theta_i}
//                   lambda^{(1-m_i) theta_i/(n beta)})^{-alpha_exp}
//   ubar(x,t)   = min{ (1+beta t)^{-1/beta} f_lambda(x_i (1+beta t)^{-alpha_i/beta}),
//                      C0 }
// alpha_exp is the profile exponent (distinct from the drift weights alpha_i).
struct BarrierSpec {
    ExponentSet exponents;
    std::vector<double> theta;  // theta_i > 2
    double alpha_exp = 0.0;     // > 0
    std::vector<double> mu;     // mu_i = (1 - m_i)/2
    double R0 = 0.0;
    double lambda = 0.0;
    double C0 = 0.0;  // plateau height
    double A = 0.0;   // plateau box is prod_i [-A^{1/theta_i}, A^{1/theta_i}]
    double T = 0.0;   // time horizon
};

enum class BarrierDomainKind { omega_R0, omega_R0_lambda, plateau_box };

// One of the three regions used by the construction:
//   omega_R0        = { y : sum |y_i|^{theta_i} > R }
//   omega_R0_lambda = image of omega_R0 under y_i = lambda^{(m_i-1)/(n beta)} x_i,
//                     i.e. { y : sum |y_i|^{theta_i} lambda^{(1-m_i)theta_i/(n beta)} > R }
//   plateau_box     = prod_i [-A^{1/theta_i}, A^{1/theta_i}]
struct BarrierDomain {
    BarrierDomainKind kind = BarrierDomainKind::omega_R0;
    double radius = 0.0;  // R for the omega kinds, A for the plateau box
    double lambda = 1.0;  // only used by omega_R0_lambda
};

// Picks theta_i > 2 and alpha_exp > 0 strictly inside the admissible band
//   (1 - m_i)/2 < 1/(alpha_exp theta_i) < alpha_i
// via the deterministic midpoint rule g_i = (max(mu_i,0) + alpha_i)/2,
// alpha_exp = 1/(3 max_i g_i), theta_i = 1/(alpha_exp g_i). The band is
// re-verified numerically; throws std::domain_error for inadmissible input.
struct ProfileParams {
    std::vector<double> theta;
    double alpha_exp = 0.0;
};
ProfileParams choose_profile_params(const ExponentSet& e);

// The displayed R0 formula,
//   R0 = max{1, [ n max_i{m_i a (m_i a + 1) theta_i^2}
//                 / (min_i{alpha_i a theta_i} - 1) ]^{1/(2a max_i{(theta_i a)^{-1} - mu_i})} }
// with a = alpha_exp. Requires min_i(alpha_i a theta_i) > 1 (throws otherwise).
double compute_R0(const BarrierSpec& spec);

// The lambda lower bound, taken with equality:
//   max{ [C0 (1+beta T)^{1/beta} R0^a]^{n beta/2},
//        (C0 A^a)^{n beta/2} * max_i (a^{-1} - mu_i theta_i)^{-1} }.
// Throws if some a^{-1} - mu_i theta_i <= 0 (violated profile band).
double compute_lambda(const BarrierSpec& spec, double C0, double A, double T);

// Sufficient lambda for the plateau identity (branch >= C0 on the plateau
// box uniformly in t >= 0): max_i (n^a C0 A^a)^{n beta/(2 (1 - a mu_i theta_i))}.
double plateau_lambda_bound(const BarrierSpec& spec, double C0, double A);

// Full constructor: profile params, R0, lambda = max(compute_lambda,
// plateau_lambda_bound); verifies the plateau corner condition numerically.
BarrierSpec make_barrier(const ExponentSet& e, double C0, double A, double T);

// Convenience defaults for data with sup bound and support half-widths:
// C0 = 2 sup, plateau box twice the support box, horizon T.
BarrierSpec barrier_for_data(const ExponentSet& e, double sup_u0,
                             const std::vector<double>& support_half_widths,
                             double T);

// The scaled argument sum S_lambda(y) = sum_i |y_i|^{theta_i}
// lambda^{(1-m_i) theta_i / (n beta)}; membership in omega_R0_lambda is
// S_lambda(y) > R0.
double scaled_sum(const BarrierSpec& spec, double lambda,
                  const std::vector<double>& y);

bool contains(const BarrierSpec& spec, const BarrierDomain& dom,
              const std::vector<double>& y);

// f(y); throws std::domain_error at the origin.
double eval_profile(const BarrierSpec& spec, const std::vector<double>& y);

// f^{(lambda)}(y) per Eq. (3.3); throws at the origin.
double eval_scaled_profile(const BarrierSpec& spec, double lambda,
                           const std::vector<double>& y);

// The space-time barrier ubar(x,t) for t in [0, T]; min of the self-similar
// branch and the plateau constant C0. Throws if t is outside [0, T].
double eval_supersolution(const BarrierSpec& spec, const std::vector<double>& x,
                          double t);

// Exact closed-form value of sum_i [(g^{m_i})_{y_i y_i} + alpha_i (y_i g)_{y_i}]
// for g = f^{(lambda)}; lambda = 1 gives f. Requires y_i != 0 for all i.
double stationary_residual(const BarrierSpec& spec, double lambda,
                           const std::vector<double>& y);

// Rescaled long-time envelope F of Lemma 3.3: F = f^{(lambda1)} on
// omega_{R1}^{(lambda1)}, C1 elsewhere, with lambda1 = (C1 R1^a)^{n beta/2}
// so the two branches match on the boundary.
struct Envelope {
    BarrierSpec spec;
    double C1 = 0.0;
    double R1 = 0.0;
    double lambda1 = 0.0;
};
Envelope make_envelope(const BarrierSpec& spec, double C1, double R1);
double eval_envelope(const Envelope& env, const std::vector<double>& y);

// Deterministic quasi-random sample of omega_{R0}^{(lambda)} (coordinate
// hyperplanes excluded), spanning S_lambda in (R0, ~10^4 R0]. Used by the
// residual certificates.
std::vector<std::vector<double>> sample_omega(const BarrierSpec& spec,
                                              double lambda, int count,
                                              std::uint64_t seed);

// Residual certificate over a quasi-random sample: min/max residual.
struct ResidualCertificate {
    double min_residual = 0.0;
    double max_residual = 0.0;
    int samples = 0;
    std::uint64_t seed = 0;
};
ResidualCertificate residual_certificate(const BarrierSpec& spec, double lambda,
                                         int count, std::uint64_t seed);

}  // namespace apme
