#pragma once

#include <string>
#include <vector>

namespace apme {

// Diffusion exponents m_i of u_t = sum_i (u^{m_i})_{x_i x_i} together with
// the derived constants used throughout:
//   m_bar  = (1/n) sum_i m_i
//   beta   = m_bar - (n-2)/n
//   alpha  : alpha_i = (m_bar - m_i)/2 + 1/n,  sum_i alpha_i = 1
struct ExponentSet {
    int n = 0;
    std::vector<double> m;
    double m_bar = 0.0;
    double beta = 0.0;
    std::vector<double> alpha;
};

// One admissibility condition with its verdict.
struct Condition {
    std::string name;
    bool pass = false;
};

struct AdmissibilityVerdict {
    bool admissible = false;
    std::vector<Condition> conditions;  // the four conditions, in order
    // Cross-check of the equivalent form (beta > 0 and all alpha_i > 0).
    bool equivalent_form_agrees = true;
    std::vector<std::string> violations() const;
};

// Computes m_bar, beta, alpha_i from the exponent vector. No admissibility
// enforcement. Throws std::invalid_argument on dimension mismatch,
// nonpositive exponents, or n outside {1,2,3}.
ExponentSet derive_constants(const std::vector<double>& m, int n);

// Evaluates the four conditions
//   m_i > 0,  sum m_i > n-2,  min m_i <= 1,  max m_i < (2 + sum m_i)/n
// and cross-checks them against the equivalent beta/alpha form. The boundary
// max m_i = (2 + sum m_i)/n is inadmissible (strict inequality).
AdmissibilityVerdict check_admissible(const ExponentSet& e);

}  // namespace apme
