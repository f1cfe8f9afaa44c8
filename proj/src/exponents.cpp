#include "apme/exponents.hpp"

#include <algorithm>
#include <cmath>
#include <numeric>
#include <stdexcept>

namespace apme {

std::vector<std::string> AdmissibilityVerdict::violations() const {
    std::vector<std::string> out;
    for (const auto& c : conditions) {
        if (!c.pass) out.push_back(c.name);
    }
    return out;
}

ExponentSet derive_constants(const std::vector<double>& m, int n) {
    if (n < 1 || n > 3) {
        throw std::invalid_argument("derive_constants: n must be 1, 2 or 3");
    }
    if (static_cast<int>(m.size()) != n) {
        throw std::invalid_argument("derive_constants: m has length " +
                                    std::to_string(m.size()) + ", expected " +
                                    std::to_string(n));
    }
    for (double mi : m) {
        if (!(mi > 0.0) || !std::isfinite(mi)) {
            throw std::invalid_argument("derive_constants: every m_i must be positive");
        }
    }
    ExponentSet e;
    e.n = n;
    e.m = m;
    e.m_bar = std::accumulate(m.begin(), m.end(), 0.0) / n;
    e.beta = e.m_bar - static_cast<double>(n - 2) / n;
    e.alpha.resize(n);
    for (int i = 0; i < n; ++i) {
        e.alpha[i] = (e.m_bar - m[i]) / 2.0 + 1.0 / n;
    }
    return e;
}

AdmissibilityVerdict check_admissible(const ExponentSet& e) {
    AdmissibilityVerdict v;
    const double sum_m = e.m_bar * e.n;
    const double min_m = *std::min_element(e.m.begin(), e.m.end());
    const double max_m = *std::max_element(e.m.begin(), e.m.end());

    const bool positive = std::all_of(e.m.begin(), e.m.end(),
                                      [](double mi) { return mi > 0.0; });
    const bool supercrit = sum_m > e.n - 2.0;
    const bool has_fast = min_m <= 1.0;
    const bool below_cap = max_m < (2.0 + sum_m) / e.n;

    v.conditions = {
        {"m_i > 0 for all i", positive},
        {"sum m_i > n - 2", supercrit},
        {"min m_i <= 1", has_fast},
        {"max m_i < (2 + sum m_i)/n", below_cap},
    };
    v.admissible = positive && supercrit && has_fast && below_cap;

    // Equivalent form: beta > 0 and all alpha_i > 0 (plus positivity and
    // min m_i <= 1, which are shared verbatim).  The two forms may only
    // disagree by strictness exactly on the boundary max m_i = (2+sum)/n,
    // where both are rejected here.
    const bool alpha_pos = std::all_of(e.alpha.begin(), e.alpha.end(),
                                       [](double a) { return a > 0.0; });
    const bool equivalent = positive && e.beta > 0.0 && has_fast && alpha_pos;
    const bool on_boundary = max_m == (2.0 + sum_m) / e.n;
    v.equivalent_form_agrees = (equivalent == v.admissible) || on_boundary;
    return v;
}

}  // namespace apme
