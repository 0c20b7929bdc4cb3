#include "srlab/analytic.hpp"

#include <cmath>
#include <stdexcept>

namespace srlab::analytic {
namespace {

void require_theta(double theta) {
    if (theta <= 1.0)
        throw std::domain_error(
            "analytic model requires theta > 1 (sub-threshold signal)");
}

}  // namespace

double w_func(double x) { return 0.5 * std::erf(x / std::sqrt(2.0)); }

double analytic_q(double theta, double sigma) {
    require_theta(theta);
    if (sigma < 0.0) throw std::invalid_argument("analytic_q: sigma < 0");
    if (sigma == 0.0) return 0.5;  // limit: the bracket cancels
    // Q = 1/2 + 1/2 [W((theta+1)/sigma) - W((theta-1)/sigma)]; verified
    // against direct Monte-Carlo simulation of the detector.
    return 0.5 + 0.5 * (w_func((theta + 1.0) / sigma) -
                        w_func((theta - 1.0) / sigma));
}

double analytic_sigma_opt(double theta) {
    require_theta(theta);
    return std::sqrt(2.0 * theta / std::log((theta + 1.0) / (theta - 1.0)));
}

double analytic_mi(double q_success) {
    if (q_success < 0.0 || q_success > 1.0)
        throw std::invalid_argument("analytic_mi: Q outside [0,1]");
    auto plogp = [](double p) { return p > 0.0 ? p * std::log2(p) : 0.0; };
    return 1.0 + plogp(q_success) + plogp(1.0 - q_success);
}

double analytic_cc(double q_success) {
    if (q_success < 0.0 || q_success > 1.0)
        throw std::invalid_argument("analytic_cc: Q outside [0,1]");
    return 2.0 * q_success - 1.0;
}

double analytic_ac(double q_success, double c_ss) {
    if (q_success < 0.0 || q_success > 1.0)
        throw std::invalid_argument("analytic_ac: Q outside [0,1]");
    if (c_ss < -1.0 || c_ss > 1.0)
        throw std::invalid_argument("analytic_ac: |c_ss| > 1");
    return c_ss * (1.0 - 4.0 * q_success * (1.0 - q_success));
}

double input_ac_bipolar(double persist_prob) {
    if (persist_prob < 0.0 || persist_prob > 1.0)
        throw std::invalid_argument("input_ac_bipolar: q outside [0,1]");
    return 2.0 * persist_prob - 1.0;
}

}  // namespace srlab::analytic
