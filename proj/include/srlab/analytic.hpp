#pragma once

namespace srlab::analytic {

// Closed-form model of the bipolar sensor with symmetric thresholds
// +-theta, theta > 1, and zero-mean Gaussian noise of std sigma.

// W(x) = erf(x / sqrt(2)) / 2; odd, range (-1/2, 1/2).
double w_func(double x);

// Success probability Q(sigma) = 1/2 + 1/2 [W((theta+1)/sigma) -
// W((theta-1)/sigma)]; sigma = 0 returns the limit 1/2.
double analytic_q(double theta, double sigma);

// Closed-form argmax of analytic_q over sigma:
// sqrt(2*theta / ln((theta+1)/(theta-1))).
double analytic_sigma_opt(double theta);

// I(Q) = 1 + Q log2 Q + (1-Q) log2(1-Q), with 0 log 0 := 0.
double analytic_mi(double q_success);

// C_sy = 2Q - 1.
double analytic_cc(double q_success);

// C_yy(1) = C_ss(1) * (1 - 4Q(1-Q)); signed form, input sign preserved.
double analytic_ac(double q_success, double c_ss);

// Lag-1 autocorrelation of the correlated bipolar chain: 2q - 1.
double input_ac_bipolar(double persist_prob);

}  // namespace srlab::analytic
