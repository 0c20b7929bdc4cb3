#pragma once

#include <optional>
#include <vector>

#include "srlab/timeseries.hpp"

namespace srlab::objectives {

// Discretization used by the histogram MI estimator for continuous
// variables. Series with at most `bins` distinct values are binned by exact
// value instead, so bipolar and spike-train MI is exact.
struct BinningSpec {
    std::size_t bins = 32;
    bool auto_range = true;
    double lo = 0.0, hi = 0.0;  // used when auto_range is false
};

// The five objective values measured at one noise intensity. q_hat is
// present only for bipolar signal/output pairs; snr_db only for periodic
// input.
struct ObjectiveSample {
    double mi_bits = 0.0;
    double cc = 0.0;
    double ac_lag1 = 0.0;
    double ac_rms = 0.0;
    std::optional<double> q_hat;
    std::optional<double> snr_db;
};

struct AcValue {
    double value = 0.0;
    bool degenerate = false;  // constant series; value pinned to 0
};

double mutual_information(const TimeSeries& s, const TimeSeries& y,
                          const BinningSpec& binning = {});

// Pearson correlation of s and y at lag 0.
double cross_correlation(const TimeSeries& s, const TimeSeries& y);

// Normalized autocorrelation at the given positive lag, mean subtracted,
// overlapping pairs.
AcValue autocorrelation(const TimeSeries& y, std::size_t lag);

// sqrt(mean over lags of C_yy(lag)^2).
double ac_rms(const TimeSeries& y, const std::vector<std::size_t>& lags);

// Fraction of indices where y_t == s_t; both series must be {-1,+1} valued.
double success_probability(const TimeSeries& s, const TimeSeries& y);

double pearson_r(const std::vector<double>& xs, const std::vector<double>& ys);

// 10*log10(S/N): S is signal power above the noise floor around the
// stimulus frequency, N the noise-only power density there.
double snr_db_from_power(double signal_power, double noise_density);

// Welch-averaged periodogram (Hann window, 50% overlap). Returns one-sided
// power density over seg/2+1 bins; bin spacing is 1/(seg*dt).
std::vector<double> welch_psd(const TimeSeries& y, std::size_t segment);

// Full spectral SNR estimate: noise density from the noise-only run,
// signal power from the 3 bins around stimulus_freq in the joint run.
double snr_db(const TimeSeries& y, const TimeSeries& noise_only,
              double stimulus_freq);

}  // namespace srlab::objectives
